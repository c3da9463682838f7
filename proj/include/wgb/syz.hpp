#ifndef WGB_SYZ_HPP
#define WGB_SYZ_HPP

// Homogeneous syzygy generators between leading monomials and their lifting
// certificates. A generator has two legs of the form c·λ·(target)·ρ whose
// composed leading terms agree; the target is either a basis element or one
// of the presentation relations acting at a module position.

#include "poly.hpp"

#include <string>
#include <vector>

namespace wgb::syz {

struct Leg {
    coeff::Scalar c;
    freering::Word left;
    bool hGen = false;  // false: basis index, true: presentation relation index
    int index = 0;
    freering::Word right;
    int pos = 1;  // module position an hGen relation acts at
};

struct SyzGen {
    Leg a, b;
    freering::Term w;  // the matched term both legs compose to
    std::string tag;   // A.1..A.4, B.1, B.3 (restricted) or overlap/incl (free)
};

struct Quotient {
    coeff::Scalar c;
    freering::Word left;
    int gen;
    freering::Word right;
};

// S(sigma) = sum of quotient multiples + residual; a completed record has
// residual 0 (possibly through the element the residual was adjoined as).
struct LiftRecord {
    SyzGen sigma;
    std::vector<Quotient> quotients;
    freering::NcPoly residual;
    int adjoinedIndex = -1;
};

// Deterministic total order used for pair queues: by matched term, then tag,
// then target indices, then leg words.
inline bool syzBefore(const SyzGen& x, const SyzGen& y, const freering::Ring& R) {
    using freering::Cmp;
    Cmp c = R.cmpT(x.w, y.w);
    if (c != Cmp::EQ) return c == Cmp::LT;
    if (x.tag != y.tag) return x.tag < y.tag;
    auto key = [](const Leg& l) { return std::tuple(l.hGen, l.index, l.pos, l.left, l.right); };
    if (key(x.a) != key(y.a)) return key(x.a) < key(y.a);
    return key(x.b) < key(y.b);
}

}  // namespace wgb::syz

#endif  // WGB_SYZ_HPP
