#ifndef WGB_REDUCE_HPP
#define WGB_REDUCE_HPP

// Top reduction in the free ring: every processed term gets its coefficient
// replaced by the canonical remainder modulo the ideal of applicable leading
// coefficients (a gcd over the divisors, subtracted through a recorded Bezout
// combination). Modulo a Gröbner-basis slice this computes the canonical
// Zacharias representative.

#include "poly.hpp"

#include <optional>

namespace wgb::freering {

struct SaturationInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How divisors apply to positioned terms: ideal generators act at every
// module position, module generators only at their own leading position.
enum class DivisorKind { Ideal, Module };

struct Quotient {
    coeff::Scalar c;  // the reduction subtracted c · left · G[gen] · right
    Word left;
    int gen;
    Word right;
};

struct ReduceResult {
    NcPoly nf;
    std::vector<Quotient> quotients;
    long steps = 0;
};

namespace detail {
struct Divisor {
    int gen;
    Word left, right;
    coeff::Scalar lc;
};

inline std::vector<Divisor> divisorsAt(const Term& t, const std::vector<NcPoly>& G,
                                       DivisorKind kind, const Alphabet& al) {
    std::vector<Divisor> out;
    for (size_t gi = 0; gi < G.size(); ++gi) {
        if (G[gi].isZero()) continue;
        const Monomial& lead = G[gi].leading();
        if (kind == DivisorKind::Module && lead.t.pos != t.pos) continue;
        auto occ = occurrences(lead.t.w, t.w);
        if (occ.empty()) continue;
        size_t p = occ.front();
        Word left(t.w.begin(), t.w.begin() + p);
        Word right(t.w.begin() + p + lead.t.w.size(), t.w.end());
        out.push_back({static_cast<int>(gi), std::move(left), std::move(right), lead.c});
    }
    return out;
}
}  // namespace detail

// Reduces f modulo G. With satBound set, any processed term escaping the
// bound aborts with SaturationInsufficient instead of returning a value the
// basis slice cannot certify.
inline ReduceResult canonicalReduce(const NcPoly& f, const std::vector<NcPoly>& G, const Ring& R,
                                    DivisorKind kind = DivisorKind::Ideal,
                                    const std::optional<Bound>& satBound = std::nullopt) {
    ReduceResult res;
    NcPoly work = f;
    std::vector<Monomial> done;
    while (!work.isZero()) {
        Monomial m = work.leading();
        if (satBound && !satBound->admits(m.t, R))
            throw SaturationInsufficient("term " + std::to_string(degree(m.t.w)) +
                                         "-deg exceeds the saturation bound");
        auto divs = detail::divisorsAt(m.t, G, kind, R.alph);
        if (divs.empty()) {
            done.push_back(m);
            work = sub(work, NcPoly::monomial(m.c, m.t), R);
            continue;
        }
        std::vector<coeff::Scalar> lcs;
        lcs.reserve(divs.size());
        for (const auto& d : divs) lcs.push_back(d.lc);
        auto basis = coeff::strongIdealBasis(lcs, R.mode);
        coeff::Scalar r = coeff::canonRem(m.c, basis.g, R.mode);
        coeff::Scalar q = (m.c - r).exactDiv(basis.g);
        if (q.isZero()) {
            // coefficient already the canonical residue; the term is final
            done.push_back(m);
            work = sub(work, NcPoly::monomial(m.c, m.t), R);
            continue;
        }
        for (size_t j = 0; j < divs.size(); ++j) {
            coeff::Scalar cj = q * basis.combination[j];
            if (cj.isZero()) continue;
            NcPoly piece = mulWords(cj, divs[j].left, G[divs[j].gen], divs[j].right, R);
            if (kind == DivisorKind::Ideal && m.t.pos != 1)
                piece = atPosition(piece, m.t.pos);
            work = sub(work, piece, R);
            res.quotients.push_back({cj, divs[j].left, divs[j].gen, divs[j].right});
        }
        ++res.steps;
    }
    res.nf = NcPoly::fromSortedUnchecked(std::move(done));
    return res;
}

}  // namespace wgb::freering

#endif  // WGB_REDUCE_HPP
