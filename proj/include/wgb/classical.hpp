#ifndef WGB_CLASSICAL_HPP
#define WGB_CLASSICAL_HPP

// Bilateral Buchberger completion in the free monoid ring over the PID:
// overlap and inclusion matches between leading terms, S-polynomials reduced
// with canonical remainders, new elements adjoined while they stay within the
// term bound. This is the base-case engine: it saturates presentation ideals
// and computes bilateral bases when no quotient structure is available.

#include "reduce.hpp"
#include "syz.hpp"

#include <algorithm>

namespace wgb::classical {

using freering::Bound;
using freering::NcPoly;
using freering::Ring;
using freering::Term;
using freering::Word;

struct Stats {
    long naivePairs = 0;
    long gmSize = 0;
    long reductions = 0;
};

struct Result {
    std::vector<NcPoly> basis;
    bool complete = true;
    Stats stats;
    std::vector<syz::LiftRecord> lifts;
};

namespace detail {

inline syz::SyzGen makeGen(const std::vector<NcPoly>& basis, int i, const Word& li, const Word& ri,
                           int j, const Word& lj, const Word& rj, const Ring& R, const char* tag) {
    const auto& mi = basis[i].leading();
    const auto& mj = basis[j].leading();
    coeff::Scalar l = coeff::lcm(mi.c, mj.c, R.mode);
    syz::SyzGen s;
    s.a = {l.exactDiv(mi.c), li, false, i, ri, mi.t.pos};
    s.b = {l.exactDiv(mj.c), lj, false, j, rj, mj.t.pos};
    s.w = Term{freering::concat(freering::concat(li, mi.t.w), ri), mi.t.pos};
    s.tag = tag;
    return s;
}

// All word matches between the leading terms of basis[i] and basis[j];
// `naive` counts every raw pattern including the trivial and duplicate ones.
inline std::vector<syz::SyzGen> matches(const std::vector<NcPoly>& basis, int i, int j,
                                        const Ring& R, long* naive) {
    std::vector<syz::SyzGen> out;
    const auto& A = basis[i].leading().t;
    const auto& B = basis[j].leading().t;
    if (A.pos != B.pos) return out;

    // inclusions of A in B
    for (size_t p : freering::occurrences(A.w, B.w)) {
        ++*naive;
        if (i == j && A.w.size() == B.w.size()) continue;  // trivial self match
        Word L(B.w.begin(), B.w.begin() + p);
        Word Rr(B.w.begin() + p + A.w.size(), B.w.end());
        out.push_back(makeGen(basis, i, L, Rr, j, {}, {}, R, "incl"));
    }
    if (i != j) {
        // inclusions of B in A, skipping the full-word duplicate
        for (size_t p : freering::occurrences(B.w, A.w)) {
            ++*naive;
            if (B.w.size() == A.w.size()) continue;
            Word L(A.w.begin(), A.w.begin() + p);
            Word Rr(A.w.begin() + p + B.w.size(), A.w.end());
            out.push_back(makeGen(basis, j, L, Rr, i, {}, {}, R, "incl"));
        }
    }
    // proper overlaps: a suffix of A equals a prefix of B
    auto overlaps = [&](int x, const Term& X, int y, const Term& Y) {
        size_t maxK = std::min(X.w.size(), Y.w.size());
        for (size_t k = 1; k < maxK; ++k) {
            Word sfx(X.w.end() - k, X.w.end());
            Word pfx(Y.w.begin(), Y.w.begin() + k);
            if (sfx != pfx) continue;
            ++*naive;
            Word rest(Y.w.begin() + k, Y.w.end());
            Word head(X.w.begin(), X.w.end() - k);
            out.push_back(makeGen(basis, x, {}, rest, y, head, {}, R, "overlap"));
        }
    };
    overlaps(i, A, j, B);
    if (i != j) overlaps(j, B, i, A);
    return out;
}

inline NcPoly evalLeg(const syz::Leg& l, const std::vector<NcPoly>& basis, const Ring& R) {
    return freering::mulWords(l.c, l.left, basis[l.index], l.right, R);
}

}  // namespace detail

inline NcPoly spoly(const syz::SyzGen& s, const std::vector<NcPoly>& basis, const Ring& R) {
    return freering::sub(detail::evalLeg(s.a, basis, R), detail::evalLeg(s.b, basis, R), R);
}

// Completion with the adjoin gate: every match of the current basis is
// processed, and a nonzero normal form joins the basis exactly when its
// leading term stays within the bound; otherwise the run is flagged
// BoundExhausted. The pair queue is totally ordered, so output is
// deterministic.
inline Result completeBilateralFree(std::vector<NcPoly> gens, const Ring& R, const Bound& bound) {
    Result res;
    for (auto& g : gens)
        if (!g.isZero()) res.basis.push_back(freering::normalizeSign(g, R));
    auto& basis = res.basis;

    std::vector<syz::SyzGen> queue;
    auto enqueueFor = [&](int upto) {
        for (int i = 0; i <= upto; ++i) {
            auto ms = detail::matches(basis, i, upto, R, &res.stats.naivePairs);
            queue.insert(queue.end(), ms.begin(), ms.end());
        }
        std::sort(queue.begin(), queue.end(),
                  [&](const syz::SyzGen& x, const syz::SyzGen& y) { return syz::syzBefore(x, y, R); });
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) enqueueFor(j);
    res.stats.gmSize = static_cast<long>(queue.size());

    size_t qi = 0;
    while (qi < queue.size()) {
        syz::SyzGen s = queue[qi++];
        NcPoly S = spoly(s, basis, R);
        auto red = freering::canonicalReduce(S, basis, R, freering::DivisorKind::Module);
        res.stats.reductions += red.steps;
        syz::LiftRecord rec;
        rec.sigma = s;
        for (const auto& q : red.quotients) rec.quotients.push_back({q.c, q.left, q.gen, q.right});
        rec.residual = red.nf;
        if (!red.nf.isZero()) {
            NcPoly nfn = freering::normalizeSign(red.nf, R);
            if (bound.admits(nfn.leadingTerm(), R)) {
                coeff::Scalar sign =
                    red.nf.leadingCoeff().exactDiv(nfn.leadingCoeff());  // +-1 over Z, lc over Q
                int idx = static_cast<int>(basis.size());
                basis.push_back(nfn);
                rec.quotients.push_back({sign, {}, idx, {}});
                rec.residual = NcPoly::zero();
                rec.adjoinedIndex = idx;
                size_t before = queue.size();
                std::vector<syz::SyzGen> rest(queue.begin() + qi, queue.end());
                queue.resize(qi);
                for (int i = 0; i <= idx; ++i) {
                    auto ms = detail::matches(basis, i, idx, R, &res.stats.naivePairs);
                    rest.insert(rest.end(), ms.begin(), ms.end());
                }
                std::sort(rest.begin(), rest.end(),
                          [&](const syz::SyzGen& x, const syz::SyzGen& y) { return syz::syzBefore(x, y, R); });
                queue.insert(queue.end(), rest.begin(), rest.end());
                res.stats.gmSize += static_cast<long>(queue.size() - before);
            } else {
                res.complete = false;
            }
        }
        res.lifts.push_back(std::move(rec));
    }
    return res;
}

}  // namespace wgb::classical

#endif  // WGB_CLASSICAL_HPP
