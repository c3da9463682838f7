#ifndef WGB_ALGEBRA_HPP
#define WGB_ALGEBRA_HPP

// Arithmetic in A^m on canonical representatives: star multiplication (the
// ring product, free product followed by canonical reduction), Weispfenning
// diamond multiplication (coefficients multiply in order while module words
// swap), the graded product of the associated graded ring, and leading-form
// extraction under the natural <V>-pseudovaluation.
//
// A canonical element is graded by the module-word part of its terms: the
// valuation of f is the largest (ω, position) pair in its support, and the
// leading coefficient is the whole coefficient polynomial sitting there.

#include "presentation.hpp"

namespace wgb::algebra {

using freering::Cmp;
using freering::Monomial;
using freering::NcPoly;
using freering::Term;
using freering::Word;
using pres::Presentation;

struct NotCanonical : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (ω, position): the value group of the natural pseudovaluation.
struct Valuation {
    Word omega;
    int pos = 1;

    bool operator==(const Valuation& o) const { return pos == o.pos && omega == o.omega; }
};

inline Cmp compareValuations(const Valuation& a, const Valuation& b, const freering::Ring& R) {
    Cmp c = freering::compareWords(a.omega, b.omega, R.alph, R.ord);
    if (c != Cmp::EQ) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? Cmp::LT : Cmp::GT;
    return Cmp::EQ;
}

// Layered comparison of canonical terms: module word, then position, then
// coefficient word. This is the order the reduction theory runs on; within a
// fixed module word it refines the valuation by the coefficient staircase.
inline Cmp compareLayered(const Term& a, const Term& b, const freering::Ring& R) {
    auto [ua, oa] = freering::splitCanonical(a.w, R.alph);
    auto [ub, ob] = freering::splitCanonical(b.w, R.alph);
    Cmp c = freering::compareWords(oa, ob, R.alph, R.ord);
    if (c != Cmp::EQ) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? Cmp::LT : Cmp::GT;
    return freering::compareWords(ua, ub, R.alph, R.ord);
}

// ---- products ----------------------------------------------------------------

// Star multiplication: the product of A, computed on representatives.
inline NcPoly starMul(const NcPoly& f, const NcPoly& g, const Presentation& p) {
    return pres::canonicalRep(freering::mulFree(f, g, p.ring), p);
}

// Weispfenning multiplication: monomial-wise (a1·a2)(τ2 ∘ τ1), summed and
// canonicalized once. The left factor must be position-free; for a monomial
// left factor a·ρ this agrees with a·(g ⋆ ρ).
inline NcPoly diamondMul(const NcPoly& f, const NcPoly& g, const Presentation& p) {
    if (f.isPositioned()) throw freering::PolyError("diamond left factor must not be positioned");
    std::vector<Monomial> ms;
    ms.reserve(f.size() * g.size());
    for (const auto& a : f.monomials()) {
        auto [u1, o1] = freering::splitCanonical(a.t.w, p.ring.alph);
        for (const auto& b : g.monomials()) {
            auto [u2, o2] = freering::splitCanonical(b.t.w, p.ring.alph);
            Word w = freering::concat(freering::concat(u1, u2), freering::concat(o2, o1));
            ms.push_back({a.c * b.c, Term{std::move(w), b.t.pos}});
        }
    }
    return pres::canonicalRep(NcPoly::fromMonomials(std::move(ms), p.ring), p);
}

// ---- leading structure --------------------------------------------------------

struct LeadData {
    Term T;               // leading term of the leading coefficient: υω at pos
    Word omega;           // module word part (the valuation)
    Word upsilon;         // leading coefficient word of lcPoly
    coeff::Scalar gamma;  // its D-scalar
    int pos = 1;
    NcPoly lcPoly;        // the whole coefficient polynomial at (omega, pos)
};

inline Valuation valuation(const NcPoly& f, const Presentation& p) {
    if (f.isZero()) throw freering::PolyError("valuation of zero");
    bool have = false;
    Valuation best;
    for (const auto& m : f.monomials()) {
        Valuation v{freering::vPart(m.t.w, p.ring.alph), m.t.pos};
        if (!freering::hasCanonicalShape(m.t.w, p.ring.alph))
            throw NotCanonical("term " + freering::printWord(m.t.w, p.ring.alph) +
                               " is not in canonical shape");
        if (!have || compareValuations(v, best, p.ring) == Cmp::GT) { best = v; have = true; }
    }
    return best;
}

// Decomposes the maximal monomial: the valuation (omega, pos), the full
// R-coefficient there, and its own leading factorization γ·υ.
inline LeadData leading(const NcPoly& f, const Presentation& p) {
    if (f.isZero()) throw freering::PolyError("leading of zero");
    Valuation v = valuation(f, p);
    std::vector<Monomial> coeffMs;
    for (const auto& m : f.monomials()) {
        auto [up, om] = freering::splitCanonical(m.t.w, p.ring.alph);
        if (om == v.omega && m.t.pos == v.pos) coeffMs.push_back({m.c, Term{up, 1}});
    }
    LeadData out;
    out.lcPoly = NcPoly::fromMonomials(std::move(coeffMs), p.ring);
    out.omega = v.omega;
    out.pos = v.pos;
    out.upsilon = out.lcPoly.leadingTerm().w;
    out.gamma = out.lcPoly.leadingCoeff();
    out.T = Term{freering::concat(out.upsilon, out.omega), out.pos};
    return out;
}

// ---- graded product and tails --------------------------------------------------

// Graded product mL ∗ M(g) ∗ mR. The free product of the three monomials is
// canonicalized; the piece of valuation ωL∘ωg∘ωR survives exactly when that
// word stays in the order module with a nonzero residue, and then the leading
// monomial of the surviving piece equals the maximal monomial of the star
// product. Returns a zero-coefficient monomial otherwise.
inline Monomial gradedMul(const Monomial& mL, const Monomial& g, const Monomial& mR,
                          const Presentation& p) {
    if (mL.t.pos != 1 || mR.t.pos != 1)
        throw freering::PolyError("graded multipliers must not be positioned");
    const auto& al = p.ring.alph;
    // composed valuation: ωL ∘ ωg ∘ ωR
    auto [uL, oL] = freering::splitCanonical(mL.t.w, al);
    auto [ug, og] = freering::splitCanonical(g.t.w, al);
    auto [uR, oR] = freering::splitCanonical(mR.t.w, al);
    Word target = freering::concat(freering::concat(oL, og), oR);
    Word w = freering::concat(freering::concat(mL.t.w, g.t.w), mR.t.w);
    NcPoly prod = pres::canonicalRep(
        NcPoly::monomial(mL.c * g.c * mR.c, Term{std::move(w), g.t.pos}), p);
    Monomial best{coeff::Scalar(0), Term{{}, g.t.pos}};
    bool have = false;
    for (const auto& m : prod.monomials()) {
        auto [up, om] = freering::splitCanonical(m.t.w, al);
        if (om != target || m.t.pos != g.t.pos) continue;
        if (!have ||
            freering::compareWords(up, freering::splitCanonical(best.t.w, al).first, al, p.ring.ord) ==
                Cmp::GT) {
            best = m;
            have = true;
        }
    }
    return best;  // zero coefficient when the graded piece died
}

// tail(mL ⋆ M(g) ⋆ mR) = star product − graded product; nonzero tails have
// valuation strictly below the composed one.
inline NcPoly tailMul(const Monomial& mL, const Monomial& g, const Monomial& mR,
                      const Presentation& p) {
    Word w = freering::concat(freering::concat(mL.t.w, g.t.w), mR.t.w);
    NcPoly star = pres::canonicalRep(
        NcPoly::monomial(mL.c * g.c * mR.c, Term{std::move(w), g.t.pos}), p);
    Monomial gm = gradedMul(mL, g, mR, p);
    if (gm.c.isZero()) return star;
    return freering::sub(star, NcPoly::monomial(gm.c, gm.t), p.ring);
}

}  // namespace wgb::algebra

#endif  // WGB_ALGEBRA_HPP
