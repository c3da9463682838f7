#ifndef WGB_PRESENTATION_HPP
#define WGB_PRESENTATION_HPP

// The effectively given ring A = Q/I. A presentation holds the relation set
// G = G0 ⊔ C ⊔ H, validates the Ore shape of C, saturates G to a Gröbner
// basis slice of the ideal, computes canonical Zacharias representatives by
// top reduction with canonical remainders, and classifies terms by their
// Szekeres generator.

#include "classical.hpp"
#include "io.hpp"

#include <optional>

namespace wgb::pres {

using freering::Bound;
using freering::NcPoly;
using freering::Ring;
using freering::Term;
using freering::Word;

struct PresentationInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string code;    // OreShape, CoefficientRing, MissingC, ...
    std::string where;   // e.g. "C[1]"
    std::string detail;
};

enum class TermClassKind { N, L, R };

// The Szekeres generator of a term: c = 0 marks the zero ideal (class N),
// a unit marks the full ring (class L), anything else a proper ideal (R).
struct TermClass {
    TermClassKind kind;
    coeff::Scalar c;
};

class Presentation {
public:
    Ring ring;
    std::vector<NcPoly> G0, C, H;

    bool isFree() const { return G0.empty() && C.empty() && H.empty(); }
    bool isSaturated() const { return saturated_; }
    bool isSaturationComplete() const { return satComplete_; }
    const std::optional<Bound>& saturationBound() const { return satBound_; }
    const std::vector<NcPoly>& saturatedBasis() const { return satGB_; }

    // Saturated relations with a leading term outside D<v> that are not input
    // C elements: the H part of the saturated basis, used for the A-type
    // pairs and strong-basis divisor discovery.
    std::vector<NcPoly> saturatedH() const {
        std::vector<NcPoly> out;
        for (const auto& g : satGB_) {
            if (freering::isPureCoeff(g.leadingTerm().w, ring.alph)) continue;
            bool isC = false;
            for (const auto& c : C)
                if (freering::normalizeSign(c, ring) == g) { isC = true; break; }
            if (!isC) out.push_back(g);
        }
        return out;
    }

    // Saturated relations lying in D<v>: a Gröbner basis slice of the
    // coefficient ideal I.
    std::vector<NcPoly> saturatedCoeffBasis() const {
        std::vector<NcPoly> out;
        for (const auto& g : satGB_)
            if (freering::isPureCoeff(g.leadingTerm().w, ring.alph)) out.push_back(g);
        return out;
    }

    friend Presentation saturate(Presentation p, const Bound& b);
    friend class PresentationBuilder;

    void markSaturated(std::vector<NcPoly> gb, std::optional<Bound> bound, bool complete) {
        satGB_ = std::move(gb);
        satBound_ = std::move(bound);
        satComplete_ = complete;
        saturated_ = true;
    }

private:
    std::vector<NcPoly> satGB_;
    std::optional<Bound> satBound_;  // nullopt only while unsaturated
    bool satComplete_ = false;
    bool saturated_ = false;
};

// ---- validation ------------------------------------------------------------

namespace detail {
inline std::optional<std::pair<int, int>> cLeadPattern(const Word& w, const freering::Alphabet& al) {
    if (w.size() != 2) return std::nullopt;
    if (!al.isV(w[0]) || al.isV(w[1])) return std::nullopt;
    return std::make_pair(al.VIndex(w[0]), w[1]);  // (i = V index, j = v letter id)
}
}  // namespace detail

inline std::vector<Violation> validate(const Presentation& p) {
    std::vector<Violation> out;
    const auto& al = p.ring.alph;
    if (p.ring.rank < 1) out.push_back({"ModuleRank", "[module]", "rank must be >= 1"});

    for (size_t k = 0; k < p.G0.size(); ++k) {
        if (p.G0[k].isZero()) { out.push_back({"ZeroRelation", "G0[" + std::to_string(k) + "]", ""}); continue; }
        for (const auto& m : p.G0[k].monomials())
            if (!freering::isPureCoeff(m.t.w, al)) {
                out.push_back({"CoefficientRing", "G0[" + std::to_string(k) + "]",
                               "term " + freering::printWord(m.t.w, al) + " contains a module letter"});
                break;
            }
    }

    std::vector<std::vector<bool>> seen(al.nV(), std::vector<bool>(al.nv(), false));
    for (size_t k = 0; k < p.C.size(); ++k) {
        const std::string at = "C[" + std::to_string(k) + "]";
        if (p.C[k].isZero()) { out.push_back({"ZeroRelation", at, ""}); continue; }
        const auto& lead = p.C[k].leading();
        auto pat = detail::cLeadPattern(lead.t.w, al);
        if (!pat) {
            out.push_back({"CLeadingTerm", at,
                           "leading term " + freering::printWord(lead.t.w, al) + " is not of shape Xi*xj"});
            continue;
        }
        auto [i, jId] = *pat;
        if (!coeff::abs(lead.c).isOne())
            out.push_back({"CLeadingCoeff", at, "leading coefficient " + lead.c.str() + " is not a unit"});
        if (seen[i][jId]) out.push_back({"DuplicateC", at, "pair handled twice"});
        seen[i][jId] = true;
        // tail terms must be pure coefficient words or υ·Xl with l <= i
        for (size_t mi = 1; mi < p.C[k].size(); ++mi) {
            const Word& w = p.C[k].monomials()[mi].t.w;
            if (freering::isPureCoeff(w, al)) continue;
            Word vp = freering::vPart(w, al);
            bool shapeOk = vp.size() == 1 && !w.empty() && al.isV(w.back());
            if (!shapeOk) {
                out.push_back({"OreShape", at,
                               "tail term " + freering::printWord(w, al) + " is not of shape a*Xl"});
                continue;
            }
            if (al.VIndex(w.back()) > i)
                out.push_back({"OreShape", at,
                               "tail term " + freering::printWord(w, al) + " uses X" +
                                   std::to_string(al.VIndex(w.back()) + 1) + " with l > i"});
        }
    }
    if (!p.isFree() && al.nv() > 0 && al.nV() > 0) {
        for (int i = 0; i < al.nV(); ++i)
            for (int j = 0; j < al.nv(); ++j)
                if (!seen[i][al.vId(j)])
                    out.push_back({"MissingC", "C",
                                   "no relation for " + al.name(al.VId(i)) + "*" + al.name(al.vId(j))});
    }

    for (size_t k = 0; k < p.H.size(); ++k) {
        const std::string at = "H[" + std::to_string(k) + "]";
        if (p.H[k].isZero()) { out.push_back({"ZeroRelation", at, ""}); continue; }
        const Word& w = p.H[k].leadingTerm().w;
        if (!freering::hasCanonicalShape(w, al) || freering::isPureCoeff(w, al))
            out.push_back({"HLeadingShape", at,
                           "leading term " + freering::printWord(w, al) +
                               " is not of shape υω with ω nonempty"});
    }
    return out;
}

// Report-style order check: each C relation must be led by its Xi*xj term
// under the active order (otherwise the order violates the orientation the
// quotient structure requires).
inline std::vector<Violation> validateOrder(const std::vector<NcPoly>& C, const Ring& R) {
    std::vector<Violation> out;
    for (size_t k = 0; k < C.size(); ++k) {
        if (C[k].isZero()) continue;
        const Word& lead = C[k].leadingTerm().w;
        if (!detail::cLeadPattern(lead, R.alph))
            out.push_back({"OrderOrientation", "C[" + std::to_string(k) + "]",
                           "leading term under this order is " + freering::printWord(lead, R.alph)});
    }
    return out;
}

inline void requireValid(const Presentation& p) {
    auto v = validate(p);
    if (!v.empty())
        throw PresentationInvalid(v.front().code + " at " + v.front().where +
                                  (v.front().detail.empty() ? "" : ": " + v.front().detail));
    auto vo = validateOrder(p.C, p.ring);
    if (!vo.empty())
        throw PresentationInvalid(vo.front().code + " at " + vo.front().where + ": " + vo.front().detail);
}

// ---- saturation ------------------------------------------------------------

// Bounded self-saturation: completes G0 ∪ C ∪ H inside the free ring. When
// the pair queue drains without skips the slice is a full Gröbner basis and
// the presentation becomes valid at every term.
inline Presentation saturate(Presentation p, const Bound& b) {
    requireValid(p);
    if (p.isFree()) {
        p.markSaturated({}, Bound::infinite(), true);
        return p;
    }
    Ring idealRing = p.ring;
    idealRing.rank = 1;
    std::vector<NcPoly> gens;
    for (const auto& g : p.G0) gens.push_back(g);
    for (const auto& g : p.C) gens.push_back(g);
    for (const auto& g : p.H) gens.push_back(g);
    auto res = classical::completeBilateralFree(std::move(gens), idealRing, b);
    p.markSaturated(std::move(res.basis),
                    res.complete ? Bound::infinite() : b, res.complete);
    return p;
}

// ---- canonical representatives ---------------------------------------------

inline NcPoly canonicalRep(const NcPoly& f, const Presentation& p) {
    if (!p.isSaturated()) {
        if (p.isFree()) return f;
        throw freering::SaturationInsufficient("presentation not saturated");
    }
    std::optional<Bound> guard;
    if (!p.isSaturationComplete()) guard = p.saturationBound();
    auto red = freering::canonicalReduce(f, p.saturatedBasis(), p.ring,
                                         freering::DivisorKind::Ideal, guard);
    return red.nf;
}

// ---- Szekeres classification ----------------------------------------------

namespace detail {
inline TermClass classifyAgainst(const Word& w, const std::vector<NcPoly>& G, const Ring& R) {
    std::vector<coeff::Scalar> lcs;
    for (const auto& g : G) {
        if (g.isZero()) continue;
        if (!freering::occurrences(g.leadingTerm().w, w).empty()) lcs.push_back(g.leadingCoeff());
    }
    if (lcs.empty()) return {TermClassKind::N, coeff::Scalar(0)};
    auto basis = coeff::strongIdealBasis(lcs, R.mode);
    if (basis.g.isOne()) return {TermClassKind::L, basis.g};
    return {TermClassKind::R, basis.g};
}
}  // namespace detail

// Szekeres class of a term with respect to the presentation ideal; the
// generator is the gcd of the leading coefficients of all applicable
// saturated divisors.
inline TermClass classifyTerm(const Term& t, const Presentation& p) {
    if (!p.isSaturated()) {
        if (p.isFree()) return {TermClassKind::N, coeff::Scalar(0)};
        throw freering::SaturationInsufficient("presentation not saturated");
    }
    if (!p.isSaturationComplete() && !p.saturationBound()->admits(t, p.ring))
        throw freering::SaturationInsufficient("term beyond the saturation bound");
    return detail::classifyAgainst(t.w, p.saturatedBasis(), p.ring);
}

// Classification of a coefficient word against I = ideal ∩ D<v> only; this is
// the M(I) membership data used by the pair side conditions.
inline TermClass classifyCoeffWord(const Word& w, const Presentation& p) {
    if (!p.isSaturated()) {
        if (p.isFree()) return {TermClassKind::N, coeff::Scalar(0)};
        throw freering::SaturationInsufficient("presentation not saturated");
    }
    if (!p.isSaturationComplete() && !p.saturationBound()->admits(Term{w, 1}, p.ring))
        throw freering::SaturationInsufficient("coefficient word beyond the saturation bound");
    return detail::classifyAgainst(w, p.saturatedCoeffBasis(), p.ring);
}

// Membership of a pure module word in the order module B = <V> \ L(I).
inline bool inOrderModule(const Word& omega, const Presentation& p) {
    return classifyTerm(Term{omega, 1}, p).kind != TermClassKind::L;
}

// ---- structure constants ----------------------------------------------------

// Decomposition ρ ⋆ xj = Σ a_{ρjυ}·υ with a ∈ D<v> and υ pure module words
// bounded by ρ, read off the canonical representative.
inline std::vector<std::pair<NcPoly, Word>> structureConstants(const Word& rho, int xjId,
                                                               const Presentation& p) {
    if (!freering::isPureV(rho, p.ring.alph)) throw std::invalid_argument("rho must be a module word");
    if (p.ring.alph.isV(xjId)) throw std::invalid_argument("xj must be a coefficient letter");
    Word w(rho);
    w.push_back(xjId);
    NcPoly f = canonicalRep(NcPoly::monomial(coeff::Scalar(1), Term{w, 1}), p);
    std::vector<std::pair<NcPoly, Word>> out;
    for (const auto& m : f.monomials()) {
        auto [up, om] = freering::splitCanonical(m.t.w, p.ring.alph);
        if (freering::compareWords(om, rho, p.ring.alph, p.ring.ord) == freering::Cmp::GT)
            throw std::logic_error("structure constant word exceeds rho");
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const auto& e) { return e.second == om; });
        NcPoly mono = NcPoly::monomial(m.c, Term{up, 1});
        if (it == out.end()) out.emplace_back(mono, om);
        else it->first = freering::add(it->first, mono, p.ring);
    }
    return out;
}

}  // namespace wgb::pres

#endif  // WGB_PRESENTATION_HPP
