#ifndef WGB_POLY_HPP
#define WGB_POLY_HPP

// Monomials and polynomials of the free monoid ring and its free modules.
// An NcPoly is a finite sum of monomials kept strictly descending under the
// active module ordering, with no zero coefficients and no duplicate terms.

#include "order.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wgb::freering {

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Monomial {
    coeff::Scalar c;
    Term t;
};

class NcPoly {
public:
    NcPoly() = default;

    static NcPoly zero() { return {}; }

    static NcPoly monomial(coeff::Scalar c, Term t) {
        NcPoly f;
        if (!c.isZero()) f.ms_.push_back({std::move(c), std::move(t)});
        return f;
    }

    // Sorts, merges duplicate terms and drops zeros.
    static NcPoly fromMonomials(std::vector<Monomial> ms, const Ring& R) {
        std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
            return R.cmpT(a.t, b.t) == Cmp::GT;
        });
        NcPoly f;
        for (auto& m : ms) {
            if (m.c.isZero()) continue;
            if (!f.ms_.empty() && f.ms_.back().t == m.t) {
                f.ms_.back().c += m.c;
                if (f.ms_.back().c.isZero()) f.ms_.pop_back();
            } else {
                f.ms_.push_back(std::move(m));
            }
        }
        return f;
    }

    // The caller guarantees strictly descending order and nonzero coefficients.
    static NcPoly fromSortedUnchecked(std::vector<Monomial> ms) {
        NcPoly f;
        f.ms_ = std::move(ms);
        return f;
    }

    bool isZero() const { return ms_.empty(); }
    size_t size() const { return ms_.size(); }
    const std::vector<Monomial>& monomials() const { return ms_; }

    const Monomial& leading() const {
        if (ms_.empty()) throw PolyError("leading monomial of zero");
        return ms_.front();
    }
    const Term& leadingTerm() const { return leading().t; }
    const coeff::Scalar& leadingCoeff() const { return leading().c; }

    bool operator==(const NcPoly& o) const {
        if (ms_.size() != o.ms_.size()) return false;
        for (size_t k = 0; k < ms_.size(); ++k)
            if (ms_[k].c != o.ms_[k].c || ms_[k].t != o.ms_[k].t) return false;
        return true;
    }
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    // True when some monomial carries a position other than 1.
    bool isPositioned() const {
        return std::any_of(ms_.begin(), ms_.end(), [](const Monomial& m) { return m.t.pos != 1; });
    }

private:
    std::vector<Monomial> ms_;
};

inline NcPoly add(const NcPoly& f, const NcPoly& g, const Ring& R) {
    std::vector<Monomial> ms(f.monomials());
    ms.insert(ms.end(), g.monomials().begin(), g.monomials().end());
    return NcPoly::fromMonomials(std::move(ms), R);
}

inline NcPoly sub(const NcPoly& f, const NcPoly& g, const Ring& R) {
    std::vector<Monomial> ms(f.monomials());
    for (const auto& m : g.monomials()) ms.push_back({-m.c, m.t});
    return NcPoly::fromMonomials(std::move(ms), R);
}

inline NcPoly negate(const NcPoly& f) {
    std::vector<Monomial> ms(f.monomials());
    for (auto& m : ms) m.c = -m.c;
    return NcPoly::fromSortedUnchecked(std::move(ms));
}

inline NcPoly scale(const NcPoly& f, const coeff::Scalar& c) {
    if (c.isZero()) return NcPoly::zero();
    std::vector<Monomial> ms(f.monomials());
    for (auto& m : ms) m.c *= c;
    return NcPoly::fromSortedUnchecked(std::move(ms));
}

// c · λ · f · ρ in the free ring; positions pass through f.
inline NcPoly mulWords(const coeff::Scalar& c, const Word& left, const NcPoly& f, const Word& right,
                       const Ring& R) {
    if (c.isZero() || f.isZero()) return NcPoly::zero();
    std::vector<Monomial> ms;
    ms.reserve(f.size());
    for (const auto& m : f.monomials())
        ms.push_back({m.c * c, Term{concat(concat(left, m.t.w), right), m.t.pos}});
    return NcPoly::fromMonomials(std::move(ms), R);
}

// Free product in Q; at most one operand may carry module positions.
inline NcPoly mulFree(const NcPoly& f, const NcPoly& g, const Ring& R) {
    if (f.isPositioned() && g.isPositioned())
        throw PolyError("free product of two positioned operands");
    std::vector<Monomial> ms;
    ms.reserve(f.size() * g.size());
    for (const auto& a : f.monomials())
        for (const auto& b : g.monomials()) {
            int pos = a.t.pos != 1 ? a.t.pos : b.t.pos;
            ms.push_back({a.c * b.c, Term{concat(a.t.w, b.t.w), pos}});
        }
    return NcPoly::fromMonomials(std::move(ms), R);
}

inline NcPoly one() { return NcPoly::monomial(coeff::Scalar(1), Term{}); }

// Retags a positionless polynomial at a module position; the ordering between
// its terms is unaffected since they all share the position.
inline NcPoly atPosition(const NcPoly& f, int pos) {
    if (f.isPositioned()) throw PolyError("atPosition on a positioned polynomial");
    std::vector<Monomial> ms(f.monomials());
    for (auto& m : ms) m.t.pos = pos;
    return NcPoly::fromSortedUnchecked(std::move(ms));
}

// Multiplies through so the leading coefficient is positive (integer mode)
// or 1 (field mode). Used when presenting basis elements.
inline NcPoly normalizeSign(const NcPoly& f, const Ring& R) {
    if (f.isZero()) return f;
    if (R.mode == coeff::DomainMode::Rationals)
        return scale(f, coeff::Scalar(1).exactDiv(f.leadingCoeff()));
    return f.leadingCoeff().isNegative() ? scale(f, coeff::Scalar(-1)) : f;
}

inline int maxWordDegree(const NcPoly& f) {
    int d = 0;
    for (const auto& m : f.monomials()) d = std::max(d, degree(m.t.w));
    return d;
}

}  // namespace wgb::freering

#endif  // WGB_POLY_HPP
