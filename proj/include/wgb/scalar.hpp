#ifndef WGB_SCALAR_HPP
#define WGB_SCALAR_HPP

// Exact arithmetic of the coefficient domain D: arbitrary-precision integers
// (default) or rationals (field mode), with canonical remainders, extended
// gcd and strong bases of D-ideals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgb::coeff {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class DomainMode { Integers, Rationals };

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scalar is stored as an exact rational; in integer mode the denominator is
// always 1. cpp_rational keeps values in lowest terms with positive denominator.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(n) {}
    explicit Scalar(const Int& n) : v_(n) {}
    explicit Scalar(const Rat& r) : v_(r) {}
    Scalar(const Int& num, const Int& den) : v_(Rat(num, den)) {}

    const Rat& value() const { return v_; }
    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool isZero() const { return v_.is_zero(); }
    bool isOne() const { return v_ == 1; }
    bool isInteger() const { return denominator() == 1; }
    bool isNegative() const { return v_ < 0; }

    Scalar operator-() const { return Scalar(Rat(-v_)); }
    Scalar operator+(const Scalar& o) const { return Scalar(Rat(v_ + o.v_)); }
    Scalar operator-(const Scalar& o) const { return Scalar(Rat(v_ - o.v_)); }
    Scalar operator*(const Scalar& o) const { return Scalar(Rat(v_ * o.v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

    // Exact division; the caller guarantees divisibility in integer mode.
    Scalar exactDiv(const Scalar& d) const {
        if (d.isZero()) throw DomainError("division by zero");
        return Scalar(Rat(v_ / d.v_));
    }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

private:
    Rat v_;
};

inline Scalar abs(const Scalar& a) { return a.isNegative() ? -a : a; }

// Parses "n" or "p/q"; throws DomainError on malformed input.
inline Scalar parseScalar(const std::string& s) {
    try {
        return Scalar(Rat(s));
    } catch (const std::exception&) {
        throw DomainError("malformed scalar: " + s);
    }
}

namespace detail {
inline void requireInt(const Scalar& a) {
    if (!a.isInteger()) throw DomainError("non-integer scalar in integer mode");
}
}  // namespace detail

// Canonical remainder of c modulo the ideal (m). The representative set over Z
// is the least non-negative residue {0,...,|m|-1}; m = 0 means no reduction.
// In field mode every nonzero ideal is the full ring, so the remainder is 0.
inline Scalar canonRem(const Scalar& c, const Scalar& m, DomainMode mode) {
    if (m.isZero()) return c;
    if (mode == DomainMode::Rationals) return Scalar(0);
    detail::requireInt(c);
    detail::requireInt(m);
    Int mm = boost::multiprecision::abs(m.numerator());
    Int r = c.numerator() % mm;
    if (r < 0) r += mm;
    return Scalar(r);
}

struct BezoutData {
    Scalar g;  // gcd, > 0 (field mode: 1)
    Scalar s;  // g = s*a + t*b
    Scalar t;
};

// Extended Euclid. Errors when both inputs are zero.
inline BezoutData bezout(const Scalar& a, const Scalar& b, DomainMode mode) {
    if (a.isZero() && b.isZero()) throw DomainError("bezout(0, 0)");
    if (mode == DomainMode::Rationals) {
        if (!a.isZero()) return {Scalar(1), Scalar(1).exactDiv(a), Scalar(0)};
        return {Scalar(1), Scalar(0), Scalar(1).exactDiv(b)};
    }
    detail::requireInt(a);
    detail::requireInt(b);
    Int r0 = a.numerator(), r1 = b.numerator();
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;  // truncated division keeps the invariants exact
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {Scalar(r0), Scalar(s0), Scalar(t0)};
}

inline Scalar gcd(const Scalar& a, const Scalar& b, DomainMode mode) {
    if (a.isZero() && b.isZero()) return Scalar(0);
    return bezout(a, b, mode).g;
}

inline Scalar lcm(const Scalar& a, const Scalar& b, DomainMode mode) {
    if (a.isZero() || b.isZero()) return Scalar(0);
    Scalar g = gcd(a, b, mode);
    Scalar l = (a * b).exactDiv(g);
    return l.isNegative() ? -l : l;
}

// a | b in D.
inline bool divides(const Scalar& a, const Scalar& b, DomainMode mode) {
    if (a.isZero()) return b.isZero();
    if (mode == DomainMode::Rationals) return true;
    detail::requireInt(a);
    detail::requireInt(b);
    return b.numerator() % a.numerator() == 0;
}

struct StrongIdealBasis {
    Scalar g;                         // generator of the ideal (gens), > 0
    std::vector<Scalar> combination;  // g = sum combination[j] * gens[j]
};

// Strong basis of the D-ideal spanned by gens: the gcd with a recorded
// D-linear combination, folded by extended Euclid. Errors when all inputs
// are zero.
inline StrongIdealBasis strongIdealBasis(const std::vector<Scalar>& gens, DomainMode mode) {
    if (gens.empty()) throw DomainError("strongIdealBasis: empty generator list");
    bool allZero = true;
    for (const auto& c : gens)
        if (!c.isZero()) { allZero = false; break; }
    if (allZero) throw DomainError("strongIdealBasis: all generators zero");

    StrongIdealBasis out;
    out.combination.assign(gens.size(), Scalar(0));
    size_t first = 0;
    while (gens[first].isZero()) ++first;
    out.g = gens[first];
    out.combination[first] = Scalar(1);
    if (out.g.isNegative()) {
        out.g = -out.g;
        out.combination[first] = Scalar(-1);
    }
    if (mode == DomainMode::Rationals) {
        out.combination[first] = Scalar(1).exactDiv(gens[first]);
        out.g = Scalar(1);
        return out;
    }
    for (size_t j = first + 1; j < gens.size(); ++j) {
        if (gens[j].isZero()) continue;
        if (out.g.isOne()) break;
        BezoutData bz = bezout(out.g, gens[j], mode);
        for (auto& c : out.combination) c *= bz.s;
        out.combination[j] = bz.t;
        out.g = bz.g;
    }
    return out;
}

}  // namespace wgb::coeff

#endif  // WGB_SCALAR_HPP
