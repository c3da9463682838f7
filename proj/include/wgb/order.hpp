#ifndef WGB_ORDER_HPP
#define WGB_ORDER_HPP

// Term orderings. The default order compares by V-degree, then total degree,
// then left-to-right lex with x1 < ... < xj < X1 < ... < Xi. It is
// multiplicative, sequential (every down-set is finite) and places every word
// containing a V-letter above every pure coefficient word. An optional
// weighted variant inserts a weighted-degree key after the V-degree.
//
// The module extension is term-over-position with ascending position
// tie-break: t·e_i < t·e_j exactly when i < j.

#include "scalar.hpp"
#include "word.hpp"

#include <map>
#include <string>
#include <vector>

namespace wgb::freering {

enum class Cmp { LT, EQ, GT };

struct TermOrder {
    enum class Kind { Default, Weighted };
    Kind kind = Kind::Default;
    std::vector<long> weights;  // per letter id, Weighted only

    static TermOrder defaultOrder() { return {}; }
    static TermOrder weighted(std::vector<long> w) {
        TermOrder o;
        o.kind = Kind::Weighted;
        o.weights = std::move(w);
        return o;
    }
};

namespace detail {
inline Cmp cmpLong(long long a, long long b) {
    if (a < b) return Cmp::LT;
    if (a > b) return Cmp::GT;
    return Cmp::EQ;
}
}  // namespace detail

inline Cmp compareWords(const Word& a, const Word& b, const Alphabet& al, const TermOrder& ord) {
    Cmp c = detail::cmpLong(vDegree(a, al), vDegree(b, al));
    if (c != Cmp::EQ) return c;
    if (ord.kind == TermOrder::Kind::Weighted) {
        long long wa = 0, wb = 0;
        for (int id : a) wa += ord.weights.at(id);
        for (int id : b) wb += ord.weights.at(id);
        c = detail::cmpLong(wa, wb);
        if (c != Cmp::EQ) return c;
    }
    c = detail::cmpLong(degree(a), degree(b));
    if (c != Cmp::EQ) return c;
    for (size_t k = 0; k < a.size(); ++k) {
        c = detail::cmpLong(a[k], b[k]);
        if (c != Cmp::EQ) return c;
    }
    return Cmp::EQ;
}

inline Cmp compareTerms(const Term& a, const Term& b, const Alphabet& al, const TermOrder& ord) {
    Cmp c = compareWords(a.w, b.w, al, ord);
    if (c != Cmp::EQ) return c;
    return detail::cmpLong(a.pos, b.pos);
}

inline bool wordLess(const Word& a, const Word& b, const Alphabet& al, const TermOrder& ord) {
    return compareWords(a, b, al, ord) == Cmp::LT;
}

inline bool termLess(const Term& a, const Term& b, const Alphabet& al, const TermOrder& ord) {
    return compareTerms(a, b, al, ord) == Cmp::LT;
}

// The shared context of the free monoid ring Q = D<v ⊔ V> and its free
// modules: alphabet, ordering, coefficient mode and module rank.
struct Ring {
    Alphabet alph;
    TermOrder ord = TermOrder::defaultOrder();
    coeff::DomainMode mode = coeff::DomainMode::Integers;
    int rank = 1;

    Cmp cmpW(const Word& a, const Word& b) const { return compareWords(a, b, alph, ord); }
    Cmp cmpT(const Term& a, const Term& b) const { return compareTerms(a, b, alph, ord); }
    bool lessW(const Word& a, const Word& b) const { return cmpW(a, b) == Cmp::LT; }
    bool lessT(const Term& a, const Term& b) const { return cmpT(a, b) == Cmp::LT; }
};

// Bound on processed terms: a total-degree cap, an explicit term, or no bound.
struct Bound {
    enum class Kind { Degree, Word, Infinite };
    Kind kind = Kind::Infinite;
    int deg = 0;
    Term term;

    static Bound degreeBound(int d) { return {Kind::Degree, d, {}}; }
    static Bound termBound(Term t) { return {Kind::Word, 0, std::move(t)}; }
    static Bound infinite() { return {}; }

    bool isInfinite() const { return kind == Kind::Infinite; }

    bool admits(const Term& t, const Ring& R) const {
        switch (kind) {
            case Kind::Infinite: return true;
            case Kind::Degree: return degree(t.w) <= deg;
            case Kind::Word: return compareTerms(t, term, R.alph, R.ord) != Cmp::GT;
        }
        return true;
    }

    bool admits(const Word& w, const Ring& R) const { return admits(Term{w, 1}, R); }

    std::string str(const Ring& R) const;
};

// Deterministic enumeration of words over a letter set, shortest first, then
// lex by letter id. Used for oracle row generation and for enumerating the
// order module below a bound.
enum class LetterFilter { All, CoeffOnly, ModuleOnly };

inline std::vector<Word> enumerateWords(const Alphabet& al, LetterFilter f, int maxLen) {
    std::vector<int> letters;
    for (int id = 0; id < al.size(); ++id) {
        if (f == LetterFilter::CoeffOnly && al.isV(id)) continue;
        if (f == LetterFilter::ModuleOnly && !al.isV(id)) continue;
        letters.push_back(id);
    }
    std::vector<Word> out{Word{}};
    std::vector<Word> prev{Word{}};
    for (int len = 1; len <= maxLen; ++len) {
        std::vector<Word> next;
        for (const Word& w : prev)
            for (int id : letters) {
                Word e(w);
                e.push_back(id);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
        if (letters.empty()) break;
    }
    return out;
}

}  // namespace wgb::freering

#endif  // WGB_ORDER_HPP
