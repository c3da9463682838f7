#ifndef WGB_WORD_HPP
#define WGB_WORD_HPP

// Words, terms and alphabets of the free monoid ring D<v ⊔ V>. Letters are
// small integer ids into an Alphabet; the coefficient letters v come first,
// the module letters V after, so id order is x1 < ... < xj < X1 < ... < Xi.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgb::freering {

struct AlphabetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> vLetters, std::vector<std::string> VLetters)
        : v_(std::move(vLetters)), V_(std::move(VLetters)) {
        if (v_.empty() && V_.empty()) throw AlphabetError("empty alphabet");
        for (const auto& n : v_) checkName(n, false);
        for (const auto& n : V_) checkName(n, true);
        for (const auto& a : v_)
            for (const auto& b : V_)
                if (a == b) throw AlphabetError("alphabets not disjoint: " + a);
    }

    int nv() const { return static_cast<int>(v_.size()); }
    int nV() const { return static_cast<int>(V_.size()); }
    int size() const { return nv() + nV(); }

    bool isV(int id) const { return id >= nv(); }
    int vId(int j) const { return j; }            // j-th v-letter, 0-based
    int VId(int i) const { return nv() + i; }     // i-th V-letter, 0-based
    int VIndex(int id) const { return id - nv(); }

    const std::string& name(int id) const {
        return isV(id) ? V_[id - nv()] : v_[id];
    }

    std::optional<int> find(const std::string& n) const {
        for (int j = 0; j < nv(); ++j)
            if (v_[j] == n) return j;
        for (int i = 0; i < nV(); ++i)
            if (V_[i] == n) return nv() + i;
        return std::nullopt;
    }

private:
    static void checkName(const std::string& n, bool upper) {
        if (n.empty()) throw AlphabetError("empty letter name");
        bool isUpper = std::isupper(static_cast<unsigned char>(n[0])) != 0;
        if (isUpper != upper)
            throw AlphabetError("letter " + n + (upper ? " must start uppercase" : " must start lowercase"));
        // e<digits> is reserved for module position markers in the grammar.
        if (n[0] == 'e' && n.size() > 1 &&
            std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw AlphabetError("letter name reserved for module markers: " + n);
    }

    std::vector<std::string> v_;
    std::vector<std::string> V_;
};

using Word = std::vector<int>;

inline Word concat(const Word& a, const Word& b) {
    Word w(a);
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline int degree(const Word& w) { return static_cast<int>(w.size()); }

inline int vDegree(const Word& w, const Alphabet& al) {
    int d = 0;
    for (int id : w)
        if (al.isV(id)) ++d;
    return d;
}

inline bool isPureV(const Word& w, const Alphabet& al) {
    return std::all_of(w.begin(), w.end(), [&](int id) { return al.isV(id); });
}

inline bool isPureCoeff(const Word& w, const Alphabet& al) {
    return std::none_of(w.begin(), w.end(), [&](int id) { return al.isV(id); });
}

// The V-letter subsequence of a word.
inline Word vPart(const Word& w, const Alphabet& al) {
    Word out;
    for (int id : w)
        if (al.isV(id)) out.push_back(id);
    return out;
}

// A word has canonical shape when all coefficient letters precede all module
// letters (the Zacharias υω shape).
inline bool hasCanonicalShape(const Word& w, const Alphabet& al) {
    bool seenV = false;
    for (int id : w) {
        if (al.isV(id)) seenV = true;
        else if (seenV) return false;
    }
    return true;
}

// Splits a canonical-shape word into (υ, ω); throws otherwise.
inline std::pair<Word, Word> splitCanonical(const Word& w, const Alphabet& al) {
    size_t k = 0;
    while (k < w.size() && !al.isV(w[k])) ++k;
    Word up(w.begin(), w.begin() + k), om(w.begin() + k, w.end());
    if (!isPureV(om, al)) throw std::logic_error("word not in canonical υω shape");
    return {up, om};
}

inline bool isPrefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline bool isSuffix(const Word& s, const Word& w) {
    return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

// w = p·rest
inline Word cutPrefix(const Word& p, const Word& w) {
    return Word(w.begin() + p.size(), w.end());
}

// w = rest·s
inline Word cutSuffix(const Word& s, const Word& w) {
    return Word(w.begin(), w.end() - s.size());
}

// All start offsets at which sub occurs in w (sub may be empty: every offset).
inline std::vector<size_t> occurrences(const Word& sub, const Word& w) {
    std::vector<size_t> out;
    if (sub.size() > w.size()) return out;
    for (size_t p = 0; p + sub.size() <= w.size(); ++p)
        if (std::equal(sub.begin(), sub.end(), w.begin() + p)) out.push_back(p);
    return out;
}

// A term of the free module Q^m: a word tagged with a position in 1..m.
struct Term {
    Word w;
    int pos = 1;

    bool operator==(const Term& o) const { return pos == o.pos && w == o.w; }
    bool operator!=(const Term& o) const { return !(*this == o); }
};

}  // namespace wgb::freering

#endif  // WGB_WORD_HPP
