#include <catch2/catch_amalgamated.hpp>

#include "wgb/io.hpp"
#include "wgb/presentation.hpp"

#include <random>

using namespace wgb;
using namespace wgb::freering;
using coeff::Scalar;

namespace {

Ring wexRing() {
    Ring R;
    R.alph = Alphabet({"x1", "x2"}, {"X1"});
    return R;
}

Ring xyRing() {
    Ring R;
    R.alph = Alphabet({}, {"X", "Y"});
    return R;
}

Word randomWord(const Alphabet& al, LetterFilter f, int maxLen, std::mt19937_64& rng) {
    std::vector<int> letters;
    for (int id = 0; id < al.size(); ++id) {
        if (f == LetterFilter::CoeffOnly && al.isV(id)) continue;
        if (f == LetterFilter::ModuleOnly && !al.isV(id)) continue;
        letters.push_back(id);
    }
    std::uniform_int_distribution<int> len(0, maxLen);
    Word w;
    if (letters.empty()) return w;
    int n = len(rng);
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    for (int k = 0; k < n; ++k) w.push_back(letters[pick(rng)]);
    return w;
}

NcPoly randomPoly(const Ring& R, int maxTerms, int maxLen, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nt(0, maxTerms);
    std::uniform_int_distribution<int> cf(-5, 5);
    std::vector<Monomial> ms;
    int n = nt(rng);
    for (int k = 0; k < n; ++k) {
        int c = cf(rng);
        if (c == 0) continue;
        ms.push_back({Scalar(c), Term{randomWord(R.alph, LetterFilter::All, maxLen, rng), 1}});
    }
    return NcPoly::fromMonomials(std::move(ms), R);
}

}  // namespace

TEST_CASE("default order satisfies the defining comparisons") {
    Ring R = wexRing();
    Word X1{R.alph.VId(0)};
    Word x1{R.alph.vId(0)}, x2{R.alph.vId(1)};
    // a module letter beats every coefficient word
    CHECK(compareWords(X1, concat(x1, concat(x1, x1)), R.alph, R.ord) == Cmp::GT);
    // X1*x1 > x2*X1 at equal bidegree (left-lex, module letters on top)
    CHECK(compareWords(concat(X1, x1), concat(x2, X1), R.alph, R.ord) == Cmp::GT);
    CHECK(compareWords(concat(X1, x2), concat(x1, X1), R.alph, R.ord) == Cmp::GT);
    CHECK(compareWords(x1, x1, R.alph, R.ord) == Cmp::EQ);
    // x1*X1 < x2*X1 (lex on the coefficient part)
    CHECK(compareWords(concat(x1, X1), concat(x2, X1), R.alph, R.ord) == Cmp::LT);
}

TEST_CASE("Eq (2) style dominance for random coefficient words") {
    Ring R = wexRing();
    std::mt19937_64 rng(11);
    for (int i = 0; i < R.alph.nV(); ++i) {
        Word X{R.alph.VId(i)};
        for (int k = 0; k < 100; ++k) {
            Word t = randomWord(R.alph, LetterFilter::CoeffOnly, 6, rng);
            CHECK(compareWords(X, t, R.alph, R.ord) == Cmp::GT);
        }
    }
}

TEST_CASE("order multiplicativity on random triples") {
    Ring R = wexRing();
    std::mt19937_64 rng(12);
    int checked = 0;
    while (checked < 500) {
        Word t = randomWord(R.alph, LetterFilter::All, 4, rng);
        Word u = randomWord(R.alph, LetterFilter::All, 4, rng);
        Word w = randomWord(R.alph, LetterFilter::All, 4, rng);
        if (compareWords(t, u, R.alph, R.ord) != Cmp::LT) continue;
        ++checked;
        CHECK(compareWords(concat(w, t), concat(w, u), R.alph, R.ord) == Cmp::LT);
        CHECK(compareWords(concat(t, w), concat(u, w), R.alph, R.ord) == Cmp::LT);
    }
}

TEST_CASE("module order breaks ties by ascending position") {
    Ring R = wexRing();
    R.rank = 3;
    Word x1{R.alph.vId(0)};
    CHECK(compareTerms(Term{x1, 1}, Term{x1, 2}, R.alph, R.ord) == Cmp::LT);
    CHECK(compareTerms(Term{x1, 2}, Term{x1, 2}, R.alph, R.ord) == Cmp::EQ);
}

TEST_CASE("free product distributes and is associative") {
    Ring R = wexRing();
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        NcPoly f = randomPoly(R, 3, 3, rng);
        NcPoly g = randomPoly(R, 3, 3, rng);
        NcPoly h = randomPoly(R, 3, 3, rng);
        CHECK(mulFree(mulFree(f, g, R), h, R) == mulFree(f, mulFree(g, h, R), R));
        CHECK(mulFree(add(f, g, R), h, R) == add(mulFree(f, h, R), mulFree(g, h, R), R));
        CHECK(mulFree(f, one(), R) == f);
        CHECK(mulFree(one(), f, R) == f);
    }
}

TEST_CASE("parsing the grammar") {
    Ring R = wexRing();
    NcPoly f = parsePoly("2*x1*X1 - x2*X1", R);
    REQUIRE(f.size() == 2);
    // x2*X1 > x1*X1, so the negative monomial leads
    CHECK(f.leadingCoeff() == Scalar(-1));
    CHECK(printPoly(f, R) == "-x2*X1 + 2*x1*X1");

    NcPoly g = parsePoly("X1^2*x1", R);
    REQUIRE(g.size() == 1);
    CHECK(g.leadingTerm().w == Word{R.alph.VId(0), R.alph.VId(0), R.alph.vId(0)});

    CHECK_THROWS_AS(parsePoly("x3", R), ParseError);
    CHECK_THROWS_AS(parsePoly("2*x1 +", R), ParseError);
    CHECK_THROWS_AS(parsePoly("1/2*x1", R), ParseError);  // integer mode
    CHECK(parsePoly("0", R).isZero());
    CHECK(parsePoly("x1 - x1", R).isZero());

    try {
        parsePoly("x1*\n  zz", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
}

TEST_CASE("positions parse and print") {
    Ring R = wexRing();
    R.rank = 2;
    NcPoly f = parsePoly("x1*e2 + x2", R);
    REQUIRE(f.size() == 2);
    // the word comparison dominates the position tie-break
    CHECK(printPoly(f, R) == "x2 + x1*e2");
    CHECK_THROWS_AS(parsePoly("x1*e3", R), ParseError);
}

TEST_CASE("parse is a left inverse of print on random polynomials") {
    Ring R = wexRing();
    std::mt19937_64 rng(14);
    for (int k = 0; k < 200; ++k) {
        NcPoly f = randomPoly(R, 5, 4, rng);
        CHECK(parsePoly(printPoly(f, R), R) == f);
    }
}

TEST_CASE("rational coefficients in field mode") {
    Ring R = xyRing();
    R.mode = coeff::DomainMode::Rationals;
    NcPoly f = parsePoly("1/2*X - 3/4*Y*X", R);
    CHECK(printPoly(f, R) == "-3/4*Y*X + 1/2*X");
    CHECK(parsePoly(printPoly(f, R), R) == f);
}

TEST_CASE("validate_order flags misoriented C relations") {
    Ring R = wexRing();
    // X1*x1 - x1^5*X1: the degree-6 tail beats the intended leading term
    NcPoly bad = parsePoly("X1*x1 - x1^5*X1", R);
    auto report = pres::validateOrder({bad}, R);
    REQUIRE(report.size() == 1);
    CHECK(report[0].code == "OrderOrientation");

    NcPoly good1 = parsePoly("X1*x1 - x2*X1", R);
    NcPoly good2 = parsePoly("X1*x2 - x1*X1", R);
    CHECK(pres::validateOrder({good1, good2}, R).empty());
    CHECK(pres::validateOrder({}, R).empty());
}

TEST_CASE("alphabet rejects reserved and misplaced names") {
    CHECK_THROWS_AS(Alphabet({"e1"}, {"X"}), AlphabetError);
    CHECK_THROWS_AS(Alphabet({"X"}, {"Y"}), AlphabetError);
    CHECK_THROWS_AS(Alphabet({"x"}, {"x"}), AlphabetError);
    CHECK_THROWS_AS(Alphabet({}, {}), AlphabetError);
}
