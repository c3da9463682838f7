#include <catch2/catch_amalgamated.hpp>

#include "wgb/scalar.hpp"

#include <random>

using namespace wgb::coeff;

static const DomainMode ZZ = DomainMode::Integers;
static const DomainMode QQ = DomainMode::Rationals;

TEST_CASE("canonical remainders over Z") {
    CHECK(canonRem(Scalar(7), Scalar(3), ZZ) == Scalar(1));
    CHECK(canonRem(Scalar(-1), Scalar(3), ZZ) == Scalar(2));
    CHECK(canonRem(Scalar(5), Scalar(0), ZZ) == Scalar(5));
    CHECK(canonRem(Scalar(5), Scalar(-3), ZZ) == Scalar(2));
    CHECK(canonRem(Scalar(0), Scalar(4), ZZ) == Scalar(0));
}

TEST_CASE("canonical remainder is idempotent and congruence-compatible") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int k = 0; k < 500; ++k) {
        Scalar c(d(rng)), m(d(rng)), e(d(rng));
        Scalar r = canonRem(c, m, ZZ);
        CHECK(canonRem(r, m, ZZ) == r);
        // canonRem(c,m) == canonRem(e,m) iff m | (c-e)
        bool same = canonRem(e, m, ZZ) == r;
        CHECK(same == divides(m, c - e, ZZ));
    }
}

TEST_CASE("field mode collapses every nonzero ideal") {
    CHECK(canonRem(Scalar(7), Scalar(3), QQ) == Scalar(0));
    CHECK(canonRem(Scalar(7), Scalar(0), QQ) == Scalar(7));
    Scalar half(Int(1), Int(2));
    CHECK(canonRem(half, Scalar(5), QQ) == Scalar(0));
}

TEST_CASE("bezout identities") {
    auto b = bezout(Scalar(4), Scalar(6), ZZ);
    CHECK(b.g == Scalar(2));
    CHECK(b.s == Scalar(-1));
    CHECK(b.t == Scalar(1));

    b = bezout(Scalar(2), Scalar(3), ZZ);
    CHECK(b.g == Scalar(1));
    CHECK(b.s == Scalar(-1));
    CHECK(b.t == Scalar(1));

    b = bezout(Scalar(5), Scalar(0), ZZ);
    CHECK(b.g == Scalar(5));
    CHECK(b.s == Scalar(1));
    CHECK(b.t == Scalar(0));

    CHECK_THROWS_AS(bezout(Scalar(0), Scalar(0), ZZ), DomainError);
}

TEST_CASE("bezout post identity on random pairs") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int k = 0; k < 1000; ++k) {
        Scalar a(d(rng)), b2(d(rng));
        if (a.isZero() && b2.isZero()) continue;
        auto bd = bezout(a, b2, ZZ);
        CHECK(bd.g == bd.s * a + bd.t * b2);
        CHECK(!bd.g.isNegative());
        CHECK(divides(bd.g, a, ZZ));
        CHECK(divides(bd.g, b2, ZZ));
    }
}

TEST_CASE("strong ideal basis") {
    auto s = strongIdealBasis({Scalar(4), Scalar(6)}, ZZ);
    CHECK(s.g == Scalar(2));
    REQUIRE(s.combination.size() == 2);
    CHECK(s.combination[0] == Scalar(-1));
    CHECK(s.combination[1] == Scalar(1));

    s = strongIdealBasis({Scalar(2), Scalar(1)}, ZZ);
    CHECK(s.g == Scalar(1));
    CHECK(s.combination[0] == Scalar(0));
    CHECK(s.combination[1] == Scalar(1));

    s = strongIdealBasis({Scalar(3)}, ZZ);
    CHECK(s.g == Scalar(3));
    CHECK(s.combination[0] == Scalar(1));

    CHECK_THROWS_AS(strongIdealBasis({Scalar(0), Scalar(0)}, ZZ), DomainError);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int k = 0; k < 200; ++k) {
        std::vector<Scalar> gens{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
        bool allZero = gens[0].isZero() && gens[1].isZero() && gens[2].isZero();
        if (allZero) continue;
        auto sb = strongIdealBasis(gens, ZZ);
        Scalar acc(0);
        for (size_t j = 0; j < gens.size(); ++j) acc += sb.combination[j] * gens[j];
        CHECK(acc == sb.g);
        for (const auto& g : gens) CHECK(divides(sb.g, g, ZZ));
    }
}

TEST_CASE("scalar parsing and printing") {
    CHECK(parseScalar("42").str() == "42");
    CHECK(parseScalar("-3/6").str() == "-1/2");
    CHECK_THROWS_AS(parseScalar("x"), DomainError);
    Scalar big = parseScalar("123456789012345678901234567890");
    CHECK((big * big) == parseScalar("15241578753238836750495351562536198787501905199875019052100"));
}
