#include <doctest.h>

#include "flagdress/errors.hpp"
#include "flagdress/rational.hpp"

#include <random>
#include <vector>

using flagdress::ExtRational;
using flagdress::Rational;

namespace {

// Mixes small fractions with values near the int64 boundary so both the fast
// path and the GMP fallback get exercised.
Rational draw(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<std::int64_t> small(-12, 12);
    std::uniform_int_distribution<std::int64_t> den(1, 9);
    switch (kind(rng)) {
    case 0: return Rational(small(rng));
    case 1:
    case 2: return Rational(small(rng), den(rng));
    case 3: return Rational(std::numeric_limits<std::int64_t>::max() - den(rng), den(rng));
    default: {
        mpz_class big = mpz_class(1) << 90;
        big += static_cast<long>(small(rng));
        return Rational(mpq_class(big, mpz_class(static_cast<long>(den(rng)))));
    }
    }
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, -7).str() == "0");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(10, 5).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), flagdress::DomainError);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse(" +7 ") == Rational(7));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::parse("1/0"), flagdress::ParseError);
    try {
        Rational::parse("12x");
        FAIL("accepted garbage");
    } catch (const flagdress::ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(Rational::parse(""), flagdress::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), flagdress::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), flagdress::ParseError);
}

TEST_CASE("overflow promotes to GMP and demotes back") {
    const Rational big = Rational(std::numeric_limits<std::int64_t>::max());
    Rational sum = big + Rational(1);
    CHECK_FALSE(sum.is_small());
    CHECK(sum.str() == "9223372036854775808");
    Rational back = sum - Rational(1);
    CHECK(back == big);
    CHECK(back.is_small());
    CHECK((big * big / big) == big);
    CHECK_THROWS_AS(big / Rational(0), flagdress::DomainError);
}

TEST_CASE("field axioms on random triples, checked against mpq") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 3000; ++trial) {
        const Rational a = draw(rng), b = draw(rng), c = draw(rng);
        const mpq_class qa = a.to_mpq(), qb = b.to_mpq(), qc = c.to_mpq();
        CHECK((a + b).to_mpq() == mpq_class(qa + qb));
        CHECK((a - b).to_mpq() == mpq_class(qa - qb));
        CHECK((a * b).to_mpq() == mpq_class(qa * qb));
        if (!b.is_zero()) CHECK((a / b).to_mpq() == mpq_class(qa / qb));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(((a <=> b) == (cmp(qa, qb) <=> 0)));
        CHECK(Rational::parse((a * c).str()) == a * c);
    }
}

TEST_CASE("extended rationals") {
    const ExtRational inf = ExtRational::infinity();
    const ExtRational one(Rational(1));
    CHECK((inf + one).is_infinite());
    CHECK(one < inf);
    CHECK(inf.str() == "inf");
    CHECK(ExtRational::parse("inf") == inf);
    CHECK(ExtRational::parse("-5/3") == ExtRational(Rational(-5, 3)));
    CHECK_THROWS_AS(inf.value(), flagdress::DomainError);

    // min and + are commutative and associative, +inf absorbs; exhaustive
    // over a small value set.
    std::vector<ExtRational> vals{inf, ExtRational(Rational(-1)), ExtRational(Rational(0)), ExtRational(Rational(1, 2))};
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK(a + b == b + a);
            CHECK(min(a, b) == min(b, a));
            CHECK((a + inf).is_infinite());
            CHECK(min(a, inf) == a);
            for (const auto& c : vals) {
                CHECK((a + b) + c == a + (b + c));
                CHECK(min(min(a, b), c) == min(a, min(b, c)));
            }
        }
}

TEST_CASE("Eigen matrices of rationals") {
    flagdress::QMatrix m(2, 2);
    m << Rational(1), Rational(2), Rational(3), Rational(4);
    flagdress::QVector v(2);
    v << Rational(1, 2), Rational(-1);
    flagdress::QVector r = m * v;
    CHECK(r(0) == Rational(-3, 2));
    CHECK(r(1) == Rational(-5, 2));
}
