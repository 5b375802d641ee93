#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "basis4/literal.hpp"
#include "support.hpp"

using namespace basis4;

namespace {

// Independent fraction oracle over big integers, reduced by hand.
struct Frac {
    BigInt n;
    BigInt d;

    Frac(BigInt num, BigInt den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g == 0) g = 1;
        n = num / g;
        d = den / g;
    }
    Frac add(const Frac& o) const { return {n * o.d + o.n * d, d * o.d}; }
    Frac sub(const Frac& o) const { return {n * o.d - o.n * d, d * o.d}; }
    Frac mul(const Frac& o) const { return {n * o.n, d * o.d}; }
    Frac div(const Frac& o) const { return {n * o.d, d * o.n}; }
    bool eq(const Rational& r) const { return numerator(r) == n && denominator(r) == d; }
};

}  // namespace

TEST_CASE("rational arithmetic agrees with the fraction oracle") {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int k = 0; k < 10000; ++k) {
        long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        Rational a(an, ad), b(bn, bd);
        Frac fa{BigInt(an), BigInt(ad)};
        Frac fb{BigInt(bn), BigInt(bd)};
        REQUIRE(fa.add(fb).eq(a + b));
        REQUIRE(fa.sub(fb).eq(a - b));
        REQUIRE(fa.mul(fb).eq(a * b));
        if (bn != 0) REQUIRE(fa.div(fb).eq(a / b));
    }
}

TEST_CASE("rational canonical form invariants hold after arithmetic") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
        Rational a = testsupport::rand_rational(rng, 50, 50);
        Rational b = testsupport::rand_rational(rng, 50, 50);
        Rational c = a * b + a - b;
        REQUIRE(denominator(c) > 0);
        REQUIRE(boost::multiprecision::gcd(BigInt(abs(numerator(c))), denominator(c)) == 1);
    }
}

TEST_CASE("exact_sign") {
    CHECK(exact_sign(Rational(0)) == 0);
    CHECK(exact_sign(Rational(-36, 4)) == -1);
    CHECK(exact_sign(Rational(9, 2)) == 1);
}

TEST_CASE("sqrt_exact on rationals") {
    CHECK(*sqrt_exact(Rational(4)) == 2);
    CHECK(*sqrt_exact(Rational(9, 4)) == Rational(3, 2));
    CHECK(!sqrt_exact(Rational(2)).has_value());
    CHECK_THROWS_AS(sqrt_exact(Rational(-2)), DomainError);
}

TEST_CASE("sqrt_exact on Gaussian rationals") {
    GaussianRational minus_2i(Rational(0), Rational(-2));
    auto r = sqrt_exact(minus_2i);
    REQUIRE(r.has_value());
    CHECK(*r == GaussianRational(Rational(1), Rational(-1)));
    CHECK(*r * *r == minus_2i);

    CHECK(!sqrt_exact(GaussianRational(Rational(2))).has_value());
    CHECK(*sqrt_exact(GaussianRational(Rational(-4))) ==
          GaussianRational(Rational(0), Rational(2)));
    CHECK(!sqrt_exact(GaussianRational(Rational(-2))).has_value());
    CHECK(*sqrt_exact(GaussianRational(Rational(0))) == GaussianRational(0));

    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
        GaussianRational z = testsupport::rand_gaussian(rng);
        GaussianRational sq = z * z;
        auto root = sqrt_exact(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq);
    }
}

TEST_CASE("conjugation") {
    CHECK(conj(Rational(3, 2)) == Rational(3, 2));
    CHECK(conj(GaussianRational::i()) == -GaussianRational::i());
    CHECK(conj(GaussianRational(2, 3)) == GaussianRational(2, Rational(-3)));

    std::mt19937_64 rng(13);
    for (int k = 0; k < 1000; ++k) {
        GaussianRational x = testsupport::rand_gaussian(rng);
        GaussianRational y = testsupport::rand_gaussian(rng);
        CHECK(conj(conj(x)) == x);
        CHECK(conj(x * y) == conj(x) * conj(y));
    }
}

TEST_CASE("Gaussian division and closure") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 1000; ++k) {
        GaussianRational x = testsupport::rand_gaussian(rng);
        GaussianRational y = testsupport::rand_gaussian(rng);
        if (is_zero(y)) continue;
        CHECK((x / y) * y == x);
    }
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DomainError);
}

TEST_CASE("float scalar carries its tolerance") {
    FloatScalar a(1.0, 0.0, 1e-6);
    FloatScalar b(1.0 + 5e-7, 0.0, 1e-12);
    CHECK(a == b);  // comparison at the larger tolerance
    CHECK((a + b).eps == doctest::Approx(1e-6));
    CHECK(is_zero(FloatScalar(1e-13)));
    CHECK(!is_zero(FloatScalar(1e-11)));
    CHECK(float_sign(FloatScalar(1e-13)).decided_by_eps);
    CHECK(float_sign(FloatScalar(-3.0)).sign == -1);
}

TEST_CASE("scalar literal grammar round trips") {
    auto parses_to = [](const std::string& text, const GaussianRational& want) {
        CHECK(parse_scalar<GaussianRational>(text) == want);
    };
    parses_to("0", GaussianRational(0));
    parses_to("5", GaussianRational(5));
    parses_to("-1/2", GaussianRational(Rational(-1, 2)));
    parses_to("i", GaussianRational::i());
    parses_to("-i", -GaussianRational::i());
    parses_to("2i", GaussianRational(Rational(0), Rational(2)));
    parses_to("2+3i", GaussianRational(2, 3));
    parses_to("-3/4+9/4i", GaussianRational(Rational(-3, 4), Rational(9, 4)));
    parses_to("1-i", GaussianRational(Rational(1), Rational(-1)));
    parses_to("1.5", GaussianRational(Rational(3, 2)));
    parses_to("09", GaussianRational(9));  // plain digits, never an octal prefix
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("0x1"), ParseError);

    std::mt19937_64 rng(19);
    for (int k = 0; k < 2000; ++k) {
        GaussianRational z = testsupport::rand_gaussian(rng, 40, 40);
        CHECK(parse_scalar<GaussianRational>(format_scalar(z)) == z);
    }
}

TEST_CASE("scalar literal errors carry positions") {
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("1 /2"), ParseError);
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("1//2"), ParseError);
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("2+3"), ParseError);   // duplicate real term
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("i+2i"), ParseError);  // duplicate imaginary
    CHECK_THROWS_AS(parse_scalar<GaussianRational>(""), ParseError);
    CHECK_THROWS_AS(parse_scalar<GaussianRational>("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar<Rational>("2+3i"), ParseError);  // complex over real field
    try {
        parse_scalar<GaussianRational>("3/q");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("vector literals") {
    auto v = parse_vec4<GaussianRational>("(i,1,-1/2,-1/2)");
    CHECK(v[0] == GaussianRational::i());
    CHECK(v[3] == GaussianRational(Rational(-1, 2)));
    CHECK(format_vec(v) == "(i,1,-1/2,-1/2)");
    CHECK_THROWS_AS(parse_vec4<GaussianRational>("(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parse_vec4<GaussianRational>("(1,2,3,4,5)"), ParseError);
    CHECK_THROWS_AS(parse_vec4<GaussianRational>("1,2,3,4"), ParseError);
    CHECK(parse_vec2<Rational>("(1,-2)")[1] == Rational(-2));
}
