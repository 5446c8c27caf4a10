#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bezout/error.hpp"
#include "bezout/parser.hpp"
#include "bezout/polynomial.hpp"
#include "bezout/random.hpp"

using namespace bezout;

namespace {

const AmbientRing X = AmbientRing::standard(2);

Polynomial P(const char* s, const AmbientRing& amb = X)
{
    return parse(s, amb);
}

// k-fold product, the reference for pow
Polynomial repeated(const Polynomial& p, unsigned k)
{
    Polynomial r(p.ambient(), Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        r = r * p;
    }
    return r;
}

} // namespace

TEST_CASE("rational helpers")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-0/7") == 0);
    CHECK(to_string(Rational(-3, 1)) == "-3");
    CHECK(to_string(make_rational(Integer(4), Integer(6))) == "2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    Rational z = make_rational(Integer(0), Integer(5));
    CHECK(z.get_den() == 1);
}

TEST_CASE("ambient ring validation")
{
    CHECK_THROWS_AS(AmbientRing({}), Error);
    CHECK_THROWS_AS(AmbientRing({"x", "x"}), Error);
    CHECK_THROWS_AS(AmbientRing({"1x"}), Error);
    CHECK_THROWS_AS(AmbientRing({"x-y"}), Error);
    AmbientRing r({"a", "b_2"});
    CHECK(r.index_of("b_2") == 1);
    CHECK_FALSE(r.index_of("c"));
    CHECK(r == AmbientRing({"a", "b_2"}));
}

TEST_CASE("monomial exponent overflow is a hard error")
{
    Monomial m(1);
    CHECK_THROWS_AS(m.set(0, 0x80000000ULL), Error);
    Monomial big({0x7fffffffU});
    CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("grlex order")
{
    CHECK(compare_grlex(Monomial{2, 0}, Monomial{0, 3}) < 0);
    CHECK(compare_grlex(Monomial{2, 1}, Monomial{1, 2}) > 0);
    Polynomial p = P("x2^3 + x1^2 + x1 + 1");
    CHECK(to_string(p) == "x2^3 + x1^2 + x1 + 1");
}

TEST_CASE("arith basics")
{
    CHECK(arith(P("x1"), P("-x1"), ArithOp::Add).is_zero());
    CHECK(arith(P("x1 - x2"), P("x1 + x2"), ArithOp::Mul) == P("x1^2 - x2^2"));
    CHECK(arith(P("x1"), P("x2"), ArithOp::Sub) == P("x1 - x2"));
    AmbientRing other({"x1", "x2", "x3"});
    CHECK_THROWS_AS(arith(P("x1"), P("x1", other), ArithOp::Add), Error);
    try {
        arith(P("x1"), P("x1", other), ArithOp::Add);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AmbientMismatch);
    }
}

TEST_CASE("ring laws on random triples")
{
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto a = random_polynomial(rng, X);
        auto b = random_polynomial(rng, X);
        auto c = random_polynomial(rng, X);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Polynomial(X, Rational(1)) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("pow")
{
    Polynomial h = P("x1^2 - x2^3");
    CHECK(pow(h, 0) == Polynomial(X, Rational(1)));
    CHECK(pow(h, 2) == P("x1^4 - 2*x1^2*x2^3 + x2^6"));
    CHECK(pow(h, 3).num_terms() == 4);
    for (unsigned k = 0; k <= 7; ++k) {
        CHECK(pow(h, k) == repeated(h, k));
    }
}

TEST_CASE("substitute")
{
    AmbientRing st({"x1", "x2", "t"});
    AmbientRing s_t({"s", "t"});
    auto r = substitute(P("s*t", s_t), {{"s", P("x1^2 - x2^3", st)}}, st);
    CHECK(r == P("(x1^2 - x2^3)*t", st));

    CHECK(substitute(P("x1"), {{"x1", P("x1")}}, X) == P("x1"));

    AmbientRing s_only({"s"});
    AmbientRing x1_only({"x1"});
    CHECK(substitute(P("(s+1)^2", s_only), {{"s", P("x1 - 1", x1_only)}}, x1_only) == P("x1^2", x1_only));

    CHECK_THROWS_AS(substitute(P("x1"), {{"q", P("x1")}}, X), Error);
}

TEST_CASE("substitute is a ring homomorphism")
{
    Rng rng(11);
    AmbientRing uv({"u", "v"});
    for (int i = 0; i < 50; ++i) {
        RandomPolynomialSpec small;
        small.max_exponent = 3;
        small.max_terms = 4;
        auto a = random_polynomial(rng, uv, small);
        auto b = random_polynomial(rng, uv, small);
        std::map<std::string, Polynomial> img{{"u", random_polynomial(rng, X, small)},
                                              {"v", random_polynomial(rng, X, small)}};
        CHECK(substitute(a * b, img, X) == substitute(a, img, X) * substitute(b, img, X));
        CHECK(substitute(a + b, img, X) == substitute(a, img, X) + substitute(b, img, X));
    }
}

TEST_CASE("specialize, evaluate, coefficients")
{
    Polynomial p = P("x1^2*x2 + 3*x2 - 1/2");
    CHECK(specialize(p, 0, Rational(2)) == P("7*x2 - 1/2"));
    std::vector<Rational> pt{Rational(2), Rational(1, 3)};
    CHECK(evaluate(p, pt) == Rational(7, 3) - Rational(1, 2));
    auto cs = coefficients_in(p, 1);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == P("-1/2"));
    CHECK(cs[1] == P("x1^2 + 3"));
    CHECK(from_coefficients(cs, 1, X) == p);
}

TEST_CASE("exact division")
{
    auto q = divide_exact(P("x1^2 - x2^2"), P("x1 - x2"));
    REQUIRE(q);
    CHECK(*q == P("x1 + x2"));
    CHECK_FALSE(divide_exact(P("x1^2 + x2"), P("x1 - x2")));
    CHECK_THROWS_AS(divide_exact(P("x1"), P("0")), Error);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto a = random_polynomial(rng, X);
        auto b = random_polynomial(rng, X);
        auto d = divide_exact(a * b, b);
        REQUIRE(d);
        CHECK(*d == a);
    }
}

TEST_CASE("degree queries")
{
    Polynomial p = P("x1^3*x2 + x2^2");
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in(0) == 3);
    CHECK(p.degree_in(1) == 2);
    CHECK(Polynomial(X).total_degree() == -1);
    CHECK(P("5").is_constant());
    CHECK(Polynomial(X).is_constant());
    CHECK_THROWS_AS(Polynomial(X).leading_coefficient(), Error);
    CHECK(p.leading_monomial() == Monomial{3, 1});
}
