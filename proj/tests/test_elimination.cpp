#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bezout/elimination.hpp"
#include "bezout/error.hpp"
#include "bezout/parser.hpp"
#include "bezout/random.hpp"

using namespace bezout;

namespace {

const AmbientRing XY({"x", "y"});
const AmbientRing X12 = AmbientRing::standard(2);

Polynomial P(const char* s, const AmbientRing& amb = XY)
{
    return parse(s, amb);
}

// Reference: Sylvester determinant of univariate rational coefficient lists by
// Gaussian elimination over Q, same ascending row layout.
Rational sylvester_det(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    const std::size_t N = m + n;
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) {
            M[r][r + i] = a[i];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) {
            M[n + r][r + j] = b[j];
        }
    }
    Rational det(1);
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = c;
        while (piv < N && M[piv][c] == 0) {
            ++piv;
        }
        if (piv == N) {
            return Rational(0);
        }
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t r = c + 1; r < N; ++r) {
            Rational f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < N; ++k) {
                M[r][k] -= f * M[c][k];
            }
        }
    }
    return det;
}

std::vector<Rational> y_coeffs_at(const Polynomial& p, const Rational& x)
{
    std::vector<Rational> out;
    for (const auto& c : coefficients_in(specialize(p, 0, x), 1)) {
        out.push_back(c.constant_term());
    }
    return out;
}

bool associate(const Polynomial& a, const Polynomial& b)
{
    return normalize(a) == normalize(b);
}

} // namespace

TEST_CASE("resultant examples")
{
    CHECK(resultant(P("x - y"), P("x + y"), "y") == P("2*x"));
    CHECK(resultant(P("y^2 - x"), P("y - 1"), "y") == P("1 - x"));
    Polynomial p = P("x*y^2 + y - 3");
    CHECK(resultant(p, p, "y").is_zero());
    CHECK_THROWS_AS(resultant(P("x"), P("y"), "y"), Error);
    try {
        resultant(P("x + 1"), P("y"), "y");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeZero);
    }
}

TEST_CASE("dense and generic routes agree")
{
    Rng rng(5);
    RandomPolynomialSpec spec;
    spec.max_exponent = 4;
    for (int i = 0; i < 60; ++i) {
        auto p = random_polynomial(rng, XY, spec);
        auto q = random_polynomial(rng, XY, spec);
        if (p.degree_in(1) < 1 || q.degree_in(1) < 1) {
            continue;
        }
        if (i % 2 == 0) {
            p *= Rational(3, 7);
        }
        CHECK(resultant(p, q, 1) == resultant(p, q, 1, ResultantPath::Generic));
    }
    // three variables always take the generic route
    AmbientRing xyz({"x", "y", "z"});
    Polynomial a = parse("x*y + z", xyz);
    Polynomial b = parse("y^2 - x*z", xyz);
    CHECK(resultant(a, b, "y") == parse("z^2 - x^3*z", xyz));
}

TEST_CASE("resultant matches a Gaussian-elimination determinant after specialization")
{
    Rng rng(17);
    RandomPolynomialSpec spec;
    spec.max_exponent = 4;
    int checked = 0;
    for (int i = 0; i < 80; ++i) {
        auto p = random_polynomial(rng, XY, spec);
        auto q = random_polynomial(rng, XY, spec);
        if (p.degree_in(1) < 1 || q.degree_in(1) < 1) {
            continue;
        }
        Rational a = rng.rational(-20, 20, 5);
        auto pa = y_coeffs_at(p, a);
        auto qa = y_coeffs_at(q, a);
        // only valid when the y-degree does not drop at x = a
        if (pa.size() != static_cast<std::size_t>(p.degree_in(1) + 1) ||
            qa.size() != static_cast<std::size_t>(q.degree_in(1) + 1)) {
            continue;
        }
        Polynomial r = resultant(p, q, 1);
        std::vector<Rational> pt{a, Rational(0)};
        CHECK(evaluate(r, pt) == sylvester_det(pa, qa));
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("resultant is multiplicative in each argument")
{
    Rng rng(23);
    RandomPolynomialSpec spec;
    spec.max_exponent = 3;
    spec.max_terms = 4;
    int checked = 0;
    while (checked < 30) {
        auto p1 = random_polynomial(rng, XY, spec);
        auto p2 = random_polynomial(rng, XY, spec);
        auto q = random_polynomial(rng, XY, spec);
        if (p1.degree_in(1) < 1 || p2.degree_in(1) < 1 || q.degree_in(1) < 1) {
            continue;
        }
        CHECK(resultant(p1 * p2, q, 1) == resultant(p1, q, 1) * resultant(p2, q, 1));
        CHECK(resultant(q, p1 * p2, 1) == resultant(q, p1, 1) * resultant(q, p2, 1));
        ++checked;
    }
}

TEST_CASE("resultant vanishes on constructed common roots")
{
    Rng rng(29);
    RandomPolynomialSpec spec;
    spec.max_exponent = 2;
    spec.max_terms = 3;
    for (int i = 0; i < 40; ++i) {
        // p and q share the factor (y - r(x)) so Res vanishes identically,
        // and at every specialization the univariate gcd is non-constant
        auto r = random_polynomial(rng, XY, spec);
        Polynomial root = P("y") - specialize(r, 1, Rational(0));
        auto u = random_polynomial(rng, XY, spec);
        auto v = random_polynomial(rng, XY, spec);
        Polynomial p = root * (u + P("1"));
        Polynomial q = root * (v + P("y^2 + 2"));
        if (p.degree_in(1) < 1 || q.degree_in(1) < 1) {
            continue;
        }
        CHECK(resultant(p, q, 1).is_zero());
        Rational a = rng.rational(-10, 10, 3);
        CHECK_FALSE(gcd(specialize(p, 0, a), specialize(q, 0, a)).is_constant());
    }
    // generic pair: Res(a) = 0 exactly at shared roots
    Polynomial p = P("y^2 - x");
    Polynomial q = P("y - 2");
    Polynomial r = resultant(p, q, 1);
    for (int xv = -3; xv <= 6; ++xv) {
        std::vector<Rational> pt{Rational(xv), Rational(0)};
        bool shared = !gcd(specialize(p, 0, Rational(xv)), specialize(q, 0, Rational(xv))).is_constant();
        CHECK((evaluate(r, pt) == 0) == shared);
    }
}

TEST_CASE("gcd examples")
{
    CHECK(gcd(P("x1^2 - x2^2", X12), P("x1 - x2", X12)) == P("x1 - x2", X12));
    Polynomial p = P("-2/3*x1^2 + 4*x2", X12);
    CHECK(gcd(p, Polynomial(X12)) == normalize(p));
    CHECK(gcd(Polynomial(X12), p) == P("x1^2 - 6*x2", X12));
    CHECK(gcd(P("x1^2*x2", X12), P("x1*x2^2", X12)) == P("x1*x2", X12));
    CHECK(gcd(P("3", X12), P("x1", X12)) == P("1", X12));
    CHECK(gcd(P("x1^3 - x1", X12), P("x1^2 + x1", X12)) == P("x1^2 + x1", X12));
    AmbientRing xyz({"x", "y", "z"});
    CHECK_THROWS_AS(gcd(parse("x*y", xyz), parse("z", xyz)), Error);
    // three-variable ambient is fine when only two are used
    CHECK(gcd(parse("x*y", xyz), parse("x^2", xyz)) == parse("x", xyz));
}

TEST_CASE("gcd(p r, q r) = gcd(p, q) r up to a constant")
{
    Rng rng(31);
    RandomPolynomialSpec spec;
    spec.max_total_degree = 3;
    spec.max_terms = 4;
    for (int i = 0; i < 150; ++i) {
        auto p = random_polynomial(rng, XY, spec);
        auto q = random_polynomial(rng, XY, spec);
        auto r = random_polynomial(rng, XY, spec);
        Polynomial g = gcd(p * r, q * r);
        CHECK(associate(g, gcd(p, q) * r));
        CHECK(divide_exact(p * r, g));
        CHECK(divide_exact(q * r, g));
        CHECK(g.leading_coefficient() > 0);
    }
}

TEST_CASE("pseudo-remainder identity")
{
    Polynomial a = P("x*y^3 + y - 1");
    Polynomial b = P("x^2*y + 1");
    Polynomial r = pseudo_remainder(a, b, 1);
    CHECK(r.degree_in(1) < 1);
    // lc^(3-1+1) * a - r is a multiple of b
    Polynomial lc = P("x^2");
    CHECK(divide_exact(pow(lc, 3) * a - r, b));
}
