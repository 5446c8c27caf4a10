#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bezout/elimination.hpp"
#include "bezout/error.hpp"
#include "bezout/oracle.hpp"
#include "bezout/parser.hpp"
#include "bezout/random.hpp"

using namespace bezout;

namespace {

const AmbientRing X = AmbientRing::standard(2);

Polynomial P(const char* s)
{
    return parse(s, X);
}

std::uint64_t count_at(std::vector<Polynomial> sys, long a1 = 0, long a2 = 0)
{
    std::vector<Rational> a{Rational(a1), Rational(a2)};
    return fiber_count(sys, a).count;
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("hand-countable systems")
{
    CHECK(count_at({P("x1 - 1"), P("x2 - 2")}) == 1);
    CHECK(count_at({P("x1*x2 - 1"), P("x1 - x2")}) == 2);
    CHECK(count_at({P("x1*x2 - 1"), P("x1")}) == 0);
    CHECK(count_at({P("x2 - x1^2"), P("x2")}) == 2); // tangency counts twice
    CHECK(count_at({P("(x1-1)*(x1-2)*(x1-3)"), P("(x2+1)*(x2-5)")}) == 6);
    CHECK(count_at({P("x1^2 + x2^2 - 1"), P("x1^2 - x2^2")}) == 4);
    CHECK(count_at({P("x1^2 + x2^2"), P("x1 - 7")}) == 2); // complex roots count too
    CHECK(count_at({P("x1"), P("5")}) == 0);
}

TEST_CASE("triangular systems: deg p times the y-degree")
{
    Rng rng(79);
    RandomPolynomialSpec spec;
    spec.max_total_degree = 3;
    spec.max_terms = 4;
    AmbientRing one({"x1"});
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_polynomial(rng, X, spec);
        p = specialize(p, 1, Rational(1)); // a polynomial in x1 alone
        if (p.is_constant()) {
            continue;
        }
        auto m = rng.uniform(1, 3);
        // monic of degree m in x2
        Polynomial q = pow(P("x2"), static_cast<std::uint64_t>(m)) +
                       P("x1 + 1") * pow(P("x2"), static_cast<std::uint64_t>(m - 1)) +
                       specialize(random_polynomial(rng, X, spec), 1, Rational(2));
        std::vector<Polynomial> sys{p, q};
        if (!gcd(p, q).is_constant()) {
            continue;
        }
        CHECK(count_at(sys) == static_cast<std::uint64_t>(p.degree_in(0) * m));
    }
}

TEST_CASE("fiber errors")
{
    CHECK(code_of([] { count_at({P("x1*x2"), P("x1")}); }) == ErrorCode::InfiniteFiber);
    CHECK(code_of([] { count_at({P("x1"), P("x1")}, 0, 0); }) == ErrorCode::InfiniteFiber);
    CHECK(code_of([] { count_at({P("3"), P("x1")}, 3, 0); }) == ErrorCode::InfiniteFiber);
    AmbientRing three = AmbientRing::standard(3);
    std::vector<Polynomial> tri{parse("x1", three), parse("x2", three)};
    std::vector<Rational> a{Rational(0), Rational(0)};
    CHECK(code_of([&] { fiber_count(tri, a); }) == ErrorCode::UnsupportedArity);
}

TEST_CASE("cusp family counts")
{
    for (int k = 1; k <= 2; ++k) {
        std::vector<Polynomial> sys{P("x1 + (x1^2 - x2^3)^2"), pow(P("x1^2 - x2^3"), static_cast<std::uint64_t>(k))};
        std::vector<Rational> a{Rational(7, 3), Rational(-5, 2)};
        auto fc = fiber_count(sys, a);
        CHECK(fc.count == static_cast<std::uint64_t>(3 * k));
        CHECK(fc.orders[0].resultant_degree == fc.orders[1].resultant_degree);
        CHECK(fc.orders[0].eliminated == "x2");
        CHECK(fc.orders[1].eliminated == "x1");
    }
}

TEST_CASE("translation covariance and the Bezout cap")
{
    Rng rng(83);
    RandomPolynomialSpec spec;
    spec.max_total_degree = 3;
    spec.max_terms = 4;
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        std::vector<Polynomial> sys{random_polynomial(rng, X, spec), random_polynomial(rng, X, spec)};
        if (sys[0].is_constant() || sys[1].is_constant()) {
            continue;
        }
        std::vector<Rational> a{rng.rational(-50, 50, 10), rng.rational(-50, 50, 10)};
        std::vector<Polynomial> shifted{sys[0] - Polynomial(X, a[0]), sys[1] - Polynomial(X, a[1])};
        std::vector<Rational> zero{Rational(0), Rational(0)};
        try {
            auto fc = fiber_count(sys, a);
            CHECK(fc.count == fiber_count(shifted, zero).count);
            CHECK(fc.count <= static_cast<std::uint64_t>(sys[0].total_degree() * sys[1].total_degree()));
            CHECK(fc.orders[0].resultant_degree == fc.orders[1].resultant_degree);
            ++checked;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InfiniteFiber);
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("generic probe")
{
    std::vector<Polynomial> f1{P("x1 + (x1^2 - x2^3)^2"), P("x1^2 - x2^3")};
    ProbeOptions opt;
    opt.trials = 5;
    opt.seed = 9;
    auto r = generic_probe(f1, opt);
    CHECK(r.consensus.count == 3);
    CHECK(r.accepted == 5);

    std::vector<Polynomial> lin{P("x1"), P("x2")};
    opt.trials = 3;
    CHECK(generic_probe(lin, opt).consensus.count == 1);

    // (x1*x2, x1) has an infinite fiber over the origin and one point elsewhere
    std::vector<Polynomial> degenerate{P("x1*x2"), P("x1")};
    opt.forced_points = {{Rational(0), Rational(0)}};
    auto d = generic_probe(degenerate, opt);
    CHECK(d.trials.size() == 4);
    CHECK(d.trials[0].failure == ErrorCode::InfiniteFiber);
    CHECK(d.consensus.count == 1);
    CHECK(d.accepted == 3);

    opt.forced_points.clear();
    opt.trials = 2;
    CHECK(code_of([&] { generic_probe(lin, opt); }) == ErrorCode::InvalidArgument);
    // parallel lines: generically an empty fiber, which is an accepted count of 0
    opt.trials = 3;
    std::vector<Polynomial> parallel{P("x1 + x2"), P("x1 + x2")};
    CHECK(generic_probe(parallel, opt).consensus.count == 0);
}

TEST_CASE("probe is deterministic and thread-count independent")
{
    std::vector<Polynomial> sys{P("x1^2 + x2^3 - x1*x2"), P("x1 - x2^2 + 3")};
    ProbeOptions a;
    a.trials = 6;
    a.seed = 1234;
    ProbeOptions b = a;
    b.threads = 3;
    auto ra = generic_probe(sys, a);
    auto rb = generic_probe(sys, b);
    REQUIRE(ra.trials.size() == rb.trials.size());
    for (std::size_t i = 0; i < ra.trials.size(); ++i) {
        CHECK(ra.trials[i].point == rb.trials[i].point);
        CHECK(ra.trials[i].result->count == rb.trials[i].result->count);
    }
    CHECK(ra.consensus.count == rb.consensus.count);
    CHECK(ra.consensus.shift == rb.consensus.shift);
}
