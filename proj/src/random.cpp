#include "bezout/random.hpp"

#include "bezout/error.hpp"

namespace bezout {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo) {
        raise(ErrorCode::InvalidArgument, "empty random range");
    }
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(std::int64_t num_lo, std::int64_t num_hi, std::int64_t den_max)
{
    auto num = uniform(num_lo, num_hi);
    auto den = uniform(1, den_max);
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Polynomial random_polynomial(Rng& rng, const AmbientRing& ambient, const RandomPolynomialSpec& spec)
{
    if (spec.max_terms == 0 || spec.coefficient_bound < 1) {
        raise(ErrorCode::InvalidArgument, "random polynomial spec needs at least one nonzero term");
    }
    Polynomial p(ambient);
    auto terms = rng.uniform(1, static_cast<std::int64_t>(spec.max_terms));
    for (std::int64_t t = 0; t < terms; ++t) {
        Monomial m(ambient.size());
        std::int64_t budget = spec.max_total_degree ? std::int64_t{*spec.max_total_degree} : -1;
        // rotate the starting variable so a degree budget is not biased toward x1
        auto start = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ambient.size()) - 1));
        for (std::size_t j = 0; j < ambient.size(); ++j) {
            std::size_t i = (start + j) % ambient.size();
            std::int64_t cap = spec.max_exponent;
            if (budget >= 0) {
                cap = std::min(cap, budget);
            }
            auto e = rng.uniform(0, cap);
            m.set(i, static_cast<std::uint64_t>(e));
            if (budget >= 0) {
                budget -= e;
            }
        }
        auto c = rng.uniform(1, spec.coefficient_bound);
        if (rng.uniform(0, 1) == 1) {
            c = -c;
        }
        if (p.coefficient(m) == 0) {
            p.add_term(m, Rational(static_cast<long>(c)));
        }
    }
    return p;
}

} // namespace bezout
