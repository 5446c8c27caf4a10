#pragma once

#include "bezout/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace bezout {

/// Seeded generator with platform-independent reductions (the standard
/// distributions are not reproducible across library implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi] by modulo reduction.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// numerator in [num_lo, num_hi], denominator in [1, den_max]
    Rational rational(std::int64_t num_lo, std::int64_t num_hi, std::int64_t den_max);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct RandomPolynomialSpec {
    std::size_t max_terms = 6;
    std::uint32_t max_exponent = 8;
    std::int64_t coefficient_bound = 99;
    /// When set, every term has total degree at most this.
    std::optional<std::uint32_t> max_total_degree;
};

/// Nonzero polynomial with 1..max_terms distinct terms and nonzero integer
/// coefficients in [-bound, bound].
Polynomial random_polynomial(Rng& rng, const AmbientRing& ambient, const RandomPolynomialSpec& spec = {});

} // namespace bezout
