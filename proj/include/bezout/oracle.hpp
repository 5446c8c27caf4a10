#pragma once

#include "bezout/error.hpp"
#include "bezout/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bezout {

/// How one elimination order produced its count.
struct EliminationDetail {
    std::string eliminated;       ///< variable removed by the resultant
    std::int64_t shear = 0;       ///< c in other -> other + c * eliminated
    std::int64_t resultant_degree = 0;
};

/// Number of points of f^-1(a) counted with multiplicity.
struct FiberCount {
    std::uint64_t count = 0;
    std::vector<Rational> shift;           ///< the point a
    std::array<EliminationDetail, 2> orders; ///< second variable eliminated, then first
};

/// Counts the affine solutions of f1 = a1, f2 = a2 over the algebraic closure.
/// For each elimination order the free variable is sheared until the two
/// leading coefficients in the eliminated variable are coprime; the degree of
/// the resultant is then the count. Both orders must agree.
/// A zero f_i - a_i or a common factor raises InfiniteFiber; disagreement or
/// no usable shear raises Inconclusive. A nonzero constant gives count 0.
FiberCount fiber_count(std::span<const Polynomial> system, std::span<const Rational> a);

struct ProbeTrial {
    std::vector<Rational> point;
    std::optional<FiberCount> result;
    std::optional<ErrorCode> failure; ///< InfiniteFiber or Inconclusive
};

struct ProbeResult {
    FiberCount consensus;               ///< first accepted trial with the modal count
    std::vector<ProbeTrial> trials;     ///< in trial order
    std::vector<std::size_t> outliers;  ///< accepted trials whose count differs from the mode
    std::size_t accepted = 0;
};

struct ProbeOptions {
    std::size_t trials = 5;
    std::uint64_t seed = 0;
    std::vector<std::vector<Rational>> forced_points; ///< probed before the random ones
    std::size_t threads = 1;
};

/// Runs fiber_count at `trials` random points (numerators in [-50, 50],
/// denominators in [1, 10]) and returns the mode, ties to the larger count.
/// Throws InvalidArgument for fewer than 3 trials, AllInconclusive when no
/// trial is accepted.
ProbeResult generic_probe(std::span<const Polynomial> system, const ProbeOptions& options);

} // namespace bezout
