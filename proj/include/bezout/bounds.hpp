#pragma once

#include "bezout/degrees.hpp"
#include "bezout/polytope.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bezout {

enum class BoundMethod { Weighted, Iterated, Bkk, Okounkov };
enum class Exactness { ProvenExact, NotProven, ViolatedPrecondition };

std::string_view to_string(BoundMethod m);
std::string_view to_string(Exactness e);

struct BoundReport {
    BoundMethod method;
    Rational value;
    std::vector<Polynomial> system;
    Exactness exact;
    std::vector<std::string> trail;
};

/// {"method", "value": "p/q", "exact", "trail": [...]} in that order.
std::string to_json(const BoundReport& report, int indent = 2);

/// prod delta(f_i) / prod d_i. Throws ConstantComponent, AmbientMismatch,
/// InvalidArgument (system length differs from the arity).
BoundReport weighted_bound(const WeightedDegree& delta, std::span<const Polynomial> system);

/// Whether the leading forms have only the origin as common zero.
/// n = 2: proven-exact iff their gcd is constant; a constant leading form is a
/// violated precondition. n = 1: proven-exact. n >= 3: violated-precondition.
Exactness exactness_check(const WeightedDegree& delta, std::span<const Polynomial> system);

/// (1 / prod d_j) * prod_i e_i / w_i with e_i the previous-stage value of h_i.
Rational iterated_ratio(const SemidegreeChain& chain);

/// iterated_ratio * prod chain_eval(f_i). Throws ConstantComponent,
/// AmbientMismatch, InvalidArgument.
BoundReport iterated_bound(const SemidegreeChain& chain, std::span<const Polynomial> system);

/// Mixed volume of the Newton polygons of f_i - a_i. Throws UnsupportedArity,
/// InvalidArgument.
BoundReport bkk_bound(std::span<const Polynomial> system, std::span<const Rational> shift);

/// (n! area / d^n) * prod chain_eval(f_i) with the area of the Okounkov polygon.
BoundReport okounkov_bound(const SemidegreeChain& chain, const MonomialValuation& nu, std::int64_t d,
                           std::int64_t cutoff, std::span<const Polynomial> system);

} // namespace bezout
