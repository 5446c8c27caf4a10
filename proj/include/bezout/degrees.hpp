#pragma once

#include "bezout/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bezout {

/// Integer or -infinity (the degree of 0). Never encoded as a small integer.
class Degree {
public:
    Degree(std::int64_t value) : value_(value) {}
    static Degree neg_inf() { return Degree(); }

    bool is_neg_inf() const noexcept { return !value_.has_value(); }
    /// Throws ZeroPolynomial on -inf.
    std::int64_t value() const;

    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);
    friend Degree operator+(const Degree& a, const Degree& b);

private:
    Degree() = default;
    std::optional<std::int64_t> value_;
};

/// "-inf" or the decimal value.
std::string to_string(const Degree& d);

/// delta(sum a_alpha x^alpha) = max sum alpha_i d_i with all d_i >= 1.
class WeightedDegree {
public:
    /// Throws InvalidArgument on a non-positive weight or a length mismatch.
    WeightedDegree(AmbientRing ambient, std::vector<std::int64_t> weights);

    const AmbientRing& ambient() const noexcept { return ambient_; }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
    std::int64_t weight(std::size_t i) const { return weights_[i]; }

    std::int64_t of(const Monomial& m) const;

private:
    AmbientRing ambient_;
    std::vector<std::int64_t> weights_;
};

struct LeadingForm {
    Polynomial form;
    std::int64_t degree;
};

/// Throws AmbientMismatch.
Degree weighted_eval(const WeightedDegree& delta, const Polynomial& p);

/// Top weighted-homogeneous component. Throws ZeroPolynomial, AmbientMismatch.
LeadingForm leading_form(const WeightedDegree& delta, const Polynomial& p);

struct IterationStep {
    Polynomial h;
    std::int64_t w;
};

/// One graded stage of a chain. Stage 0 is the base ring with its weights;
/// stage j adds the variable z_j of weight w_j and, when step j has a linear
/// leading form c*v + R, drops v (the quotient by that form is again a
/// polynomial ring). Otherwise `modulus` holds the step form and the stage
/// ring is read modulo it; only the last stage may carry a modulus.
struct Stage {
    WeightedDegree grading;
    std::optional<std::size_t> z;          ///< index of z_j in the stage ring
    std::optional<std::string> eliminated; ///< name of the dropped variable
    std::optional<Polynomial> modulus;
    Polynomial step_form;                  ///< H_j in the previous stage ring
    std::int64_t step_degree = 0;          ///< e_j = delta_{j-1}(h_j)
};

/// Weighted base degree plus ordered iteration steps (h_i, w_i).
class SemidegreeChain {
public:
    /// Validates every step: 0 < w_j < delta_{j-1}(h_j) (WeightWindowViolation),
    /// prime stage leading form (NonPrimeLeadingForm), intermediate forms
    /// linear in some stage variable (UnsupportedChain).
    SemidegreeChain(WeightedDegree base, std::vector<IterationStep> steps = {});

    const WeightedDegree& base() const noexcept { return base_; }
    const AmbientRing& ambient() const noexcept { return base_.ambient(); }
    const std::vector<IterationStep>& steps() const noexcept { return steps_; }
    /// stages()[0] is the base; stages()[j] belongs to step j.
    const std::vector<Stage>& stages() const noexcept { return stages_; }

    /// Value and leading form at stage j (default: final). The form lives in
    /// stages()[j].grading.ambient(). Throws ZeroPolynomial for p = 0 when a
    /// form is requested; evaluate() returns -inf instead.
    LeadingForm leading_form(const Polynomial& p) const;
    LeadingForm leading_form(const Polynomial& p, std::size_t stage) const;
    Degree evaluate(const Polynomial& p) const;
    Degree evaluate(const Polynomial& p, std::size_t stage) const;

    /// Maps a stage-j polynomial back to the base ring (z_l -> h_l).
    Polynomial lift(const Polynomial& stage_poly, std::size_t stage) const;

private:
    struct Eval {
        Degree value;
        std::optional<Polynomial> form;
    };
    Eval eval_stage(const Polynomial& g, std::size_t stage) const;
    void require_ambient(const Polynomial& p) const;

    WeightedDegree base_;
    std::vector<IterationStep> steps_;
    std::vector<Stage> stages_;
    std::map<std::size_t, Polynomial> replacements_; ///< stage -> image of the dropped variable
};

/// Final-stage value of the chain. Throws AmbientMismatch.
Degree chain_eval(const SemidegreeChain& chain, const Polynomial& p);

/// Whether the stage leading form of h generates a prime ideal. Exact for
/// bivariate weighted-homogeneous forms (absolute irreducibility); a form
/// linear in a variable with constant coefficient is accepted in any arity.
/// False for nonzero constants. Throws ZeroPolynomial, UnsupportedArity.
bool step_primality(const WeightedDegree& stage, const Polynomial& h);

/// Max over the parts. Throws InvalidArgument on empty input, AmbientMismatch.
Degree subdegree_eval(std::span<const SemidegreeChain> parts, const Polynomial& p);

using DegreeFunction = std::function<Degree(const Polynomial&)>;

struct AxiomReport {
    std::size_t samples = 0;
    std::size_t sum_failures = 0;     ///< delta(f+g) > max(delta f, delta g)
    std::size_t product_failures = 0; ///< delta(fg) > delta f + delta g
    std::size_t strict_products = 0;  ///< delta(fg) < delta f + delta g
    std::optional<std::string> first_counterexample;

    bool degree_like() const noexcept { return sum_failures == 0 && product_failures == 0; }
    bool multiplicative() const noexcept { return degree_like() && strict_products == 0; }
};

/// Random-pair check of the degree-like axioms. When `semidegree` is set a
/// strict product inequality also counts as a counterexample.
AxiomReport axiom_check(const DegreeFunction& delta, const AmbientRing& ambient, std::size_t samples,
                        std::uint64_t seed, bool semidegree = false);

} // namespace bezout
