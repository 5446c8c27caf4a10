#include "bezout/degrees.hpp"

#include "bezout/error.hpp"
#include "bezout/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bezout {

// ---------------------------------------------------------------------------
// Degree

std::int64_t Degree::value() const
{
    if (!value_) {
        raise(ErrorCode::ZeroPolynomial, "degree of the zero polynomial is -inf");
    }
    return *value_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b)
{
    if (a.is_neg_inf() || b.is_neg_inf()) {
        return b.is_neg_inf() <=> a.is_neg_inf();
    }
    return *a.value_ <=> *b.value_;
}

Degree operator+(const Degree& a, const Degree& b)
{
    if (a.is_neg_inf() || b.is_neg_inf()) {
        return Degree::neg_inf();
    }
    return Degree(*a.value_ + *b.value_);
}

std::string to_string(const Degree& d)
{
    return d.is_neg_inf() ? "-inf" : std::to_string(d.value());
}

// ---------------------------------------------------------------------------
// Weighted degrees

WeightedDegree::WeightedDegree(AmbientRing ambient, std::vector<std::int64_t> weights)
    : ambient_(std::move(ambient)), weights_(std::move(weights))
{
    if (weights_.size() != ambient_.size()) {
        raise(ErrorCode::InvalidArgument, "expected " + std::to_string(ambient_.size()) + " weights, got " +
                                              std::to_string(weights_.size()));
    }
    for (auto w : weights_) {
        if (w < 1) {
            raise(ErrorCode::InvalidArgument, "weights must be positive, got " + std::to_string(w));
        }
    }
}

std::int64_t WeightedDegree::of(const Monomial& m) const
{
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        d += static_cast<std::int64_t>(m[i]) * weights_[i];
    }
    return d;
}

namespace {

void require_ambient(const AmbientRing& expected, const Polynomial& p)
{
    if (!(p.ambient() == expected)) {
        raise(ErrorCode::AmbientMismatch, "polynomial over " + to_string(p.ambient()) + ", degree over " +
                                              to_string(expected));
    }
}

// v with H = c*v + R, c constant and v absent from R; highest index wins.
std::optional<std::size_t> linear_variable(const Polynomial& h)
{
    for (std::size_t v = h.ambient().size(); v-- > 0;) {
        if (h.degree_in(v) != 1) {
            continue;
        }
        auto coeffs = coefficients_in(h, v);
        if (coeffs[1].is_constant()) {
            return v;
        }
    }
    return std::nullopt;
}

} // namespace

Degree weighted_eval(const WeightedDegree& delta, const Polynomial& p)
{
    require_ambient(delta.ambient(), p);
    if (p.is_zero()) {
        return Degree::neg_inf();
    }
    std::int64_t best = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto d = delta.of(m);
        if (first || d > best) {
            best = d;
            first = false;
        }
    }
    return best;
}

LeadingForm leading_form(const WeightedDegree& delta, const Polynomial& p)
{
    Degree d = weighted_eval(delta, p);
    if (d.is_neg_inf()) {
        raise(ErrorCode::ZeroPolynomial, "leading form of the zero polynomial");
    }
    Polynomial form(p.ambient());
    for (const auto& [m, c] : p.terms()) {
        if (delta.of(m) == d.value()) {
            form.add_term(m, c);
        }
    }
    return {std::move(form), d.value()};
}

bool step_primality(const WeightedDegree& stage, const Polynomial& h)
{
    if (h.is_zero()) {
        raise(ErrorCode::ZeroPolynomial, "step polynomial is zero");
    }
    Polynomial form = leading_form(stage, h).form;
    if (form.is_constant()) {
        return false;
    }
    if (linear_variable(form)) {
        return true;
    }
    auto used = form.variables_used();
    if (used.size() >= 3) {
        raise(ErrorCode::UnsupportedArity, "primality of a non-linear form in " + std::to_string(used.size()) +
                                               " variables");
    }
    if (used.size() == 1) {
        return false; // c * v^m with m >= 2
    }
    // Weighted-homogeneous in (a, b): over the algebraic closure it splits as
    // a^r b^s prod(alpha a^p + beta b^q); irreducible iff exactly one binomial factor.
    const std::size_t a = used[0];
    const std::size_t b = used[1];
    const std::int64_t g = std::gcd(stage.weight(a), stage.weight(b));
    const std::int64_t p = stage.weight(b) / g;
    const std::int64_t q = stage.weight(a) / g;
    if (form.num_terms() != 2) {
        return false;
    }
    Monomial ap(form.ambient().size());
    ap.set(a, static_cast<std::uint64_t>(p));
    Monomial bq(form.ambient().size());
    bq.set(b, static_cast<std::uint64_t>(q));
    return form.coefficient(ap) != 0 && form.coefficient(bq) != 0;
}

// ---------------------------------------------------------------------------
// Chains

SemidegreeChain::SemidegreeChain(WeightedDegree base, std::vector<IterationStep> steps)
    : base_(std::move(base)), steps_(std::move(steps))
{
    const AmbientRing& amb = base_.ambient();
    stages_.push_back(Stage{base_, std::nullopt, std::nullopt, std::nullopt, Polynomial(amb), 0});

    std::set<std::string> taken(amb.names().begin(), amb.names().end());
    for (std::size_t j = 1; j <= steps_.size(); ++j) {
        const IterationStep& step = steps_[j - 1];
        require_ambient(step.h);
        const Stage prev = stages_.back();
        const std::string label = "step " + std::to_string(j);
        if (prev.modulus) {
            raise(ErrorCode::UnsupportedChain,
                  label + " follows a step whose leading form is not linear in any stage variable");
        }

        Eval e = eval_stage(step.h, j - 1);
        if (e.value.is_neg_inf() || step.w <= 0 || step.w >= e.value.value()) {
            raise(ErrorCode::WeightWindowViolation, label + ": weight " + std::to_string(step.w) +
                                                        " must lie strictly between 0 and " + to_string(e.value));
        }
        const Polynomial& form = *e.form;
        if (!step_primality(prev.grading, form)) {
            raise(ErrorCode::NonPrimeLeadingForm, label + ": leading form " + to_string(form) +
                                                      " does not generate a prime ideal");
        }

        std::string zname = "z" + std::to_string(j);
        while (taken.count(zname) != 0) {
            zname += "_";
        }
        taken.insert(zname);

        const AmbientRing& pamb = prev.grading.ambient();
        auto v = linear_variable(form);
        if (!v && j < steps_.size()) {
            raise(ErrorCode::UnsupportedChain, label + ": intermediate leading form " + to_string(form) +
                                                   " is not linear in a stage variable");
        }
        std::vector<std::string> names;
        std::vector<std::int64_t> weights;
        for (std::size_t i = 0; i < pamb.size(); ++i) {
            if (v && i == *v) {
                continue;
            }
            names.push_back(pamb.name(i));
            weights.push_back(prev.grading.weight(i));
        }
        names.push_back(zname);
        weights.push_back(step.w);
        AmbientRing ring(std::move(names));

        Stage st{WeightedDegree(ring, weights), ring.size() - 1, std::nullopt, std::nullopt, form, e.value.value()};
        if (v) {
            auto coeffs = coefficients_in(form, *v);
            Rational c = coeffs[1].constant_term();
            Polynomial rest = coeffs[0] * (Rational(-1) / c);
            st.eliminated = pamb.name(*v);
            replacements_.emplace(j, embed(rest, ring));
        } else {
            st.modulus = embed(form, ring);
        }
        stages_.push_back(std::move(st));
    }
}

void SemidegreeChain::require_ambient(const Polynomial& p) const
{
    bezout::require_ambient(base_.ambient(), p);
}

Polynomial SemidegreeChain::lift(const Polynomial& stage_poly, std::size_t stage) const
{
    const AmbientRing& ring = stages_.at(stage).grading.ambient();
    std::map<std::string, Polynomial> assign;
    for (std::size_t l = 1; l <= stage; ++l) {
        const Stage& st = stages_[l];
        const std::string& zname = st.grading.ambient().name(*st.z);
        if (ring.index_of(zname)) {
            assign.emplace(zname, steps_[l - 1].h);
        }
    }
    return substitute(stage_poly, assign, base_.ambient());
}

SemidegreeChain::Eval SemidegreeChain::eval_stage(const Polynomial& g, std::size_t stage) const
{
    if (g.is_zero()) {
        return {Degree::neg_inf(), std::nullopt};
    }
    if (stage == 0) {
        auto lf = bezout::leading_form(base_, g);
        return {lf.degree, std::move(lf.form)};
    }
    const Stage& st = stages_[stage];
    const Polynomial& h = steps_[stage - 1].h;
    const std::int64_t w = steps_[stage - 1].w;

    // h-adic expansion g = sum c_i h^i whose coefficients have leading forms
    // not divisible by the step form; the value is then max delta(c_i) + i*w.
    std::vector<Polynomial> cs{g};
    std::vector<Eval> evals;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (;;) {
            Eval e = eval_stage(cs[i], stage - 1);
            std::optional<Polynomial> quot;
            if (e.form) {
                quot = divide_exact(*e.form, st.step_form);
            }
            if (!quot) {
                evals.push_back(std::move(e));
                break;
            }
            Polynomial q = lift(*quot, stage - 1);
            cs[i] -= q * h;
            if (cs.size() == i + 1) {
                cs.emplace_back(g.ambient());
            }
            cs[i + 1] += q;
        }
    }

    Degree best = Degree::neg_inf();
    for (std::size_t i = 0; i < evals.size(); ++i) {
        best = std::max(best, evals[i].value + Degree(static_cast<std::int64_t>(i) * w));
    }
    if (best.is_neg_inf()) {
        return {best, std::nullopt};
    }

    const AmbientRing& ring = st.grading.ambient();
    Polynomial form(ring);
    auto repl = replacements_.find(stage);
    for (std::size_t i = 0; i < evals.size(); ++i) {
        if (evals[i].value + Degree(static_cast<std::int64_t>(i) * w) != best) {
            continue;
        }
        Polynomial projected = repl != replacements_.end()
                                   ? substitute(*evals[i].form, {{*st.eliminated, repl->second}}, ring)
                                   : embed(*evals[i].form, ring);
        Monomial zpow(ring.size());
        zpow.set(*st.z, i);
        form += projected * Polynomial::term(ring, zpow, Rational(1));
    }
    return {best, std::move(form)};
}

Degree SemidegreeChain::evaluate(const Polynomial& p, std::size_t stage) const
{
    require_ambient(p);
    if (stage >= stages_.size()) {
        raise(ErrorCode::InvalidArgument, "chain has no stage " + std::to_string(stage));
    }
    return eval_stage(p, stage).value;
}

Degree SemidegreeChain::evaluate(const Polynomial& p) const
{
    return evaluate(p, stages_.size() - 1);
}

LeadingForm SemidegreeChain::leading_form(const Polynomial& p, std::size_t stage) const
{
    require_ambient(p);
    if (stage >= stages_.size()) {
        raise(ErrorCode::InvalidArgument, "chain has no stage " + std::to_string(stage));
    }
    Eval e = eval_stage(p, stage);
    if (!e.form) {
        raise(ErrorCode::ZeroPolynomial, "leading form of the zero polynomial");
    }
    return {std::move(*e.form), e.value.value()};
}

LeadingForm SemidegreeChain::leading_form(const Polynomial& p) const
{
    return leading_form(p, stages_.size() - 1);
}

Degree chain_eval(const SemidegreeChain& chain, const Polynomial& p)
{
    return chain.evaluate(p);
}

Degree subdegree_eval(std::span<const SemidegreeChain> parts, const Polynomial& p)
{
    if (parts.empty()) {
        raise(ErrorCode::InvalidArgument, "subdegree needs at least one part");
    }
    Degree best = Degree::neg_inf();
    for (const auto& part : parts) {
        if (!(part.ambient() == parts.front().ambient())) {
            raise(ErrorCode::AmbientMismatch, "subdegree parts over different ambients");
        }
        best = std::max(best, part.evaluate(p));
    }
    return best;
}

AxiomReport axiom_check(const DegreeFunction& delta, const AmbientRing& ambient, std::size_t samples,
                        std::uint64_t seed, bool semidegree)
{
    if (samples == 0) {
        raise(ErrorCode::InvalidArgument, "axiom_check needs at least one sample");
    }
    Rng rng(seed);
    RandomPolynomialSpec spec;
    spec.max_terms = 4;
    spec.max_exponent = 4;
    AxiomReport report;
    report.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        Polynomial f = random_polynomial(rng, ambient, spec);
        Polynomial g = random_polynomial(rng, ambient, spec);
        Degree df = delta(f);
        Degree dg = delta(g);
        Degree dsum = delta(f + g);
        Degree dprod = delta(f * g);
        std::optional<std::string> issue;
        if (dsum > std::max(df, dg)) {
            ++report.sum_failures;
            issue = "delta(f+g) = " + to_string(dsum) + " exceeds max";
        }
        if (dprod > df + dg) {
            ++report.product_failures;
            issue = "delta(fg) = " + to_string(dprod) + " exceeds the sum";
        } else if (dprod < df + dg) {
            ++report.strict_products;
            if (semidegree) {
                issue = "delta(fg) = " + to_string(dprod) + " is below the sum " + to_string(df + dg);
            }
        }
        if (issue && !report.first_counterexample) {
            report.first_counterexample = *issue + " for f = " + to_string(f) + ", g = " + to_string(g);
        }
    }
    return report;
}

} // namespace bezout
