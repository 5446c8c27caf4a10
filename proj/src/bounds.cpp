#include "bezout/bounds.hpp"

#include "bezout/elimination.hpp"
#include "bezout/error.hpp"

#include "json.hpp"

namespace bezout {

std::string_view to_string(BoundMethod m)
{
    switch (m) {
    case BoundMethod::Weighted: return "weighted";
    case BoundMethod::Iterated: return "iterated";
    case BoundMethod::Bkk: return "bkk";
    case BoundMethod::Okounkov: return "okounkov";
    }
    return "unknown";
}

std::string_view to_string(Exactness e)
{
    switch (e) {
    case Exactness::ProvenExact: return "proven-exact";
    case Exactness::NotProven: return "not-proven";
    case Exactness::ViolatedPrecondition: return "violated-precondition";
    }
    return "unknown";
}

std::string to_json(const BoundReport& report, int indent)
{
    nlohmann::ordered_json j;
    j["method"] = std::string(to_string(report.method));
    j["value"] = to_string(report.value);
    j["exact"] = std::string(to_string(report.exact));
    j["trail"] = report.trail;
    return j.dump(indent);
}

namespace {

void check_system(const AmbientRing& amb, std::span<const Polynomial> system)
{
    if (system.size() != amb.size()) {
        raise(ErrorCode::InvalidArgument, "system has " + std::to_string(system.size()) +
                                              " polynomials, ambient " + to_string(amb) + " needs " +
                                              std::to_string(amb.size()));
    }
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (!(system[i].ambient() == amb)) {
            raise(ErrorCode::AmbientMismatch, "f" + std::to_string(i + 1) + " is over " +
                                                  to_string(system[i].ambient()) + ", expected " + to_string(amb));
        }
        if (system[i].is_constant()) {
            raise(ErrorCode::ConstantComponent, "f" + std::to_string(i + 1) + " = " + to_string(system[i]) +
                                                    " is constant");
        }
    }
}

std::string weights_text(const WeightedDegree& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.weights().size(); ++i) {
        s += (i > 0 ? "," : "") + std::to_string(d.weight(i));
    }
    return s + ")";
}

std::vector<Polynomial> copy(std::span<const Polynomial> system)
{
    return {system.begin(), system.end()};
}

// Coprime bivariate weighted-homogeneous forms meet only at the origin.
Exactness coprime_forms(const std::vector<Polynomial>& forms)
{
    Polynomial g(forms.front().ambient());
    for (const auto& f : forms) {
        g = gcd(g, f);
    }
    return g.is_constant() ? Exactness::ProvenExact : Exactness::NotProven;
}

// Sufficient test at the final stage of a chain; see iterated_bound.
Exactness chain_exactness(const SemidegreeChain& chain, std::span<const Polynomial> system,
                          std::vector<std::string>& trail)
{
    if (chain.steps().empty()) {
        return exactness_check(chain.base(), system);
    }
    if (system.size() != 2) {
        trail.push_back("exactness: only tested for two equations");
        return Exactness::NotProven;
    }
    const Stage& last = chain.stages().back();
    std::vector<Polynomial> forms;
    for (const auto& f : system) {
        auto lf = chain.leading_form(f);
        if (lf.form.is_constant()) {
            trail.push_back("exactness: constant leading form of " + to_string(f));
            return Exactness::ViolatedPrecondition;
        }
        forms.push_back(lf.form);
        trail.push_back("leading form of " + to_string(f) + " = " + to_string(lf.form));
    }
    try {
        if (!last.modulus) {
            return coprime_forms(forms);
        }
        // Read modulo H: a pure z-power kills the chart z != 0, then the
        // remaining forms at z = 0 must share no zero with H.
        const std::size_t z = *last.z;
        bool pure_z = false;
        for (const auto& lf : forms) {
            auto used = lf.variables_used();
            pure_z = pure_z || (lf.num_terms() == 1 && used.size() == 1 && used.front() == z);
        }
        if (!pure_z) {
            trail.push_back("exactness: no leading form is a pure power of " +
                            last.grading.ambient().name(z));
            return Exactness::NotProven;
        }
        std::vector<Polynomial> at_zero{*last.modulus};
        for (const auto& lf : forms) {
            at_zero.push_back(specialize(lf, z, Rational(0)));
        }
        return coprime_forms(at_zero);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedArity) {
            throw;
        }
        trail.push_back("exactness: leading forms use more than two variables");
        return Exactness::NotProven;
    }
}

} // namespace

Exactness exactness_check(const WeightedDegree& delta, std::span<const Polynomial> system)
{
    const AmbientRing& amb = delta.ambient();
    if (system.size() != amb.size()) {
        raise(ErrorCode::InvalidArgument, "exactness check needs " + std::to_string(amb.size()) + " polynomials");
    }
    for (const auto& f : system) {
        if (!(f.ambient() == amb)) {
            raise(ErrorCode::AmbientMismatch, "system polynomial over " + to_string(f.ambient()));
        }
    }
    if (amb.size() >= 3) {
        return Exactness::ViolatedPrecondition;
    }
    std::vector<Polynomial> forms;
    for (const auto& f : system) {
        if (f.is_zero()) {
            return Exactness::ViolatedPrecondition;
        }
        auto lf = leading_form(delta, f);
        if (lf.degree == 0) {
            return Exactness::ViolatedPrecondition;
        }
        forms.push_back(std::move(lf.form));
    }
    if (amb.size() == 1) {
        return Exactness::ProvenExact;
    }
    return coprime_forms(forms);
}

BoundReport weighted_bound(const WeightedDegree& delta, std::span<const Polynomial> system)
{
    check_system(delta.ambient(), system);
    BoundReport r{BoundMethod::Weighted, Rational(1), copy(system), Exactness::NotProven, {}};
    r.trail.push_back("weights " + weights_text(delta));
    Rational denom(1);
    for (std::size_t i = 0; i < system.size(); ++i) {
        auto d = weighted_eval(delta, system[i]).value();
        r.trail.push_back("delta(f" + std::to_string(i + 1) + ") = " + std::to_string(d) + " for f" +
                          std::to_string(i + 1) + " = " + to_string(system[i]));
        r.value *= Rational(static_cast<long>(d));
        denom *= Rational(static_cast<long>(delta.weight(i)));
    }
    r.value /= denom;
    r.trail.push_back("bound = prod delta(f_i) / " + to_string(denom) + " = " + to_string(r.value));
    r.exact = exactness_check(delta, system);
    r.trail.push_back(std::string("exactness: ") + std::string(to_string(r.exact)));
    return r;
}

Rational iterated_ratio(const SemidegreeChain& chain)
{
    Rational ratio(1);
    for (auto d : chain.base().weights()) {
        ratio /= Rational(static_cast<long>(d));
    }
    const auto& stages = chain.stages();
    for (std::size_t j = 1; j < stages.size(); ++j) {
        ratio *= make_rational(Integer(static_cast<long>(stages[j].step_degree)),
                               Integer(static_cast<long>(chain.steps()[j - 1].w)));
    }
    return ratio;
}

BoundReport iterated_bound(const SemidegreeChain& chain, std::span<const Polynomial> system)
{
    check_system(chain.ambient(), system);
    BoundReport r{BoundMethod::Iterated, iterated_ratio(chain), copy(system), Exactness::NotProven, {}};
    r.trail.push_back("base weights " + weights_text(chain.base()));
    for (std::size_t j = 1; j < chain.stages().size(); ++j) {
        const auto& step = chain.steps()[j - 1];
        r.trail.push_back("step " + std::to_string(j) + ": h = " + to_string(step.h) + ", e = " +
                          std::to_string(chain.stages()[j].step_degree) + ", w = " + std::to_string(step.w));
    }
    r.trail.push_back("D/d^n = " + to_string(r.value));
    for (std::size_t i = 0; i < system.size(); ++i) {
        auto d = chain_eval(chain, system[i]).value();
        r.trail.push_back("delta(f" + std::to_string(i + 1) + ") = " + std::to_string(d) + " for f" +
                          std::to_string(i + 1) + " = " + to_string(system[i]));
        r.value *= Rational(static_cast<long>(d));
    }
    r.trail.push_back("bound = " + to_string(r.value));
    r.exact = chain_exactness(chain, system, r.trail);
    r.trail.push_back(std::string("exactness: ") + std::string(to_string(r.exact)));
    return r;
}

BoundReport bkk_bound(std::span<const Polynomial> system, std::span<const Rational> shift)
{
    if (system.size() != 2 || shift.size() != 2) {
        raise(ErrorCode::InvalidArgument, "BKK bound needs two polynomials and a two-coordinate shift");
    }
    if (system[0].ambient().size() != 2) {
        raise(ErrorCode::UnsupportedArity, "BKK bound is implemented for two variables");
    }
    if (!(system[0].ambient() == system[1].ambient())) {
        raise(ErrorCode::AmbientMismatch, "system polynomials over different ambients");
    }
    BoundReport r{BoundMethod::Bkk, Rational(0), copy(system), Exactness::NotProven, {}};
    std::vector<Polygon> polys;
    for (std::size_t i = 0; i < 2; ++i) {
        Polynomial shifted = system[i] - Polynomial(system[i].ambient(), shift[i]);
        if (shift[i] == 0) {
            r.trail.push_back("warning: shift a" + std::to_string(i + 1) + " = 0 is not generic");
        }
        if (shifted.is_zero()) {
            raise(ErrorCode::ZeroPolynomial, "f" + std::to_string(i + 1) + " - a" + std::to_string(i + 1) +
                                                 " is zero");
        }
        polys.push_back(newton_polygon(shifted));
        r.trail.push_back("area(Newton(f" + std::to_string(i + 1) + " - " + to_string(shift[i]) + ")) = " +
                          to_string(area(polys.back())));
    }
    Rational sum = area(minkowski_sum(polys[0], polys[1]));
    r.value = sum - area(polys[0]) - area(polys[1]);
    r.trail.push_back("area(P + Q) = " + to_string(sum));
    r.trail.push_back("mixed volume = " + to_string(r.value));
    return r;
}

BoundReport okounkov_bound(const SemidegreeChain& chain, const MonomialValuation& nu, std::int64_t d,
                           std::int64_t cutoff, std::span<const Polynomial> system)
{
    check_system(chain.ambient(), system);
    auto ok = okounkov_polygon(chain, nu, d, cutoff);
    const long n = static_cast<long>(chain.ambient().size());
    Rational vol = area(ok.polygon);
    Rational ratio = vol * Rational(2) / pow(Rational(static_cast<long>(d)), static_cast<std::uint64_t>(n));
    BoundReport r{BoundMethod::Okounkov, ratio, copy(system), Exactness::NotProven, {}};
    r.trail.push_back("Okounkov polygon after " + std::to_string(ok.levels) + " levels of d = " +
                      std::to_string(d) + ", area " + to_string(vol));
    r.trail.push_back("D/d^n = n! area / d^n = " + to_string(ratio));
    for (std::size_t i = 0; i < system.size(); ++i) {
        auto v = chain_eval(chain, system[i]).value();
        r.trail.push_back("delta(f" + std::to_string(i + 1) + ") = " + std::to_string(v));
        r.value *= Rational(v);
    }
    r.trail.push_back("bound = " + to_string(r.value));
    r.exact = chain_exactness(chain, system, r.trail);
    r.trail.push_back(std::string("exactness: ") + std::string(to_string(r.exact)));
    return r;
}

} // namespace bezout
