#include "bezout/oracle.hpp"

#include "bezout/elimination.hpp"
#include "bezout/random.hpp"

#include <future>
#include <map>

namespace bezout {

namespace {

constexpr std::int64_t max_shear = 16;

std::optional<EliminationDetail> count_by_elimination(const Polynomial& f1, const Polynomial& f2, std::size_t elim)
{
    const AmbientRing& amb = f1.ambient();
    const std::size_t other = 1 - elim;
    for (std::int64_t c = 0; c < max_shear; ++c) {
        Polynomial g1 = f1;
        Polynomial g2 = f2;
        if (c != 0) {
            Polynomial image = Polynomial::variable(amb, other) + Polynomial::variable(amb, elim) * Rational(c);
            std::map<std::string, Polynomial> shear{{amb.name(other), image}};
            g1 = substitute(f1, shear, amb);
            g2 = substitute(f2, shear, amb);
        }
        if (g1.degree_in(elim) < 1 || g2.degree_in(elim) < 1) {
            continue;
        }
        Polynomial lc1 = coefficients_in(g1, elim).back();
        Polynomial lc2 = coefficients_in(g2, elim).back();
        if (!gcd(lc1, lc2).is_constant()) {
            continue;
        }
        Polynomial r = resultant(g1, g2, elim);
        if (r.is_zero()) {
            raise(ErrorCode::InfiniteFiber, "resultant vanishes identically");
        }
        return EliminationDetail{amb.name(elim), c, r.degree_in(other)};
    }
    return std::nullopt;
}

} // namespace

FiberCount fiber_count(std::span<const Polynomial> system, std::span<const Rational> a)
{
    if (system.size() != 2 || a.size() != 2) {
        raise(ErrorCode::InvalidArgument, "fiber counting needs two polynomials and a two-coordinate point");
    }
    const AmbientRing& amb = system[0].ambient();
    if (amb.size() != 2) {
        raise(ErrorCode::UnsupportedArity, "fiber counting is implemented for two variables");
    }
    if (!(system[1].ambient() == amb)) {
        raise(ErrorCode::AmbientMismatch, "system polynomials over different ambients");
    }
    FiberCount out;
    out.shift.assign(a.begin(), a.end());
    Polynomial f1 = system[0] - Polynomial(amb, a[0]);
    Polynomial f2 = system[1] - Polynomial(amb, a[1]);
    if (f1.is_zero() || f2.is_zero()) {
        raise(ErrorCode::InfiniteFiber, "an equation of the shifted system is identically zero");
    }
    if (f1.is_constant() || f2.is_constant()) {
        return out; // a nonzero constant equation has no solutions
    }
    Polynomial g = gcd(f1, f2);
    if (!g.is_constant()) {
        raise(ErrorCode::InfiniteFiber, "common factor " + to_string(g));
    }

    auto by_second = count_by_elimination(f1, f2, 1);
    auto by_first = count_by_elimination(f1, f2, 0);
    if (!by_second || !by_first) {
        raise(ErrorCode::Inconclusive, "no shear below " + std::to_string(max_shear) +
                                           " separates the leading coefficients");
    }
    if (by_second->resultant_degree != by_first->resultant_degree) {
        raise(ErrorCode::Inconclusive, "elimination orders disagree: " + std::to_string(by_second->resultant_degree) +
                                           " vs " + std::to_string(by_first->resultant_degree));
    }
    out.count = static_cast<std::uint64_t>(by_second->resultant_degree);
    out.orders = {*by_second, *by_first};

    const auto cap = static_cast<std::uint64_t>(f1.total_degree() * f2.total_degree());
    if (out.count > cap) {
        raise(ErrorCode::Inconclusive, "count " + std::to_string(out.count) + " exceeds the Bezout number " +
                                           std::to_string(cap));
    }
    return out;
}

ProbeResult generic_probe(std::span<const Polynomial> system, const ProbeOptions& options)
{
    if (options.trials < 3) {
        raise(ErrorCode::InvalidArgument, "generic probing needs at least 3 trials");
    }
    Rng rng(options.seed);
    ProbeResult res;
    for (const auto& p : options.forced_points) {
        res.trials.push_back({p, std::nullopt, std::nullopt});
    }
    for (std::size_t t = 0; t < options.trials; ++t) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < system.size(); ++i) {
            p.push_back(rng.rational(-50, 50, 10));
        }
        res.trials.push_back({std::move(p), std::nullopt, std::nullopt});
    }

    auto run = [&](ProbeTrial& trial) {
        try {
            trial.result = fiber_count(system, trial.point);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InfiniteFiber && e.code() != ErrorCode::Inconclusive) {
                throw;
            }
            trial.failure = e.code();
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, options.threads);
    for (std::size_t start = 0; start < res.trials.size(); start += threads) {
        const std::size_t end = std::min(res.trials.size(), start + threads);
        if (threads == 1) {
            run(res.trials[start]);
            continue;
        }
        std::vector<std::future<void>> jobs;
        for (std::size_t i = start; i < end; ++i) {
            jobs.push_back(std::async(std::launch::async, run, std::ref(res.trials[i])));
        }
        for (auto& j : jobs) {
            j.get();
        }
    }

    std::map<std::uint64_t, std::size_t> tally;
    for (const auto& t : res.trials) {
        if (t.result) {
            ++tally[t.result->count];
            ++res.accepted;
        }
    }
    if (res.accepted == 0) {
        raise(ErrorCode::AllInconclusive, "all " + std::to_string(res.trials.size()) + " trials were rejected");
    }
    std::uint64_t mode = 0;
    std::size_t best = 0;
    for (const auto& [count, n] : tally) {
        if (n >= best) { // ascending keys: ties go to the larger count
            best = n;
            mode = count;
        }
    }
    bool have = false;
    for (std::size_t i = 0; i < res.trials.size(); ++i) {
        const auto& t = res.trials[i];
        if (!t.result) {
            continue;
        }
        if (t.result->count != mode) {
            res.outliers.push_back(i);
        } else if (!have) {
            res.consensus = *t.result;
            have = true;
        }
    }
    return res;
}

} // namespace bezout
