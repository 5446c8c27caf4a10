// bezout: degree evaluation, root-count bounds and the resultant oracle from the command line.
//
// Exit codes: 0 ok, 2 input error, 3 precondition failure, 4 inconclusive oracle.

#include "bezout/bounds.hpp"
#include "bezout/config.hpp"
#include "bezout/error.hpp"
#include "bezout/oracle.hpp"
#include "bezout/parser.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bezout;
using ojson = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json };

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    std::optional<std::size_t> trials;
};

struct Inputs {
    std::string config;
    std::string chain;
    std::string weights;
    std::string vars;
    std::vector<std::string> system;
    std::string shift;
    std::string method;
    std::string valuation;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> cutoff;
    std::string point;
    std::string output;
};

int exit_code(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::AmbientMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ExponentOverflow:
        return 2;
    case ErrorCode::Inconclusive:
    case ErrorCode::AllInconclusive:
        return 4;
    default:
        return 3;
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<std::int64_t> parse_ints(const std::string& s)
{
    std::vector<std::int64_t> out;
    for (const auto& item : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            raise(ErrorCode::InvalidArgument, "expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

std::vector<Rational> parse_point(const std::string& s)
{
    std::vector<Rational> out;
    for (const auto& item : split(s, ',')) {
        out.push_back(parse_rational(item));
    }
    return out;
}

Format pick_format(const Globals& g, Format fallback)
{
    if (!g.format) {
        return fallback;
    }
    if (*g.format == "text") {
        return Format::Text;
    }
    if (*g.format == "json") {
        return Format::Json;
    }
    raise(ErrorCode::InvalidArgument, "--format must be text or json");
}

// Merges --config with command-line flags; flags win.
JobConfig resolve_job(Inputs& in)
{
    JobConfig job;
    if (!in.config.empty()) {
        job = load_job(in.config);
    }
    if (!in.chain.empty()) {
        job.chain = load_chain(in.chain);
    }
    if (!in.vars.empty()) {
        job.vars = split(in.vars, ',');
    }
    if (!in.weights.empty()) {
        job.weights = parse_ints(in.weights);
    }
    if (job.vars.empty()) {
        if (job.chain) {
            job.vars = job.chain->ambient().names();
        } else if (job.weights) {
            job.vars = AmbientRing::standard(job.weights->size()).names();
        } else if (!in.system.empty()) {
            job.vars = AmbientRing::standard(in.system.size()).names();
        } else {
            raise(ErrorCode::InvalidArgument, "no variables: give --vars, --weights, --chain or --config");
        }
    }
    if (!in.system.empty()) {
        job.system = in.system;
    }
    if (!in.shift.empty()) {
        job.shift = split(in.shift, ',');
    }
    if (!in.valuation.empty()) {
        job.valuation = in.valuation;
    }
    if (in.d) {
        job.d = in.d;
    }
    if (in.cutoff) {
        job.cutoff = in.cutoff;
    }
    if (!in.output.empty()) {
        job.output = in.output;
    } else if (job.output) {
        in.output = *job.output;
    }
    AmbientRing amb = job.ambient();
    if (job.chain && !(job.chain->ambient() == amb)) {
        raise(ErrorCode::AmbientMismatch, "chain variables " + to_string(job.chain->ambient()) + " differ from " +
                                              to_string(amb));
    }
    if (job.weights) {
        WeightedDegree(amb, *job.weights);
    }
    return job;
}

std::optional<WeightedDegree> job_weights(const JobConfig& job)
{
    if (job.weights) {
        return WeightedDegree(job.ambient(), *job.weights);
    }
    if (job.chain) {
        return job.chain->base();
    }
    return std::nullopt;
}

SemidegreeChain job_chain(const JobConfig& job)
{
    if (job.chain) {
        return *job.chain;
    }
    if (auto w = job_weights(job)) {
        return SemidegreeChain(*w);
    }
    raise(ErrorCode::InvalidArgument, "this command needs --chain, --weights or a config with either");
}

std::vector<Rational> job_shift(const JobConfig& job)
{
    if (auto s = job.parsed_shift()) {
        return *s;
    }
    return std::vector<Rational>(job.vars.size(), Rational(1));
}

std::uint64_t require_seed(const Globals& g, const JobConfig& job)
{
    if (g.seed) {
        return *g.seed;
    }
    if (job.seed) {
        return *job.seed;
    }
    raise(ErrorCode::InvalidArgument, "the oracle needs a seed: pass --seed or set \"seed\" in the config");
}

std::size_t trial_count(const Globals& g, const JobConfig& job)
{
    return g.trials ? *g.trials : job.trials.value_or(5);
}

ojson polygon_json(const Polygon& p)
{
    ojson verts = ojson::array();
    for (const auto& v : p.vertices()) {
        verts.push_back({to_string(v.x), to_string(v.y)});
    }
    return {{"vertices", verts}, {"area", to_string(area(p))}};
}

std::vector<BoundReport> run_bounds(const JobConfig& job, JobMethod method)
{
    auto system = job.parsed_system();
    std::vector<BoundReport> out;
    auto want = [&](JobMethod m) { return method == m || method == JobMethod::All; };
    const bool all = method == JobMethod::All;
    if (want(JobMethod::Weighted)) {
        auto w = job_weights(job);
        if (w) {
            out.push_back(weighted_bound(*w, system));
        } else if (!all) {
            raise(ErrorCode::InvalidArgument, "method weighted needs weights or a chain");
        }
    }
    if (want(JobMethod::Bkk)) {
        out.push_back(bkk_bound(system, job_shift(job)));
    }
    if (want(JobMethod::Iterated)) {
        if (job.chain || !all) {
            out.push_back(iterated_bound(job_chain(job), system));
        }
    }
    if (want(JobMethod::Okounkov)) {
        if (job.d && job.cutoff) {
            auto nu = parse_valuation(job.valuation.value_or("lex"), job.vars.size());
            out.push_back(okounkov_bound(job_chain(job), nu, *job.d, *job.cutoff, system));
        } else if (!all) {
            raise(ErrorCode::InvalidArgument, "method okounkov needs d and cutoff");
        }
    }
    return out;
}

void print_probe(std::ostream& os, const ProbeResult& r, Format fmt)
{
    if (fmt == Format::Json) {
        ojson trials = ojson::array();
        for (const auto& t : r.trials) {
            ojson pt = ojson::array();
            for (const auto& c : t.point) {
                pt.push_back(to_string(c));
            }
            ojson row{{"point", pt}};
            if (t.result) {
                row["count"] = t.result->count;
            } else {
                row["rejected"] = std::string(to_string(*t.failure));
            }
            trials.push_back(row);
        }
        ojson j{{"count", r.consensus.count},
                {"accepted", r.accepted},
                {"outliers", r.outliers},
                {"trials", trials}};
        os << j.dump(2) << "\n";
        return;
    }
    os << "count = " << r.consensus.count << "\n";
    os << "accepted " << r.accepted << " of " << r.trials.size() << " trials, " << r.outliers.size()
       << " outlier(s)\n";
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const auto& t = r.trials[i];
        os << "trial " << i << " a = (";
        for (std::size_t k = 0; k < t.point.size(); ++k) {
            os << (k > 0 ? ", " : "") << to_string(t.point[k]);
        }
        os << "): ";
        if (t.result) {
            os << t.result->count;
            for (const auto& o : t.result->orders) {
                os << " [eliminate " << o.eliminated << ", shear " << o.shear << ", deg " << o.resultant_degree << "]";
            }
        } else {
            os << "rejected (" << to_string(*t.failure) << ")";
        }
        os << "\n";
    }
}

int cmd_eval_degree(const Globals& g, Inputs& in, const std::string& expr, std::ostream& os)
{
    JobConfig job = resolve_job(in);
    SemidegreeChain chain = job_chain(job);
    Polynomial p = parse(expr, chain.ambient());
    Degree d = chain_eval(chain, p);
    if (pick_format(g, Format::Text) == Format::Json) {
        os << ojson{{"expression", to_string(p)}, {"degree", to_string(d)}}.dump(2) << "\n";
    } else {
        os << to_string(d) << "\n";
    }
    return 0;
}

int cmd_bound(const Globals& g, Inputs& in, std::ostream& os)
{
    JobConfig job = resolve_job(in);
    JobMethod method = job.method;
    if (!in.method.empty()) {
        std::map<std::string, JobMethod> names{{"weighted", JobMethod::Weighted}, {"iterated", JobMethod::Iterated},
                                               {"bkk", JobMethod::Bkk},           {"okounkov", JobMethod::Okounkov},
                                               {"all", JobMethod::All}};
        auto it = names.find(in.method);
        if (it == names.end()) {
            raise(ErrorCode::InvalidArgument, "unknown method '" + in.method + "'");
        }
        method = it->second;
    }
    auto reports = run_bounds(job, method);
    if (pick_format(g, Format::Json) == Format::Json) {
        if (reports.size() == 1) {
            os << to_json(reports.front()) << "\n";
        } else {
            ojson arr = ojson::array();
            for (const auto& r : reports) {
                arr.push_back(ojson::parse(to_json(r)));
            }
            os << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) {
            os << to_string(r.method) << " " << to_string(r.value) << " " << to_string(r.exact) << "\n";
        }
    }
    return 0;
}

int cmd_newton(const Globals& g, Inputs& in, std::ostream& os)
{
    JobConfig job = resolve_job(in);
    auto system = job.parsed_system();
    if (system.size() != 2) {
        raise(ErrorCode::InvalidArgument, "newton needs exactly two polynomials");
    }
    auto shift = job.parsed_shift().value_or(std::vector<Rational>(2, Rational(0)));
    Polygon p = newton_polygon(system[0] - Polynomial(system[0].ambient(), shift[0]));
    Polygon q = newton_polygon(system[1] - Polynomial(system[1].ambient(), shift[1]));
    Polygon sum = minkowski_sum(p, q);
    if (pick_format(g, Format::Text) == Format::Json) {
        ojson j{{"P", polygon_json(p)},
                {"Q", polygon_json(q)},
                {"sum", polygon_json(sum)},
                {"mixed_volume", to_string(mixed_volume(p, q))}};
        os << j.dump(2) << "\n";
    } else {
        os << "P:\n" << dump(p) << "vol(P) = " << to_string(area(p)) << "\n";
        os << "Q:\n" << dump(q) << "vol(Q) = " << to_string(area(q)) << "\n";
        os << "vol(P+Q) = " << to_string(area(sum)) << "\n";
        os << "M = " << to_string(mixed_volume(p, q)) << "\n";
    }
    return 0;
}

int cmd_okounkov(const Globals& g, Inputs& in, std::ostream& os)
{
    JobConfig job = resolve_job(in);
    if (!job.d || !job.cutoff) {
        raise(ErrorCode::InvalidArgument, "okounkov needs --d and --cutoff");
    }
    SemidegreeChain chain = job_chain(job);
    auto nu = parse_valuation(job.valuation.value_or("lex"), chain.ambient().size());
    auto ok = okounkov_polygon(chain, nu, *job.d, *job.cutoff);
    Rational a = area(ok.polygon);
    Rational ratio = a * 2 / (Rational(*job.d) * Rational(*job.d));
    if (pick_format(g, Format::Text) == Format::Json) {
        ojson j = polygon_json(ok.polygon);
        j["twice_area"] = to_string(Rational(a * 2));
        j["levels"] = ok.levels;
        j["ratio"] = to_string(ratio);
        os << j.dump(2) << "\n";
    } else {
        os << dump(ok.polygon);
        os << "area = " << to_string(a) << "\n";
        os << "2*area = " << to_string(Rational(a * 2)) << "\n";
        os << "D/d^n = " << to_string(ratio) << "\n";
        os << "stabilized after " << ok.levels << " levels\n";
    }
    return 0;
}

int cmd_oracle(const Globals& g, Inputs& in, std::ostream& os)
{
    JobConfig job = resolve_job(in);
    auto system = job.parsed_system();
    Format fmt = pick_format(g, Format::Text);
    if (!in.point.empty()) {
        auto fc = fiber_count(system, parse_point(in.point));
        if (fmt == Format::Json) {
            ojson orders = ojson::array();
            for (const auto& o : fc.orders) {
                orders.push_back({{"eliminated", o.eliminated}, {"shear", o.shear}, {"degree", o.resultant_degree}});
            }
            os << ojson{{"count", fc.count}, {"orders", orders}}.dump(2) << "\n";
        } else {
            os << "count = " << fc.count << "\n";
        }
        return 0;
    }
    ProbeOptions opt;
    opt.seed = require_seed(g, job);
    opt.trials = trial_count(g, job);
    print_probe(os, generic_probe(system, opt), fmt);
    return 0;
}

int cmd_verify(const Globals& g, Inputs& in, std::ostream& os)
{
    JobConfig job = resolve_job(in);
    auto reports = run_bounds(job, JobMethod::All);
    ProbeOptions opt;
    opt.seed = require_seed(g, job);
    opt.trials = trial_count(g, job);
    auto probe = generic_probe(job.parsed_system(), opt);
    const Rational oracle(static_cast<unsigned long>(probe.consensus.count));

    std::vector<std::string> tight;
    std::vector<std::string> violated;
    for (const auto& r : reports) {
        if (r.value == oracle) {
            tight.push_back(std::string(to_string(r.method)) + " exact");
        } else if (r.value < oracle) {
            violated.push_back(std::string(to_string(r.method)));
        }
    }
    std::string verdict;
    if (!violated.empty()) {
        verdict = "oracle exceeds";
        for (const auto& v : violated) {
            verdict += " " + v;
        }
    } else if (tight.empty()) {
        verdict = "no bound is tight";
    } else {
        for (std::size_t i = 0; i < tight.size(); ++i) {
            verdict += (i > 0 ? ", " : "") + tight[i];
        }
    }

    if (pick_format(g, Format::Text) == Format::Json) {
        ojson rows = ojson::array();
        for (const auto& r : reports) {
            rows.push_back({{"method", std::string(to_string(r.method))},
                            {"value", to_string(r.value)},
                            {"exact", std::string(to_string(r.exact))}});
        }
        ojson j{{"bounds", rows},
                {"oracle", probe.consensus.count},
                {"accepted", probe.accepted},
                {"outliers", probe.outliers.size()},
                {"verdict", verdict}};
        os << j.dump(2) << "\n";
    } else {
        os << std::left << std::setw(10) << "method" << std::setw(10) << "value" << "exact\n";
        for (const auto& r : reports) {
            os << std::setw(10) << to_string(r.method) << std::setw(10) << to_string(r.value)
               << to_string(r.exact) << "\n";
        }
        os << std::setw(10) << "oracle" << std::setw(10) << probe.consensus.count << probe.accepted << "/"
           << probe.trials.size() << " trials\n";
        os << "verdict: " << verdict << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree evaluation, Bezout-type bounds and resultant root counts"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    Inputs in;
    app.add_option("--seed", globals.seed, "random seed for the oracle");
    app.add_option("--format", globals.format, "text or json");
    app.add_option("--trials", globals.trials, "oracle trials");

    auto add_job_flags = [&](CLI::App* sub) {
        sub->add_option("--config", in.config, "job config JSON");
        sub->add_option("--chain", in.chain, "chain config JSON");
        sub->add_option("--weights", in.weights, "comma-separated weights");
        sub->add_option("--vars", in.vars, "comma-separated variable names");
        sub->add_option("--shift", in.shift, "comma-separated rationals a1,a2");
        sub->add_option("--output", in.output, "write the result here instead of stdout");
    };

    std::string expr;
    auto* eval = app.add_subcommand("eval-degree", "evaluate a chain or weighted degree");
    eval->add_option("--chain", in.chain, "chain config JSON");
    eval->add_option("--weights", in.weights, "comma-separated weights");
    eval->add_option("--vars", in.vars, "comma-separated variable names");
    eval->add_option("expr", expr, "polynomial")->required();

    auto* bound = app.add_subcommand("bound", "compute root-count bounds");
    add_job_flags(bound);
    bound->add_option("--system", in.system, "polynomials");
    bound->add_option("--method", in.method, "weighted|iterated|bkk|okounkov|all");
    bound->add_option("--d", in.d, "Okounkov level");
    bound->add_option("--cutoff", in.cutoff, "Okounkov cutoff");
    bound->add_option("--valuation", in.valuation, "lex, lex:<perm> or grlex");

    auto* newton = app.add_subcommand("newton", "Newton polygons and mixed volume of two polynomials");
    add_job_flags(newton);
    newton->add_option("system", in.system, "two polynomials");

    auto* okounkov = app.add_subcommand("okounkov", "Okounkov polygon of a degree");
    okounkov->add_option("--config", in.config, "job config JSON");
    okounkov->add_option("--chain", in.chain, "chain config JSON");
    okounkov->add_option("--weights", in.weights, "comma-separated weights");
    okounkov->add_option("--vars", in.vars, "comma-separated variable names");
    okounkov->add_option("--d", in.d, "level");
    okounkov->add_option("--cutoff", in.cutoff, "largest filtration degree");
    okounkov->add_option("--valuation", in.valuation, "lex, lex:<perm> or grlex");

    auto* oracle = app.add_subcommand("oracle-count", "count fiber points by resultants");
    add_job_flags(oracle);
    oracle->add_option("--system", in.system, "two polynomials");
    oracle->add_option("--point", in.point, "single point a1,a2 instead of probing");

    auto* verify = app.add_subcommand("verify", "compare every bound with the oracle");
    add_job_flags(verify);
    verify->add_option("--system", in.system, "two polynomials");
    verify->add_option("--d", in.d, "Okounkov level");
    verify->add_option("--cutoff", in.cutoff, "Okounkov cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ostringstream out;
    try {
        if (*eval) {
            cmd_eval_degree(globals, in, expr, out);
        } else if (*bound) {
            cmd_bound(globals, in, out);
        } else if (*newton) {
            cmd_newton(globals, in, out);
        } else if (*okounkov) {
            cmd_okounkov(globals, in, out);
        } else if (*oracle) {
            cmd_oracle(globals, in, out);
        } else if (*verify) {
            cmd_verify(globals, in, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string text = out.str();
    if (!in.output.empty()) {
        std::ofstream f(in.output);
        if (!f) {
            std::cerr << "error: cannot write " << in.output << "\n";
            return 2;
        }
        f << text;
        return 0;
    }
    std::cout << text;
    return 0;
}
