#include "bezout/config.hpp"

#include "bezout/error.hpp"
#include "bezout/parser.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bezout {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorCode::InvalidArgument, what + ": " + e.what());
    }
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& what)
{
    if (!obj.is_object()) {
        raise(ErrorCode::InvalidArgument, what + " must be a JSON object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (known.count(it.key()) == 0) {
            raise(ErrorCode::InvalidArgument, what + ": unknown field '" + it.key() + "'");
        }
    }
}

template <class T>
T get(const json& obj, const char* key, const std::string& what)
{
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        raise(ErrorCode::InvalidArgument, what + ": field '" + key + "': " + e.what());
    }
}

template <class T>
T get_unsigned(const json& obj, const char* key, const std::string& what)
{
    if (!obj.at(key).is_number_unsigned()) {
        raise(ErrorCode::InvalidArgument, what + ": field '" + key + "' must be a non-negative integer");
    }
    return get<T>(obj, key, what);
}

SemidegreeChain chain_from_json(const json& j)
{
    const std::string what = "chain config";
    reject_unknown(j, {"vars", "weights", "steps"}, what);
    AmbientRing amb(get<std::vector<std::string>>(j, "vars", what));
    WeightedDegree base(amb, get<std::vector<std::int64_t>>(j, "weights", what));
    std::vector<IterationStep> steps;
    if (j.contains("steps")) {
        const json& arr = j.at("steps");
        if (!arr.is_array()) {
            raise(ErrorCode::InvalidArgument, what + ": 'steps' must be an array");
        }
        for (const auto& s : arr) {
            reject_unknown(s, {"h", "w"}, what + " step");
            steps.push_back({parse(get<std::string>(s, "h", what), amb), get<std::int64_t>(s, "w", what)});
        }
    }
    return SemidegreeChain(std::move(base), std::move(steps));
}

} // namespace

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        raise(ErrorCode::InvalidArgument, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SemidegreeChain parse_chain(const std::string& json_text)
{
    return chain_from_json(parse_json(json_text, "chain config"));
}

SemidegreeChain load_chain(const std::filesystem::path& path)
{
    return parse_chain(read_file(path));
}

MonomialValuation parse_valuation(const std::string& text, std::size_t n)
{
    if (text == "grlex") {
        return MonomialValuation::graded_lex(n);
    }
    std::vector<std::size_t> perm;
    if (text == "lex") {
        for (std::size_t i = 0; i < n; ++i) {
            perm.push_back(i);
        }
    } else if (text.rfind("lex:", 0) == 0) {
        std::stringstream ss(text.substr(4));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                perm.push_back(std::stoul(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::logic_error&) {
                raise(ErrorCode::InvalidArgument, "bad valuation index '" + item + "'");
            }
        }
    } else {
        raise(ErrorCode::InvalidArgument, "valuation must be lex, lex:<perm> or grlex, got '" + text + "'");
    }
    if (perm.size() != n) {
        raise(ErrorCode::InvalidArgument, "valuation permutation needs " + std::to_string(n) + " entries");
    }
    return MonomialValuation::lex(std::move(perm));
}

std::vector<Polynomial> JobConfig::parsed_system() const
{
    AmbientRing amb = ambient();
    std::vector<Polynomial> out;
    for (const auto& s : system) {
        out.push_back(parse(s, amb));
    }
    return out;
}

std::optional<std::vector<Rational>> JobConfig::parsed_shift() const
{
    if (!shift) {
        return std::nullopt;
    }
    std::vector<Rational> out;
    for (const auto& s : *shift) {
        out.push_back(parse_rational(s));
    }
    return out;
}

JobConfig parse_job(const std::string& json_text, const std::filesystem::path& base_dir)
{
    const std::string what = "job config";
    json j = parse_json(json_text, what);
    reject_unknown(j, {"vars", "system", "chain", "weights", "method", "seed", "trials", "output", "shift", "d",
                       "cutoff", "valuation"},
                   what);
    JobConfig cfg;
    if (j.contains("chain")) {
        const json& c = j.at("chain");
        if (c.is_string()) {
            std::filesystem::path p = c.get<std::string>();
            cfg.chain = load_chain(p.is_absolute() ? p : base_dir / p);
        } else {
            cfg.chain = chain_from_json(c);
        }
    }
    if (j.contains("vars")) {
        cfg.vars = get<std::vector<std::string>>(j, "vars", what);
    } else if (cfg.chain) {
        cfg.vars = cfg.chain->ambient().names();
    } else {
        raise(ErrorCode::InvalidArgument, what + ": 'vars' is required without a chain");
    }
    AmbientRing amb(cfg.vars);
    if (cfg.chain && !(cfg.chain->ambient() == amb)) {
        raise(ErrorCode::AmbientMismatch, what + ": chain variables " + to_string(cfg.chain->ambient()) +
                                              " differ from " + to_string(amb));
    }
    cfg.system = get<std::vector<std::string>>(j, "system", what);
    if (j.contains("weights")) {
        cfg.weights = get<std::vector<std::int64_t>>(j, "weights", what);
        WeightedDegree(amb, *cfg.weights); // validates
    }
    if (j.contains("method")) {
        auto m = get<std::string>(j, "method", what);
        if (m == "weighted") {
            cfg.method = JobMethod::Weighted;
        } else if (m == "iterated") {
            cfg.method = JobMethod::Iterated;
        } else if (m == "bkk") {
            cfg.method = JobMethod::Bkk;
        } else if (m == "okounkov") {
            cfg.method = JobMethod::Okounkov;
        } else if (m == "all") {
            cfg.method = JobMethod::All;
        } else {
            raise(ErrorCode::InvalidArgument, what + ": unknown method '" + m + "'");
        }
    }
    if (j.contains("seed")) {
        cfg.seed = get_unsigned<std::uint64_t>(j, "seed", what);
    }
    if (j.contains("trials")) {
        cfg.trials = get_unsigned<std::size_t>(j, "trials", what);
    }
    if (j.contains("output")) {
        cfg.output = get<std::string>(j, "output", what);
    }
    if (j.contains("shift")) {
        cfg.shift = get<std::vector<std::string>>(j, "shift", what);
        if (cfg.shift->size() != amb.size()) {
            raise(ErrorCode::InvalidArgument, what + ": shift needs " + std::to_string(amb.size()) + " entries");
        }
        cfg.parsed_shift();
    }
    if (j.contains("d")) {
        cfg.d = get<std::int64_t>(j, "d", what);
    }
    if (j.contains("cutoff")) {
        cfg.cutoff = get<std::int64_t>(j, "cutoff", what);
    }
    if (j.contains("valuation")) {
        cfg.valuation = get<std::string>(j, "valuation", what);
        parse_valuation(*cfg.valuation, amb.size());
    }
    cfg.parsed_system();
    return cfg;
}

JobConfig load_job(const std::filesystem::path& path)
{
    return parse_job(read_file(path), path.parent_path());
}

} // namespace bezout
