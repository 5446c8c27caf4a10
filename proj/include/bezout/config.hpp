#pragma once

#include "bezout/degrees.hpp"
#include "bezout/polytope.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bezout {

/// {"vars": [...], "weights": [...], "steps": [{"h": "...", "w": 1}, ...]}.
/// Unknown fields, malformed JSON or wrong types raise InvalidArgument;
/// chain preconditions raise their own codes.
SemidegreeChain parse_chain(const std::string& json_text);
SemidegreeChain load_chain(const std::filesystem::path& path);

/// "lex" (identity order), "lex:1,0" (explicit permutation, 0-based) or "grlex".
MonomialValuation parse_valuation(const std::string& text, std::size_t n);

enum class JobMethod { Weighted, Iterated, Bkk, Okounkov, All };

struct JobConfig {
    std::vector<std::string> vars;
    std::vector<std::string> system;
    std::optional<SemidegreeChain> chain;
    std::optional<std::vector<std::int64_t>> weights;
    JobMethod method = JobMethod::All;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> output;
    std::optional<std::vector<std::string>> shift; ///< rationals as text
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> cutoff;
    std::optional<std::string> valuation;

    AmbientRing ambient() const { return AmbientRing(vars); }
    std::vector<Polynomial> parsed_system() const;
    std::optional<std::vector<Rational>> parsed_shift() const;
};

/// Fields: vars, system, chain (inline object or path relative to base_dir),
/// weights, method (weighted|iterated|bkk|okounkov|all), seed, trials,
/// output, shift, d, cutoff, valuation. Everything is validated here:
/// unknown fields, types, polynomial syntax, ambient consistency.
JobConfig parse_job(const std::string& json_text, const std::filesystem::path& base_dir = ".");
JobConfig load_job(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

} // namespace bezout
