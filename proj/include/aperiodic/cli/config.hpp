#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace aperiodic::cli {

using Json = nlohmann::json;

inline const std::vector<std::string> kOperations = {"generate",     "decompose", "meyer-gap", "spacing-count",
                                                     "eps-dual",     "eig-test",  "obstruction", "cochain",
                                                     "return-vectors"};

/// How tile lengths are chosen: "golden", "unit", deformed by an eigenvector,
/// or an explicit per-letter table of numbers in Q or Q(phi).
struct LengthSpec {
    std::string kind = "golden";
    int eigen = 0;
    std::string t;
    std::map<std::string, std::string> table;

    Json toJson() const;
    bool operator==(const LengthSpec&) const = default;
};

struct RunConfig {
    std::string system = "fibonacci";
    /// Custom systems only: symbol -> image, e.g. {"a": "ab", "b": "a"}.
    std::map<std::string, std::string> morphism;
    /// "pow2minus1" or an explicit list of N values.
    std::string scheduleName = "pow2minus1";
    std::vector<long> scheduleValues;
    LengthSpec lengths;
    /// Reference lengths for cochains; defaults to unit.
    std::optional<LengthSpec> base;
    std::string operation;

    std::optional<int> level;
    std::string letter = "a";
    std::optional<std::size_t> prefix;
    std::optional<std::string> word;
    std::vector<int> levels;
    std::vector<std::size_t> scales;
    std::optional<std::string> epsilon;
    std::optional<std::string> window;
    std::optional<std::string> beta;
    std::optional<std::string> candidates;
    std::optional<int> ambientOffset;
    std::string alignment = "aligned";

    int accuracy = 12;
    std::optional<std::string> out;
    std::optional<std::string> csv;
    std::optional<std::string> wordFile;
    int threads = 1;

    /// Canonical form: every field, keys sorted.
    Json toJson() const;
    bool operator==(const RunConfig&) const = default;
};

struct ParseResult {
    std::optional<RunConfig> config;
    /// Every problem found, not only the first.
    std::vector<std::string> violations;
};

ParseResult parseConfig(const std::string& text);
ParseResult parseConfig(const Json& doc);

} // namespace aperiodic::cli
