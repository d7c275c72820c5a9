#include "aperiodic/cli/config.hpp"

#include <algorithm>
#include <set>

#include "aperiodic/symbolic/schedule.hpp"

namespace aperiodic::cli {

namespace {

const std::set<std::string> kKeys = {"system",     "morphism", "schedule", "lengths",   "base",     "operation",
                                     "level",      "letter",   "prefix",   "word",      "levels",   "scales",
                                     "epsilon",    "window",   "beta",     "candidates", "ambientOffset",
                                     "alignment",  "accuracy", "out",      "csv",       "wordFile", "threads"};

const std::set<std::string> kSystems = {"fibonacci", "scrambled", "abc", "custom"};

struct Collector {
    std::vector<std::string> problems;
    void add(std::string s) { problems.push_back(std::move(s)); }
};

std::optional<std::string> getString(const Json& doc, const char* key, Collector& c)
{
    if (!doc.contains(key))
        return std::nullopt;
    const auto& v = doc.at(key);
    if (!v.is_string()) {
        c.add(std::string("'") + key + "' must be a string");
        return std::nullopt;
    }
    return v.get<std::string>();
}

// Reals may come as JSON numbers or strings; both are kept as text.
std::optional<std::string> getReal(const Json& doc, const char* key, Collector& c)
{
    if (!doc.contains(key))
        return std::nullopt;
    const auto& v = doc.at(key);
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number())
        return v.dump();
    c.add(std::string("'") + key + "' must be a number or a string");
    return std::nullopt;
}

std::optional<long> getInt(const Json& doc, const char* key, long lo, long hi, Collector& c)
{
    if (!doc.contains(key))
        return std::nullopt;
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) {
        c.add(std::string("'") + key + "' must be an integer");
        return std::nullopt;
    }
    long x = v.get<long>();
    if (x < lo || x > hi) {
        c.add(std::string("'") + key + "' = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]");
        return std::nullopt;
    }
    return x;
}

std::vector<long> getIntList(const Json& doc, const char* key, long lo, Collector& c)
{
    std::vector<long> out;
    if (!doc.contains(key))
        return out;
    const auto& v = doc.at(key);
    if (!v.is_array()) {
        c.add(std::string("'") + key + "' must be an array of integers");
        return out;
    }
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<long>() < lo) {
            c.add(std::string("'") + key + "' entries must be integers >= " + std::to_string(lo));
            return {};
        }
        out.push_back(x.get<long>());
    }
    return out;
}

std::optional<LengthSpec> parseLengths(const Json& v, const char* key, Collector& c)
{
    LengthSpec s;
    const std::string name = key;
    if (v.is_string()) {
        s.kind = v.get<std::string>();
        if (s.kind != "golden" && s.kind != "unit") {
            c.add("'" + name + "' must be \"golden\", \"unit\", {\"deformed\": ...} or {\"explicit\": ...}");
            return std::nullopt;
        }
        return s;
    }
    if (!v.is_object() || v.size() != 1) {
        c.add("'" + name + "' must be a string or an object with one key");
        return std::nullopt;
    }
    if (v.contains("deformed")) {
        const auto& d = v.at("deformed");
        s.kind = "deformed";
        if (!d.is_object()) {
            c.add("'" + name + ".deformed' must be an object");
            return std::nullopt;
        }
        for (const auto& [k, unused] : d.items()) {
            (void)unused;
            if (k != "eigen" && k != "t")
                c.add("unknown key '" + name + ".deformed." + k + "'");
        }
        if (!d.contains("eigen") || !d.at("eigen").is_number_integer() || d.at("eigen").get<int>() < 1)
            c.add("'" + name + ".deformed.eigen' must be a positive integer");
        else
            s.eigen = d.at("eigen").get<int>();
        if (!d.contains("t") || !(d.at("t").is_string() || d.at("t").is_number_integer()))
            c.add("'" + name + ".deformed.t' must be a rational string such as \"1/8\"");
        else
            s.t = d.at("t").is_string() ? d.at("t").get<std::string>() : d.at("t").dump();
        return s;
    }
    if (v.contains("explicit")) {
        const auto& t = v.at("explicit");
        s.kind = "explicit";
        if (!t.is_object() || t.empty()) {
            c.add("'" + name + ".explicit' must map letters to lengths");
            return std::nullopt;
        }
        for (const auto& [k, x] : t.items()) {
            if (x.is_string())
                s.table[k] = x.get<std::string>();
            else if (x.is_number())
                s.table[k] = x.dump();
            else
                c.add("'" + name + ".explicit." + k + "' must be a number or a string");
        }
        return s;
    }
    c.add("'" + name + "' has an unknown form");
    return std::nullopt;
}

} // namespace

Json LengthSpec::toJson() const
{
    if (kind == "golden" || kind == "unit")
        return kind;
    if (kind == "deformed")
        return Json{{"deformed", Json{{"eigen", eigen}, {"t", t}}}};
    Json table = Json::object();
    for (const auto& [k, v] : this->table)
        table[k] = v;
    return Json{{"explicit", table}};
}

Json RunConfig::toJson() const
{
    Json j = Json::object();
    j["system"] = system;
    if (!morphism.empty())
        j["morphism"] = morphism;
    if (system == "scrambled") {
        if (scheduleValues.empty())
            j["schedule"] = scheduleName;
        else
            j["schedule"] = scheduleValues;
    }
    j["lengths"] = lengths.toJson();
    if (base)
        j["base"] = base->toJson();
    j["operation"] = operation;
    if (level)
        j["level"] = *level;
    j["letter"] = letter;
    if (prefix)
        j["prefix"] = *prefix;
    if (word)
        j["word"] = *word;
    if (!levels.empty())
        j["levels"] = levels;
    if (!scales.empty())
        j["scales"] = scales;
    if (epsilon)
        j["epsilon"] = *epsilon;
    if (window)
        j["window"] = *window;
    if (beta)
        j["beta"] = *beta;
    if (candidates)
        j["candidates"] = *candidates;
    if (ambientOffset)
        j["ambientOffset"] = *ambientOffset;
    j["alignment"] = alignment;
    j["accuracy"] = accuracy;
    if (out)
        j["out"] = *out;
    if (csv)
        j["csv"] = *csv;
    if (wordFile)
        j["wordFile"] = *wordFile;
    j["threads"] = threads;
    return j;
}

ParseResult parseConfig(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        return ParseResult{std::nullopt, {std::string("config is not valid JSON: ") + e.what()}};
    }
    return parseConfig(doc);
}

ParseResult parseConfig(const Json& doc)
{
    Collector c;
    if (!doc.is_object())
        return ParseResult{std::nullopt, {"config must be a JSON object"}};
    for (const auto& [k, unused] : doc.items()) {
        (void)unused;
        if (!kKeys.count(k))
            c.add("unknown key '" + k + "'");
    }

    RunConfig cfg;
    if (auto s = getString(doc, "system", c)) {
        if (!kSystems.count(*s))
            c.add("unknown system '" + *s + "'");
        cfg.system = *s;
    }
    if (doc.contains("morphism")) {
        const auto& m = doc.at("morphism");
        if (!m.is_object() || m.empty()) {
            c.add("'morphism' must map letters to image words");
        } else {
            for (const auto& [k, v] : m.items()) {
                if (k.size() != 1 || !v.is_string() || v.get<std::string>().empty())
                    c.add("'morphism." + k + "' must map a one-character letter to a non-empty word");
                else
                    cfg.morphism[k] = v.get<std::string>();
            }
        }
        if (cfg.system != "custom")
            c.add("'morphism' only applies to the custom system");
    } else if (cfg.system == "custom") {
        c.add("the custom system needs a 'morphism' table");
    }

    if (doc.contains("schedule")) {
        const auto& s = doc.at("schedule");
        if (cfg.system != "scrambled")
            c.add("'schedule' only applies to the scrambled system");
        if (s.is_string()) {
            cfg.scheduleName = s.get<std::string>();
            if (cfg.scheduleName != "pow2minus1")
                c.add("unknown schedule '" + cfg.scheduleName + "'");
        } else if (s.is_array()) {
            cfg.scheduleName = "explicit";
            cfg.scheduleValues = getIntList(doc, "schedule", 0, c);
            if (cfg.scheduleValues.empty())
                c.add("explicit schedule must list at least one value");
            else
                for (auto& v : symbolic::ScrambleSchedule::explicitList(cfg.scheduleValues).violations())
                    c.add("schedule: " + v);
        } else {
            c.add("'schedule' must be \"pow2minus1\" or a list of integers");
        }
    }

    if (doc.contains("lengths"))
        if (auto l = parseLengths(doc.at("lengths"), "lengths", c))
            cfg.lengths = *l;
    if (doc.contains("base"))
        cfg.base = parseLengths(doc.at("base"), "base", c);

    if (auto op = getString(doc, "operation", c)) {
        cfg.operation = *op;
        if (std::find(kOperations.begin(), kOperations.end(), *op) == kOperations.end())
            c.add("unknown operation '" + *op + "'");
    }

    if (auto v = getInt(doc, "level", 0, 100000, c))
        cfg.level = static_cast<int>(*v);
    if (auto v = getString(doc, "letter", c)) {
        if (v->size() != 1)
            c.add("'letter' must be a single character");
        cfg.letter = *v;
    }
    if (auto v = getInt(doc, "prefix", 1, 1L << 40, c))
        cfg.prefix = static_cast<std::size_t>(*v);
    cfg.word = getString(doc, "word", c);
    for (long v : getIntList(doc, "levels", 0, c))
        cfg.levels.push_back(static_cast<int>(v));
    for (long v : getIntList(doc, "scales", 1, c))
        cfg.scales.push_back(static_cast<std::size_t>(v));
    for (std::size_t i = 1; i < cfg.scales.size(); ++i)
        if (cfg.scales[i] <= cfg.scales[i - 1]) {
            c.add("'scales' must be increasing");
            break;
        }
    cfg.epsilon = getReal(doc, "epsilon", c);
    cfg.window = getReal(doc, "window", c);
    cfg.beta = getString(doc, "beta", c);
    cfg.candidates = getString(doc, "candidates", c);
    if (auto v = getInt(doc, "ambientOffset", 1, 64, c))
        cfg.ambientOffset = static_cast<int>(*v);
    if (auto v = getString(doc, "alignment", c)) {
        if (*v != "aligned" && *v != "window")
            c.add("'alignment' must be \"aligned\" or \"window\"");
        cfg.alignment = *v;
    }
    if (auto v = getInt(doc, "accuracy", 1, 200, c))
        cfg.accuracy = static_cast<int>(*v);
    cfg.out = getString(doc, "out", c);
    cfg.csv = getString(doc, "csv", c);
    cfg.wordFile = getString(doc, "wordFile", c);
    if (auto v = getInt(doc, "threads", 1, 256, c))
        cfg.threads = static_cast<int>(*v);

    if (!c.problems.empty())
        return ParseResult{std::nullopt, std::move(c.problems)};
    return ParseResult{std::move(cfg), {}};
}

} // namespace aperiodic::cli
