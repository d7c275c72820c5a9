#include "aperiodic/cli/run.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <sys/resource.h>

#include "aperiodic/cli/json_io.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/geometry/deformation.hpp"
#include "aperiodic/geometry/return_vectors.hpp"
#include "aperiodic/meyer/eps_dual.hpp"
#include "aperiodic/meyer/spacing.hpp"
#include "aperiodic/spectra/criterion.hpp"
#include "aperiodic/symbolic/decompose.hpp"

namespace aperiodic::cli {

using algebra::FieldElement;
using algebra::Rational;
using geometry::LengthAssignment;
using symbolic::Alphabet;
using symbolic::FusionRule;
using symbolic::Word;

namespace {

constexpr std::size_t kInlineWordLimit = 1'000'000;
constexpr std::size_t kInlinePartLimit = 10'000;
const std::vector<int> kDefaultObstructionLevels = {3, 5, 7, 9};

struct System {
    std::shared_ptr<const FusionRule> rule;
    Alphabet alphabet;
    std::optional<symbolic::Morphism> stationary;
    symbolic::ScrambleSchedule schedule;
};

symbolic::ScrambleSchedule scheduleOf(const RunConfig& cfg)
{
    return cfg.scheduleValues.empty() ? symbolic::ScrambleSchedule::pow2minus1()
                                      : symbolic::ScrambleSchedule::explicitList(cfg.scheduleValues);
}

System buildSystem(const RunConfig& cfg)
{
    System s;
    if (cfg.system == "fibonacci") {
        s.rule = FusionRule::fibonacci();
        s.stationary = symbolic::fibonacciMorphism();
    } else if (cfg.system == "scrambled") {
        s.schedule = scheduleOf(cfg);
        s.rule = FusionRule::scrambled(s.schedule);
    } else if (cfg.system == "abc") {
        s.rule = FusionRule::substitution(Alphabet::abc(), symbolic::abcMorphism());
        s.stationary = symbolic::abcMorphism();
    } else {
        std::string symbols;
        for (const auto& [k, v] : cfg.morphism)
            symbols += k;
        Alphabet a(symbols);
        std::vector<Word> images;
        for (const auto& [k, v] : cfg.morphism)
            images.push_back(a.parse(v));
        s.stationary = symbolic::Morphism(std::move(images));
        s.rule = FusionRule::substitution(a, *s.stationary);
    }
    s.alphabet = s.rule->alphabet();
    return s;
}

LengthAssignment buildLengths(const System& s, const LengthSpec& spec)
{
    if (spec.kind == "golden")
        return LengthAssignment::golden(s.alphabet);
    if (spec.kind == "unit")
        return LengthAssignment::unit(s.alphabet);
    if (spec.kind == "deformed") {
        if (!s.stationary)
            throw ConstraintError("deformed lengths need a stationary substitution");
        return LengthAssignment::deformed(s.alphabet, *s.stationary, spec.eigen, parseRational(spec.t));
    }
    std::vector<FieldElement> values;
    for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
        std::string key(1, s.alphabet.symbol(static_cast<symbolic::Letter>(x)));
        auto it = spec.table.find(key);
        if (it == spec.table.end())
            throw ConstraintError("explicit lengths miss letter '" + key + "'");
        values.push_back(parseElement(it->second));
    }
    for (const auto& [k, v] : spec.table)
        if (k.size() != 1 || s.alphabet.symbols().find(k[0]) == std::string::npos)
            throw ConstraintError("explicit lengths name unknown letter '" + k + "'");
    return LengthAssignment(s.alphabet, std::move(values), "explicit");
}

Word sourceWord(const RunConfig& cfg, const System& s)
{
    Word w;
    if (cfg.word) {
        w = s.alphabet.parse(*cfg.word);
    } else {
        symbolic::Letter x = s.alphabet.letter(cfg.letter[0]);
        auto full = s.rule->superletter(*cfg.level, x);
        std::size_t n = cfg.prefix ? std::min(*cfg.prefix, full->size()) : full->size();
        w.assign(full->begin(), full->begin() + static_cast<long>(n));
        return w;
    }
    if (cfg.prefix && *cfg.prefix < w.size())
        w.resize(*cfg.prefix);
    return w;
}

std::vector<spectra::Candidate> parseCandidates(const RunConfig& cfg)
{
    if (cfg.beta)
        return {{parseElement(*cfg.beta), *cfg.beta}};
    const std::string& spec = *cfg.candidates;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto toInt = [&](const std::string& t) {
        try {
            std::size_t used = 0;
            long v = std::stol(t, &used);
            if (used == t.size())
                return v;
        } catch (const std::exception&) {
        }
        throw ConstraintError("bad candidate range '" + spec + "'");
    };
    if (kind == "golden-height")
        return spectra::goldenHeightCandidates(static_cast<int>(toInt(arg)));
    if (kind == "zphi-height")
        return spectra::goldenIntegerCandidates(static_cast<int>(toInt(arg)));
    if (kind == "integers") {
        auto dots = arg.find("..");
        if (dots == std::string::npos)
            throw ConstraintError("integer candidates need a range such as 'integers:0..5'");
        return spectra::integerCandidates(toInt(arg.substr(0, dots)), toInt(arg.substr(dots + 2)));
    }
    std::vector<spectra::Candidate> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto comma = spec.find(',', start);
        std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back({parseElement(item), item});
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers; results land by index.
template <class T, class Fn>
std::vector<T> parallelMap(std::size_t n, int threads, Fn fn)
{
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    auto body = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(body, w);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

bool needsSource(const std::string& op)
{
    return op == "generate" || op == "decompose" || op == "meyer-gap" || op == "spacing-count" ||
           op == "eps-dual" || op == "cochain";
}

Json errorJson(const std::string& kind, const std::string& message)
{
    return Json{{"kind", kind}, {"message", message}};
}

} // namespace

std::vector<std::string> requirementViolations(const RunConfig& cfg)
{
    std::vector<std::string> v;
    const std::string& op = cfg.operation;
    if (op.empty()) {
        v.push_back("no operation given");
        return v;
    }
    if (needsSource(op) && !cfg.word && !cfg.level)
        v.push_back(op + " needs a 'word' or a 'level'");
    if (op == "generate" && !cfg.level)
        v.push_back("generate needs a 'level'");
    if (op == "decompose" && cfg.levels.empty())
        v.push_back("decompose needs 'levels'");
    if ((op == "meyer-gap" || op == "spacing-count") && cfg.scales.empty())
        v.push_back(op + " needs 'scales'");
    if (op == "eps-dual" && (!cfg.epsilon || !cfg.window))
        v.push_back("eps-dual needs 'epsilon' and 'window'");
    if ((op == "eig-test" || op == "obstruction") && !cfg.beta && !cfg.candidates)
        v.push_back(op + " needs 'beta' or 'candidates'");
    if (cfg.beta && cfg.candidates)
        v.push_back("give either 'beta' or 'candidates', not both");
    if (op == "eig-test" && cfg.system != "scrambled") {
        if (cfg.levels.empty())
            v.push_back("eig-test needs 'levels' (orders from first to last)");
        if (!cfg.epsilon)
            v.push_back("eig-test needs 'epsilon'");
    }
    if (op == "obstruction" || (op == "eig-test" && cfg.system == "scrambled")) {
        if (cfg.system != "scrambled")
            v.push_back("obstruction needs the scrambled system");
        if (cfg.lengths.kind != "golden" && cfg.lengths.kind != "unit")
            v.push_back("obstruction needs golden or unit lengths");
    }
    if (op == "return-vectors" && cfg.levels.empty())
        v.push_back("return-vectors needs 'levels'");
    for (std::size_t i = 1; i < cfg.levels.size() && (op == "eig-test" || op == "obstruction"); ++i)
        if (cfg.levels[i] <= cfg.levels[i - 1]) {
            v.push_back("'levels' must be increasing");
            break;
        }
    return v;
}

std::vector<std::string> existingOutputs(const RunConfig& cfg)
{
    std::vector<std::string> out;
    for (const auto& p : {cfg.out, cfg.csv, cfg.wordFile})
        if (p && std::filesystem::exists(*p))
            out.push_back(*p);
    return out;
}

RunOutcome rejectedConfig(const std::vector<std::string>& violations)
{
    RunOutcome o;
    o.exitCode = kExitConstraint;
    Json errors = Json::array();
    for (const auto& v : violations)
        errors.push_back(errorJson("config", v));
    o.report = Json{{"schema", kSchemaTag}, {"status", "error"}, {"exitCode", o.exitCode}, {"errors", errors}};
    return o;
}

namespace {

struct Ctx {
    const RunConfig& cfg;
    const System& sys;
    RunOutcome& out;
    int digits;
};

Json cert(const algebra::CertifiedReal& x, int digits)
{
    return realJson(x, std::min(digits, x.decimalDigits()));
}

std::string symbolOf(const Alphabet& a, symbolic::Letter x)
{
    return std::string(1, a.symbol(x));
}

Json populationJson(const Alphabet& a, const symbolic::Population& p)
{
    Json j = Json::object();
    for (std::size_t x = 0; x < p.size(); ++x)
        j[symbolOf(a, static_cast<symbolic::Letter>(x))] = p[x].get_str();
    return j;
}

Json opGenerate(Ctx& c)
{
    Word w = sourceWord(c.cfg, c.sys);
    Json r{{"level", *c.cfg.level},
           {"letter", c.cfg.letter},
           {"length", w.size()},
           {"population", populationJson(c.sys.alphabet, symbolic::population(w, c.sys.alphabet.size()))}};
    if (w.size() <= kInlineWordLimit)
        r["word"] = c.sys.alphabet.render(w);
    else
        r["wordOmitted"] = true;
    if (c.cfg.wordFile)
        c.out.word = c.sys.alphabet.render(w) + "\n";
    return r;
}

Json spanJson(const std::optional<symbolic::Span>& s)
{
    if (!s)
        return nullptr;
    return Json{{"offset", s->offset}, {"length", s->length}};
}

Json opDecompose(Ctx& c)
{
    Word w = sourceWord(c.cfg, c.sys);
    symbolic::Alignment align;
    if (c.cfg.alignment == "window")
        align = {-1, -1};
    Json levels = Json::array();
    for (int n : c.cfg.levels) {
        auto d = symbolic::decompose(*c.sys.rule, w, n, align);
        Json parts = Json::array();
        if (d.parts.size() <= kInlinePartLimit)
            for (const auto& p : d.parts)
                parts.push_back(Json{{"type", symbolOf(c.sys.alphabet, p.type)},
                                     {"offset", p.offset},
                                     {"length", p.length},
                                     {"ambiguous", p.ambiguous}});
        Json entry{{"level", n},
                   {"partCount", d.parts.size()},
                   {"leadingPartial", spanJson(d.leadingPartial)},
                   {"trailingPartial", spanJson(d.trailingPartial)},
                   {"verified", d.verified}};
        if (d.parts.size() <= kInlinePartLimit)
            entry["parts"] = parts;
        else
            entry["partsOmitted"] = true;
        levels.push_back(entry);
    }
    return Json{{"wordLength", w.size()}, {"alignment", c.cfg.alignment}, {"levels", levels}};
}

Json opMeyerGap(Ctx& c)
{
    Word w = sourceWord(c.cfg, c.sys);
    auto lengths = buildLengths(c.sys, c.cfg.lengths);
    auto profile = meyer::gapProfile(w, lengths, c.cfg.scales);
    Json entries = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : profile.entries) {
        Json gap = elementJson(e.gap, c.digits);
        entries.push_back(Json{{"scale", e.scale}, {"gap", gap}, {"distinctValues", e.distinctValues}});
        rows.push_back({std::to_string(e.scale), gap["value"].get<std::string>()});
    }
    c.out.csv = csvTable({"n", "gap"}, rows);
    return Json{{"wordLength", w.size()}, {"lengths", lengths.label()}, {"entries", entries}};
}

Json fitJson(const meyer::PowerFit& f)
{
    return Json{{"exponent", decimal(f.exponent)}, {"intercept", decimal(f.intercept)}, {"residual", decimal(f.residual)}};
}

Json opSpacingCount(Ctx& c)
{
    Word w = sourceWord(c.cfg, c.sys);
    auto lengths = buildLengths(c.sys, c.cfg.lengths);
    auto g = meyer::spacingGrowth(w, lengths, c.cfg.scales);
    Json counts = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : g.counts) {
        counts.push_back(Json{{"scale", e.scale}, {"count", e.count}});
        rows.push_back({std::to_string(e.scale), std::to_string(e.count)});
    }
    c.out.csv = csvTable({"n", "count"}, rows);
    return Json{{"wordLength", w.size()},
                {"counts", counts},
                {"fit", fitJson(g.fit)},
                {"lengthsIndependent", g.lengthsIndependent},
                {"warnings", g.warnings}};
}

Json opEpsDual(Ctx& c)
{
    Word w = sourceWord(c.cfg, c.sys);
    auto lengths = buildLengths(c.sys, c.cfg.lengths);
    auto patch = geometry::suspend(w, lengths);
    double eps = parseRational(*c.cfg.epsilon).get_d();
    double window = parseRational(*c.cfg.window).get_d();
    auto r = meyer::epsDual(patch, eps, window);
    // Interval ends are floating point; print what the data supports.
    int digits = std::min(c.digits, 12);
    Json intervals = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& iv : r.intervals) {
        std::string lo = decimal(Rational(iv.lo), digits), hi = decimal(Rational(iv.hi), digits);
        intervals.push_back(Json::array({lo, hi}));
        rows.push_back({lo, hi});
    }
    c.out.csv = csvTable({"lo", "hi"}, rows);
    return Json{{"vertices", patch.vertexCount()},
                {"epsilon", *c.cfg.epsilon},
                {"window", *c.cfg.window},
                {"intervals", intervals},
                {"maxGap", decimal(Rational(r.maxGap), digits)},
                {"degenerate", r.degenerate},
                {"accuracy", decimal(r.accuracy, 3)}};
}

Json obstructionJson(const spectra::ObstructionReport& r, int digits)
{
    Json levels = Json::array();
    for (const auto& lv : r.levels) {
        if (!lv.ok()) {
            levels.push_back(Json{{"kappa", lv.kappa}, {"error", lv.error}});
            continue;
        }
        Json e{{"kappa", lv.kappa},
               {"previousN", lv.previousN},
               {"v1", lv.v1.toString()},
               {"v2", lv.v2.toString()},
               {"dist1", cert(lv.dist1, digits)},
               {"dist2", cert(lv.dist2, digits)}};
        if (lv.identityChecked)
            e["identity"] = Json{{"five1", cert(lv.five1, digits)},
                                 {"product1", cert(lv.product1, digits)},
                                 {"five2", cert(lv.five2, digits)},
                                 {"product2", cert(lv.product2, digits)},
                                 {"agrees", lv.identityAgrees}};
        levels.push_back(e);
    }
    return Json{{"mode", spectra::toString(r.mode)},
                {"levels", levels},
                {"trend", spectra::toString(r.trend)},
                {"minOfMax", decimal(r.minOfMax)},
                {"minOfMin", decimal(r.minOfMin)}};
}

Json profileJson(const spectra::CriterionProfile& p, int digits)
{
    Json levels = Json::array();
    for (const auto& lv : p.levels) {
        Json e{{"order", lv.order}, {"ambient", lv.ambient}, {"vectorCount", lv.vectorCount},
               {"symbolicFallback", lv.symbolicFallback}};
        if (!lv.error.empty())
            e["error"] = lv.error;
        else if (lv.vectorCount > 0)
            e["maxDistance"] = cert(lv.maxDistance, digits);
        levels.push_back(e);
    }
    return Json{{"epsilon", decimal(p.epsilon)}, {"levels", levels}, {"pass", p.pass}, {"settledFrom", p.settledFrom}};
}

Json opEigen(Ctx& c, bool obstructionOnly)
{
    auto candidates = parseCandidates(c.cfg);
    Json rows = Json::array();
    std::vector<std::vector<std::string>> csvRows;
    if (c.cfg.system == "scrambled") {
        auto mode = c.cfg.lengths.kind == "golden" ? spectra::LengthMode::Golden : spectra::LengthMode::Unit;
        auto kappas = c.cfg.levels.empty() ? kDefaultObstructionLevels : c.cfg.levels;
        auto reports = parallelMap<spectra::ObstructionReport>(candidates.size(), c.cfg.threads, [&](std::size_t i) {
            return spectra::obstructionScrambled(c.sys.schedule, mode, candidates[i].beta, kappas);
        });
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto& r = reports[i];
            auto verdict = spectra::verdictOf(r);
            rows.push_back(Json{{"candidate", candidates[i].label},
                                {"beta", elementJson(candidates[i].beta, c.digits)},
                                {"verdict", spectra::toString(verdict)},
                                {"obstruction", obstructionJson(r, c.digits)}});
            for (const auto& lv : r.levels)
                if (lv.ok())
                    csvRows.push_back({candidates[i].label, std::to_string(lv.kappa),
                                       decimal(lv.dist1.mid(), std::min(c.digits, lv.dist1.decimalDigits())),
                                       decimal(lv.dist2.mid(), std::min(c.digits, lv.dist2.decimalDigits()))});
        }
        c.out.csv = csvTable({"candidate", "level", "distance1", "distance2"}, csvRows);
        return Json{{"method", "obstruction"}, {"rows", rows}};
    }
    if (obstructionOnly)
        throw ConstraintError("obstruction needs the scrambled system");
    auto lengths = buildLengths(c.sys, c.cfg.lengths);
    double eps = parseRational(*c.cfg.epsilon).get_d();
    int offset = c.cfg.ambientOffset.value_or(spectra::kCriterionAmbientOffset);
    auto profiles = parallelMap<spectra::CriterionProfile>(candidates.size(), c.cfg.threads, [&](std::size_t i) {
        return spectra::returnVectorCriterion(*c.sys.rule, lengths, candidates[i].beta, eps, c.cfg.levels.back(),
                                              c.cfg.levels.front(), offset);
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& p = profiles[i];
        auto verdict = spectra::verdictOf(p);
        rows.push_back(Json{{"candidate", candidates[i].label},
                            {"beta", elementJson(candidates[i].beta, c.digits)},
                            {"verdict", spectra::toString(verdict)},
                            {"profile", profileJson(p, c.digits)}});
        for (const auto& lv : p.levels)
            if (lv.error.empty() && lv.vectorCount > 0)
                csvRows.push_back({candidates[i].label, std::to_string(lv.order),
                                   decimal(lv.maxDistance.mid(), std::min(c.digits, lv.maxDistance.decimalDigits()))});
    }
    c.out.csv = csvTable({"candidate", "order", "maxDistance"}, csvRows);
    return Json{{"method", "return-vectors"}, {"ambientOffset", offset}, {"rows", rows}};
}

Json opCochain(Ctx& c)
{
    Word w = sourceWord(c.cfg, c.sys);
    auto after = buildLengths(c.sys, c.cfg.lengths);
    auto before = buildLengths(c.sys, c.cfg.base.value_or(LengthSpec{"unit", 0, "", {}}));
    auto series = geometry::displacementCochain(w, before, after);
    Json samples = Json::array();
    std::vector<double> xs, ys;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> points;
    for (std::size_t n = 10; n < w.size(); n *= 10)
        points.push_back(n);
    points.push_back(w.size());
    for (auto n : points) {
        double sup = series.supUpTo(n);
        samples.push_back(Json{{"n", n}, {"sup", decimal(sup)}});
        rows.push_back({std::to_string(n), decimal(sup)});
        if (n >= 100 && sup > 0) {
            xs.push_back(static_cast<double>(n));
            ys.push_back(sup);
        }
    }
    c.out.csv = csvTable({"n", "sup"}, rows);
    return Json{{"wordLength", w.size()},
                {"base", before.label()},
                {"lengths", after.label()},
                {"supAbs", decimal(series.supAbs)},
                {"stabilized", series.stabilized},
                {"final", elementJson(series.exact(w.size()), c.digits)},
                {"samples", samples},
                {"growth", fitJson(meyer::fitPowerLaw(xs, ys))}};
}

Json opReturnVectors(Ctx& c)
{
    auto lengths = buildLengths(c.sys, c.cfg.lengths);
    int offset = c.cfg.ambientOffset.value_or(spectra::kCriterionAmbientOffset);
    Json levels = Json::array();
    for (int n : c.cfg.levels) {
        auto set = geometry::returnVectors(*c.sys.rule, lengths, n, n + offset);
        Json vectors = Json::array();
        for (const auto& v : set.vectors)
            vectors.push_back(Json{{"type", symbolOf(c.sys.alphabet, v.type)}, {"value", elementJson(v.value, c.digits)}});
        levels.push_back(Json{{"order", n},
                              {"ambient", n + offset},
                              {"symbolicFallback", set.symbolicFallback},
                              {"partsExamined", set.partsExamined},
                              {"vectors", vectors}});
    }
    return Json{{"lengths", lengths.label()}, {"levels", levels}};
}

Json dispatch(Ctx& c)
{
    const std::string& op = c.cfg.operation;
    if (op == "generate")
        return opGenerate(c);
    if (op == "decompose")
        return opDecompose(c);
    if (op == "meyer-gap")
        return opMeyerGap(c);
    if (op == "spacing-count")
        return opSpacingCount(c);
    if (op == "eps-dual")
        return opEpsDual(c);
    if (op == "eig-test")
        return opEigen(c, false);
    if (op == "obstruction")
        return opEigen(c, true);
    if (op == "cochain")
        return opCochain(c);
    return opReturnVectors(c);
}

} // namespace

RunOutcome run(const RunConfig& cfg)
{
    auto start = std::chrono::steady_clock::now();
    RunOutcome o;
    o.report = Json{{"schema", kSchemaTag}, {"operation", cfg.operation}, {"config", cfg.toJson()}};
    Json errors = Json::array();
    auto problems = requirementViolations(cfg);
    if (!problems.empty()) {
        o.exitCode = kExitConstraint;
        for (const auto& p : problems)
            errors.push_back(errorJson("config", p));
    } else {
        try {
            System sys = buildSystem(cfg);
            Ctx c{cfg, sys, o, cfg.accuracy};
            o.report["result"] = dispatch(c);
        } catch (const BudgetError& e) {
            o.exitCode = kExitBudget;
            Json err = errorJson(e.kind(), e.what());
            err["exactLength"] = e.exactLength().get_str();
            errors.push_back(err);
        } catch (const Error& e) {
            o.exitCode = kExitConstraint;
            errors.push_back(errorJson(e.kind(), e.what()));
        } catch (const std::bad_alloc&) {
            o.exitCode = kExitBudget;
            errors.push_back(errorJson("budget", "out of memory"));
        }
    }
    o.report["errors"] = errors;
    o.report["status"] = o.exitCode == kExitOk ? "ok" : "error";
    o.report["exitCode"] = o.exitCode;
    struct rusage usage {};
    getrusage(RUSAGE_SELF, &usage);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.report["telemetry"] = Json{{"wallSeconds", decimal(wall, 4)}, {"peakRssKb", usage.ru_maxrss}};
    return o;
}

bool writeOutputs(const RunConfig& cfg, const RunOutcome& outcome, std::string& problem)
{
    auto write = [&](const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f << text;
        f.close();
        if (!f) {
            problem = "cannot write " + path;
            return false;
        }
        return true;
    };
    std::string text = canonicalDump(outcome.report);
    if (cfg.out) {
        if (!write(*cfg.out, text))
            return false;
    } else {
        std::cout << text;
    }
    if (cfg.csv && !outcome.csv.empty() && !write(*cfg.csv, outcome.csv))
        return false;
    if (cfg.wordFile && !outcome.word.empty() && !write(*cfg.wordFile, outcome.word))
        return false;
    return true;
}

} // namespace aperiodic::cli
