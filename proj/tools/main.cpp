#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aperiodic/cli/config.hpp"
#include "aperiodic/cli/json_io.hpp"
#include "aperiodic/cli/run.hpp"

using namespace aperiodic::cli;

namespace {

int fail(int code, const std::string& kind, const std::string& message)
{
    Json report{{"schema", kSchemaTag},
                {"status", "error"},
                {"exitCode", code},
                {"errors", Json::array({Json{{"kind", kind}, {"message", message}}})}};
    std::cout << canonicalDump(report);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Analyses of one-dimensional substitution and fusion tilings"};
    std::string configPath = "-";
    std::optional<std::string> operation, out;
    std::optional<int> accuracy, threads;
    bool force = false;
    app.add_option("--config", configPath, "JSON config file; '-' reads stdin");
    app.add_option("--operation", operation, "Operation, overrides the config")->check(CLI::IsMember(kOperations));
    app.add_option("--out", out, "Report path, overrides the config; stdout when absent");
    app.add_option("--accuracy", accuracy, "Decimal digits of certified output")->check(CLI::Range(1, 200));
    app.add_option("--threads", threads, "Worker threads for candidate scans")->check(CLI::Range(1, 256));
    app.add_flag("--force", force, "Overwrite existing output files");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kExitConstraint, "usage", e.what());
    }

    std::string text;
    if (configPath == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(configPath, std::ios::binary);
        if (!f)
            return fail(kExitIo, "io", "cannot read config " + configPath);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }

    auto parsed = parseConfig(text);
    if (!parsed.config) {
        std::cout << canonicalDump(rejectedConfig(parsed.violations).report);
        return kExitConstraint;
    }
    RunConfig cfg = *parsed.config;
    if (operation)
        cfg.operation = *operation;
    if (out)
        cfg.out = *out;
    if (accuracy)
        cfg.accuracy = *accuracy;
    if (threads)
        cfg.threads = *threads;

    if (!force) {
        auto existing = existingOutputs(cfg);
        if (!existing.empty())
            return fail(kExitIo, "io", existing.front() + " exists; pass --force to overwrite");
    }

    RunOutcome outcome = run(cfg);
    std::string problem;
    if (!writeOutputs(cfg, outcome, problem))
        return fail(kExitIo, "io", problem);
    return outcome.exitCode;
}
