// Command-line front end: generate demand series, trace forecaster decay
// behaviour, run Monte-Carlo factor grids, and compare result tables against
// reference tables. Data goes to stdout (or --out), diagnostics to stderr.
//
// Exit codes: 0 success/pass, 1 comparison fail, 2 usage/validation,
// 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "idf/experiment.hpp"
#include "idf/table_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompareFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct ScenarioFlags {
    std::string size = "log:0.9";
    std::string profile = "stationary";
    double p0 = 0.5;
    std::int64_t horizon = 120;
    std::int64_t init_len = 10000;
    std::int64_t cutoff = 0;  // 0 = horizon/2 when the sudden profile is used
};

void add_scenario_flags(CLI::App& cmd, ScenarioFlags& f) {
    cmd.add_option("--size", f.size,
                   "size distribution: log:ELL | geo:G | const:C (default " + f.size + ")");
    cmd.add_option("--profile", f.profile, "occurrence profile: stationary | decreasing | sudden")
        ->check(CLI::IsMember({"stationary", "decreasing", "sudden"}));
    cmd.add_option("--p0", f.p0, "occurrence probability (initial, for nonstationary profiles)");
    cmd.add_option("--horizon", f.horizon, "evaluation periods (default 120)");
    cmd.add_option("--init-len", f.init_len, "initialization periods (default 10000)");
    cmd.add_option("--cutoff", f.cutoff, "sudden-profile cutoff period (default horizon/2)");
}

idf::SizeDistribution parse_size(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("size must look like log:0.9, geo:0.8 or const:1");
    const std::string kind = text.substr(0, colon);
    const std::string value = text.substr(colon + 1);
    try {
        if (kind == "log") return idf::SizeDistribution{idf::Logarithmic(std::stod(value))};
        if (kind == "geo") return idf::SizeDistribution{idf::Geometric(std::stod(value))};
        if (kind == "const") return idf::SizeDistribution{idf::ConstantSize(std::stoll(value))};
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad size distribution parameter: " + value);
    }
    throw std::invalid_argument("unknown size distribution kind: " + kind);
}

idf::Scenario make_scenario(const ScenarioFlags& f) {
    idf::SizeDistribution dist = parse_size(f.size);
    idf::OccurrenceProfile profile{idf::Stationary(1.0)};
    if (f.profile == "stationary") {
        profile = idf::Stationary(f.p0);
    } else if (f.profile == "decreasing") {
        profile = idf::LinearDecreasing(f.p0, f.horizon);
    } else if (f.profile == "sudden") {
        profile = idf::Sudden(f.p0, f.cutoff > 0 ? f.cutoff : f.horizon / 2);
    } else {
        throw std::invalid_argument("unknown profile: " + f.profile);
    }
    idf::Scenario scenario{std::move(dist), std::move(profile), f.p0, f.init_len, f.horizon};
    scenario.validate();
    return scenario;
}

/// Stdout by default, a file when --out was given.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_) throw std::ios_base::failure("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::optional<std::ofstream> file_;
};

int run_gen(const ScenarioFlags& flags, std::uint64_t seed, const std::string& out,
            idf::TableFormat format) {
    const idf::Scenario scenario = make_scenario(flags);
    idf::RngStream rng(seed);
    const idf::SeriesPair series = idf::generate_series(scenario, rng);
    OutputSink sink(out);
    std::ostream& os = sink.stream();
    if (format == idf::TableFormat::Csv) {
        os << "period,demand\n";
        std::int64_t period = 0;
        for (const auto* part : {&series.init, &series.eval})
            for (double y : *part) os << ++period << ',' << y << "\n";
    } else {
        os << "| period | demand |\n|---|---|\n";
        std::int64_t period = 0;
        for (const auto* part : {&series.init, &series.eval})
            for (double y : *part) os << "| " << ++period << " | " << y << " |\n";
    }
    return kExitOk;
}

int run_trace(const ScenarioFlags& flags, const std::vector<std::string>& method_names,
              double alpha, double beta, std::uint64_t seed, const std::string& out,
              idf::TableFormat format) {
    if (method_names.empty()) throw std::invalid_argument("trace needs at least one method");
    std::vector<idf::Method> methods;
    methods.reserve(method_names.size());
    for (const auto& name : method_names) methods.push_back(idf::method_from_name(name));

    const idf::Scenario scenario = make_scenario(flags);
    idf::RngStream rng(seed);
    const idf::SeriesPair series = idf::generate_series(scenario, rng);

    std::vector<idf::Forecaster> forecasters;
    const idf::SmoothingParams params(alpha, beta);
    forecasters.reserve(methods.size());
    for (idf::Method m : methods) forecasters.emplace_back(m, params);
    for (double y : series.init)
        for (auto& fc : forecasters) fc.update(y);

    OutputSink sink(out);
    std::ostream& os = sink.stream();
    const bool md = format == idf::TableFormat::Markdown;
    const char* sep = md ? " | " : ",";
    if (md) os << "| ";
    os << "period" << sep << "demand";
    for (idf::Method m : methods) os << sep << "f_" << idf::method_name(m);
    if (md) {
        os << " |\n|---|---|";
        for (std::size_t i = 0; i < methods.size(); ++i) os << "---|";
        os << "\n";
    } else {
        os << "\n";
    }
    std::int64_t period = 0;
    for (double y : series.eval) {
        ++period;
        if (md) os << "| ";
        os << period << sep << y;
        for (auto& fc : forecasters) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.6g", fc.forecast());
            os << sep << buf;
        }
        os << (md ? " |\n" : "\n");
        for (auto& fc : forecasters) fc.update(y);
    }
    return kExitOk;
}

int run_run(const ScenarioFlags& flags, const std::vector<std::string>& method_names,
            const std::vector<double>& alpha_grid, const std::vector<double>& beta_grid,
            std::int64_t runs, std::uint64_t seed, int threads, bool issue_only, bool abs_mase,
            const std::string& out, idf::TableFormat format) {
    idf::ExperimentSpec spec(make_scenario(flags));
    if (!method_names.empty()) {
        spec.methods.clear();
        for (const auto& name : method_names) spec.methods.push_back(idf::method_from_name(name));
    }
    if (!alpha_grid.empty()) spec.alpha_grid = alpha_grid;
    if (!beta_grid.empty()) spec.beta_grid = beta_grid;
    spec.runs = runs;
    spec.base_seed = seed;
    spec.threads = threads;
    spec.issue_only = issue_only;

    const idf::ResultTable table = idf::run_grid(spec);
    OutputSink sink(out);
    idf::write_result_table(sink.stream(), table, format, abs_mase);
    return kExitOk;
}

int run_compare(const std::string& result_path, const std::string& golden_path,
                const idf::Tolerances& tol, const std::string& out) {
    const idf::ResultTable result = idf::read_result_table_file(result_path);
    const idf::ResultTable golden = idf::read_result_table_file(golden_path);
    const idf::ComparisonReport report = idf::compare_tables(result, golden, tol);

    OutputSink sink(out);
    std::ostream& os = sink.stream();
    for (const auto& cell : report.cells) {
        if (cell.pass) continue;
        os << "FAIL " << idf::method_name(cell.method) << " alpha=" << cell.alpha
           << " beta=" << cell.beta << " " << cell.column << ": got " << cell.got << ", want "
           << cell.want << " (dev " << cell.dev << " > tol " << cell.tol << ")\n";
    }
    for (const auto& key : report.uncompared) os << "UNCOMPARED " << key << "\n";
    os << "compared " << report.cells.size() << " cells, " << report.failed
       << " failed, max deviation " << report.max_dev << "\n";
    return report.passed() ? kExitOk : kExitCompareFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intermittent demand forecasting toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::uint64_t seed = 42;
    std::string out;
    std::string format_name = "csv";
    int threads = 0;
    bool issue_only = false;
    app.add_option("--seed", seed, "base RNG seed (default 42)");
    app.add_option("--out", out, "output path (default stdout)");
    app.add_option("--format", format_name, "output format: csv | markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    app.add_option("--threads", threads, "worker threads, 0 = hardware (default 0)");
    app.add_flag("--issue-only", issue_only, "score only periods with nonzero demand");

    auto* gen = app.add_subcommand("gen", "emit one generated demand series as period,demand");
    gen->fallthrough();
    ScenarioFlags gen_flags;
    add_scenario_flags(*gen, gen_flags);

    auto* trace = app.add_subcommand(
        "trace", "emit per-period forecasts of several methods on one series");
    trace->fallthrough();
    ScenarioFlags trace_flags;
    trace_flags.size = "const:1";
    trace_flags.p0 = 0.25;
    add_scenario_flags(*trace, trace_flags);
    std::vector<std::string> trace_methods{"SY", "TSB", "HES"};
    double trace_alpha = 0.1, trace_beta = 0.1;
    trace->add_option("--methods", trace_methods, "methods to trace (default SY,TSB,HES)")
        ->delimiter(',');
    trace->add_option("--alpha", trace_alpha, "size smoothing factor (default 0.1)");
    trace->add_option("--beta", trace_beta, "interval/probability smoothing factor (default 0.1)");

    auto* run = app.add_subcommand("run", "run a Monte-Carlo factor grid and write a result table");
    run->fallthrough();
    ScenarioFlags run_flags;
    add_scenario_flags(*run, run_flags);
    std::vector<std::string> run_methods;
    std::vector<double> alpha_grid, beta_grid;
    std::int64_t runs = 100;
    bool abs_mase = false;
    run->add_option("--methods", run_methods, "methods (default CR,SBA,SY,TSB,HES)")
        ->delimiter(',');
    run->add_option("--alpha-grid", alpha_grid, "alpha values (default 0.1,0.2,0.3)")
        ->delimiter(',');
    run->add_option("--beta-grid", beta_grid,
                    "beta values for TSB/HES (default 0.01,0.02,0.03,0.04,0.05,0.1,0.2,0.3)")
        ->delimiter(',');
    run->add_option("--runs", runs, "Monte-Carlo runs (default 100)");
    run->add_flag("--abs-mase", abs_mase, "also write the mean absolute scaled error column");

    auto* compare = app.add_subcommand("compare", "compare a result table against a reference");
    compare->fallthrough();
    std::string result_path, golden_path;
    idf::Tolerances tol;
    compare->add_option("result", result_path, "result table CSV")->required();
    compare->add_option("golden", golden_path, "reference table CSV")->required();
    compare->add_option("--tol-mase", tol.mase, "mase tolerance (default 0.02)");
    compare->add_option("--tol-mmr", tol.mmr, "mmr tolerance (default 0.05)");
    compare->add_option("--tol-u2", tol.u2, "u2 tolerance (default 0.02)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const idf::TableFormat format = idf::table_format_from_name(format_name);
        if (gen->parsed()) return run_gen(gen_flags, seed, out, format);
        if (trace->parsed())
            return run_trace(trace_flags, trace_methods, trace_alpha, trace_beta, seed, out,
                             format);
        if (run->parsed())
            return run_run(run_flags, run_methods, alpha_grid, beta_grid, runs, seed, threads,
                           issue_only, abs_mase, out, format);
        if (compare->parsed()) return run_compare(result_path, golden_path, tol, out);
        std::cerr << "error: no subcommand given\n";
        return kExitUsage;
    } catch (const idf::TableParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ")\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
