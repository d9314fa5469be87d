#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idf/forecasters.hpp"
#include "idf/generators.hpp"
#include "idf/metrics.hpp"

namespace idf {

struct MethodCombo {
    Method method;
    double alpha;
    double beta;
};

/// Grid experiment: every listed method is swept over the smoothing-factor
/// grids (alpha x beta for TSB and HES; alpha with beta = alpha for the
/// single-factor Croston family and SES) and each combo is evaluated on
/// `runs` independently seeded demand realizations. All combos within a run
/// consume the identical series (common random numbers).
struct ExperimentSpec {
    explicit ExperimentSpec(Scenario s) : scenario(std::move(s)) {}

    Scenario scenario;
    std::vector<Method> methods{Method::Croston, Method::Sba, Method::Sy, Method::Tsb,
                                Method::Hes};
    std::vector<double> alpha_grid{0.1, 0.2, 0.3};
    std::vector<double> beta_grid{0.01, 0.02, 0.03, 0.04, 0.05, 0.1, 0.2, 0.3};
    std::int64_t runs = 100;
    std::uint64_t base_seed = 42;
    bool issue_only = false;
    int threads = 0;  // 0 = hardware concurrency

    std::vector<MethodCombo> combos() const;
};

struct ResultRow {
    Method method;
    double alpha;
    double beta;
    SummaryMetrics metrics;
};

struct ResultTable {
    std::string scenario_id;
    std::int64_t runs = 0;
    std::uint64_t seed = 0;
    std::vector<ResultRow> rows;

    const ResultRow* find(Method method, double alpha, double beta) const;
};

struct RunOutput {
    std::vector<ErrorRecord> records;
    MaseScale scale;
};

/// One run of one forecaster: burn the initialization series in with
/// update-only steps, then walk the evaluation horizon with the
/// forecast/observe/update loop, recording per-period errors. The random
/// walk baseline for evaluation period 1 is the last initialization demand.
RunOutput run_single(Method method, SmoothingParams params, const SeriesPair& series);

/// Convenience overload: draws the series from `rng`, then evaluates.
RunOutput run_single(Method method, SmoothingParams params, const Scenario& scenario,
                     RngStream& rng);

/// Runs the full grid, pooling metric accumulators over runs. Deterministic
/// for a fixed base seed, independent of the thread count.
ResultTable run_grid(const ExperimentSpec& spec);

struct Tolerances {
    double mase = 0.02;
    double mmr = 0.05;
    double u2 = 0.02;
};

struct CellCheck {
    Method method;
    double alpha;
    double beta;
    std::string column;  // "mase", "mmr" or "u2"
    double got;
    double want;
    double dev;
    double tol;
    bool pass;
};

struct ComparisonReport {
    std::vector<CellCheck> cells;
    std::vector<std::string> uncompared;  // keys present on one side only
    int failed = 0;
    double max_dev = 0.0;

    bool passed() const { return failed == 0; }
};

/// Cell-by-cell comparison over the (method, alpha, beta) keys both tables
/// share. Key mismatches are reported, not fatal.
ComparisonReport compare_tables(const ResultTable& result, const ResultTable& golden,
                                const Tolerances& tol);

enum class Selection { MmrBest, U2Best };

std::string_view selection_name(Selection s);

struct HeadToHeadReport {
    std::string scenario_id;
    Selection selection;
    double alpha_tsb, beta_tsb;
    double alpha_hes, beta_hes;
    double rgrmse;  // geometric mean |e_HES| / |e_TSB|
    double pb;      // % of periods HES's absolute error is strictly smaller
    std::int64_t runs = 0;
    std::uint64_t seed = 0;
};

/// Sweeps TSB and HES over the experiment's grids, selects for each the factor
/// pair minimizing the chosen criterion, then replays both winners on
/// common random numbers and scores HES against TSB.
HeadToHeadReport head_to_head(const ExperimentSpec& spec, Selection selection);

}  // namespace idf
