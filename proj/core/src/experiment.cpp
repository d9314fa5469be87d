#include "idf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace idf {

namespace {

bool single_factor(Method m) {
    return m == Method::Ses || m == Method::Croston || m == Method::Sba || m == Method::Sy;
}

bool key_equal(double a, double b) { return std::abs(a - b) < 1e-9; }

/// Drives one forecaster across a series pair, handing every evaluation
/// period's ErrorRecord to the sink.
template <typename Sink>
void run_series(Method method, SmoothingParams params, const SeriesPair& series, Sink&& sink) {
    Forecaster fc(method, params);
    for (double y : series.init) fc.update(y);
    double prev_y = series.init.empty() ? 0.0 : series.init.back();
    std::int64_t period = 0;
    for (double y : series.eval) {
        ++period;
        const double f = fc.forecast();
        sink(ErrorRecord{period, y, f, prev_y});
        fc.update(y);
        prev_y = y;
    }
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Executes fn(run_index) for every run, spreading runs over workers. Any
/// exception is rethrown on the calling thread.
void parallel_runs(std::int64_t runs, int threads, const std::function<void(std::int64_t)>& fn) {
    threads = std::min<std::int64_t>(resolve_threads(threads), runs);
    if (threads <= 1) {
        for (std::int64_t r = 0; r < runs; ++r) fn(r);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::int64_t r = next.fetch_add(1);
            if (r >= runs) return;
            try {
                fn(r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<MethodCombo> ExperimentSpec::combos() const {
    std::vector<MethodCombo> out;
    for (Method m : methods) {
        if (single_factor(m)) {
            for (double a : alpha_grid) out.push_back({m, a, a});
        } else {
            for (double a : alpha_grid)
                for (double b : beta_grid) out.push_back({m, a, b});
        }
    }
    return out;
}

const ResultRow* ResultTable::find(Method method, double alpha, double beta) const {
    for (const auto& row : rows)
        if (row.method == method && key_equal(row.alpha, alpha) && key_equal(row.beta, beta))
            return &row;
    return nullptr;
}

RunOutput run_single(Method method, SmoothingParams params, const SeriesPair& series) {
    RunOutput out{{}, MaseScale::from_series(series.init)};
    out.records.reserve(series.eval.size());
    run_series(method, params, series, [&](const ErrorRecord& rec) { out.records.push_back(rec); });
    return out;
}

RunOutput run_single(Method method, SmoothingParams params, const Scenario& scenario,
                     RngStream& rng) {
    return run_single(method, params, generate_series(scenario, rng));
}

ResultTable run_grid(const ExperimentSpec& spec) {
    spec.scenario.validate();
    if (spec.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (spec.scenario.init_len < 2)
        throw std::invalid_argument("grid runs need init_len >= 2 for the MASE scale");
    const auto combos = spec.combos();
    if (combos.empty()) throw std::invalid_argument("no method/factor combos requested");
    const std::string scenario_id = spec.scenario.id();

    // Per-run partial accumulators, merged in run order afterwards so the
    // pooled result does not depend on the thread count.
    std::vector<std::vector<MetricAccumulator>> partials(
        static_cast<std::size_t>(spec.runs),
        std::vector<MetricAccumulator>(combos.size(), MetricAccumulator(spec.issue_only)));

    parallel_runs(spec.runs, spec.threads, [&](std::int64_t r) {
        RngStream rng(derive_stream_seed(spec.base_seed, scenario_id, static_cast<std::uint64_t>(r)));
        const SeriesPair series = generate_series(spec.scenario, rng);
        const MaseScale scale = MaseScale::from_series(series.init);
        auto& slots = partials[static_cast<std::size_t>(r)];
        for (std::size_t c = 0; c < combos.size(); ++c) {
            run_series(combos[c].method, SmoothingParams(combos[c].alpha, combos[c].beta), series,
                       [&](const ErrorRecord& rec) { slots[c].add(rec, scale); });
        }
    });

    ResultTable table;
    table.scenario_id = scenario_id;
    table.runs = spec.runs;
    table.seed = spec.base_seed;
    table.rows.reserve(combos.size());
    for (std::size_t c = 0; c < combos.size(); ++c) {
        MetricAccumulator pooled(spec.issue_only);
        for (const auto& slots : partials) pooled.merge(slots[c]);
        table.rows.push_back({combos[c].method, combos[c].alpha, combos[c].beta, pooled.finalize()});
    }
    return table;
}

ComparisonReport compare_tables(const ResultTable& result, const ResultTable& golden,
                                const Tolerances& tol) {
    ComparisonReport report;
    auto key_string = [](const ResultRow& row) {
        return std::string(method_name(row.method)) + " alpha=" + std::to_string(row.alpha) +
               " beta=" + std::to_string(row.beta);
    };
    for (const auto& row : result.rows) {
        const ResultRow* g = golden.find(row.method, row.alpha, row.beta);
        if (!g) {
            report.uncompared.push_back(key_string(row) + " (missing in golden)");
            continue;
        }
        const struct {
            const char* name;
            double got, want, tol;
        } cells[] = {
            {"mase", row.metrics.mase, g->metrics.mase, tol.mase},
            {"mmr", row.metrics.mmr, g->metrics.mmr, tol.mmr},
            {"u2", row.metrics.u2, g->metrics.u2, tol.u2},
        };
        for (const auto& c : cells) {
            const double dev = std::abs(c.got - c.want);
            const bool pass = dev <= c.tol;
            if (!pass) ++report.failed;
            report.max_dev = std::max(report.max_dev, dev);
            report.cells.push_back(
                {row.method, row.alpha, row.beta, c.name, c.got, c.want, dev, c.tol, pass});
        }
    }
    for (const auto& row : golden.rows)
        if (!result.find(row.method, row.alpha, row.beta))
            report.uncompared.push_back(key_string(row) + " (missing in result)");
    return report;
}

std::string_view selection_name(Selection s) {
    return s == Selection::MmrBest ? "mmr-best" : "u2-best";
}

HeadToHeadReport head_to_head(const ExperimentSpec& spec, Selection selection) {
    ExperimentSpec sweep = spec;
    sweep.methods = {Method::Tsb, Method::Hes};
    const ResultTable grid = run_grid(sweep);

    auto best_for = [&](Method m) -> const ResultRow* {
        const ResultRow* best = nullptr;
        double best_value = std::numeric_limits<double>::infinity();
        for (const auto& row : grid.rows) {
            if (row.method != m) continue;
            const double v = selection == Selection::MmrBest ? row.metrics.mmr : row.metrics.u2;
            if (v < best_value) {
                best_value = v;
                best = &row;
            }
        }
        return best;
    };
    const ResultRow* tsb = best_for(Method::Tsb);
    const ResultRow* hes = best_for(Method::Hes);
    if (!tsb || !hes) throw std::logic_error("head-to-head sweep produced no rows");

    const SmoothingParams tsb_params(tsb->alpha, tsb->beta);
    const SmoothingParams hes_params(hes->alpha, hes->beta);
    const std::string scenario_id = sweep.scenario.id();

    std::vector<PairAccumulator> partials(static_cast<std::size_t>(sweep.runs));
    parallel_runs(sweep.runs, sweep.threads, [&](std::int64_t r) {
        RngStream rng(
            derive_stream_seed(sweep.base_seed, scenario_id, static_cast<std::uint64_t>(r)));
        const SeriesPair series = generate_series(sweep.scenario, rng);
        const RunOutput hes_run = run_single(Method::Hes, hes_params, series);
        const RunOutput tsb_run = run_single(Method::Tsb, tsb_params, series);
        auto& pair = partials[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < hes_run.records.size(); ++i) {
            const auto& h = hes_run.records[i];
            const auto& t = tsb_run.records[i];
            pair.add(h.f - h.y, t.f - t.y);
        }
    });
    PairAccumulator pooled;
    for (const auto& p : partials) pooled.merge(p);
    const PairSummary summary = pooled.finalize();

    return HeadToHeadReport{
        .scenario_id = scenario_id,
        .selection = selection,
        .alpha_tsb = tsb->alpha,
        .beta_tsb = tsb->beta,
        .alpha_hes = hes->alpha,
        .beta_hes = hes->beta,
        .rgrmse = summary.rgrmse,
        .pb = summary.pb_percent,
        .runs = sweep.runs,
        .seed = sweep.base_seed,
    };
}

}  // namespace idf
