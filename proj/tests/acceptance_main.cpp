// Acceptance suite: replays the benchmark scenarios end to end and checks
// the pooled metrics against the reference tables in data/golden, plus the
// exact structural properties of the forecasters and samplers. Prints one
// PASS/FAIL line per criterion and exits nonzero if any criterion fails.
//
// Usage: idf_acceptance [--runs N] [--threads N] [--seed U64] [--golden DIR]

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "idf/experiment.hpp"
#include "idf/table_io.hpp"
#include "stat_oracles.hpp"

using namespace idf;

namespace {

struct Config {
    std::int64_t runs = 1200;
    int threads = 0;
    std::uint64_t seed = 42;
    std::string golden_dir = IDF_GOLDEN_DIR;
};

Config g_cfg;
std::ostringstream g_detail;

const Tolerances kTol{0.02, 0.05, 0.02};

ExperimentSpec base_spec(Scenario scenario) {
    ExperimentSpec spec(std::move(scenario));
    spec.runs = g_cfg.runs;
    spec.threads = g_cfg.threads;
    spec.base_seed = g_cfg.seed;
    return spec;
}

ResultTable golden(const std::string& name) {
    return read_result_table_file(g_cfg.golden_dir + "/" + name + ".csv");
}

bool check_against_golden(const ResultTable& result, const std::string& golden_name,
                          std::size_t expect_cells) {
    const ComparisonReport rep = compare_tables(result, golden(golden_name), kTol);
    bool ok = rep.passed() && rep.cells.size() == expect_cells;
    for (const auto& c : rep.cells) {
        g_detail << "  " << method_name(c.method) << " a=" << c.alpha << " b=" << c.beta << " "
                 << c.column << ": got " << c.got << " want " << c.want << " dev " << c.dev
                 << (c.pass ? "" : "  <-- exceeds tol") << "\n";
    }
    if (rep.cells.size() != expect_cells)
        g_detail << "  expected " << expect_cells << " compared cells, got " << rep.cells.size()
                 << "\n";
    return ok;
}

// --- criteria ---------------------------------------------------------------

// Stationary lumpy logarithmic scenario, all five methods at alpha=beta=0.1.
bool criterion1() {
    ExperimentSpec spec = base_spec(
        Scenario{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Stationary(0.5)}, 0.5});
    spec.alpha_grid = {0.1};
    spec.beta_grid = {0.1};
    return check_against_golden(run_grid(spec), "sta1", 15);
}

// Stationary lumpy geometric spot check, CR and HES.
bool criterion2() {
    ExperimentSpec spec = base_spec(
        Scenario{SizeDistribution{Geometric(0.2)}, OccurrenceProfile{Stationary(0.5)}, 0.5});
    spec.methods = {Method::Croston, Method::Hes};
    spec.alpha_grid = {0.1};
    spec.beta_grid = {0.1};
    return check_against_golden(run_grid(spec), "stu1", 6);
}

// Decreasing demand: bias falls monotonically in beta; beta=0.1 cells match.
bool criterion3() {
    ExperimentSpec spec = base_spec(Scenario{SizeDistribution{Logarithmic(0.9)},
                                             OccurrenceProfile{LinearDecreasing(0.5, 120)}, 0.5});
    spec.methods = {Method::Tsb, Method::Hes};
    spec.alpha_grid = {0.1};
    const ResultTable table = run_grid(spec);

    bool ok = true;
    for (Method m : {Method::Tsb, Method::Hes}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double b : spec.beta_grid) {
            const double mase = table.find(m, 0.1, b)->metrics.mase;
            g_detail << "  " << method_name(m) << " beta=" << b << " mase=" << mase << "\n";
            if (!(mase < prev)) {
                g_detail << "  not monotone at beta=" << b << "\n";
                ok = false;
            }
            prev = mase;
        }
    }

    ResultTable beta01;
    beta01.scenario_id = table.scenario_id;
    for (const auto& row : table.rows)
        if (row.beta == 0.1) beta01.rows.push_back(row);
    ok = check_against_golden(beta01, "dec1", 6) && ok;
    return ok;
}

// Sudden obsolescence: TSB matches its cell and beats CR on every measure.
bool criterion4() {
    ExperimentSpec spec = base_spec(
        Scenario{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Sudden(0.5, 60)}, 0.5});
    spec.methods = {Method::Croston, Method::Tsb};
    spec.alpha_grid = {0.1};
    spec.beta_grid = {0.1};
    const ResultTable table = run_grid(spec);
    bool ok = check_against_golden(table, "obs1", 6);
    const SummaryMetrics tsb = table.find(Method::Tsb, 0.1, 0.1)->metrics;
    const SummaryMetrics cr = table.find(Method::Croston, 0.1, 0.1)->metrics;
    if (!(tsb.mase < cr.mase && tsb.mmr < cr.mmr && tsb.u2 < cr.u2)) {
        g_detail << "  TSB does not dominate CR\n";
        ok = false;
    }
    return ok;
}

// Head-to-head on the stationary lumpy logarithmic scenario, U2-best factors.
bool criterion5() {
    ExperimentSpec spec = base_spec(
        Scenario{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Stationary(0.5)}, 0.5});
    const HeadToHeadReport rep = head_to_head(spec, Selection::U2Best);

    const auto rows = read_comparison_golden_file(g_cfg.golden_dir + "/logcomp.csv");
    const ComparisonGoldenRow* want = nullptr;
    for (const auto& r : rows)
        if (r.selection == "u2-best" && r.dist_param == 0.9 && r.p0 == 0.5) want = &r;
    if (!want) {
        g_detail << "  reference row missing\n";
        return false;
    }
    g_detail << "  selected tsb(" << rep.alpha_tsb << "," << rep.beta_tsb << ") hes("
             << rep.alpha_hes << "," << rep.beta_hes << ") rgrmse=" << rep.rgrmse
             << " pb=" << rep.pb << " (want " << want->rgrmse << ", " << want->pb << ")\n";
    bool ok = true;
    ok &= rep.alpha_tsb == want->alpha_tsb && rep.beta_tsb == want->beta_tsb;
    ok &= rep.alpha_hes == want->alpha_hes && rep.beta_hes == want->beta_hes;
    ok &= std::abs(rep.rgrmse - want->rgrmse) <= 0.05;
    ok &= std::abs(rep.pb - want->pb) <= 5.0;
    return ok;
}

// Exact structural properties, no Monte Carlo.
bool criterion6() {
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            g_detail << "  violated: " << what << "\n";
            ok = false;
        }
    };

    for (double beta : {0.01, 0.1, 0.3, 0.9}) {
        const SmoothingParams p(0.2, beta);

        Forecaster tsb(Method::Tsb, p, TsbState{2.3, 0.7});
        double prev = tsb.forecast();
        for (int k = 0; k < 50; ++k) {
            tsb.update(0.0);
            const double f = tsb.forecast();
            expect(std::abs(f / prev - (1.0 - beta)) <= 1e-12, "TSB zero-run ratio == 1-beta");
            prev = f;
        }

        Forecaster hes(Method::Hes, p, CrostonState{2.3, 3.1, 0});
        prev = hes.forecast();
        for (int k = 0; k < 50; ++k) {
            hes.update(0.0);
            const double f = hes.forecast();
            expect(std::abs((1.0 / f - 1.0 / prev) - beta / (2.0 * 2.3)) <= 1e-12,
                   "HES reciprocal increment == beta/(2 y_hat)");
            prev = f;
        }

        for (Method m : {Method::Croston, Method::Sba, Method::Sy}) {
            Forecaster fc(m, p, CrostonState{2.3, 3.1, 0});
            const double f0 = fc.forecast();
            for (int k = 0; k < 50; ++k) {
                fc.update(0.0);
                expect(fc.forecast() == f0, "CR/SBA/SY constant across a zero run");
            }
        }

        // At an issue point the HES denominator carries no pseudocount term
        // yet: the forecast equals y_hat / tau_hat exactly. (The shifted
        // variant y_hat/(tau_hat - beta/2) fails the fixpoint and
        // unbiasedness checks below; see the project notes.)
        const Forecaster at_issue(Method::Hes, p, CrostonState{2.3, 3.1, 0});
        expect(std::abs(at_issue.forecast() - 2.3 / 3.1) <= 1e-12,
               "HES at an issue point == y_hat / tau_hat");

        // non-intermittent fixpoints
        const double c = 4.0;
        Forecaster cr(Method::Croston, p, CrostonState{1.0, 5.0, 0});
        Forecaster sba(Method::Sba, p, CrostonState{1.0, 5.0, 0});
        Forecaster sy(Method::Sy, p, CrostonState{1.0, 5.0, 0});
        Forecaster hes2(Method::Hes, p, CrostonState{1.0, 5.0, 0});
        Forecaster tsb2(Method::Tsb, p, TsbState{1.0, 0.1});
        Forecaster ses(Method::Ses, p);
        for (int t = 0; t < 4000; ++t)
            for (Forecaster* fc : {&cr, &sba, &sy, &hes2, &tsb2, &ses}) fc->update(c);
        expect(std::abs(cr.forecast() - c) <= 1e-9, "CR fixpoint c");
        expect(std::abs(sy.forecast() - c) <= 1e-9, "SY fixpoint c");
        expect(std::abs(hes2.forecast() - c) <= 1e-9, "HES fixpoint c");
        expect(std::abs(tsb2.forecast() - c) <= 1e-9, "TSB fixpoint c");
        expect(std::abs(ses.forecast() - c) <= 1e-9, "SES fixpoint c");
        expect(std::abs(sba.forecast() - (1.0 - beta / 2.0) * c) <= 1e-9,
               "SBA fixpoint (1-beta/2)c");
    }

    // U2 of the random walk itself is exactly 1
    const MaseScale scale = MaseScale::from_series(std::vector<double>{0.0, 2.0, 0.0, 1.0});
    MetricAccumulator acc;
    RngStream rng(5);
    double prev_y = 1.0;
    for (int t = 1; t <= 1000; ++t) {
        const double y = rng.next_double() < 0.5 ? std::floor(1 + 5 * rng.next_double()) : 0.0;
        acc.add({t, y, prev_y, prev_y}, scale);
        prev_y = y;
    }
    expect(acc.finalize().u2 == 1.0, "U2(random walk) == 1 exactly");
    return ok;
}

// Sampler goodness of fit and moments at one million draws.
bool criterion7() {
    bool ok = true;
    struct Case {
        SizeDistribution dist;
        const char* name;
        double mean, var;
    };
    const Case cases[] = {
        {SizeDistribution{Logarithmic(0.001)}, "log(0.001)", oracles::logarithmic_mean(0.001),
         oracles::logarithmic_var(0.001)},
        {SizeDistribution{Logarithmic(0.9)}, "log(0.9)", oracles::logarithmic_mean(0.9),
         oracles::logarithmic_var(0.9)},
        {SizeDistribution{Geometric(0.2)}, "geo(0.2)", oracles::geometric_mean_(0.2),
         oracles::geometric_var(0.2)},
        {SizeDistribution{Geometric(0.8)}, "geo(0.8)", oracles::geometric_mean_(0.8),
         oracles::geometric_var(0.8)},
    };
    const std::int64_t n = 1000000;
    std::uint64_t seed = g_cfg.seed + 1000;
    for (const auto& c : cases) {
        RngStream rng(seed++);
        std::map<std::int64_t, std::int64_t> counts;
        double sum = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t k = sample_size(c.dist, rng);
            sum += static_cast<double>(k);
            ++counts[k];
        }
        const double mean = sum / static_cast<double>(n);
        const double se = std::sqrt(c.var / static_cast<double>(n));
        const auto gof =
            oracles::chi2_gof([&](std::int64_t k) { return size_pmf(c.dist, k); }, counts, n);
        g_detail << "  " << c.name << ": mean " << mean << " (want " << c.mean << " +- "
                 << 3.0 * se << "), chi2 p=" << gof.p_value << ", binned mass "
                 << gof.covered_mass << "\n";
        if (std::abs(mean - c.mean) > 3.0 * se) {
            g_detail << "  mean outside 3 standard errors\n";
            ok = false;
        }
        if (gof.p_value <= 0.001) {
            g_detail << "  goodness of fit rejected at significance 0.001\n";
            ok = false;
        }
        if (gof.covered_mass < 0.9999) {
            g_detail << "  individually binned support covers < 0.9999 of the mass\n";
            ok = false;
        }
    }
    return ok;
}

// Unbiasedness on stationary scenarios: SY/TSB/HES near zero, CR positive.
bool criterion8() {
    bool ok = true;
    struct Case {
        Scenario scenario;
        bool check_cr_positive;
    };
    const Case cases[] = {
        {Scenario{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Stationary(0.5)}, 0.5},
         true},
        {Scenario{SizeDistribution{Logarithmic(0.001)}, OccurrenceProfile{Stationary(0.5)}, 0.5},
         false},
        {Scenario{SizeDistribution{Geometric(0.2)}, OccurrenceProfile{Stationary(0.5)}, 0.5},
         false},
        {Scenario{SizeDistribution{Geometric(0.8)}, OccurrenceProfile{Stationary(0.5)}, 0.5},
         false},
        {Scenario{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Stationary(0.2)}, 0.2},
         true},
    };
    for (const auto& c : cases) {
        ExperimentSpec spec = base_spec(c.scenario);
        spec.methods = {Method::Croston, Method::Sy, Method::Tsb, Method::Hes};
        spec.alpha_grid = {0.1};
        spec.beta_grid = {0.1};
        const ResultTable table = run_grid(spec);
        const double cr = table.find(Method::Croston, 0.1, 0.1)->metrics.mase;
        g_detail << "  " << c.scenario.id() << ": CR " << cr;
        for (Method m : {Method::Sy, Method::Tsb, Method::Hes}) {
            const double mase = table.find(m, 0.1, 0.1)->metrics.mase;
            g_detail << ", " << method_name(m) << " " << mase;
            if (!(std::abs(mase) < 0.02)) {
                g_detail << " <-- |bias| >= 0.02";
                ok = false;
            }
        }
        if (c.check_cr_positive && !(cr > 0.01)) {
            g_detail << " <-- CR bias not > +0.01";
            ok = false;
        }
        g_detail << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", arg.c_str());
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--runs") g_cfg.runs = std::stoll(next());
        else if (arg == "--threads") g_cfg.threads = std::atoi(next());
        else if (arg == "--seed") g_cfg.seed = std::stoull(next());
        else if (arg == "--golden") g_cfg.golden_dir = next();
        else {
            std::fprintf(stderr,
                         "usage: %s [--runs N] [--threads N] [--seed U64] [--golden DIR]\n",
                         argv[0]);
            return 2;
        }
    }
    if (g_cfg.runs < 1000)
        std::fprintf(stderr, "warning: %lld runs is below the intended 1000+\n",
                     static_cast<long long>(g_cfg.runs));

    const struct {
        int id;
        const char* name;
        bool (*fn)();
    } criteria[] = {
        {1, "stationary lumpy logarithmic table reproduction", criterion1},
        {2, "stationary lumpy geometric spot check", criterion2},
        {3, "decreasing demand: bias monotone in beta", criterion3},
        {4, "sudden obsolescence: TSB dominates CR", criterion4},
        {5, "head-to-head HES vs TSB at u2-best factors", criterion5},
        {6, "exact decay, fixpoint and metric identities", criterion6},
        {7, "sampler goodness of fit and moments", criterion7},
        {8, "unbiasedness of SY/TSB/HES, positive CR bias", criterion8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        g_detail.str("");
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.fn();
        } catch (const std::exception& e) {
            g_detail << "  exception: " << e.what() << "\n";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.id, c.name, secs);
        if (!pass) {
            ++failures;
            std::fputs(g_detail.str().c_str(), stderr);
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", std::size(criteria));
    return failures == 0 ? 0 : 1;
}
