#pragma once

#include <cstdint>
#include <span>

namespace idf {

/// One evaluated period: realized demand y, the forecast f that was in
/// force, and the random-walk baseline forecast (previous period's demand).
struct ErrorRecord {
    std::int64_t period;
    double y;
    double f;
    double f_naive;
};

/// MASE scale: the mean absolute first difference of the initialization
/// series, (1/(n-1)) * sum |y_i - y_{i-1}|. Errors are divided by it to
/// make bias comparable across demand scales.
class MaseScale {
public:
    /// Throws std::invalid_argument if the series is shorter than 2 or
    /// constant (zero denominator).
    static MaseScale from_series(std::span<const double> init_series);

    double denom() const { return denom_; }

private:
    explicit MaseScale(double denom) : denom_(denom) {}
    double denom_;
};

struct SummaryMetrics {
    double mase;      // mean signed scaled error; positive = over-forecast
    double mase_abs;  // mean absolute scaled error
    double mmr;       // sum |e| / sum y
    double u2;        // RMSE relative to the random-walk RMSE
};

/// Streaming accumulator for MASE / MMR / U2, mergeable across runs and
/// workers. The signed scaled error is (f - y)/denom, so a method that
/// over-forecasts scores positive bias. With issue_only set, periods with
/// zero demand are skipped entirely.
class MetricAccumulator {
public:
    explicit MetricAccumulator(bool issue_only = false) : issue_only_(issue_only) {}

    void add(const ErrorRecord& rec, const MaseScale& scale);
    void merge(const MetricAccumulator& other);

    /// Throws std::invalid_argument on an empty accumulator or degenerate
    /// baselines (sum y == 0 for MMR, zero random-walk errors for U2).
    SummaryMetrics finalize() const;

    std::int64_t count() const { return count_; }
    bool issue_only() const { return issue_only_; }

private:
    bool issue_only_;
    double sum_q_ = 0.0;
    double sum_abs_q_ = 0.0;
    double sum_abs_e_ = 0.0;
    double sum_y_ = 0.0;
    double sum_e2_ = 0.0;
    double sum_e2_naive_ = 0.0;
    std::int64_t count_ = 0;
};

struct PairSummary {
    double rgrmse;      // geometric mean of |e_a| / |e_b|
    double pb_percent;  // share of periods with |e_a| strictly < |e_b|
};

/// Head-to-head accumulator comparing two methods' absolute errors period by
/// period. Ratios are clamped at eps = 1e-12 before the log; periods where
/// both errors fall below eps are left out of the geometric mean. Ties never
/// count as better.
class PairAccumulator {
public:
    void add(double e_a, double e_b);
    void merge(const PairAccumulator& other);
    PairSummary finalize() const;  // throws on zero counts

    std::int64_t total_count() const { return total_count_; }

private:
    static constexpr double kEps = 1e-12;
    double sum_log_ratio_ = 0.0;
    std::int64_t ratio_count_ = 0;
    std::int64_t better_count_ = 0;
    std::int64_t total_count_ = 0;
};

}  // namespace idf
