#include "idf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idf {

MaseScale MaseScale::from_series(std::span<const double> init_series) {
    if (init_series.size() < 2)
        throw std::invalid_argument("scale series needs at least 2 periods");
    double sum = 0.0;
    for (std::size_t i = 1; i < init_series.size(); ++i)
        sum += std::abs(init_series[i] - init_series[i - 1]);
    const double denom = sum / static_cast<double>(init_series.size() - 1);
    if (denom <= 0.0)
        throw std::invalid_argument("constant series gives a zero scale denominator");
    return MaseScale(denom);
}

void MetricAccumulator::add(const ErrorRecord& rec, const MaseScale& scale) {
    if (issue_only_ && rec.y == 0.0) return;
    const double e = rec.f - rec.y;
    const double e_naive = rec.f_naive - rec.y;
    const double q = e / scale.denom();
    sum_q_ += q;
    sum_abs_q_ += std::abs(q);
    sum_abs_e_ += std::abs(e);
    sum_y_ += rec.y;
    sum_e2_ += e * e;
    sum_e2_naive_ += e_naive * e_naive;
    ++count_;
}

void MetricAccumulator::merge(const MetricAccumulator& other) {
    if (issue_only_ != other.issue_only_)
        throw std::invalid_argument("cannot merge accumulators with different filter modes");
    sum_q_ += other.sum_q_;
    sum_abs_q_ += other.sum_abs_q_;
    sum_abs_e_ += other.sum_abs_e_;
    sum_y_ += other.sum_y_;
    sum_e2_ += other.sum_e2_;
    sum_e2_naive_ += other.sum_e2_naive_;
    count_ += other.count_;
}

SummaryMetrics MetricAccumulator::finalize() const {
    if (count_ == 0) throw std::invalid_argument("empty metric accumulator");
    if (!(sum_y_ > 0.0)) throw std::invalid_argument("MMR undefined: no demand observed");
    if (!(sum_e2_naive_ > 0.0))
        throw std::invalid_argument("U2 undefined: random-walk baseline has zero error");
    const double n = static_cast<double>(count_);
    return SummaryMetrics{
        .mase = sum_q_ / n,
        .mase_abs = sum_abs_q_ / n,
        .mmr = sum_abs_e_ / sum_y_,
        .u2 = std::sqrt(sum_e2_ / n) / std::sqrt(sum_e2_naive_ / n),
    };
}

void PairAccumulator::add(double e_a, double e_b) {
    if (!std::isfinite(e_a) || !std::isfinite(e_b))
        throw std::invalid_argument("errors must be finite");
    const double abs_a = std::abs(e_a);
    const double abs_b = std::abs(e_b);
    ++total_count_;
    if (abs_a < abs_b) ++better_count_;
    if (abs_a < kEps && abs_b < kEps) return;  // both essentially exact
    sum_log_ratio_ += std::log(std::max(abs_a, kEps) / std::max(abs_b, kEps));
    ++ratio_count_;
}

void PairAccumulator::merge(const PairAccumulator& other) {
    sum_log_ratio_ += other.sum_log_ratio_;
    ratio_count_ += other.ratio_count_;
    better_count_ += other.better_count_;
    total_count_ += other.total_count_;
}

PairSummary PairAccumulator::finalize() const {
    if (total_count_ == 0 || ratio_count_ == 0)
        throw std::invalid_argument("empty pair accumulator");
    return PairSummary{
        .rgrmse = std::exp(sum_log_ratio_ / static_cast<double>(ratio_count_)),
        .pb_percent = 100.0 * static_cast<double>(better_count_) / static_cast<double>(total_count_),
    };
}

}  // namespace idf
