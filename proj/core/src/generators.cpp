#include "idf/generators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace idf {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::string_view scenario_id,
                                 std::uint64_t run_index) {
    return mix64(mix64(base_seed ^ fnv1a64(scenario_id)) ^ run_index);
}

Logarithmic::Logarithmic(double ell_) : ell(ell_) {
    if (!(ell > 0.0 && ell < 1.0))
        throw std::invalid_argument("logarithmic parameter must lie in (0,1)");
}

Geometric::Geometric(double g_) : g(g_) {
    if (!(g > 0.0 && g <= 1.0))
        throw std::invalid_argument("geometric parameter must lie in (0,1]");
}

ConstantSize::ConstantSize(std::int64_t c_) : c(c_) {
    if (c < 1) throw std::invalid_argument("constant size must be >= 1");
}

double size_pmf(const SizeDistribution& dist, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("size pmf support starts at k = 1");
    return std::visit(
        [k](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Logarithmic>) {
                return -std::pow(d.ell, static_cast<double>(k)) /
                       (static_cast<double>(k) * std::log1p(-d.ell));
            } else if constexpr (std::is_same_v<T, Geometric>) {
                return std::pow(1.0 - d.g, static_cast<double>(k - 1)) * d.g;
            } else {
                return k == d.c ? 1.0 : 0.0;
            }
        },
        dist);
}

std::int64_t sample_size(const SizeDistribution& dist, RngStream& rng) {
    return std::visit(
        [&rng](const auto& d) -> std::int64_t {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Logarithmic>) {
                // CDF inversion with the pmf recurrence
                // p_{k+1} = p_k * ell * k / (k+1).
                const double u = rng.next_double();
                std::int64_t k = 1;
                double pk = -d.ell / std::log1p(-d.ell);
                double cum = pk;
                while (u > cum && pk > 0.0) {
                    pk *= d.ell * static_cast<double>(k) / static_cast<double>(k + 1);
                    cum += pk;
                    ++k;
                }
                return k;
            } else if constexpr (std::is_same_v<T, Geometric>) {
                if (d.g == 1.0) return 1;
                // Closed-form inversion: 1 + floor(log(1-u) / log(1-g)).
                const double u = rng.next_double();
                return 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u) / std::log1p(-d.g)));
            } else {
                return d.c;
            }
        },
        dist);
}

Stationary::Stationary(double p0_) : p0(p0_) {
    if (!(p0 > 0.0 && p0 <= 1.0))
        throw std::invalid_argument("stationary probability must lie in (0,1]");
}

LinearDecreasing::LinearDecreasing(double p0_, std::int64_t horizon_) : p0(p0_), horizon(horizon_) {
    if (!(p0 > 0.0 && p0 <= 1.0))
        throw std::invalid_argument("initial probability must lie in (0,1]");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

Sudden::Sudden(double p0_, std::int64_t cutoff_) : p0(p0_), cutoff(cutoff_) {
    if (!(p0 > 0.0 && p0 <= 1.0))
        throw std::invalid_argument("initial probability must lie in (0,1]");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
}

double occurrence_prob(const OccurrenceProfile& profile, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("period index starts at 1");
    return std::visit(
        [t](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Stationary>) {
                return p.p0;
            } else if constexpr (std::is_same_v<T, LinearDecreasing>) {
                if (t > p.horizon || p.horizon == 1) return 0.0;
                return p.p0 * static_cast<double>(p.horizon - t) /
                       static_cast<double>(p.horizon - 1);
            } else {
                return t <= p.cutoff ? p.p0 : 0.0;
            }
        },
        profile);
}

namespace {

std::string trimmed_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string Scenario::id() const {
    std::string dist = std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Logarithmic>)
                return "log-" + trimmed_number(d.ell);
            else if constexpr (std::is_same_v<T, Geometric>)
                return "geo-" + trimmed_number(d.g);
            else
                return "const-" + std::to_string(d.c);
        },
        size_dist);
    std::string prof = std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Stationary>)
                return "stationary";
            else if constexpr (std::is_same_v<T, LinearDecreasing>)
                return "decreasing";
            else
                return "sudden";
        },
        profile);
    return dist + "-p" + trimmed_number(init_p0) + "-" + prof;
}

void Scenario::validate() const {
    if (!(init_p0 > 0.0 && init_p0 <= 1.0))
        throw std::invalid_argument("init_p0 must lie in (0,1]");
    if (init_len < 0) throw std::invalid_argument("init_len must be >= 0");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

SeriesPair generate_series(const Scenario& scenario, RngStream& rng) {
    scenario.validate();
    SeriesPair out;
    out.init.reserve(static_cast<std::size_t>(scenario.init_len));
    out.eval.reserve(static_cast<std::size_t>(scenario.horizon));
    for (std::int64_t t = 1; t <= scenario.init_len; ++t) {
        const bool occurs = rng.next_double() < scenario.init_p0;
        out.init.push_back(occurs ? static_cast<double>(sample_size(scenario.size_dist, rng)) : 0.0);
    }
    for (std::int64_t t = 1; t <= scenario.horizon; ++t) {
        const double p = occurrence_prob(scenario.profile, t);
        const bool occurs = rng.next_double() < p;
        out.eval.push_back(occurs ? static_cast<double>(sample_size(scenario.size_dist, rng)) : 0.0);
    }
    return out;
}

}  // namespace idf
