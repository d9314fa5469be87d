#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace idf {

/// Deterministic pseudo-random stream. Wraps std::mt19937_64, whose output
/// sequence is pinned by the C++ standard, so a given 64-bit seed yields the
/// same stream on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; the documented integer mix used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a on the bytes of a string, used to fold scenario ids into seeds.
std::uint64_t fnv1a64(std::string_view s);

/// Seed for the stream owned by one (scenario, run) pair:
///   mix64(mix64(base_seed ^ fnv1a64(scenario_id)) ^ run_index)
std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::string_view scenario_id,
                                 std::uint64_t run_index);

// --- demand size distributions -------------------------------------------

/// Pr[X=k] = -ell^k / (k * log(1-ell)), k >= 1.
struct Logarithmic {
    double ell;
    explicit Logarithmic(double ell);
};

/// Pr[X=k] = (1-g)^(k-1) * g, k >= 1. g = 1 degenerates to constant 1.
struct Geometric {
    double g;
    explicit Geometric(double g);
};

struct ConstantSize {
    std::int64_t c;
    explicit ConstantSize(std::int64_t c);
};

using SizeDistribution = std::variant<Logarithmic, Geometric, ConstantSize>;

double size_pmf(const SizeDistribution& dist, std::int64_t k);
std::int64_t sample_size(const SizeDistribution& dist, RngStream& rng);

// --- occurrence probability profiles --------------------------------------

struct Stationary {
    double p0;
    explicit Stationary(double p0);
};

/// p(t) = p0 * (H - t) / (H - 1) for 1 <= t <= H, 0 afterwards: p0 in the
/// first period, 0 in the last.
struct LinearDecreasing {
    double p0;
    std::int64_t horizon;
    LinearDecreasing(double p0, std::int64_t horizon);
};

/// p(t) = p0 while t <= cutoff, 0 afterwards.
struct Sudden {
    double p0;
    std::int64_t cutoff;
    Sudden(double p0, std::int64_t cutoff);
};

using OccurrenceProfile = std::variant<Stationary, LinearDecreasing, Sudden>;

double occurrence_prob(const OccurrenceProfile& profile, std::int64_t t);

// --- scenarios -------------------------------------------------------------

/// A demand scenario: size distribution, occurrence profile over the
/// evaluation horizon, and a stationary initialization stretch (probability
/// init_p0) used to burn in the forecasters. The profile clock starts at
/// evaluation period 1.
struct Scenario {
    SizeDistribution size_dist;
    OccurrenceProfile profile;
    double init_p0;
    std::int64_t init_len = 10000;
    std::int64_t horizon = 120;

    /// Stable identifier, e.g. "log-0.9-p0.5-stationary"; keyed into seeds,
    /// file names and golden tables.
    std::string id() const;

    void validate() const;  // throws std::invalid_argument
};

struct SeriesPair {
    std::vector<double> init;  // nonnegative integer-valued demands
    std::vector<double> eval;
};

/// Draws the initialization and evaluation series of one run. Per period:
/// demand occurs with the profile probability, and its size is then drawn
/// from the size distribution; otherwise the demand is 0.
SeriesPair generate_series(const Scenario& scenario, RngStream& rng);

}  // namespace idf
