#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace idf {

/// Forecasting methods for intermittent demand.
///
/// Ses      single exponential smoothing of the raw series
/// Croston  separate smoothing of demand sizes and inter-demand intervals,
///          forecast = y_hat / tau_hat
/// Sba      Croston with the (1 - beta/2) bias correction
/// Sy       Croston with forecast (1 - beta/2) * y_hat / (tau_hat - beta/2),
///          unbiased on non-intermittent demand as well
/// Tsb      smooths the demand probability every period instead of the
///          interval, forecast = p_hat * y_hat; decays exponentially during
///          zero runs
/// Hes      hyperbolic-exponential smoothing: Croston-style size/interval
///          smoothing plus a pseudocount (Beta-prior) probability estimate
///          while demand is absent, forecast
///          y_hat / (tau_hat + beta*zero_run/2); the reciprocal grows
///          linearly during a zero run, so the forecast decays hyperbolically
enum class Method { Ses, Croston, Sba, Sy, Tsb, Hes };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);  // accepts SES,CR,SBA,SY,TSB,HES

/// Smoothing factor pair. alpha smooths demand sizes, beta smooths
/// intervals (Croston family) or the demand probability (TSB) or the
/// pseudocount weight (HES). Both must lie strictly inside (0,1).
struct SmoothingParams {
    double alpha;
    double beta;

    SmoothingParams(double alpha, double beta);
};

struct SesState {
    double level = 1.0;
};

/// Shared by Croston, SBA, SY and HES: all four smooth sizes and intervals
/// identically and differ only in the forecast formula. zero_run counts the
/// consecutive zero-demand periods observed since the most recent nonzero
/// demand (0 immediately after a demand), so the interval fed to the
/// smoother on a demand is zero_run + 1.
struct CrostonState {
    double y_hat = 1.0;
    double tau_hat = 1.0;
    std::int64_t zero_run = 0;
};

struct TsbState {
    double y_hat = 1.0;
    double p_hat = 1.0;
};

using ForecasterState = std::variant<SesState, CrostonState, TsbState>;

/// Incremental one-step-ahead forecaster.
///
/// The per-period loop is: f_t = forecast(); observe y_t; update(y_t).
/// forecast() is pure and uses only information through the previous
/// period. Initial state is y_hat = tau_hat = 1 (and p_hat = 1/tau_hat = 1
/// for TSB); a long burn-in washes the choice out.
class Forecaster {
public:
    Forecaster(Method method, SmoothingParams params);
    Forecaster(Method method, SmoothingParams params, ForecasterState state);

    /// One-step-ahead forecast for the next period. Pure.
    double forecast() const;

    /// Absorb the realized demand of the period just forecast. y must be
    /// finite and >= 0.
    void update(double y);

    /// forecast() paired with update(y); returns the forecast that was in
    /// force when y was observed.
    double step(double y);

    Method method() const { return method_; }
    const SmoothingParams& params() const { return params_; }
    const ForecasterState& state() const { return state_; }

private:
    Method method_;
    SmoothingParams params_;
    ForecasterState state_;
};

}  // namespace idf
