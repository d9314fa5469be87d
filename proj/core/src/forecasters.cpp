#include "idf/forecasters.hpp"

#include <cmath>
#include <stdexcept>

namespace idf {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Ses: return "SES";
        case Method::Croston: return "CR";
        case Method::Sba: return "SBA";
        case Method::Sy: return "SY";
        case Method::Tsb: return "TSB";
        case Method::Hes: return "HES";
    }
    throw std::logic_error("unreachable method");
}

Method method_from_name(std::string_view name) {
    if (name == "SES") return Method::Ses;
    if (name == "CR") return Method::Croston;
    if (name == "SBA") return Method::Sba;
    if (name == "SY") return Method::Sy;
    if (name == "TSB") return Method::Tsb;
    if (name == "HES") return Method::Hes;
    throw std::invalid_argument("unknown method name: " + std::string(name));
}

SmoothingParams::SmoothingParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("beta must lie in (0,1)");
}

namespace {

ForecasterState initial_state(Method m) {
    switch (m) {
        case Method::Ses: return SesState{};
        case Method::Tsb: return TsbState{};
        default: return CrostonState{};
    }
}

void check_state(Method m, const ForecasterState& s) {
    switch (m) {
        case Method::Ses: {
            const auto& st = std::get<SesState>(s);
            if (!(st.level >= 0.0)) throw std::invalid_argument("SES level must be >= 0");
            break;
        }
        case Method::Tsb: {
            const auto& st = std::get<TsbState>(s);
            if (!(st.y_hat > 0.0)) throw std::invalid_argument("y_hat must be > 0");
            if (!(st.p_hat >= 0.0 && st.p_hat <= 1.0))
                throw std::invalid_argument("p_hat must lie in [0,1]");
            break;
        }
        default: {
            const auto& st = std::get<CrostonState>(s);
            if (!(st.y_hat > 0.0)) throw std::invalid_argument("y_hat must be > 0");
            if (!(st.tau_hat >= 1.0)) throw std::invalid_argument("tau_hat must be >= 1");
            if (st.zero_run < 0) throw std::invalid_argument("zero_run must be >= 0");
            break;
        }
    }
}

}  // namespace

Forecaster::Forecaster(Method method, SmoothingParams params)
    : method_(method), params_(params), state_(initial_state(method)) {}

Forecaster::Forecaster(Method method, SmoothingParams params, ForecasterState state)
    : method_(method), params_(params), state_(std::move(state)) {
    check_state(method_, state_);
}

double Forecaster::forecast() const {
    const double beta = params_.beta;
    switch (method_) {
        case Method::Ses:
            return std::get<SesState>(state_).level;
        case Method::Croston: {
            const auto& s = std::get<CrostonState>(state_);
            return s.y_hat / s.tau_hat;
        }
        case Method::Sba: {
            const auto& s = std::get<CrostonState>(state_);
            return (1.0 - beta / 2.0) * s.y_hat / s.tau_hat;
        }
        case Method::Sy: {
            const auto& s = std::get<CrostonState>(state_);
            return (1.0 - beta / 2.0) * s.y_hat / (s.tau_hat - beta / 2.0);
        }
        case Method::Tsb: {
            const auto& s = std::get<TsbState>(state_);
            return s.p_hat * s.y_hat;
        }
        case Method::Hes: {
            // Pseudocounts c1 = 2/beta and c0 = 2*(tau_hat-1)/beta applied to
            // the elapsed-period count zero_run + 1 reduce to this closed
            // form. At an issue point (zero_run = 0) it coincides with the
            // plain Croston forecast; each further zero period adds beta/2
            // to the denominator, so the reciprocal grows linearly.
            const auto& s = std::get<CrostonState>(state_);
            return s.y_hat / (s.tau_hat + beta * static_cast<double>(s.zero_run) / 2.0);
        }
    }
    throw std::logic_error("unreachable method");
}

void Forecaster::update(double y) {
    if (!(y >= 0.0) || !std::isfinite(y))
        throw std::invalid_argument("demand must be finite and >= 0");
    const double alpha = params_.alpha;
    const double beta = params_.beta;
    switch (method_) {
        case Method::Ses: {
            auto& s = std::get<SesState>(state_);
            s.level = alpha * y + (1.0 - alpha) * s.level;
            break;
        }
        case Method::Tsb: {
            // Probability smoothed every period, size only at demands.
            auto& s = std::get<TsbState>(state_);
            s.p_hat = beta * (y != 0.0 ? 1.0 : 0.0) + (1.0 - beta) * s.p_hat;
            if (y != 0.0) s.y_hat = alpha * y + (1.0 - alpha) * s.y_hat;
            break;
        }
        default: {
            auto& s = std::get<CrostonState>(state_);
            if (y == 0.0) {
                ++s.zero_run;
            } else {
                const double interval = static_cast<double>(s.zero_run) + 1.0;
                s.y_hat = alpha * y + (1.0 - alpha) * s.y_hat;
                s.tau_hat = beta * interval + (1.0 - beta) * s.tau_hat;
                s.zero_run = 0;
            }
            break;
        }
    }
}

double Forecaster::step(double y) {
    const double f = forecast();
    update(y);
    return f;
}

}  // namespace idf
