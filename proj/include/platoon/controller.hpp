#pragma once

#include <functional>
#include <optional>
#include <span>

#include "platoon/errors.hpp"

namespace platoon {

struct PlatoonState;

// Time-varying funnel boundary psi. Either the exponential family
// amp*exp(-decay*t) + floor, or a user-supplied (psi, dpsi/dt) pair with
// declared sup/inf bounds. psi must stay positive with a positive infimum.
class FunnelBoundary {
  public:
    FunnelBoundary() = default;  // amp 1, decay 2, floor 1

    static FunnelBoundary exponential(double amp, double decay, double floor);

    // User-supplied boundary with declared bounds (sup psi, inf psi, sup |dpsi|).
    static FunnelBoundary custom(std::function<double(double)> value,
                                 std::function<double(double)> slope, double sup, double inf,
                                 double slope_sup);

    // User-supplied boundary with bounds estimated by dense sampling of
    // [0, horizon] at a 1e-3 relative grid plus local refinement.
    static FunnelBoundary custom_sampled(std::function<double(double)> value,
                                         std::function<double(double)> slope, double horizon);

    double value(double t) const;
    double slope(double t) const;

    double sup_norm() const { return sup_; }        // sup_t psi
    double inf_value() const { return inf_; }       // inf_t psi (> 0)
    double slope_sup_norm() const { return slope_sup_; }

    bool is_exponential() const { return !value_fn_; }
    double amp() const { return amp_; }
    double decay() const { return decay_; }
    double floor() const { return floor_; }

    void validate() const;  // throws ConfigError

  private:
    double amp_ = 1.0;
    double decay_ = 2.0;
    double floor_ = 1.0;
    std::function<double(double)> value_fn_;
    std::function<double(double)> slope_fn_;
    double sup_ = 2.0;
    double inf_ = 1.0;
    double slope_sup_ = 2.0;
};

// Shared controller design constants. gain1 multiplies the relative velocity
// [N*s/m], gain2 the headway error [N/m], so the control is in newtons.
struct ControllerParams {
    double d_min = 2.0;     // m, safety distance
    double d_max = 15.0;    // m, maximal distance
    double headway = 0.5;   // s
    double gain1 = 3600.0;  // N*s/m
    double gain2 = 3600.0;  // N/m
    FunnelBoundary funnel;

    double gap_range() const { return d_max - d_min; }  // corridor width M

    void validate() const;  // throws ConfigError
};

// Everything the controller produces for one follower/predecessor pair.
// Whenever produced, xi lies strictly in (-M, 0) and funnel_margin > 0.
struct PairDiagnostics {
    double xi = 0.0;             // spacing error, m
    double headway_err = 0.0;    // m
    double funnel_var = 0.0;     // m/s
    double funnel_gain = 0.0;    // s/m
    double control = 0.0;        // N
    double funnel_margin = 0.0;  // psi(t) - |funnel_var|, m/s
};

// Gap shortfall x_self - x_pred + d_min. Inside the corridor this lies in
// (-M, 0).
double spacing_error(double x_self, double x_pred, const ControllerParams& cp);

// Relative velocity dv minus the two barrier terms 1/xi and 1/(M + xi).
// Throws BarrierError when xi is not in (-M, 0).
double funnel_variable(double dv, double xi, const ControllerParams& cp);

// Reciprocal distance of w to the funnel boundary, 1/(psi(t) - |w|) > 0.
// Throws BarrierError when |w| >= psi(t).
double funnel_gain(double t, double w, const ControllerParams& cp);

// Full control law for one pair; throws BarrierError outside its domain.
PairDiagnostics control_input(double t, double x_self, double v_self, double x_pred,
                              double v_pred, const ControllerParams& cp);

// Non-throwing core used by the stepper's hot loop. violation->pair is left
// at 0; the caller fills in the pair index.
struct PairResult {
    PairDiagnostics diag;
    std::optional<Violation> violation;
};

PairResult eval_pair(double t, double psi_t, double x_self, double v_self, double x_pred,
                     double v_pred, const ControllerParams& cp) noexcept;

struct DomainCheck {
    bool ok = true;
    Violation first;                 // smallest violating pair when !ok
    double min_funnel_margin = 0.0;  // only meaningful when ok
    double min_spacing_margin = 0.0;
};

// True iff every consecutive pair (pair 1 against the leader) has its gap
// strictly inside (d_min, d_max) and its funnel variable strictly inside the
// funnel.
DomainCheck in_domain(double t, double leader_x, double leader_v, std::span<const double> x,
                      std::span<const double> v, const ControllerParams& cp) noexcept;
DomainCheck in_domain(double t, double leader_x, double leader_v, const PlatoonState& state,
                      const ControllerParams& cp) noexcept;

}  // namespace platoon
