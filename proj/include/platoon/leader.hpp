#pragma once

#include <utility>
#include <vector>

namespace platoon {

enum class LeaderKind { constant_cruise, brake_profile, sinusoidal_profile, user_spline };

const char* leader_kind_name(LeaderKind kind);

struct LeaderState {
    double position = 0.0;      // m
    double velocity = 0.0;      // m/s
    double acceleration = 0.0;  // m/s^2
};

// Twice continuously differentiable leader motion. Position is the exact
// integral of velocity per closed form; all evaluations are pure.
class LeaderTrajectory {
  public:
    LeaderTrajectory();  // constant cruise at 20 m/s from position 0

    static LeaderTrajectory constant_cruise(double initial_position, double speed);

    // Cruise at cruise_speed, then brake at rate decel [m/s^2 > 0] starting at
    // brake_start until standstill, holding position afterwards. Acceleration
    // transitions are smoothed by cosine ramps of length jerk_window so that
    // the acceleration stays C^1 while its peak remains -decel.
    static LeaderTrajectory brake_profile(double initial_position, double cruise_speed,
                                          double brake_start, double decel, double jerk_window);

    // x(t) = offset + base_speed*t - cos_amp*cos(t/cos_period) + sin_amp*sin(sin_freq*t)
    static LeaderTrajectory sinusoidal_profile(double offset, double base_speed, double cos_amp,
                                               double cos_period, double sin_amp, double sin_freq);

    // Natural cubic spline through (time, speed) knots starting at t = 0,
    // extended linearly in velocity beyond the last knot. Position follows by
    // exact segment-wise integration.
    static LeaderTrajectory velocity_spline(double initial_position, std::vector<double> knot_times,
                                            std::vector<double> knot_speeds);

    LeaderState eval(double t) const;

    // (sup |velocity|, sup |acceleration|) over [0, horizon]; exact for the
    // closed forms, dense-sampled with local refinement otherwise.
    std::pair<double, double> sup_norms(double horizon) const;

    LeaderKind kind() const { return kind_; }

    double initial_position() const { return initial_position_; }
    double cruise_speed() const { return cruise_speed_; }
    double brake_start() const { return brake_start_; }
    double brake_decel() const { return brake_decel_; }
    double jerk_window() const { return jerk_window_; }
    double offset() const { return offset_; }
    double base_speed() const { return base_speed_; }
    double cos_amp() const { return cos_amp_; }
    double cos_period() const { return cos_period_; }
    double sin_amp() const { return sin_amp_; }
    double sin_freq() const { return sin_freq_; }
    const std::vector<double>& knot_times() const { return knot_times_; }
    const std::vector<double>& knot_speeds() const { return knot_speeds_; }

    void validate() const;  // throws ConfigError

  private:
    LeaderState eval_brake(double t) const;
    LeaderState eval_spline(double t) const;
    void build_spline();

    LeaderKind kind_ = LeaderKind::constant_cruise;

    double initial_position_ = 0.0;
    double cruise_speed_ = 20.0;

    double brake_start_ = 15.0;
    double brake_decel_ = 5.0;
    double jerk_window_ = 0.5;

    double offset_ = 0.0;
    double base_speed_ = 0.0;
    double cos_amp_ = 0.0;
    double cos_period_ = 1.0;
    double sin_amp_ = 0.0;
    double sin_freq_ = 1.0;

    std::vector<double> knot_times_;
    std::vector<double> knot_speeds_;
    std::vector<double> spline_curvature_;  // second derivative of v at knots
    std::vector<double> spline_position_;   // position at knots
    double spline_end_slope_ = 0.0;
};

}  // namespace platoon
