#pragma once

#include <functional>

namespace platoon {

inline constexpr double kGravity = 9.81;            // m/s^2
inline constexpr double kDefaultAirDensity = 1.3;   // kg/m^3

// Per-vehicle physical constants and environment profiles. Null profiles fall
// back to a flat road, constant air density and zero disturbance. Profile
// callables must be reentrant and must not throw; they are evaluated from
// parallel regions.
struct VehicleParams {
    double mass = 1500.0;               // kg
    double drag_coeff = 0.32;           // dimensionless
    double rolling_coeff = 0.01;        // dimensionless
    double frontal_area = 2.4;          // m^2
    double friction_smoothing = 100.0;  // sign-smoothing sharpness, > 0

    std::function<double(double)> slope;                // x [m] -> road angle [rad]
    std::function<double(double, double)> air_density;  // (t [s], x [m]) -> kg/m^3
    std::function<double(double)> disturbance;          // t [s] -> N
    double disturbance_bound = 0.0;                     // declared sup |disturbance|, N

    double slope_at(double x) const { return slope ? slope(x) : 0.0; }
    double air_density_at(double t, double x) const {
        return air_density ? air_density(t, x) : kDefaultAirDensity;
    }
    double disturbance_at(double t) const { return disturbance ? disturbance(t) : 0.0; }

    void validate() const;  // throws ConfigError
};

struct ForceBreakdown {
    double gravity = 0.0;  // N
    double aero = 0.0;     // N
    double rolling = 0.0;  // N
    double total = 0.0;    // N, always gravity + aero + rolling
};

// Longitudinal force model. All pure functions of their inputs.
double gravity_force(const VehicleParams& p, double x);
double aero_drag(const VehicleParams& p, double t, double x, double v);
double rolling_friction(const VehicleParams& p, double v);
ForceBreakdown total_force(const VehicleParams& p, double t, double x, double v);

// Acceleration of one vehicle under drive/brake force u [N].
double acceleration(const VehicleParams& p, double t, double x, double v, double u);

}  // namespace platoon
