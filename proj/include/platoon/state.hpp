#pragma once

#include <limits>
#include <vector>

#include "platoon/controller.hpp"
#include "platoon/forces.hpp"
#include "platoon/leader.hpp"

namespace platoon {

// Follower positions and velocities at one instant. The leader is not part of
// the state; it acts as a forcing signal.
struct PlatoonState {
    double time = 0.0;
    std::vector<double> positions;
    std::vector<double> velocities;

    int count() const { return static_cast<int>(positions.size()); }
    void validate() const;  // throws ConfigError
};

enum class ExecMode { serial, parallel };

struct MassChainParams {
    double p = 0.5;
    double q = 0.5;
    int start_index = -1;  // -1: count + 1, i.e. the finite-platoon reading
};

struct ScenarioConfig {
    std::vector<VehicleParams> vehicles;  // one per follower
    ControllerParams controller;
    LeaderTrajectory leader;
    std::vector<double> initial_gaps;        // m, gap from vehicle i-1 to i
    std::vector<double> initial_velocities;  // m/s

    double horizon = 40.0;      // s
    double sample_step = 0.01;  // s, output grid; independent of integration steps
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double max_step = 0.02;  // s, keeps the cubic dense output within tolerance
    ExecMode mode = ExecMode::parallel;
    MassChainParams mass_chain;

    int count() const { return static_cast<int>(vehicles.size()); }
    int mass_chain_start() const {
        return mass_chain.start_index < 0 ? count() + 1 : mass_chain.start_index;
    }
    std::vector<double> masses() const;
    PlatoonState initial_state() const;

    void validate() const;  // structural checks only; throws ConfigError
};

struct TraceSample {
    double t = 0.0;
    std::vector<double> positions;
    std::vector<double> velocities;
    std::vector<double> accelerations;
    std::vector<PairDiagnostics> pairs;
    double psi = 0.0;
    LeaderState leader;

    int count() const { return static_cast<int>(positions.size()); }

    // Inter-vehicle distance for pair i (0-based), derived from the spacing
    // error so the stored diagnostics stay the single source of truth.
    double gap(int i, const ControllerParams& cp) const { return cp.d_min - pairs[i].xi; }
};

struct RunStats {
    long steps_accepted = 0;
    long steps_rejected_error = 0;
    long steps_rejected_domain = 0;
    long rhs_evaluations = 0;
    double min_funnel_margin = std::numeric_limits<double>::infinity();
    double min_spacing_margin = std::numeric_limits<double>::infinity();
    double min_step = std::numeric_limits<double>::infinity();
    double max_step = 0.0;
};

struct SimulationTrace {
    std::vector<TraceSample> samples;
    RunStats stats;

    int count() const { return samples.empty() ? 0 : samples.front().count(); }
};

// Output grid: 0, step, 2*step, ..., horizon. The final time is always exactly
// the horizon; times are strictly increasing.
std::vector<double> sample_times(double horizon, double step);

}  // namespace platoon
