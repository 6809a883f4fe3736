#pragma once

#include <optional>
#include <span>

#include "platoon/state.hpp"

namespace platoon {

// Below this follower count the parallel kernels fall back to the serial
// loop; the per-region overhead would dominate.
inline constexpr int kParallelCutoff = 64;

// Closed-loop vector field: xdot_i = v_i, vdot_i = acceleration under the
// pair controller (pair 1 tracks the leader). Returns the smallest-index
// violation if the state lies outside the admissible set, in which case the
// output arrays are unspecified. When diag is non-empty (size count) the
// per-pair controller diagnostics are stored as well.
//
// Serial and parallel modes are bitwise identical; the parallel loop writes
// disjoint slots only.
std::optional<Violation> try_rhs(double t, std::span<const double> x, std::span<const double> v,
                                 const ScenarioConfig& cfg, ExecMode mode, std::span<double> xdot,
                                 std::span<double> vdot,
                                 std::span<PairDiagnostics> diag = {}) noexcept;

// Throwing wrapper implementing the same field over a PlatoonState.
// Throws BarrierError when the state is outside the admissible set.
void rhs(const PlatoonState& state, const ScenarioConfig& cfg, std::span<double> xdot,
         std::span<double> vdot);

}  // namespace platoon
