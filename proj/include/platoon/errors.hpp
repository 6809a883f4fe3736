#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace platoon {

// Which closed-loop constraint a state ran into.
enum class BarrierKind { spacing_lower, spacing_upper, funnel };

const char* barrier_name(BarrierKind kind);

// First constraint violation found in a platoon state. Pair indices are
// 1-based; pair 1 couples the first follower with the leader.
struct Violation {
    int pair = 0;
    BarrierKind kind = BarrierKind::spacing_lower;
    double value = 0.0;   // offending quantity: gap [m] or funnel variable [m/s]
    double margin = 0.0;  // signed distance to the constraint, negative = violated
};

std::string describe(const Violation& v, double time);

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An assumption on the initial data or parameters does not hold.
class AssumptionError : public std::runtime_error {
  public:
    AssumptionError(const std::string& msg, int index, std::string quantity)
        : std::runtime_error(msg), index(index), quantity(std::move(quantity)) {}

    int index;             // offending vehicle/pair, 0 if not applicable
    std::string quantity;  // which quantity failed, e.g. "spacing slack"
};

// A controller operation was evaluated outside its domain.
class BarrierError : public std::runtime_error {
  public:
    BarrierError(const Violation& v, double time)
        : std::runtime_error(describe(v, time)), violation(v), time(time) {}

    Violation violation;
    double time;
};

// The stepper could not continue. domain_exit: no admissible step exists even
// at the minimum step size; nonfinite: the state or error estimate overflowed.
class IntegrationError : public std::runtime_error {
  public:
    enum class Reason { domain_exit, nonfinite };

    IntegrationError(Reason reason, const std::string& msg, double time, Violation violation,
                     std::vector<std::pair<double, double>> margin_history)
        : std::runtime_error(msg),
          reason(reason),
          time(time),
          violation(violation),
          margin_history(std::move(margin_history)) {}

    Reason reason;
    double time;
    Violation violation;  // meaningful for domain_exit
    // Recent (t, min funnel margin) pairs from the accepted steps before failure.
    std::vector<std::pair<double, double>> margin_history;
};

}  // namespace platoon
