#ifndef GBG_COMMON_HPP
#define GBG_COMMON_HPP

#include <stdexcept>
#include <string>

namespace gbg {

// Thrown for malformed user input (bad JSON, unknown names, broken invariants
// in supplied data). The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computation exhausts a budget or a verification cannot be
// completed. The CLI maps this to exit code 1.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure (a matching bug, an impossible state). These
// indicate a defect in this library, not in the input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

// Budget knobs, overridable through GBG_BUDGET_* environment variables.
struct Budgets {
    long long f_applications = 1000000;     // GBG_BUDGET_F
    long long handle_steps = 10000000;      // GBG_BUDGET_HANDLE
    long long tietze_steps = 400000;        // GBG_BUDGET_TIETZE
    long long embed_states = 100000;        // GBG_BUDGET_EMBED
    static Budgets from_env();
};

} // namespace gbg

#endif
