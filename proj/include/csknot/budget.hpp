#ifndef CSKNOT_BUDGET_HPP
#define CSKNOT_BUDGET_HPP

#include <chrono>
#include <cstdlib>
#include <optional>

namespace csknot {

/// Wall-clock deadline for long enumerations; checked cooperatively.
struct Budget {
    std::chrono::steady_clock::time_point deadline;

    bool expired() const { return std::chrono::steady_clock::now() >= deadline; }

    static Budget after_ms(long ms) {
        return Budget{std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
    }

    /// Per-row sweep budget from CSKNOT_BUDGET_MS, if set.
    static std::optional<Budget> from_env() {
        const char* v = std::getenv("CSKNOT_BUDGET_MS");
        if (!v) return std::nullopt;
        const long ms = std::strtol(v, nullptr, 10);
        if (ms <= 0) return std::nullopt;
        return after_ms(ms);
    }
};

} // namespace csknot

#endif
