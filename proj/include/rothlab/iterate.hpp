#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rothlab/increment.hpp"

namespace rothlab {

enum class StopReason { DensityCap, NTooSmall, NoIncrement, ZeroEnergy, MaxSteps, FoundAP };

const char* to_string(StopReason reason);

struct Stage {
    Int N = 0;
    Rational alpha;
    DenseSet set;
    std::optional<IncrementResult> increment;
};

struct Trajectory {
    std::vector<Stage> stages;
    StopReason stop_reason = StopReason::MaxSteps;
    std::optional<std::array<Int, 3>> witness;  // set when stop_reason is FoundAP
};

struct IterateConfig {
    IncrementConfig increment;
    Int max_steps = 64;
    Int min_n = 8;
};

/// Repeatedly increments and rescales. Stage 0 always attempts an increment;
/// later stages first stop on alpha = 1, N < min_n, or the step limit.
Trajectory run(const DenseSet& a, const IterateConfig& cfg = {});

struct BoundRow {
    Int j = 0;
    double log_n_lower = 0;  // 2^-j log N - C log(e / alpha)
};

struct BoundReport {
    Int N = 0;
    double alpha = 0;
    double C = 1;
    double c0 = 1;
    double bound = 0;       // C (log log N)^(-1/11)
    bool within = false;    // alpha <= bound
    Int steps = 0;          // floor(c0 alpha^-11)
    std::vector<BoundRow> rows;
};

/// Floating-point display of the quantitative recursion; not a correctness gate.
BoundReport bound_report(Int N, const Rational& alpha, double C = 1.0, double c0 = 1.0, Int max_rows = 64);

} // namespace rothlab
