#include "rothlab/iterate.hpp"

#include <cmath>

namespace rothlab {

const char* to_string(StopReason reason) {
    switch (reason) {
    case StopReason::DensityCap: return "DensityCap";
    case StopReason::NTooSmall: return "NTooSmall";
    case StopReason::NoIncrement: return "NoIncrement";
    case StopReason::ZeroEnergy: return "ZeroEnergy";
    case StopReason::MaxSteps: return "MaxSteps";
    case StopReason::FoundAP: return "FoundAP";
    }
    return "Unknown";
}

Trajectory run(const DenseSet& a, const IterateConfig& cfg) {
    cfg.increment.validate();
    Trajectory traj;
    DenseSet current = a;
    for (Int step = 0;; ++step) {
        Stage stage{current.n(), current.density(), current, std::nullopt};
        const FreenessReport freeness = is_3ap_free(current);
        if (!freeness.free) {
            traj.stages.push_back(std::move(stage));
            traj.stop_reason = StopReason::FoundAP;
            traj.witness = freeness.witness;
            return traj;
        }
        std::optional<StopReason> gate;
        if (step > 0 && stage.alpha == 1) gate = StopReason::DensityCap;
        else if (step > 0 && stage.N < cfg.min_n) gate = StopReason::NTooSmall;
        else if (step >= cfg.max_steps) gate = StopReason::MaxSteps;
        if (gate) {
            traj.stages.push_back(std::move(stage));
            traj.stop_reason = *gate;
            return traj;
        }
        try {
            if (current.n() < 1) throw IncrementFailure(IncrementFailureKind::ZeroEnergy, "empty interval");
            stage.increment = density_increment(current, choose_modulus(current.n()), cfg.increment);
        } catch (const IncrementFailure& failure) {
            traj.stages.push_back(std::move(stage));
            traj.stop_reason =
                failure.kind() == IncrementFailureKind::ZeroEnergy ? StopReason::ZeroEnergy : StopReason::NoIncrement;
            return traj;
        } catch (const InvalidArgument&) {
            // a fixed window length can outgrow a shrunken modulus
            traj.stages.push_back(std::move(stage));
            traj.stop_reason = StopReason::NoIncrement;
            return traj;
        }
        DenseSet next = rescale(current, stage.increment->P);
        traj.stages.push_back(std::move(stage));
        current = std::move(next);
    }
}

BoundReport bound_report(Int N, const Rational& alpha, double C, double c0, Int max_rows) {
    if (N < 16) throw InvalidArgument("bound_report: N must be at least 16");
    if (alpha <= 0 || alpha > 1) throw InvalidArgument("bound_report: alpha must lie in (0, 1]");
    BoundReport r;
    r.N = N;
    r.alpha = alpha.get_d();
    r.C = C;
    r.c0 = c0;
    const double log_n = std::log(static_cast<double>(N));
    r.bound = C * std::pow(std::log(log_n), -1.0 / 11.0);
    r.within = r.alpha <= r.bound;
    r.steps = static_cast<Int>(std::floor(c0 * std::pow(r.alpha, -11.0)));
    const double penalty = C * std::log(std::exp(1.0) / r.alpha);
    for (Int j = 0; j <= std::min(r.steps, max_rows - 1); ++j)
        r.rows.push_back({j, std::ldexp(log_n, -static_cast<int>(j)) - penalty});
    return r;
}

} // namespace rothlab
