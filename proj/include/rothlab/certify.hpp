#pragma once

// Exact checks of the identities and inequalities behind the density
// increment. Every report compares two exact rationals in unscaled units
// (f, R, E, V rather than their N-scaled integer forms).
//
// Equalities are reported as `sum |difference| <= 0`, so a single report type
// covers both kinds of statement.

#include <optional>
#include <string>
#include <vector>

#include "rothlab/correlation.hpp"

namespace rothlab {

struct InequalityReport {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds = false;  // lhs <= rhs
    Rational margin;     // rhs - lhs

    static InequalityReport make(std::string name, Rational lhs, Rational rhs);
};

struct PositivityCheck {
    InequalityReport nonnegative;  // 0 <= sum_d R(hd) R(kd)
    InequalityReport forms_agree;  // |direct - sum of squares| <= 0
    BigInt direct_scaled;          // scale N^4
    BigInt witness_scaled;
};

/// sum_u (sum_a F(a) F(u + lambda a))^2, scale N^4.
BigInt sum_of_squares_witness(const BalancedProfile& p, Int lambda);

/// sum_d R~(h d) R~(k d), scale N^4.
BigInt positivity_sum_scaled(const CorrelationProfile& c, Int h, Int k);

/// Both forms of the positivity sum for one pair of nonzero residues.
PositivityCheck check_positivity(const CorrelationProfile& c, const BalancedProfile& p, Int h, Int k);

struct PositivitySweep {
    Int pairs = 0;
    Int negative = 0;       // pairs with a negative sum
    Int disagreements = 0;  // pairs where the two forms differ
    BigInt min_scaled;      // smallest sum seen
};

/// All (h, k) in (Z_m^x)^2; the witness is computed once per ratio k/h.
PositivitySweep positivity_exhaustive(const CorrelationProfile& c, const BalancedProfile& p);

/// `count` pairs drawn from a seeded generator.
PositivitySweep positivity_sampled(const CorrelationProfile& c, const BalancedProfile& p, Int count,
                                   std::uint64_t seed);

/// Lambda(g1,g2,g3)^4 <= m^5 min_i E(g_i); requires |g_i| <= 1.
InequalityReport check_lambda_energy(const ScaledFunction& g1, const ScaledFunction& g2, const ScaledFunction& g3);

struct DiscrepancyReport {
    Rational lambda_set;    // Lambda(1_A, 1_A, 1_A)
    Rational lambda_model;  // alpha^3 Lambda(1_[N], 1_[N], 1_[N])
    Rational delta;         // |lambda_set - lambda_model|
    EnergyValue energy;     // E~ = N^4 E(f)
    Rational beta_hat;      // E(f) / m^3
    Rational energy_floor;  // delta^4 / (81 m^5), a lower bound on E(f)
};

/// |Lambda(u,u,u) - Lambda(v,v,v)|^4 <= 81 m^5 E(f) with u = 1_A, v = alpha 1_[N].
std::pair<InequalityReport, DiscrepancyReport> check_discrepancy(const DenseSet& a, const ModContext& ctx);

/// Moment identities and bounds for window sums of length ell.
std::vector<InequalityReport> check_window_identities(const BalancedProfile& p, const CorrelationProfile& c,
                                                      const EnergyValue& e, Int ell);

/// Symmetry, zero sum, R(0) value and bound, E >= R(0)^2.
std::vector<InequalityReport> check_correlation_invariants(const BalancedProfile& p, const CorrelationProfile& c,
                                                           const EnergyValue& e);

struct VerifyConfig {
    std::vector<Int> window_lengths{1, 2, 3, 8};
    Int exhaustive_modulus_limit = 300;  // all (h, k) pairs up to this m
    Int sampled_pairs = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct CertificateReport {
    ModContext ctx;
    FreenessReport freeness;
    DiscrepancyReport discrepancy;
    std::vector<InequalityReport> reports;

    bool passed() const;
};

CertificateReport verify_all(const DenseSet& a, const VerifyConfig& cfg = {});

} // namespace rothlab
