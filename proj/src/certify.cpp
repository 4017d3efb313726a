#include "rothlab/certify.hpp"

#include <algorithm>
#include <random>

namespace rothlab {
namespace {

BigInt pow_big(const BigInt& base, unsigned e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rational pow_rat(const Rational& q, unsigned e) {
    return make_rational(pow_big(q.get_num(), e), pow_big(q.get_den(), e));
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Scale factor N^k as a big integer.
BigInt scale_pow(Int N, unsigned k) { return pow_big(to_big(N), k); }

} // namespace

InequalityReport InequalityReport::make(std::string name, Rational lhs, Rational rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.holds = r.lhs <= r.rhs;
    r.margin = r.rhs - r.lhs;
    return r;
}

BigInt positivity_sum_scaled(const CorrelationProfile& c, Int h, Int k) {
    const Int m = c.ctx.m;
    Wide acc = 0;
    Int hd = 0, kd = 0;
    h = mod_reduce(h, m);
    k = mod_reduce(k, m);
    for (Int d = 0; d < m; ++d) {
        acc = checked_add(acc, checked_mul(Wide{c.rvals[static_cast<std::size_t>(hd)]},
                                           Wide{c.rvals[static_cast<std::size_t>(kd)]}));
        hd += h;
        if (hd >= m) hd -= m;
        kd += k;
        if (kd >= m) kd -= m;
    }
    return to_big(acc);
}

BigInt sum_of_squares_witness(const BalancedProfile& p, Int lambda) {
    const Int m = p.ctx.m;
    lambda = mod_reduce(lambda, m);
    std::vector<Int> support, coeff, shifted;
    for (Int a = 0; a < m; ++a) {
        const Int v = p.values[static_cast<std::size_t>(a)];
        if (v == 0) continue;
        support.push_back(a);
        coeff.push_back(v);
        shifted.push_back(mul_mod(lambda, a, m));
    }
    Wide total = 0;
    for (Int u = 0; u < m; ++u) {
        Wide inner = 0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            Int pos = u + shifted[i];
            if (pos >= m) pos -= m;
            inner += Wide{coeff[i]} * p.values[static_cast<std::size_t>(pos)];
        }
        total = checked_add(total, checked_mul(inner, inner));
    }
    return to_big(total);
}

PositivityCheck check_positivity(const CorrelationProfile& c, const BalancedProfile& p, Int h, Int k) {
    const Int m = c.ctx.m;
    if (mod_reduce(h, m) == 0 || mod_reduce(k, m) == 0)
        throw InvalidArgument("check_positivity: h and k must be nonzero residues");
    const Int lambda = mul_mod(k, mod_inverse(mod_reduce(h, m), m), m);
    PositivityCheck out;
    out.direct_scaled = positivity_sum_scaled(c, h, k);
    out.witness_scaled = sum_of_squares_witness(p, lambda);
    const BigInt n4 = scale_pow(c.ctx.N, 4);
    out.nonnegative = InequalityReport::make("positivity", Rational(0), make_rational(out.direct_scaled, n4));
    out.forms_agree = InequalityReport::make(
        "positivity_sum_of_squares", make_rational(abs_big(out.direct_scaled - out.witness_scaled), n4), Rational(0));
    return out;
}

namespace {

void record(PositivitySweep& sweep, const BigInt& direct, const BigInt& witness) {
    if (sweep.pairs == 0 || direct < sweep.min_scaled) sweep.min_scaled = direct;
    ++sweep.pairs;
    if (direct < 0) ++sweep.negative;
    if (direct != witness) ++sweep.disagreements;
}

} // namespace

PositivitySweep positivity_exhaustive(const CorrelationProfile& c, const BalancedProfile& p) {
    const Int m = c.ctx.m;
    std::vector<BigInt> witness(static_cast<std::size_t>(m));
    for (Int lambda = 1; lambda < m; ++lambda) witness[static_cast<std::size_t>(lambda)] = sum_of_squares_witness(p, lambda);
    PositivitySweep sweep;
    for (Int h = 1; h < m; ++h) {
        const Int h_inv = mod_inverse(h, m);
        for (Int k = 1; k < m; ++k) {
            record(sweep, positivity_sum_scaled(c, h, k), witness[static_cast<std::size_t>(mul_mod(k, h_inv, m))]);
        }
    }
    return sweep;
}

PositivitySweep positivity_sampled(const CorrelationProfile& c, const BalancedProfile& p, Int count,
                                   std::uint64_t seed) {
    const Int m = c.ctx.m;
    std::mt19937_64 rng(seed);
    PositivitySweep sweep;
    for (Int i = 0; i < count; ++i) {
        const Int h = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(m - 1));
        const Int k = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(m - 1));
        const Int lambda = mul_mod(k, mod_inverse(h, m), m);
        record(sweep, positivity_sum_scaled(c, h, k), sum_of_squares_witness(p, lambda));
    }
    return sweep;
}

InequalityReport check_lambda_energy(const ScaledFunction& g1, const ScaledFunction& g2, const ScaledFunction& g3) {
    for (const auto* g : {&g1, &g2, &g3}) {
        if (!g->bounded_by_one()) throw InvalidArgument("check_lambda_energy: functions must satisfy |g| <= 1");
    }
    const Rational lambda = trilinear(g1, g2, g3);
    const Rational min_energy = std::min({function_energy(g1), function_energy(g2), function_energy(g3)});
    const BigInt m5 = pow_big(to_big(g1.modulus()), 5);
    return InequalityReport::make("lambda_energy", pow_rat(lambda, 4), Rational(m5) * min_energy);
}

std::pair<InequalityReport, DiscrepancyReport> check_discrepancy(const DenseSet& a, const ModContext& ctx) {
    if (a.n() != ctx.N) throw InvalidArgument("check_discrepancy: set length does not match context N");
    const Int m = ctx.m;
    DiscrepancyReport d;
    d.lambda_set = trilinear(ScaledFunction::indicator(a, m), ScaledFunction::indicator(a, m),
                             ScaledFunction::indicator(a, m));
    const auto interval = ScaledFunction::indicator(DenseSet::interval(ctx.N), m);
    d.lambda_model = pow_rat(a.density(), 3) * trilinear(interval, interval, interval);
    d.delta = abs_rat(d.lambda_set - d.lambda_model);

    const auto profile = balanced_profile(a, ctx);
    d.energy = energy(autocorrelation(profile));
    const BigInt n4 = scale_pow(ctx.N, 4);
    const Rational e_f = make_rational(to_big(d.energy.evalue), n4);
    d.beta_hat = e_f / Rational(pow_big(to_big(m), 3));
    const Rational m5(pow_big(to_big(m), 5));
    d.energy_floor = pow_rat(d.delta, 4) / (Rational(81) * m5);

    auto report = InequalityReport::make("trilinear_discrepancy", pow_rat(d.delta, 4), Rational(81) * m5 * e_f);
    return {std::move(report), std::move(d)};
}

std::vector<InequalityReport> check_window_identities(const BalancedProfile& p, const CorrelationProfile& c,
                                                      const EnergyValue& e, Int ell) {
    const Int m = p.ctx.m;
    const Int N = p.ctx.N;
    require_window_length(ell, m);
    const std::string tag = "[l=" + std::to_string(ell) + "]";
    const BigInt n2 = scale_pow(N, 2);
    const BigInt n4 = scale_pow(N, 4);

    const auto via_identity = v_profile(c, ell);
    BigInt mismatch = 0;
    BigInt total = 0;
    BigInt second_moment_nonzero = 0;
    BigInt v0 = 0;
    for (Int d = 0; d < m; ++d) {
        const BigInt direct = to_big(window_sums(p, d, ell).vvalue);
        mismatch += abs_big(direct - to_big(via_identity[static_cast<std::size_t>(d)]));
        total += direct;
        if (d == 0)
            v0 = direct;
        else
            second_moment_nonzero += direct * direct;
    }
    const BigInt r0 = to_big(c.rvals[0]);
    const BigInt ell_big = to_big(ell);
    const BigInt m_big = to_big(m);
    const Rational alpha = make_rational(to_big(p.set_size), to_big(N));

    std::vector<InequalityReport> out;
    out.push_back(InequalityReport::make("v_identity" + tag, make_rational(mismatch, n2), Rational(0)));
    out.push_back(InequalityReport::make("v_first_moment_identity" + tag,
                                         make_rational(abs_big(total - ell_big * m_big * r0), n2), Rational(0)));
    out.push_back(InequalityReport::make("v_first_moment_bound" + tag, make_rational(total, n2),
                                         alpha * Rational(ell_big * m_big * m_big)));
    out.push_back(InequalityReport::make("v_zero_step_identity" + tag,
                                         make_rational(abs_big(v0 - ell_big * ell_big * r0), n2), Rational(0)));
    out.push_back(InequalityReport::make("v_zero_step_bound" + tag, make_rational(v0, n2),
                                         alpha * Rational(ell_big * ell_big * m_big)));
    // sum_{d != 0} V_d^2 >= 2 (sum_{j<l} j^2) E - V_0^2
    BigInt squares = 0;
    for (Int j = 1; j < ell; ++j) squares += to_big(j * j);
    const BigInt lower = 2 * squares * to_big(e.evalue) - v0 * v0;
    out.push_back(InequalityReport::make("v_second_moment_nonzero" + tag, make_rational(lower, n4),
                                         make_rational(second_moment_nonzero, n4)));
    return out;
}

std::vector<InequalityReport> check_correlation_invariants(const BalancedProfile& p, const CorrelationProfile& c,
                                                           const EnergyValue& e) {
    const Int m = c.ctx.m;
    const Int N = c.ctx.N;
    const BigInt n2 = scale_pow(N, 2);
    BigInt asymmetry = 0, sum = 0;
    for (Int t = 0; t < m; ++t) {
        asymmetry += abs_big(to_big(c.at(t)) - to_big(c.at(m - t)));
        sum += to_big(c.at(t));
    }
    const BigInt size = to_big(p.set_size);
    const BigInt r0 = to_big(c.rvals[0]);
    const BigInt expected_r0 = to_big(N) * (to_big(N) * size - size * size);
    const Rational alpha = make_rational(size, to_big(N));

    std::vector<InequalityReport> out;
    out.push_back(InequalityReport::make("r_symmetry", make_rational(asymmetry, n2), Rational(0)));
    out.push_back(InequalityReport::make("r_zero_sum", make_rational(abs_big(sum), n2), Rational(0)));
    out.push_back(InequalityReport::make("r_zero_value", make_rational(abs_big(r0 - expected_r0), n2), Rational(0)));
    out.push_back(InequalityReport::make("r_zero_bound", make_rational(r0, n2), alpha * Rational(to_big(m))));
    out.push_back(InequalityReport::make("energy_dominates_r_zero", make_rational(r0 * r0, n2 * n2),
                                         make_rational(to_big(e.evalue), n2 * n2)));
    return out;
}

bool CertificateReport::passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const InequalityReport& r) { return r.holds; });
}

CertificateReport verify_all(const DenseSet& a, const VerifyConfig& cfg) {
    if (a.n() < 1) throw InvalidArgument("verify_all: set length must be positive");
    CertificateReport out;
    out.ctx = choose_modulus(a.n());
    const auto& ctx = out.ctx;
    out.freeness = is_3ap_free(a);

    const auto profile = balanced_profile(a, ctx);
    const auto corr = autocorrelation(profile, AutocorrKernel::Fast, cfg.threads);
    const auto e = energy(corr);
    auto append = [&out](std::vector<InequalityReport> more) {
        for (auto& r : more) out.reports.push_back(std::move(r));
    };

    append(check_correlation_invariants(profile, corr, e));

    const auto indicator = ScaledFunction::indicator(a, ctx.m);
    const Rational lambda_set = trilinear(indicator, indicator, indicator);
    if (out.freeness.free) {
        out.reports.push_back(InequalityReport::make(
            "free_set_lambda_count", abs_rat(lambda_set - Rational(to_big(static_cast<Int>(a.size())))), Rational(0)));
    }

    const PositivitySweep sweep = ctx.m <= cfg.exhaustive_modulus_limit
                                      ? positivity_exhaustive(corr, profile)
                                      : positivity_sampled(corr, profile, cfg.sampled_pairs, cfg.seed);
    const BigInt n4 = scale_pow(ctx.N, 4);
    out.reports.push_back(InequalityReport::make("positivity_min", Rational(0), make_rational(sweep.min_scaled, n4)));
    out.reports.push_back(
        InequalityReport::make("positivity_sum_of_squares", Rational(to_big(sweep.disagreements)), Rational(0)));

    const auto f = profile.as_function();
    auto lambda_f = check_lambda_energy(f, f, f);
    lambda_f.name = "lambda_energy[f]";
    out.reports.push_back(std::move(lambda_f));
    auto lambda_u = check_lambda_energy(indicator, indicator, indicator);
    lambda_u.name = "lambda_energy[1_A]";
    out.reports.push_back(std::move(lambda_u));

    auto [disc_report, disc] = check_discrepancy(a, ctx);
    out.reports.push_back(std::move(disc_report));
    out.discrepancy = std::move(disc);

    for (Int ell : cfg.window_lengths) {
        if (ell >= 1 && 2 * ell < ctx.m) append(check_window_identities(profile, corr, e, ell));
    }
    return out;
}

} // namespace rothlab
