#include "rothlab/increment.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rothlab/parallel.hpp"

namespace rothlab {
namespace {

BigInt isqrt(const BigInt& v) {
    BigInt out;
    mpz_sqrt(out.get_mpz_t(), v.get_mpz_t());
    return out;
}

Int to_int(const BigInt& v) { return static_cast<Int>(v.get_si()); }

Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Int residue_sum(const BalancedProfile& p, const ModularBlock& b) {
    const Int m = p.ctx.m;
    Int sum = 0;
    Int pos = b.start;
    const Int step = mod_reduce(b.step, m);
    for (Int i = 0; i < b.length; ++i) {
        sum += p.values[static_cast<std::size_t>(pos)];
        pos += step;
        if (pos >= m) pos -= m;
    }
    return sum;
}

Int progression_hits(const DenseSet& a, const IntegerProgression& P) {
    Int hits = 0;
    for (Int i = 0; i < P.L; ++i) hits += a.contains(P.term(i)) ? 1 : 0;
    return hits;
}

Int progression_sum(const BalancedProfile& p, const IntegerProgression& P) {
    Int sum = 0;
    for (Int i = 0; i < P.L; ++i) sum += p.values[static_cast<std::size_t>(P.term(i))];
    return sum;
}

// Certificates shared by both modes: conservation through rectification,
// the length bound from f <= 1, range, step size, and the density identity.
void rectification_certificates(IncrementResult& r, const DenseSet& a, const BalancedProfile& p) {
    const Int N = p.ctx.N;
    const Int m = p.ctx.m;
    const Int p_sum = progression_sum(p, r.P);
    Int outside = 0;
    for (Int i = 0; i < r.P.L; ++i) {
        if (r.P.term(i) < 0 || r.P.term(i) >= N) ++outside;
    }
    const Int root = to_int(isqrt(to_big(r.ell)));
    const Rational alpha = a.density();
    const Rational counted = make_rational(progression_hits(a, r.P), r.P.L);

    auto& out = r.certificates;
    out.push_back(InequalityReport::make("progression_in_range", Rational(to_big(outside)), Rational(0)));
    out.push_back(InequalityReport::make("rectify_conservation",
                                         make_rational(std::abs(p_sum - r.block.sum), N), Rational(0)));
    out.push_back(InequalityReport::make("rectify_length", make_rational(r.block.sum, N), Rational(to_big(r.P.L))));
    out.push_back(InequalityReport::make("step_size", Rational(to_big(std::abs(r.s))), make_rational(m, root)));
    out.push_back(InequalityReport::make("density_identity", abs_rat(counted - (alpha + r.eta)), Rational(0)));
}

void finish(IncrementResult& r, const DenseSet& a, const BalancedProfile& p, const IncrementConfig& cfg) {
    const Int N = p.ctx.N;
    const Int p_sum = progression_sum(p, r.P);
    r.eta = make_rational(to_big(p_sum), to_big(r.P.L) * to_big(N));
    r.new_density = a.density() + r.eta;
    rectification_certificates(r, a, p);
    if (r.eta <= 0) throw IncrementFailure(IncrementFailureKind::NoIncrement, "progression mean of f is not positive");
    if (r.P.L < cfg.min_len) throw IncrementFailure(IncrementFailureKind::TooShort, "progression shorter than min_len");
}

} // namespace

void IncrementConfig::validate() const {
    if (c_ell <= 0 || c_ell > 1) throw InvalidArgument("c_ell must lie in (0, 1]");
    if (c_K <= 0 || c_K > Rational(1, 10)) throw InvalidArgument("c_K must lie in (0, 1/10]");
    if (min_len < 1) throw InvalidArgument("min_len must be at least 1");
    if (threads < 1) throw InvalidArgument("threads must be at least 1");
}

bool IncrementResult::certificates_hold() const {
    return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.holds; });
}

Int choose_window(const BalancedProfile& p, const EnergyValue& e, const IncrementConfig& cfg) {
    if (e.evalue == 0) throw IncrementFailure(IncrementFailureKind::ZeroEnergy, "f vanishes identically");
    const Int m = p.ctx.m;
    if (cfg.ell_override) {
        require_window_length(*cfg.ell_override, m);
        return *cfg.ell_override;
    }
    // c_ell * beta_hat * m / alpha^2 = c_ell * E~ / (N^2 m^2 |A|^2)
    const BigInt N = to_big(p.ctx.N), mm = to_big(m), size = to_big(p.set_size);
    const BigInt num = cfg.c_ell.get_num() * to_big(e.evalue);
    const BigInt den = cfg.c_ell.get_den() * N * N * mm * mm * size * size;
    const BigInt raw = num / den;
    const Int upper = (m + 1) / 2 - 1;
    if (raw < 1) return 1;
    if (raw > upper) return upper;
    return to_int(raw);
}

Int best_step(std::span<const Wide> v) {
    Int best = 0;
    for (Int d = 1; d < static_cast<Int>(v.size()); ++d) {
        if (v[static_cast<std::size_t>(d)] > 0 && (best == 0 || v[static_cast<std::size_t>(d)] > v[static_cast<std::size_t>(best)]))
            best = d;
    }
    if (best == 0) throw IncrementFailure(IncrementFailureKind::NoIncrement, "V_d vanishes for every nonzero step");
    return best;
}

StartChoice best_start(const BalancedProfile& p, Int d, Int ell) {
    if (mod_reduce(d, p.ctx.m) == 0) throw InvalidArgument("best_start: step must be nonzero");
    const auto w = window_sums(p, d, ell);
    StartChoice best{0, w.svals[0]};
    for (Int x = 1; x < p.ctx.m; ++x) {
        if (w.svals[static_cast<std::size_t>(x)] > best.value) best = {x, w.svals[static_cast<std::size_t>(x)]};
    }
    return best;
}

SmallStep small_step(Int d, const ModContext& ctx, Int ell) {
    d = mod_reduce(d, ctx.m);
    if (d == 0) throw InvalidArgument("small_step: step must be nonzero");
    if (ell < 1) throw InvalidArgument("small_step: window length must be positive");
    const Int root = to_int(isqrt(to_big(ell)));
    SmallStep best{1, centered_rep(d, ctx.m)};
    for (Int q = 2; q <= root; ++q) {
        const Int s = centered_rep(mul_mod(q, d, ctx.m), ctx.m);
        if (std::abs(s) < std::abs(best.s)) best = {q, s};
    }
    return best;
}

Int block_length(Int ell, const Rational& c_K) {
    const BigInt num = c_K.get_num(), den = c_K.get_den();
    return std::max<Int>(1, to_int(isqrt(num * num * to_big(ell) / (den * den))));
}

std::vector<ModularBlock> split_window(const BalancedProfile& p, Int x, Int d, Int ell, SmallStep step,
                                       const IncrementConfig& cfg) {
    const Int m = p.ctx.m;
    require_window_length(ell, m);
    if (step.q < 1 || step.q > ell) throw InvalidArgument("split_window: multiplier out of range");
    const Int abs_s = std::abs(step.s);

    auto layout = [&](Int K) {
        std::vector<ModularBlock> blocks;
        for (Int r = 0; r < step.q; ++r) {
            const Int terms = (ell - r + step.q - 1) / step.q;
            const Int count = std::max<Int>(1, terms / K);
            for (Int j = 0; j < count; ++j) {
                const Int first = j * K;
                const Int len = (j + 1 == count) ? terms - first : K;
                const Int index = r + first * step.q;
                ModularBlock b{mod_reduce(x + mul_mod(index, d, m), m), step.s, len, 0};
                b.sum = residue_sum(p, b);
                blocks.push_back(b);
            }
        }
        return blocks;
    };
    auto travels_ok = [&](const std::vector<ModularBlock>& blocks, Int K) {
        if (K > 1 && 10 * K * abs_s >= m) return false;
        return std::all_of(blocks.begin(), blocks.end(),
                           [&](const ModularBlock& b) { return 10 * abs_s * (b.length - 1) < m; });
    };

    for (Int K = block_length(ell, cfg.c_K); K >= 1; --K) {
        auto blocks = layout(K);
        if (travels_ok(blocks, K)) return blocks;
    }
    throw InvalidArgument("split_window: window too short to form a block");
}

ModularBlock extract_block(const BalancedProfile& p, Int x, Int d, Int ell, SmallStep step,
                           const IncrementConfig& cfg) {
    const auto blocks = split_window(p, x, d, ell, step, cfg);
    const ModularBlock* best = &blocks.front();
    for (const auto& b : blocks) {
        // b.sum / b.length > best.sum / best.length
        if (static_cast<Wide>(b.sum) * best->length > static_cast<Wide>(best->sum) * b.length) best = &b;
    }
    return *best;
}

IntegerProgression rectify(const ModularBlock& block, const ModContext& ctx) {
    const Int m = ctx.m;
    if (block.length < 1) throw InvalidArgument("rectify: empty block");
    if (10 * std::abs(block.step) * (block.length - 1) >= m)
        throw InvalidArgument("rectify: block travels at least m/10");
    Int first = -1, last = -1;
    for (Int i = 0; i < block.length; ++i) {
        const Int residue = mod_reduce(block.start + i * block.step, m);
        if (residue >= ctx.N) continue;
        if (first < 0) {
            first = i;
        } else if (last != i - 1) {
            throw InvariantViolation("rectify: block meets [N] in a non-consecutive pattern");
        }
        last = i;
    }
    if (first < 0) throw IncrementFailure(IncrementFailureKind::NoIncrement, "rectify: block misses [N]");
    const IntegerProgression P{mod_reduce(block.start + first * block.step, m), block.step, last - first + 1};
    const Int end = P.term(P.L - 1);
    if (end < 0 || end >= ctx.N) throw InvariantViolation("rectify: integer progression leaves [N]");
    return P;
}

namespace {

IncrementResult certified_increment(const DenseSet& a, const BalancedProfile& p, const CorrelationProfile& c, Int ell,
                                    const IncrementConfig& cfg) {
    const Int N = p.ctx.N;
    const Int m = p.ctx.m;
    const auto v = v_profile(c, ell, cfg.threads);
    IncrementResult r;
    r.mode = IncrementMode::Certified;
    r.ell = ell;
    r.d = best_step(v);

    BigInt total = 0, squares = 0;
    for (Int d = 0; d < m; ++d) {
        const BigInt vd = to_big(v[static_cast<std::size_t>(d)]);
        total += vd;
        if (d != 0) squares += vd * vd;
    }
    const BigInt n2 = to_big(N) * to_big(N);
    const BigInt vbest = to_big(v[static_cast<std::size_t>(r.d)]);
    r.certificates.push_back(
        InequalityReport::make("step_pigeonhole", make_rational(squares, n2 * n2), make_rational(vbest * total, n2 * n2)));

    const StartChoice start = best_start(p, r.d, ell);
    r.x = start.x;
    r.window_sum = start.value;
    // max S_d >= V_d / (2 l m)
    r.certificates.push_back(InequalityReport::make("start_positive_mass",
                                                    make_rational(vbest, n2 * to_big(2 * ell) * to_big(m)),
                                                    make_rational(start.value, N)));
    if (start.value <= 0) throw IncrementFailure(IncrementFailureKind::NoIncrement, "no window with positive sum");

    const SmallStep step = small_step(r.d, p.ctx, ell);
    r.q = step.q;
    r.s = step.s;
    r.block = extract_block(p, r.x, r.d, ell, step, cfg);
    r.certificates.push_back(InequalityReport::make("block_mean", make_rational(start.value, ell * N),
                                                    make_rational(to_big(r.block.sum), to_big(r.block.length) * to_big(N))));
    r.P = rectify(r.block, p.ctx);
    finish(r, a, p, cfg);
    return r;
}

struct Candidate {
    bool found = false;
    bool too_short = false;
    IncrementResult result;
    Int hits = 0;
};

// Strictly better: higher density, then longer progression.
bool improves(const Candidate& challenger, const Candidate& incumbent) {
    if (!incumbent.found) return true;
    const Wide lhs = static_cast<Wide>(challenger.hits) * incumbent.result.P.L;
    const Wide rhs = static_cast<Wide>(incumbent.hits) * challenger.result.P.L;
    if (lhs != rhs) return lhs > rhs;
    return challenger.result.P.L > incumbent.result.P.L;
}

Candidate scan_step(const DenseSet& a, const BalancedProfile& p, Int d, Int ell, const IncrementConfig& cfg) {
    Candidate best;
    bool too_short = false;
    const StartChoice start = best_start(p, d, ell);
    if (start.value <= 0) return best;
    const SmallStep step = small_step(d, p.ctx, ell);
    for (const auto& block : split_window(p, start.x, d, ell, step, cfg)) {
        if (block.sum <= 0) continue;
        const IntegerProgression P = rectify(block, p.ctx);
        if (P.L < cfg.min_len) {
            too_short = true;
            continue;
        }
        Candidate c;
        c.found = true;
        c.hits = progression_hits(a, P);
        c.result.mode = IncrementMode::Greedy;
        c.result.d = d;
        c.result.x = start.x;
        c.result.ell = ell;
        c.result.q = step.q;
        c.result.s = step.s;
        c.result.window_sum = start.value;
        c.result.block = block;
        c.result.P = P;
        if (improves(c, best)) best = std::move(c);
    }
    best.too_short = too_short;
    return best;
}

IncrementResult greedy_increment(const DenseSet& a, const BalancedProfile& p, const CorrelationProfile& c, Int ell,
                                 const IncrementConfig& cfg) {
    const Int m = p.ctx.m;
    std::vector<Int> steps;
    if (m <= cfg.greedy_full_scan_limit) {
        for (Int d = 1; d < m; ++d) steps.push_back(d);
    } else {
        std::set<Int> chosen;
        // Always include the certified choice so greedy dominates it.
        chosen.insert(best_step(v_profile(c, ell, cfg.threads)));
        std::mt19937_64 rng(cfg.seed);
        while (static_cast<Int>(chosen.size()) < std::min<Int>(cfg.greedy_samples, m - 1))
            chosen.insert(1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(m - 1)));
        steps.assign(chosen.begin(), chosen.end());
    }

    std::vector<Candidate> per_step(steps.size());
    parallel_for(0, static_cast<Int>(steps.size()), cfg.threads, [&](Int lo, Int hi) {
        for (Int i = lo; i < hi; ++i) per_step[static_cast<std::size_t>(i)] = scan_step(a, p, steps[static_cast<std::size_t>(i)], ell, cfg);
    });

    // Sequential reduction in d order keeps the choice independent of threading.
    Candidate best;
    bool any_short = false;
    for (auto& cand : per_step) {
        any_short = any_short || cand.too_short;
        if (cand.found && improves(cand, best)) best = std::move(cand);
    }
    if (!best.found) {
        if (any_short) throw IncrementFailure(IncrementFailureKind::TooShort, "every candidate progression is too short");
        throw IncrementFailure(IncrementFailureKind::NoIncrement, "no step gives a positive window");
    }
    IncrementResult r = std::move(best.result);
    finish(r, a, p, cfg);
    return r;
}

} // namespace

IncrementResult density_increment(const DenseSet& a, const ModContext& ctx, const IncrementConfig& cfg) {
    cfg.validate();
    const auto p = balanced_profile(a, ctx);
    const auto c = autocorrelation(p, AutocorrKernel::Fast, cfg.threads);
    const auto e = energy(c);
    const Int ell = choose_window(p, e, cfg);
    if (cfg.mode == IncrementMode::Certified) return certified_increment(a, p, c, ell, cfg);
    return greedy_increment(a, p, c, ell, cfg);
}

DenseSet rescale(const DenseSet& a, const IntegerProgression& P) {
    if (P.L < 1) throw InvalidArgument("rescale: empty progression");
    if (P.L > 1 && P.s == 0) throw InvalidArgument("rescale: zero step");
    const Int first = P.a, last = P.term(P.L - 1);
    if (first < 0 || first >= a.n() || last < 0 || last >= a.n())
        throw InvalidArgument("rescale: progression leaves [n]");
    std::vector<Int> members;
    for (Int i = 0; i < P.L; ++i) {
        if (a.contains(P.term(i))) members.push_back(i);
    }
    return DenseSet(P.L, std::move(members));
}

const char* to_string(IncrementMode mode) { return mode == IncrementMode::Certified ? "certified" : "greedy"; }

const char* to_string(IncrementFailureKind kind) {
    switch (kind) {
    case IncrementFailureKind::NoIncrement: return "NoIncrement";
    case IncrementFailureKind::TooShort: return "TooShort";
    case IncrementFailureKind::ZeroEnergy: return "ZeroEnergy";
    }
    return "Unknown";
}

} // namespace rothlab
