#include "rothlab/correlation.hpp"

#include <cstdlib>
#include <limits>

#include "rothlab/parallel.hpp"

namespace rothlab {

bool ScaledFunction::bounded_by_one() const {
    if (den <= 0) return false;
    for (Int v : num) {
        if (v > den || v < -den) return false;
    }
    return true;
}

ScaledFunction ScaledFunction::indicator(const DenseSet& a, Int m) {
    if (a.n() > m) throw InvalidArgument("indicator: set does not fit in Z_m");
    ScaledFunction g{std::vector<Int>(static_cast<std::size_t>(m), 0), 1};
    for (Int x : a.members()) g.num[static_cast<std::size_t>(x)] = 1;
    return g;
}

void require_window_length(Int ell, Int m) {
    if (ell < 1 || 2 * ell >= m) throw InvalidArgument("window length must satisfy 1 <= l < m/2");
}

BalancedProfile balanced_profile(const DenseSet& a, const ModContext& ctx) {
    if (a.n() != ctx.N) throw InvalidArgument("balanced_profile: set length does not match context N");
    BalancedProfile p{ctx, std::vector<Int>(static_cast<std::size_t>(ctx.m), 0), static_cast<Int>(a.size())};
    for (Int x = 0; x < ctx.N; ++x) p.values[static_cast<std::size_t>(x)] = -p.set_size;
    for (Int x : a.members()) p.values[static_cast<std::size_t>(x)] += ctx.N;
    return p;
}

CorrelationProfile autocorrelation(const BalancedProfile& p, AutocorrKernel kernel, int threads) {
    const Int N = p.ctx.N;
    const Int m = p.ctx.m;
    // |R~(t)| <= N * N^2.
    if (static_cast<Wide>(N) * N * N > std::numeric_limits<Int>::max())
        throw CapacityError("autocorrelation: N^3 exceeds 64-bit range");
    CorrelationProfile c{p.ctx, std::vector<Int>(static_cast<std::size_t>(m), 0)};
    const Int* f = p.values.data();
    Int* r = c.rvals.data();

    if (kernel == AutocorrKernel::Reference) {
        parallel_for(0, m, threads, [&](Int lo, Int hi) {
            for (Int t = lo; t < hi; ++t) {
                Int acc = 0;
                Int y = t;
                for (Int x = 0; x < N; ++x) {
                    acc += f[x] * f[y];
                    if (++y == m) y = 0;
                }
                r[t] = acc;
            }
        });
        return c;
    }

    // Support is [N] and m > 2N, so only lags t and m - t with t < N survive.
    parallel_for(0, N, threads, [&](Int lo, Int hi) {
        for (Int t = lo; t < hi; ++t) {
            Int acc = 0;
            for (Int x = 0; x + t < N; ++x) acc += f[x] * f[x + t];
            r[t] = acc;
            if (t > 0) r[m - t] = acc;
        }
    });
    return c;
}

EnergyValue energy(const CorrelationProfile& c) {
    Wide acc = 0;
    for (Int v : c.rvals) acc = checked_add(acc, checked_mul(Wide{v}, Wide{v}));
    return {acc};
}

namespace {

void require_same_modulus(const ScaledFunction& a, const ScaledFunction& b) {
    if (a.modulus() != b.modulus()) throw InvalidArgument("functions are defined on different moduli");
    if (a.den <= 0 || b.den <= 0) throw InvalidArgument("scaled function denominator must be positive");
}

} // namespace

Wide trilinear_scaled(const ScaledFunction& g1, const ScaledFunction& g2, const ScaledFunction& g3) {
    require_same_modulus(g1, g2);
    require_same_modulus(g1, g3);
    const Int m = g1.modulus();
    Wide acc = 0;
    for (Int x = 0; x < m; ++x) {
        const Int a = g1.num[static_cast<std::size_t>(x)];
        if (a == 0) continue;
        Wide inner = 0;
        Int y = x, z = x;
        for (Int r = 0; r < m; ++r) {
            inner = checked_add(inner, checked_mul(Wide{g2.num[static_cast<std::size_t>(y)]},
                                                   Wide{g3.num[static_cast<std::size_t>(z)]}));
            if (++y == m) y = 0;
            z += 2;
            if (z >= m) z -= m;
        }
        acc = checked_add(acc, checked_mul(Wide{a}, inner));
    }
    return acc;
}

Rational trilinear(const ScaledFunction& g1, const ScaledFunction& g2, const ScaledFunction& g3) {
    const Wide num = trilinear_scaled(g1, g2, g3);
    const BigInt den = to_big(g1.den) * to_big(g2.den) * to_big(g3.den);
    return make_rational(to_big(num), den);
}

Rational function_energy(const ScaledFunction& g) {
    require_same_modulus(g, g);
    const Int m = g.modulus();
    std::vector<Int> support;
    for (Int x = 0; x < m; ++x) {
        if (g.num[static_cast<std::size_t>(x)] != 0) support.push_back(x);
    }
    BigInt total = 0;
    for (Int t = 0; t < m; ++t) {
        Wide rt = 0;
        for (Int x : support) {
            rt = checked_add(rt, checked_mul(Wide{g.num[static_cast<std::size_t>(x)]},
                                             Wide{g.num[static_cast<std::size_t>(mod_reduce(x + t, m))]}));
        }
        const BigInt b = to_big(rt);
        total += b * b;
    }
    BigInt den4 = to_big(g.den);
    den4 = den4 * den4 * den4 * den4;
    return make_rational(total, den4);
}

WindowProfile window_sums(const BalancedProfile& p, Int d, Int ell) {
    const Int m = p.ctx.m;
    require_window_length(ell, m);
    d = mod_reduce(d, m);
    WindowProfile w{d, ell, std::vector<Int>(static_cast<std::size_t>(m), 0), 0};
    const auto& f = p.values;
    if (d == 0) {
        for (Int x = 0; x < m; ++x) w.svals[static_cast<std::size_t>(x)] = ell * f[static_cast<std::size_t>(x)];
    } else {
        Int s = 0;
        for (Int i = 0; i < ell; ++i) s += f[static_cast<std::size_t>(mul_mod(i, d, m))];
        // d generates Z_m (m prime): one cycle visits every start.
        Int x = 0;
        Int tail = mod_reduce(ell * d, m);
        for (Int step = 0; step < m; ++step) {
            w.svals[static_cast<std::size_t>(x)] = s;
            s += f[static_cast<std::size_t>(tail)] - f[static_cast<std::size_t>(x)];
            x += d;
            if (x >= m) x -= m;
            tail += d;
            if (tail >= m) tail -= m;
        }
    }
    for (Int v : w.svals) w.vvalue = checked_add(w.vvalue, checked_mul(Wide{v}, Wide{v}));
    return w;
}

std::vector<Wide> v_profile(const CorrelationProfile& c, Int ell, int threads) {
    const Int m = c.ctx.m;
    require_window_length(ell, m);
    std::vector<Wide> out(static_cast<std::size_t>(m), 0);
    parallel_for(0, m, threads, [&](Int lo, Int hi) {
        for (Int d = lo; d < hi; ++d) {
            Wide acc = 0;
            for (Int h = -(ell - 1); h < ell; ++h) {
                const Int weight = ell - (h < 0 ? -h : h);
                acc = checked_add(acc, checked_mul(Wide{weight}, Wide{c.at(mul_mod(h, d, m))}));
            }
            out[static_cast<std::size_t>(d)] = acc;
        }
    });
    return out;
}

} // namespace rothlab
