// rothlab: generate 3AP-free sets, certify the correlation identities on them,
// and run density-increment steps and iterations.
//
// Exit codes: 0 ok, 1 negative outcome (not free / no increment), 2 invalid
// input, 3 certificate violation, 4 capacity, 5 budget.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rothlab/io.hpp"
#include "rothlab/oracle.hpp"
#include "rothlab/parallel.hpp"

using namespace rothlab;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kInvalid = 2, kViolation = 3, kCapacity = 4, kBudget = 5 };

struct Common {
    bool json = false;
    int threads = default_threads();
    std::uint64_t seed = 0;
};

void print_json(const io::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string witness_text(const std::array<Int, 3>& w) {
    return "(" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
}

void write_or_throw(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << text;
}

int cmd_gen(const Common& common, const std::string& kind, Int n, double alpha, const std::string& out) {
    DenseSet a;
    if (kind == "greedy")
        a = greedy_free(n);
    else if (kind == "behrend")
        a = behrend(n);
    else if (kind == "random")
        a = random_subset(n, alpha, common.seed);
    else
        throw InvalidArgument("unknown kind: " + kind);
    if (!out.empty()) {
        io::write_set_file(out, a);
        if (common.json)
            print_json({{"file", out}, {"size", a.size()}, {"density", to_fraction_string(a.density())}});
        else
            std::cout << "size " << a.size() << " density " << to_fraction_string(a.density()) << " ("
                      << a.density().get_d() << ")\n";
    } else {
        std::cout << io::set_to_json(a).dump() << '\n';
        std::cerr << "size " << a.size() << " density " << to_fraction_string(a.density()) << '\n';
    }
    return kOk;
}

int cmd_check(const Common& common, const std::string& file) {
    const DenseSet a = io::read_set_file(file);
    const auto report = is_3ap_free(a);
    if (common.json) {
        io::Json j{{"free", report.free}, {"witness", nullptr}};
        if (report.witness) j["witness"] = {(*report.witness)[0], (*report.witness)[1], (*report.witness)[2]};
        print_json(j);
    } else if (report.free) {
        std::cout << "3AP-free (" << a.size() << " elements in [" << a.n() << "])\n";
    } else {
        std::cout << "contains 3AP " << witness_text(*report.witness) << '\n';
    }
    return report.free ? kOk : kNegative;
}

int cmd_verify(const Common& common, const std::string& file) {
    const DenseSet a = io::read_set_file(file);
    VerifyConfig cfg;
    cfg.seed = common.seed;
    cfg.threads = common.threads;
    const auto cert = verify_all(a, cfg);
    if (common.json) {
        print_json(io::certificate_to_json(cert));
    } else {
        std::cout << "N=" << cert.ctx.N << " m=" << cert.ctx.m << " free=" << (cert.freeness.free ? "yes" : "no");
        if (cert.freeness.witness) std::cout << " witness " << witness_text(*cert.freeness.witness);
        std::cout << '\n';
        for (const auto& r : cert.reports)
            std::cout << (r.holds ? "  ok    " : "  FAIL  ") << r.name << "  margin " << r.margin.get_d() << '\n';
        std::cout << (cert.passed() ? "all checks pass" : "VIOLATION") << '\n';
    }
    return cert.passed() ? kOk : kViolation;
}

int cmd_analyze(const Common& common, const std::string& file, Int ell, const std::string& dump_r,
                const std::string& dump_v) {
    const DenseSet a = io::read_set_file(file);
    const ModContext ctx = choose_modulus(a.n());
    const auto p = balanced_profile(a, ctx);
    const auto c = autocorrelation(p, AutocorrKernel::Fast, common.threads);
    const auto e = energy(c);
    const BigInt n4 = to_big(ctx.N) * ctx.N * ctx.N * ctx.N;
    const Rational beta = make_rational(to_big(e.evalue), n4 * ctx.m * ctx.m * ctx.m);
    if (!dump_r.empty()) {
        std::ofstream out(dump_r);
        if (!out) throw InvalidArgument("cannot write " + dump_r);
        io::write_r_csv(out, c);
    }
    if (!dump_v.empty()) {
        std::ofstream out(dump_v);
        if (!out) throw InvalidArgument("cannot write " + dump_v);
        io::write_v_csv(out, v_profile(c, ell, common.threads));
    }
    if (common.json) {
        print_json({{"N", ctx.N},
                    {"m", ctx.m},
                    {"size", a.size()},
                    {"alpha", to_fraction_string(a.density())},
                    {"energy_scaled", to_string(e.evalue)},
                    {"beta_hat", to_fraction_string(beta)}});
    } else {
        std::cout << "N " << ctx.N << "\nm " << ctx.m << "\nalpha " << to_fraction_string(a.density()) << " ("
                  << a.density().get_d() << ")\nenergy_scaled " << to_string(e.evalue) << "\nbeta_hat "
                  << to_fraction_string(beta) << " (" << beta.get_d() << ")\n";
    }
    return kOk;
}

struct IncrementOptions {
    std::string mode = "certified";
    std::string c_ell = "1/64";
    std::string c_k = "1/20";
    Int ell = 0;
    Int min_len = 1;
};

IncrementConfig make_increment_config(const Common& common, const IncrementOptions& o) {
    IncrementConfig cfg;
    if (o.mode == "certified")
        cfg.mode = IncrementMode::Certified;
    else if (o.mode == "greedy")
        cfg.mode = IncrementMode::Greedy;
    else
        throw InvalidArgument("mode must be certified or greedy");
    cfg.c_ell = parse_fraction(o.c_ell);
    cfg.c_K = parse_fraction(o.c_k);
    if (o.ell > 0) cfg.ell_override = o.ell;
    cfg.min_len = o.min_len;
    cfg.threads = common.threads;
    cfg.seed = common.seed;
    cfg.validate();
    return cfg;
}

int cmd_increment(const Common& common, const std::string& file, const IncrementOptions& o, const std::string& out) {
    const DenseSet a = io::read_set_file(file);
    const IncrementConfig cfg = make_increment_config(common, o);
    io::Json j;
    int code = kOk;
    try {
        const auto r = density_increment(a, choose_modulus(a.n()), cfg);
        j = io::increment_to_json(r);
        if (!r.certificates_hold()) code = kViolation;
    } catch (const IncrementFailure& f) {
        j = {{"error", to_string(f.kind())}, {"message", f.what()}};
        code = kNegative;
    }
    if (!out.empty()) write_or_throw(out, j.dump(2) + "\n");
    if (common.json || out.empty()) {
        print_json(j);
    } else if (code != kNegative) {
        std::cout << "P = (" << j["P"]["a"] << ", " << j["P"]["s"] << ", " << j["P"]["L"] << ")  new density "
                  << j["new_density"].get<std::string>() << '\n';
    } else {
        std::cout << j["error"].get<std::string>() << '\n';
    }
    return code;
}

int cmd_iterate(const Common& common, const std::string& file, const IncrementOptions& o, Int max_steps, Int min_n,
                const std::string& out, const std::string& csv) {
    const DenseSet a = io::read_set_file(file);
    IterateConfig cfg;
    cfg.increment = make_increment_config(common, o);
    cfg.max_steps = max_steps;
    cfg.min_n = min_n;
    const Trajectory t = run(a, cfg);
    const auto j = io::trajectory_to_json(t);
    if (!out.empty()) write_or_throw(out, j.dump(2) + "\n");
    if (!csv.empty()) {
        std::ofstream c(csv);
        if (!c) throw InvalidArgument("cannot write " + csv);
        io::write_trajectory_csv(c, t);
    }
    if (common.json) {
        print_json(j);
    } else {
        io::write_trajectory_csv(std::cout, t);
    }
    return kOk;
}

int cmd_r3(const Common& common, Int n, Int ceiling) {
    const auto r = r3_exact(n, ceiling);
    if (common.json) {
        print_json({{"n", n}, {"r3", r.size}, {"witness", io::set_to_json(r.extremal)}});
    } else {
        std::cout << r.size << '\n' << io::set_to_json(r.extremal).dump() << '\n';
    }
    return kOk;
}

int cmd_bound(const Common& common, Int n, const std::string& alpha, double C, double c0) {
    const auto b = bound_report(n, parse_fraction(alpha), C, c0);
    if (common.json) {
        print_json(io::bound_to_json(b));
    } else {
        std::cout.precision(12);
        std::cout << "alpha " << b.alpha << " vs C (log log N)^(-1/11) = " << b.bound << " -> "
                  << (b.within ? "within" : "exceeds") << "\nJ " << b.steps << "\nj,log_N_lower\n";
        for (const auto& r : b.rows) std::cout << r.j << ',' << r.log_n_lower << '\n';
    }
    return kOk;
}

int cmd_bench(const Common& common, Int n, Int reps, Int ell) {
    const DenseSet a = random_subset(n, 0.5, common.seed);
    const ModContext ctx = choose_modulus(n);
    const auto p = balanced_profile(a, ctx);
    const auto c = autocorrelation(p);
    using Clock = std::chrono::steady_clock;
    auto time = [](auto&& fn) {
        const auto t0 = Clock::now();
        fn();
        return std::chrono::duration<double>(Clock::now() - t0).count();
    };
    std::cout << "kernel,N,m,threads,rep,seconds\n";
    for (Int rep = 0; rep < reps; ++rep) {
        for (int threads : {1, common.threads}) {
            const double ref = time([&] { (void)autocorrelation(p, AutocorrKernel::Reference, threads); });
            std::cout << "autocorrelation_reference," << n << ',' << ctx.m << ',' << threads << ',' << rep << ',' << ref << '\n';
            const double fast = time([&] { (void)autocorrelation(p, AutocorrKernel::Fast, threads); });
            std::cout << "autocorrelation_fast," << n << ',' << ctx.m << ',' << threads << ',' << rep << ',' << fast << '\n';
            const double vp = time([&] { (void)v_profile(c, std::min<Int>(ell, (ctx.m - 1) / 2), threads); });
            std::cout << "v_profile," << n << ',' << ctx.m << ',' << threads << ',' << rep << ',' << vp << '\n';
            if (common.threads == 1) break;
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rothlab: density-increment experiments on 3AP-free sets"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "machine-readable JSON on standard output");
    app.add_option("--threads", common.threads, "thread cap for parallel scans (default $ROTHLAB_THREADS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", common.seed, "seed for all randomness");

    std::string kind, file, out, csv, dump_r, dump_v, alpha_text = "1/2";
    Int n = 0, ell = 2, max_steps = 64, min_n = 8, reps = 3, ceiling = kR3DefaultCeiling;
    double alpha = 0.5, C = 1.0, c0 = 1.0;
    IncrementOptions inc;

    auto* gen = app.add_subcommand("gen", "generate a set file");
    gen->add_option("--kind", kind, "greedy | behrend | random")->required();
    gen->add_option("--n", n, "ambient length")->required();
    gen->add_option("--alpha", alpha, "keep probability for random sets");
    gen->add_option("--out", out, "output set file (JSON to stdout if absent)");

    auto* check = app.add_subcommand("check", "test a set for 3APs");
    check->add_option("file", file)->required();

    auto* verify = app.add_subcommand("verify", "run every certificate on a set");
    verify->add_option("file", file)->required();

    auto* analyze = app.add_subcommand("analyze", "density, modulus, energy");
    analyze->add_option("file", file)->required();
    analyze->add_option("--ell", ell, "window length for --dump-v");
    analyze->add_option("--dump-r", dump_r, "write t,R_scaled CSV");
    analyze->add_option("--dump-v", dump_v, "write d,V_scaled CSV");

    auto add_increment_options = [&](CLI::App* sub) {
        sub->add_option("file", file)->required();
        sub->add_option("--mode", inc.mode, "certified | greedy");
        sub->add_option("--c-ell", inc.c_ell, "window constant as p/q");
        sub->add_option("--c-k", inc.c_k, "block constant as p/q");
        sub->add_option("--ell", inc.ell, "explicit window length");
        sub->add_option("--min-len", inc.min_len, "minimum progression length");
        sub->add_option("--out", out, "write JSON result to this file");
    };
    auto* increment = app.add_subcommand("increment", "one density-increment step");
    add_increment_options(increment);

    auto* iterate = app.add_subcommand("iterate", "iterate increments and rescaling");
    add_increment_options(iterate);
    iterate->add_option("--max-steps", max_steps);
    iterate->add_option("--min-n", min_n);
    iterate->add_option("--csv", csv, "write trajectory CSV summary");

    auto* r3 = app.add_subcommand("r3", "exact r3(n) by branch and bound");
    r3->add_option("--n", n)->required();
    r3->add_option("--ceiling", ceiling, "largest n accepted");

    auto* bound = app.add_subcommand("bound", "quantitative recursion report");
    bound->add_option("--n", n)->required();
    bound->add_option("--alpha", alpha_text, "density as p/q");
    bound->add_option("--C", C);
    bound->add_option("--c0", c0);

    auto* bench = app.add_subcommand("bench", "time the correlation kernels");
    bench->add_option("--n", n)->required();
    bench->add_option("--reps", reps);
    bench->add_option("--ell", ell);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*gen) return cmd_gen(common, kind, n, alpha, out);
        if (*check) return cmd_check(common, file);
        if (*verify) return cmd_verify(common, file);
        if (*analyze) return cmd_analyze(common, file, ell, dump_r, dump_v);
        if (*increment) return cmd_increment(common, file, inc, out);
        if (*iterate) return cmd_iterate(common, file, inc, max_steps, min_n, out, csv);
        if (*r3) return cmd_r3(common, n, ceiling);
        if (*bound) return cmd_bound(common, n, alpha_text, C, c0);
        if (*bench) return cmd_bench(common, n, reps, ell);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kBudget;
    }
    return kInvalid;
}
