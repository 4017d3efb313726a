#include "rothlab/io.hpp"

#include <fstream>
#include <ostream>

namespace rothlab::io {
namespace {

std::string frac(const Rational& q) { return to_fraction_string(q); }

Json witness_json(const std::optional<std::array<Int, 3>>& w) {
    if (!w) return nullptr;
    return Json::array({(*w)[0], (*w)[1], (*w)[2]});
}

} // namespace

Json set_to_json(const DenseSet& a) {
    Json j;
    j["n"] = a.n();
    j["elements"] = Json::array();
    for (Int x : a.members()) j["elements"].push_back(x);
    return j;
}

DenseSet set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("elements"))
        throw InvalidArgument("set JSON must be an object with \"n\" and \"elements\"");
    if (!j["n"].is_number_integer()) throw InvalidArgument("set JSON: \"n\" must be an integer");
    if (!j["elements"].is_array()) throw InvalidArgument("set JSON: \"elements\" must be an array");
    std::vector<Int> members;
    for (const auto& e : j["elements"]) {
        if (!e.is_number_integer()) throw InvalidArgument("set JSON: elements must be integers");
        members.push_back(e.get<Int>());
    }
    const Int n = j["n"].get<Int>();
    if (n < 1) throw InvalidArgument("set JSON: \"n\" must be positive");
    return DenseSet(n, std::move(members));
}

DenseSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open set file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("set file is not valid JSON: ") + e.what());
    }
    return set_from_json(j);
}

void write_set_file(const std::string& path, const DenseSet& a) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write set file: " + path);
    out << set_to_json(a).dump() << '\n';
}

void write_r_csv(std::ostream& out, const CorrelationProfile& c) {
    out << "t,R_scaled\n";
    for (Int t = 0; t < c.ctx.m; ++t) out << t << ',' << c.rvals[static_cast<std::size_t>(t)] << '\n';
}

void write_v_csv(std::ostream& out, const std::vector<Wide>& v) {
    out << "d,V_scaled\n";
    for (std::size_t d = 0; d < v.size(); ++d) out << d << ',' << to_string(v[d]) << '\n';
}

Json report_to_json(const InequalityReport& r) {
    Json j;
    j["name"] = r.name;
    j["lhs"] = frac(r.lhs);
    j["rhs"] = frac(r.rhs);
    j["holds"] = r.holds;
    j["margin"] = frac(r.margin);
    return j;
}

Json certificate_to_json(const CertificateReport& c) {
    Json j;
    j["N"] = c.ctx.N;
    j["m"] = c.ctx.m;
    j["passed"] = c.passed();
    j["free"] = c.freeness.free;
    j["witness"] = witness_json(c.freeness.witness);
    const auto& d = c.discrepancy;
    j["discrepancy"] = {{"lambda_A", frac(d.lambda_set)},
                        {"lambda_model", frac(d.lambda_model)},
                        {"delta", frac(d.delta)},
                        {"energy_scaled", to_string(d.energy.evalue)},
                        {"beta_hat", frac(d.beta_hat)},
                        {"energy_floor", frac(d.energy_floor)}};
    j["reports"] = Json::array();
    for (const auto& r : c.reports) j["reports"].push_back(report_to_json(r));
    return j;
}

Json increment_to_json(const IncrementResult& r) {
    Json j;
    j["d"] = r.d;
    j["x"] = r.x;
    j["ell"] = r.ell;
    j["q"] = r.q;
    j["s"] = r.s;
    j["block"] = {{"start", r.block.start}, {"step", r.block.step}, {"len", r.block.length}};
    j["P"] = {{"a", r.P.a}, {"s", r.P.s}, {"L", r.P.L}};
    j["eta"] = frac(r.eta);
    j["new_density"] = frac(r.new_density);
    j["mode"] = to_string(r.mode);
    j["certificates"] = Json::array();
    for (const auto& c : r.certificates) j["certificates"].push_back(report_to_json(c));
    return j;
}

Json trajectory_to_json(const Trajectory& t) {
    Json j;
    j["stop_reason"] = to_string(t.stop_reason);
    j["witness"] = witness_json(t.witness);
    j["stages"] = Json::array();
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        const auto& s = t.stages[i];
        Json st;
        st["j"] = i;
        st["N"] = s.N;
        st["alpha"] = frac(s.alpha);
        st["elements"] = set_to_json(s.set)["elements"];
        st["increment"] = s.increment ? increment_to_json(*s.increment) : Json(nullptr);
        j["stages"].push_back(std::move(st));
    }
    return j;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
    out << "j,N_j,alpha_num,alpha_den,eta_num,eta_den,P_len,stop_reason\n";
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        const auto& s = t.stages[i];
        out << i << ',' << s.N << ',' << s.alpha.get_num().get_str() << ',' << s.alpha.get_den().get_str() << ',';
        if (s.increment)
            out << s.increment->eta.get_num().get_str() << ',' << s.increment->eta.get_den().get_str() << ','
                << s.increment->P.L;
        else
            out << ",,";
        out << ',' << (i + 1 == t.stages.size() ? to_string(t.stop_reason) : "") << '\n';
    }
}

Json bound_to_json(const BoundReport& b) {
    Json j;
    j["N"] = b.N;
    j["alpha"] = b.alpha;
    j["C"] = b.C;
    j["c0"] = b.c0;
    j["bound"] = b.bound;
    j["within"] = b.within;
    j["steps"] = b.steps;
    j["rows"] = Json::array();
    for (const auto& r : b.rows) j["rows"].push_back({{"j", r.j}, {"log_N_lower", r.log_n_lower}});
    return j;
}

} // namespace rothlab::io
