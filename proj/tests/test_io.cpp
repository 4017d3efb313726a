#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rothlab/io.hpp"

using namespace rothlab;

TEST(Fractions, RoundTrip) {
    EXPECT_EQ(to_fraction_string(make_rational(6, 8)), "3/4");
    EXPECT_EQ(to_fraction_string(Rational(5)), "5/1");
    EXPECT_EQ(to_fraction_string(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(parse_fraction("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_fraction("7"), Rational(7));
    EXPECT_EQ(parse_fraction("-2/6"), Rational(-1, 3));
    EXPECT_THROW(parse_fraction("1/0"), InvalidArgument);
    EXPECT_THROW(parse_fraction("x"), InvalidArgument);
    EXPECT_THROW(parse_fraction(""), InvalidArgument);
}

TEST(SetJson, RoundTrip) {
    const DenseSet a{13, {0, 1, 3, 4, 9, 10, 12}};
    const auto j = io::set_to_json(a);
    EXPECT_EQ(j.dump(), R"({"n":13,"elements":[0,1,3,4,9,10,12]})");
    EXPECT_EQ(io::set_from_json(j), a);

    const auto path = (std::filesystem::temp_directory_path() / "rothlab_set_roundtrip.json").string();
    io::write_set_file(path, a);
    EXPECT_EQ(io::read_set_file(path), a);
    std::filesystem::remove(path);
}

TEST(SetJson, RejectsMalformedInput) {
    for (const char* text : {R"([1, 2])", R"({"n": 5})", R"({"elements": []})", R"({"n": "5", "elements": []})",
                             R"({"n": 0, "elements": []})", R"({"n": 5, "elements": [5]})",
                             R"({"n": 5, "elements": [-1]})", R"({"n": 5, "elements": [1, 1]})", R"({"n": 6, "elements": [5, 0, 2]})",
                             R"({"n": 5, "elements": [1.5]})", R"({"n": 5, "elements": {}})"}) {
        EXPECT_THROW(io::set_from_json(io::Json::parse(text)), InvalidArgument) << text;
    }
    EXPECT_THROW(io::read_set_file("/nonexistent/rothlab.json"), InvalidArgument);
    const auto path = (std::filesystem::temp_directory_path() / "rothlab_bad.json").string();
    {
        std::ofstream out(path);
        out << "{not json";
    }
    EXPECT_THROW(io::read_set_file(path), InvalidArgument);
    std::filesystem::remove(path);
}

TEST(Csv, ProfileHeaders) {
    const DenseSet a{5, {0, 1, 3, 4}};
    const auto ctx = choose_modulus(5);
    const auto c = autocorrelation(balanced_profile(a, ctx));
    std::ostringstream r;
    io::write_r_csv(r, c);
    EXPECT_EQ(r.str().substr(0, 24), "t,R_scaled\n0,20\n1,-6\n2,-");
    std::ostringstream v;
    io::write_v_csv(v, v_profile(c, 2));
    EXPECT_EQ(v.str().substr(0, 21), "d,V_scaled\n0,80\n1,28\n");
}

TEST(IncrementJson, KeysAndFractions) {
    IncrementConfig cfg;
    cfg.mode = IncrementMode::Greedy;
    const auto a = greedy_free(243);
    const auto r = density_increment(a, choose_modulus(243), cfg);
    const auto j = io::increment_to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"d", "x", "ell", "q", "s", "block", "P", "eta", "new_density", "mode",
                                              "certificates"}));
    EXPECT_EQ(parse_fraction(j["new_density"].get<std::string>()), r.new_density);
    EXPECT_EQ(j["P"]["L"].get<Int>(), r.P.L);
    EXPECT_EQ(j["mode"], "greedy");
}

TEST(TrajectoryCsv, HeaderAndStopReason) {
    const auto t = run(DenseSet::interval(2));
    std::ostringstream out;
    io::write_trajectory_csv(out, t);
    EXPECT_EQ(out.str(), "j,N_j,alpha_num,alpha_den,eta_num,eta_den,P_len,stop_reason\n0,2,1,1,,,,ZeroEnergy\n");
}

TEST(CertificateJson, Passed) {
    const auto j = io::certificate_to_json(verify_all(greedy_free(40)));
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_TRUE(j["free"].get<bool>());
    EXPECT_TRUE(j["witness"].is_null());
    for (const auto& r : j["reports"]) EXPECT_TRUE(r["holds"].get<bool>()) << r["name"];
}
