#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "waring/cli.hpp"

using namespace waring;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    fs::path p = fs::temp_directory_path() / "wrank-tests";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("admissible table and its hypothesis gate") {
    std::ostringstream out, err;
    CHECK(cli::cmd_admissible(2, 5, 12, out, err) == cli::kOk);
    CHECK(out.str().find("admissible: 5 9 11 13 15 21 22") != std::string::npos);
    CHECK(out.str().find("r=9 band=middle") != std::string::npos);
    CHECK(out.str().find("r=10 band=inadmissible") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_admissible(2, 5, 11, out2, err2) == cli::kBadInput);
    CHECK(!err2.str().empty());
}

TEST_CASE("witness files round-trip and are byte-stable per seed") {
    auto dir = tmp_dir();
    std::ostringstream out, err;
    auto p1 = (dir / "w1.json").string(), p2 = (dir / "w2.json").string();
    REQUIRE(cli::cmd_witness(2, 5, 12, 9, 7, p1, out, err) == cli::kOk);
    REQUIRE(cli::cmd_witness(2, 5, 12, 9, 7, p2, out, err) == cli::kOk);
    CHECK(slurp(p1) == slurp(p2));

    auto w = nlohmann::json::parse(slurp(p1)).get<strata::Witness>();
    CHECK(w.r == 9);
    CHECK(nlohmann::json(w) == nlohmann::json::parse(slurp(p1)));

    std::ostringstream err3;
    CHECK(cli::cmd_witness(2, 5, 12, 10, 7, (dir / "w3.json").string(), out, err3) ==
          cli::kInadmissible);
    CHECK(cli::cmd_witness(2, 5, 11, 9, 7, (dir / "w4.json").string(), out, err3) ==
          cli::kBadInput);
}

TEST_CASE("certify and verify round-trip, tampering detected") {
    auto dir = tmp_dir();
    std::ostringstream out, err;
    auto wp = (dir / "wit.json").string();
    auto cp = (dir / "cert.json").string();
    REQUIRE(cli::cmd_witness(2, 5, 12, 9, 1, wp, out, err) == cli::kOk);
    REQUIRE(cli::cmd_certify(wp, cp, 0, 1, out, err) == cli::kOk);
    CHECK(cli::cmd_verify(cp, out, err) == cli::kOk);

    // edit one decomposition coefficient
    auto j = nlohmann::json::parse(slurp(cp));
    j["sr_upper"]["coefficients"][0] = "999";
    std::ofstream(dir / "tampered.json") << j.dump(2);
    std::ostringstream out2;
    CHECK(cli::cmd_verify((dir / "tampered.json").string(), out2, err) == cli::kCheckFailed);
    CHECK(out2.str().find("sr-upper-mismatch") != std::string::npos);

    // schema gate
    j = nlohmann::json::parse(slurp(cp));
    j["schema"] = "rank-cert/2";
    std::ofstream(dir / "schema.json") << j.dump(2);
    CHECK(cli::cmd_verify((dir / "schema.json").string(), out, err) == cli::kSchemaMismatch);

    // malformed file
    std::ofstream(dir / "junk.json") << "{ not json";
    CHECK(cli::cmd_verify((dir / "junk.json").string(), out, err) == cli::kBadInput);
    CHECK(cli::cmd_certify((dir / "junk.json").string(), cp, 0, 1, out, err) == cli::kBadInput);
}

TEST_CASE("binary rank command") {
    std::ostringstream out, err;
    REQUIRE(cli::cmd_rank_binary({"0", "1", "0", "0", "0"}, out, err) == cli::kOk);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["rank"] == 4);
    CHECK(j["border_rank"] == 2);
    CHECK(j["squarefree"] == false);
    // round-trip of the emitted JSON
    auto rr = j.get<sylvester::RankResult>();
    CHECK(nlohmann::json(rr) == j);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_rank_binary({"1"}, out2, err2) == cli::kBadInput);
    CHECK(cli::cmd_rank_binary({"1", "x"}, out2, err2) == cli::kBadInput);
    CHECK(cli::cmd_rank_binary({"0", "0", "0"}, out2, err2) == cli::kBadInput);
}

TEST_CASE("defect command on a scheme file") {
    auto dir = tmp_dir();
    geom::ParamCurve line =
        geom::line_through(geom::plane_point(1, 0, 0), geom::plane_point(0, 1, 0));
    schemes::Scheme z;
    z.m = 2;
    for (long t = 0; t < 6; ++t) z.components.push_back({line, exact::rat(t), 1});
    std::ofstream(dir / "scheme.json") << nlohmann::json(z).dump(2);

    std::ostringstream out, err;
    REQUIRE(cli::cmd_h1((dir / "scheme.json").string(), 4, out, err) == cli::kOk);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["h1"] == 1);
    CHECK(j["h0"] == 10);
    CHECK(cli::cmd_h1((dir / "missing.json").string(), 4, out, err) == cli::kBadInput);
}

TEST_CASE("certificate JSON round-trips to an equal value") {
    strata::Witness w = strata::witness(2, 5, 12, 21, 1);
    certify::Certificate cert = certify::certify(w, 200, 1);
    nlohmann::json j = cert;
    auto back = j.get<certify::Certificate>();
    CHECK(nlohmann::json(back) == j);
    REQUIRE(back.falsification.has_value());
    CHECK(back.falsification->outcome == "exhausted");
    CHECK(back.sr_lower.lemma_id == cert.sr_lower.lemma_id);
}
