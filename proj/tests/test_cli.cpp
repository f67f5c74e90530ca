#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "rrmul/ff/json.hpp"

using rrmul::ff::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run rrmul_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rrmul");
    std::ostringstream out, err;
    int code = rrmul::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("rrmul_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("build-multiplier and verify round trip") {
    const std::string file = (scratch() / "q4k3.json").string();
    auto r = rrmul_cli({"build-multiplier", "--q", "4", "--k", "3", "--verify", "exhaustive", "--out", file});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["n"] == 5);
    CHECK(j["status"] == "PASS");
    CHECK(j["singleton_lower"] == 5);

    auto v = rrmul_cli({"verify", file, "--exhaustive"});
    CHECK(v.code == 0);
    CHECK(v.json()["verification"]["pairs_checked"] == 4096);
    CHECK(rrmul_cli({"verify", file, "--naive"}).code == 0);
    CHECK(rrmul_cli({"verify", file, "--sampled", "100", "--seed", "9"}).code == 0);

    auto one = rrmul_cli({"build-multiplier", "--q", "4", "--k", "1", "--out", (scratch() / "q4k1.json").string()});
    CHECK(one.code == 0);
    CHECK(one.json()["n"] == 1);
    CHECK(one.json()["route"] == "identity");
}

TEST_CASE("exit codes") {
    auto r = rrmul_cli({"build-multiplier", "--q", "2", "--k", "9"});
    CHECK(r.code == rrmul::cli::kInfeasible);
    CHECK(r.json()["inventory"].size() == 2);
    CHECK(rrmul_cli({"build-multiplier", "--q", "6", "--k", "2"}).code == rrmul::cli::kInputError);
    CHECK(rrmul_cli({"build-multiplier", "--q", "4"}).code == rrmul::cli::kInputError);
    CHECK(rrmul_cli({"nonsense"}).code == rrmul::cli::kInputError);
    CHECK(rrmul_cli({"verify", (scratch() / "missing.json").string()}).code == rrmul::cli::kInputError);
    CHECK(rrmul_cli({"--help"}).code == 0);

    // A tampered algorithm file is a verification failure, not an input error.
    const fs::path good = scratch() / "tamper_src.json";
    REQUIRE(rrmul_cli({"build-multiplier", "--q", "5", "--k", "2", "--out", good.string()}).code == 0);
    Json alg = Json::parse(slurp(good));
    alg["phi"][0][0] = alg["phi"][0][0].get<int>() == 1 ? 2 : 1;
    const fs::path bad = scratch() / "tampered.json";
    std::ofstream(bad) << alg.dump();
    auto t = rrmul_cli({"verify", bad.string(), "--exhaustive"});
    CHECK(t.code == rrmul::cli::kCheckFailed);
    CHECK(t.json()["verification"].contains("counterexample"));
    std::ofstream(scratch() / "garbage.json") << "{not json";
    CHECK(rrmul_cli({"verify", (scratch() / "garbage.json").string()}).code == rrmul::cli::kInputError);
}

TEST_CASE("construct-divisor") {
    auto r = rrmul_cli({"construct-divisor", "--q", "5", "--curve", "elliptic:0,0,0,1,1", "--constraint", "2:all"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    // g = 1, n = 9: d+ = floor((g - 1 + n)/2) = 4.
    CHECK(j["window"]["d_plus"] == 4);
    CHECK(j["window"]["d_minus"].is_null());
    CHECK(j["d"] == 4);
    CHECK(j["constraints"][0]["l"] == 0);

    r = rrmul_cli({"construct-divisor", "--q", "5", "--curve", "elliptic:0,0,0,1,1", "--constraint", "-1:0"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["window"]["d_minus"] == 0);
    CHECK(r.json()["constraints"][0]["l"] == 0);

    r = rrmul_cli({"construct-divisor", "--q", "5", "--curve", "elliptic:0,0,0,1,1", "--constraint", "2:all", "--d", "5"});
    CHECK(r.code == rrmul::cli::kInfeasible);

    r = rrmul_cli({"construct-divisor", "--q", "7", "--curve", "elliptic:0,0,0,3,2", "--constraint", "1:deg:3",
                   "--constraint", "2:all"});
    REQUIRE(r.code == 0);
    for (const auto& c : r.json()["constraints"]) CHECK(c["l"] == 0);

    CHECK(rrmul_cli({"construct-divisor", "--q", "5", "--curve", "elliptic:0,0,0,1,1", "--constraint", "3:all"}).code ==
          rrmul::cli::kInputError);
    CHECK(rrmul_cli({"construct-divisor", "--q", "5", "--curve", "elliptic:0,0,0,0,0", "--constraint", "1:0"}).code ==
          rrmul::cli::kInputError);
}

TEST_CASE("code subcommand") {
    auto r = rrmul_cli({"code", "--q", "4", "--D", "2*inf"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["length"] == 5);
    CHECK(j["dimension"] == 3);
    CHECK(j["xing_criterion"] == true);
    CHECK(j["intersecting"]["intersecting"] == true);
    auto csv = rrmul_cli({"code", "--q", "4", "--D", "2*inf", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);
}

TEST_CASE("bounds, psi and prime-eps") {
    auto r = rrmul_cli({"prime-eps", "--from", "139", "--limit", "2010881"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["eps"] == "10/139");
    r = rrmul_cli({"psi", "--p", "7", "--x", "1000"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["ceiling"] == 1008);
    CHECK(r.json()["witness_N"] == 390);
    CHECK(rrmul_cli({"psi", "--n", "10"}).json()["psi"] == 18);
    CHECK(rrmul_cli({"psi", "--p", "7", "--x", "136.8"}).json()["ceiling"] == 138);

    r = rrmul_cli({"bounds", "stv", "--q", "49", "--A", "6"});
    CHECK(r.code == 0);
    CHECK(r.json()["values"]["M_q_upper_square"] == "12/5");
    CHECK(rrmul_cli({"bounds", "stv", "--q", "2", "--A", "2"}).code == rrmul::cli::kInfeasible);
    CHECK(rrmul_cli({"bounds", "rq", "--q", "2", "--infinite", "--nu", "4"}).code == rrmul::cli::kInputError);
    CHECK(rrmul_cli({"bounds", "kappa", "--infinite", "--nu", "6"}).json()["kappa_sup"] == "5/2");
    CHECK(rrmul_cli({"bounds", "ballet", "--p", "7", "--k", "29"}).json()["values"]["bound"] == "137/58");
    CHECK(rrmul_cli({"bounds", "ballet", "--p", "7", "--k", "28"}).code == rrmul::cli::kInfeasible);
    auto mu = rrmul_cli({"bounds", "mu", "--q", "5", "--k", "4", "--curve", "elliptic:0,0,0,1,1"});
    CHECK(mu.json()["values"]["mu_upper"] == "8");
    auto table = rrmul_cli({"bounds", "genus-table", "--from", "1", "--to", "11", "--format", "csv"});
    CHECK(table.out.rfind("N,psi,genus,nu_inf,nu3,nu2\n", 0) == 0);
    CHECK(table.out.find("\n11,12,1,2,0,0\n") != std::string::npos);
}

TEST_CASE("output directory from the environment") {
    const fs::path dir = scratch() / "envdir";
    ::setenv("RRMUL_OUT_DIR", dir.c_str(), 1);
    auto r = rrmul_cli({"build-multiplier", "--q", "3", "--k", "2", "--out", "alg.json"});
    ::unsetenv("RRMUL_OUT_DIR");
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "alg.json"));
    CHECK(r.json()["output"] == (dir / "alg.json").string());
    CHECK(rrmul_cli({"verify", (dir / "alg.json").string()}).code == 0);
}
