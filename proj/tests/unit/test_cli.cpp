#include "codebounds/classical.hpp"
#include "codebounds/constructions.hpp"
#include "codebounds/delsarte.hpp"
#include "codebounds/sdp.hpp"
#include "codebounds/shannon.hpp"
#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cb;
namespace fs = std::filesystem;

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

std::string binary() {
    const char* b = std::getenv("CODEBOUNDS_BIN");
    return b ? b : "codebounds";
}

Run run(const std::string& args) {
    Run r;
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
    const int status = pclose(f);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args) {
    auto r = run("--json " + args);
    REQUIRE(r.rc == 0);
    return nlohmann::json::parse(r.out);
}

fs::path scratch_dir() {
    auto p = fs::temp_directory_path() / ("codebounds_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("plain output and exit codes") {
    auto r = run("bound plotkin --q 5 --n 7 --d 6");
    CHECK(r.rc == 0);
    CHECK(r.out == "value: 15\n");
    CHECK(run("bound plotkin --q 5 --n 5 --d 4").rc == 1);
    CHECK(run("").rc == 2);
    CHECK(run("bound plotkin --q five --n 7 --d 6").rc == 2);
    CHECK(run("bound plotkin --q 5 --n 7").rc == 2);
    CHECK(run("bound theta --d 3 --q 5").rc == 1);
    auto t = run("bound theta --d 2 --q 7");
    char expect[64];
    std::snprintf(expect, sizeof expect, "value: %.12g\n", theta_circular(2, 7));
    CHECK(t.out == expect);
}

TEST_CASE("json bounds agree with the library") {
    auto j = run_json("bound delsarte --scheme hamming --q 4 --n 6 --d 3");
    CHECK(j["command"] == "bound");
    CHECK(j["result"]["value"] == "179");
    CHECK(j["result"]["optimum"] == to_string(delsarte_hamming(4, 6, 3).value));
    CHECK(j["certificate"]["certificate_ok"] == true);
    auto jj = run_json("bound delsarte --scheme johnson --n 22 --d 10 --w 10");
    CHECK(jj["result"]["value"] == to_string(delsarte_johnson(22, 10, 10).floor));
    auto dv = run_json("bound divisibility --q 5 --n 8 --d 6");
    CHECK(dv["result"]["value"] == "70");
    CHECK(dv["certificate"]["m"] == "3");
    CHECK(dv["certificate"]["r"] == "4");
    auto h = run_json("bound h --q 5 --n 7 --d 6 --M 12");
    CHECK(h["result"]["value"] == to_string(h_value(5, 7, 6, 12)));
}

TEST_CASE("construct and verify round trip") {
    const auto dir = scratch_dir();
    const auto file = (dir / "lee.code").string();
    CHECK(run("construct lee-5-7-9 -o " + file).rc == 0);
    CHECK(read_code_file(file) == lee_5_7_9());
    auto v = run_json("verify --metric lee --d 9 " + file);
    CHECK(v["result"]["result"] == "pass");
    CHECK(v["result"]["size"] == 15);
    CHECK(run("verify --metric lee --d 10 " + file).rc == 1);
    CHECK(run("verify --metric lee --d 9 " + (dir / "missing.code").string()).rc == 1);

    const auto golay = (dir / "g.code").string();
    CHECK(run("construct golay-shortened --times 4 -o " + golay).rc == 0);
    CHECK(read_code_file(golay) == golay_shortened(4));
    const auto coset = (dir / "c.code").string();
    CHECK(run("construct coset20 --flips 0x0007 -o " + coset).rc == 0);
    CHECK(read_code_file(coset) == coset20(7));
    const auto circ = (dir / "circ.code").string();
    CHECK(run("construct circular --r 3 --n 3 -o " + circ).rc == 0);
    CHECK(read_code_file(circ) == circular_construction(3, 3));
    fs::remove_all(dir);
}

TEST_CASE("sdpgen writes the library program") {
    const auto dir = scratch_dir();
    const auto file = (dir / "p.dat-s").string();
    auto j = run_json("sdpgen --family lee3 --q 5 --n 2 --d 3 -o " + file);
    CHECK(j["result"]["variables"] == 5);
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == emit_sdpa(gen_lee_triple(5, 2, 3)));
    CHECK(run("sdpgen --family cw-a3 --q 2 --n 8 --d 4 -o " + file).rc == 1);
    fs::remove_all(dir);
}

TEST_CASE("oracle and orbit commands") {
    auto a = run_json("oracle alpha-circular --q 7 --d 2 --n 2");
    CHECK(a["result"]["size"] == 10);
    CHECK(a["result"]["exact"] == true);
    CHECK(a["certificate"]["witness"].size() == 10);
    auto m = run_json("oracle max-code --q 3 --n 4 --d 3 --metric hamming");
    CHECK(m["result"]["size"] == 9);
    auto o = run_json("orbits count --family leeinf3 --q 5 --n 3 --d 2");
    CHECK(o["result"]["variables"] == 48);
}

TEST_CASE("analyze-dual end to end") {
    const auto dir = scratch_dir();
    const auto prog = (dir / "p.dat-s").string();
    const auto dual = (dir / "x.txt").string();
    SdpProgram p;
    p.family = "tiny";
    p.vars.resize(2);
    p.objective = {1, 0};
    SdpBlock b;
    b.label = "b";
    b.dim = 1;
    b.entries.push_back({0, 0, 1, {{0, -1}, {1, -1}}});
    p.blocks.push_back(b);
    {
        std::ofstream(prog) << emit_sdpa(p);
        std::ofstream(dual) << "1 1 1 1.0\n2 1 1 0.0\n2 2 2 1.0\n";
    }
    auto j = run_json("analyze-dual --program " + prog + " --dual " + dual + " --lower-bound 1e-11 --code-size 1");
    REQUIRE(j["result"]["forbidden"].is_array());
    CHECK(j["result"]["forbidden"].size() == 1);
    {
        std::ofstream(dual) << "1 1 1 -1.0\n2 1 1 0.0\n2 2 2 1.0\n";
    }
    CHECK(run("analyze-dual --program " + prog + " --dual " + dual + " --lower-bound 1e-11 --code-size 1").rc == 1);
    fs::remove_all(dir);
}

}
