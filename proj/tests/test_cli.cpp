#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "morsekit/complex_io.hpp"
#include "morsekit/homology.hpp"

namespace fs = std::filesystem;
using namespace morsekit;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(MORSEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("morsekit_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const char* kOr = "input x\ninput y\nor g x y\noutput g\n";

}  // namespace

TEST_CASE("gen") {
    TempDir T;
    auto r = cli("gen --model clique -n 5 -p 1 --out " + T / "k.cplx");
    CHECK(r.code == 0);
    auto K = parse_cplx(slurp(T / "k.cplx"));
    CHECK(K.size() == 31);
    CHECK(K.dimension() == 4);
    CHECK(cli("gen --model lm -n 10 -d 2 -p 0.5 --seed 7").out == cli("gen --model lm -n 10 -d 2 -p 0.5 --seed 7").out);
    CHECK(cli("gen --model lm -n 10 -d 2 -p 0.5 --seed 7").out != cli("gen --model lm -n 10 -d 2 -p 0.5 --seed 8").out);
    auto cf = parse_cplx(cli("gen --model cf -n 6 --probs 1,1,1,1,1").out);
    CHECK(cf.size() == 63);
    CHECK(cli("gen --model nope -n 5").code == 2);
    CHECK(cli("gen --model clique -n 5 -p 2").code == 2);
    CHECK(cli("").code == 2);
}

TEST_CASE("morse, verify and betti") {
    TempDir T;
    put(T / "tri.cplx", "0 1 2\n");
    put(T / "tet.cplx", "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    auto g = cli("morse --complex " + T / "tri.cplx" + " --algo greedy-erase --out " + T / "tri.grad");
    CHECK(g.code == 0);
    CHECK(g.out == "1 0 0\n");
    CHECK(cli("verify --complex " + T / "tri.cplx" + " --gradient " + T / "tri.grad").out == "ok 1 0 0\n");
    auto e = cli("morse --complex " + T / "tet.cplx" + " --algo exact --kmax 1 --out " + T / "tet.grad");
    CHECK(e.code == 0);
    CHECK(e.out == "1 0 1\n");
    CHECK(cli("verify --complex " + T / "tet.cplx" + " --gradient " + T / "tet.grad").code == 0);
    CHECK(cli("morse --complex " + T / "tet.cplx" + " --algo exact --kmax 0").code == 4);
    CHECK(cli("morse --complex " + T / "tet.cplx" + " --algo exact").code == 2);
    CHECK(cli("betti --complex " + T / "tet.cplx").out == "1 0 1\n");
    for (const char* algo : {"apparent", "random-face", "approx", "greedy-erase"}) {
        auto m = cli("morse --complex " + T / "tet.cplx" + " --algo " + algo + " --out " + T / "x.grad");
        CHECK(m.code == 0);
        auto v = cli("verify --complex " + T / "tet.cplx" + " --gradient " + T / "x.grad");
        CHECK(v.code == 0);
        CHECK(v.out.rfind("ok ", 0) == 0);
    }
    // approx prints its parameters on a second line
    auto a = cli("morse --complex " + T / "tet.cplx" + " --algo approx");
    CHECK(a.out.find("\nn=4 b=2 gamma=") != std::string::npos);
    put(T / "solid.cplx", "0 1 2 3\n");
    CHECK(cli("morse --complex " + T / "solid.cplx" + " --algo approx").code == 3);
    // a gradient that is not acyclic
    put(T / "bad.grad", "PAIR 0 0,1\nPAIR 1 1,2\nPAIR 2 0,2\nPAIR 1,2 0,1,2\n");
    auto bad = cli("verify --complex " + T / "tri.cplx" + " --gradient " + T / "bad.grad");
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("invalid: ", 0) == 0);
    put(T / "junk.cplx", "0 x\n");
    CHECK(cli("betti --complex " + T / "junk.cplx").code == 2);
    CHECK(cli("betti --complex " + T / "missing.cplx").code == 2);
}

TEST_CASE("erase and er") {
    TempDir T;
    put(T / "tet.cplx", "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    CHECK(cli("erase --complex " + T / "tet.cplx").out == "not erasable: 4 triangles remain\n");
    auto er = cli("er --complex " + T / "tet.cplx" + " --kmax 2");
    CHECK(er.code == 0);
    CHECK(er.out == "er 1\n0 1 2\n");
    CHECK(cli("er --complex " + T / "tet.cplx" + " --kmax 0").code == 4);
}

TEST_CASE("reduce, assign and extract") {
    TempDir T;
    put(T / "or.mct", kOr);
    auto r = cli("reduce --circuit " + T / "or.mct" + " --out " + T / "or.cplx" + " --emit-certificate x,y");
    CHECK(r.code == 0);
    CHECK(r.out.find("certificate 1 2 2\n") != std::string::npos);
    auto K = parse_cplx(slurp(T / "or.cplx"));
    CHECK(K.euler_characteristic() == 1);
    CHECK(betti_mod2(K) == std::vector<std::size_t>{1, 0, 0});
    CHECK(fs::exists(T / "or.cplx.meta.json"));
    CHECK(fs::exists(T / "or.grad"));
    CHECK(cli("verify --complex " + T / "or.cplx" + " --gradient " + T / "or.grad").out == "ok 1 2 2\n");
    auto a = cli("assign --circuit " + T / "or.mct" + " --assignment x,y --out " + T / "xy.grad");
    CHECK(a.out == "1 2 2\n");
    auto x = cli("extract --circuit " + T / "or.mct" + " --gradient " + T / "xy.grad");
    CHECK(x.code == 0);
    CHECK((x.out == "x\n" || x.out == "y\n" || x.out == "x,y\n"));
    CHECK(cli("assign --circuit " + T / "or.mct" + " --assignment y").out == "1 1 1\n");
    put(T / "and.mct", "input x\ninput y\nand g x y\noutput g\n");
    CHECK(cli("assign --circuit " + T / "and.mct" + " --assignment x").code == 5);
    CHECK(cli("assign --circuit " + T / "and.mct" + " --assignment q").code == 2);
    put(T / "cyc.mct", "input x\nand g x h\nor h g x\noutput h\n");
    CHECK(cli("reduce --circuit " + T / "cyc.mct" + " --out " + T / "c.cplx").code == 2);
    // wide gates are split before compiling
    put(T / "wide.mct", "input x\ninput y\ninput z\nor g x y z\noutput g\n");
    CHECK(cli("reduce --circuit " + T / "wide.mct" + " --out " + T / "w.cplx").code == 0);
}

TEST_CASE("experiment") {
    TempDir T;
    const std::string args = "experiment --model clique -n 20 -p 0.5 --r 2 --trials 3 --seed 1";
    auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("trial,seed,n,model,r,", 0) == 0);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 4);
    CHECK(cli(args + " --jobs 2").out == a.out);
    CHECK(cli(args + " --summary " + T / "s.json").code == 0);
    CHECK(slurp(T / "s.json").find("\"mean_ratio\"") != std::string::npos);
}
