#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zx/cli.hpp"
#include "zx/circuit.hpp"
#include "zx/json_io.hpp"
#include "zx/simplify.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace zx;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("zxcal-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) {
        fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string slurp(const std::string& name) {
        std::ifstream in(path / name);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
};

} // namespace

TEST_CASE("compile, simplify and verify round trip through the CLI") {
    TempDir tmp;
    std::string cnot2 = tmp.file("cnot2.qc", "qubits 2\ncnot 0 1\ncnot 0 1\n");
    std::string id2 = tmp.file("id2.qc", "qubits 2\n");

    CHECK(cli::run({"compile", "circuit", cnot2, (tmp.path / "cnot2.zx").string()}) == 0);
    CHECK(cli::run({"compile", "circuit", id2, (tmp.path / "id2.zx").string()}) == 0);
    CHECK(cli::run({"verify", (tmp.path / "cnot2.zx").string(),
                    (tmp.path / "id2.zx").string(), "--mode", "exact"}) == 0);

    std::string cnot = tmp.file("cnot.qc", "qubits 2\ncnot 0 1\n");
    std::string cz = tmp.file("cz.qc", "qubits 2\ncz 0 1\n");
    CHECK(cli::run({"compile", "circuit", cnot, (tmp.path / "cnot.zx").string()}) == 0);
    CHECK(cli::run({"compile", "circuit", cz, (tmp.path / "cz.zx").string()}) == 0);
    CHECK(cli::run({"verify", (tmp.path / "cnot.zx").string(),
                    (tmp.path / "cz.zx").string()}) == 1);

    CHECK(cli::run({"simplify", (tmp.path / "cnot2.zx").string(),
                    (tmp.path / "cnot2-simp.zx").string(), "--trace",
                    (tmp.path / "trace.json").string()}) == 0);
    Diagram simp = diagram_from_json(tmp.slurp("cnot2-simp.zx"));
    CHECK(isomorphic(simp, Diagram::identity(2)));
    CHECK(tmp.slurp("trace.json").find("Hopf") != std::string::npos);
}

TEST_CASE("eval and render emit their formats") {
    TempDir tmp;
    std::string h = tmp.file("h.qc", "qubits 1\nh 0\n");
    CHECK(cli::run({"compile", "circuit", h, (tmp.path / "h.zx").string()}) == 0);
    CHECK(cli::run({"eval", (tmp.path / "h.zx").string(),
                    (tmp.path / "h.json").string()}) == 0);
    std::string m = tmp.slurp("h.json");
    CHECK(m.find("0.7071") != std::string::npos);
    CHECK(cli::run({"render", (tmp.path / "h.zx").string(),
                    (tmp.path / "h.dot").string()}) == 0);
    std::string dot = tmp.slurp("h.dot");
    CHECK(dot.find("graph zx") != std::string::npos);
    CHECK(dot.find("square") != std::string::npos);
}

TEST_CASE("pattern and graph compilation through the CLI") {
    TempDir tmp;
    std::string pat = tmp.file("cnot.pat",
                               "in 1; in 2; N 3; N 4; E 1 3; E 2 3; E 3 4; "
                               "M 2 0; M 3 0; out 1; out 4");
    CHECK(cli::run({"compile", "pattern", pat, (tmp.path / "pat.zx").string()}) == 0);
    std::string g = tmp.file("path.graph", "graph 3\ne 0 1\ne 1 2\n");
    CHECK(cli::run({"compile", "graph", g, (tmp.path / "g.zx").string()}) == 0);

    // bad inputs exit with 2
    std::string bad = tmp.file("bad.pat", "in 1; out 1; M 1 0");
    CHECK(cli::run({"compile", "pattern", bad, (tmp.path / "bad.zx").string()}) == 2);
    CHECK(cli::run({"verify", "/nonexistent", "/nonexistent"}) == 2);
}

TEST_CASE("oracle subcommand reports pass and fail") {
    CHECK(cli::run({"oracle", "--family", "fourier", "--dim", "3", "--checks",
                    "structure,complementary,hopf,coherent,closed"}) == 0);
    CHECK(cli::run({"oracle", "--family", "f4", "--dim", "4", "--x", "1.0", "--checks",
                    "closed", "--json"}) == 1);
}

TEST_CASE("diagram JSON round trips") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        Diagram d = random_diagram(seed);
        Diagram back = diagram_from_json(diagram_to_json(d));
        CHECK(isomorphic(d, back));
    }
}

TEST_CASE("cli output is deterministic") {
    TempDir tmp;
    std::string c = tmp.file("c.qc", "qubits 2\nh 0\ncz 0 1\nrz 1 1/4\n");
    CHECK(cli::run({"compile", "circuit", c, (tmp.path / "a.zx").string()}) == 0);
    CHECK(cli::run({"compile", "circuit", c, (tmp.path / "b.zx").string()}) == 0);
    CHECK(tmp.slurp("a.zx") == tmp.slurp("b.zx"));
    CHECK(cli::run({"simplify", (tmp.path / "a.zx").string(),
                    (tmp.path / "a-s.zx").string(), "--strategy", "full"}) == 0);
    CHECK(cli::run({"simplify", (tmp.path / "b.zx").string(),
                    (tmp.path / "b-s.zx").string(), "--strategy", "full"}) == 0);
    CHECK(tmp.slurp("a-s.zx") == tmp.slurp("b-s.zx"));
}
