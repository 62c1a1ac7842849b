#include "zx/cli.hpp"

#include "zx/circuit.hpp"
#include "zx/dot.hpp"
#include "zx/error.hpp"
#include "zx/evaluate.hpp"
#include "zx/json_io.hpp"
#include "zx/observable.hpp"
#include "zx/pattern.hpp"
#include "zx/simplify.hpp"
#include "zx/states.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace zx::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ZXError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') {
            std::cout << "\n";
        }
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw ZXError("cannot write '" + path + "'");
    }
    out << content;
}

/// "graph N" header then "e a b" lines.
Diagram parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string op;
        if (!(ss >> op) || op[0] == '#') {
            continue;
        }
        if (!have_header) {
            if (op != "graph" || !(ss >> n)) {
                throw SyntaxError("expected 'graph N' header", line_no, 1);
            }
            have_header = true;
            continue;
        }
        if (op == "e") {
            std::size_t a = 0;
            std::size_t b = 0;
            if (!(ss >> a >> b)) {
                throw SyntaxError("expected 'e a b'", line_no, 1);
            }
            edges.emplace_back(a, b);
        } else {
            throw SyntaxError("unknown graph line '" + op + "'", line_no, 1);
        }
    }
    if (!have_header) {
        throw SyntaxError("missing 'graph N' header", 1, 1);
    }
    return graph_state(edges, n);
}

CompareMode mode_from_string(const std::string& mode) {
    if (mode == "exact") {
        return CompareMode::Exact;
    }
    if (mode == "scalar") {
        return CompareMode::UpToGlobalScalar;
    }
    if (mode == "phase") {
        return CompareMode::UpToGlobalPhase;
    }
    throw ZXError("mode must be exact, scalar or phase");
}

int run_oracle(const std::string& family, const std::vector<std::size_t>& dims, double x,
               const std::vector<std::string>& checks, double tol, bool as_json) {
    bool all_pass = true;
    auto emit = [&](const CheckReport& rep) {
        all_pass = all_pass && rep.pass;
        if (as_json) {
            std::cout << report_to_json(rep) << "\n";
        } else {
            std::cout << (rep.pass ? "pass" : "FAIL") << "  " << rep.check << "  d="
                      << rep.dim << "  residual=" << rep.residual << "\n";
        }
    };
    for (std::size_t d: dims) {
        ObservableStructure standard;
        {
            std::vector<ComplexMatrix> basis;
            for (std::size_t i = 0; i < d; ++i) {
                ComplexMatrix v(d, 1);
                v.at(i, 0) = 1.0;
                basis.push_back(v);
            }
            standard = obs_from_basis(basis);
        }
        ObservableStructure other;
        if (family == "fourier") {
            other = obs_fourier(d);
        } else if (family == "f4") {
            if (d != 4) {
                throw ZXError("family f4 needs --dim 4");
            }
            other = obs_from_hadamard(hadamard_f4(x));
        } else {
            throw ZXError("family must be fourier or f4");
        }
        StructurePair pair(standard, other);
        for (const std::string& c: checks) {
            if (c == "structure") {
                emit(check_observable_structure(pair.left, tol));
                emit(check_observable_structure(pair.right, tol));
            } else if (c == "complementary") {
                emit(check_complementary(pair, tol));
            } else if (c == "hopf") {
                emit(check_hopf(pair, d > 2, tol));
            } else if (c == "coherent") {
                emit(check_coherent(pair, tol));
            } else if (c == "closed") {
                emit(check_closed(pair, tol));
            } else if (c == "oper") {
                emit(check_oper_comm(pair, tol));
            } else if (c == "comul") {
                emit(check_comul_comm(pair, tol));
            } else if (c == "bialge") {
                emit(check_bialg_comm(pair, tol));
            } else if (c == "automorphism") {
                emit(check_automorphism(pair, tol));
            } else {
                throw ZXError("unknown check '" + c + "'");
            }
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"spider-calculus rewriting engine and verifier"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json", json_errors, "machine-readable error reporting");

    // compile
    auto* compile = app.add_subcommand("compile", "compile circuit/pattern/graph input");
    std::string compile_kind;
    std::string compile_in;
    std::string compile_out;
    compile->add_option("kind", compile_kind, "circuit|pattern|graph")->required();
    compile->add_option("input", compile_in, "input path")->required()
        ->check(CLI::ExistingFile);
    compile->add_option("output", compile_out, "output diagram path (default stdout)");

    // simplify
    auto* simp = app.add_subcommand("simplify", "rewrite a diagram to fixpoint");
    std::string simp_in;
    std::string simp_out;
    std::string simp_strategy = "basic";
    std::string simp_trace;
    simp->add_option("input", simp_in)->required()->check(CLI::ExistingFile);
    simp->add_option("output", simp_out, "output diagram path (default stdout)");
    simp->add_option("--strategy", simp_strategy, "basic|full")
        ->check(CLI::IsMember({"basic", "full"}));
    simp->add_option("--trace", simp_trace, "write the rewrite trace JSON here");

    // verify
    auto* verify = app.add_subcommand("verify", "compare two diagrams semantically");
    std::string verify_a;
    std::string verify_b;
    std::string verify_mode = "exact";
    double verify_tol = 1e-9;
    verify->add_option("a", verify_a)->required()->check(CLI::ExistingFile);
    verify->add_option("b", verify_b)->required()->check(CLI::ExistingFile);
    verify->add_option("--mode", verify_mode, "exact|scalar|phase")
        ->check(CLI::IsMember({"exact", "scalar", "phase"}));
    verify->add_option("--tol", verify_tol, "tolerance (default 1e-9)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "contract a diagram to its matrix");
    std::string eval_in;
    std::string eval_out;
    eval_cmd->add_option("input", eval_in)->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("output", eval_out, "output matrix path (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "emit Graphviz DOT");
    std::string render_in;
    std::string render_out;
    render->add_option("input", render_in)->required()->check(CLI::ExistingFile);
    render->add_option("output", render_out, "output path (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "finite-dimensional structure checks");
    std::string oracle_family = "fourier";
    std::vector<std::size_t> oracle_dims;
    double oracle_x = 0.0;
    std::string oracle_checks = "structure,complementary,hopf,coherent,closed";
    double oracle_tol = 1e-9;
    bool oracle_json = false;
    std::uint64_t oracle_seed = 0;
    oracle->add_option("--family", oracle_family, "fourier|f4");
    oracle->add_option("--dim", oracle_dims, "dimension(s)")->required();
    oracle->add_option("--x", oracle_x, "parameter for the f4 family (radians)");
    oracle->add_option("--checks", oracle_checks, "comma-separated check list");
    oracle->add_option("--tol", oracle_tol, "tolerance (default 1e-9)");
    oracle->add_flag("--json", oracle_json, "machine-readable report lines");
    oracle->add_option("--seed", oracle_seed, "seed for sampled checks (reserved)");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compile->parsed()) {
            const std::string text = read_file(compile_in);
            Diagram d;
            if (compile_kind == "circuit") {
                d = compile_circuit(parse_circuit(text));
            } else if (compile_kind == "pattern") {
                d = compile_pattern(parse_pattern(text));
            } else if (compile_kind == "graph") {
                d = parse_graph_file(text);
            } else {
                throw ZXError("kind must be circuit, pattern or graph");
            }
            write_output(compile_out, diagram_to_json(d));
            return 0;
        }
        if (simp->parsed()) {
            Diagram d = diagram_from_json(read_file(simp_in));
            std::vector<TraceStep> trace;
            Diagram out = simplify(
                d, simp_strategy == "full" ? Strategy::Full : Strategy::Basic,
                simp_trace.empty() ? nullptr : &trace);
            write_output(simp_out, diagram_to_json(out));
            if (!simp_trace.empty()) {
                write_output(simp_trace, trace_to_json(trace));
            }
            return 0;
        }
        if (verify->parsed()) {
            Diagram a = diagram_from_json(read_file(verify_a));
            Diagram b = diagram_from_json(read_file(verify_b));
            auto res = equal_matrices(evaluate(a), evaluate(b),
                                      mode_from_string(verify_mode), verify_tol);
            std::cout << (res.equal ? "equal" : "not-equal")
                      << " residual=" << res.residual;
            if (res.ratio) {
                std::cout << " ratio=" << res.ratio->real() << "+" << res.ratio->imag()
                          << "i";
            }
            std::cout << "\n";
            return res.equal ? 0 : 1;
        }
        if (eval_cmd->parsed()) {
            Diagram d = diagram_from_json(read_file(eval_in));
            write_output(eval_out, matrix_to_json(evaluate(d)));
            return 0;
        }
        if (render->parsed()) {
            Diagram d = diagram_from_json(read_file(render_in));
            write_output(render_out, render_dot(d));
            return 0;
        }
        if (oracle->parsed()) {
            std::vector<std::string> checks;
            std::string cur;
            for (char c: oracle_checks + ",") {
                if (c == ',') {
                    if (!cur.empty()) {
                        checks.push_back(cur);
                    }
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            return run_oracle(oracle_family, oracle_dims, oracle_x, checks, oracle_tol,
                              oracle_json);
        }
    } catch (const ZXError& e) {
        if (json_errors) {
            std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}

} // namespace zx::cli
