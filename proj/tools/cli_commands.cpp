#include "cli_commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "morsekit/approx.hpp"
#include "morsekit/circuit.hpp"
#include "morsekit/complex_io.hpp"
#include "morsekit/erasability.hpp"
#include "morsekit/errors.hpp"
#include "morsekit/experiment.hpp"
#include "morsekit/gradient_io.hpp"
#include "morsekit/homology.hpp"
#include "morsekit/parallel.hpp"
#include "morsekit/random_gradients.hpp"
#include "morsekit/random_models.hpp"
#include "morsekit/reduction.hpp"

namespace morsekit::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::size_t>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

void require_input(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read '" + path + "'");
}

void require_output(const std::string& path) {
    if (path.empty()) return;
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
        throw UsageError("directory of '" + path + "' does not exist");
}

// Data goes to the file when one is given, else to stdout.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) std::cout << text;
    else write_text_file(path, text);
}

int effective_jobs(int requested) {
    if (requested <= 0 && !std::getenv("MORSEKIT_JOBS")) requested = 1;
    return resolve_jobs(requested);
}

std::vector<double> parse_probs(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad probability '" + item + "'");
        }
    }
    return out;
}

struct ModelFlags {
    std::string model;
    std::size_t n = 0;
    double p = 1.0;
    int d = 2;
    std::string probs;
    int max_dim = -1;

    void add_to(CLI::App* sub) {
        sub->add_option("--model", model, "clique, lm or cf")->required()->check(CLI::IsMember({"clique", "lm", "cf"}));
        sub->add_option("-n", n, "number of vertices")->required();
        sub->add_option("-p", p, "edge (clique) or top (lm) probability");
        sub->add_option("-d", d, "dimension of the lm model");
        sub->add_option("--probs", probs, "comma separated p_1,p_2,... (cf)");
        sub->add_option("--max-dim", max_dim, "do not sample above this dimension");
    }

    ModelSpec spec() const {
        ModelSpec s;
        s.kind = parse_model_name(model);
        s.n = n;
        s.p = p;
        s.d = d;
        s.max_dim = max_dim;
        if (n == 0) throw UsageError("-n must be positive");
        if (s.kind == ModelKind::CostaFarber) {
            if (probs.empty()) throw UsageError("cf needs --probs");
            s.probs = parse_probs(probs);
        }
        if (p < 0 || p > 1) throw UsageError("-p must lie in [0, 1]");
        for (double q : s.probs)
            if (q < 0 || q > 1) throw UsageError("--probs must lie in [0, 1]");
        if (s.kind == ModelKind::LinialMeshulam && d < 1) throw UsageError("-d must be at least 1");
        return s;
    }
};

void check_two_complex(const SimplicialComplex& K) {
    if (K.dimension() > 2) throw NotTwoComplexError("complex has dimension " + std::to_string(K.dimension()));
    if (!K.is_connected()) throw NotTwoComplexError("complex is disconnected");
}

MonotoneCircuit load_circuit(const std::string& path) {
    require_input(path);
    MonotoneCircuit C = parse_circuit(read_text_file(path));
    return C.is_fanin2() ? C : normalize_fanin2(C);
}

GadgetComplex compile(const MonotoneCircuit& C) {
    try {
        return compile_reduction(C);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

SimplicialComplex load_complex(const std::string& path) {
    require_input(path);
    return read_cplx_file(path);
}

DiscreteGradient load_gradient(const SimplicialComplex& K, const std::string& path, std::string* problem) {
    require_input(path);
    Matching M = parse_gradient(K, read_text_file(path));
    DiscreteGradient V;
    if (auto v = validate_matching(K, M, &V)) {
        *problem = describe(K, *v);
        return {};
    }
    return V;
}

void check_before_write(const SimplicialComplex& K, const DiscreteGradient& V) {
    if (auto v = validate_gradient(K, V)) throw std::logic_error("produced an invalid gradient: " + describe(K, *v));
}

std::string certificate_path(const std::string& out) {
    std::filesystem::path p(out);
    p.replace_extension(".grad");
    return p.string();
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Discrete Morse matchings: build, verify, optimize; circuit reductions; random complexes"};
    app.require_subcommand(1);
    int jobs = 0;
    std::uint64_t seed = 0;
    app.add_option("--jobs", jobs, "worker threads (default: MORSEKIT_JOBS, else 1)");
    app.add_option("--seed", seed, "seed for every random choice (default 0)");

    // gen
    ModelFlags gen_model;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "sample a random complex");
    gen_model.add_to(gen);
    gen->add_option("--out", gen_out, "output .cplx (default stdout)");
    gen->add_option("--seed", seed, "seed");

    // morse
    std::string m_complex, m_algo, m_out, m_summary, m_regime = "sparse";
    std::size_t m_kmax = 0;
    int m_dim = -1;
    std::uint64_t m_shuffle = 0;
    auto* morse = app.add_subcommand("morse", "compute a gradient");
    morse->add_option("--complex", m_complex, "input .cplx")->required();
    morse->add_option("--algo", m_algo, "apparent, random-face, combined, approx, greedy-erase or exact")
        ->required()
        ->check(CLI::IsMember({"apparent", "random-face", "combined", "approx", "greedy-erase", "exact"}));
    auto* kmax_opt = morse->add_option("--kmax", m_kmax, "search limit for exact");
    morse->add_option("--dim", m_dim, "dimension r for random-face (default: top dimension)");
    morse->add_option("--regime", m_regime, "dense or sparse, for combined")->check(CLI::IsMember({"dense", "sparse"}));
    auto* shuffle_opt = morse->add_option("--shuffle-seed", m_shuffle, "shuffle the approx partition");
    morse->add_option("--out", m_out, "output .grad");
    morse->add_option("--summary", m_summary, "JSON summary");
    morse->add_option("--seed", seed, "seed");
    morse->add_option("--jobs", jobs, "worker threads");

    // verify, betti, erase, er
    std::string v_complex, v_gradient;
    auto* verify = app.add_subcommand("verify", "check a gradient file");
    verify->add_option("--complex", v_complex)->required();
    verify->add_option("--gradient", v_gradient)->required();

    std::string b_complex;
    auto* betti = app.add_subcommand("betti", "GF(2) Betti numbers");
    betti->add_option("--complex", b_complex)->required();

    std::string e_complex, e_out;
    auto* erase = app.add_subcommand("erase", "greedy erasure test");
    erase->add_option("--complex", e_complex)->required();
    erase->add_option("--out", e_out, "write the stuck core as .cplx");

    std::string er_complex;
    std::size_t er_kmax = 0;
    bool er_no_prune = false;
    auto* er = app.add_subcommand("er", "smallest number of triangles to remove for erasability");
    er->add_option("--complex", er_complex)->required();
    er->add_option("--kmax", er_kmax)->required();
    er->add_flag("--no-prune", er_no_prune, "plain subset enumeration");
    er->add_option("--jobs", jobs, "worker threads");

    // reduce, assign, extract
    std::string r_circuit, r_out, r_meta, r_cert;
    auto* reduce = app.add_subcommand("reduce", "compile a monotone circuit into a 2-complex");
    reduce->add_option("--circuit", r_circuit)->required();
    reduce->add_option("--out", r_out, "output .cplx")->required();
    reduce->add_option("--meta", r_meta, "gadget registry JSON (default <out>.meta.json)");
    auto* cert_opt = reduce->add_option("--emit-certificate", r_cert, "assignment; writes <out>.grad");

    std::string a_circuit, a_assignment, a_out;
    auto* assign = app.add_subcommand("assign", "gradient of the compiled complex from an assignment");
    assign->add_option("--circuit", a_circuit)->required();
    assign->add_option("--assignment", a_assignment, "true inputs, comma separated, or -")->required();
    assign->add_option("--out", a_out, "output .grad");

    std::string x_circuit, x_gradient;
    auto* extract = app.add_subcommand("extract", "satisfying assignment from a gradient of the compiled complex");
    extract->add_option("--circuit", x_circuit)->required();
    extract->add_option("--gradient", x_gradient)->required();

    // experiment
    ModelFlags x_model;
    std::string x_algo = "apparent", x_out, x_summary;
    int x_r = 2;
    std::size_t x_trials = 1;
    auto* experiment = app.add_subcommand("experiment", "random complex trials as CSV");
    x_model.add_to(experiment);
    experiment->add_option("--r", x_r, "dimension whose ratio is reported");
    experiment->add_option("--algo", x_algo, "apparent, random-face, dense or sparse")
        ->check(CLI::IsMember({"apparent", "random-face", "dense", "sparse"}));
    experiment->add_option("--trials", x_trials);
    experiment->add_option("--out", x_out, "output CSV (default stdout)");
    experiment->add_option("--summary", x_summary, "JSON summary");
    experiment->add_option("--seed", seed, "master seed");
    experiment->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            require_output(gen_out);
            emit(gen_out, format_cplx(sample_complex(gen_model.spec(), seed)));
            return kOk;
        }
        if (morse->parsed()) {
            require_output(m_out);
            require_output(m_summary);
            if (m_algo == "exact" && kmax_opt->count() == 0) throw UsageError("exact needs --kmax");
            const SimplicialComplex K = load_complex(m_complex);
            const int threads = effective_jobs(jobs);
            DiscreteGradient V;
            json summary = {{"algo", m_algo}, {"seed", seed}};
            std::string extra_line;
            if (m_algo == "apparent") {
                V = apparent_pairs_gradient(K);
            } else if (m_algo == "random-face") {
                const int r = m_dim >= 0 ? m_dim : K.dimension();
                if (r < 1 || r > K.dimension()) throw UsageError("--dim out of range");
                auto res = random_face_gradient(K, r, seed);
                V = std::move(res.gradient);
                summary["bad_events"] = res.bad_events;
                summary["r"] = r;
            } else if (m_algo == "combined") {
                if (K.dimension() < 1) throw UsageError("combined needs a complex of dimension >= 1");
                auto res = combined_gradient(K, K.dimension(), seed, m_regime == "dense" ? Regime::Dense : Regime::Sparse);
                V = std::move(res.gradient);
                summary["bad_events"] = res.bad_events;
                summary["regime"] = m_regime;
            } else if (m_algo == "approx") {
                ApproxOptions opts;
                if (shuffle_opt->count()) opts.shuffle_seed = m_shuffle;
                opts.jobs = threads;
                auto res = approx_morse_matching(K, opts);
                V = std::move(res.gradient);
                const std::size_t n2 = K.dimension() >= 2 ? K.count(2) : 0;
                summary["n"] = n2;
                summary["b"] = res.parts;
                summary["gamma"] = res.gamma;
                summary["bound"] = res.bound;
                extra_line = "n=" + std::to_string(n2) + " b=" + std::to_string(res.parts) +
                             " gamma=" + std::to_string(res.gamma) + " critical=" + join(res.morse, ",") + "\n";
            } else if (m_algo == "greedy-erase") {
                check_two_complex(K);
                const auto crit = greedy_erase_witness(K);
                V = gradient_from_erasure(K, crit);
                summary["critical_triangles"] = crit.size();
            } else {
                auto res = opt_min_morse_2complex(K, m_kmax, threads);
                V = std::move(res.gradient);
                summary["er"] = res.er;
            }
            check_before_write(K, V);
            const auto mv = morse_vector(K, V);
            summary["morse"] = mv;
            summary["total"] = total_critical(mv);
            if (!m_out.empty()) write_text_file(m_out, format_gradient(K, V));
            if (!m_summary.empty()) write_text_file(m_summary, summary.dump(2) + "\n");
            std::cout << join(mv) << "\n" << extra_line;
            return kOk;
        }
        if (verify->parsed()) {
            const SimplicialComplex K = load_complex(v_complex);
            std::string problem;
            DiscreteGradient V = load_gradient(K, v_gradient, &problem);
            if (!problem.empty()) {
                std::cout << "invalid: " << problem << "\n";
                return kFailed;
            }
            std::cout << "ok " << join(morse_vector(K, V)) << "\n";
            return kOk;
        }
        if (betti->parsed()) {
            std::cout << join(betti_mod2(load_complex(b_complex))) << "\n";
            return kOk;
        }
        if (erase->parsed()) {
            require_output(e_out);
            const SimplicialComplex K = load_complex(e_complex);
            if (K.dimension() > 2) throw NotTwoComplexError("complex has dimension " + std::to_string(K.dimension()));
            auto res = greedy_erase(K);
            if (res.erasable) std::cout << "erasable\n";
            else std::cout << "not erasable: " << res.remaining.size() << " triangles remain\n";
            if (!e_out.empty()) {
                std::vector<Simplex> core;
                for (SimplexId t : res.remaining) core.push_back(K.simplex(t));
                write_text_file(e_out, format_cplx(SimplicialComplex::from_simplices(core)));
            }
            return kOk;
        }
        if (er->parsed()) {
            const SimplicialComplex K = load_complex(er_complex);
            if (K.dimension() > 2) throw NotTwoComplexError("complex has dimension " + std::to_string(K.dimension()));
            ErSearchOptions opts;
            opts.k_max = er_kmax;
            opts.prune = !er_no_prune;
            opts.jobs = effective_jobs(jobs);
            auto res = er_search(K, opts);
            if (!res.er) throw SearchLimitError("no witness with at most " + std::to_string(er_kmax) + " triangles");
            std::cout << "er " << *res.er << "\n";
            for (SimplexId t : res.witness) std::cout << K.simplex(t).to_string(' ') << "\n";
            return kOk;
        }
        if (reduce->parsed()) {
            if (r_meta.empty()) r_meta = r_out + ".meta.json";
            require_output(r_out);
            require_output(r_meta);
            const MonotoneCircuit C = load_circuit(r_circuit);
            std::optional<Assignment> cert;
            if (cert_opt->count()) {
                cert = parse_assignment(C, r_cert);
                if (!C.evaluate(*cert)) throw NotSatisfyingError("assignment does not satisfy the circuit");
            }
            const GadgetComplex G = compile(C);
            write_text_file(r_out, format_cplx(G.complex));
            write_text_file(r_meta, gadget_metadata_json(G));
            std::cout << "f-vector " << G.complex.count(0) << " " << G.complex.count(1) << " " << G.complex.count(2)
                      << "\nhats " << G.hats.size() << "\ncycles " << G.cycles.size() << "\n";
            if (cert) {
                DiscreteGradient V = assignment_to_gradient(G, *cert);
                check_before_write(G.complex, V);
                write_text_file(certificate_path(r_out), format_gradient(G.complex, V));
                std::cout << "certificate " << join(morse_vector(G.complex, V)) << "\n";
            }
            return kOk;
        }
        if (assign->parsed()) {
            require_output(a_out);
            const MonotoneCircuit C = load_circuit(a_circuit);
            const Assignment a = parse_assignment(C, a_assignment);
            if (!C.evaluate(a)) throw NotSatisfyingError("assignment does not satisfy the circuit");
            const GadgetComplex G = compile(C);
            DiscreteGradient V = assignment_to_gradient(G, a);
            check_before_write(G.complex, V);
            if (!a_out.empty()) write_text_file(a_out, format_gradient(G.complex, V));
            std::cout << join(morse_vector(G.complex, V)) << "\n";
            return kOk;
        }
        if (extract->parsed()) {
            const MonotoneCircuit C = load_circuit(x_circuit);
            const GadgetComplex G = compile(C);
            std::string problem;
            DiscreteGradient V = load_gradient(G.complex, x_gradient, &problem);
            if (!problem.empty()) {
                std::cout << "invalid: " << problem << "\n";
                return kFailed;
            }
            const Assignment a = gradient_to_assignment(G, V);
            std::cout << format_assignment(C, a) << "\n";
            return kOk;
        }
        if (experiment->parsed()) {
            require_output(x_out);
            require_output(x_summary);
            ExperimentConfig cfg;
            cfg.model = x_model.spec();
            cfg.trials = x_trials;
            cfg.master_seed = seed;
            cfg.r = x_r;
            cfg.algo = parse_algo_name(x_algo);
            cfg.jobs = effective_jobs(jobs);
            if (x_r < 1) throw UsageError("--r must be at least 1");
            const auto rows = run_experiment(cfg);
            emit(x_out, format_csv(rows));
            if (!x_summary.empty()) {
                const auto s = summarize(rows);
                json doc = {{"trials", rows.size()},
                            {"mean_ratio", s.mean_ratio},
                            {"ratio_of_means", s.ratio_of_means},
                            {"predicted_bound", s.predicted_bound}};
                write_text_file(x_summary, doc.dump(2) + "\n");
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotTwoComplexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotTwoComplex;
    } catch (const SearchLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSearchLimit;
    } catch (const NotSatisfyingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotSatisfying;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace morsekit::cli
