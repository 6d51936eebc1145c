// Command-line front door: generators, exact solvers, shifting and
// saturation passes, reductions, and the verification sweeps.
//
// Exit codes: 0 = command ran (including NONE answers), 2 = malformed input,
// 3 = precondition violation, 4 = a verify command found a counterexample
// (witness written to a file).

#include <CLI11.hpp>

#include "hypermatch/errors.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/fractional.hpp"
#include "hypermatch/harness.hpp"
#include "hypermatch/io.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/shift.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace hypermatch;

namespace {

void write_or_print(const std::optional<std::string>& out, const std::string& content) {
    if (out) {
        save_text(*out, content);
    } else {
        std::cout << content;
    }
}

bool is_aux_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return line.compare(first, 3, "kha") == 0;
    }
    throw input_error("empty file: " + path);
}

// solver commands accept both plain hypergraphs and auxiliary graphs
KGraph load_solver_input(const std::string& path) {
    if (is_aux_file(path)) return load_aux(path).graph;
    return load_kgraph(path);
}

std::string edge_line(const Edge& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    return os.str();
}

std::string aux_edge_line(const AuxGraph& aux, const Edge& e) {
    std::ostringstream os;
    bool first = true;
    for (int v : e) {
        os << (first ? "" : " ") << aux.vertex_name(v);
        first = false;
    }
    return os.str();
}

VertexSet parse_s_spec(const AuxGraph& aux, const std::string& spec) {
    VertexSet s;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] == 'v' || tok[0] == 'u') {
            int idx = std::atoi(tok.c_str() + 1);
            if (tok[0] == 'v') {
                if (idx < 1 || idx > aux.m) throw input_error("s-spec: v-label out of range: " + tok);
                s.push_back(aux.v_label(idx));
            } else {
                if (idx < 1 || idx > aux.r) throw input_error("s-spec: u-label out of range: " + tok);
                s.push_back(aux.u_label(idx));
            }
        } else {
            int v = std::atoi(tok.c_str());
            if (v < 1 || v > aux.base_n) throw input_error("s-spec: base vertex out of range: " + tok);
            s.push_back(v);
        }
    }
    std::sort(s.begin(), s.end());
    return s;
}

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::kConfirmed: return "CONFIRMED";
        case VerdictStatus::kCounterexample: return "COUNTEREXAMPLE";
        case VerdictStatus::kInconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

struct VerifyArgs {
    TrialConfig cfg;
    std::string epsilon = "1/100";
    std::string c = "1/10";
    std::string gamma = "1/50";
    std::string gamma_prime = "1/500";
    bool json = false;
    std::string witness_path = "counterexample";
    long long trials = 0;
    uint64_t seed = 1;

    TrialConfig resolve() const {
        TrialConfig out = cfg;
        out.trials = trials;
        out.seed = seed;
        out.epsilon = parse_rat(epsilon);
        out.c = parse_rat(c);
        out.gamma = parse_rat(gamma);
        out.gamma_prime = parse_rat(gamma_prime);
        return out;
    }
};

void add_knob_options(CLI::App* cmd, VerifyArgs& args) {
    cmd->add_option("--n", args.cfg.n, "vertex count")->required();
    cmd->add_option("--m", args.cfg.m, "family size")->required();
    cmd->add_option("--k", args.cfg.k, "uniformity")->required();
    cmd->add_option("--trials", args.trials, "random trials");
    cmd->add_option("--seed", args.seed, "64-bit seed");
    cmd->add_option("--epsilon", args.epsilon, "closeness knob (rational)");
    cmd->add_option("--c", args.c, "density knob (rational)");
    cmd->add_option("--gamma", args.gamma, "absorbing knob (rational)");
    cmd->add_option("--gamma-prime", args.gamma_prime, "absorbing knob (rational)");
    cmd->add_flag("--json", args.json, "emit the report as JSON");
    cmd->add_option("--witness", args.witness_path, "witness file stem for counterexamples");
}

int emit_verdict_report(const std::string& command, const VerifyArgs& args, const Verdict& v) {
    TrialConfig cfg = args.resolve();
    Report rep;
    rep.add("command", command);
    rep.add("n", cfg.n);
    rep.add("m", cfg.m);
    rep.add("k", cfg.k);
    rep.add("trials", cfg.trials);
    rep.add("seed", std::to_string(cfg.seed));
    rep.add("epsilon", format_rat(cfg.epsilon));
    rep.add("c", format_rat(cfg.c));
    rep.add("gamma", format_rat(cfg.gamma));
    rep.add("gamma_prime", format_rat(cfg.gamma_prime));
    rep.add("status", status_name(v.status));
    rep.add("sweep_cases", v.sweep_cases);
    rep.add("random_trials", v.random_trials);
    if (v.witness) {
        std::string path = args.witness_path + (v.witness->graph ? ".khg" : ".khf");
        if (v.witness->graph) save_text(path, emit_kgraph(*v.witness->graph));
        if (v.witness->family) save_text(path, emit_family(*v.witness->family));
        rep.add("witness_file", path);
        rep.add("witness_description", v.witness->description);
        rep.add("witness_revalidated", v.witness->revalidated ? "true" : "false");
    }
    std::cout << (args.json ? rep.render_json() : rep.render_kv());
    std::cerr << "elapsed_seconds=" << v.elapsed_seconds << "\n";
    return v.status == VerdictStatus::kCounterexample ? 4 : 0;
}

int run(int argc, char** argv) {
    CLI::App app{"k-uniform hypergraph matching laboratory"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "emit a construction");
    std::string gen_kind;
    int gen_n = 0, gen_m = 1, gen_k = 0;
    std::optional<std::string> gen_out;
    gen->add_option("kind", gen_kind, "S|D|HS|HD|complete")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "family size (unused for complete)");
    gen->add_option("--k", gen_k, "uniformity")->required();
    gen->add_option("--out", gen_out, "output file");

    // ---- fbound ----
    auto* fb = app.add_subcommand("fbound", "print f(n,m,k)");
    int fb_n = 0, fb_m = 0, fb_k = 0;
    fb->add_option("--n", fb_n)->required();
    fb->add_option("--m", fb_m)->required();
    fb->add_option("--k", fb_k)->required();

    // ---- solvers on one hypergraph ----
    std::string nu_file, perfect_file, frac_file, rainbow_file;
    auto* nu_cmd = app.add_subcommand("nu", "maximum matching size");
    nu_cmd->add_option("file", nu_file)->required();
    auto* perfect_cmd = app.add_subcommand("perfect", "perfect matching decision");
    perfect_cmd->add_option("file", perfect_file)->required();
    auto* frac_cmd = app.add_subcommand("frac", "maximum fractional matching value");
    frac_cmd->add_option("file", frac_file)->required();
    auto* rainbow_cmd = app.add_subcommand("rainbow", "rainbow matching decision on a family");
    rainbow_cmd->add_option("file", rainbow_file)->required();

    // ---- family transforms ----
    std::string stab_file, sat_file, peel_file;
    std::optional<std::string> stab_out, sat_out, peel_out, peel_log;
    auto* stab_cmd = app.add_subcommand("stabilize", "shift every member to the stable fixpoint");
    stab_cmd->add_option("file", stab_file)->required();
    stab_cmd->add_option("--out", stab_out);
    auto* sat_cmd = app.add_subcommand("saturate", "stable + saturated closure");
    sat_cmd->add_option("file", sat_file)->required();
    sat_cmd->add_option("--out", sat_out);
    auto* peel_cmd = app.add_subcommand("peel", "remove full-degree vertices");
    peel_cmd->add_option("file", peel_file)->required();
    peel_cmd->add_option("--out", peel_out);
    peel_cmd->add_option("--log", peel_log);

    // ---- reduce ----
    auto* reduce_cmd = app.add_subcommand("reduce", "family to auxiliary graph");
    std::string reduce_kind, reduce_file;
    std::optional<std::string> reduce_out;
    reduce_cmd->add_option("kind", reduce_kind, "H|Hstar")->required();
    reduce_cmd->add_option("file", reduce_file)->required();
    reduce_cmd->add_option("--out", reduce_out);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "conjecture sweeps");
    verify->require_subcommand(1);
    VerifyArgs erdos_args, rainbow_args, stability_args;
    auto* verify_erdos_cmd = verify->add_subcommand("erdos", "nu >= m above the threshold");
    add_knob_options(verify_erdos_cmd, erdos_args);
    auto* verify_rainbow_cmd =
        verify->add_subcommand("rainbow", "rainbow matchings above the threshold");
    add_knob_options(verify_rainbow_cmd, rainbow_args);
    auto* verify_stability_cmd =
        verify->add_subcommand("stability", "near-extremal classification probe");
    add_knob_options(verify_stability_cmd, stability_args);

    // ---- absorb ----
    auto* absorb_cmd = app.add_subcommand("absorb", "absorbing matching construction");
    std::string absorb_file, s_spec;
    int absorb_t = 0;
    absorb_cmd->add_option("file", absorb_file)->required();
    absorb_cmd->add_option("--t", absorb_t, "absorbing matching size")->required();
    absorb_cmd->add_option("--s-spec", s_spec, "comma-separated S set, e.g. v1,7,8,9");

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        if (gen_kind == "S") {
            write_or_print(gen_out, emit_kgraph(make_S(gen_n, gen_m, gen_k)));
        } else if (gen_kind == "D") {
            write_or_print(gen_out, emit_kgraph(make_D(gen_n, gen_m, gen_k)));
        } else if (gen_kind == "HS") {
            write_or_print(gen_out, emit_aux(make_HS(gen_n, gen_m, gen_k)));
        } else if (gen_kind == "HD") {
            write_or_print(gen_out, emit_aux(make_HD(gen_n, gen_m, gen_k)));
        } else if (gen_kind == "complete") {
            write_or_print(gen_out,
                           emit_kgraph(KGraph::build(gen_n, gen_k, all_k_subsets(gen_n, gen_k))));
        } else {
            throw input_error("unknown construction kind: " + gen_kind);
        }
        return 0;
    }
    if (*fb) {
        std::cout << f_bound(fb_n, fb_m, fb_k).str() << "\n";
        return 0;
    }
    if (*nu_cmd) {
        std::cout << nu(load_solver_input(nu_file)) << "\n";
        return 0;
    }
    if (*perfect_cmd) {
        KGraph g = load_solver_input(perfect_file);
        auto witness = perfect_matching(g);
        std::cout << (witness ? "true" : "false") << "\n";
        if (witness)
            for (const Edge& e : witness->edges) std::cout << edge_line(e) << "\n";
        return 0;
    }
    if (*frac_cmd) {
        LpCertificate cert = max_fractional(load_solver_input(frac_file));
        std::cout << format_rat(cert.value) << "\n";
        return 0;
    }
    if (*rainbow_cmd) {
        Family fam = load_family(rainbow_file);
        auto rm = rainbow(fam);
        if (!rm) {
            std::cout << "NONE\n";
        } else {
            for (const auto& [i, e] : rm->pairs)
                std::cout << "F" << (i + 1) << ": " << edge_line(e) << "\n";
        }
        return 0;
    }
    if (*stab_cmd) {
        write_or_print(stab_out, emit_family(stabilize(load_family(stab_file))));
        return 0;
    }
    if (*sat_cmd) {
        write_or_print(sat_out, emit_family(saturate(load_family(sat_file))));
        return 0;
    }
    if (*peel_cmd) {
        PeelResult result = peel_full_degree(load_family(peel_file));
        write_or_print(peel_out, emit_family(result.family));
        Report log;
        log.add("events", static_cast<long long>(result.log.size()));
        for (const PeelEvent& ev : result.log) {
            std::ostringstream key;
            key << "peel_" << ev.iteration;
            std::ostringstream val;
            val << "member=" << (ev.dropped_member + 1) << " vertex=" << ev.removed_vertex;
            log.add(key.str(), val.str());
        }
        if (peel_log) {
            save_text(*peel_log, log.render_kv());
        } else {
            std::cerr << log.render_kv();
        }
        return 0;
    }
    if (*reduce_cmd) {
        Family fam = load_family(reduce_file);
        if (reduce_kind == "H") {
            write_or_print(reduce_out, emit_aux(reduce_H(fam)));
        } else if (reduce_kind == "Hstar") {
            write_or_print(reduce_out, emit_aux(reduce_Hstar(fam)));
        } else {
            throw input_error("unknown reduction: " + reduce_kind);
        }
        return 0;
    }
    if (*verify_erdos_cmd)
        return emit_verdict_report("verify-erdos", erdos_args, verify_erdos(erdos_args.resolve()));
    if (*verify_rainbow_cmd)
        return emit_verdict_report("verify-rainbow", rainbow_args,
                                   verify_rainbow(rainbow_args.resolve()));
    if (*verify_stability_cmd) {
        TrialConfig cfg = stability_args.resolve();
        if (cfg.k != 3) throw precondition_error("verify stability requires k = 3");
        StabilityProbeReport probe =
            stability_probe(cfg.n, cfg.m, cfg.epsilon, cfg.trials, cfg.seed);
        Report rep;
        rep.add("command", "verify-stability");
        rep.add("n", cfg.n);
        rep.add("m", cfg.m);
        rep.add("k", cfg.k);
        rep.add("trials", cfg.trials);
        rep.add("seed", std::to_string(cfg.seed));
        rep.add("epsilon", format_rat(cfg.epsilon));
        rep.add("window_vacuous", probe.window_vacuous ? "true" : "false");
        rep.add("s_source_trials", probe.s_source_trials);
        rep.add("d_source_trials", probe.d_source_trials);
        rep.add("s_close", probe.s_close);
        rep.add("d_close", probe.d_close);
        rep.add("both", probe.both);
        rep.add("neither", probe.neither);
        if (!probe.neither_witnesses.empty()) {
            std::string path = stability_args.witness_path + ".khg";
            save_text(path, emit_kgraph(probe.neither_witnesses.front()));
            rep.add("neither_witness_file", path);
        }
        std::cout << (stability_args.json ? rep.render_json() : rep.render_kv());
        return 0;
    }
    if (*absorb_cmd) {
        Family fam = load_family(absorb_file);
        Matching m = build_absorbing(fam, absorb_t);
        AuxGraph aux = reduce_Hstar(fam);
        std::cout << "M:\n";
        for (const Edge& e : m.edges) std::cout << aux_edge_line(aux, e) << "\n";
        if (!s_spec.empty()) {
            Matching full = absorb(fam, m, absorb_t, parse_s_spec(aux, s_spec));
            std::cout << "absorbed:\n";
            for (const Edge& e : full.edges) std::cout << aux_edge_line(aux, e) << "\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const precondition_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
