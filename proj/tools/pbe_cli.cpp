// Command-line front end: classify, oracle, spectrum, algorithm, generate,
// check, emit-m2, dot.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pbe/chordal.hpp"
#include "pbe/classification.hpp"
#include "pbe/emit.hpp"
#include "pbe/error.hpp"
#include "pbe/generators.hpp"
#include "pbe/io.hpp"
#include "pbe/report.hpp"
#include "pbe/spectrum.hpp"
#include "pbe/tree_algorithm.hpp"

namespace fs = std::filesystem;
using namespace pbe;

namespace {

enum Exit { ok = 0, usage = 1, over_cap = 2, violated = 3 };

struct Options {
    std::string input;
    std::string family;
    std::string format;
    bool json = false;
    std::uint64_t seed = 1;
    int limit = 256;
    int max_n = default_max_n;
    std::string policy = "lex";
    std::string order;
    bool enumerate = false;
    bool run_overlay = false;
    std::string dir;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

GraphFormat pick_format(const Options& o, const std::string& path) {
    if (!o.format.empty()) {
        auto f = format_from_name(o.format);
        if (!f) throw input_error("unknown format '" + o.format + "' (use edgelist or json)");
        return *f;
    }
    return fs::path(path).extension() == ".json" ? GraphFormat::json : GraphFormat::edge_list;
}

FamilySpec family_with_seed(const Options& o, std::string_view text) {
    FamilySpec spec = parse_family(text);
    if (spec.family.starts_with("random_") && spec.params.size() == 1)
        spec.params.push_back(static_cast<std::int64_t>(o.seed));
    return spec;
}

Graph load_graph(const Options& o) {
    if (!o.family.empty()) return generate(family_with_seed(o, o.family)).graph;
    if (o.input.empty()) throw input_error("no input graph: give a file, '-' for stdin, or --family");
    return parse_graph(read_text(o.input), pick_format(o, o.input)).graph;
}

std::string set_text(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(g.label(*it));
    return out + "}";
}

std::string clique_text(const CliqueSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it + 1);
    return out + "}";
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string verdict_line(const Classification& c) {
    std::string out = std::string("unmixed: ") + to_string(c.unmixed) + ", Cohen-Macaulay: " + to_string(c.cohen_macaulay) +
                      ", Gorenstein: " + to_string(c.gorenstein) +
                      ", complete intersection: " + to_string(c.complete_intersection);
    return out + " (" + c.basis + ")";
}

int cmd_classify(const Options& o) {
    const Graph g = load_graph(o);
    ClassifyOptions copt;
    copt.oracle.max_n = o.max_n;
    const GraphClassification c = classify(g, copt);
    if (o.json) {
        print_json(classification_json(g, c));
        return ok;
    }
    std::cout << verdict_line(c.combined) << "\n";
    if (c.combined.pattern) {
        std::cout << "pattern: " << to_string(c.combined.pattern->cls);
        for (const auto& [role, v] : c.combined.pattern->roles) std::cout << ' ' << role << '=' << g.label(v);
        std::cout << " lengths:";
        for (int l : c.combined.pattern->path_lengths) std::cout << ' ' << l;
        std::cout << "\n";
    }
    if (c.combined.witness) std::cout << "witness: S=" << set_text(g, *c.combined.witness) << "\n";
    if (c.components.size() > 1)
        for (const auto& pc : c.components)
            std::cout << "  component " << set_text(g, pc.vertices) << ": " << verdict_line(pc.verdict) << "\n";
    return ok;
}

int cmd_oracle(const Options& o) {
    const Graph g = load_graph(o);
    const OracleVerdict v = unmixedness_oracle(g, {o.max_n});
    if (o.json) {
        print_json(oracle_json(g, v));
        return ok;
    }
    if (v.unmixed) {
        std::cout << "unmixed: yes\n";
    } else {
        std::cout << "unmixed: no; witness S=" << set_text(g, *v.witness) << " (b=" << v.witness_b
                  << ", |S|+b(G)=" << v.witness->size() + bipartite_component_count(g) << ")\n";
    }
    return ok;
}

int cmd_spectrum(const Options& o) {
    const Graph g = load_graph(o);
    const SpectrumReport r = spectrum_report(g, {o.max_n});
    if (o.json) {
        print_json(spectrum_json(g, r));
        return ok;
    }
    for (const auto& rec : r.records)
        std::cout << "S=" << set_text(g, rec.set) << " c=" << rec.profile.c() << " b=" << rec.profile.b()
                  << " height=" << rec.height << "\n";
    std::cout << "disconnectors: " << r.records.size() << ", krull dimension: " << r.krull_dimension
              << ", unmixed: " << (r.unmixed ? "yes" : "no") << "\n";
    return ok;
}

CliqueDecomposition decomposition_for(const Options& o, const Graph& g) {
    if (o.order.empty()) return clique_sum_order(g);
    return clique_sum_order(g, parse_clique_order(read_text(o.order), g));
}

void print_run(const Graph& g, const AlgorithmResult& r) {
    for (const StepRecord& s : r.trace) {
        std::cout << "step " << s.p << ":";
        for (const auto& it : s.iterations)
            if (it.L) std::cout << " L" << it.q << "=" << clique_text(*it.L) << " x" << it.q << "=" << g.label(*it.x);
        std::cout << "\n  D={";
        for (std::size_t i = 0; i < s.D.size(); ++i) std::cout << (i ? "," : "") << s.D[i];
        std::cout << "} A2=" << clique_text(s.A2) << " A1=" << clique_text(s.A1) << " A0=" << clique_text(s.A0)
                  << " H=" << set_text(g, s.H) << "\n";
    }
    std::cout << "H=" << set_text(g, r.H) << " S=" << set_text(g, r.S) << " S2=" << set_text(g, r.S2)
              << " S0=" << set_text(g, r.S0) << "\n";
}

int cmd_algorithm(const Options& o) {
    const Graph g = load_graph(o);
    const CliqueDecomposition d = decomposition_for(o, g);
    if (o.enumerate) {
        const RunEnumeration runs = enumerate_runs(g, d, o.limit);
        if (o.json) {
            nlohmann::json out;
            out["truncated"] = runs.truncated;
            out["runs"] = nlohmann::json::array();
            for (const auto& r : runs.results) out["runs"].push_back(trace_json(g, d, r));
            print_json(out);
            return ok;
        }
        for (const auto& r : runs.results)
            std::cout << "H=" << set_text(g, r.H) << " S=" << set_text(g, r.S) << " S2=" << set_text(g, r.S2)
                      << " S0=" << set_text(g, r.S0) << "\n";
        std::cout << runs.results.size() << " distinct result(s)" << (runs.truncated ? ", truncated" : "") << "\n";
        return ok;
    }
    RunPolicy policy;
    if (o.policy.starts_with("script=")) {
        policy.tie_break = RunPolicy::TieBreak::script;
        policy.script = parse_script(read_text(o.policy.substr(7)), g);
    } else if (o.policy != "lex") {
        throw input_error("--policy must be 'lex' or 'script=<file>'");
    }
    const AlgorithmResult r = run_algorithm(g, d, policy);
    if (o.json) {
        print_json(trace_json(g, d, r));
        return ok;
    }
    print_run(g, r);
    return ok;
}

int cmd_generate(const Options& o, const std::string& spec) {
    const Graph g = generate(family_with_seed(o, spec)).graph;
    const GraphFormat f = o.json ? GraphFormat::json : pick_format(o, "");
    std::cout << emit_graph(g, f);
    return ok;
}

int check_one(const Options& o, const Graph& g, const std::string& name) {
    const CrossCheckReport r = cross_check(g, {o.max_n, o.limit});
    const bool good = r.agree && r.violations.empty();
    if (o.json) {
        nlohmann::json j = cross_check_json(g, r);
        if (!name.empty()) j["file"] = name;
        print_json(j);
        return good ? ok : violated;
    }
    if (!name.empty()) std::cout << name << ": ";
    if (!r.oracle) {
        std::cout << "oracle skipped (n above cap); " << verdict_line(r.classification.combined) << "\n";
        return ok;
    }
    if (!good) {
        std::cout << "DISAGREE: classifier " << to_string(r.classification.combined.unmixed) << ", oracle "
                  << (r.oracle->unmixed ? "unmixed" : "not unmixed");
        for (const auto& v : r.violations) std::cout << "; " << v.invariant << ": " << v.detail;
        std::cout << "\n";
        return violated;
    }
    std::cout << "agree: " << (r.oracle->unmixed ? "unmixed" : "not unmixed");
    if (r.oracle->witness) std::cout << "; witness S=" << set_text(g, *r.oracle->witness);
    if (r.runs_checked) std::cout << "; " << r.runs_checked << " algorithm run(s) verified";
    std::cout << "\n";
    return ok;
}

int cmd_check(const Options& o) {
    if (o.dir.empty()) return check_one(o, load_graph(o), "");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    int worst = ok;
    for (const auto& f : files) {
        const Graph g = parse_graph(read_text(f.string()), pick_format(o, f.string())).graph;
        worst = std::max(worst, check_one(o, g, f.filename().string()));
    }
    return worst;
}

int cmd_dot(const Options& o) {
    const Graph g = load_graph(o);
    DotOverlay overlay;
    if (is_connected(g) && g.vertex_count() > 0) {
        overlay.pattern = match_pattern(g);
        if (o.run_overlay) {
            if (!is_chordal(g)) throw input_error("--run needs a chordal graph");
            overlay.run = run_algorithm(g, decomposition_for(o, g));
        }
    } else if (o.run_overlay) {
        throw input_error("--run needs a connected graph");
    }
    std::cout << emit_dot(g, overlay);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unmixed and Cohen-Macaulay tests for parity binomial edge ideals"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "graph file ('-' for stdin)");
        sub->add_option("--family", o.family, "generate the input instead, e.g. frak_g3:1");
        sub->add_option("--format", o.format, "input format: edgelist or json (default from extension)");
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_option("--seed", o.seed, "seed for random families given without one");
        sub->add_option("--max-n", o.max_n, "vertex cap for exhaustive subset scans");
    };

    auto* classify_cmd = app.add_subcommand("classify", "theorem-backed classification");
    add_input(classify_cmd);
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force unmixedness test");
    add_input(oracle_cmd);
    auto* spectrum_cmd = app.add_subcommand("spectrum", "sign-split disconnectors, heights, dimension");
    add_input(spectrum_cmd);
    auto* algorithm_cmd = app.add_subcommand("algorithm", "run the tree construction on a connected chordal graph");
    add_input(algorithm_cmd);
    algorithm_cmd->add_option("--policy", o.policy, "lex or script=<file>");
    algorithm_cmd->add_option("--order", o.order, "clique order file, one clique per line");
    algorithm_cmd->add_flag("--enumerate", o.enumerate, "enumerate all runs up to --limit results");
    algorithm_cmd->add_option("--limit", o.limit, "run enumeration limit");
    std::string family_arg;
    auto* generate_cmd = app.add_subcommand("generate", "print a named graph");
    generate_cmd->add_option("family", family_arg, "family spec, e.g. frak_g1:1,2,3")->required();
    generate_cmd->add_option("--format", o.format, "output format: edgelist or json");
    generate_cmd->add_flag("--json", o.json, "JSON graph output");
    generate_cmd->add_option("--seed", o.seed, "seed for random families given without one");
    auto* check_cmd = app.add_subcommand("check", "classifier against oracle and algorithm invariants");
    add_input(check_cmd);
    check_cmd->add_option("--limit", o.limit, "run enumeration limit");
    check_cmd->add_option("--dir", o.dir, "check every graph file in a directory");
    auto* m2_cmd = app.add_subcommand("emit-m2", "Macaulay2 script for dim and depth");
    add_input(m2_cmd);
    auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
    add_input(dot_cmd);
    dot_cmd->add_flag("--run", o.run_overlay, "overlay the default algorithm run");
    dot_cmd->add_option("--order", o.order, "clique order file for --run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*classify_cmd) return cmd_classify(o);
        if (*oracle_cmd) return cmd_oracle(o);
        if (*spectrum_cmd) return cmd_spectrum(o);
        if (*algorithm_cmd) return cmd_algorithm(o);
        if (*generate_cmd) return cmd_generate(o, family_arg);
        if (*check_cmd) return cmd_check(o);
        if (*m2_cmd) {
            std::cout << emit_m2_script(load_graph(o));
            return ok;
        }
        if (*dot_cmd) return cmd_dot(o);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return over_cap;
    } catch (const invariant_violation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return violated;
    }
    return usage;
}
