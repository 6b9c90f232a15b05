// heavypath: cycles and paths through high-degree vertices, exceptional-family
// constructors/recognizers, and a desk-scale theorem verification harness.
//
// Exit codes: 0 success / zero counterexamples, 1 usage error, 2 graph parse
// error, 3 counterexample found.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "heavypath/json_io.hpp"

namespace hp = heavypath;

namespace {

constexpr const char* kVersion = "heavypath 1.0.0 (graph6 format, single-byte size)";

struct ParseExit {
    int code;
    std::string message;
};

std::string slurp_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "-" reads stdin; an existing file is read; otherwise the argument itself is
// taken as a graph6 line. File contents with a space in the first line are
// parsed as the edge-list format, else as graph6.
hp::Graph load_graph(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        text = slurp_stream(std::cin);
    } else if (std::ifstream f(arg); f.good()) {
        text = slurp_stream(f);
    } else {
        text = arg;
    }
    // trim trailing whitespace/newlines
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    if (text.empty()) throw ParseExit{2, "empty graph input"};
    std::string first_line = text.substr(0, text.find('\n'));
    try {
        if (first_line.find(' ') != std::string::npos) return hp::parse_edge_list(text);
        return hp::parse_graph6(first_line);
    } catch (const hp::Graph6Error& e) {
        throw ParseExit{2, std::string("graph6 parse error at byte ") +
                               std::to_string(e.offset()) + ": " + e.what()};
    } catch (const std::exception& e) {
        throw ParseExit{2, std::string("graph parse error: ") + e.what()};
    }
}

std::vector<std::string> load_graph6_lines(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        text = slurp_stream(std::cin);
    } else {
        std::ifstream f(arg);
        if (!f.good()) throw ParseExit{2, "cannot open graph6 file: " + arg};
        text = slurp_stream(f);
    }
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseExit{1, "bad vertex list entry: " + tok};
        }
    }
    return out;
}

void print_json(const hp::ordered_json& j, bool compact) {
    if (compact)
        std::cout << j.dump() << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

hp::VertexSet through_set(const hp::Graph& g, const std::string& spec, int threshold) {
    if (spec == "all") return hp::VertexSet::full(g.order());
    if (spec == "heavy") return hp::degree_at_least(g, threshold);
    hp::VertexSet s(g.order());
    for (int v : parse_vertex_list(spec)) {
        if (v < 0 || v >= g.order()) throw ParseExit{1, "--through vertex out of range"};
        s.set(v);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycles and paths through high-degree vertices"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);
    app.fallthrough();  // let subcommands see the global --json-compact flag
    bool compact = false;
    app.add_flag("--json-compact", compact, "single-line JSON output");

    // construct
    auto* construct = app.add_subcommand("construct", "emit an exceptional-family graph as graph6");
    std::string family;
    int c_n = 0, c_omega = 0;
    uint64_t extra_seed = 0;
    bool has_extra = false;
    construct->add_option("family", family, "cycle-exception | path-exception | h1xyh2 | h-upper")
        ->required();
    construct->add_option("--n", c_n, "order")->required();
    construct->add_option("--omega", c_omega, "clique parameter")->required();
    construct->add_option("--extra-edges", extra_seed,
                          "h1xyh2 only: add a seeded random subset of allowed edges")
        ->each([&](const std::string&) { has_extra = true; });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "structural invariants and family matches");
    std::string a_input = "-";
    analyze->add_option("input", a_input, "graph6 string, file, or - for stdin");

    // find-cycle
    auto* fcycle = app.add_subcommand("find-cycle", "exact cycle through a required vertex set");
    std::string fc_through = "heavy", fc_input = "-";
    fcycle->add_option("--through", fc_through, "heavy | all | v1,v2,...");
    fcycle->add_option("input", fc_input, "graph input");

    // find-path
    auto* fpath = app.add_subcommand("find-path", "exact (u,v)-path through a required vertex set");
    int fp_from = -1, fp_to = -1;
    std::string fp_through = "heavy", fp_input = "-";
    fpath->add_option("--from", fp_from, "endpoint u")->required();
    fpath->add_option("--to", fp_to, "endpoint v")->required();
    fpath->add_option("--through", fp_through, "heavy | all | v1,v2,...");
    fpath->add_option("input", fp_input, "graph input");

    // repair
    auto* repair_cmd = app.add_subcommand("repair", "repair an ore path into a genuine path");
    std::string r_graph, r_seq;
    repair_cmd->add_option("--graph", r_graph, "graph input")->required();
    repair_cmd->add_option("--seq", r_seq, "comma-separated ore path, e.g. 0,4")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem over a graph corpus");
    std::string v_theorem, v_graph6, v_filter, v_json_path;
    int v_exhaustive = -1;
    std::vector<std::string> v_random;
    int v_jobs = 1;
    bool v_allow_large = false;
    verify->add_option("--theorem", v_theorem, "theorem tag")->required();
    verify->add_option("--exhaustive", v_exhaustive, "all labeled graphs of this order");
    verify->add_option("--graph6", v_graph6, "graph6 file or - for stdin");
    verify->add_option("--random", v_random, "N P COUNT SEED")->expected(4);
    verify->add_option("--filter", v_filter, "comma list: 2conn, deltaomega");
    verify->add_option("--jobs", v_jobs, "worker threads (0 = hardware)");
    verify->add_option("--json", v_json_path, "also write the JSON report to this path");
    verify->add_flag("--allow-large", v_allow_large, "permit --exhaustive 8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*construct) {
            hp::Graph g = [&] {
                if (family == "cycle-exception") return hp::build_cycle_exception(c_n, c_omega);
                if (family == "path-exception") return hp::build_path_exception(c_n, c_omega);
                if (family == "h-upper") return hp::build_h_upper(c_n, c_omega);
                if (family == "h1xyh2")
                    return has_extra ? hp::sandwich_sample(c_n, c_omega, extra_seed)
                                     : hp::build_h1xyh2(c_n, c_omega);
                throw ParseExit{1, "unknown family: " + family};
            }();
            std::cout << hp::emit_graph6(g) << "\n";
            return 0;
        }

        if (*analyze) {
            hp::Graph g = load_graph(a_input);
            print_json(hp::analyze_to_json(g), compact);
            return 0;
        }

        if (*fcycle) {
            hp::Graph g = load_graph(fc_input);
            if (fc_through == "heavy") {
                print_json(hp::verdict_to_json(hp::heavy_cycle(g)), compact);
                return 0;
            }
            hp::VertexSet req = through_set(g, fc_through, 0);
            auto c = hp::find_cycle_through(g, req);
            hp::ordered_json j;
            j["kind"] = c ? "witness" : "none";
            if (c) j["cycle"] = c->vertices();
            print_json(j, compact);
            return 0;
        }

        if (*fpath) {
            hp::Graph g = load_graph(fp_input);
            if (fp_from < 0 || fp_from >= g.order() || fp_to < 0 || fp_to >= g.order())
                throw ParseExit{1, "--from/--to out of range"};
            if (fp_through == "heavy") {
                print_json(hp::verdict_to_json(hp::heavy_uv_path(g, fp_from, fp_to)), compact);
                return 0;
            }
            hp::VertexSet req = through_set(g, fp_through, 0);
            auto p = hp::find_path_through(g, fp_from, fp_to, req);
            hp::ordered_json j;
            j["kind"] = p ? "witness" : "none";
            if (p) j["path"] = p->vertices();
            print_json(j, compact);
            return 0;
        }

        if (*repair_cmd) {
            hp::Graph g = load_graph(r_graph);
            std::vector<int> seq = parse_vertex_list(r_seq);
            hp::OrePath op = hp::validate_ore_path(g, seq);
            hp::RepairResult rr = hp::repair(g, op);
            print_json(hp::repair_to_json(rr), compact);
            return 0;
        }

        if (*verify) {
            auto theorem = hp::parse_theorem_tag(v_theorem);
            if (!theorem) throw ParseExit{1, "unknown theorem tag: " + v_theorem};
            hp::CorpusSpec corpus;
            int sources = (v_exhaustive >= 0) + !v_graph6.empty() + !v_random.empty();
            if (sources != 1)
                throw ParseExit{1, "verify needs exactly one of --exhaustive / --graph6 / --random"};
            if (v_exhaustive >= 0) {
                corpus.source = hp::CorpusSpec::Source::Exhaustive;
                corpus.n = v_exhaustive;
                corpus.allow_large = v_allow_large;
            } else if (!v_graph6.empty()) {
                corpus.source = hp::CorpusSpec::Source::Graph6;
                corpus.graph6_lines = load_graph6_lines(v_graph6);
            } else {
                corpus.source = hp::CorpusSpec::Source::Random;
                corpus.n = std::stoi(v_random[0]);
                corpus.p = std::stod(v_random[1]);
                corpus.count = std::stoull(v_random[2]);
                corpus.seed = std::stoull(v_random[3]);
            }
            std::istringstream fin(v_filter);
            std::string tok;
            while (std::getline(fin, tok, ',')) {
                if (tok == "2conn")
                    corpus.filter_two_connected = true;
                else if (tok == "deltaomega")
                    corpus.filter_delta_omega = true;
                else if (!tok.empty())
                    throw ParseExit{1, "unknown filter: " + tok};
            }
            if (v_jobs == 0) v_jobs = int(std::thread::hardware_concurrency());
            hp::VerificationReport rep = hp::verify_theorem(corpus, *theorem, v_jobs);
            hp::ordered_json j = hp::report_to_json(rep);
            print_json(j, compact);
            if (!v_json_path.empty()) {
                std::ofstream out(v_json_path);
                out << j.dump(2) << "\n";
            }
            return rep.counterexamples == 0 ? 0 : 3;
        }

        std::cout << app.help() << "\n";
        return 1;
    } catch (const ParseExit& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const hp::Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
