#include "cowkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cowkit/fpt.hpp"
#include "cowkit/io.hpp"
#include "cowkit/oracle.hpp"
#include "cowkit/patterns.hpp"
#include "cowkit/reductions.hpp"
#include "cowkit/solvers.hpp"

namespace cowkit::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsolved = 3;

std::string fnv1a_hex(std::string_view data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

json witness_to_json(const Witness& w) {
    json sets = json::array();
    for (const auto& s : w.sets) sets.push_back(set_to_json(s));
    return json{{"type", "witness"}, {"sets", std::move(sets)}};
}

json clique_cover_to_json(const CliqueCover& c) {
    json cliques = json::array();
    for (const auto& q : c.cliques) cliques.push_back(set_to_json(q));
    return json{{"type", "clique_cover"}, {"cliques", std::move(cliques)}};
}

json biclique_cover_to_json(const BicliqueCover& c) {
    json bicliques = json::array();
    for (const auto& b : c.bicliques)
        bicliques.push_back(json{{"x", set_to_json(b.x_part)}, {"y", set_to_json(b.y_part)}});
    return json{{"type", "biclique_cover"}, {"bicliques", std::move(bicliques)}};
}

json trace_to_json(const KernelTrace& t) {
    int universal = 0, merged = 0, decrements = 0;
    for (const auto& s : t.steps) {
        if (s.kind == KernelStepKind::remove_universal) ++universal;
        if (s.kind == KernelStepKind::merge_false_twins) ++merged;
        if (s.kind == KernelStepKind::twin_universal_decrement) ++decrements;
    }
    return json{{"parameter_delta", t.parameter_delta},
                {"steps", static_cast<int>(t.steps.size())},
                {"removed_universal", universal},
                {"merged_twins", merged},
                {"decrements", decrements}};
}

std::string set_to_text(const VertexSet& s, const std::vector<std::string>& labels) {
    std::string out = "{";
    bool sep = false;
    for (int v : s) {
        if (sep) out += ", ";
        out += labels.empty() ? std::to_string(v) : labels[v];
        sep = true;
    }
    return out + "}";
}

struct CommonOptions {
    std::string graph6_arg;
    std::string file_arg;
    bool json_out = false;
    bool no_timings = false;
};

struct Timings {
    double parse_ms = 0;
    double solve_ms = 0;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Graph load_graph(const CommonOptions& opt, std::istream& in) {
    if (!opt.graph6_arg.empty()) return parse_graph6(opt.graph6_arg);
    if (!opt.file_arg.empty()) {
        std::ifstream f(opt.file_arg);
        if (!f) throw Error("cannot open file: " + opt.file_arg);
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_any(buf.str());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_any(buf.str());
}

json input_block(const Graph& g) {
    std::string g6 = emit_graph6(g);
    return json{{"n", g.order()},
                {"edges", g.edge_count()},
                {"graph6", g6},
                {"digest", fnv1a_hex(g6)}};
}

void attach_common(CLI::App* cmd, CommonOptions& opt) {
    auto* a = cmd->add_option("--graph6", opt.graph6_arg, "graph6 string input");
    auto* b = cmd->add_option("--file", opt.file_arg, "read the graph from a file");
    a->excludes(b);
    cmd->add_flag("--json", opt.json_out, "emit a JSON result document");
    cmd->add_flag("--no-timings", opt.no_timings, "omit timings from the document");
}

OracleLimits limits_from_env() {
    OracleLimits limits;
    if (const char* s = std::getenv("COWKIT_LIMIT_N")) {
        int v = std::atoi(s);
        if (v > 0) limits.max_vertices = v;
    }
    return limits;
}

void emit(const CommonOptions& opt, std::ostream& out, json& doc, const Timings& t,
          const std::string& human) {
    if (opt.json_out) {
        if (!opt.no_timings)
            doc["timings"] = json{{"parse_ms", t.parse_ms}, {"solve_ms", t.solve_ms}};
        out << doc.dump(2) << "\n";
    } else {
        out << human;
    }
}

std::string describe_witness(const Witness& w, const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < w.sets.size(); ++i)
        out += "  N" + std::to_string(i + 1) + " = " + set_to_text(w.sets[i], labels) + "\n";
    return out;
}

// ---- cow ------------------------------------------------------------------

struct CowOptions : CommonOptions {
    bool exact = false;
    bool fpt = false;
    bool auto_mode = false;
    int k = -1;
    bool has_k = false;
};

int run_cow(const CowOptions& opt, std::istream& in, std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = load_graph(opt, in);
    t.parse_ms = ms_since(t0);
    SolverConfig config{limits_from_env(), 20};

    json doc{{"tool", "cowkit"}, {"problem", "cow"}, {"input", input_block(g)}};
    t0 = Clock::now();

    if (opt.has_k && opt.fpt) {
        // Pure decision mode.
        std::optional<Witness> w = decide_k(g, opt.k);
        t.solve_ms = ms_since(t0);
        doc["status"] = w ? "yes" : "no";
        doc["k"] = opt.k;
        std::string human = "cow(G) <= " + std::to_string(opt.k) + ": " + (w ? "yes" : "no") + "\n";
        if (w) {
            if (auto bad = verify_witness(g, *w)) throw Error("internal: " + bad->message);
            doc["certificate"] = witness_to_json(*w);
            human += describe_witness(*w, g.labels());
        }
        emit(opt, out, doc, t, human);
        return w ? exit_ok : exit_no;
    }

    std::optional<SolveResult> res;
    if (opt.exact) {
        try {
            CowResult r = exact_cow(g, config.limits);
            res = SolveResult{r.width, std::move(r.witness), Method::oracle, {}};
        } catch (const LimitError& e) {
            t.solve_ms = ms_since(t0);
            doc["status"] = "unsolved";
            doc["reason"] = e.what();
            std::string human = std::string("unsolved: ") + e.what() + "\n";
            emit(opt, out, doc, t, human);
            return exit_unsolved;
        }
    } else if (opt.fpt) {
        res = fpt_cow(g, config);
    } else {
        res = dispatch(g, config);
    }
    t.solve_ms = ms_since(t0);

    if (!res) {
        doc["status"] = "unsolved";
        doc["reason"] = "instance exceeds the configured solver limits";
        emit(opt, out, doc, t, "unsolved: instance exceeds the configured solver limits\n");
        return exit_unsolved;
    }
    if (auto bad = verify_witness(g, res->witness)) throw Error("internal: " + bad->message);

    if (opt.has_k) {
        bool yes = res->width <= opt.k;
        doc["status"] = yes ? "yes" : "no";
        doc["k"] = opt.k;
        doc["value"] = res->width;
        doc["method"] = to_string(res->method);
        doc["reduction"] = trace_to_json(res->reduction_prefix);
        if (yes) doc["certificate"] = witness_to_json(res->witness);
        std::string human = "cow(G) = " + std::to_string(res->width) + ", so cow(G) <= " +
                            std::to_string(opt.k) + ": " + (yes ? "yes" : "no") + "\n";
        emit(opt, out, doc, t, human);
        return yes ? exit_ok : exit_no;
    }

    doc["status"] = "solved";
    doc["value"] = res->width;
    doc["method"] = to_string(res->method);
    doc["reduction"] = trace_to_json(res->reduction_prefix);
    doc["certificate"] = witness_to_json(res->witness);
    std::string human =
        "cow(G) = " + std::to_string(res->width) + "  [method: " + to_string(res->method) + "]\n";
    if (!res->witness.sets.empty())
        human += "witness:\n" + describe_witness(res->witness, g.labels());
    emit(opt, out, doc, t, human);
    return exit_ok;
}

// ---- ecc ------------------------------------------------------------------

int run_ecc(const CommonOptions& opt, std::istream& in, std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = load_graph(opt, in);
    t.parse_ms = ms_since(t0);
    json doc{{"tool", "cowkit"}, {"problem", "ecc"}, {"input", input_block(g)}};
    t0 = Clock::now();
    EccResult r;
    try {
        r = exact_ecc(g, limits_from_env());
    } catch (const LimitError& e) {
        t.solve_ms = ms_since(t0);
        doc["status"] = "unsolved";
        doc["reason"] = e.what();
        emit(opt, out, doc, t, std::string("unsolved: ") + e.what() + "\n");
        return exit_unsolved;
    }
    t.solve_ms = ms_since(t0);
    if (auto bad = verify_cover(g, r.cover)) throw Error("internal: " + bad->message);
    doc["status"] = "solved";
    doc["value"] = r.count;
    doc["method"] = "oracle";
    doc["certificate"] = clique_cover_to_json(r.cover);
    std::string human = "theta_e(G) = " + std::to_string(r.count) + "\ncliques:\n";
    for (size_t i = 0; i < r.cover.cliques.size(); ++i)
        human += "  Q" + std::to_string(i + 1) + " = " + set_to_text(r.cover.cliques[i], g.labels()) + "\n";
    emit(opt, out, doc, t, human);
    return exit_ok;
}

// ---- biclique ---------------------------------------------------------------

int run_biclique(const CommonOptions& opt, std::istream& in, std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = load_graph(opt, in);
    t.parse_ms = ms_since(t0);
    json doc{{"tool", "cowkit"}, {"problem", "biclique"}, {"input", input_block(g)}};
    auto b = bipartition(g);
    if (!b) throw DomainError("biclique cover needs a bipartite graph");
    t0 = Clock::now();
    BicliqueResult r;
    try {
        r = exact_biclique_cover(g, *b, limits_from_env());
    } catch (const LimitError& e) {
        t.solve_ms = ms_since(t0);
        doc["status"] = "unsolved";
        doc["reason"] = e.what();
        emit(opt, out, doc, t, std::string("unsolved: ") + e.what() + "\n");
        return exit_unsolved;
    }
    t.solve_ms = ms_since(t0);
    if (auto bad = verify_cover(g, r.cover)) throw Error("internal: " + bad->message);
    doc["status"] = "solved";
    doc["value"] = r.count;
    doc["method"] = "oracle";
    doc["bipartition"] = json{{"x_side", set_to_json(b->x_side)}, {"y_side", set_to_json(b->y_side)}};
    doc["certificate"] = biclique_cover_to_json(r.cover);
    std::string human = "bd(G) = " + std::to_string(r.count) + "\nbicliques:\n";
    for (size_t i = 0; i < r.cover.bicliques.size(); ++i)
        human += "  B" + std::to_string(i + 1) + " = " +
                 set_to_text(r.cover.bicliques[i].x_part, g.labels()) + " x " +
                 set_to_text(r.cover.bicliques[i].y_part, g.labels()) + "\n";
    emit(opt, out, doc, t, human);
    return exit_ok;
}

// ---- recognize ---------------------------------------------------------------

int run_recognize(const CommonOptions& opt, std::istream& in, std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = load_graph(opt, in);
    t.parse_ms = ms_since(t0);
    json doc{{"tool", "cowkit"}, {"problem", "recognize"}, {"input", input_block(g)}};
    t0 = Clock::now();

    bool is_complete = g.edge_count() == static_cast<long>(g.order()) * (g.order() - 1) / 2;
    auto chain = chain_ordering(g);
    auto split = split_partition(g);
    auto pseudo = pseudo_split_partition(g);
    SmallWidth cls = small_width_class(g, ClassifyMethod::forbidden);
    std::optional<ForbiddenHit> blocker;
    if (cls == SmallWidth::w2 || cls == SmallWidth::w3)
        blocker = find_forbidden(g, static_cast<int>(cls) - 1);
    else if (cls == SmallWidth::more)
        blocker = find_forbidden(g, 3);
    std::optional<Witness> width_witness;
    if (cls != SmallWidth::more) width_witness = decide_k(g, static_cast<int>(cls));
    t.solve_ms = ms_since(t0);

    doc["status"] = "solved";
    doc["value"] = to_string(cls);
    doc["classes"] = json{{"complete", is_complete},
                          {"chain", chain.has_value()},
                          {"split", split.has_value()},
                          {"pseudo_split", pseudo.has_value()},
                          {"width_class", to_string(cls)}};
    json certs = json::object();
    if (chain)
        certs["chain"] = json{{"x_side", set_to_json(chain->first.x_side)},
                              {"y_side", set_to_json(chain->first.y_side)},
                              {"order", json(chain->second.order)}};
    if (split)
        certs["split"] = json{{"clique", set_to_json(split->clique_part)},
                              {"stable", set_to_json(split->stable_part)}};
    if (pseudo)
        certs["pseudo_split"] = json{{"clique", set_to_json(pseudo->clique_part)},
                                     {"stable", set_to_json(pseudo->stable_part)},
                                     {"cycle", json(pseudo->cycle)}};
    json width = json::object();
    if (width_witness) {
        if (auto bad = verify_witness(g, *width_witness)) throw Error("internal: " + bad->message);
        width["witness"] = witness_to_json(*width_witness)["sets"];
    }
    if (blocker)
        width["blocker"] = json{{"pattern", blocker->name}, {"embedding", json(blocker->embedding)}};
    certs["width"] = std::move(width);
    doc["certificates"] = std::move(certs);

    std::string human;
    human += "n = " + std::to_string(g.order()) + ", edges = " + std::to_string(g.edge_count()) + "\n";
    human += std::string("complete: ") + (is_complete ? "yes" : "no") + "\n";
    human += std::string("chain: ") + (chain ? "yes" : "no") + "\n";
    human += std::string("split: ") + (split ? "yes" : "no") + "\n";
    human += std::string("pseudo-split: ") + (pseudo ? "yes" : "no") + "\n";
    if (cls == SmallWidth::more) {
        human += "width class: more (above 3";
        if (blocker) human += "; contains " + blocker->name;
        human += ")\n";
    } else if (cls == SmallWidth::w0) {
        human += "width class: 0 (complete)\n";
    } else {
        human += "width class: <= " + to_string(cls);
        if (blocker)
            human += " (not <= " + std::to_string(static_cast<int>(cls) - 1) + ": contains " +
                     blocker->name + ")";
        else
            human += " (not <= 0: not complete)";
        human += "\n";
        if (width_witness) human += "witness:\n" + describe_witness(*width_witness, g.labels());
    }
    emit(opt, out, doc, t, human);
    return exit_ok;
}

// ---- transform ---------------------------------------------------------------

int run_transform(const CommonOptions& opt, int k, std::istream& in, std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = load_graph(opt, in);
    t.parse_ms = ms_since(t0);
    auto b = bipartition(g);
    if (!b) throw DomainError("transform biclique2cow needs a bipartite graph");
    t0 = Clock::now();
    ReducedInstance r = biclique_to_cow(g, *b, k);
    t.solve_ms = ms_since(t0);
    json doc{{"tool", "cowkit"}, {"problem", "transform"}, {"input", input_block(g)}};
    doc["status"] = "solved";
    doc["certificate"] = json{{"type", "reduced_instance"},
                              {"graph6", emit_graph6(r.g_prime)},
                              {"n", r.g_prime.order()},
                              {"k_prime", r.k_prime},
                              {"x_apex", r.x_apex},
                              {"y_apex", r.y_apex},
                              {"x_side", set_to_json(r.source_bipartition.x_side)},
                              {"y_side", set_to_json(r.source_bipartition.y_side)},
                              {"index_map", json(r.index_map)}};
    std::string human = "reduced instance: cow target k' = " + std::to_string(r.k_prime) + "\n";
    human += "g' = " + emit_graph6(r.g_prime) + "  (n = " + std::to_string(r.g_prime.order()) + ")\n";
    human += "x apex = " + std::to_string(r.x_apex) + ", y apex = " + std::to_string(r.y_apex) + "\n";
    emit(opt, out, doc, t, human);
    return exit_ok;
}

// ---- gen ---------------------------------------------------------------

int run_gen_gk(const CommonOptions& opt, int k, std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = gk(k);
    t.solve_ms = ms_since(t0);
    if (!opt.json_out) {
        out << emit_graph6(g) << "\n";
        return exit_ok;
    }
    json doc{{"tool", "cowkit"}, {"problem", "gen"}, {"status", "solved"},
             {"k", k},           {"n", g.order()},   {"graph6", emit_graph6(g)},
             {"labels", json(g.labels())}};
    emit(opt, out, doc, t, "");
    return exit_ok;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const CommonOptions& opt, const std::string& witness_file, std::istream& in,
               std::ostream& out) {
    Timings t;
    auto t0 = Clock::now();
    Graph g = load_graph(opt, in);
    std::ifstream wf(witness_file);
    if (!wf) throw Error("cannot open witness file: " + witness_file);
    json payload = json::parse(wf, nullptr, true, true);
    if (payload.contains("certificate")) payload = payload["certificate"];
    t.parse_ms = ms_since(t0);

    std::string type = payload.value("type", "");
    std::optional<Violation> violation;
    t0 = Clock::now();
    auto parse_sets = [&](const json& arr) {
        std::vector<VertexSet> sets;
        for (const auto& a : arr) {
            VertexSet s(g.order());
            for (const auto& v : a) {
                int idx = v.get<int>();
                g.check_vertex(idx);
                s.set(idx);
            }
            sets.push_back(std::move(s));
        }
        return sets;
    };
    if (type == "witness") {
        violation = verify_witness(g, Witness{parse_sets(payload.at("sets"))});
    } else if (type == "clique_cover") {
        violation = verify_cover(g, CliqueCover{parse_sets(payload.at("cliques"))});
    } else if (type == "biclique_cover") {
        BicliqueCover c;
        for (const auto& b : payload.at("bicliques")) {
            Biclique bc{VertexSet(g.order()), VertexSet(g.order())};
            for (const auto& v : b.at("x")) bc.x_part.set(v.get<int>());
            for (const auto& v : b.at("y")) bc.y_part.set(v.get<int>());
            c.bicliques.push_back(std::move(bc));
        }
        violation = verify_cover(g, c);
    } else {
        throw DomainError("unknown certificate type: '" + type + "'");
    }
    t.solve_ms = ms_since(t0);

    json doc{{"tool", "cowkit"}, {"problem", "verify"}, {"input", input_block(g)}};
    doc["status"] = violation ? "violation" : "ok";
    if (violation) doc["violation"] = json{{"message", violation->message}};
    std::string human =
        violation ? ("violation: " + violation->message + "\n") : std::string("ok\n");
    emit(opt, out, doc, t, human);
    return violation ? exit_no : exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"complete width and edge clique cover toolkit"};
    app.require_subcommand(1);

    CowOptions cow_opt;
    auto* cow_cmd = app.add_subcommand("cow", "compute the complete width");
    attach_common(cow_cmd, cow_opt);
    auto* f_exact = cow_cmd->add_flag("--exact", cow_opt.exact, "exact oracle only");
    auto* f_fpt = cow_cmd->add_flag("--fpt", cow_opt.fpt, "kernelize + decision procedure");
    auto* f_auto = cow_cmd->add_flag("--auto", cow_opt.auto_mode, "route to the best solver (default)");
    f_exact->excludes(f_fpt)->excludes(f_auto);
    f_fpt->excludes(f_auto);
    auto* k_opt = cow_cmd->add_option("--k", cow_opt.k, "decide cow(G) <= k instead of computing");

    CommonOptions ecc_opt;
    auto* ecc_cmd = app.add_subcommand("ecc", "compute the edge clique cover number");
    attach_common(ecc_cmd, ecc_opt);

    CommonOptions bic_opt;
    auto* bic_cmd = app.add_subcommand("biclique", "compute the bipartite dimension");
    attach_common(bic_cmd, bic_opt);

    CommonOptions rec_opt;
    auto* rec_cmd = app.add_subcommand("recognize", "report graph classes and small width");
    attach_common(rec_cmd, rec_opt);

    CommonOptions tr_opt;
    int tr_k = 0;
    auto* tr_cmd = app.add_subcommand("transform", "instance transformations");
    auto* b2c_cmd = tr_cmd->add_subcommand("biclique2cow", "biclique cover -> complete width");
    attach_common(b2c_cmd, tr_opt);
    b2c_cmd->add_option("--k", tr_k, "biclique cover budget")->required();
    tr_cmd->require_subcommand(1);

    CommonOptions gen_opt;
    int gen_k = 0;
    auto* gen_cmd = app.add_subcommand("gen", "generate named graphs");
    auto* gk_cmd = gen_cmd->add_subcommand("gk", "prototype graph G[k] on all subsets of {1..k}");
    gk_cmd->add_flag("--json", gen_opt.json_out, "emit a JSON document");
    gk_cmd->add_flag("--no-timings", gen_opt.no_timings, "omit timings from the document");
    gk_cmd->add_option("--k", gen_k, "parameter k")->required();
    gen_cmd->require_subcommand(1);

    CommonOptions ver_opt;
    std::string witness_file;
    auto* ver_cmd = app.add_subcommand("verify", "re-verify an emitted certificate");
    attach_common(ver_cmd, ver_opt);
    ver_cmd->add_option("--witness", witness_file, "certificate JSON file")->required();

    std::vector<const char*> argv;
    argv.push_back("cowkit");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(cow_cmd)) {
            cow_opt.has_k = k_opt->count() > 0;
            return run_cow(cow_opt, in, out);
        }
        if (app.got_subcommand(ecc_cmd)) return run_ecc(ecc_opt, in, out);
        if (app.got_subcommand(bic_cmd)) return run_biclique(bic_opt, in, out);
        if (app.got_subcommand(rec_cmd)) return run_recognize(rec_opt, in, out);
        if (app.got_subcommand(tr_cmd)) return run_transform(tr_opt, tr_k, in, out);
        if (app.got_subcommand(gen_cmd)) return run_gen_gk(gen_opt, gen_k, out);
        if (app.got_subcommand(ver_cmd)) return run_verify(ver_opt, witness_file, in, out);
    } catch (const LimitError& e) {
        err << "unsolved: " << e.what() << "\n";
        return exit_unsolved;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace cowkit::cli
