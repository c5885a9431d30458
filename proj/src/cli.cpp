#include "tfg/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfg/constructions.hpp"
#include "tfg/error.hpp"
#include "tfg/frame.hpp"
#include "tfg/io.hpp"
#include "tfg/linegraph.hpp"
#include "tfg/verify.hpp"

namespace tfg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    double tol = TolerancePolicy::kDefault;
    std::string out_path;
    std::uint64_t seed = 1;
    std::size_t max_n = 0;
    std::string format = "text";
    bool unoriented = false;
    std::vector<std::size_t> keep;
    std::string expected_graph;
    std::size_t erasures = 1;
};

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::size_t to_count(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (!s.empty() && s.front() == '-') throw std::invalid_argument(s);
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("expected a non-negative integer, got '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("expected a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("expected a number, got '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("expected a number, got '" + s + "'");
    return v;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

class Runner {
public:
    Runner(Config cfg, std::istream& in, std::ostream& out) : cfg_(std::move(cfg)), in_(in), out_(out) {}

    int gen(const std::vector<std::string>& a);
    int linegraph(const std::vector<std::string>& a);
    int rootgraph(const std::vector<std::string>& a);
    int incidence(const std::vector<std::string>& a);
    int frame(const std::vector<std::string>& a);
    int complete(const std::vector<std::string>& a);
    int check(const std::vector<std::string>& a);
    int classify(const std::vector<std::string>& a);
    int sweep(const std::vector<std::string>& a);

private:
    TolerancePolicy tol() const { return TolerancePolicy(cfg_.tol); }
    bool json() const { return cfg_.format == "json"; }

    std::string read_source(const std::string& path);
    Graph read_graph(const std::vector<std::string>& a, std::size_t index);
    Frame read_frame(const std::vector<std::string>& a, std::size_t index);
    void emit(const std::string& text);
    void emit_report(const Json& report, const std::string& text);

    Config cfg_;
    std::istream& in_;
    std::ostream& out_;
};

std::string Runner::read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Graph Runner::read_graph(const std::vector<std::string>& a, std::size_t index) {
    const std::string text = read_source(index < a.size() ? a[index] : "");
    if (looks_like_matrix(text)) throw UsageError("expected a graph, got a matrix");
    return parse_graph(text);
}

Frame Runner::read_frame(const std::vector<std::string>& a, std::size_t index) {
    const std::string text = read_source(index < a.size() ? a[index] : "");
    if (!looks_like_matrix(text)) throw UsageError("expected a frame (matrix format), got a graph");
    return Frame(parse_matrix(text), tol());
}

void Runner::emit(const std::string& text) {
    if (cfg_.out_path.empty()) {
        out_ << text;
        return;
    }
    std::ofstream file(cfg_.out_path);
    if (!file) throw UsageError("cannot write '" + cfg_.out_path + "'");
    file << text;
}

void Runner::emit_report(const Json& report, const std::string& text) {
    if (json())
        out_ << report.dump(2) << "\n";
    else
        out_ << text;
}

// ---------------------------------------------------------------------------

int Runner::gen(const std::vector<std::string>& a) {
    if (a.empty()) throw UsageError("gen needs a family");
    const std::string& name = a[0];
    auto param = [&](std::size_t k) -> std::size_t {
        if (k >= a.size()) throw UsageError("gen " + name + ": missing parameter");
        return to_count(a[k]);
    };
    auto expect = [&](std::size_t count) {
        if (a.size() != count + 1) throw UsageError("gen " + name + " takes " + std::to_string(count) + " parameter(s)");
    };
    auto named = [&](Family f, std::size_t count) {
        expect(count);
        std::vector<int> params;
        for (std::size_t k = 1; k <= count; ++k) params.push_back(static_cast<int>(param(k)));
        return gen_named({f, params});
    };

    Graph g;
    if (name == "complete") g = named(Family::Complete, 1);
    else if (name == "path") g = named(Family::Path, 1);
    else if (name == "cycle") g = named(Family::Cycle, 1);
    else if (name == "star") g = named(Family::Star, 1);
    else if (name == "bipartite") g = named(Family::CompleteBipartite, 2);
    else if (name == "o") g = named(Family::O, 1);
    else if (name == "diamond") g = named(Family::Diamond, 0);
    else if (name == "hypercube") g = named(Family::Hypercube, 1);
    else if (name == "beineke") g = named(Family::Beineke, 1);
    else if (name == "edgeless") g = named(Family::Edgeless, 1);
    else if (name == "k2kn") {
        expect(1);
        g = cartesian_product(tfg::complete(2), tfg::complete(param(1)));
    } else if (name == "random") {
        expect(2);
        const std::size_t n = param(1);
        const double p = to_double(a[2]);
        if (n < 1 || !(p >= 0.0 && p <= 1.0)) throw UsageError("gen random needs n >= 1 and 0 <= p <= 1");
        std::mt19937_64 rng(cfg_.seed);
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        g = Graph(n, std::move(edges));
    } else {
        throw UsageError("unknown family '" + name + "'");
    }
    emit(format_graph(g));
    return kPositive;
}

int Runner::linegraph(const std::vector<std::string>& a) {
    emit(format_graph(line_graph(read_graph(a, 0)).line));
    return kPositive;
}

int Runner::rootgraph(const std::vector<std::string>& a) {
    const Graph g = read_graph(a, 0);
    std::vector<Graph> roots;
    try {
        roots = root_graph(g);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotALineGraph) throw;
        const LineGraphVerdict v = is_line_graph(g);
        std::string text = "not a line graph: contains G" + std::to_string(v.beineke_index) + "\n";
        out_ << text;
        return kNegative;
    }
    std::string text;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k > 0) text += "# alternative root\n";
        text += format_graph(roots[k]);
    }
    emit(text);
    return kPositive;
}

int Runner::incidence(const std::vector<std::string>& a) {
    const Graph g = read_graph(a, 0);
    const IncidenceMatrix b = cfg_.unoriented ? unoriented_incidence(g) : oriented_incidence(g);
    emit(format_matrix(b.matrix));
    return kPositive;
}

int Runner::frame(const std::vector<std::string>& a) {
    if (a.empty()) throw UsageError("frame needs a construction");
    const std::string& kind = a[0];
    auto param = [&](std::size_t k) -> std::size_t {
        if (k >= a.size()) throw UsageError("frame " + kind + ": missing parameter");
        return to_count(a[k]);
    };
    auto expect = [&](std::size_t count) {
        if (a.size() != count + 1) throw UsageError("frame " + kind + " takes " + std::to_string(count) + " parameter(s)");
    };

    std::optional<Frame> f;
    if (kind == "laplacian") {
        if (a.size() > 2) throw UsageError("frame laplacian takes one graph");
        f = laplacian_method(read_graph(a, 1));
    } else if (kind == "lkn") {
        expect(1);
        f = laplacian_method(tfg::complete(param(1)));
    } else if (kind == "lkn-small") {
        expect(1);
        f = lkn_small_frame(param(1));
    } else if (kind == "star") {
        expect(2);
        std::optional<std::vector<std::size_t>> keep;
        if (!cfg_.keep.empty()) keep = cfg_.keep;
        f = star_frame(param(1), param(2), keep);
    } else if (kind == "k2kn") {
        expect(1);
        f = k2kn_frame(param(1));
    } else if (kind == "diamond") {
        expect(0);
        f = diamond_frame();
    } else if (kind == "prism") {
        expect(0);
        f = truncated_prism_frame();
    } else if (kind == "c4") {
        expect(0);
        f = cycle4_frame();
    } else if (kind == "kn-minus-e") {
        expect(1);
        f = kn_minus_e_frame(param(1));
    } else if (kind == "dup-chain") {
        expect(1);
        for (auto& entry : dup_chain_frames(8))
            if (entry.name == a[1]) f = entry.frame;
        if (!f) throw UsageError("unknown dup-chain entry '" + a[1] + "' (lo4..lo8, g2, g3, g6)");
    } else {
        throw UsageError("unknown construction '" + kind + "'");
    }
    emit(format_matrix(f->synthesis()));
    return kPositive;
}

int Runner::complete(const std::vector<std::string>& a) {
    if (a.empty() || a.size() > 2) throw UsageError("complete minimal|twostep [frame]");
    const Frame f = read_frame(a, 1);
    CompletionResult r = [&] {
        if (a[0] == "minimal") return minimal_tight_completion(f, tol());
        if (a[0] == "twostep") return two_step_completion(f, tol());
        throw UsageError("unknown completion '" + a[0] + "'");
    }();
    const std::string extra = "\"added\": " + std::to_string(r.added.size()) + ", \"bound\": " + fmt_double(r.bound);
    emit(format_matrix(r.frame.synthesis(), extra));
    return kPositive;
}

int Runner::check(const std::vector<std::string>& a) {
    if (a.empty()) throw UsageError("check needs a test name");
    const std::string& what = a[0];
    if (a.size() > 2) throw UsageError("check " + what + " takes one input");
    Json report;
    report["check"] = what;
    std::ostringstream text;

    if (what == "tight" || what == "parseval") {
        const Frame f = read_frame(a, 1);
        const TightnessReport t = tightness(f, tol());
        const char* kind = t.kind == Tightness::Parseval ? "parseval" : t.kind == Tightness::Tight ? "tight" : "not-tight";
        const bool positive = what == "tight" ? t.kind != Tightness::NotTight : t.kind == Tightness::Parseval;
        report["verdict"] = kind;
        report["lower"] = t.bounds.lower;
        report["upper"] = t.bounds.upper;
        text << "verdict: " << kind << "\nlower: " << fmt_double(t.bounds.lower)
             << "\nupper: " << fmt_double(t.bounds.upper) << "\n";
        emit_report(report, text.str());
        return positive ? kPositive : kNegative;
    }
    if (what == "pattern") {
        const Frame f = read_frame(a, 1);
        const GramPattern p = associated_graph(f, tol());
        std::string fragile;
        Json fragile_json = Json::array();
        for (const Edge& e : p.fragile) {
            fragile += "# fragile " + edge_text(e) + "\n";
            fragile_json.push_back({e.u, e.v});
        }
        if (cfg_.expected_graph.empty()) {
            emit(fragile + format_graph(p.graph));
            return kPositive;
        }
        const Graph expected = parse_graph(read_source(cfg_.expected_graph));
        const bool match = p.graph == expected;
        report["verdict"] = match ? "match" : "mismatch";
        report["fragile"] = fragile_json;
        text << "verdict: " << (match ? "match" : "mismatch") << "\n" << fragile;
        emit_report(report, text.str());
        return match ? kPositive : kNegative;
    }
    if (what == "erasure") {
        const Frame f = read_frame(a, 1);
        const bool robust = erasure_robustness(f, cfg_.erasures, tol());
        report["erasures"] = cfg_.erasures;
        report["verdict"] = robust ? "robust" : "not-robust";
        text << "erasures: " << cfg_.erasures << "\nverdict: " << (robust ? "robust" : "not-robust") << "\n";
        emit_report(report, text.str());
        return robust ? kPositive : kNegative;
    }
    if (what == "neighbor") {
        const Graph g = read_graph(a, 1);
        const auto w = neighbor_obstruction(g);
        report["verdict"] = w ? "obstructed" : "none";
        if (w) report["witness"] = {w->u, w->v, w->w};
        text << "verdict: " << (w ? "obstructed" : "none") << "\n";
        if (w) text << "witness: " << w->u << " " << w->v << " " << w->w << "\n";
        emit_report(report, text.str());
        return w ? kNegative : kPositive;
    }
    if (what == "cycles") {
        const Graph g = read_graph(a, 1);
        const auto e = edge_cycle_check(g);
        report["verdict"] = e ? "obstructed" : "none";
        if (e) report["edge"] = {e->u, e->v};
        text << "verdict: " << (e ? "obstructed" : "none") << "\n";
        if (e) text << "edge: " << edge_text(*e) << "\n";
        emit_report(report, text.str());
        return e ? kNegative : kPositive;
    }
    if (what == "linegraph") {
        const Graph g = read_graph(a, 1);
        const LineGraphVerdict v = is_line_graph(g);
        report["verdict"] = v.is_line ? "line-graph" : "not-line-graph";
        text << "verdict: " << (v.is_line ? "line-graph" : "not-line-graph") << "\n";
        if (!v.is_line) {
            report["beineke"] = v.beineke_index;
            report["embedding"] = v.embedding;
            text << "beineke: G" << v.beineke_index << "\nembedding:";
            for (Vertex x : v.embedding) text << " " << x;
            text << "\n";
        }
        emit_report(report, text.str());
        return v.is_line ? kPositive : kNegative;
    }
    throw UsageError("unknown check '" + what + "'");
}

int Runner::classify(const std::vector<std::string>& a) {
    if (a.size() > 1) throw UsageError("classify takes one graph");
    const Graph g = read_graph(a, 0);
    const Certificate c = tfg::classify(g, tol());

    Json report;
    std::ostringstream text;
    report["verdict"] = to_string(c.verdict);
    text << "verdict: " << to_string(c.verdict) << "\n";
    if (!c.source.empty()) {
        report["source"] = c.source;
        text << "source: " << c.source << "\n";
    }
    if (c.frame) {
        report["dimension"] = c.frame->dim();
        text << "dimension: " << c.frame->dim() << "\n";
        if (!cfg_.out_path.empty()) {
            std::ofstream file(cfg_.out_path);
            if (!file) throw UsageError("cannot write '" + cfg_.out_path + "'");
            file << format_matrix(c.frame->synthesis());
            report["certificate"] = cfg_.out_path;
            text << "certificate: " << cfg_.out_path << "\n";
        }
    }
    if (c.neighbor) {
        report["witness"] = {c.neighbor->u, c.neighbor->v, c.neighbor->w};
        text << "witness: " << c.neighbor->u << " " << c.neighbor->v << " " << c.neighbor->w << "\n";
    }
    if (c.cycle_free_edge) {
        report["edge"] = {c.cycle_free_edge->u, c.cycle_free_edge->v};
        text << "edge: " << edge_text(*c.cycle_free_edge) << "\n";
    }
    emit_report(report, text.str());
    return c.verdict == Verdict::Tight ? kPositive : kNegative;
}

int Runner::sweep(const std::vector<std::string>& a) {
    if (a.size() != 1) throw UsageError("sweep root-order|join-line|lemma-p4 --max-n <k>");
    if (cfg_.max_n == 0) throw UsageError("sweep needs --max-n");
    const std::string& what = a[0];
    Json report;
    std::ostringstream text;
    report["sweep"] = what;
    report["max_n"] = cfg_.max_n;
    text << "sweep: " << what << "\nmax-n: " << cfg_.max_n << "\n";

    std::vector<Graph> bad;
    if (what == "root-order" || what == "lemma-p4") {
        const SweepReport r = what == "root-order" ? root_order_theorem_check(cfg_.max_n) : lemma_p4_check(cfg_.max_n);
        report["checked"] = r.checked;
        text << "checked: " << r.checked << "\n";
        if (what == "root-order") {
            report["exempt"] = r.exempt;
            text << "exempt: " << r.exempt << "\n";
        }
        bad = r.counterexamples;
    } else if (what == "join-line") {
        const JoinReport r = join_line_check(cfg_.max_n);
        std::array<std::size_t, 4> by_index{};
        for (const JoinRecord& rec : r.records)
            if (rec.beineke_index >= 1 && rec.beineke_index <= 3) ++by_index[rec.beineke_index];
        report["checked"] = r.records.size();
        report["witness_counts"] = {{"G1", by_index[1]}, {"G2", by_index[2]}, {"G3", by_index[3]}};
        text << "checked: " << r.records.size() << "\nwitness G1: " << by_index[1] << "\nwitness G2: " << by_index[2]
             << "\nwitness G3: " << by_index[3] << "\n";
        for (const JoinRecord& rec : r.counterexamples) bad.push_back(join(rec.left, rec.right));
    } else {
        throw UsageError("unknown sweep '" + what + "'");
    }

    report["counterexamples"] = bad.size();
    text << "counterexamples: " << bad.size() << "\n";
    for (const Graph& g : bad) {
        std::istringstream lines(format_graph(g));
        std::string line;
        text << "# counterexample\n";
        while (std::getline(lines, line)) text << "#   " << line << "\n";
    }
    emit_report(report, text.str());
    return bad.empty() ? kPositive : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tight frame graphs: constructions, checks and classification", "tfg"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--tol", cfg.tol, "relative tolerance, 0 < tol < 1e-3");
    app.add_option("--out", cfg.out_path, "output file (classify: certificate frame)");
    app.add_option("--seed", cfg.seed, "seed for randomized generators");
    app.add_option("--max-n", cfg.max_n, "largest order for sweeps");
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rest;
    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("args", rest, "arguments");
        return sub;
    };
    CLI::App* gen = add("gen", "generate a named graph: gen <family> <params>");
    CLI::App* lg = add("linegraph", "line graph of a graph");
    CLI::App* rg = add("rootgraph", "root graph(s) of a line graph");
    CLI::App* inc = add("incidence", "incidence matrix of a graph");
    inc->add_flag("--unoriented", cfg.unoriented, "unoriented incidence");
    CLI::App* fr = add("frame", "build a frame: laplacian|lkn|lkn-small|star|k2kn|diamond|prism|c4|kn-minus-e|dup-chain");
    fr->add_option("--keep", cfg.keep, "star method: kept eigenbasis columns (1-based)")->delimiter(',')->allow_extra_args(false);
    CLI::App* comp = add("complete", "tight completion: minimal|twostep [frame]");
    CLI::App* chk = add("check", "tight|parseval|pattern|neighbor|cycles|linegraph|erasure [input]");
    chk->add_option("--graph", cfg.expected_graph, "check pattern: expected graph file");
    chk->add_option("--erasures,-e", cfg.erasures, "check erasure: number of erased vectors");
    CLI::App* cls = add("classify", "classify a connected graph");
    CLI::App* sw = add("sweep", "exhaustive checks: root-order|join-line|lemma-p4 --max-n <k>");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPositive : kUsage;
    }

    Runner runner(cfg, in, out);
    try {
        static_cast<void>(TolerancePolicy(cfg.tol));
        if (gen->parsed()) return runner.gen(rest);
        if (lg->parsed()) return runner.linegraph(rest);
        if (rg->parsed()) return runner.rootgraph(rest);
        if (inc->parsed()) return runner.incidence(rest);
        if (fr->parsed()) return runner.frame(rest);
        if (comp->parsed()) return runner.complete(rest);
        if (chk->parsed()) return runner.check(rest);
        if (cls->parsed()) return runner.classify(rest);
        if (sw->parsed()) return runner.sweep(rest);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "usage error: no subcommand\n";
    return kUsage;
}

}  // namespace tfg::cli
