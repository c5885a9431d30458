#include "tfg/verify.hpp"

#include <algorithm>

#include "tfg/constructions.hpp"
#include "tfg/error.hpp"
#include "tfg/linegraph.hpp"

namespace tfg {

std::optional<NeighborWitness> neighbor_obstruction(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const auto common = common_neighbors(g, u, v);
            if (common.size() == 1) return NeighborWitness{u, v, common.front()};
        }
    }
    return std::nullopt;
}

bool validate_witness(const Graph& g, const NeighborWitness& w) {
    const std::size_t n = g.order();
    if (w.u >= n || w.v >= n || w.w >= n || w.u == w.v) return false;
    if (g.adjacent(w.u, w.v)) return false;
    const auto common = common_neighbors(g, w.u, w.v);
    return common.size() == 1 && common.front() == w.w;
}

std::optional<Edge> edge_cycle_check(const Graph& g) {
    if (g.order() < 3) throw Error(ErrorKind::TooSmall, "edge cycle check needs at least 3 vertices");
    if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "edge cycle check needs a connected graph");

    for (const Edge& e : g.edges()) {
        if (!common_neighbors(g, e.u, e.v).empty()) continue;
        bool on_square = false;
        for (Vertex x : g.neighbors(e.u)) {
            if (x == e.v) continue;
            for (Vertex y : g.neighbors(e.v)) {
                if (y != e.u && y != x && g.adjacent(x, y)) {
                    on_square = true;
                    break;
                }
            }
            if (on_square) break;
        }
        if (!on_square) return e;
    }
    return std::nullopt;
}

RootObstructions root_obstructions(const Graph& p) {
    RootObstructions out;
    if (auto emb = contains_induced(p, path(4))) out.induced_p4 = std::array<Vertex, 4>{(*emb)[0], (*emb)[1], (*emb)[2], (*emb)[3]};
    if (p.size() == 0) return out;

    const Graph line = line_graph(p).line;
    const std::size_t n = line.order();
    for (Vertex a = 0; a < n; ++a) {
        if (line.degree(a) == 1) {
            out.pendant_vertex = a;
            break;
        }
    }
    for (Vertex a = 0; a < n && !out.pendant_triangle; ++a) {
        for (Vertex b : line.neighbors(a)) {
            if (b <= a || out.pendant_triangle) continue;
            for (Vertex c : line.neighbors(b)) {
                if (c <= b || !line.adjacent(a, c)) continue;
                std::array<Vertex, 3> tri{a, b, c};
                // Degree-2 vertices first, keeping ascending order otherwise.
                std::stable_partition(tri.begin(), tri.end(), [&](Vertex x) { return line.degree(x) == 2; });
                const auto low = std::count_if(tri.begin(), tri.end(), [&](Vertex x) { return line.degree(x) == 2; });
                if (low == 2) {
                    out.pendant_triangle = tri;
                    break;
                }
            }
        }
    }
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Tight: return "tight";
        case Verdict::NotTight: return "not-tight";
        case Verdict::LiteratureNotTight: return "literature-not-tight";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::optional<Certificate> match_entry(const Graph& g, const CatalogEntry& entry, TolerancePolicy tol) {
    if (entry.graph.order() != g.order() || entry.graph.size() != g.size()) return std::nullopt;
    const auto psi = find_isomorphism(entry.graph, g);
    if (!psi) return std::nullopt;
    Frame f = permute_columns(entry.frame, *psi);
    if (tightness(f, tol).kind == Tightness::NotTight || !represents(f, g, tol))
        throw Error(ErrorKind::Internal, "catalog frame '" + entry.name + "' failed re-verification");
    Certificate cert;
    cert.verdict = Verdict::Tight;
    cert.source = entry.name;
    cert.frame = std::move(f);
    return cert;
}

std::optional<std::size_t> lkn_root_order(std::size_t n) {
    for (std::size_t k = 4; k * (k - 1) / 2 <= n; ++k)
        if (k * (k - 1) / 2 == n) return k;
    return std::nullopt;
}

std::optional<Certificate> catalog_lookup(const Graph& g, TolerancePolicy tol) {
    const std::size_t n = g.order();
    const std::size_t m = g.size();

    if (n == 1) return match_entry(g, {"K1", Frame(Matrix{{1.0}}), complete(1)}, tol);
    if (m == n * (n - 1) / 2) return match_entry(g, {"K" + std::to_string(n), star_frame(n, 1), complete(n)}, tol);
    if (n > kClassifyCatalogLimit) return std::nullopt;

    std::vector<CatalogEntry> candidates;
    if (n >= 4 && m == n * (n - 1) / 2 - 1)
        candidates.push_back({"K" + std::to_string(n) + "-e", kn_minus_e_frame(n),
                              delete_edge(complete(n), {0, 1})});
    if (n == 4 && m == 4) candidates.push_back({"C4", cycle4_frame(), cycle(4)});
    if (n >= 5) {
        // L(O_4) is the diamond, already covered as K_4 - e.
        auto chain = dup_chain_frames(n);
        for (auto& entry : chain)
            if (entry.graph.order() == n) candidates.push_back(std::move(entry));
    }
    if (auto k = lkn_root_order(n); k && m == n * (*k - 2))
        candidates.push_back({"L(K" + std::to_string(*k) + ")", lkn_small_frame(*k), lkn_small_graph(*k)});
    if (n >= 6 && n % 2 == 0 && m == (n / 2) * (n / 2))
        candidates.push_back({"K2xK" + std::to_string(n / 2), k2kn_frame(n / 2),
                              cartesian_product(complete(2), complete(n / 2))});

    for (const CatalogEntry& entry : candidates)
        if (auto cert = match_entry(g, entry, tol)) return cert;
    return std::nullopt;
}

}  // namespace

Certificate classify(const Graph& g, TolerancePolicy tol) {
    if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "classify needs a connected graph");
    if (auto cert = catalog_lookup(g, tol)) return *cert;

    Certificate cert;
    if (auto w = neighbor_obstruction(g)) {
        cert.verdict = Verdict::NotTight;
        cert.source = "common-neighbor";
        cert.neighbor = w;
        return cert;
    }
    if (g.order() >= 3) {
        if (auto e = edge_cycle_check(g)) {
            cert.verdict = Verdict::NotTight;
            cert.source = "edge-cycle";
            cert.cycle_free_edge = e;
            return cert;
        }
    }
    const std::size_t n = g.order();
    if (n > kClassifyCatalogLimit) return cert;
    for (std::size_t m = 2; 2 * m < n; ++m) {
        if (g.size() != m * (n - m) || !is_isomorphic(g, complete_bipartite(m, n - m))) continue;
        cert.verdict = Verdict::LiteratureNotTight;
        cert.source = "AAC13 Corollary 6.5";
        return cert;
    }
    return cert;
}

// ---------------------------------------------------------------------------

namespace {

bool is_star_tree(const Graph& p) {
    const auto deg = p.degrees();
    return *std::max_element(deg.begin(), deg.end()) == p.order() - 1;
}

bool is_root_order_exempt(const Graph& p) {
    const std::size_t n = p.order();
    if (p.size() + 1 == n) return is_star_tree(p);
    if (n == 3) return true;  // the only unicyclic graph on 3 vertices is C_3
    if (n == 4 && is_isomorphic(p, cycle(4))) return true;
    return n >= 4 && is_isomorphic(p, o_graph(n));
}

}  // namespace

SweepReport root_order_theorem_check(std::size_t max_n) {
    if (max_n > 7) throw Error(ErrorKind::SizeLimit, "root order sweep is limited to 7 vertices");
    SweepReport report;
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (const Graph& p : enumerate_connected(n)) {
            if (p.size() != n && p.size() + 1 != n) continue;
            ++report.checked;
            const Graph line = line_graph(p).line;
            if (is_root_order_exempt(p)) {
                ++report.exempt;
                if (classify(line).verdict != Verdict::Tight) report.counterexamples.push_back(p);
            } else if (!neighbor_obstruction(line)) {
                report.counterexamples.push_back(p);
            }
        }
    }
    return report;
}

SweepReport lemma_p4_check(std::size_t max_n) {
    if (max_n > 7) throw Error(ErrorKind::SizeLimit, "induced P4 sweep is limited to 7 vertices");
    SweepReport report;
    const Graph p4 = path(4);
    for (std::size_t n = 4; n <= max_n; ++n) {
        for (const Graph& p : enumerate_connected(n)) {
            if (!contains_induced(p, p4)) continue;
            ++report.checked;
            if (!neighbor_obstruction(line_graph(p).line)) report.counterexamples.push_back(p);
        }
    }
    return report;
}

JoinReport join_line_check(std::size_t max_n) {
    if (max_n > 5) throw Error(ErrorKind::SizeLimit, "join sweep is limited to 5 vertices per side");
    std::vector<Graph> graphs;
    for (std::size_t n = 3; n <= max_n; ++n)
        for (Graph& g : enumerate_connected(n)) graphs.push_back(std::move(g));

    auto is_complete = [](const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; };
    JoinReport report;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i; j < graphs.size(); ++j) {
            if (is_complete(graphs[i]) && is_complete(graphs[j])) continue;
            const LineGraphVerdict verdict = is_line_graph(join(graphs[i], graphs[j]));
            JoinRecord record{graphs[i], graphs[j], verdict.is_line ? 0 : verdict.beineke_index};
            if (verdict.is_line || verdict.beineke_index > 3) report.counterexamples.push_back(record);
            report.records.push_back(std::move(record));
        }
    }
    return report;
}

}  // namespace tfg
