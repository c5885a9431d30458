#include "tfg/linegraph.hpp"

#include <algorithm>
#include <numeric>

#include "tfg/error.hpp"

namespace tfg {

IncidenceMatrix oriented_incidence(const Graph& g) {
    Matrix b(g.order(), g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const Edge& e = g.edges()[j];
        b(e.u, j) = -1.0;
        b(e.v, j) = 1.0;
    }
    return {std::move(b), g.edges(), true};
}

IncidenceMatrix unoriented_incidence(const Graph& g) {
    Matrix b(g.order(), g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const Edge& e = g.edges()[j];
        b(e.u, j) = 1.0;
        b(e.v, j) = 1.0;
    }
    return {std::move(b), g.edges(), false};
}

Matrix adjacency_matrix(const Graph& g) {
    Matrix a(g.order(), g.order());
    for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    return a;
}

Matrix laplacian(const Graph& g) {
    Matrix l(g.order(), g.order());
    for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<double>(g.degree(v));
    for (const Edge& e : g.edges()) l(e.u, e.v) = l(e.v, e.u) = -1.0;
    return l;
}

LineGraphMap line_graph(const Graph& g) {
    if (g.size() == 0) throw Error(ErrorKind::EmptyEdgeSet, "line graph of an edgeless graph");
    const auto& es = g.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
                edges.push_back({i, j});
    std::vector<Vertex> map(es.size());
    std::iota(map.begin(), map.end(), Vertex{0});
    return {Graph(es.size(), std::move(edges)), std::move(map)};
}

// ---------------------------------------------------------------------------

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<Vertex> pattern_order;
    std::vector<Vertex> candidates;  // g vertices, degree descending
    std::vector<Vertex> image;
    std::vector<char> used;

    bool extend(std::size_t depth) {
        if (depth == pattern_order.size()) return true;
        const Vertex x = pattern_order[depth];
        for (Vertex c : candidates) {
            if (used[c] || g.degree(c) < h.degree(x)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex y = pattern_order[k];
                ok = h.adjacent(x, y) == g.adjacent(c, image[y]);
            }
            if (!ok) continue;
            image[x] = c;
            used[c] = 1;
            if (extend(depth + 1)) return true;
            used[c] = 0;
        }
        return false;
    }
};

std::vector<Vertex> by_degree_desc(const Graph& g) {
    std::vector<Vertex> v(g.order());
    std::iota(v.begin(), v.end(), Vertex{0});
    std::stable_sort(v.begin(), v.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return v;
}

// Pattern vertices ordered so each one is adjacent to an earlier one where
// possible; early adjacency constraints prune hardest.
std::vector<Vertex> pattern_order(const Graph& h) {
    std::vector<Vertex> order;
    std::vector<char> placed(h.order(), 0);
    std::vector<std::size_t> touched(h.order(), 0);
    for (std::size_t step = 0; step < h.order(); ++step) {
        Vertex best = h.order();
        for (Vertex v = 0; v < h.order(); ++v) {
            if (placed[v]) continue;
            if (best == h.order() || touched[v] > touched[best] ||
                (touched[v] == touched[best] && h.degree(v) > h.degree(best)))
                best = v;
        }
        placed[best] = 1;
        order.push_back(best);
        for (Vertex w : h.neighbors(best)) ++touched[w];
    }
    return order;
}

}  // namespace

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h) {
    if (h.order() > g.order()) return std::nullopt;
    InducedSearch s{g, h, pattern_order(h), by_degree_desc(g), std::vector<Vertex>(h.order()),
                    std::vector<char>(g.order(), 0)};
    if (!s.extend(0)) return std::nullopt;
    return s.image;
}

LineGraphVerdict is_line_graph(const Graph& g) {
    if (g.order() > kLineGraphSearchLimit)
        throw Error(ErrorKind::SizeLimit, "is_line_graph is capped at 30 vertices");
    for (int i = 1; i <= 9; ++i) {
        if (auto emb = contains_induced(g, beineke(i))) return {false, i, std::move(*emb)};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Krausz partitions

namespace {

class KrauszSearch {
public:
    explicit KrauszSearch(const Graph& g)
        : g_(g), covered_(g.size(), 0), count_(g.order(), 0) {
        for (std::size_t d : g.degrees()) uncovered_deg_.push_back(static_cast<long>(d));
    }

    std::vector<Graph> run() {
        search();
        return std::move(roots_);
    }

private:
    bool free_edge(Vertex a, Vertex b) const {
        auto idx = g_.edge_index(a, b);
        return idx && !covered_[*idx];
    }

    std::vector<Vertex> free_neighbors(Vertex a) const {
        std::vector<Vertex> out;
        for (Vertex b : g_.neighbors(a))
            if (free_edge(a, b)) out.push_back(b);
        return out;
    }

    bool is_free_clique(const std::vector<Vertex>& c) const {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!free_edge(c[i], c[j])) return false;
        return true;
    }

    void place(const std::vector<Vertex>& c, char mark) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                covered_[*g_.edge_index(c[i], c[j])] = mark;
                uncovered_deg_[c[i]] += mark ? -1 : 1;
                uncovered_deg_[c[j]] += mark ? -1 : 1;
            }
        for (Vertex v : c) count_[v] += mark ? 1 : -1;
    }

    bool consistent(const std::vector<Vertex>& touched) const {
        for (Vertex v : touched) {
            if (count_[v] > 2) return false;
            if (count_[v] == 2 && uncovered_deg_[v] != 0) return false;
        }
        return true;
    }

    void try_clique(const std::vector<Vertex>& c) {
        for (Vertex v : c)
            if (count_[v] >= 2) return;
        place(c, 1);
        cliques_.push_back(c);
        if (consistent(c)) search();
        cliques_.pop_back();
        place(c, 0);
    }

    // All cliques {u, v} + S with S drawn from pool, every pair uncovered.
    void enumerate(std::vector<Vertex>& current, const std::vector<Vertex>& pool, std::size_t from) {
        try_clique(current);
        for (std::size_t k = from; k < pool.size(); ++k) {
            const Vertex w = pool[k];
            if (count_[w] >= 2) continue;
            bool ok = true;
            for (Vertex x : current) ok = ok && free_edge(w, x);
            if (!ok) continue;
            current.push_back(w);
            enumerate(current, pool, k + 1);
            current.pop_back();
        }
    }

    void search() {
        std::optional<Edge> next;
        for (std::size_t j = 0; j < g_.size(); ++j)
            if (!covered_[j]) {
                next = g_.edges()[j];
                break;
            }
        if (!next) {
            record();
            return;
        }
        const Vertex u = next->u;
        const Vertex v = next->v;
        if (count_[u] >= 2 || count_[v] >= 2) return;

        // A vertex already in one clique must put every remaining edge into
        // its second clique.
        for (Vertex forced_at : {u, v}) {
            if (count_[forced_at] != 1) continue;
            std::vector<Vertex> c = free_neighbors(forced_at);
            c.push_back(forced_at);
            std::sort(c.begin(), c.end());
            if (is_free_clique(c)) try_clique(c);
            return;
        }

        std::vector<Vertex> pool;
        for (Vertex w : g_.neighbors(u))
            if (w != v && free_edge(u, w) && free_edge(v, w)) pool.push_back(w);
        std::vector<Vertex> current{u, v};
        enumerate(current, pool, 0);
    }

    void record() {
        const std::size_t c = cliques_.size();
        std::size_t total = c;
        for (Vertex x = 0; x < g_.order(); ++x) total += 2 - static_cast<std::size_t>(count_[x]);

        std::vector<std::vector<std::size_t>> member_of(g_.order());
        for (std::size_t k = 0; k < c; ++k)
            for (Vertex x : cliques_[k]) member_of[x].push_back(k);

        std::vector<Edge> edges;
        std::size_t fresh = c;
        for (Vertex x = 0; x < g_.order(); ++x) {
            auto ends = member_of[x];
            while (ends.size() < 2) ends.push_back(fresh++);
            edges.push_back(make_edge(ends[0], ends[1]));
        }
        Graph root(total, std::move(edges));
        for (const Graph& r : roots_)
            if (is_isomorphic(r, root)) return;
        roots_.push_back(std::move(root));
    }

    const Graph& g_;
    std::vector<char> covered_;
    std::vector<int> count_;
    std::vector<long> uncovered_deg_;
    std::vector<std::vector<Vertex>> cliques_;
    std::vector<Graph> roots_;
};

}  // namespace

std::vector<Graph> root_graph(const Graph& g) {
    if (g.order() > kRootGraphSearchLimit)
        throw Error(ErrorKind::SizeLimit, "root_graph is capped at 30 vertices");
    if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "root_graph needs a connected graph");
    const LineGraphVerdict verdict = is_line_graph(g);
    if (!verdict.is_line)
        throw Error(ErrorKind::NotALineGraph,
                    "contains Beineke graph G" + std::to_string(verdict.beineke_index));
    auto roots = KrauszSearch(g).run();
    if (roots.empty()) throw Error(ErrorKind::Internal, "no Krausz partition for a line graph");
    return roots;
}

}  // namespace tfg
