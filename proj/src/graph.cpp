#include "tfg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tfg/error.hpp"

namespace tfg {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw Error(ErrorKind::InvalidParameter, "graph needs at least one vertex");
    for (Edge& e : edges_) {
        if (e.u == e.v) throw Error(ErrorKind::InvalidParameter, "loop at vertex " + std::to_string(e.u));
        if (e.u >= n_ || e.v >= n_) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint >= n");
        e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error(ErrorKind::InvalidParameter, "duplicate edge");

    adj_.assign(n_ * n_, 0);
    nbrs_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
        nbrs_[e.u].push_back(e.v);
        nbrs_[e.v].push_back(e.u);
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex a) const {
    if (a >= n_)
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(a) + " in graph of order " + std::to_string(n_));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_[a * n_ + b] != 0;
}

std::size_t Graph::degree(Vertex a) const {
    check_vertex(a);
    return nbrs_[a].size();
}

const std::vector<Vertex>& Graph::neighbors(Vertex a) const {
    check_vertex(a);
    return nbrs_[a];
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b || !adjacent(a, b)) return std::nullopt;
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = nbrs_[v].size();
    return d;
}

// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidParameter, what);
}

Graph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back(make_edge(a - 1, b - 1));
    return Graph(n, std::move(edges));
}

}  // namespace

Graph complete(std::size_t n) {
    require(n >= 1, "K_n needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
    require(n >= 1, "P_n needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
    require(n >= 3, "C_n needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph star(std::size_t n) {
    require(n >= 2, "S_n needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "K_{m,n} needs m, n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < n; ++v) edges.push_back({u, m + v});
    return Graph(m + n, std::move(edges));
}

Graph o_graph(std::size_t n) {
    require(n >= 3, "O_n needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
    edges.push_back({1, 2});
    return Graph(n, std::move(edges));
}

Graph diamond() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph hypercube(std::size_t n) {
    require(n >= 1 && n <= 16, "Q_n needs 1 <= n <= 16");
    const std::size_t count = std::size_t{1} << n;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < count; ++u)
        for (std::size_t bit = 0; bit < n; ++bit) {
            const Vertex v = u ^ (std::size_t{1} << bit);
            if (u < v) edges.push_back({u, v});
        }
    return Graph(count, std::move(edges));
}

Graph beineke(int index) {
    // Transcribed vertex-for-vertex from the standard drawing (1-based there).
    switch (index) {
    case 1: return from_one_based(4, {{1, 2}, {1, 3}, {1, 4}});
    case 2: return from_one_based(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 3}, {5, 4}});
    case 3:
        return from_one_based(5, {{1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}, {4, 1}, {5, 2}, {5, 1}, {5, 4}});
    case 4: return from_one_based(6, {{1, 3}, {1, 4}, {1, 5}, {3, 2}, {4, 2}, {6, 2}, {3, 4}});
    case 5:
        return from_one_based(6, {{1, 3}, {1, 4}, {1, 5}, {3, 5}, {4, 5}, {3, 2}, {4, 2}, {6, 2}, {3, 4}});
    case 6:
        return from_one_based(
            6, {{1, 3}, {1, 4}, {1, 5}, {3, 5}, {4, 5}, {3, 2}, {4, 2}, {6, 2}, {6, 3}, {6, 4}, {3, 4}});
    case 7:
        return from_one_based(6, {{1, 3}, {1, 4}, {1, 5}, {3, 2}, {4, 2}, {6, 2}, {3, 4}, {5, 6}});
    case 8:
        return from_one_based(6, {{1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {4, 5}, {5, 6}});
    case 9:
        return from_one_based(
            6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
    default: throw Error(ErrorKind::InvalidParameter, "Beineke index must be 1..9");
    }
}

Graph edgeless(std::size_t n) {
    require(n >= 1, "edgeless graph needs n >= 1");
    return Graph(n);
}

Graph gen_named(const GraphFamily& family) {
    const auto& p = family.params;
    auto arity = [&](std::size_t k) {
        if (p.size() != k) throw Error(ErrorKind::InvalidParameter, "wrong number of family parameters");
        for (int x : p)
            if (x < 0) throw Error(ErrorKind::InvalidParameter, "negative family parameter");
    };
    auto at = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
    switch (family.tag) {
    case Family::Complete: arity(1); return complete(at(0));
    case Family::Path: arity(1); return path(at(0));
    case Family::Cycle: arity(1); return cycle(at(0));
    case Family::Star: arity(1); return star(at(0));
    case Family::CompleteBipartite: arity(2); return complete_bipartite(at(0), at(1));
    case Family::O: arity(1); return o_graph(at(0));
    case Family::Diamond: arity(0); return diamond();
    case Family::Hypercube: arity(1); return hypercube(at(0));
    case Family::Beineke: arity(1); return beineke(p[0]);
    case Family::Edgeless: arity(1); return edgeless(at(0));
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
}

// ---------------------------------------------------------------------------

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t nh = h.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (const Edge& e : h.edges()) edges.push_back({u * nh + e.u, u * nh + e.v});
    for (const Edge& e : g.edges())
        for (Vertex w = 0; w < nh; ++w) edges.push_back({e.u * nh + w, e.v * nh + w});
    return Graph(g.order() * nh, std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({ng + e.u, ng + e.v});
    for (Vertex u = 0; u < ng; ++u)
        for (Vertex v = 0; v < h.order(); ++v) edges.push_back({u, ng + v});
    return Graph(ng + h.order(), std::move(edges));
}

Graph duplicate_vertex(const Graph& g, Vertex u) {
    if (u >= g.order()) throw Error(ErrorKind::IndexOutOfRange, "duplicate_vertex index");
    const Vertex fresh = g.order();
    std::vector<Edge> edges = g.edges();
    edges.push_back({u, fresh});
    for (Vertex w : g.neighbors(u)) edges.push_back({w, fresh});
    return Graph(g.order() + 1, std::move(edges));
}

Graph delete_edge(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    std::vector<Edge> edges = g.edges();
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        throw Error(ErrorKind::MissingEdge,
                    "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
    edges.erase(it);
    return Graph(g.order(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) edges.push_back({i, j});
    return Graph(vertices.size(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != g.order()) throw Error(ErrorKind::InvalidParameter, "permutation size");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Graph(g.order(), std::move(edges));
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw Error(ErrorKind::InvalidParameter, "common_neighbors needs u != v");
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

std::size_t count_reachable(const Graph& g, Vertex start, std::optional<Edge> skip) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (seen[y]) continue;
            if (skip && make_edge(x, y) == *skip) continue;
            seen[y] = 1;
            ++count;
            stack.push_back(y);
        }
    }
    return count;
}

}  // namespace

bool is_connected(const Graph& g) { return count_reachable(g, 0, std::nullopt) == g.order(); }

std::vector<Edge> bridges(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        const std::size_t with = count_reachable(g, e.u, std::nullopt);
        if (count_reachable(g, e.u, e) < with) out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

/// Per-vertex invariant: degree, then the sorted degrees of its neighbors.
std::vector<std::vector<std::size_t>> vertex_signatures(const Graph& g) {
    std::vector<std::vector<std::size_t>> sig(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto& s = sig[v];
        s.push_back(g.degree(v));
        std::vector<std::size_t> nd;
        std::size_t triangles = 0;
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            nd.push_back(g.degree(nb[i]));
            for (std::size_t j = i + 1; j < nb.size(); ++j) triangles += g.adjacent(nb[i], nb[j]);
        }
        s.push_back(triangles);
        std::sort(nd.begin(), nd.end());
        s.insert(s.end(), nd.begin(), nd.end());
    }
    return sig;
}

using GraphKey = std::vector<std::vector<std::size_t>>;

GraphKey graph_key(const Graph& g) {
    GraphKey key = vertex_signatures(g);
    std::sort(key.begin(), key.end());
    key.push_back({g.order(), g.size()});
    return key;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<std::vector<std::size_t>> sig_g, sig_h;
    std::vector<Vertex> order;
    std::vector<Vertex> phi;
    std::vector<char> used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const Vertex v = order[depth];
        for (Vertex w = 0; w < h.order(); ++w) {
            if (used[w] || sig_g[v] != sig_h[w]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex x = order[k];
                ok = g.adjacent(v, x) == h.adjacent(w, phi[x]);
            }
            if (!ok) continue;
            phi[v] = w;
            used[w] = 1;
            if (extend(depth + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

/// Vertices grouped so each one (after the first of its component) touches an
/// earlier one; highest degree first within that constraint.
std::vector<Vertex> search_order(const Graph& g) {
    std::vector<Vertex> order;
    std::vector<char> placed(g.order(), 0);
    std::vector<std::size_t> touched(g.order(), 0);
    for (std::size_t step = 0; step < g.order(); ++step) {
        Vertex best = g.order();
        for (Vertex v = 0; v < g.order(); ++v) {
            if (placed[v]) continue;
            if (best == g.order() || touched[v] > touched[best] ||
                (touched[v] == touched[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        placed[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) ++touched[w];
    }
    return order;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    IsoSearch s{g, h, vertex_signatures(g), vertex_signatures(h), search_order(g),
                std::vector<Vertex>(g.order()), std::vector<char>(h.order(), 0)};
    auto a = s.sig_g;
    auto b = s.sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (!s.extend(0)) return std::nullopt;
    return s.phi;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// ---------------------------------------------------------------------------
// Enumeration
//
// Every connected graph on k >= 2 vertices has a non-cut vertex (a leaf of a
// spanning tree), so extending each class on k-1 vertices by one vertex with
// every nonempty neighborhood reaches every class on k vertices.

std::vector<Graph> enumerate_connected(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "enumerate_connected needs n >= 1");
    if (n > 8) throw Error(ErrorKind::SizeLimit, "enumerate_connected is capped at n = 8");

    std::vector<Graph> level{Graph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::map<GraphKey, std::vector<std::size_t>> buckets;
        for (const Graph& base : level) {
            for (std::size_t mask = 1; mask < (std::size_t{1} << (k - 1)); ++mask) {
                std::vector<Edge> edges = base.edges();
                for (Vertex v = 0; v + 1 < k; ++v)
                    if (mask >> v & 1) edges.push_back({v, k - 1});
                Graph cand(k, std::move(edges));
                auto& bucket = buckets[graph_key(cand)];
                const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
                    return is_isomorphic(next[i], cand);
                });
                if (seen) continue;
                bucket.push_back(next.size());
                next.push_back(std::move(cand));
            }
        }
        std::stable_sort(next.begin(), next.end(),
                         [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
        level = std::move(next);
    }
    return level;
}

}  // namespace tfg
