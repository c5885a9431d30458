#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tfg {

using Vertex = std::size_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted by (min endpoint, max endpoint). That order is
/// the canonical edge order: incidence-matrix columns and line-graph vertices
/// follow it.
class Graph {
public:
    /// Throws invalid-parameter on loops, duplicates, n == 0, and
    /// index-out-of-range on endpoints >= n.
    explicit Graph(std::size_t n = 1, std::vector<Edge> edges = {});

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(Vertex a, Vertex b) const;
    std::size_t degree(Vertex a) const;
    /// Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex a) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    std::vector<std::size_t> degrees() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex a) const;

    std::size_t n_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

// ---------------------------------------------------------------------------
// Named families

enum class Family {
    Complete,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    O,
    Diamond,
    Hypercube,
    Beineke,
    Edgeless,
};

struct GraphFamily {
    Family tag;
    std::vector<int> params;
};

/// Canonical labelings:
///  - Star(n), O(n): vertex 0 is the hub; O(n) adds the edge {1,2}.
///  - CompleteBipartite(m,n): the first part is 0..m-1.
///  - Diamond: K_4 without the edge {0,1}.
///  - Hypercube(n): vertices are n-bit words, adjacent when one bit differs.
///  - Beineke(i), i = 1..9: forbidden induced subgraphs for line graphs, with
///    G1 = claw (hub 0), G3 = K_5 - {2,4}, G9 = wheel with hub 0.
Graph gen_named(const GraphFamily& family);

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph o_graph(std::size_t n);
Graph diamond();
Graph hypercube(std::size_t n);
Graph beineke(int index);
Graph edgeless(std::size_t n);

// ---------------------------------------------------------------------------
// Operations

/// (u, u') is vertex u * |V(h)| + u'.
Graph cartesian_product(const Graph& g, const Graph& h);
/// Vertices of h are shifted by |V(g)|.
Graph join(const Graph& g, const Graph& h);
/// Adds vertex n adjacent to u and to every neighbor of u.
Graph duplicate_vertex(const Graph& g, Vertex u);
Graph delete_edge(const Graph& g, Edge e);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
/// Edges whose removal disconnects their component.
std::vector<Edge> bridges(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 8. Ordered by edge count, then generation order.
std::vector<Graph> enumerate_connected(std::size_t n);

/// phi with phi[v] = image in h of vertex v of g, or nullopt.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace tfg
