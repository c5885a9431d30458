#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tfg/graph.hpp"
#include "tfg/matrix.hpp"

namespace tfg {

struct IncidenceMatrix {
    Matrix matrix;               ///< n x m
    std::vector<Edge> edge_order;
    bool oriented = true;
};

/// Column j is edge j in canonical order: -1 at the smaller endpoint, +1 at
/// the larger. B * B^T is the Laplacian.
IncidenceMatrix oriented_incidence(const Graph& g);
/// Column j has a 1 at both endpoints of edge j.
IncidenceMatrix unoriented_incidence(const Graph& g);

Matrix adjacency_matrix(const Graph& g);
/// D - A
Matrix laplacian(const Graph& g);

struct LineGraphMap {
    Graph line;
    /// edge_to_vertex[j] is the line-graph vertex of canonical edge j.
    std::vector<Vertex> edge_to_vertex;
};

/// Throws empty-edge-set when g has no edges.
LineGraphMap line_graph(const Graph& g);

/// Injective map from V(h) into V(g) whose image induces a copy of h, if one
/// exists. Candidates are tried in descending degree order.
std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h);

struct LineGraphVerdict {
    bool is_line = true;
    int beineke_index = 0;              ///< 1..9 when !is_line
    std::vector<Vertex> embedding;      ///< Beineke vertex -> g vertex
};

inline constexpr std::size_t kLineGraphSearchLimit = 30;
inline constexpr std::size_t kRootGraphSearchLimit = 30;

/// Beineke test: looks for G1..G9 in index order. Throws size-limit above
/// kLineGraphSearchLimit vertices.
LineGraphVerdict is_line_graph(const Graph& g);

/// All connected root graphs of a connected line graph, up to isomorphism,
/// found by enumerating Krausz partitions (edge partitions into cliques with
/// every vertex in at most two cliques). One graph except for K_3.
///
/// Throws disconnected-input, not-a-line-graph, size-limit.
std::vector<Graph> root_graph(const Graph& g);

}  // namespace tfg
