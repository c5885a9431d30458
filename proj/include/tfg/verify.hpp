#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tfg/frame.hpp"
#include "tfg/graph.hpp"
#include "tfg/spectral.hpp"

namespace tfg {

/// Non-adjacent u < v whose only common neighbor is w.
struct NeighborWitness {
    Vertex u = 0;
    Vertex v = 0;
    Vertex w = 0;

    bool operator==(const NeighborWitness&) const = default;
};

/// Lexicographically first non-adjacent pair with exactly one common neighbor.
std::optional<NeighborWitness> neighbor_obstruction(const Graph& g);

/// True when the witness is non-adjacent with {w} as its common neighborhood.
bool validate_witness(const Graph& g, const NeighborWitness& w);

/// First edge (canonical order) lying on no 3-cycle and no 4-cycle.
/// Throws too-small (fewer than 3 vertices) and disconnected-input.
std::optional<Edge> edge_cycle_check(const Graph& g);

struct RootObstructions {
    /// p-vertices of an induced path a-b-c-d; L(p) is then not tight.
    std::optional<std::array<Vertex, 4>> induced_p4;
    /// Degree-1 vertex of L(p); p is then not tight.
    std::optional<Vertex> pendant_vertex;
    /// Triangle of L(p), the two degree-2 vertices first; p is then not tight.
    std::optional<std::array<Vertex, 3>> pendant_triangle;
};

/// Vertices of L(p) are numbered in the canonical edge order of p.
RootObstructions root_obstructions(const Graph& p);

enum class Verdict { Tight, NotTight, LiteratureNotTight, Unknown };

const char* to_string(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Unknown;
    /// Tight: catalog entry name. LiteratureNotTight: citation tag.
    std::string source;
    /// Tight: a frame whose Gram support is the input graph, labeled.
    std::optional<Frame> frame;
    std::optional<NeighborWitness> neighbor;
    std::optional<Edge> cycle_free_edge;
};

/// Catalog construction, then obstruction tests, then cited results.
/// Throws disconnected-input.
Certificate classify(const Graph& g, TolerancePolicy tol = {});

/// Catalog lookups use isomorphism testing only up to this many vertices.
inline constexpr std::size_t kClassifyCatalogLimit = 30;

struct SweepReport {
    std::size_t checked = 0;
    std::size_t exempt = 0;
    std::vector<Graph> counterexamples;
};

/// For every connected P with 2 <= |V| <= max_n: if P is unicyclic and not
/// C_3, C_4 or O_n, or a tree other than a star, L(P) must have a neighbor
/// obstruction; the exempt graphs must have line graphs classified Tight.
/// Throws size-limit when max_n > 7.
SweepReport root_order_theorem_check(std::size_t max_n);

/// Every connected P with |V| <= max_n that contains an induced P_4 must have
/// a neighbor obstruction in L(P). Throws size-limit when max_n > 7.
SweepReport lemma_p4_check(std::size_t max_n);

struct JoinRecord {
    Graph left;
    Graph right;
    int beineke_index = 0;
};

struct JoinReport {
    std::vector<JoinRecord> records;
    /// Joins that were line graphs or whose first Beineke witness exceeded G3.
    std::vector<JoinRecord> counterexamples;
};

/// All pairs (i <= j) of connected graphs on 3..max_n vertices, not both
/// complete: the join is not a line graph. Throws size-limit when max_n > 5.
JoinReport join_line_check(std::size_t max_n);

}  // namespace tfg
