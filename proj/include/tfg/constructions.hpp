#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tfg/frame.hpp"
#include "tfg/graph.hpp"
#include "tfg/matrix.hpp"
#include "tfg/spectral.hpp"

namespace tfg {

// ---------------------------------------------------------------------------
// Fixed frames

/// Parseval frame for R^2 representing the diamond (non-edge {0,1}):
///   (1/sqrt 10) [ 1/sqrt2  -3/sqrt2  2  1 ]
///               [ 1/sqrt2   3/sqrt2  1  2 ]
Frame diamond_frame();

/// Non-tight 3 x 5 frame (bounds 3/5 and 1) for the triangular prism with
/// one vertex removed.
Frame truncated_prism_frame();

/// Parseval frame for R^2 representing C_4 (0-1-2-3-0).
Frame cycle4_frame();

// ---------------------------------------------------------------------------
// Laplacian-type constructions

/// F = X^T B(p), X the eigenvectors of L(p) for its n-1 largest eigenvalues.
/// The Gramian has the support of the line graph of p (canonical edge order).
/// Throws disconnected-input, empty-edge-set.
Frame laplacian_method(const Graph& p);

/// M = [C D] with C = I - J/(n-1) and D the oriented incidence matrix of
/// K_{n-1}; (n-1) x n(n-1)/2.
Matrix lkn_small_factor(std::size_t n);

/// F~ = X~^T M with X~ spanning the eigenvalue-n eigenspace of M M^T; a tight
/// frame for R^{n-2} with bound n. n >= 3.
Frame lkn_small_frame(std::size_t n);

/// Line graph of K_n labeled in the column order of lkn_small_frame: columns
/// 0..n-2 are the edges {j, n-1}, then the edges of K_{n-1} in canonical order.
Graph lkn_small_graph(std::size_t n);

/// The (n+1) x (n-1) matrix whose columns are an orthonormal basis of the
/// eigenvalue-1 eigenspace of L(S_{n+1}) (hub first).
Matrix star_eigenbasis(std::size_t n);

/// Column 1 plus every other column (1-based: 1, 3, 5, ...); once the odd
/// columns run out, column n-1, then the remaining even columns ascending.
/// Sorted. Repeated frame vectors are avoided whenever 2d >= n.
std::vector<std::size_t> default_star_keep(std::size_t n, std::size_t d);

/// Parseval frame for R^d representing K_n, built from d columns of the star
/// eigenbasis (1-based indices, must include 1). n >= 2, 1 <= d <= n-1.
/// Throws invalid-parameter, bad-keep-set.
Frame star_frame(std::size_t n, std::size_t d,
                 const std::optional<std::vector<std::size_t>>& keep = std::nullopt);

/// F = [J - I, J - (n-1) I]: tight with bound n^2 - 2n + 2, representing
/// K_2 x K_n (vertex (u, u') at u * n + u'). n >= 3.
Frame k2kn_frame(std::size_t n);

// ---------------------------------------------------------------------------
// Completions

struct CompletionResult {
    Frame frame;                              ///< [original | added]
    std::vector<std::vector<double>> added;
    double bound = 0.0;
};

/// Appends sqrt(B - lambda_i) x_i for every frame-operator eigenpair below
/// B = lambda_max. The number appended is the fewest possible.
CompletionResult minimal_tight_completion(const Frame& f, TolerancePolicy tol = {});

/// Two passes over the rows: first cancel each non-orthogonal row pair with a
/// two-entry column, then pad short rows with single-entry columns. Appends at
/// most (d-1)(d+2)/2 columns.
CompletionResult two_step_completion(const Frame& f, TolerancePolicy tol = {});

// ---------------------------------------------------------------------------
// Duplication

/// Diamond frame with column 2 (adjacent to all others) duplicated n-4 times:
/// Parseval for R^2 representing K_n minus {0,1}. n >= 4.
Frame kn_minus_e_frame(std::size_t n);

struct CatalogEntry {
    std::string name;
    Frame frame;
    Graph graph;  ///< the labeled graph the frame represents
};

/// Tight frames obtained by vertex duplication:
///  lo4..lo<max_order>: line graphs of O_n (diamond, duplicating vertex 0),
///  g2: C_4 frame with vertex 0 duplicated,
///  g3: diamond with vertex 2 duplicated,
///  g6: diamond with vertices 0 and 1 duplicated.
std::vector<CatalogEntry> dup_chain_frames(std::size_t max_order = 8);

}  // namespace tfg
