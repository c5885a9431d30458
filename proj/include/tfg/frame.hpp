#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tfg/graph.hpp"
#include "tfg/matrix.hpp"
#include "tfg/spectral.hpp"

namespace tfg {

/// A finite frame for R^d given by its d x n synthesis matrix; the columns
/// are the frame vectors. Construction checks that the columns span R^d.
class Frame {
public:
    /// Throws rank-deficient when rank(F F^T) < d, invalid-parameter on an
    /// empty or non-finite matrix.
    explicit Frame(Matrix synthesis, TolerancePolicy tol = {});

    std::size_t dim() const noexcept { return synthesis_.rows(); }
    std::size_t size() const noexcept { return synthesis_.cols(); }
    const Matrix& synthesis() const noexcept { return synthesis_; }
    std::vector<double> vector(std::size_t i) const { return synthesis_.column(i); }

private:
    Matrix synthesis_;
};

/// S = F F^T (d x d)
Matrix frame_operator(const Frame& f);
/// G = F^T F (n x n)
Matrix gramian(const Frame& f);

struct FrameBounds {
    double lower = 0.0;  ///< lambda_min(S)
    double upper = 0.0;  ///< lambda_max(S)
};

FrameBounds frame_bounds(const Frame& f);

enum class Tightness { Parseval, Tight, NotTight };

struct TightnessReport {
    Tightness kind = Tightness::NotTight;
    FrameBounds bounds;
};

/// Tight when B - A <= tol * max(1, B); Parseval when also |B - 1| <= tol.
/// A Parseval verdict is cross-checked against ||G^2 - G||_max <= tol * n and
/// a disagreement throws tolerance-inconsistency.
TightnessReport tightness(const Frame& f, TolerancePolicy tol = {});

/// Parseval test through the Gramian alone: G^2 == G within tol * n.
bool gram_is_projection(const Frame& f, TolerancePolicy tol = {});

/// (1/sqrt(B)) F. Throws not-tight.
Frame rescale_to_parseval(const Frame& f, TolerancePolicy tol = {});

struct GramPattern {
    Graph graph;
    /// Off-diagonal Gram entries whose magnitude lies within a factor of 10
    /// of the threshold; the edge/non-edge decision there is fragile.
    std::vector<Edge> fragile;
};

/// Edge {i,j} iff |G_ij| > tol * max(1, ||G||_max).
GramPattern associated_graph(const Frame& f, TolerancePolicy tol = {});

/// The frame's Gram support equals g as a labeled graph.
bool represents(const Frame& f, const Graph& g, TolerancePolicy tol = {});

/// Parseval frame for R^{n-d} whose rows are the zero-eigenspace
/// eigenvectors of G; its Gramian is I - G. Throws not-parseval and
/// full-rank-gramian (d == n).
Frame naimark_complement(const Frame& f, TolerancePolicy tol = {});

/// Replaces column i by f_i / sqrt(2) and appends another copy of f_i / sqrt(2)
/// as the last column, so the new vertex is n. Throws zero-column.
Frame duplicate_vector(const Frame& f, std::size_t i, TolerancePolicy tol = {});

/// Every (n - e)-subset of the columns still spans R^d.
bool erasure_robustness(const Frame& f, std::size_t erasures, TolerancePolicy tol = {});

/// x = sum over survivors of c_i * S~^{-1} f_i, S~ the survivors' frame operator.
/// Throws survivors-not-spanning.
std::vector<double> reconstruct(const Frame& f, const std::vector<double>& coefficients,
                                const std::vector<std::size_t>& erased, TolerancePolicy tol = {});

/// The analysis operator: (<x, f_i>)_i.
std::vector<double> analyze(const Frame& f, const std::vector<double>& x);

/// Column permutation: column c of f becomes column perm[c].
Frame permute_columns(const Frame& f, const std::vector<std::size_t>& perm);

}  // namespace tfg
