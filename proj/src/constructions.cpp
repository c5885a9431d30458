#include "tfg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tfg/error.hpp"
#include "tfg/linegraph.hpp"

namespace tfg {

Frame diamond_frame() {
    const double r2 = std::sqrt(2.0);
    Matrix f{{1.0 / r2, -3.0 / r2, 2.0, 1.0}, {1.0 / r2, 3.0 / r2, 1.0, 2.0}};
    return Frame(f * (1.0 / std::sqrt(10.0)));
}

Frame truncated_prism_frame() {
    Matrix f{{1, 1, -1, 1, 1}, {0, 1, 1, -1, 1}, {1, 0, 1, 1, -1}};
    return Frame(f * (1.0 / std::sqrt(5.0)));
}

Frame cycle4_frame() {
    const double h = std::sqrt(0.5);
    return Frame(Matrix{{h, 0.5, 0.0, 0.5}, {0.0, 0.5, h, -0.5}});
}

// ---------------------------------------------------------------------------

namespace {

// Rows of the result are the eigenvectors for the `count` largest eigenvalues.
Matrix top_eigenvectors_t(const Matrix& sym, std::size_t count) {
    const EigDecomp e = sym_eig(sym);
    std::vector<std::size_t> top(count);
    std::iota(top.begin(), top.end(), sym.rows() - count);
    return e.vectors.select_columns(top).transpose();
}

}  // namespace

Frame laplacian_method(const Graph& p) {
    if (p.size() == 0) throw Error(ErrorKind::EmptyEdgeSet, "Laplacian method needs an edge");
    if (!is_connected(p)) throw Error(ErrorKind::DisconnectedInput, "Laplacian method needs a connected graph");
    const Matrix xt = top_eigenvectors_t(laplacian(p), p.order() - 1);
    return Frame(xt * oriented_incidence(p).matrix);
}

Matrix lkn_small_factor(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "L(K_n) in dimension n-2 needs n >= 3");
    const std::size_t k = n - 1;
    Matrix c = Matrix::identity(k) - Matrix::ones(k, k) * (1.0 / static_cast<double>(k));
    return c.hcat(oriented_incidence(complete(k)).matrix);
}

Frame lkn_small_frame(std::size_t n) {
    const Matrix m = lkn_small_factor(n);
    const Matrix xt = top_eigenvectors_t(gram_rows(m), n - 2);
    return Frame(xt * m);
}

Graph lkn_small_graph(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "L(K_n) in dimension n-2 needs n >= 3");
    std::vector<Edge> root_edges;
    for (Vertex j = 0; j + 1 < n; ++j) root_edges.push_back({j, n - 1});
    const Graph inner = complete(n - 1);
    for (const Edge& e : inner.edges()) root_edges.push_back(e);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < root_edges.size(); ++a)
        for (std::size_t b = a + 1; b < root_edges.size(); ++b) {
            const Edge& x = root_edges[a];
            const Edge& y = root_edges[b];
            if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) edges.push_back({a, b});
        }
    return Graph(root_edges.size(), std::move(edges));
}

Matrix star_eigenbasis(std::size_t n) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "star eigenbasis needs n >= 2");
    Matrix x(n + 1, n - 1);
    // Column k (1-based) is zero above row k+1, sqrt((n-k)/(n-k+1)) at row
    // k+1 and -sqrt((n-k)/(n-k+1)) / (n-k) below it (rows 1-based).
    for (std::size_t k = 1; k <= n - 1; ++k) {
        const double top = std::sqrt(static_cast<double>(n - k) / static_cast<double>(n - k + 1));
        const double below = -top / static_cast<double>(n - k);
        x(k, k - 1) = top;
        for (std::size_t row = k + 1; row <= n; ++row) x(row, k - 1) = below;
    }
    return x;
}

std::vector<std::size_t> default_star_keep(std::size_t n, std::size_t d) {
    if (n < 2 || d < 1 || d > n - 1) throw Error(ErrorKind::InvalidParameter, "need n >= 2, 1 <= d <= n-1");
    // Leaves r < r' get identical vectors exactly when no kept column lies in
    // [r-1, r'-1], so column n-1 goes in right after the odd ones.
    std::vector<std::size_t> order;
    for (std::size_t c = 1; c <= n - 1; c += 2) order.push_back(c);
    if ((n - 1) % 2 == 0) order.push_back(n - 1);
    for (std::size_t c = 2; c < n - 1; c += 2) order.push_back(c);
    std::vector<std::size_t> keep(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(d));
    std::sort(keep.begin(), keep.end());
    return keep;
}

Frame star_frame(std::size_t n, std::size_t d, const std::optional<std::vector<std::size_t>>& keep) {
    if (n < 2 || d < 1 || d > n - 1) throw Error(ErrorKind::InvalidParameter, "need n >= 2, 1 <= d <= n-1");
    std::vector<std::size_t> cols = keep ? *keep : default_star_keep(n, d);
    std::sort(cols.begin(), cols.end());
    const bool distinct = std::adjacent_find(cols.begin(), cols.end()) == cols.end();
    const bool in_range = std::all_of(cols.begin(), cols.end(), [&](std::size_t c) { return c >= 1 && c <= n - 1; });
    if (cols.size() != d || !distinct || !in_range || cols.front() != 1)
        throw Error(ErrorKind::BadKeepSet, "keep set must be d distinct columns in 1..n-1 including 1");

    std::vector<std::size_t> zero_based;
    for (std::size_t c : cols) zero_based.push_back(c - 1);
    const Matrix xd = star_eigenbasis(n).select_columns(zero_based);
    return Frame(xd.transpose() * oriented_incidence(star(n + 1)).matrix);
}

Frame k2kn_frame(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "K_2 x K_n frame needs n >= 3");
    const Matrix j = Matrix::ones(n, n);
    const Matrix i = Matrix::identity(n);
    return Frame((j - i).hcat(j - i * static_cast<double>(n - 1)));
}

// ---------------------------------------------------------------------------

CompletionResult minimal_tight_completion(const Frame& f, TolerancePolicy tol) {
    const EigDecomp e = sym_eig(frame_operator(f), tol);
    const std::size_t d = f.dim();
    const double top = e.values.back();
    const auto groups = multiplicity_groups(e.values, tol);
    const std::size_t top_start = groups.back();

    std::vector<std::vector<double>> added;
    Matrix extra(d, top_start);
    for (std::size_t k = 0; k < top_start; ++k) {
        const double w = std::sqrt(top - e.values[k]);
        std::vector<double> h(d);
        for (std::size_t r = 0; r < d; ++r) extra(r, k) = h[r] = w * e.vectors(r, k);
        added.push_back(std::move(h));
    }
    Frame out = top_start == 0 ? f : Frame(f.synthesis().hcat(extra), tol);
    return {std::move(out), std::move(added), top};
}

CompletionResult two_step_completion(const Frame& f, TolerancePolicy tol) {
    const std::size_t d = f.dim();
    const Matrix s = frame_operator(f);
    const double limit = tol.threshold(s.max_abs());

    std::vector<std::vector<double>> added;
    std::vector<double> row_norm2(d);
    for (std::size_t i = 0; i < d; ++i) row_norm2[i] = s(i, i);

    // Each column touches rows i and j only, so it cancels <r_i, r_j> without
    // disturbing any other pair.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const double c = s(i, j);
            if (std::abs(c) <= limit) continue;
            const double w = std::sqrt(std::abs(c));
            std::vector<double> col(d, 0.0);
            col[i] = c > 0.0 ? -w : w;
            col[j] = w;
            row_norm2[i] += w * w;
            row_norm2[j] += w * w;
            added.push_back(std::move(col));
        }
    }

    const double target = *std::max_element(row_norm2.begin(), row_norm2.end());
    for (std::size_t i = 0; i < d; ++i) {
        const double gap = target - row_norm2[i];
        if (gap <= tol.threshold(target)) continue;
        std::vector<double> col(d, 0.0);
        col[i] = std::sqrt(gap);
        added.push_back(std::move(col));
    }

    if (added.empty()) return {f, {}, target};
    Matrix extra(d, added.size());
    for (std::size_t k = 0; k < added.size(); ++k)
        for (std::size_t r = 0; r < d; ++r) extra(r, k) = added[k][r];
    return {Frame(f.synthesis().hcat(extra), tol), std::move(added), target};
}

// ---------------------------------------------------------------------------

Frame kn_minus_e_frame(std::size_t n) {
    if (n < 4) throw Error(ErrorKind::InvalidParameter, "K_n - e frame needs n >= 4");
    Frame f = diamond_frame();
    for (std::size_t k = 4; k < n; ++k) f = duplicate_vector(f, 2);
    return f;
}

std::vector<CatalogEntry> dup_chain_frames(std::size_t max_order) {
    std::vector<CatalogEntry> out;
    Frame f = diamond_frame();
    Graph g = diamond();
    for (std::size_t n = 4; n <= max_order; ++n) {
        out.push_back({"lo" + std::to_string(n), f, g});
        // Vertex 0 is the clique vertex not adjacent to the outside vertex 1.
        f = duplicate_vector(f, 0);
        g = duplicate_vertex(g, 0);
    }
    out.push_back({"g2", duplicate_vector(cycle4_frame(), 0), duplicate_vertex(cycle(4), 0)});
    out.push_back({"g3", duplicate_vector(diamond_frame(), 2), duplicate_vertex(diamond(), 2)});
    out.push_back({"g6", duplicate_vector(duplicate_vector(diamond_frame(), 0), 1),
                   duplicate_vertex(duplicate_vertex(diamond(), 0), 1)});
    return out;
}

}  // namespace tfg
