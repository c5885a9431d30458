#include "tfg/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tfg/error.hpp"

namespace tfg {

Frame::Frame(Matrix synthesis, TolerancePolicy tol) : synthesis_(std::move(synthesis)) {
    if (synthesis_.rows() == 0 || synthesis_.cols() == 0)
        throw Error(ErrorKind::InvalidParameter, "frame needs d >= 1 and n >= 1");
    if (!synthesis_.all_finite()) throw Error(ErrorKind::InvalidParameter, "frame has non-finite entries");
    const std::size_t rank = numeric_rank(gram_rows(synthesis_), tol);
    if (rank != synthesis_.rows())
        throw Error(ErrorKind::RankDeficient, "columns span a " + std::to_string(rank) +
                                                  "-dimensional subspace of R^" +
                                                  std::to_string(synthesis_.rows()));
}

Matrix frame_operator(const Frame& f) { return gram_rows(f.synthesis()); }

Matrix gramian(const Frame& f) { return gram_cols(f.synthesis()); }

FrameBounds frame_bounds(const Frame& f) {
    const EigDecomp e = sym_eig(frame_operator(f));
    return {e.values.front(), e.values.back()};
}

bool gram_is_projection(const Frame& f, TolerancePolicy tol) {
    const Matrix g = gramian(f);
    return max_abs_diff(g * g, g) <= tol.rel() * static_cast<double>(f.size());
}

TightnessReport tightness(const Frame& f, TolerancePolicy tol) {
    TightnessReport r;
    r.bounds = frame_bounds(f);
    const double a = r.bounds.lower;
    const double b = r.bounds.upper;
    if (b - a > tol.threshold(b)) {
        r.kind = Tightness::NotTight;
        return r;
    }
    r.kind = std::abs(b - 1.0) <= tol.rel() ? Tightness::Parseval : Tightness::Tight;
    if (r.kind == Tightness::Parseval && !gram_is_projection(f, tol))
        throw Error(ErrorKind::ToleranceInconsistency,
                    "frame operator is the identity but the Gramian is not a projection");
    return r;
}

Frame rescale_to_parseval(const Frame& f, TolerancePolicy tol) {
    const TightnessReport r = tightness(f, tol);
    if (r.kind == Tightness::NotTight) throw Error(ErrorKind::NotTight, "frame bounds differ");
    return Frame(f.synthesis() * (1.0 / std::sqrt(r.bounds.upper)), tol);
}

GramPattern associated_graph(const Frame& f, TolerancePolicy tol) {
    const Matrix g = gramian(f);
    const double limit = tol.threshold(g.max_abs());
    std::vector<Edge> edges;
    std::vector<Edge> fragile;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
            const double x = std::abs(g(i, j));
            if (x > limit) edges.push_back({i, j});
            if (x > limit / 10.0 && x < limit * 10.0) fragile.push_back({i, j});
        }
    }
    return {Graph(f.size(), std::move(edges)), std::move(fragile)};
}

bool represents(const Frame& f, const Graph& g, TolerancePolicy tol) {
    return associated_graph(f, tol).graph == g;
}

Frame naimark_complement(const Frame& f, TolerancePolicy tol) {
    if (tightness(f, tol).kind != Tightness::Parseval)
        throw Error(ErrorKind::NotParseval, "Naimark complement needs a Parseval frame");
    const std::size_t n = f.size();
    const std::size_t d = f.dim();
    if (d == n) throw Error(ErrorKind::FullRankGramian, "d == n leaves an empty complement");

    const EigDecomp e = sym_eig(gramian(f), tol);
    const double limit = tol.threshold(e.values.back());
    std::vector<std::size_t> kernel;
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(e.values[k]) <= limit) kernel.push_back(k);
    if (kernel.size() != n - d)
        throw Error(ErrorKind::ToleranceInconsistency, "Gramian kernel dimension is not n - d");
    return Frame(e.vectors.select_columns(kernel).transpose(), tol);
}

Frame duplicate_vector(const Frame& f, std::size_t i, TolerancePolicy tol) {
    if (i >= f.size()) throw Error(ErrorKind::IndexOutOfRange, "duplicate_vector column");
    const std::vector<double> col = f.vector(i);
    if (norm(col) == 0.0) throw Error(ErrorKind::ZeroColumn, "cannot duplicate a zero vector");
    const Matrix& s = f.synthesis();
    Matrix out(f.dim(), f.size() + 1);
    const double half = std::sqrt(0.5);
    for (std::size_t r = 0; r < f.dim(); ++r) {
        for (std::size_t c = 0; c < f.size(); ++c) out(r, c) = s(r, c);
        out(r, i) = half * col[r];
        out(r, f.size()) = half * col[r];
    }
    return Frame(std::move(out), tol);
}

namespace {

bool spans(const Matrix& synthesis, std::size_t d, TolerancePolicy tol) {
    if (synthesis.cols() < d) return false;
    return numeric_rank(gram_rows(synthesis), tol) == d;
}

std::vector<std::size_t> complement_of(std::size_t n, const std::vector<std::size_t>& removed) {
    std::vector<char> gone(n, 0);
    for (std::size_t k : removed) {
        if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "erased column index");
        gone[k] = 1;
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
        if (!gone[k]) keep.push_back(k);
    return keep;
}

}  // namespace

bool erasure_robustness(const Frame& f, std::size_t erasures, TolerancePolicy tol) {
    const std::size_t n = f.size();
    if (erasures >= n) throw Error(ErrorKind::InvalidParameter, "erasure count must be < n");
    if (erasures == 0) return true;
    // Walk all erasure sets as increasing index tuples.
    std::vector<std::size_t> pick(erasures);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        const auto keep = complement_of(n, pick);
        if (!spans(f.synthesis().select_columns(keep), f.dim(), tol)) return false;
        std::size_t k = erasures;
        while (k > 0 && pick[k - 1] == n - erasures + (k - 1)) --k;
        if (k == 0) return true;
        ++pick[k - 1];
        for (std::size_t j = k; j < erasures; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<double> reconstruct(const Frame& f, const std::vector<double>& coefficients,
                                const std::vector<std::size_t>& erased, TolerancePolicy tol) {
    if (coefficients.size() != f.size())
        throw Error(ErrorKind::InvalidParameter, "one coefficient per frame vector expected");
    const auto keep = complement_of(f.size(), erased);
    const Matrix survivors = f.synthesis().select_columns(keep);
    if (!spans(survivors, f.dim(), tol))
        throw Error(ErrorKind::SurvivorsNotSpanning, "surviving vectors do not span R^d");

    std::vector<double> synthesized(f.dim(), 0.0);
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (std::size_t r = 0; r < f.dim(); ++r) synthesized[r] += coefficients[keep[k]] * survivors(r, k);
    return spd_inverse(gram_rows(survivors), tol) * std::span<const double>(synthesized);
}

std::vector<double> analyze(const Frame& f, const std::vector<double>& x) {
    if (x.size() != f.dim()) throw Error(ErrorKind::InvalidParameter, "vector length must equal d");
    return f.synthesis().transpose() * std::span<const double>(x);
}

Frame permute_columns(const Frame& f, const std::vector<std::size_t>& perm) {
    if (perm.size() != f.size()) throw Error(ErrorKind::InvalidParameter, "permutation size");
    Matrix out(f.dim(), f.size());
    for (std::size_t c = 0; c < f.size(); ++c)
        for (std::size_t r = 0; r < f.dim(); ++r) out(r, perm[c]) = f.synthesis()(r, c);
    return Frame(std::move(out));
}

}  // namespace tfg
