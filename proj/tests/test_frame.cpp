#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tfg/error.hpp"
#include "tfg/frame.hpp"
#include "tfg/graph.hpp"
#include "tfg/linegraph.hpp"

using namespace tfg;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

// The displayed 2 x 4 diamond frame, written out entry by entry.
Matrix diamond_matrix() {
    const double s = 1.0 / std::sqrt(10.0);
    const double r = 1.0 / std::sqrt(2.0);
    return Matrix{{s * r, -3 * s * r, 2 * s, s}, {s * r, 3 * s * r, s, 2 * s}};
}

Matrix prism_matrix() {
    const double s = 1.0 / std::sqrt(5.0);
    return Matrix{{s, s, -s, s, s}, {0, s, s, -s, s}, {s, 0, s, s, -s}};
}

// Frame operator by explicit outer-product sums.
Matrix outer_sum(const Matrix& f) {
    Matrix s(f.rows(), f.rows());
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.rows(); ++j) s(i, j) += f(i, c) * f(j, c);
    return s;
}

// Eigenvalues of a symmetric 2 x 2 matrix in closed form.
std::pair<double, double> eig2(const Matrix& s) {
    const double mid = (s(0, 0) + s(1, 1)) / 2;
    const double rad = std::sqrt((s(0, 0) - s(1, 1)) * (s(0, 0) - s(1, 1)) / 4 + s(0, 1) * s(0, 1));
    return {mid - rad, mid + rad};
}

double det(Matrix a) {
    const std::size_t n = a.rows();
    double d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (a(p, c) == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double m = a(r, c) / a(c, c);
            for (std::size_t k = c; k < n; ++k) a(r, k) -= m * a(c, k);
        }
    }
    return d;
}

// Robust to e erasures iff every survivor set has a nonsingular frame operator.
bool brute_robust(const Matrix& f, std::size_t e) {
    const std::size_t n = f.cols();
    bool ok = true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != e) continue;
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < n; ++c)
            if (!(mask >> c & 1u)) keep.push_back(c);
        ok = ok && std::abs(det(outer_sum(f.select_columns(keep)))) > 1e-9;
    }
    return ok;
}

Graph support(const Matrix& g, double threshold) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j)
            if (std::abs(g(i, j)) > threshold) edges.push_back({i, j});
    return Graph(g.rows(), edges);
}

// Random d x n Parseval frame: d orthonormal rows from an eigenbasis.
Matrix random_parseval(std::size_t d, std::size_t n, std::mt19937& rng) {
    std::normal_distribution<double> z;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = z(rng);
    const Matrix v = sym_eig(m).vectors;
    std::vector<std::size_t> cols(d);
    for (std::size_t k = 0; k < d; ++k) cols[k] = k;
    return v.select_columns(cols).transpose();
}

}  // namespace

TEST_CASE("frame operator and Gramian") {
    const Frame d(diamond_matrix());
    CHECK(max_abs_diff(frame_operator(d), Matrix::identity(2)) <= 1e-15);
    CHECK(max_abs_diff(frame_operator(d), outer_sum(diamond_matrix())) <= 1e-15);
    CHECK(max_abs_diff(gramian(d), gram_cols(diamond_matrix())) == 0);

    const Frame unit(Matrix{{1.0}});
    CHECK(frame_operator(unit) == Matrix{{1.0}});
    CHECK(gramian(unit) == Matrix{{1.0}});

    const Frame p(prism_matrix());
    CHECK(max_abs_diff(frame_operator(p), Matrix{{1, 0, 0}, {0, 0.8, -0.2}, {0, -0.2, 0.8}}) <= 1e-15);
}

TEST_CASE("frame construction rejects non-spanning and malformed input") {
    CHECK(kind_of([] { Frame(Matrix{{1, 2}, {2, 4}}); }) == ErrorKind::RankDeficient);
    CHECK(kind_of([] { Frame(Matrix(0, 0)); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { Frame(Matrix{{1, std::nan("")}}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { Frame(Matrix(2, 1, 1.0)); }) == ErrorKind::RankDeficient);
}

TEST_CASE("frame bounds") {
    const FrameBounds b = frame_bounds(Frame(prism_matrix()));
    CHECK(b.lower == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<std::size_t> first3{0, 1, 2};
    const Matrix minus4 = diamond_matrix().select_columns(first3);
    const FrameBounds m = frame_bounds(Frame(minus4));
    CHECK(m.lower == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.upper == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 50; ++t) {
        Matrix f(2, 3 + t % 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) = u(rng);
        const auto [lo, hi] = eig2(outer_sum(f));
        const FrameBounds fb = frame_bounds(Frame(f));
        CHECK(fb.lower == doctest::Approx(lo).epsilon(1e-10));
        CHECK(fb.upper == doctest::Approx(hi).epsilon(1e-10));
    }
}

TEST_CASE("tightness verdicts") {
    CHECK(tightness(Frame(diamond_matrix())).kind == Tightness::Parseval);
    const TightnessReport t = tightness(Frame(diamond_matrix() * 2.0));
    CHECK(t.kind == Tightness::Tight);
    CHECK(t.bounds.upper == doctest::Approx(4.0));
    const TightnessReport n = tightness(Frame(prism_matrix()));
    CHECK(n.kind == Tightness::NotTight);
    CHECK(n.bounds.lower == doctest::Approx(0.6));

    // The S-based and G^2 = G Parseval tests agree on Parseval and non-Parseval frames.
    CHECK(gram_is_projection(Frame(diamond_matrix())));
    CHECK_FALSE(gram_is_projection(Frame(diamond_matrix() * 2.0)));
    CHECK_FALSE(gram_is_projection(Frame(prism_matrix())));

    std::mt19937 rng(17);
    for (int k = 0; k < 20; ++k) {
        const Frame f(random_parseval(1 + k % 5, 6 + k % 4, rng));
        CHECK(tightness(f).kind == Tightness::Parseval);
        CHECK(gram_is_projection(f));
    }

    // Tolerance decides near-tight frames.
    Matrix near = Matrix::identity(2);
    near(1, 1) = 1.0 + 1e-7;
    CHECK(tightness(Frame(near)).kind == Tightness::NotTight);
    CHECK(tightness(Frame(near), TolerancePolicy(1e-6)).kind == Tightness::Parseval);
}

TEST_CASE("rescaling preserves the labeled pattern") {
    const Frame doubled(diamond_matrix() * 2.0);
    const Frame back = rescale_to_parseval(doubled);
    CHECK(max_abs_diff(back.synthesis(), diamond_matrix()) <= 1e-15);
    CHECK(associated_graph(back).graph == associated_graph(doubled).graph);

    // Laplacian-method frame for K_3: rows are the two top eigenvectors of L(K_3).
    const Matrix l = laplacian(complete(3));
    const EigDecomp e = sym_eig(l);
    const std::vector<std::size_t> top{1, 2};
    const Frame lap(e.vectors.select_columns(top).transpose() * oriented_incidence(complete(3)).matrix);
    const TightnessReport r = tightness(lap);
    CHECK(r.kind == Tightness::Tight);
    CHECK(r.bounds.upper == doctest::Approx(3.0));
    const Frame lp = rescale_to_parseval(lap);
    CHECK(tightness(lp).kind == Tightness::Parseval);
    CHECK(associated_graph(lp).graph == complete(3));

    CHECK(kind_of([] { rescale_to_parseval(Frame(prism_matrix())); }) == ErrorKind::NotTight);
}

TEST_CASE("associated graph") {
    const GramPattern d = associated_graph(Frame(diamond_matrix()));
    CHECK(d.graph == diamond());
    CHECK(d.fragile.empty());
    CHECK(represents(Frame(diamond_matrix()), diamond()));
    CHECK_FALSE(represents(Frame(diamond_matrix()), complete(4)));
    CHECK(associated_graph(Frame(Matrix::identity(4))).graph == edgeless(4));

    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        const Matrix f = random_parseval(3, 7, rng);
        CHECK(associated_graph(Frame(f)).graph == support(gram_cols(f), 1e-9));
    }

    // An entry just above the threshold is an edge and is reported as fragile.
    Matrix f{{1, 3e-9}, {0, 1}};
    const GramPattern p = associated_graph(Frame(f));
    CHECK(p.graph.adjacent(0, 1));
    REQUIRE(p.fragile.size() == 1);
    CHECK(p.fragile[0] == Edge{0, 1});
}

TEST_CASE("Naimark complement") {
    const Frame d(diamond_matrix());
    const Frame c = naimark_complement(d);
    CHECK(c.dim() == 2);
    CHECK(c.size() == 4);
    CHECK(tightness(c).kind == Tightness::Parseval);
    CHECK(max_abs_diff(gramian(c) + gramian(d), Matrix::identity(4)) <= 1e-12);
    CHECK(associated_graph(c).graph == diamond());
    const Frame cc = naimark_complement(c);
    CHECK(max_abs_diff(gramian(cc), gramian(d)) <= 1e-12);

    std::mt19937 rng(23);
    for (int k = 0; k < 20; ++k) {
        const std::size_t dd = 1 + k % 4;
        const std::size_t n = dd + 1 + k % 5;
        const Frame f(random_parseval(dd, n, rng));
        const Frame comp = naimark_complement(f);
        CHECK(comp.dim() == n - dd);
        CHECK(max_abs_diff(gramian(comp) + gramian(f), Matrix::identity(n)) <= 1e-9 * n);
        CHECK(associated_graph(comp).graph == associated_graph(f).graph);
    }

    CHECK(kind_of([] { naimark_complement(Frame(Matrix::identity(3))); }) == ErrorKind::FullRankGramian);
    CHECK(kind_of([] { naimark_complement(Frame(prism_matrix())); }) == ErrorKind::NotParseval);
}

TEST_CASE("vector duplication") {
    const Frame d(diamond_matrix());
    for (std::size_t i = 0; i < 4; ++i) {
        const Frame dup = duplicate_vector(d, i);
        CHECK(dup.size() == 5);
        CHECK(max_abs_diff(frame_operator(dup), frame_operator(d)) <= 1e-15);
        CHECK(associated_graph(dup).graph == duplicate_vertex(diamond(), i));
        CHECK(tightness(dup).kind == Tightness::Parseval);
    }
    // Duplicating the vertex adjacent to all others gives K_5 - e.
    CHECK(associated_graph(duplicate_vector(d, 2)).graph == delete_edge(complete(5), {0, 1}));

    const double h = std::sqrt(0.5);
    const Frame c4(Matrix{{h, 0.5, 0.0, 0.5}, {0.0, 0.5, h, -0.5}});
    CHECK(associated_graph(c4).graph == cycle(4));
    CHECK(oracle::isomorphic(associated_graph(duplicate_vector(c4, 0)).graph, beineke(2)));

    CHECK(kind_of([] { duplicate_vector(Frame(Matrix{{1, 0, 0}, {0, 1, 0}}), 2); }) == ErrorKind::ZeroColumn);
    CHECK(kind_of([&] { duplicate_vector(d, 4); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("erasures and reconstruction") {
    const Frame d(diamond_matrix());
    CHECK(erasure_robustness(d, 0));
    CHECK(erasure_robustness(d, 1));
    CHECK(erasure_robustness(d, 2));
    CHECK_FALSE(erasure_robustness(d, 3));
    CHECK(kind_of([&] { erasure_robustness(d, 4); }) == ErrorKind::InvalidParameter);

    const std::vector<std::size_t> repeat{0, 1, 2, 2};
    const Frame rep(diamond_matrix().select_columns(repeat));
    CHECK(erasure_robustness(rep, 1));
    CHECK_FALSE(erasure_robustness(rep, 2));

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> small(-1, 1);
    for (int t = 0; t < 60; ++t) {
        Matrix f(2 + t % 2, 5);
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) = small(rng);
        if (std::abs(det(outer_sum(f))) < 1e-9) continue;
        const Frame fr(f);
        for (std::size_t e = 0; e < 5; ++e) CHECK(erasure_robustness(fr, e) == brute_robust(f, e));
    }

    const std::vector<double> x{1, 2};
    const auto c = analyze(d, x);
    const auto rec = reconstruct(d, c, {0, 2});
    CHECK(rec[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rec[1] == doctest::Approx(2.0).epsilon(1e-12));
    const auto all = reconstruct(d, c, {});
    CHECK(all[0] == doctest::Approx(1.0));
    CHECK(all[1] == doctest::Approx(2.0));
    CHECK(kind_of([&] { reconstruct(d, c, {0, 1, 2}); }) == ErrorKind::SurvivorsNotSpanning);
    CHECK(kind_of([&] { reconstruct(rep, analyze(rep, x), {0, 1}); }) == ErrorKind::SurvivorsNotSpanning);

    for (int t = 0; t < 20; ++t) {
        const Frame f(random_parseval(3, 8, rng));
        std::vector<double> y{0.3 * t, -1.0, 2.5};
        const auto got = reconstruct(f, analyze(f, y), {static_cast<std::size_t>(t % 8), static_cast<std::size_t>((t + 3) % 8)});
        const double scale = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
        for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(got[k] - y[k]) <= 1e-8 * scale);
    }
}

TEST_CASE("spectra of S and G agree on their nonzero part") {
    std::mt19937 rng(41);
    std::normal_distribution<double> z;
    for (int t = 0; t < 20; ++t) {
        Matrix f(1 + t % 4, 5 + t % 3);
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) = z(rng);
        const Frame fr(f);
        const auto s = sym_eig(frame_operator(fr)).values;
        const auto g = sym_eig(gramian(fr)).values;
        const std::size_t offset = g.size() - s.size();
        for (std::size_t k = 0; k < offset; ++k) CHECK(std::abs(g[k]) <= 1e-9 * std::max(1.0, g.back()));
        for (std::size_t k = 0; k < s.size(); ++k) CHECK(g[offset + k] == doctest::Approx(s[k]).epsilon(1e-9));
        CHECK(numeric_rank(gramian(fr)) == fr.dim());
    }
}

TEST_CASE("column permutation") {
    const Frame d(diamond_matrix());
    const std::vector<std::size_t> perm{2, 0, 3, 1};
    const Frame p = permute_columns(d, perm);
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t r = 0; r < 2; ++r) CHECK(p.synthesis()(r, perm[c]) == d.synthesis()(r, c));
    CHECK(associated_graph(p).graph == relabel(diamond(), perm));
}
