#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tfg/constructions.hpp"
#include "tfg/error.hpp"
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

bool is_tight_with(const Frame& f, double bound, double tol) {
    return max_abs_diff(frame_operator(f), Matrix::identity(f.dim()) * bound) <= tol;
}

// Line graph of K_n with root edges ordered as lkn_small_graph documents,
// computed from scratch.
Graph lkn_oracle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> root;
    for (std::size_t j = 0; j + 1 < n; ++j) root.emplace_back(j, n - 1);
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = a + 1; b + 1 < n; ++b) root.emplace_back(a, b);
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < root.size(); ++x)
        for (std::size_t y = x + 1; y < root.size(); ++y) {
            const auto [a, b] = root[x];
            const auto [c, d] = root[y];
            if (a == c || a == d || b == c || b == d) edges.push_back({x, y});
        }
    return Graph(root.size(), edges);
}

std::vector<std::vector<std::size_t>> keep_sets(std::size_t n, std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t others = n - 2;  // columns 2..n-1
    for (unsigned mask = 0; mask < (1u << others); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != d - 1) continue;
        std::vector<std::size_t> keep{1};
        for (std::size_t k = 0; k < others; ++k)
            if (mask >> k & 1u) keep.push_back(k + 2);
        out.push_back(keep);
    }
    return out;
}

bool has_repeated_columns(const Frame& f) {
    const Matrix& m = f.synthesis();
    for (std::size_t a = 0; a < m.cols(); ++a)
        for (std::size_t b = a + 1; b < m.cols(); ++b) {
            bool same = true;
            for (std::size_t r = 0; r < m.rows() && same; ++r) same = std::abs(m(r, a) - m(r, b)) <= 1e-12;
            if (same) return true;
        }
    return false;
}

Matrix without_column(const Matrix& m, std::size_t drop) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (c != drop) keep.push_back(c);
    return m.select_columns(keep);
}

}  // namespace

TEST_CASE("fixed frames reproduce the displayed matrices") {
    const Frame d = diamond_frame();
    const double s = 1 / std::sqrt(10.0), r = 1 / std::sqrt(2.0);
    CHECK(max_abs_diff(d.synthesis(), Matrix{{s * r, -3 * s * r, 2 * s, s}, {s * r, 3 * s * r, s, 2 * s}}) <= 1e-15);
    CHECK(tightness(d).kind == Tightness::Parseval);
    CHECK(associated_graph(d).graph == diamond());

    const Frame p = truncated_prism_frame();
    const FrameBounds b = frame_bounds(p);
    CHECK(std::abs(b.lower - 0.6) <= 1e-12);
    CHECK(std::abs(b.upper - 1.0) <= 1e-12);
    // Prism K_2 x K_3 with one vertex removed.
    const Graph prism = cartesian_product(complete(2), complete(3));
    CHECK(oracle::isomorphic(associated_graph(p).graph, induced_subgraph(prism, {1, 2, 3, 4, 5})));

    CHECK(tightness(cycle4_frame()).kind == Tightness::Parseval);
    CHECK(associated_graph(cycle4_frame()).graph == cycle(4));
}

TEST_CASE("Laplacian method") {
    const Frame k3 = laplacian_method(complete(3));
    CHECK(k3.dim() == 2);
    CHECK(is_tight_with(k3, 3.0, 1e-12));

    const auto s3 = sym_eig(frame_operator(laplacian_method(star(3)))).values;
    CHECK(std::abs(s3[0] - 1) <= 1e-12);
    CHECK(std::abs(s3[1] - 3) <= 1e-12);
    CHECK(associated_graph(laplacian_method(path(3))).graph == complete(2));

    // Gram(F) = B^T B for every connected root on <= 6 vertices, since the
    // dropped eigenvector is orthogonal to every incidence column.
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const Frame f = laplacian_method(g);
            const Matrix bb = gram_cols(oriented_incidence(g).matrix);
            CHECK(max_abs_diff(gramian(f), bb) <= 1e-10);
            CHECK(associated_graph(f).graph == line_graph(g).line);
            // Frame operator spectrum = nonzero Laplacian spectrum.
            const auto lap = sym_eig(laplacian(g)).values;
            const auto fs = sym_eig(frame_operator(f)).values;
            for (std::size_t k = 0; k < fs.size(); ++k) CHECK(std::abs(fs[k] - lap[k + 1]) <= 1e-10);
        }
    }
    CHECK(kind_of([] { laplacian_method(edgeless(3)); }) == ErrorKind::EmptyEdgeSet);
    CHECK(kind_of([] { laplacian_method(Graph(4, {{0, 1}, {2, 3}})); }) == ErrorKind::DisconnectedInput);
}

TEST_CASE("L(K_n) in dimension n - 2") {
    for (std::size_t n = 3; n <= 10; ++n) {
        CAPTURE(n);
        const Matrix m = lkn_small_factor(n);
        CHECK(m.rows() == n - 1);
        CHECK(m.cols() == n * (n - 1) / 2);
        const auto spec = sym_eig(gram_rows(m)).values;
        CHECK(std::abs(spec[0]) <= 1e-10);
        for (std::size_t k = 1; k < spec.size(); ++k) CHECK(std::abs(spec[k] - static_cast<double>(n)) <= 1e-10);

        const Frame f = lkn_small_frame(n);
        CHECK(f.dim() == n - 2);
        CHECK(is_tight_with(f, static_cast<double>(n), 1e-9));
        CHECK(lkn_small_graph(n) == lkn_oracle(n));
        CHECK(associated_graph(f).graph == lkn_small_graph(n));
    }
    CHECK(associated_graph(lkn_small_frame(3)).graph == complete(3));
    CHECK(oracle::isomorphic(lkn_small_graph(4), line_graph(complete(4)).line));
    CHECK(kind_of([] { lkn_small_frame(2); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("star eigenbasis") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const Matrix x = star_eigenbasis(n);
        REQUIRE(x.rows() == n + 1);
        REQUIRE(x.cols() == n - 1);
        CHECK(max_abs_diff(gram_cols(x), Matrix::identity(n - 1)) <= 1e-14);
        CHECK(max_abs_diff(laplacian(star(n + 1)) * x, x) <= 1e-14);
        for (std::size_t c = 0; c < n - 1; ++c) CHECK(x(0, c) == 0.0);
    }
    // n = 2, d = 1: F = sqrt(1/2) [1, -1].
    const Frame f = star_frame(2, 1);
    CHECK(std::abs(f.synthesis()(0, 0) - std::sqrt(0.5)) <= 1e-15);
    CHECK(std::abs(f.synthesis()(0, 1) + std::sqrt(0.5)) <= 1e-15);
    CHECK(associated_graph(f).graph == complete(2));
}

TEST_CASE("star method: every keep set containing column 1") {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::size_t d = 1; d <= n - 1; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            const Frame def = star_frame(n, d);
            CHECK(def.dim() == d);
            CHECK(def.size() == n);
            CHECK(max_abs_diff(frame_operator(def), Matrix::identity(d)) <= 1e-12);
            CHECK(associated_graph(def).graph == complete(n));

            const auto keep = default_star_keep(n, d);
            CHECK(keep.size() == d);
            CHECK(keep.front() == 1);

            bool avoidable = false;
            for (const auto& k : keep_sets(n, d)) {
                const Frame f = star_frame(n, d, k);
                const Matrix g = gramian(f);
                double smallest = 1e300;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) smallest = std::min(smallest, std::abs(g(i, j)));
                CHECK(smallest > 1e-6);
                CHECK(max_abs_diff(frame_operator(f), Matrix::identity(d)) <= 1e-12);
                avoidable = avoidable || !has_repeated_columns(f);
            }
            if (d >= 2) CHECK(avoidable == (2 * d >= n));
            if (d >= 2 && avoidable) CHECK_FALSE(has_repeated_columns(def));
        }
    }
    CHECK(default_star_keep(7, 4) == std::vector<std::size_t>{1, 3, 5, 6});
    CHECK(default_star_keep(9, 3) == std::vector<std::size_t>{1, 3, 5});

    CHECK(kind_of([] { star_frame(5, 2, std::vector<std::size_t>{2, 3}); }) == ErrorKind::BadKeepSet);
    CHECK(kind_of([] { star_frame(5, 2, std::vector<std::size_t>{1, 1}); }) == ErrorKind::BadKeepSet);
    CHECK(kind_of([] { star_frame(5, 2, std::vector<std::size_t>{1, 5}); }) == ErrorKind::BadKeepSet);
    CHECK(kind_of([] { star_frame(5, 2, std::vector<std::size_t>{1, 2, 3}); }) == ErrorKind::BadKeepSet);
    CHECK(kind_of([] { star_frame(5, 5); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { star_frame(1, 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("K_2 x K_n frame") {
    for (std::size_t n = 3; n <= 10; ++n) {
        CAPTURE(n);
        const Frame f = k2kn_frame(n);
        const double bound = static_cast<double>(n * n - 2 * n + 2);
        CHECK(is_tight_with(f, bound, 1e-9));
        CHECK(associated_graph(f).graph == cartesian_product(complete(2), complete(n)));
        const Matrix g = gramian(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(g(i, n + j) == (i == j ? static_cast<double>(n - 1) : 0.0));
                if (i != j) CHECK(g(i, j) == static_cast<double>(n - 2));
            }
    }
    CHECK(max_abs_diff(frame_operator(k2kn_frame(3)), Matrix::identity(3) * 5.0) == 0);
    CHECK(kind_of([] { k2kn_frame(2); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("minimal tight completion") {
    const CompletionResult r = minimal_tight_completion(truncated_prism_frame());
    REQUIRE(r.added.size() == 1);
    const double s = 1 / std::sqrt(5.0);
    const double sign = r.added[0][1] > 0 ? 1.0 : -1.0;
    CHECK(std::abs(r.added[0][0]) <= 1e-9);
    CHECK(std::abs(r.added[0][1] - sign * s) <= 1e-9);
    CHECK(std::abs(r.added[0][2] - sign * s) <= 1e-9);
    CHECK(tightness(r.frame).kind == Tightness::Parseval);
    CHECK(std::abs(r.bound - 1.0) <= 1e-12);
    // Column-equivalent to the displayed completed matrix.
    const Matrix f2 = Matrix{{1, 1, -1, 1, 1, 0}, {0, 1, 1, -1, 1, 1}, {1, 0, 1, 1, -1, 1}} * s;
    Matrix ours = r.frame.synthesis();
    if (sign < 0)
        for (std::size_t k = 0; k < 3; ++k) ours(k, 5) = -ours(k, 5);
    CHECK(max_abs_diff(ours, f2) <= 1e-9);
    Graph expected(6, {{0, 1}, {0, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {0, 5}, {1, 5}, {2, 5}});
    CHECK(associated_graph(r.frame).graph == expected);

    CHECK(minimal_tight_completion(diamond_frame()).added.empty());

    const Frame minus4(without_column(diamond_frame().synthesis(), 3));
    const CompletionResult m4 = minimal_tight_completion(minus4);
    CHECK(m4.added.size() == 1);
    CHECK(tightness(m4.frame).kind == Tightness::Parseval);

    // Count equals the eigenvalues strictly below the top group; result tight.
    std::mt19937 rng(8);
    std::normal_distribution<double> z;
    for (int t = 0; t < 40; ++t) {
        Matrix f(1 + t % 5, 6);
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) = z(rng);
        const Frame fr(f);
        const auto vals = sym_eig(frame_operator(fr)).values;
        std::size_t below = 0;
        for (double v : vals) below += v < vals.back() - 1e-9 * std::max(1.0, vals.back());
        const CompletionResult c = minimal_tight_completion(fr);
        CHECK(c.added.size() == below);
        CHECK(tightness(c.frame).kind != Tightness::NotTight);
        CHECK(std::abs(frame_bounds(c.frame).upper - vals.back()) <= 1e-9 * vals.back());
    }
}

TEST_CASE("minimal completion cannot be beaten: Weyl gap survives optimized searches") {
    // With k eigenvalues below B, any k - 1 extra columns leave
    // lambda_min <= lambda_k(S) < B <= lambda_max, so the spread stays at
    // least B - lambda_k. Gradient descent on ||S + H H^T - cI||_F tries hard
    // to close it and must fail.
    std::mt19937 rng(12);
    std::normal_distribution<double> z;
    const std::vector<Frame> frames{truncated_prism_frame(), Frame(without_column(diamond_frame().synthesis(), 3)),
                                    Frame(Matrix{{1, 0, 0, 0.5}, {0, 2, 0, 0.1}, {0, 0, 3, 0.2}})};
    for (const Frame& f : frames) {
        const Matrix s = frame_operator(f);
        const std::size_t d = f.dim();
        const auto vals = sym_eig(s).values;
        const std::size_t k = minimal_tight_completion(f).added.size();
        REQUIRE(k >= 1);
        const double gap = vals.back() - vals[k - 1];
        if (k == 1) {
            // No columns at all: the spread is B - A itself.
            CHECK(vals.back() - vals.front() >= gap - 1e-12);
            continue;
        }
        for (int restart = 0; restart < 20; ++restart) {
            Matrix h(d, k - 1);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < k - 1; ++j) h(i, j) = z(rng);
            for (int it = 0; it < 2000; ++it) {
                Matrix r = s + gram_rows(h);
                double tr = 0;
                for (std::size_t i = 0; i < d; ++i) tr += r(i, i);
                r -= Matrix::identity(d) * (tr / d);
                h -= (r * h) * 0.01;
            }
            const auto got = sym_eig(s + gram_rows(h)).values;
            CHECK(got.back() - got.front() >= gap - 1e-9);
        }
    }
}

TEST_CASE("two-step completion") {
    const CompletionResult p = two_step_completion(truncated_prism_frame());
    CHECK(p.added.size() == 1);
    CHECK(tightness(p.frame).kind == Tightness::Parseval);

    const Frame minus4(without_column(diamond_frame().synthesis(), 3));
    const CompletionResult m4 = two_step_completion(minus4);
    CHECK(m4.added.size() == 2);
    CHECK(tightness(m4.frame).kind != Tightness::NotTight);

    CHECK(two_step_completion(diamond_frame()).added.empty());
    CHECK(two_step_completion(k2kn_frame(4)).added.empty());

    std::mt19937 rng(21);
    std::normal_distribution<double> z;
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + t % 6;
        Matrix f(d, d + 2);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d + 2; ++j) f(i, j) = z(rng);
        const Frame fr(f);
        const CompletionResult c = two_step_completion(fr);
        CHECK(c.added.size() <= (d - 1) * (d + 2) / 2);
        CHECK(tightness(c.frame).kind != Tightness::NotTight);
        CHECK(std::abs(frame_bounds(c.frame).upper - c.bound) <= 1e-9 * c.bound);

        // Each pair-cancelling column touches exactly two rows; adding it
        // changes only that pair's inner product.
        const Matrix s0 = frame_operator(fr);
        Matrix running = s0;
        for (const auto& col : c.added) {
            std::vector<std::size_t> rows;
            for (std::size_t r = 0; r < d; ++r)
                if (col[r] != 0.0) rows.push_back(r);
            if (rows.size() != 2) continue;
            Matrix next = running;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) next(i, j) += col[i] * col[j];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    const bool target = i == rows[0] && j == rows[1];
                    if (target)
                        CHECK(std::abs(next(i, j)) <= 1e-12 * std::max(1.0, s0.max_abs()));
                    else
                        CHECK(next(i, j) == running(i, j));
                }
            running = next;
        }
    }
}

TEST_CASE("displayed completion F_1 is Parseval") {
    const double r5 = std::sqrt(5.0);
    const Matrix f1 = Matrix{{1, 1, -1, 1, 1, 0, 2, 0},
                             {0, 1, 1, -1, 1, r5, 0, 0},
                             {1, 0, 1, 1, -1, 1 / r5, 0, 2 * std::sqrt(30.0) / 5}} *
                      (1.0 / 3.0);
    CHECK(tightness(Frame(f1)).kind == Tightness::Parseval);
}

TEST_CASE("K_n - e by duplication") {
    CHECK(kn_minus_e_frame(4).synthesis() == diamond_frame().synthesis());
    for (std::size_t n = 4; n <= 10; ++n) {
        CAPTURE(n);
        const Frame f = kn_minus_e_frame(n);
        CHECK(f.dim() == 2);
        CHECK(tightness(f).kind == Tightness::Parseval);
        const Graph g = associated_graph(f).graph;
        CHECK(g == delete_edge(complete(n), {0, 1}));
        CHECK(g.size() == n * (n - 1) / 2 - 1);
    }
    CHECK(kind_of([] { kn_minus_e_frame(3); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("duplication chain catalog") {
    const auto chain = dup_chain_frames();
    std::set<std::string> names;
    for (const CatalogEntry& e : chain) {
        CAPTURE(e.name);
        names.insert(e.name);
        CHECK(tightness(e.frame).kind == Tightness::Parseval);
        CHECK(associated_graph(e.frame).graph == e.graph);
        CHECK(is_line_graph(e.graph).is_line == (e.name != "g2" && e.name != "g3" && e.name != "g6"));
        if (e.name.starts_with("lo")) {
            const std::size_t n = static_cast<std::size_t>(std::stoi(e.name.substr(2)));
            CHECK(oracle::isomorphic(e.graph, line_graph(o_graph(n)).line));
        }
    }
    CHECK(names == std::set<std::string>{"lo4", "lo5", "lo6", "lo7", "lo8", "g2", "g3", "g6"});
    for (const CatalogEntry& e : chain) {
        if (e.name == "g2") CHECK(oracle::isomorphic(e.graph, beineke(2)));
        if (e.name == "g3") CHECK(oracle::isomorphic(e.graph, beineke(3)));
        if (e.name == "g3") CHECK(oracle::isomorphic(e.graph, delete_edge(complete(5), {0, 1})));
        if (e.name == "g6") CHECK(oracle::isomorphic(e.graph, beineke(6)));
        if (e.name == "lo4") CHECK(e.graph == diamond());
    }
    CHECK(dup_chain_frames(5).size() == 5);
}
