#include "tfg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tfg/error.hpp"

namespace tfg {

TolerancePolicy::TolerancePolicy(double rel) : rel_(rel) {
    if (!(rel > 0.0 && rel < 1e-3))
        throw Error(ErrorKind::InvalidParameter, "tolerance must lie in (0, 1e-3)");
}

double TolerancePolicy::threshold(double scale) const noexcept {
    return rel_ * std::max(1.0, scale);
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q), accumulated into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

EigDecomp sym_eig(const Matrix& m, TolerancePolicy tol) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "sym_eig needs a square matrix");
    if (!m.all_finite()) throw Error(ErrorKind::InvalidParameter, "matrix has non-finite entries");
    const std::size_t n = m.rows();
    const double asym_limit = tol.threshold(m.max_abs());

    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > asym_limit)
                throw Error(ErrorKind::NotSymmetric, "sym_eig input is not symmetric");
            a(i, j) = 0.5 * (m(i, j) + m(j, i));
        }
    }
    Matrix v = Matrix::identity(n);

    const double scale = frobenius(a);
    bool converged = scale == 0.0;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_norm(a) > 1e-15 * scale)
        throw Error(ErrorKind::NoConvergence, "Jacobi sweeps exhausted");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    EigDecomp out{std::vector<double>(n), Matrix(n, n)};
    const double sign_limit = tol.rel();
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(idx[k], idx[k]);
        double sign = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = v(i, idx[k]);
            if (std::abs(x) > sign_limit) {
                sign = x > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = sign * v(i, idx[k]);
    }
    return out;
}

std::size_t numeric_rank(const Matrix& m, TolerancePolicy tol) {
    const EigDecomp e = sym_eig(m, tol);
    if (e.values.empty()) return 0;
    const double limit = tol.threshold(e.values.back());
    return static_cast<std::size_t>(
        std::count_if(e.values.begin(), e.values.end(), [&](double x) { return std::abs(x) > limit; }));
}

std::vector<std::size_t> multiplicity_groups(const std::vector<double>& ascending, TolerancePolicy tol) {
    std::vector<std::size_t> starts;
    if (ascending.empty()) return starts;
    const double limit = tol.threshold(std::max(std::abs(ascending.front()), std::abs(ascending.back())));
    starts.push_back(0);
    for (std::size_t k = 1; k < ascending.size(); ++k)
        if (ascending[k] - ascending[starts.back()] > limit) starts.push_back(k);
    return starts;
}

Matrix spd_inverse(const Matrix& m, TolerancePolicy tol) {
    const EigDecomp e = sym_eig(m, tol);
    const std::size_t n = m.rows();
    const double limit = tol.threshold(e.values.empty() ? 0.0 : e.values.back());
    Matrix inv(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (e.values[k] <= limit) throw Error(ErrorKind::RankDeficient, "matrix is not positive definite");
        const double w = 1.0 / e.values[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) += w * e.vectors(i, k) * e.vectors(j, k);
    }
    return inv;
}

}  // namespace tfg
