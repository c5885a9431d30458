#pragma once

#include <cstddef>
#include <vector>

#include "tfg/matrix.hpp"

namespace tfg {

/// Relative zero threshold used wherever a float has to become a discrete
/// decision (rank, multiplicity, Gram support, tightness).
class TolerancePolicy {
public:
    static constexpr double kDefault = 1e-9;

    TolerancePolicy() = default;
    /// Throws invalid-parameter unless 0 < rel < 1e-3.
    explicit TolerancePolicy(double rel);

    double rel() const noexcept { return rel_; }
    /// rel * max(1, scale)
    double threshold(double scale) const noexcept;

private:
    double rel_ = kDefault;
};

struct EigDecomp {
    std::vector<double> values;  ///< ascending
    Matrix vectors;              ///< column k pairs with values[k]
};

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
///
/// Eigenvectors are orthonormal columns; in each one the first entry whose
/// magnitude exceeds the tolerance is made positive. Output is a pure
/// function of the input bits.
///
/// Throws not-square, not-symmetric (asymmetry beyond tol), no-convergence.
EigDecomp sym_eig(const Matrix& m, TolerancePolicy tol = {});

/// Number of eigenvalues with |lambda| > tol * max(1, lambda_max).
std::size_t numeric_rank(const Matrix& m, TolerancePolicy tol = {});

/// Eigenvalues closer than tol * max(1, |lambda_max|) are one group.
/// Returns the start index of each group in the ascending value list.
std::vector<std::size_t> multiplicity_groups(const std::vector<double>& ascending,
                                             TolerancePolicy tol = {});

/// Inverse of a symmetric positive definite matrix via its eigendecomposition.
Matrix spd_inverse(const Matrix& m, TolerancePolicy tol = {});

}  // namespace tfg
