#pragma once

#include <cstddef>
#include <vector>

#include "fspace/matrix.hpp"

namespace fspace {

// Rank-limited singular value decomposition: A ~ U * diag(S) * V^T with
// U (m x k), V (n x k) column-orthonormal and S positive non-increasing.
struct SvdResult {
    Matrix u;
    std::vector<double> singular_values;
    Matrix v;

    std::size_t rank() const { return singular_values.size(); }
};

// One-sided Jacobi decomposition truncated to the k largest factors.
// Factors whose singular value is numerically zero are dropped, so fewer
// than k factors may come back. Column signs are canonicalized: each U
// column is flipped so its largest-magnitude entry is positive (first
// occurrence wins ties), with the matching V column flipped too, which
// makes the result deterministic and reproducible bit-for-bit.
//
// Throws InvalidArgumentError when k is out of range [1, min(m, n)] or the
// input has non-finite entries; ConvergenceError if rotations fail to
// settle (does not occur at this problem scale).
SvdResult truncated_svd(const Matrix& a, std::size_t k);

}  // namespace fspace
