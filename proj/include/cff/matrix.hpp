#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cff {

// Dense row-major matrix of doubles. No views, no broadcasting: every shape
// mismatch in the operations below throws contract_error instead of being
// silently coerced.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    std::size_t size() const { return data.size(); }
    std::string shape() const { return std::to_string(rows) + "x" + std::to_string(cols); }
};

// C[i][j] = sum_p A[i][p] * B[j][p], i.e. A * B^T. Requires A.cols == B.cols.
// Parallel over rows of A; each output element is a fixed-order dot product,
// so results are bit-identical regardless of thread count.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

// C[j][p] = sum_i A[i][j] * B[i][p], i.e. A^T * B. Requires A.rows == B.rows.
// Accumulation order over i is fixed per output row.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

// Each row divided by (its L2 norm + eps). eps must be > 0; it keeps zero
// rows at zero instead of producing NaN.
Matrix row_l2_normalize(const Matrix& a, double eps);

bool all_finite(const Matrix& a);
bool all_finite(const std::vector<double>& v);

} // namespace cff
