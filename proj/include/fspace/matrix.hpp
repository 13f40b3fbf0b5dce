#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fspace {

// Dense row-major matrix of doubles. Deliberately minimal: the engine only
// needs storage, element access and a couple of products.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data_.data() + r * cols_, cols_);
    }
    std::span<double> row(std::size_t r) {
        return std::span<double>(data_.data() + r * cols_, cols_);
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);

// a - b entrywise; shapes must match.
Matrix subtract(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

// Cosine of the angle between two vectors; 0 when either has zero norm.
double cosine(std::span<const double> a, std::span<const double> b);

// One sparse cell of a term-by-classification matrix.
struct SparseEntry {
    std::uint32_t row;
    std::uint32_t col;
    double value;

    bool operator==(const SparseEntry&) const = default;
};

// Sparse matrix as (row, col, value) triples sorted by (row, col).
// After the statistical gate the co-relevancy matrix is overwhelmingly
// zero, so this is the storage form of record.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseEntry> entries;

    Matrix to_dense() const;

    bool operator==(const SparseMatrix&) const = default;
};

}  // namespace fspace
