#pragma once
/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over cyclotomic fields.
 *
 * Everything here is plain Gaussian elimination with exact pivoting (the
 * first nonzero entry in column order), which keeps results deterministic.
 * Matrices are small throughout the library (dimensions bounded by products
 * of group orders), so no effort is spent on asymptotics.
 */

#include <optional>
#include <vector>

#include "scalars.hpp"

namespace twochar {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Cyclotomic::zero()) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Cyclotomic& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Cyclotomic& s, const Matrix& a);
    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;

    bool operator==(const Matrix& b) const;
    bool operator!=(const Matrix& b) const { return !(*this == b); }

    bool is_identity() const;
    bool is_zero() const;

    /// Kronecker product (row-major pair indexing: (i,j) -> i*b.rows()+j).
    static Matrix kron(const Matrix& a, const Matrix& b);

    /// Stack blocks vertically; all must share the column count.
    static Matrix vstack(const std::vector<Matrix>& blocks);

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Cyclotomic> data_;
};

std::size_t rank(Matrix m);

/// Basis of the right kernel {x : M x = 0}; deterministic echelon basis.
std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m);

/// One exact solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<Cyclotomic>> solve(const Matrix& m, const std::vector<Cyclotomic>& b);

/// Inverse of a square matrix; throws validation_error when singular.
Matrix inverse(const Matrix& m);

/// dim of the joint fixed space  ∩_i ker(ops[i] - id).
std::size_t joint_fixed_dimension(const std::vector<Matrix>& ops);

} // namespace twochar
