/**
 * @file linalg.cpp
 * @brief Exact dense Gaussian elimination over cyclotomic fields.
 */

#include "linalg.hpp"

#include <sstream>

namespace twochar {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw validation_error("matrix addition: shape mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw validation_error("matrix subtraction: shape mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw validation_error("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    return out;
}

Matrix operator*(const Cyclotomic& s, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
}

std::vector<Cyclotomic> Matrix::apply(const std::vector<Cyclotomic>& v) const {
    if (v.size() != cols_) throw validation_error("matrix apply: shape mismatch");
    std::vector<Cyclotomic> out(rows_, Cyclotomic::zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero() || v[c].is_zero()) continue;
            out[r] += at(r, c) * v[c];
        }
    return out;
}

bool Matrix::operator==(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != b.data_[i]) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ar = 0; ar < a.rows_; ++ar)
        for (std::size_t ac = 0; ac < a.cols_; ++ac) {
            if (a.at(ar, ac).is_zero()) continue;
            for (std::size_t br = 0; br < b.rows_; ++br)
                for (std::size_t bc = 0; bc < b.cols_; ++bc)
                    out.at(ar * b.rows_ + br, ac * b.cols_ + bc) = a.at(ar, ac) * b.at(br, bc);
        }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t rows = 0;
    const std::size_t cols = blocks.front().cols_;
    for (const auto& b : blocks) {
        if (b.cols_ != cols) throw validation_error("vstack: column mismatch");
        rows += b.rows_;
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < cols; ++c) out.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows_;
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).to_string();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        const Cyclotomic inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = inv * m.at(row, c);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const Cyclotomic f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m.at(row, c).is_zero()) continue;
                m.at(r, c) = m.at(r, c) - f * m.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix m) { return echelonize(m).size(); }

std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m) {
    Matrix e = m;
    const std::vector<std::size_t> pivots = echelonize(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Cyclotomic> v(m.cols(), Cyclotomic::zero());
        v[free_col] = Cyclotomic::one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -e.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclotomic>> solve(const Matrix& m, const std::vector<Cyclotomic>& b) {
    if (b.size() != m.rows()) throw validation_error("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const std::vector<std::size_t> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // pivot in RHS
    std::vector<Cyclotomic> x(m.cols(), Cyclotomic::zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw validation_error("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Cyclotomic::one();
    }
    const auto pivots = echelonize(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw validation_error("inverse: singular matrix");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

std::size_t joint_fixed_dimension(const std::vector<Matrix>& ops) {
    if (ops.empty()) throw validation_error("joint_fixed_dimension: no operators");
    const std::size_t n = ops.front().cols();
    std::vector<Matrix> blocks;
    for (const auto& op : ops) {
        if (op.rows() != n || op.cols() != n)
            throw validation_error("joint_fixed_dimension: operators must be square, same size");
        blocks.push_back(op - Matrix::identity(n));
    }
    if (n == 0) return 0;
    return n - rank(Matrix::vstack(blocks));
}

} // namespace twochar
