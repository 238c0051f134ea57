#ifndef ENRIQUES_LINALG_HPP
#define ENRIQUES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "enriques/numeric.hpp"

namespace enriques {

// Small dense matrix over an exact scalar type. Row-major.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> data)
        : rows_(r), cols_(c), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw Error("BadShape", "matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("BadShape", "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("BadShape", "matrix sum shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("BadShape", "matrix difference shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = -a.data_[i];
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw Error("BadShape", "matrix-vector shape mismatch");
        std::vector<T> w(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) w[i] += a(i, j) * v[j];
        return w;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IMat = Matrix<Int>;
using QMat = Matrix<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

QMat to_rational(const IMat& m);

Int ivec_dot(const IVec& a, const IVec& b);
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_scale(const Int& c, const IVec& a);
Int ivec_gcd(const IVec& v);
bool ivec_is_zero(const IVec& v);

// Exact determinant over Q (fraction-free over Z after clearing denominators
// would also do; Gaussian elimination over Q is exact and simple).
Rat qmat_det(const QMat& m);
Int imat_det(const IMat& m);

// Inverse over Q; throws on singular input.
QMat qmat_inverse(const QMat& m);

// Solve m * x = b over Q; empty optional when inconsistent.
std::optional<QVec> qmat_solve(const QMat& m, const QVec& b);

// Integer kernel: basis of { x in Z^cols : m x = 0 }, as matrix columns.
// Kernels of integer maps are saturated sublattices by construction.
IMat integer_kernel(const IMat& m);

struct SmithForm {
    IMat u, d, v;  // u * a * v = d, u and v unimodular, d diagonal with d1 | d2 | ...
};

SmithForm smith_normal_form(const IMat& a);

// Inertia of a symmetric matrix over Q by symmetric pivoting; 2x2 hyperbolic
// pivots contribute (1,1). No floating point.
struct Inertia {
    int positive = 0, negative = 0, zero = 0;
};
Inertia symmetric_inertia(const QMat& g);

}  // namespace enriques

#endif
