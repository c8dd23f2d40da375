#pragma once

#include "adreal/errors.hpp"
#include "adreal/scalars.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace adreal {

/// Dense row-major matrix over an exact scalar type. Value semantics throughout.
template <class T>
class Matrix {
public:
    using Scalar = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(std::span<const T> values)
    {
        Matrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            m(i, i) = values[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!adreal::is_zero(v))
                return false;
        return true;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw DimensionMismatch("block out of range");
        Matrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
            throw DimensionMismatch("block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    /// Entrywise conjugate.
    Matrix conj() const
    {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            out.data_[k] = adreal::conj(data_[k]);
        return out;
    }

    Matrix conj_transpose() const { return conj().transpose(); }

    T trace() const
    {
        require_square("trace");
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    /// s * A (scalar acting from the left).
    Matrix left_scale(const T& s) const
    {
        Matrix out(*this);
        for (auto& v : out.data_)
            v = s * v;
        return out;
    }

    /// A * s (scalar acting from the right). Over H this is the eigen-action.
    Matrix right_scale(const T& s) const
    {
        Matrix out(*this);
        for (auto& v : out.data_)
            v = v * s;
        return out;
    }

    Matrix& operator+=(const Matrix& o)
    {
        require_same(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        require_same(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& v : a.data_)
            v = -v;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product " + a.shape() + " * " + b.shape());
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (adreal::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    void require_square(const char* what) const
    {
        if (!is_square())
            throw DimensionMismatch(std::string(what) + ": matrix is not square (" + shape() + ")");
    }

private:
    void require_same(const Matrix& o, const char* op) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string("matrix ") + op + " " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixC = Matrix<Gaussian>;
using MatrixH = Matrix<Quaternion>;

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned k)
{
    a.require_square("power");
    Matrix<T> out = Matrix<T>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i)
        out = out * a;
    return out;
}

/// A_1 (+) ... (+) A_r
template <class T>
Matrix<T> block_diag(std::span<const Matrix<T>> blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks) {
        b.require_square("block_diag");
        n += b.rows();
    }
    Matrix<T> out(n, n);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        out.set_block(at, at, b);
        at += b.rows();
    }
    return out;
}

template <class T>
Matrix<T> block_diag(std::initializer_list<Matrix<T>> blocks)
{
    return block_diag(std::span<const Matrix<T>>(blocks.begin(), blocks.size()));
}

/// [[0, U], [L, 0]]
template <class T>
Matrix<T> antidiag_pair(const Matrix<T>& upper, const Matrix<T>& lower)
{
    upper.require_square("antidiag_pair");
    lower.require_square("antidiag_pair");
    const std::size_t p = upper.rows();
    const std::size_t q = lower.rows();
    Matrix<T> out(p + q, p + q);
    out.set_block(0, q, upper);
    out.set_block(p, 0, lower);
    return out;
}

/// Promote a complex matrix to a quaternionic one (entries in C = R + R i).
MatrixH to_quaternionic(const MatrixC& a);
/// Inverse of to_quaternionic; throws DimensionMismatch if some entry has j or k part.
MatrixC to_complex(const MatrixH& a);
MatrixC to_complex(const MatrixQ& a);

} // namespace adreal
