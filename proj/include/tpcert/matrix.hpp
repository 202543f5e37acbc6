#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpcert/scalar.hpp"

namespace tpcert {

// Dense m x n matrix, row-major. The shape is fixed at construction;
// entries are settable while a matrix is being assembled and every
// operation in the library treats its arguments as read-only, so built
// values are safe to share across threads.
template <ScalarType S>
class Matrix {
 public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: dimensions must be at least 1x1");
        e_.assign(static_cast<size_t>(rows) * cols, S(0));
    }

    Matrix(int rows, int cols, std::vector<S> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: dimensions must be at least 1x1");
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("Matrix: dimensions must be at least 1x1");
        const int m = static_cast<int>(rows.size());
        const int n = static_cast<int>(rows.front().size());
        std::vector<S> data;
        data.reserve(static_cast<size_t>(m) * n);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& v : row) data.push_back(v);
        }
        return Matrix(m, n, std::move(data));
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        std::vector<std::vector<S>> conv;
        for (const auto& row : rows) {
            std::vector<S> r;
            for (long v : row) r.push_back(S(v));
            conv.push_back(std::move(r));
        }
        return from_rows(conv);
    }

    static Matrix identity(int n) {
        Matrix id(n, n);
        for (int i = 0; i < n; ++i) id(i, i) = S(1);
        return id;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    const S& at(int i, int j) const {
        check(i, j);
        return (*this)(i, j);
    }
    S& at(int i, int j) {
        check(i, j);
        return (*this)(i, j);
    }

    const std::vector<S>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

 private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("Matrix: index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }

    int rows_;
    int cols_;
    std::vector<S> e_;
};

template <ScalarType S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    Matrix<S> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <ScalarType S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    Matrix<S> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <ScalarType S>
Matrix<S> operator*(const S& c, const Matrix<S>& a) {
    Matrix<S> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

template <ScalarType S>
std::vector<S> apply(const Matrix<S>& a, const std::vector<S>& x) {
    if (static_cast<int>(x.size()) != a.cols()) throw std::invalid_argument("vector length does not match matrix");
    std::vector<S> y(static_cast<size_t>(a.rows()), S(0));
    for (int i = 0; i < a.rows(); ++i) {
        S acc(0);
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

template <ScalarType S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    Matrix<S> r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (sign(aik) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

template <ScalarType S>
Matrix<S> entrywise_min(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    Matrix<S> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) < b(i, j) ? a(i, j) : b(i, j);
    return r;
}

template <ScalarType S>
Matrix<S> entrywise_max(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    Matrix<S> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) < b(i, j) ? b(i, j) : a(i, j);
    return r;
}

template <ScalarType S>
Matrix<S> entrywise_abs(const Matrix<S>& a) {
    Matrix<S> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = abs(a(i, j));
    return r;
}

template <ScalarType S>
std::string to_string(const Matrix<S>& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < a.cols(); ++j) os << (j ? " " : "") << to_string(a(i, j));
    }
    os << "]";
    return os.str();
}

}  // namespace tpcert
