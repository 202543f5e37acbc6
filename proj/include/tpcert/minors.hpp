#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tpcert/core.hpp"

namespace tpcert {

namespace detail {

// Fraction-free (Bareiss) elimination with row pivoting on nonzero
// pivots. Intermediate values stay integral for integer input, and a
// vanishing pivot column is detected exactly.
template <ScalarType S>
S det_bareiss(Matrix<S> a, Stats* stats) {
    if (stats) ++stats->determinants;
    const int n = a.rows();
    if (n == 1) return a(0, 0);
    S prev(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int pivot_row = -1;
        for (int i = k; i < n; ++i)
            if (sign(a(i, k)) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) return S(0);
        if (pivot_row != k) {
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
            negate = !negate;
        }
        const S pivot = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
            a(i, k) = S(0);
        }
        prev = pivot;
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

// Gaussian elimination with partial pivoting, used in numerical mode.
template <ScalarType S>
S det_gaussian(Matrix<S> a, Stats* stats) {
    if (stats) ++stats->determinants;
    const int n = a.rows();
    S result(1);
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        S best = abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            S v = abs(a(i, k));
            if (best < v) {
                best = v;
                pivot_row = i;
            }
        }
        if (sign(a(pivot_row, k)) == 0) return S(0);
        if (pivot_row != k) {
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
            result = -result;
        }
        const S pivot = a(k, k);
        result *= pivot;
        for (int i = k + 1; i < n; ++i) {
            const S factor = a(i, k) / pivot;
            for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
            a(i, k) = S(0);
        }
    }
    return result;
}

}  // namespace detail

template <ScalarType S>
S det(const Matrix<S>& b, Stats* stats = nullptr) {
    if (!b.square()) throw std::invalid_argument("det: matrix is not square");
    if constexpr (scalar_traits<S>::exact)
        return detail::det_bareiss(b, stats);
    else
        return detail::det_gaussian(b, stats);
}

// Matrix with row i and column j removed.
template <ScalarType S>
Matrix<S> delete_row_col(const Matrix<S>& b, int row, int col) {
    Matrix<S> m(b.rows() - 1, b.cols() - 1);
    for (int i = 0, mi = 0; i < b.rows(); ++i) {
        if (i == row) continue;
        for (int j = 0, mj = 0; j < b.cols(); ++j) {
            if (j == col) continue;
            m(mi, mj) = b(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

// Transposed cofactor matrix; satisfies B adj(B) = adj(B) B = det(B) I
// exactly in exact mode, with no invertibility assumption. adj of a
// 1x1 matrix is [[1]].
template <ScalarType S>
Matrix<S> adjugate(const Matrix<S>& b, Stats* stats = nullptr) {
    if (!b.square()) throw std::invalid_argument("adjugate: matrix is not square");
    const int n = b.rows();
    Matrix<S> adj(n, n);
    if (n == 1) {
        adj(0, 0) = S(1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const S minor = det(delete_row_col(b, i, j), stats);
            adj(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

// Visits every r x r minor in lexicographic (rowSet, colSet) order.
template <ScalarType S, class Fn>
void for_each_minor(const Matrix<S>& a, int r, Stats* stats, Fn&& fn) {
    if (r < 1 || r > a.rows() || r > a.cols()) throw std::invalid_argument("for_each_minor: order out of range");
    std::vector<int> rows = first_combination(r);
    do {
        std::vector<int> cols = first_combination(r);
        do {
            MinorId id{rows, cols};
            if (stats) ++stats->submatrices;
            const S value = det(submatrix(a, id), stats);
            if (!fn(id, value)) return;
        } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
}

template <ScalarType S>
std::vector<std::pair<MinorId, S>> all_minors(const Matrix<S>& a, int r, Stats* stats = nullptr) {
    std::vector<std::pair<MinorId, S>> out;
    out.reserve(binomial(a.rows(), r) * binomial(a.cols(), r));
    for_each_minor(a, r, stats, [&](const MinorId& id, const S& value) {
        out.emplace_back(id, value);
        return true;
    });
    return out;
}

// Products x_i (B x)_i, the quantities every sign non-reversal test reads.
template <ScalarType S>
std::vector<S> coordinate_products(const Matrix<S>& b, const std::vector<S>& x) {
    const std::vector<S> bx = apply(b, x);
    std::vector<S> p(x.size());
    for (size_t i = 0; i < x.size(); ++i) p[i] = x[i] * bx[i];
    return p;
}

// The single test vector det(B) adj(B) (1, -1, ..., +-1)^T attached to a
// square matrix B. Identically zero when B is singular; alternating when
// all cofactor column sums are positive.
template <ScalarType S>
std::vector<S> snr_test_vector(const Matrix<S>& b, Stats* stats = nullptr) {
    if (!b.square()) throw std::invalid_argument("snr_test_vector: matrix is not square");
    const S d = det(b, stats);
    const Matrix<S> adj = adjugate(b, stats);
    const std::vector<S> alt = alt_vector<S>(b.rows());
    std::vector<S> z(static_cast<size_t>(b.rows()));
    for (int i = 0; i < b.rows(); ++i) {
        S acc(0);
        for (int j = 0; j < b.cols(); ++j) acc += adj(i, j) * alt[j];
        z[static_cast<size_t>(i)] = d * acc;
    }
    return z;
}

// Cofactor column sums: component i is the sum over j of the minor of B
// with row j and column i deleted. snr_test_vector(B)[i] equals
// (-1)^i det(B) times this sum; the sums also decide whether the test
// vector alternates.
template <ScalarType S>
std::vector<S> snr_component_sums(const Matrix<S>& b, Stats* stats = nullptr) {
    if (!b.square()) throw std::invalid_argument("snr_component_sums: matrix is not square");
    const int n = b.rows();
    std::vector<S> sums(static_cast<size_t>(n), S(0));
    if (n == 1) {
        sums[0] = S(1);  // empty minor
        return sums;
    }
    for (int i = 0; i < n; ++i) {
        S acc(0);
        for (int j = 0; j < n; ++j) acc += det(delete_row_col(b, j, i), stats);
        sums[static_cast<size_t>(i)] = acc;
    }
    return sums;
}

}  // namespace tpcert
