#pragma once

#include "tpcert/interval.hpp"

namespace tpcert {

template <ScalarType S>
S power(S base, int e) {
    S r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

namespace detail {

template <ScalarType S>
void check_increasing_positive(const std::vector<S>& nodes, const char* what) {
    if (nodes.empty()) throw std::invalid_argument(std::string(what) + ": need at least one node");
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (sign(nodes[i]) <= 0) throw std::invalid_argument(std::string(what) + ": nodes must be positive");
        if (i > 0 && !(nodes[i - 1] < nodes[i]))
            throw std::invalid_argument(std::string(what) + ": nodes must be strictly increasing");
    }
}

}  // namespace detail

// Vandermonde matrix on strictly increasing positive nodes: entry
// (i, j) = nodes_i^j. Classically totally positive; corpus admission
// still verifies that by brute force.
template <ScalarType S>
Matrix<S> vandermonde(const std::vector<S>& nodes, int n_cols) {
    detail::check_increasing_positive(nodes, "vandermonde");
    if (n_cols < 1) throw std::invalid_argument("vandermonde: need at least one column");
    Matrix<S> a(static_cast<int>(nodes.size()), n_cols);
    for (int i = 0; i < a.rows(); ++i) {
        S v(1);
        for (int j = 0; j < n_cols; ++j) {
            a(i, j) = v;
            v *= nodes[static_cast<size_t>(i)];
        }
    }
    return a;
}

// Cauchy matrix 1 / (x_i + y_j) on strictly increasing positive nodes.
template <ScalarType S>
Matrix<S> cauchy(const std::vector<S>& x, const std::vector<S>& y) {
    detail::check_increasing_positive(x, "cauchy");
    detail::check_increasing_positive(y, "cauchy");
    Matrix<S> a(static_cast<int>(x.size()), static_cast<int>(y.size()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) = S(1) / (x[static_cast<size_t>(i)] + y[static_cast<size_t>(j)]);
    return a;
}

// Appends zero rows and columns. Minors touching the padding vanish, so
// total non-negativity of the base is preserved (and total positivity
// destroyed whenever padding is added).
template <ScalarType S>
Matrix<S> zero_padded(const Matrix<S>& base, int extra_rows, int extra_cols) {
    if (extra_rows < 0 || extra_cols < 0) throw std::invalid_argument("zero_padded: negative padding");
    Matrix<S> a(base.rows() + extra_rows, base.cols() + extra_cols);
    for (int i = 0; i < base.rows(); ++i)
        for (int j = 0; j < base.cols(); ++j) a(i, j) = base(i, j);
    return a;
}

// Hull [base - eps J, base + eps J] around a brute-force-verified TP
// base. No TP claim is made for the hull; classify it afterwards.
template <ScalarType S>
IntervalHull<S> perturbed_hull(const Matrix<S>& base, const S& eps) {
    if (sign(eps) < 0) throw std::invalid_argument("perturbed_hull: negative radius");
    const int kmax = std::min(base.rows(), base.cols());
    if (!is_tp_k_bruteforce(base, kmax).holds)
        throw std::invalid_argument("perturbed_hull: base matrix is not totally positive");
    Matrix<S> lo(base.rows(), base.cols());
    Matrix<S> hi(base.rows(), base.cols());
    for (int i = 0; i < base.rows(); ++i)
        for (int j = 0; j < base.cols(); ++j) {
            lo(i, j) = base(i, j) - eps;
            hi(i, j) = base(i, j) + eps;
        }
    return IntervalHull<S>(std::move(lo), std::move(hi));
}

// Brute-force classification labels: the largest order for which each
// property holds (0 when even order 1 fails).
struct ClassLabels {
    int tp = 0;
    int tn = 0;
};

template <ScalarType S>
ClassLabels classify(const Matrix<S>& a, const EnumLimits& limits = {}) {
    return ClassLabels{tp_order(a), tn_order(a, limits)};
}

}  // namespace tpcert
