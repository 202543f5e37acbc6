#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpcert/matrix.hpp"

namespace tpcert {

// Alternating +-1 vector of length r: (1, -1, 1, ...) or its negation.
template <ScalarType S>
std::vector<S> alt_vector(int r, bool leading_positive = true) {
    if (r < 1) throw std::invalid_argument("alt_vector: length must be at least 1");
    std::vector<S> v(static_cast<size_t>(r));
    int s = leading_positive ? 1 : -1;
    for (int i = 0; i < r; ++i) {
        v[i] = S(s);
        s = -s;
    }
    return v;
}

// Diagonal matrix D_z for a vector of unit signs.
template <ScalarType S>
Matrix<S> sign_diag(const std::vector<int>& z) {
    if (z.empty()) throw std::invalid_argument("sign_diag: empty sign vector");
    for (int s : z)
        if (s != 1 && s != -1) throw std::invalid_argument("sign_diag: components must be +1 or -1");
    Matrix<S> d(static_cast<int>(z.size()), static_cast<int>(z.size()));
    for (size_t i = 0; i < z.size(); ++i) d(static_cast<int>(i), static_cast<int>(i)) = S(z[i]);
    return d;
}

// Number of sign changes after deleting zero entries; 0 for the zero vector.
template <ScalarType S>
int count_sign_changes(const std::vector<S>& x) {
    int changes = 0;
    int prev = 0;
    for (const S& v : x) {
        const int s = sign(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// All components nonzero with strictly alternating signs.
template <ScalarType S>
bool is_alternating(const std::vector<S>& x) {
    if (x.empty()) return false;
    int prev = 0;
    for (const S& v : x) {
        const int s = sign(v);
        if (s == 0) return false;
        if (prev != 0 && s == prev) return false;
        prev = s;
    }
    return true;
}

// Row and column index sets (0-based, strictly increasing, equal size)
// naming one minor of a matrix. Reports and file formats shift to
// 1-based at the serialization boundary.
struct MinorId {
    std::vector<int> rows;
    std::vector<int> cols;

    int order() const { return static_cast<int>(rows.size()); }

    bool contiguous() const {
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i] != rows[i - 1] + 1) return false;
        for (size_t j = 1; j < cols.size(); ++j)
            if (cols[j] != cols[j - 1] + 1) return false;
        return true;
    }

    friend bool operator==(const MinorId&, const MinorId&) = default;
    friend auto operator<=>(const MinorId&, const MinorId&) = default;
};

inline std::string to_string(const MinorId& id) {
    std::string s = "rows{";
    for (size_t i = 0; i < id.rows.size(); ++i) s += (i ? "," : "") + std::to_string(id.rows[i] + 1);
    s += "} cols{";
    for (size_t j = 0; j < id.cols.size(); ++j) s += (j ? "," : "") + std::to_string(id.cols[j] + 1);
    return s + "}";
}

// Contiguous r x r submatrix at a (row0, col0) offset, 0-based.
struct Window {
    int row0 = 0;
    int col0 = 0;
    int size = 1;

    MinorId minor_id() const {
        MinorId id;
        id.rows.resize(static_cast<size_t>(size));
        id.cols.resize(static_cast<size_t>(size));
        std::iota(id.rows.begin(), id.rows.end(), row0);
        std::iota(id.cols.begin(), id.cols.end(), col0);
        return id;
    }

    friend bool operator==(const Window&, const Window&) = default;
};

// All (m-r+1)(n-r+1) windows of size r, ordered by (row0, col0).
inline std::vector<Window> contiguous_windows(int m, int n, int r) {
    if (r < 1 || r > m || r > n) throw std::invalid_argument("contiguous_windows: size out of range");
    std::vector<Window> ws;
    ws.reserve(static_cast<size_t>(m - r + 1) * (n - r + 1));
    for (int i = 0; i + r <= m; ++i)
        for (int j = 0; j + r <= n; ++j) ws.push_back(Window{i, j, r});
    return ws;
}

template <ScalarType S>
Matrix<S> submatrix(const Matrix<S>& a, const MinorId& id) {
    if (id.rows.empty() || id.cols.empty()) throw std::invalid_argument("submatrix: empty index set");
    for (size_t i = 0; i < id.rows.size(); ++i) {
        if (id.rows[i] < 0 || id.rows[i] >= a.rows()) throw std::out_of_range("submatrix: row index out of range");
        if (i > 0 && id.rows[i] <= id.rows[i - 1]) throw std::invalid_argument("submatrix: rows not strictly increasing");
    }
    for (size_t j = 0; j < id.cols.size(); ++j) {
        if (id.cols[j] < 0 || id.cols[j] >= a.cols()) throw std::out_of_range("submatrix: column index out of range");
        if (j > 0 && id.cols[j] <= id.cols[j - 1]) throw std::invalid_argument("submatrix: cols not strictly increasing");
    }
    Matrix<S> b(static_cast<int>(id.rows.size()), static_cast<int>(id.cols.size()));
    for (size_t i = 0; i < id.rows.size(); ++i)
        for (size_t j = 0; j < id.cols.size(); ++j)
            b(static_cast<int>(i), static_cast<int>(j)) = a(id.rows[i], id.cols[j]);
    return b;
}

template <ScalarType S>
Matrix<S> submatrix(const Matrix<S>& a, const Window& w) {
    if (w.size < 1 || w.row0 < 0 || w.col0 < 0 || w.row0 + w.size > a.rows() || w.col0 + w.size > a.cols())
        throw std::out_of_range("submatrix: window out of range");
    Matrix<S> b(w.size, w.size);
    for (int i = 0; i < w.size; ++i)
        for (int j = 0; j < w.size; ++j) b(i, j) = a(w.row0 + i, w.col0 + j);
    return b;
}

// Strictly increasing r-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<int> first_combination(int r) {
    std::vector<int> c(static_cast<size_t>(r));
    std::iota(c.begin(), c.end(), 0);
    return c;
}

inline bool next_combination(std::vector<int>& c, int n) {
    const int r = static_cast<int>(c.size());
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    return true;
}

inline std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i) result = result * static_cast<std::uint64_t>(n - r + i) / i;
    return result;
}

// Operation counters attached to every verdict.
struct Stats {
    std::uint64_t determinants = 0;
    std::uint64_t submatrices = 0;
    std::uint64_t skipped = 0;
    double seconds = 0.0;

    void merge(const Stats& o) {
        determinants += o.determinants;
        submatrices += o.submatrices;
        skipped += o.skipped;
        seconds += o.seconds;
    }
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Guard against combinatorial blowup in all-submatrix scans. The cap
// applies per minor size; unlimited lifts it.
struct EnumLimits {
    std::uint64_t max_minors_per_size = 10'000'000;
    bool unlimited = false;

    void check(std::uint64_t count, const std::string& what) const {
        if (!unlimited && count > max_minors_per_size)
            throw BudgetExceeded(what + ": " + std::to_string(count) +
                                 " minors of one size exceeds the cap of " + std::to_string(max_minors_per_size) +
                                 " (raise or lift the limit to proceed)");
    }

    // Product form that cannot overflow before the comparison.
    void check_product(std::uint64_t a, std::uint64_t b, const std::string& what) const {
        if (unlimited) return;
        const long double product = static_cast<long double>(a) * static_cast<long double>(b);
        if (product > static_cast<long double>(max_minors_per_size))
            throw BudgetExceeded(what + ": about " + std::to_string(static_cast<double>(product)) +
                                 " minors of one size exceeds the cap of " + std::to_string(max_minors_per_size) +
                                 " (raise or lift the limit to proceed)");
    }
};

}  // namespace tpcert
