#pragma once

#include <optional>

#include "tpcert/positivity.hpp"

namespace tpcert {

// Finitely specified bi-infinite sequence: values for indices
// [offset, offset + size - 1]. Outside the window a term is either
// exactly zero (finite support) or unknown.
template <ScalarType S>
struct SeqWindow {
    long offset = 0;
    std::vector<S> values;
    bool finite_support = false;

    long size() const { return static_cast<long>(values.size()); }
    long first() const { return offset; }
    long last() const { return offset + size() - 1; }

    std::optional<S> term(long n) const {
        if (n >= first() && n <= last()) return values[static_cast<size_t>(n - offset)];
        if (finite_support) return S(0);
        return std::nullopt;
    }
};

// The r x r Toeplitz block with (i, j) entry c_{l+i-j}; first row
// c_l, c_{l-1}, ..., c_{l-r+1}. Empty when any needed term is unknown.
template <ScalarType S>
std::optional<Matrix<S>> toeplitz_block(const SeqWindow<S>& s, long l, int r) {
    if (r < 1) throw std::invalid_argument("toeplitz_block: size must be at least 1");
    // Entries depend on the difference only; probe the diagonal range once.
    std::vector<S> diag(static_cast<size_t>(2 * r - 1));
    for (int d = -(r - 1); d <= r - 1; ++d) {
        const std::optional<S> t = s.term(l + d);
        if (!t) return std::nullopt;
        diag[static_cast<size_t>(d + r - 1)] = *t;
    }
    Matrix<S> b(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) b(i, j) = diag[static_cast<size_t>(i - j + r - 1)];
    return b;
}

enum class PfMode {
    nonneg,    // every determined minor must be >= 0
    positive,  // every determined minor must be > 0
};

// Minor of the sequence: rows and cols are strictly increasing tuples of
// sequence indices, entry (i, j) = c_{m_i - n_j}. Empty if undetermined.
template <ScalarType S>
std::optional<Matrix<S>> sequence_minor(const SeqWindow<S>& s, const std::vector<int>& m, const std::vector<int>& n) {
    Matrix<S> b(static_cast<int>(m.size()), static_cast<int>(n.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < n.size(); ++j) {
            const std::optional<S> t = s.term(static_cast<long>(m[i]) - n[j]);
            if (!t) return std::nullopt;
            b(static_cast<int>(i), static_cast<int>(j)) = *t;
        }
    return b;
}

namespace detail {

template <class Fn>
void for_each_tuple_pair(int lo_m, int hi_m, int lo_n, int hi_n, int r, Fn&& fn) {
    const int m_count = hi_m - lo_m + 1;
    const int n_count = hi_n - lo_n + 1;
    if (m_count < r || n_count < r) return;
    std::vector<int> mc = first_combination(r);
    do {
        std::vector<int> nc = first_combination(r);
        do {
            std::vector<int> m(mc), n(nc);
            for (int& v : m) v += lo_m;
            for (int& v : n) v += lo_n;
            if (!fn(m, n)) return;
        } while (next_combination(nc, n_count));
    } while (next_combination(mc, m_count));
}

}  // namespace detail

// Order-k Polya frequency check over every determined Toeplitz minor of
// size at most k.
//
// Finite support: all indices are determined; tuples are enumerated over
// the clip [support_min - k, support_max + k], beyond which minors only
// repeat zero rows and columns. Unknown mode: minors are translation
// invariant, so column tuples are anchored at n_1 = 0 and each determined
// minor is checked through its canonical representative; minors touching
// unknown terms are skipped and counted in stats.skipped.
template <ScalarType S>
Verdict<S> is_pf_k(const SeqWindow<S>& s, int k, PfMode mode, const EnumLimits& limits = {}) {
    if (k < 1) throw std::invalid_argument("is_pf_k: order must be at least 1");
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;

    auto violates = [&](const S& value) {
        const int sg = sign(value);
        return mode == PfMode::positive ? sg <= 0 : sg < 0;
    };

    for (int r = 1; r <= k && v.holds; ++r) {
        auto visit = [&](const std::vector<int>& m, const std::vector<int>& n) {
            const std::optional<Matrix<S>> b = sequence_minor(s, m, n);
            if (!b) {
                ++v.stats.skipped;
                return true;
            }
            ++v.stats.submatrices;
            const S value = det(*b, &v.stats);
            if (violates(value)) {
                v.holds = false;
                v.certificate = FailingMinor<S>{MinorId{m, n}, value};
                return false;
            }
            return true;
        };

        if (s.finite_support) {
            const int lo = static_cast<int>(s.first()) - k;
            const int hi = static_cast<int>(s.last()) + k;
            const std::uint64_t tuples = binomial(hi - lo + 1, r);
            limits.check_product(tuples, tuples, "is_pf_k");
            detail::for_each_tuple_pair(lo, hi, lo, hi, r, visit);
        } else {
            const int span = static_cast<int>(s.size()) - 1;
            if (r > span + 1) continue;  // no determined minor of this order exists
            limits.check_product(binomial(span, r - 1), binomial(span + 1, r), "is_pf_k");
            // n_1 = 0, n_r <= span; m inside the determined difference range.
            std::vector<int> tail = r > 1 ? first_combination(r - 1) : std::vector<int>{};
            bool more = true;
            while (more && v.holds) {
                std::vector<int> n(1, 0);
                for (int t : tail) n.push_back(t + 1);
                const int lo_m = static_cast<int>(s.first());
                const int hi_m = static_cast<int>(s.last());
                std::vector<int> mc = first_combination(r);
                const int m_count = hi_m - lo_m + 1;
                if (m_count >= r) {
                    do {
                        std::vector<int> m(mc);
                        for (int& x : m) x += lo_m;
                        if (!visit(m, n)) break;
                    } while (next_combination(mc, m_count));
                }
                more = r > 1 && next_combination(tail, span);
            }
        }
    }
    v.stats.seconds = timer.seconds();
    return v;
}

// Sign non-reversal probe of the determined Toeplitz blocks: per block,
// the deterministic adjugate-based candidates (the det(B) adj(B) d vector
// when det < 0, an alternating kernel vector when det = 0) and then
// `samples` random alternating vectors. Any total reversal or annihilated
// alternating vector refutes order-k total positivity of the sequence; a
// pass is only "no counterexample found".
template <ScalarType S>
Verdict<S> pf_snr_check(const SeqWindow<S>& s, int k, int samples, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("pf_snr_check: order must be at least 1");
    if (samples < 1) throw std::invalid_argument("pf_snr_check: need at least one sample");
    detail::Timer timer;
    Rng rng(seed);
    Verdict<S> v;
    v.holds = true;

    for (int r = 1; r <= k && v.holds; ++r) {
        long lo, hi;
        if (s.finite_support) {
            lo = s.first() - k;
            hi = s.last() + k;
        } else {
            lo = s.first() + r - 1;
            hi = s.last() - r + 1;
        }
        for (long l = lo; l <= hi && v.holds; ++l) {
            const std::optional<Matrix<S>> block = toeplitz_block(s, l, r);
            if (!block) {
                ++v.stats.skipped;
                continue;
            }
            ++v.stats.submatrices;
            MinorId at;
            for (int i = 0; i < r; ++i) {
                at.rows.push_back(static_cast<int>(l) + i);
                at.cols.push_back(i);
            }

            const S d = det(*block, &v.stats);
            const int ds = sign(d);
            if (ds != 0) {
                std::vector<S> z = snr_test_vector(*block, &v.stats);
                bool nonzero = false;
                for (const S& c : z) nonzero = nonzero || sign(c) != 0;
                if (nonzero) {
                    std::vector<S> products = coordinate_products(*block, z);
                    bool all_negative = true;
                    for (const S& p : products) all_negative = all_negative && sign(p) < 0;
                    if (all_negative) {
                        v.holds = false;
                        v.certificate = SignReversal<S>{at, std::move(z), std::move(products)};
                        break;
                    }
                }
            } else {
                const Matrix<S> adj = adjugate(*block, &v.stats);
                std::vector<S> x(static_cast<size_t>(r), S(0));
                for (int col = 0, found = 0; col < r && !found; ++col) {
                    for (int i = 0; i < r; ++i) found = found || sign(adj(i, col)) != 0;
                    if (!found) continue;
                    for (int i = 0; i < r; ++i) x[static_cast<size_t>(i)] = adj(i, col);
                }
                int lead = 0;
                for (const S& c : x)
                    if ((lead = sign(c)) != 0) break;
                if (lead < 0)
                    for (S& c : x) c = -c;
                if (is_alternating(x)) {
                    v.holds = false;
                    v.certificate = KernelVector<S>{at, std::move(x)};
                    break;
                }
            }

            for (int smp = 0; smp < samples; ++smp) {
                std::vector<S> x = sample_alternating_vector<S>(rng, r, smp % 2 == 0);
                std::vector<S> products = coordinate_products(*block, x);
                bool all_negative = true;
                for (const S& p : products) all_negative = all_negative && sign(p) < 0;
                if (all_negative) {
                    v.holds = false;
                    v.certificate = SignReversal<S>{at, std::move(x), std::move(products)};
                    break;
                }
            }
        }
    }
    v.stats.seconds = timer.seconds();
    return v;
}

}  // namespace tpcert
