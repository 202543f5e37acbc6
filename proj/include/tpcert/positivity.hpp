#pragma once

#include <chrono>
#include <optional>

#include "tpcert/certificates.hpp"
#include "tpcert/random.hpp"

namespace tpcert {

namespace detail {

class Timer {
 public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

 private:
    std::chrono::steady_clock::time_point t0_;
};

inline void check_order(const char* op, int m, int n, int k) {
    if (k < 1 || k > std::min(m, n))
        throw std::invalid_argument(std::string(op) + ": order k=" + std::to_string(k) +
                                    " out of range for a " + std::to_string(m) + "x" + std::to_string(n) + " matrix");
}

}  // namespace detail

// Decision procedures search in a fixed total order: ascending minor
// size, then lexicographic position. The certificate always names the
// minimal violation in that order, which is what makes the emitted
// witnesses independently checkable.

template <ScalarType S>
Verdict<S> is_tp_k_bruteforce(const Matrix<S>& a, int k) {
    detail::check_order("is_tp_k_bruteforce", a.rows(), a.cols(), k);
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;
    for (int r = 1; r <= k && v.holds; ++r) {
        for_each_minor(a, r, &v.stats, [&](const MinorId& id, const S& value) {
            if (sign(value) <= 0) {
                v.holds = false;
                v.certificate = FailingMinor<S>{id, value};
                return false;
            }
            return true;
        });
    }
    v.stats.seconds = timer.seconds();
    return v;
}

template <ScalarType S>
Verdict<S> is_tn_k_bruteforce(const Matrix<S>& a, int k, const EnumLimits& limits = {}) {
    detail::check_order("is_tn_k_bruteforce", a.rows(), a.cols(), k);
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;
    for (int r = 1; r <= k && v.holds; ++r) {
        limits.check_product(binomial(a.rows(), r), binomial(a.cols(), r), "is_tn_k_bruteforce");
        for_each_minor(a, r, &v.stats, [&](const MinorId& id, const S& value) {
            if (sign(value) < 0) {
                v.holds = false;
                v.certificate = FailingMinor<S>{id, value};
                return false;
            }
            return true;
        });
    }
    v.stats.seconds = timer.seconds();
    return v;
}

// Contiguous-window reduction: positivity of every contiguous minor of
// size at most k already decides TP_k, so only
// sum_{r<=k} (m-r+1)(n-r+1) determinants are visited.
template <ScalarType S>
Verdict<S> is_tp_k_contiguous(const Matrix<S>& a, int k) {
    detail::check_order("is_tp_k_contiguous", a.rows(), a.cols(), k);
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;
    for (int r = 1; r <= k && v.holds; ++r) {
        for (const Window& w : contiguous_windows(a.rows(), a.cols(), r)) {
            ++v.stats.submatrices;
            const S value = det(submatrix(a, w), &v.stats);
            if (sign(value) <= 0) {
                v.holds = false;
                v.certificate = FailingMinor<S>{w.minor_id(), value};
                break;
            }
        }
    }
    v.stats.seconds = timer.seconds();
    return v;
}

struct SnrResult {
    bool holds = false;
    std::optional<int> witness;  // least admissible coordinate, 0-based
};

// Strict sign non-reversal of B at x: some coordinate has x_i (B x)_i > 0.
template <ScalarType S>
SnrResult snr_strict_at(const Matrix<S>& b, const std::vector<S>& x) {
    if (!b.square() || static_cast<int>(x.size()) != b.rows())
        throw std::invalid_argument("snr_strict_at: vector length does not match matrix");
    bool nonzero = false;
    for (const S& c : x) nonzero = nonzero || sign(c) != 0;
    if (!nonzero) throw std::invalid_argument("snr_strict_at: zero test vector");
    const std::vector<S> p = coordinate_products(b, x);
    for (size_t i = 0; i < p.size(); ++i)
        if (sign(p[i]) > 0) return {true, static_cast<int>(i)};
    return {false, std::nullopt};
}

// Non-strict variant: some coordinate has x_i != 0 and x_i (B x)_i >= 0.
template <ScalarType S>
SnrResult snr_nonstrict_at(const Matrix<S>& b, const std::vector<S>& x) {
    if (!b.square() || static_cast<int>(x.size()) != b.rows())
        throw std::invalid_argument("snr_nonstrict_at: vector length does not match matrix");
    bool nonzero = false;
    for (const S& c : x) nonzero = nonzero || sign(c) != 0;
    if (!nonzero) throw std::invalid_argument("snr_nonstrict_at: zero test vector");
    const std::vector<S> p = coordinate_products(b, x);
    for (size_t i = 0; i < p.size(); ++i)
        if (sign(x[i]) != 0 && sign(p[i]) >= 0) return {true, static_cast<int>(i)};
    return {false, std::nullopt};
}

// Decides TP_k over contiguous windows in ascending size. At the minimal
// failing window every proper minor is already known positive, so:
//   det < 0  ->  the test vector z = det(B) adj(B) (1,-1,...)^T alternates
//                and x_i (B x)_i = (det B)^3 * (positive sum) < 0 at every
//                coordinate: a total strict sign reversal.
//   det = 0  ->  the kernel of B is spanned by a column of adj(B), which
//                alternates: an alternating vector B annihilates.
template <ScalarType S>
Verdict<S> tp_certificate(const Matrix<S>& a, int k) {
    detail::check_order("tp_certificate", a.rows(), a.cols(), k);
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;
    for (int r = 1; r <= k && v.holds; ++r) {
        for (const Window& w : contiguous_windows(a.rows(), a.cols(), r)) {
            ++v.stats.submatrices;
            const Matrix<S> b = submatrix(a, w);
            const S value = det(b, &v.stats);
            const int s = sign(value);
            if (s > 0) continue;
            v.holds = false;
            if (s < 0) {
                std::vector<S> z = snr_test_vector(b, &v.stats);
                std::vector<S> products = coordinate_products(b, z);
                bool total_reversal = is_alternating(z);
                for (const S& p : products) total_reversal = total_reversal && sign(p) < 0;
                if (total_reversal) {
                    v.certificate = SignReversal<S>{w.minor_id(), std::move(z), std::move(products)};
                    break;
                }
                v.certificate = FailingMinor<S>{w.minor_id(), value};  // unreachable at a minimal window
                break;
            }
            const Matrix<S> adj = adjugate(b, &v.stats);
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
                v.certificate = KernelVector<S>{w.minor_id(), std::move(x)};
            } else {
                v.certificate = FailingMinor<S>{w.minor_id(), value};  // unreachable at a minimal window
            }
            break;
        }
    }
    v.stats.seconds = timer.seconds();
    return v;
}

// Decides TN_k over all submatrices in ascending size (no contiguous
// reduction exists for total non-negativity). At the minimal failing
// submatrix the test vector alternates and certifies a total strict
// reversal; the FailingMinor fallback covers any case where it does not.
template <ScalarType S>
Verdict<S> tn_certificate(const Matrix<S>& a, int k, const EnumLimits& limits = {}) {
    detail::check_order("tn_certificate", a.rows(), a.cols(), k);
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;
    for (int r = 1; r <= k && v.holds; ++r) {
        limits.check_product(binomial(a.rows(), r), binomial(a.cols(), r), "tn_certificate");
        for_each_minor(a, r, &v.stats, [&](const MinorId& id, const S& value) {
            if (sign(value) >= 0) return true;
            v.holds = false;
            const Matrix<S> b = submatrix(a, id);
            std::vector<S> z = snr_test_vector(b, &v.stats);
            std::vector<S> products = coordinate_products(b, z);
            bool total_reversal = is_alternating(z);
            for (const S& p : products) total_reversal = total_reversal && sign(p) < 0;
            if (total_reversal)
                v.certificate = SignReversal<S>{id, std::move(z), std::move(products)};
            else
                v.certificate = FailingMinor<S>{id, value};
            return false;
        });
    }
    v.stats.seconds = timer.seconds();
    return v;
}

// All 2^n - 1 principal minors positive, certified by the first failure
// in (size, lexicographic) order.
template <ScalarType S>
Verdict<S> is_p_matrix(const Matrix<S>& a) {
    if (!a.square()) throw std::invalid_argument("is_p_matrix: matrix is not square");
    detail::Timer timer;
    Verdict<S> v;
    v.holds = true;
    const int n = a.rows();
    for (int r = 1; r <= n && v.holds; ++r) {
        std::vector<int> idx = first_combination(r);
        do {
            MinorId id{idx, idx};
            ++v.stats.submatrices;
            const S value = det(submatrix(a, id), &v.stats);
            if (sign(value) <= 0) {
                v.holds = false;
                v.certificate = FailingMinor<S>{id, value};
                break;
            }
        } while (next_combination(idx, n));
    }
    v.stats.seconds = timer.seconds();
    return v;
}

enum class SnrMode { strict, nonstrict };

// Random search for a sign-reversal counterexample: alternating vectors
// (grid magnitudes in [1, 2], both leading signs) against every
// contiguous window (strict) or every submatrix (nonstrict, capped).
// A returned SignReversal soundly refutes TP_k / TN_k; a pass verdict
// only means no counterexample was found.
template <ScalarType S>
Verdict<S> sampled_snr_falsify(const Matrix<S>& a, int k, SnrMode mode, int samples, std::uint64_t seed,
                               const EnumLimits& limits = {}) {
    detail::check_order("sampled_snr_falsify", a.rows(), a.cols(), k);
    if (samples < 1) throw std::invalid_argument("sampled_snr_falsify: need at least one sample");
    detail::Timer timer;
    Rng rng(seed);
    Verdict<S> v;
    v.holds = true;

    auto try_block = [&](const MinorId& id, const Matrix<S>& b) {
        ++v.stats.submatrices;
        for (int s = 0; s < samples; ++s) {
            std::vector<S> x = sample_alternating_vector<S>(rng, b.rows(), s % 2 == 0);
            std::vector<S> products = coordinate_products(b, x);
            bool all_negative = true;
            bool none_positive = true;
            for (const S& p : products) {
                const int ps = sign(p);
                all_negative = all_negative && ps < 0;
                none_positive = none_positive && ps <= 0;
            }
            if (all_negative) {
                v.holds = false;
                v.certificate = SignReversal<S>{id, std::move(x), std::move(products)};
                return false;
            }
            // Boundary refutations (some product exactly zero) are counted
            // but not emitted; SignReversal promises strict products.
            if (mode == SnrMode::strict && none_positive) ++v.stats.skipped;
        }
        return true;
    };

    for (int r = 1; r <= k && v.holds; ++r) {
        if (mode == SnrMode::strict) {
            for (const Window& w : contiguous_windows(a.rows(), a.cols(), r))
                if (!try_block(w.minor_id(), submatrix(a, w))) break;
        } else {
            limits.check_product(binomial(a.rows(), r), binomial(a.cols(), r), "sampled_snr_falsify");
            std::vector<int> rows = first_combination(r);
            bool go = true;
            do {
                std::vector<int> cols = first_combination(r);
                do {
                    MinorId id{rows, cols};
                    go = try_block(id, submatrix(a, id));
                } while (go && next_combination(cols, a.cols()));
            } while (go && next_combination(rows, a.rows()));
        }
    }
    v.stats.seconds = timer.seconds();
    return v;
}

struct VariationCheck {
    bool holds = false;
    int changes_in = 0;
    int changes_out = 0;
    bool equality_case = false;   // changes equal and A x != 0
    bool first_sign_agrees = true;
    bool last_sign_agrees = true;
};

// Variation diminution probe: S^-(A x) <= S^-(x), and in the equality
// case with A x != 0 the first and last nonzero components of A x carry
// the same signs as those of x. A sampled property of TN matrices, not a
// decision procedure.
template <ScalarType S>
VariationCheck variation_check(const Matrix<S>& a, const std::vector<S>& x) {
    if (static_cast<int>(x.size()) != a.cols()) throw std::invalid_argument("variation_check: vector length mismatch");
    VariationCheck r;
    const std::vector<S> ax = apply(a, x);
    r.changes_in = count_sign_changes(x);
    r.changes_out = count_sign_changes(ax);
    if (r.changes_out > r.changes_in) {
        r.holds = false;
        return r;
    }
    auto first_nonzero_sign = [](const std::vector<S>& v) {
        for (const S& c : v)
            if (int s = sign(c); s != 0) return s;
        return 0;
    };
    auto last_nonzero_sign = [](const std::vector<S>& v) {
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            if (int s = sign(*it); s != 0) return s;
        return 0;
    };
    const int ax_first = first_nonzero_sign(ax);
    r.equality_case = r.changes_out == r.changes_in && ax_first != 0;
    if (r.equality_case) {
        r.first_sign_agrees = ax_first == first_nonzero_sign(x);
        r.last_sign_agrees = last_nonzero_sign(ax) == last_nonzero_sign(x);
    }
    r.holds = !r.equality_case || (r.first_sign_agrees && r.last_sign_agrees);
    return r;
}

// Largest k for which the property holds (0 when even order 1 fails).
template <ScalarType S>
int tp_order(const Matrix<S>& a) {
    const int kmax = std::min(a.rows(), a.cols());
    for (int r = 1; r <= kmax; ++r) {
        bool ok = true;
        for_each_minor(a, r, nullptr, [&](const MinorId&, const S& value) {
            ok = sign(value) > 0;
            return ok;
        });
        if (!ok) return r - 1;
    }
    return kmax;
}

template <ScalarType S>
int tn_order(const Matrix<S>& a, const EnumLimits& limits = {}) {
    const int kmax = std::min(a.rows(), a.cols());
    for (int r = 1; r <= kmax; ++r) {
        limits.check_product(binomial(a.rows(), r), binomial(a.cols(), r), "tn_order");
        bool ok = true;
        for_each_minor(a, r, nullptr, [&](const MinorId&, const S& value) {
            ok = sign(value) >= 0;
            return ok;
        });
        if (!ok) return r - 1;
    }
    return kmax;
}

}  // namespace tpcert
