#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tpcert/minors.hpp"

namespace tpcert {

struct Pass {
    friend bool operator==(const Pass&, const Pass&) { return true; }
};

// A minor whose recomputed value reproduces the cited sign violation.
template <ScalarType S>
struct FailingMinor {
    MinorId at;
    S value;

    friend bool operator==(const FailingMinor&, const FailingMinor&) = default;
};

// An alternating vector x with x_i (B x)_i < 0 at every coordinate of
// the cited submatrix B: a total strict sign reversal.
template <ScalarType S>
struct SignReversal {
    MinorId at;
    std::vector<S> x;
    std::vector<S> products;

    friend bool operator==(const SignReversal&, const SignReversal&) = default;
};

// An alternating vector in the kernel of the cited submatrix: B x = 0
// exactly.
template <ScalarType S>
struct KernelVector {
    MinorId at;
    std::vector<S> x;

    friend bool operator==(const KernelVector&, const KernelVector&) = default;
};

template <ScalarType S>
using Certificate = std::variant<Pass, FailingMinor<S>, SignReversal<S>, KernelVector<S>>;

template <ScalarType S>
struct Verdict {
    bool holds = false;
    Certificate<S> certificate = Pass{};
    Stats stats;
};

enum class MinorSense {
    require_positive,     // a value <= 0 is a violation
    require_nonnegative,  // a value < 0 is a violation
};

// Independent re-validation of certificates against the original matrix.
// These recompute everything they assert and never trust the search that
// produced the certificate.

template <ScalarType S>
bool recheck_failing_minor(const Matrix<S>& a, const FailingMinor<S>& c, MinorSense sense) {
    const S value = det(submatrix(a, c.at));
    if (!(value == c.value)) return false;
    const int s = sign(value);
    return sense == MinorSense::require_positive ? s <= 0 : s < 0;
}

template <ScalarType S>
bool recheck_sign_reversal(const Matrix<S>& a, const SignReversal<S>& c) {
    if (!is_alternating(c.x)) return false;
    const Matrix<S> b = submatrix(a, c.at);
    if (b.rows() != static_cast<int>(c.x.size())) return false;
    const std::vector<S> products = coordinate_products(b, c.x);
    if (products != c.products) return false;
    for (const S& p : products)
        if (sign(p) >= 0) return false;
    return true;
}

template <ScalarType S>
bool recheck_kernel(const Matrix<S>& a, const KernelVector<S>& c) {
    if (!is_alternating(c.x)) return false;
    if (sign(c.x.front()) <= 0) return false;
    const Matrix<S> b = submatrix(a, c.at);
    if (b.cols() != static_cast<int>(c.x.size())) return false;
    for (const S& v : apply(b, c.x))
        if (sign(v) != 0) return false;
    return true;
}

template <ScalarType S>
bool recheck_certificate(const Matrix<S>& a, const Certificate<S>& c, MinorSense sense) {
    return std::visit(
        [&](const auto& cert) -> bool {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, Pass>)
                return true;  // a pass carries no witness to recheck
            else if constexpr (std::is_same_v<T, FailingMinor<S>>)
                return recheck_failing_minor(a, cert, sense);
            else if constexpr (std::is_same_v<T, SignReversal<S>>)
                return recheck_sign_reversal(a, cert);
            else
                return recheck_kernel(a, cert);
        },
        c);
}

}  // namespace tpcert
