#pragma once

#include "mtv/rational.hpp"

#include <cstddef>
#include <vector>

// Right-hand sides of the sum relations, generic over the value type so the
// same algebra runs on exact PiValue and on numeric BallReal. `zero` fixes the
// type's additive identity (weight or precision). Strings are indexed by depth
// with index 0 holding the empty string (value 1).
namespace mtv::identities {

/// T(mn,k) = sum_{p=k}^{n} (-1)^{p-k} C(p,k) t({m}^p) t*({m}^{n-p})
template <class V>
V theorem_T(const std::vector<V>& t, const std::vector<V>& ts, std::size_t n, std::size_t k, V zero) {
    for (std::size_t p = k; p <= n; ++p) {
        V term = t[p] * ts[n - p] * Rational(binomial(p, k));
        if ((p - k) % 2 == 1)
            zero = zero - term;
        else
            zero = zero + term;
    }
    return zero;
}

/// T*(mn,k) = sum_{q=k}^{n} (-1)^{n+q} C(q,k) t({m}^{n-q}) t*({m}^q)
template <class V>
V theorem_Tstar(const std::vector<V>& t, const std::vector<V>& ts, std::size_t n, std::size_t k, V zero) {
    for (std::size_t q = k; q <= n; ++q) {
        V term = t[n - q] * ts[q] * Rational(binomial(q, k));
        if ((n + q) % 2 == 1)
            zero = zero - term;
        else
            zero = zero + term;
    }
    return zero;
}

/// sum_{r=1}^{k} C(n-r,k-r) T(mn,r); `row[r]` holds T(mn,r).
template <class V>
V lemma_Tstar(const std::vector<V>& row, std::size_t n, std::size_t k, V zero) {
    for (std::size_t r = 1; r <= k; ++r) zero = zero + row[r] * Rational(binomial(n - r, k - r));
    return zero;
}

/// T(mn,1) + ... + T(mn,n)
template <class V>
V corollary_sum(const std::vector<V>& row, std::size_t n, V zero) {
    for (std::size_t r = 1; r <= n; ++r) zero = zero + row[r];
    return zero;
}

}  // namespace mtv::identities

namespace mtv::identities {

/// Homogeneous polynomial in (y, z) of total degree `degree`; coeff[p][q] is
/// the coefficient of y^p z^q for p + q <= degree.
template <class V>
struct Bivariate {
    std::size_t degree;
    std::vector<std::vector<V>> coeff;

    Bivariate(std::size_t n, const V& zero) : degree(n), coeff(n + 1) {
        for (std::size_t p = 0; p <= n; ++p) coeff[p].assign(n + 1 - p, zero);
    }

    /// (d/dy)^k evaluated at (y0, z0) with y0, z0 in {-1, 0, 1}.
    V derive_y_at(std::size_t k, int y0, int z0, V zero) const {
        auto ipow = [](int b, std::size_t e) {
            long r = 1;
            for (std::size_t i = 0; i < e; ++i) r *= b;
            return r;
        };
        for (std::size_t p = k; p <= degree; ++p) {
            const BigInt falling = factorial(p) / factorial(p - k);
            for (std::size_t q = 0; p + q <= degree; ++q) {
                const long s = ipow(y0, p - k) * ipow(z0, q);
                if (s == 0) continue;
                zero = zero + coeff[p][q] * Rational(BigInt(falling * s));
            }
        }
        return zero;
    }
};

/// sum_{r=1}^{n} z^{n-r} (y+z)^r T(mn,r), expanded.
template <class V>
Bivariate<V> par_sums_side(const std::vector<V>& row, std::size_t n, const V& zero) {
    Bivariate<V> b(n, zero);
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t i = 0; i <= r; ++i)
            b.coeff[i][n - i] = b.coeff[i][n - i] + row[r] * Rational(binomial(r, i));
    return b;
}

/// sum_{p+q=n} y^p z^q t({m}^p) t*({m}^q)
template <class V>
Bivariate<V> par_strings_side(const std::vector<V>& t, const std::vector<V>& ts, std::size_t n, const V& zero) {
    Bivariate<V> b(n, zero);
    for (std::size_t p = 0; p <= n; ++p) b.coeff[p][n - p] = t[p] * ts[n - p];
    return b;
}

}  // namespace mtv::identities
