#pragma once

#include "mtv/ball.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mtv::numeric {

/// Ordered tuple of positive integers (alpha_1, ..., alpha_k).
class Composition {
public:
    explicit Composition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    unsigned weight() const;
    /// Every part multiplied by `factor`.
    Composition scaled(unsigned factor) const;
    /// The last part is at least 2, so the nested series converges.
    bool admissible() const { return parts_.back() >= 2; }

    std::string to_string() const;
    friend bool operator==(const Composition& a, const Composition& b) = default;

private:
    std::vector<unsigned> parts_;
};

/// Compositions of n into exactly k positive parts in lexicographic order.
/// Empty when k > n or k = 0.
class CompositionStream {
public:
    CompositionStream(unsigned n, unsigned k);
    std::optional<Composition> next();

private:
    unsigned n_;
    unsigned k_;
    std::vector<unsigned> cur_;
    bool done_;
};

std::vector<Composition> compositions(unsigned n, unsigned k);

/// Largest number of terms accepted anywhere.
inline constexpr unsigned long kMaxTerms = 10'000'000;
/// Cap for the automatically chosen number of terms.
inline constexpr unsigned long kDefaultTermCap = 100'000;

/// Outcome of a truncated series evaluation.
struct SeriesResult {
    BallReal ball;     ///< encloses the infinite series
    BallReal partial;  ///< encloses the partial sum over indices j <= terms
    Mpfr tail;         ///< analytic bound on the omitted tail
    unsigned long terms;
    bool capped;       ///< the tail target 2^{-bits} was not reachable within the cap
};

/// Upper bound on the tail of t(alpha) or t*(alpha) beyond index J.
Mpfr tail_bound(const Composition& alpha, unsigned long terms);

/// Smallest J with tail_bound <= 2^{-bits}, clamped to [depth, kDefaultTermCap].
/// Sets `capped` when the clamp was needed.
unsigned long default_terms(const Composition& alpha, unsigned bits, bool* capped = nullptr);

/// Nested sum over odd denominators, strict (t) or non-strict (t*).
/// Throws DivergenceError when the last part is 1, InsufficientTermsError
/// when J < depth, DomainError when bits < 32 or J > kMaxTerms.
SeriesResult t_numeric(const Composition& alpha, bool star, unsigned bits,
                       std::optional<unsigned long> terms = std::nullopt);

/// T(mn,k) or T*(mn,k) for every 1 <= k <= n <= nmax from one pass over the
/// indices: the state (depth, weight) accumulates all compositions at once.
/// result[n][k]; entries with k = 0 or k > n are empty balls.
struct SumTable {
    std::vector<std::vector<SeriesResult>> entries;
    unsigned long terms;
    bool capped;
    const SeriesResult& at(unsigned n, unsigned k) const { return entries.at(n).at(k); }
};

SumTable sum_numeric_table(unsigned m, unsigned nmax, bool star, unsigned bits,
                           std::optional<unsigned long> terms = std::nullopt);

SeriesResult sum_numeric(unsigned m, unsigned n, unsigned k, bool star, unsigned bits,
                         std::optional<unsigned long> terms = std::nullopt);

/// Guard bits carried above the requested precision.
inline constexpr unsigned kGuardBits = 32;

}  // namespace mtv::numeric
