#pragma once

#include "mtv/pi_value.hpp"

#include <cstddef>
#include <vector>

// Exact oracle for even-argument string values built only from
// t({2}^n) = pi^{2n} / (4^n (2n)!) and Newton's identities over the alphabet
// x_j = (2j-1)^{-a}. Nothing in here consults the closed-form evaluations.
namespace mtv::oracle {

/// p_k = t(2k) = sum_j (2j-1)^{-2k}, k = 1..kmax.
class PowerSumTable {
public:
    explicit PowerSumTable(std::vector<PiValue> entries) : entries_(std::move(entries)) {}
    /// p_k for 1 <= k <= kmax().
    const PiValue& p(std::size_t k) const;
    std::size_t kmax() const { return entries_.size(); }
    const std::vector<PiValue>& entries() const { return entries_; }

private:
    std::vector<PiValue> entries_;  // entries_[k-1] = p_k
};

/// Solves n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i for p_n, ascending.
PowerSumTable power_sums(std::size_t kmax);

/// Memoized power_sums(); safe to call concurrently.
PowerSumTable cached_power_sums(std::size_t kmax);

/// Current contents of the memo (possibly empty).
std::vector<PiValue> power_sum_snapshot();

/// Replaces the memo with `entries` if they match a fresh computation.
bool seed_power_sums(const std::vector<PiValue>& entries);

/// t({a}^n), the n-th elementary symmetric function of {(2j-1)^{-a}}.
/// Returns 1 for n = 0. Throws UnsupportedExactError for odd a and
/// DomainError for a < 2.
PiValue t_string_oracle(unsigned arg, std::size_t n);

/// t*({a}^n), the n-th complete homogeneous symmetric function.
PiValue tstar_string_oracle(unsigned arg, std::size_t n);

/// Strings t({a}^0..nmax) (or t* when star is set) in one pass.
std::vector<PiValue> string_oracle_table(unsigned arg, std::size_t nmax, bool star);

/// T(an,k) (or T*(an,k)) for all 1 <= k <= n <= nmax, read off the generating
/// function prod_j (1 + u x_j/(1-x_j)) = exp(sum_s p'_s (1-(1-u)^s)/s)
/// (star: prod_j (1-x_j)/(1-(1+u)x_j) = exp(sum_s p'_s ((1+u)^s-1)/s)).
/// result[n][k]; row 0 and column 0 hold the empty-composition terms.
std::vector<std::vector<PiValue>> sum_oracle_table(unsigned arg, std::size_t nmax, bool star);

/// Single entry of sum_oracle_table(). Throws DomainError unless 1 <= k <= n.
PiValue sum_oracle(unsigned arg, std::size_t n, std::size_t k, bool star);

}  // namespace mtv::oracle
