#pragma once

#include "mtv/rational.hpp"

#include <cstddef>
#include <vector>

namespace mtv {

/// Euler numbers E_0, E_2, ..., E_{2N} in the convention
/// sec x = sum_n (-1)^n E_{2n} x^{2n} / (2n)!, so E_2 = -1, E_4 = 5, E_6 = -61.
class EulerTable {
public:
    EulerTable() = default;
    explicit EulerTable(std::vector<BigInt> values) : values_(std::move(values)) {}

    /// E_{2n}; throws DomainError when n exceeds max_index().
    const BigInt& e2n(std::size_t n) const;
    std::size_t max_index() const { return values_.empty() ? 0 : values_.size() - 1; }
    std::size_t size() const { return values_.size(); }
    const std::vector<BigInt>& values() const { return values_; }

private:
    std::vector<BigInt> values_;
};

/// E_0..E_{2N} from E_0 = 1 and sum_{k=0}^{n} C(2n,2k) E_{2k} = 0 (n >= 1).
EulerTable euler_numbers(std::size_t n);

/// Process-wide memo. Concurrent callers observe a single, prefix-stable table.
EulerTable euler_table(std::size_t n);

/// Shorthand for euler_table(n).e2n(n).
BigInt euler_e2n(std::size_t n);

/// Current contents of the memo (possibly empty).
EulerTable euler_snapshot();

/// Seeds the memo with a previously persisted table after checking it against
/// a fresh computation. Returns false (and leaves the memo unchanged) on any
/// mismatch.
bool seed_euler_table(const std::vector<BigInt>& values);

}  // namespace mtv
