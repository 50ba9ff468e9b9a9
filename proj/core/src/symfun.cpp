#include "mtv/symfun.hpp"

#include "mtv/errors.hpp"

#include <mutex>
#include <string>

namespace mtv::oracle {

const PiValue& PowerSumTable::p(std::size_t k) const {
    if (k == 0 || k > entries_.size())
        throw DomainError("power sum p_" + std::to_string(k) + " not in table");
    return entries_[k - 1];
}

namespace {

// e_n = t({2}^n); the oracle's only seed.
PiValue seed_elementary(std::size_t n) {
    const BigInt den = pow2(2 * n) * factorial(2 * n);
    return PiValue(Rational(BigInt(1), den), static_cast<unsigned>(2 * n));
}

void extend_power_sums(std::vector<PiValue>& p, std::size_t kmax) {
    if (p.size() >= kmax) return;
    std::vector<PiValue> e;
    e.reserve(kmax + 1);
    for (std::size_t i = 0; i <= kmax; ++i) e.push_back(seed_elementary(i));
    for (std::size_t n = p.size() + 1; n <= kmax; ++n) {
        // (-1)^{n-1} p_n = n e_n - sum_{i=1}^{n-1} (-1)^{i-1} e_{n-i} p_i
        PiValue acc = e[n] * Rational(static_cast<long>(n));
        for (std::size_t i = 1; i < n; ++i) {
            PiValue term = e[n - i] * p[i - 1];
            if (i % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
        p.push_back(n % 2 == 1 ? acc : -acc);
    }
}

std::mutex g_mutex;
std::vector<PiValue> g_power_sums;

void check_arg(unsigned arg) {
    if (arg < 2) throw DomainError("string argument must be at least 2, got " + std::to_string(arg));
    if (arg % 2 != 0)
        throw UnsupportedExactError("no exact evaluation for odd argument " + std::to_string(arg) +
                                    "; use numeric evaluation");
}

// p'_i = p_{(a/2) i} for i = 1..nmax.
std::vector<PiValue> scaled_power_sums(unsigned arg, std::size_t nmax) {
    const std::size_t half = arg / 2;
    const PowerSumTable table = cached_power_sums(half * nmax);
    std::vector<PiValue> out;
    out.reserve(nmax);
    for (std::size_t i = 1; i <= nmax; ++i) out.push_back(table.p(half * i));
    return out;
}

}  // namespace

PowerSumTable power_sums(std::size_t kmax) {
    if (kmax == 0) throw DomainError("power_sums needs kmax >= 1");
    std::vector<PiValue> p;
    extend_power_sums(p, kmax);
    return PowerSumTable(std::move(p));
}

PowerSumTable cached_power_sums(std::size_t kmax) {
    std::lock_guard lock(g_mutex);
    extend_power_sums(g_power_sums, kmax);
    return PowerSumTable(std::vector<PiValue>(g_power_sums.begin(), g_power_sums.begin() + static_cast<long>(kmax)));
}

std::vector<PiValue> power_sum_snapshot() {
    std::lock_guard lock(g_mutex);
    return g_power_sums;
}

bool seed_power_sums(const std::vector<PiValue>& entries) {
    if (entries.empty()) return true;
    if (power_sums(entries.size()).entries() != entries) return false;
    std::lock_guard lock(g_mutex);
    if (entries.size() > g_power_sums.size()) g_power_sums = entries;
    return true;
}

std::vector<PiValue> string_oracle_table(unsigned arg, std::size_t nmax, bool star) {
    check_arg(arg);
    std::vector<PiValue> out{PiValue::one()};
    if (nmax == 0) return out;
    const std::vector<PiValue> p = scaled_power_sums(arg, nmax);
    for (std::size_t n = 1; n <= nmax; ++n) {
        // e: n e_n = sum_i (-1)^{i-1} e_{n-i} p'_i ; h: n h_n = sum_i h_{n-i} p'_i
        PiValue acc = PiValue::zero(static_cast<unsigned>(arg * n));
        for (std::size_t i = 1; i <= n; ++i) {
            PiValue term = out[n - i] * p[i - 1];
            if (!star && i % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        out.push_back(acc * Rational(1, static_cast<long>(n)));
    }
    return out;
}

PiValue t_string_oracle(unsigned arg, std::size_t n) { return string_oracle_table(arg, n, false)[n]; }

PiValue tstar_string_oracle(unsigned arg, std::size_t n) { return string_oracle_table(arg, n, true)[n]; }

std::vector<std::vector<PiValue>> sum_oracle_table(unsigned arg, std::size_t nmax, bool star) {
    check_arg(arg);
    const std::vector<PiValue> p = scaled_power_sums(arg, nmax);

    // s * c_s(u) = p'_s * P_s(u) with P_s(u) = 1 - (1-u)^s, or (1+u)^s - 1 for star.
    auto poly_coeff = [star](std::size_t s, std::size_t j) -> Rational {
        if (j == 0 || j > s) return Rational(0);
        Rational c(binomial(s, j));
        if (!star && j % 2 == 0) c = -c;
        return c;
    };

    std::vector<std::vector<PiValue>> g(nmax + 1);
    g[0] = {PiValue::one()};
    for (std::size_t n = 1; n <= nmax; ++n) {
        const auto w = static_cast<unsigned>(arg * n);
        std::vector<PiValue> row(n + 1, PiValue::zero(w));
        for (std::size_t s = 1; s <= n; ++s) {
            const auto& prev = g[n - s];
            for (std::size_t j = 1; j <= s; ++j) {
                const Rational c = poly_coeff(s, j);
                const PiValue ps = p[s - 1] * c;
                for (std::size_t i = 0; i < prev.size(); ++i) {
                    if (prev[i].is_zero()) continue;
                    row[i + j] += ps * prev[i];
                }
            }
        }
        const Rational inv(1, static_cast<long>(n));
        for (auto& v : row) v *= inv;
        g[n] = std::move(row);
    }
    return g;
}

PiValue sum_oracle(unsigned arg, std::size_t n, std::size_t k, bool star) {
    if (k < 1 || k > n)
        throw DomainError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    return sum_oracle_table(arg, n, star)[n][k];
}

}  // namespace mtv::oracle
