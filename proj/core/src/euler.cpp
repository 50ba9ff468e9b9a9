#include "mtv/euler.hpp"

#include "mtv/errors.hpp"

#include <mutex>
#include <string>

namespace mtv {

const BigInt& EulerTable::e2n(std::size_t n) const {
    if (n >= values_.size())
        throw DomainError("Euler number E_" + std::to_string(2 * n) + " not in table");
    return values_[n];
}

namespace {

void extend(std::vector<BigInt>& v, std::size_t n) {
    if (v.empty()) v.emplace_back(1);
    for (std::size_t i = v.size(); i <= n; ++i) {
        BigInt acc = 0;
        for (std::size_t k = 0; k < i; ++k) acc += binomial(2 * i, 2 * k) * v[k];
        v.push_back(-acc);
    }
}

std::mutex g_mutex;
std::vector<BigInt> g_values;

}  // namespace

EulerTable euler_numbers(std::size_t n) {
    std::vector<BigInt> v;
    v.reserve(n + 1);
    extend(v, n);
    return EulerTable(std::move(v));
}

EulerTable euler_table(std::size_t n) {
    std::lock_guard lock(g_mutex);
    extend(g_values, n);
    return EulerTable(std::vector<BigInt>(g_values.begin(), g_values.begin() + static_cast<long>(n) + 1));
}

BigInt euler_e2n(std::size_t n) {
    std::lock_guard lock(g_mutex);
    extend(g_values, n);
    return g_values[n];
}

EulerTable euler_snapshot() {
    std::lock_guard lock(g_mutex);
    return EulerTable(g_values);
}

bool seed_euler_table(const std::vector<BigInt>& values) {
    if (values.empty()) return true;
    const EulerTable fresh = euler_numbers(values.size() - 1);
    if (fresh.values() != values) return false;
    std::lock_guard lock(g_mutex);
    if (values.size() > g_values.size()) g_values = values;
    return true;
}

}  // namespace mtv
