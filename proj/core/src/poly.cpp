#include "mtv/poly.hpp"

#include "mtv/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace mtv {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPoly(std::move(out));
}

RationalPoly operator*(RationalPoly a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {RationalPoly(), *this};
    std::vector<Rational> quot(rem.size() - dd);
    const Rational& lead = divisor.leading();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        const Rational c = rem[i] / lead;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
    }
    rem.resize(dd);
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) os << mag;
        if (i >= 1) os << (unit ? "" : "*") << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

const RationalPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<RationalPoly>> memo;

    // Divisors are computed before taking the lock; the recursion below
    // re-enters this function.
    RationalPoly p = RationalPoly::monomial(Rational(1), n) - RationalPoly(std::vector<Rational>{Rational(1)});
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(n); it != memo.end()) return *it->second;
    }
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = p.divmod(cyclotomic_polynomial(d)).first;
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = memo.emplace(n, std::make_unique<RationalPoly>(std::move(p)));
    return *it->second;
}

unsigned totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace mtv
