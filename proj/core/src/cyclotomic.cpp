#include "mtv/cyclotomic.hpp"

#include "mtv/errors.hpp"

#include <sstream>

namespace mtv {

namespace {

// Reduces coefficients of a polynomial in zeta modulo the monic cyclotomic
// polynomial and pads the result to exactly phi(order) entries.
std::vector<Rational> reduce(std::vector<Rational> c, unsigned order) {
    const RationalPoly& phi = cyclotomic_polynomial(order);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    const auto& pc = phi.coeffs();
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i].is_zero()) continue;
        const Rational lead = c[i];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (pc[j].is_zero()) continue;
            c[i - deg + j] -= lead * pc[j];
        }
    }
    c.resize(deg);
    return c;
}

}  // namespace

CycloElem::CycloElem(unsigned order) : order_(order) {
    if (order == 0) throw DomainError("cyclotomic field of order 0");
    coeffs_.resize(static_cast<std::size_t>(cyclotomic_polynomial(order).degree()));
}

CycloElem::CycloElem(unsigned order, const Rational& value) : CycloElem(order) { coeffs_[0] = value; }

CycloElem CycloElem::root_power(unsigned order, long e) {
    CycloElem z(order);
    const long n = static_cast<long>(order);
    const long r = ((e % n) + n) % n;
    std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
    c[static_cast<std::size_t>(r)] = Rational(1);
    z.coeffs_ = reduce(std::move(c), order);
    return z;
}

CycloElem CycloElem::from_poly(unsigned order, const RationalPoly& p) {
    CycloElem z(order);
    z.coeffs_ = reduce(p.coeffs(), order);
    return z;
}

bool CycloElem::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> CycloElem::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

void CycloElem::check_same_field(const CycloElem& o) const {
    if (order_ != o.order_)
        throw DomainError("mixing cyclotomic fields of order " + std::to_string(order_) + " and " +
                          std::to_string(o.order_));
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    check_same_field(o);
    const std::size_t d = coeffs_.size();
    std::vector<Rational> prod(d == 0 ? 0 : 2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce(std::move(prod), order_);
    return *this;
}

CycloElem& CycloElem::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloElem CycloElem::conj() const {
    // zeta^i -> zeta^(N-i); the zeta^0 term stays put.
    std::vector<Rational> c(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(order_ - i) % order_] += coeffs_[i];
    CycloElem r(order_);
    r.coeffs_ = reduce(std::move(c), order_);
    return r;
}

RationalPoly CycloElem::as_poly() const { return RationalPoly(coeffs_); }

std::string CycloElem::to_string() const {
    std::ostringstream os;
    os << as_poly().to_string() << " (mod Phi_" << order_ << ")";
    std::string s = os.str();
    // Render the generator as z rather than x.
    for (auto& ch : s)
        if (ch == 'x') ch = 'z';
    return s;
}

CycloElem cyclo_pow(const CycloElem& z, unsigned long e) {
    CycloElem result(z.order(), Rational(1));
    CycloElem base = z;
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

RealPart cyclo_real_rational(const CycloElem& z) {
    CycloElem re = (z + z.conj()) * Rational(1, 2);
    auto q = re.as_rational();
    return {std::move(re), std::move(q)};
}

CycloElem cyclo_imag_part(const CycloElem& z) { return (z - z.conj()) * Rational(1, 2); }

}  // namespace mtv
