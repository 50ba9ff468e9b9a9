#include "mtv/closed_forms.hpp"

#include "mtv/errors.hpp"
#include "mtv/euler.hpp"
#include "mtv/identities.hpp"

#include <bit>
#include <string>

namespace mtv::closed {

std::string to_string(SumKind kind) { return kind == SumKind::T ? "T" : "Tstar"; }

SignVector::SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
    for (auto e : entries_)
        if (e != 1 && e != -1) throw DomainError("sign vector entries must be +1 or -1");
}

SignVector SignVector::from_mask(std::size_t length, std::uint64_t mask) {
    std::vector<std::int8_t> e(length, 1);
    for (std::size_t i = 0; i < length; ++i)
        if ((mask >> i) & 1U) e[i] = -1;
    return SignVector(std::move(e));
}

bool SignVector::even_parity() const {
    std::size_t minus = 0;
    for (auto e : entries_) minus += e < 0 ? 1 : 0;
    return minus % 2 == 0;
}

namespace {

void check_depth(unsigned n, unsigned k) {
    if (k < 1 || k > n)
        throw DomainError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void check_two_m(unsigned two_m, unsigned n) {
    if (two_m < 4 || two_m % 2 != 0)
        throw DomainError("argument 2m must be even and at least 4, got " + std::to_string(two_m));
    if (n < 1) throw DomainError("string length must be at least 1");
}

Rational sign(unsigned e) { return Rational(e % 2 == 0 ? 1 : -1); }

// pi^{2n} / (4^n (2n)!)
PiValue base2(unsigned n) {
    return PiValue(Rational(BigInt(1), pow2(2UL * n) * factorial(2UL * n)), 2 * n);
}

CycloEvaluation finish(CycloElem sum) {
    auto re = cyclo_real_rational(sum);
    const bool imag_zero = sum == sum.conj();
    return {std::move(sum), std::move(re.real_part), std::move(re.as_rational), imag_zero};
}

const Rational& require_rational(const CycloEvaluation& ev, const char* what) {
    if (!ev.rational)
        throw ConsistencyError(std::string(what) + ": root-of-unity sum did not reduce to a rational, got " +
                               ev.real_part.to_string());
    return *ev.rational;
}

}  // namespace

PiValue t2_string(unsigned n) { return base2(n); }

PiValue tstar2_string(unsigned n) { return base2(n) * Rational(euler_e2n(n)) * sign(n); }

SumValue sum_even(unsigned n, unsigned k, bool star, SumVariant variant) {
    check_depth(n, k);
    const EulerTable e = euler_table(n);
    BigInt acc = 0;
    Rational pre;
    if (star) {
        if (variant == SumVariant::Zhao)
            throw UnsupportedExactError("the Zhao form is only defined for T(2n,k)");
        for (unsigned q = k; q <= n; ++q) acc += binomial(2 * n, 2 * q) * binomial(q, k) * e.e2n(q);
        pre = sign(n);
    } else if (variant == SumVariant::Theorem) {
        for (unsigned p = k; p <= n; ++p) acc += binomial(2 * n, 2 * p) * binomial(p, k) * e.e2n(n - p);
        pre = sign(n - k);
    } else {
        for (unsigned l = 0; l <= n - k; ++l) acc += binomial(n - l, k) * binomial(2 * n, 2 * l) * e.e2n(l);
        pre = sign(n - k);
    }
    return {star ? SumKind::TStar : SumKind::T, 2, n, k, base2(n) * pre * Rational(acc)};
}

BigInt weight4_inner(unsigned p) {
    const EulerTable e = euler_table(2 * p);
    BigInt acc = 0;
    for (unsigned l1 = 0; l1 <= 2 * p; ++l1) {
        BigInt term = binomial(4 * p, 2 * l1) * e.e2n(l1) * e.e2n(2 * p - l1);
        if (l1 % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

SumValue sum_weight4(unsigned n, unsigned k, bool star) {
    check_depth(n, k);
    // (-1)^n pi^{4n} / (4^n (4n)!)
    const PiValue pre(Rational(BigInt(1), pow2(2UL * n) * factorial(4UL * n)) * sign(n), 4 * n);
    Rational acc(0);
    if (star) {
        for (unsigned q = k; q <= n; ++q)
            acc += Rational(binomial(q, k) * binomial(4 * n, 4 * q) * weight4_inner(q), pow2(2UL * q)) * sign(q);
    } else {
        for (unsigned p = 0; p <= n - k; ++p)
            acc += Rational(binomial(n - p, k) * binomial(4 * n, 4 * p) * weight4_inner(p), pow2(2UL * p)) *
                   sign(p + k);
    }
    return {star ? SumKind::TStar : SumKind::T, 4, n, k, pre * acc};
}

CycloEvaluation odd_subset_sum(unsigned m, unsigned n) {
    if (m < 3 || m % 2 == 0) throw DomainError("subset form needs odd m >= 3");
    if (m > 30) throw DomainError("m too large for subset enumeration");
    const unsigned long e = 2UL * m * n;
    std::vector<CycloElem> roots;
    for (unsigned j = 0; j < m; ++j) roots.push_back(CycloElem::root_power(m, j));
    CycloElem total(m);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        const auto size = static_cast<unsigned>(std::popcount(mask));
        if (size > (m - 1) / 2) continue;
        CycloElem s(m);
        for (unsigned j = 0; j < m; ++j)
            if ((mask >> j) & 1U) s += roots[j];
        total += cyclo_pow(s, e);
    }
    return finish(std::move(total));
}

CycloEvaluation sign_vector_sum(unsigned m, unsigned n, bool even_parity_only) {
    if (m < 2) throw DomainError("sign-vector form needs m >= 2");
    if (m > 30) throw DomainError("m too large for sign-vector enumeration");
    const unsigned order = m % 2 == 0 ? 2 * m : m;
    const unsigned long e = 2UL * m * n;
    std::vector<CycloElem> roots;
    for (unsigned j = 0; j < m; ++j) roots.push_back(CycloElem::root_power(order, j));
    CycloElem total(order);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        const SignVector eps = SignVector::from_mask(m - 1, mask);
        if (even_parity_only && !eps.even_parity()) continue;
        // w^{m-1} + eps_1 w^{m-2} + ... + eps_{m-1} w^0
        CycloElem b = roots[m - 1];
        for (unsigned i = 1; i < m; ++i) {
            if (eps.entries()[i - 1] > 0)
                b += roots[m - 1 - i];
            else
                b -= roots[m - 1 - i];
        }
        total += cyclo_pow(b, e);
    }
    return finish(std::move(total));
}

CycloEvaluation secant_product_coefficient(unsigned m, unsigned n) {
    if (m < 1) throw DomainError("secant product needs m >= 1");
    const unsigned order = m % 2 == 0 ? 2 * m : m;
    const unsigned len = m * n;
    const EulerTable e = euler_table(len);
    std::vector<Rational> base(len + 1);
    for (unsigned l = 0; l <= len; ++l) base[l] = Rational(e.e2n(l), factorial(2UL * l));

    // acc = product of the series for j = 0..m-1, truncated at degree len.
    std::vector<CycloElem> acc(len + 1, CycloElem(order));
    for (unsigned l = 0; l <= len; ++l) acc[l] = CycloElem(order, base[l]);
    for (unsigned j = 1; j < m; ++j) {
        std::vector<CycloElem> factor;
        factor.reserve(len + 1);
        for (unsigned l = 0; l <= len; ++l)
            factor.push_back(CycloElem::root_power(order, static_cast<long>(2UL * j * l)) * base[l]);
        std::vector<CycloElem> next(len + 1, CycloElem(order));
        for (unsigned a = 0; a <= len; ++a) {
            for (unsigned b = 0; a + b <= len; ++b) {
                if (base[b].is_zero()) continue;
                next[a + b] += acc[a] * factor[b];
            }
        }
        acc = std::move(next);
    }
    return finish(std::move(acc[len]));
}

PiValue t_string_even_arg(unsigned two_m, unsigned n) {
    check_two_m(two_m, n);
    const unsigned m = two_m / 2;
    const unsigned w = two_m * n;
    if (m % 2 == 1) {
        const CycloEvaluation ev = odd_subset_sum(m, n);
        if (!ev.imaginary_zero) throw ConsistencyError("odd-m subset sum has nonzero imaginary part");
        const Rational& s = require_rational(ev, "t string (odd m)");
        return PiValue(s / Rational(pow2(m - 1) * factorial(w)), w);
    }
    const CycloEvaluation ev = sign_vector_sum(m, n, true);
    const Rational& s = require_rational(ev, "t string (even m)");
    return PiValue(s * sign(n) / Rational(pow2(static_cast<unsigned long>(w) + m - 2) * factorial(w)), w);
}

PiValue t_string_sign_sum(unsigned two_m, unsigned n) {
    check_two_m(two_m, n);
    const unsigned m = two_m / 2;
    const unsigned w = two_m * n;
    const CycloEvaluation ev = sign_vector_sum(m, n, false);
    if (!ev.imaginary_zero) throw ConsistencyError("full sign-vector sum has nonzero imaginary part");
    const Rational& s = require_rational(ev, "t string (sign sum)");
    // (-1)^n (-1)^{mn} / (2^{m-1} 2^{2mn} (2mn)!)
    return PiValue(s * sign(n + m * n) / Rational(pow2(m - 1 + static_cast<unsigned long>(w)) * factorial(w)), w);
}

PiValue tstar_string_even_arg(unsigned two_m, unsigned n) {
    check_two_m(two_m, n);
    const unsigned m = two_m / 2;
    const unsigned w = two_m * n;
    const CycloEvaluation ev = secant_product_coefficient(m, n);
    if (!ev.imaginary_zero) throw ConsistencyError("secant product coefficient has nonzero imaginary part");
    const Rational& s = require_rational(ev, "t* string");
    const Rational pre = m % 2 == 1 ? sign(n) : Rational(1);
    return PiValue(s * pre / Rational(pow2(w)), w);
}

PiValue string_exact(unsigned arg, unsigned n, bool star) {
    if (arg < 2) throw DomainError("string argument must be at least 2");
    if (arg % 2 != 0)
        throw UnsupportedExactError("no exact evaluation for odd argument " + std::to_string(arg) +
                                    "; use numeric evaluation");
    if (n == 0) return PiValue::one();
    if (arg == 2) return star ? tstar2_string(n) : t2_string(n);
    return star ? tstar_string_even_arg(arg, n) : t_string_even_arg(arg, n);
}

SumValue sum_exact(unsigned arg, unsigned n, unsigned k, bool star) {
    check_depth(n, k);
    if (arg < 2) throw DomainError("argument must be at least 2");
    if (arg % 2 != 0)
        throw UnsupportedExactError("no exact evaluation for odd argument " + std::to_string(arg) +
                                    "; use numeric evaluation");
    if (arg == 2) return sum_even(n, k, star);
    if (arg == 4) return sum_weight4(n, k, star);
    std::vector<PiValue> t;
    std::vector<PiValue> ts;
    for (unsigned p = 0; p <= n; ++p) {
        t.push_back(string_exact(arg, p, false));
        ts.push_back(string_exact(arg, p, true));
    }
    const PiValue zero = PiValue::zero(arg * n);
    PiValue v = star ? identities::theorem_Tstar(t, ts, n, k, zero) : identities::theorem_T(t, ts, n, k, zero);
    return {star ? SumKind::TStar : SumKind::T, arg, n, k, std::move(v)};
}

PiValue hurwitz_scaled(unsigned m, unsigned n, unsigned k) {
    return sum_exact(m, n, k, false).value * Rational(pow2(static_cast<unsigned long>(m) * n));
}

}  // namespace mtv::closed
