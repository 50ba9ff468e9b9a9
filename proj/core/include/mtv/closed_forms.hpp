#pragma once

#include "mtv/cyclotomic.hpp"
#include "mtv/pi_value.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mtv::closed {

enum class SumKind { T, TStar };
enum class SumVariant { Theorem, Zhao };

std::string to_string(SumKind kind);

/// T(mn,k) or T*(mn,k) with its exact value (weight m*n).
struct SumValue {
    SumKind kind;
    unsigned m;
    unsigned n;
    unsigned k;
    PiValue value;
};

/// Signs eps_1..eps_{m-1}; the count of -1 entries decides membership in the
/// even-parity set used for even m.
class SignVector {
public:
    explicit SignVector(std::vector<std::int8_t> entries);
    /// The vector whose i-th sign is -1 iff bit i of `mask` is set.
    static SignVector from_mask(std::size_t length, std::uint64_t mask);

    const std::vector<std::int8_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool even_parity() const;

private:
    std::vector<std::int8_t> entries_;
};

/// t({2}^n) = pi^{2n} / (4^n (2n)!)
PiValue t2_string(unsigned n);
/// t*({2}^n) = (-1)^n E_{2n} pi^{2n} / (4^n (2n)!)
PiValue tstar2_string(unsigned n);

/// T(2n,k) / T*(2n,k) from Euler numbers. The Zhao variant exists only for T.
SumValue sum_even(unsigned n, unsigned k, bool star, SumVariant variant = SumVariant::Theorem);

/// T(4n,k) / T*(4n,k) from products of two Euler numbers.
SumValue sum_weight4(unsigned n, unsigned k, bool star);

/// Inner Euler-number double sum of the weight-4 formulas,
/// sum_{l1+l2=2p} (-1)^{l1} C(4p,2l1) E_{2l1} E_{2l2}.
BigInt weight4_inner(unsigned p);

/// Cyclotomic bookkeeping behind one string evaluation.
struct CycloEvaluation {
    CycloElem sum;        ///< raw root-of-unity sum before extracting anything
    CycloElem real_part;  ///< (sum + conj sum) / 2
    std::optional<Rational> rational;
    bool imaginary_zero;  ///< sum == conj(sum)
};

/// Odd m >= 3: sum_{k=1}^{(m-1)/2} sum_{|S|=k} (sum_{j in S} w_m^j)^{2mn}, w_m = e^{2 pi i/m}.
CycloEvaluation odd_subset_sum(unsigned m, unsigned n);

/// sum over sign vectors of (w^{m-1} + eps_1 w^{m-2} + ... + eps_{m-1})^{2mn};
/// w = e^{2 pi i/2m} for even m and e^{2 pi i/m} for odd m. With
/// `even_parity_only` the sum runs over the even-parity vectors only.
CycloEvaluation sign_vector_sum(unsigned m, unsigned n, bool even_parity_only);

/// sum_{|l|=mn} prod_{j=0}^{m-1} E_{2l_{j+1}}/(2l_{j+1})! * w^{2 j l_{j+1}} as a
/// Cauchy product of m series; w = e^{2 pi i/m} (m odd) or e^{2 pi i/2m} (m even).
CycloEvaluation secant_product_coefficient(unsigned m, unsigned n);

/// t({2m}^n) for 2m >= 4, n >= 1: the subset form for odd m and the
/// even-parity sign form for even m.
PiValue t_string_even_arg(unsigned two_m, unsigned n);

/// t({2m}^n) from the sum over all 2^{m-1} sign vectors (any m >= 2).
PiValue t_string_sign_sum(unsigned two_m, unsigned n);

/// t*({2m}^n) for 2m >= 4, n >= 1, from the secant product.
PiValue tstar_string_even_arg(unsigned two_m, unsigned n);

/// t({a}^n) or t*({a}^n) for even a >= 2 and n >= 0 through whichever closed
/// form covers a. Throws UnsupportedExactError for odd a.
PiValue string_exact(unsigned arg, unsigned n, bool star);

/// T(an,k) / T*(an,k) for even a: the Euler-number forms for a = 2 and a = 4,
/// otherwise the two-string expansion over closed-form strings.
SumValue sum_exact(unsigned arg, unsigned n, unsigned k, bool star);

/// 2^{mn} T(mn,k), the shifted multiple Hurwitz zeta sum at shift -1/2.
PiValue hurwitz_scaled(unsigned m, unsigned n, unsigned k);

}  // namespace mtv::closed
