#include "mtv/series.hpp"

#include "mtv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace mtv::numeric {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("composition must have at least one part");
    for (unsigned p : parts_)
        if (p == 0) throw DomainError("composition parts must be positive");
}

unsigned Composition::weight() const {
    unsigned w = 0;
    for (unsigned p : parts_) w += p;
    return w;
}

Composition Composition::scaled(unsigned factor) const {
    std::vector<unsigned> p = parts_;
    for (auto& x : p) x *= factor;
    return Composition(std::move(p));
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

CompositionStream::CompositionStream(unsigned n, unsigned k) : n_(n), k_(k), done_(k == 0 || k > n) {
    if (!done_) {
        cur_.assign(k, 1);
        cur_.back() = n - k + 1;
    }
}

std::optional<Composition> CompositionStream::next() {
    if (done_) return std::nullopt;
    Composition out(cur_);
    // Advance: bump the rightmost non-final part whose suffix has slack, then
    // push all remaining slack into the final part.
    done_ = true;
    unsigned suffix = cur_.back();
    for (std::size_t i = k_ - 1; i-- > 0;) {
        const unsigned suffix_parts = static_cast<unsigned>(k_ - 1 - i);
        if (suffix > suffix_parts) {
            ++cur_[i];
            unsigned remaining = suffix - 1;
            for (std::size_t j = i + 1; j + 1 < k_; ++j) {
                cur_[j] = 1;
                --remaining;
            }
            cur_.back() = remaining;
            done_ = false;
            break;
        }
        suffix += cur_[i];
    }
    return out;
}

std::vector<Composition> compositions(unsigned n, unsigned k) {
    std::vector<Composition> out;
    CompositionStream s(n, k);
    while (auto c = s.next()) out.push_back(std::move(*c));
    return out;
}

namespace {

struct TailShape {
    double factor_log2;  // log2 of the constant in front
    Mpfr factor;         // same constant, exact or rounded up
    Mpfr exponent;       // s > 1 in sum_{j>J} (2j-1)^{-s}
};

// Inner sums over indices below the outer one are bounded by 5/4 > pi^2/8 for
// parts >= 2. Each part equal to 1 contributes at most 1 + ln(2j-1)/2 <=
// r (2j-1)^{1/(2r)} where r is the number of such parts, so together they cost
// r^r (2j-1)^{1/2}.
TailShape tail_shape(const Composition& alpha) {
    if (!alpha.admissible())
        throw DivergenceError("series " + alpha.to_string() + " diverges: last argument must be at least 2");
    unsigned ones = 0;
    unsigned big = 0;
    for (std::size_t i = 0; i + 1 < alpha.depth(); ++i) (alpha.parts()[i] == 1 ? ones : big) += 1;
    TailShape s{0.0, Mpfr(kRadiusBits), Mpfr(kRadiusBits)};
    mpfr_set_ui(s.factor.get(), 1, MPFR_RNDU);
    Mpfr q(kRadiusBits);
    mpfr_set_ui(q.get(), 5, MPFR_RNDU);
    mpfr_div_ui(q.get(), q.get(), 4, MPFR_RNDU);
    mpfr_pow_ui(q.get(), q.get(), big, MPFR_RNDU);
    mpfr_mul(s.factor.get(), s.factor.get(), q.get(), MPFR_RNDU);
    if (ones > 0) {
        mpfr_ui_pow_ui(q.get(), ones, ones, MPFR_RNDU);
        mpfr_mul(s.factor.get(), s.factor.get(), q.get(), MPFR_RNDU);
    }
    s.factor_log2 = std::log2(mpfr_get_d(s.factor.get(), MPFR_RNDU));
    mpfr_set_ui(s.exponent.get(), alpha.parts().back(), MPFR_RNDN);
    if (ones > 0) mpfr_sub_d(s.exponent.get(), s.exponent.get(), 0.5, MPFR_RNDN);
    return s;
}

// factor * (2J-1)^{1-s} / (2(s-1)), rounded upward.
Mpfr tail_from_shape(const TailShape& s, unsigned long terms) {
    Mpfr base(kRadiusBits);
    mpfr_set_ui(base.get(), 2 * terms - 1, MPFR_RNDN);
    Mpfr e(kRadiusBits);
    mpfr_ui_sub(e.get(), 1, s.exponent.get(), MPFR_RNDN);  // exact: s has few bits
    Mpfr t(kRadiusBits);
    mpfr_pow(t.get(), base.get(), e.get(), MPFR_RNDU);
    mpfr_mul(t.get(), t.get(), s.factor.get(), MPFR_RNDU);
    Mpfr den(kRadiusBits);
    mpfr_sub_ui(den.get(), s.exponent.get(), 1, MPFR_RNDN);
    mpfr_mul_2ui(den.get(), den.get(), 1, MPFR_RNDN);
    mpfr_div(t.get(), t.get(), den.get(), MPFR_RNDU);
    return t;
}

unsigned long terms_for_target(const TailShape& s, unsigned bits, unsigned long floor, bool* capped) {
    const double sm1 = mpfr_get_d(s.exponent.get(), MPFR_RNDN) - 1.0;
    // (2J-1) >= 2^{(bits + log2 factor - log2(2(s-1))) / (s-1)}
    const double log2_base = (bits + s.factor_log2 - std::log2(2.0 * sm1)) / sm1;
    unsigned long j = kDefaultTermCap;
    bool hit_cap = true;
    if (log2_base < std::log2(2.0 * static_cast<double>(kDefaultTermCap) - 1.0)) {
        j = static_cast<unsigned long>(std::ceil((std::exp2(log2_base) + 1.0) / 2.0));
        j = std::max(j, 1UL);
        Mpfr target(kRadiusBits);
        mpfr_set_ui_2exp(target.get(), 1, -static_cast<long>(bits), MPFR_RNDN);
        while (j < kDefaultTermCap && mpfr_greater_p(tail_from_shape(s, j).get(), target.get())) ++j;
        hit_cap = mpfr_greater_p(tail_from_shape(s, j).get(), target.get()) != 0;
    }
    if (capped) *capped = hit_cap;
    return std::max(j, floor);
}

void check_bits(unsigned bits) {
    if (bits < 32) throw DomainError("precision must be at least 32 bits");
}

unsigned long resolve_terms(std::optional<unsigned long> terms, unsigned long automatic, std::size_t depth) {
    const unsigned long j = terms.value_or(automatic);
    if (j > kMaxTerms) throw DomainError("at most " + std::to_string(kMaxTerms) + " terms are supported");
    if (j < depth)
        throw InsufficientTermsError("need at least " + std::to_string(depth) + " terms for depth " +
                                     std::to_string(depth) + ", got " + std::to_string(j));
    return j;
}

// Relative error bound for a nonnegative sum in which every term went through
// at most `ops` roundings at unit roundoff 2^{-prec}: value * 1.01 * ops * 2^{-prec}.
Mpfr relative_rounding(const Mpfr& value, double ops) {
    Mpfr r(kRadiusBits);
    mpfr_abs(r.get(), value.get(), MPFR_RNDU);
    mpfr_mul_d(r.get(), r.get(), 1.01 * ops, MPFR_RNDU);
    mpfr_mul_2si(r.get(), r.get(), -static_cast<long>(value.precision()), MPFR_RNDU);
    return r;
}

SeriesResult make_result(Mpfr center, double ops, Mpfr tail, unsigned long terms, bool capped) {
    Mpfr rad = relative_rounding(center, ops);
    BallReal partial(std::move(center), std::move(rad));
    BallReal full = partial.widened(tail);
    return {std::move(full), std::move(partial), std::move(tail), terms, capped};
}

}  // namespace

Mpfr tail_bound(const Composition& alpha, unsigned long terms) {
    if (terms == 0) throw InsufficientTermsError("tail bound needs at least one term");
    return tail_from_shape(tail_shape(alpha), terms);
}

unsigned long default_terms(const Composition& alpha, unsigned bits, bool* capped) {
    return terms_for_target(tail_shape(alpha), bits, alpha.depth(), capped);
}

SeriesResult t_numeric(const Composition& alpha, bool star, unsigned bits, std::optional<unsigned long> terms) {
    check_bits(bits);
    const TailShape shape = tail_shape(alpha);
    bool capped = false;
    const unsigned long automatic = terms ? 0 : terms_for_target(shape, bits, alpha.depth(), &capped);
    const unsigned long J = resolve_terms(terms, automatic, alpha.depth());
    const auto prec = static_cast<mpfr_prec_t>(bits + kGuardBits);
    const std::size_t k = alpha.depth();

    std::map<unsigned, Mpfr> powers;
    for (unsigned p : alpha.parts()) powers.try_emplace(p, prec);
    std::vector<const Mpfr*> factor(k);
    for (std::size_t i = 0; i < k; ++i) factor[i] = &powers.at(alpha.parts()[i]);

    // acc[i] = sum over index tuples j_1 < ... < j_i <= j (or <= for star).
    std::vector<Mpfr> acc(k + 1, Mpfr(prec));
    mpfr_set_ui(acc[0].get(), 1, MPFR_RNDN);
    Mpfr den(prec);
    for (unsigned long j = 1; j <= J; ++j) {
        const unsigned long d = 2 * j - 1;
        for (auto& [e, x] : powers) {
            mpfr_ui_pow_ui(den.get(), d, e, MPFR_RNDN);
            mpfr_ui_div(x.get(), 1, den.get(), MPFR_RNDN);
        }
        if (star) {
            for (std::size_t i = 1; i <= k; ++i)
                mpfr_fma(acc[i].get(), acc[i - 1].get(), factor[i - 1]->get(), acc[i].get(), MPFR_RNDN);
        } else {
            for (std::size_t i = k; i >= 1; --i)
                mpfr_fma(acc[i].get(), acc[i - 1].get(), factor[i - 1]->get(), acc[i].get(), MPFR_RNDN);
        }
    }
    const double ops = static_cast<double>(k) * (static_cast<double>(J) + 4.0);
    return make_result(std::move(acc[k]), ops, tail_from_shape(shape, J), J, capped);
}

SumTable sum_numeric_table(unsigned m, unsigned nmax, bool star, unsigned bits, std::optional<unsigned long> terms) {
    check_bits(bits);
    if (m < 2) throw DomainError("argument m must be at least 2");
    if (nmax < 1) throw DomainError("need n >= 1");
    if (nmax > 20) throw DomainError("numeric sums are limited to n <= 20");

    std::vector<std::vector<std::vector<Composition>>> comps(nmax + 1);
    unsigned long automatic = nmax;
    bool capped = false;
    for (unsigned n = 1; n <= nmax; ++n) {
        comps[n].resize(n + 1);
        for (unsigned k = 1; k <= n; ++k) {
            comps[n][k] = compositions(n, k);
            if (terms) continue;
            for (const auto& c : comps[n][k]) {
                bool c_capped = false;
                automatic = std::max(automatic, default_terms(c.scaled(m), bits, &c_capped));
                capped = capped || c_capped;
            }
        }
    }
    const unsigned long J = resolve_terms(terms, automatic, nmax);
    const auto prec = static_cast<mpfr_prec_t>(bits + kGuardBits);

    // acc[d][w]: sum over compositions with d parts and weight w of the
    // nested sum restricted to indices <= j.
    std::vector<std::vector<Mpfr>> acc(nmax + 1, std::vector<Mpfr>(nmax + 1, Mpfr(prec)));
    mpfr_set_ui(acc[0][0].get(), 1, MPFR_RNDN);
    std::vector<Mpfr> xs(nmax + 1, Mpfr(prec));
    Mpfr den(prec);

    auto update_level = [&](unsigned d) {
        for (unsigned w = nmax; w >= d; --w) {
            for (unsigned s = 1; s + (d - 1) <= w; ++s) {
                const Mpfr& prev = acc[d - 1][w - s];
                if (mpfr_zero_p(prev.get())) continue;
                mpfr_fma(acc[d][w].get(), prev.get(), xs[s].get(), acc[d][w].get(), MPFR_RNDN);
            }
        }
    };

    for (unsigned long j = 1; j <= J; ++j) {
        const unsigned long dj = 2 * j - 1;
        for (unsigned s = 1; s <= nmax; ++s) {
            mpfr_ui_pow_ui(den.get(), dj, static_cast<unsigned long>(m) * s, MPFR_RNDN);
            mpfr_ui_div(xs[s].get(), 1, den.get(), MPFR_RNDN);
        }
        if (star) {
            for (unsigned d = 1; d <= nmax; ++d) update_level(d);
        } else {
            for (unsigned d = nmax; d >= 1; --d) update_level(d);
        }
    }

    SumTable table;
    table.terms = J;
    table.capped = capped;
    table.entries.resize(nmax + 1);
    const BallReal empty(prec);
    for (unsigned n = 0; n <= nmax; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            if (n == 0 || k == 0) {
                table.entries[n].push_back({empty, empty, Mpfr(kRadiusBits), J, capped});
                continue;
            }
            Mpfr tail(kRadiusBits);
            for (const auto& c : comps[n][k])
                mpfr_add(tail.get(), tail.get(), tail_bound(c.scaled(m), J).get(), MPFR_RNDU);
            const double ops = static_cast<double>(k) * (static_cast<double>(J) * (nmax + 1) + 4.0);
            table.entries[n].push_back(make_result(acc[k][n], ops, std::move(tail), J, capped));
        }
    }
    return table;
}

SeriesResult sum_numeric(unsigned m, unsigned n, unsigned k, bool star, unsigned bits,
                         std::optional<unsigned long> terms) {
    if (k < 1 || k > n)
        throw DomainError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    return sum_numeric_table(m, n, star, bits, terms).at(n, k);
}

}  // namespace mtv::numeric
