#include "mtv/verify.hpp"

#include "mtv/ball.hpp"
#include "mtv/closed_forms.hpp"
#include "mtv/errors.hpp"
#include "mtv/euler.hpp"
#include "mtv/series.hpp"
#include "mtv/symfun.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace mtv::verify {

using identities::Bivariate;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::NumericPass: return "numeric-pass";
    }
    return "fail";
}

bool VerifyReport::passed() const {
    return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == Status::Fail; });
}

std::optional<CaseResult> VerifyReport::counterexample() const {
    for (const auto& c : cases)
        if (c.status == Status::Fail) return c;
    return std::nullopt;
}

namespace {

nlohmann::ordered_json params_json(const Params& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

}  // namespace

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["grid"] = params_json(grid);
    j["status"] = passed() ? "pass" : "fail";
    auto& arr = j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json jc;
        auto params = params_json(c.params);
        params["check"] = c.check;
        jc["params"] = std::move(params);
        jc["status"] = to_string(c.status);
        jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    if (auto ce = counterexample()) {
        auto params = params_json(ce->params);
        params["check"] = ce->check;
        j["counterexample"] = {{"params", std::move(params)}, {"lhs", ce->lhs}, {"rhs", ce->rhs}};
    }
    return j.dump();
}

namespace {

// A numeric value on the truncated alphabet together with its enclosure of
// the infinite series.
struct NumVal {
    BallReal partial;
    BallReal full;

    explicit NumVal(mpfr_prec_t prec) : partial(prec), full(prec) {}
    NumVal(BallReal p, BallReal f) : partial(std::move(p)), full(std::move(f)) {}
    explicit NumVal(const numeric::SeriesResult& r) : partial(r.partial), full(r.ball) {}

    friend NumVal operator+(const NumVal& a, const NumVal& b) { return {a.partial + b.partial, a.full + b.full}; }
    friend NumVal operator-(const NumVal& a, const NumVal& b) { return {a.partial - b.partial, a.full - b.full}; }
    friend NumVal operator*(const NumVal& a, const NumVal& b) { return {a.partial * b.partial, a.full * b.full}; }
    friend NumVal operator*(const NumVal& a, const Rational& s) { return {a.partial * s, a.full * s}; }
};

CaseResult compare(Params params, std::string check, const PiValue& lhs, const PiValue& rhs, const VerifyOptions&) {
    const bool ok = lhs == rhs;
    return {std::move(params), std::move(check), ok ? Status::Pass : Status::Fail,
            ok ? lhs.to_string() : "lhs " + lhs.to_string() + " != rhs " + rhs.to_string(), lhs.to_string(),
            rhs.to_string()};
}

CaseResult compare(Params params, std::string check, const NumVal& lhs, const NumVal& rhs, const VerifyOptions& opts) {
    const BallReal dp = lhs.partial - rhs.partial;
    const BallReal df = lhs.full - rhs.full;
    const bool narrow = dp.width_below_pow2(opts.width_exp2);
    const bool ok = dp.contains_zero() && narrow && df.contains_zero();
    std::string detail = "truncated difference " + dp.center_string(6) + " +/- " + dp.radius_string() +
                         ", series difference radius " + df.radius_string();
    if (!narrow) detail += " (truncated ball too wide)";
    const int digits = static_cast<int>(opts.bits * 0.30103);
    return {std::move(params), std::move(check), ok ? Status::NumericPass : Status::Fail, std::move(detail),
            lhs.partial.center_string(digits), rhs.partial.center_string(digits)};
}

// Values needed by the sum relations for one argument m, from two
// independent routes: T/T* from composition sums, strings from evaluations of
// t({m}^n) and t*({m}^n).
template <class V>
struct RelationData {
    std::vector<std::vector<V>> sums;       // T(mn,k) over compositions
    std::vector<std::vector<V>> sums_star;  // T*(mn,k) over compositions
    std::vector<std::vector<V>> sums_alt;   // T(mn,k) from a route other than `sums`
    std::vector<V> t;
    std::vector<V> ts;
};

RelationData<PiValue> exact_data(unsigned m, unsigned nmax) {
    RelationData<PiValue> d;
    d.sums = oracle::sum_oracle_table(m, nmax, false);
    d.sums_star = oracle::sum_oracle_table(m, nmax, true);
    d.sums_alt.resize(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
        d.t.push_back(closed::string_exact(m, n, false));
        d.ts.push_back(closed::string_exact(m, n, true));
        d.sums_alt[n].push_back(PiValue::zero(m * n));
        for (unsigned k = 1; k <= n; ++k) d.sums_alt[n].push_back(closed::sum_exact(m, n, k, false).value);
    }
    return d;
}

RelationData<NumVal> numeric_data(unsigned m, unsigned nmax, const VerifyOptions& opts) {
    RelationData<NumVal> d;
    const auto J = opts.numeric_terms;
    const auto sums = numeric::sum_numeric_table(m, nmax, false, opts.bits, J);
    const auto stars = numeric::sum_numeric_table(m, nmax, true, opts.bits, J);
    const auto prec = static_cast<mpfr_prec_t>(opts.bits + numeric::kGuardBits);
    const NumVal one(BallReal::from_rational(Rational(1), prec), BallReal::from_rational(Rational(1), prec));
    d.sums.resize(nmax + 1);
    d.sums_star.resize(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            d.sums[n].emplace_back(sums.at(n, k));
            d.sums_star[n].emplace_back(stars.at(n, k));
        }
        if (n == 0) {
            d.t.push_back(one);
            d.ts.push_back(one);
            continue;
        }
        const numeric::Composition c(std::vector<unsigned>(n, m));
        d.t.emplace_back(numeric::t_numeric(c, false, opts.bits, J));
        d.ts.emplace_back(numeric::t_numeric(c, true, opts.bits, J));
    }
    // The per-string route is the independent one for odd m.
    d.sums_alt = d.sums;
    return d;
}

PiValue zero_of(const RelationData<PiValue>&, unsigned m, unsigned n, const VerifyOptions&) {
    return PiValue::zero(m * n);
}

NumVal zero_of(const RelationData<NumVal>&, unsigned, unsigned, const VerifyOptions& opts) {
    return NumVal(static_cast<mpfr_prec_t>(opts.bits + numeric::kGuardBits));
}

Params mnk(unsigned m, unsigned n, unsigned k) {
    return {{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}, {"k", static_cast<long>(k)}};
}

template <class V>
void lemma_cases(VerifyReport& rep, const RelationData<V>& d, unsigned m, unsigned nmax, const VerifyOptions& opts) {
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= n; ++k)
            rep.cases.push_back(compare(mnk(m, n, k), "Tstar = sum_r C(n-r,k-r) T", d.sums_star[n][k],
                                        identities::lemma_Tstar(d.sums_alt[n], n, k, zero_of(d, m, n, opts)), opts));
}

template <class V>
void theorem_cases(VerifyReport& rep, const RelationData<V>& d, unsigned m, unsigned nmax, const VerifyOptions& opts) {
    for (unsigned n = 1; n <= nmax; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const V zero = zero_of(d, m, n, opts);
            rep.cases.push_back(compare(mnk(m, n, k), "T", d.sums[n][k],
                                        identities::theorem_T(d.t, d.ts, n, k, zero), opts));
            rep.cases.push_back(compare(mnk(m, n, k), "Tstar", d.sums_star[n][k],
                                        identities::theorem_Tstar(d.t, d.ts, n, k, zero), opts));
        }
    }
}

template <class V>
void corollary_cases(VerifyReport& rep, const RelationData<V>& d, unsigned m, unsigned nmax,
                     const VerifyOptions& opts) {
    for (unsigned n = 1; n <= nmax; ++n)
        rep.cases.push_back(compare({{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}}, "tstar = sum_r T",
                                    d.ts[n], identities::corollary_sum(d.sums[n], n, zero_of(d, m, n, opts)), opts));
}

template <class V>
void par_cases(VerifyReport& rep, const RelationData<V>& d, unsigned m, unsigned n, const VerifyOptions& opts) {
    const V zero = zero_of(d, m, n, opts);
    const Bivariate<V> lhs = identities::par_sums_side(d.sums[n], n, zero);
    const Bivariate<V> rhs = identities::par_strings_side(d.t, d.ts, n, zero);
    for (unsigned p = 0; p <= n; ++p) {
        for (unsigned q = 0; p + q <= n; ++q) {
            Params params{{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)},
                          {"p", static_cast<long>(p)}, {"q", static_cast<long>(q)}};
            rep.cases.push_back(compare(std::move(params), "coefficient y^p z^q", lhs.coeff[p][q], rhs.coeff[p][q], opts));
        }
    }
    // k-th y-derivative at y=-1, z=1 collapses the sums side to k! T(mn,k).
    for (unsigned k = 1; k <= n; ++k) {
        const V spec = rhs.derive_y_at(k, -1, 1, zero);
        const V expected = d.sums_alt[n][k] * Rational(factorial(k));
        rep.cases.push_back(compare(mnk(m, n, k), "d^k/dy^k at (-1,1) = k! T", spec, expected, opts));
    }
}

void check_m(unsigned m) {
    if (m < 2) throw DomainError("argument m must be at least 2");
}

Params grid(unsigned m, unsigned nmax, const VerifyOptions& opts) {
    Params g{{"m", static_cast<long>(m)}, {"nmax", static_cast<long>(nmax)}};
    if (m % 2 == 1) {
        g.emplace_back("bits", static_cast<long>(opts.bits));
        g.emplace_back("terms", static_cast<long>(opts.numeric_terms));
    }
    return g;
}

template <class Fn>
VerifyReport run_relation(const char* suite, unsigned m, unsigned nmax, const VerifyOptions& opts, Fn&& fn) {
    check_m(m);
    VerifyReport rep{suite, grid(m, nmax, opts), {}};
    if (nmax == 0) return rep;
    if (m % 2 == 0)
        fn(rep, exact_data(m, nmax));
    else
        fn(rep, numeric_data(m, nmax, opts));
    return rep;
}

}  // namespace

VerifyReport verify_lemma1(unsigned m, unsigned nmax, const VerifyOptions& opts) {
    return run_relation("lemma1", m, nmax, opts, [&](VerifyReport& rep, const auto& d) { lemma_cases(rep, d, m, nmax, opts); });
}

VerifyReport verify_theorem(unsigned m, unsigned nmax, const VerifyOptions& opts) {
    return run_relation("theorem", m, nmax, opts,
                        [&](VerifyReport& rep, const auto& d) { theorem_cases(rep, d, m, nmax, opts); });
}

VerifyReport verify_corollary(unsigned m, unsigned nmax, const VerifyOptions& opts) {
    return run_relation("corollary", m, nmax, opts,
                        [&](VerifyReport& rep, const auto& d) { corollary_cases(rep, d, m, nmax, opts); });
}

VerifyReport verify_par(unsigned m, unsigned n, const VerifyOptions& opts) {
    VerifyReport rep = run_relation("par", m, n, opts, [&](VerifyReport& r, const auto& d) { par_cases(r, d, m, n, opts); });
    rep.grid = {{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}};
    return rep;
}

VerifyReport verify_euler_identity(unsigned nmax) {
    VerifyReport rep{"euler-identity", {{"nmax", static_cast<long>(nmax)}}, {}};
    const EulerTable e = euler_table(nmax);
    for (unsigned n = 1; n <= nmax; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            BigInt lhs = 0;
            for (unsigned r = 1; r <= k; ++r) {
                BigInt inner = 0;
                for (unsigned p = r; p <= n; ++p) inner += binomial(2 * n, 2 * p) * binomial(p, r) * e.e2n(n - p);
                BigInt term = binomial(n - r, k - r) * inner;
                if (r % 2 == 1)
                    lhs -= term;
                else
                    lhs += term;
            }
            BigInt rhs = 0;
            for (unsigned q = k; q <= n; ++q) rhs += binomial(2 * n, 2 * q) * binomial(q, k) * e.e2n(q);
            const bool ok = lhs == rhs;
            rep.cases.push_back({{{"n", static_cast<long>(n)}, {"k", static_cast<long>(k)}},
                                 "Euler-number identity",
                                 ok ? Status::Pass : Status::Fail,
                                 ok ? lhs.get_str() : lhs.get_str() + " != " + rhs.get_str(),
                                 lhs.get_str(),
                                 rhs.get_str()});
        }
    }
    return rep;
}

VerifyReport verify_props(unsigned two_m, unsigned nmax) {
    if (two_m < 4 || two_m % 2 != 0) throw DomainError("props suite needs an even argument 2m >= 4");
    VerifyReport rep{"props", {{"two_m", static_cast<long>(two_m)}, {"nmax", static_cast<long>(nmax)}}, {}};
    const unsigned m = two_m / 2;
    const VerifyOptions opts;
    for (unsigned n = 1; n <= nmax; ++n) {
        const Params p{{"two_m", static_cast<long>(two_m)}, {"n", static_cast<long>(n)}};
        const PiValue t = oracle::t_string_oracle(two_m, n);
        const PiValue ts = oracle::tstar_string_oracle(two_m, n);
        auto guarded = [&](const std::string& check, auto&& eval, const PiValue& expected) {
            try {
                rep.cases.push_back(compare(p, check, eval(), expected, opts));
            } catch (const ConsistencyError& e) {
                rep.cases.push_back({p, check, Status::Fail, e.what(), "not rational", expected.to_string()});
            }
        };
        guarded(m % 2 == 1 ? "t subset form" : "t even-parity sign form",
                [&] { return closed::t_string_even_arg(two_m, n); }, t);
        guarded("t full sign-vector form", [&] { return closed::t_string_sign_sum(two_m, n); }, t);
        guarded("tstar secant product", [&] { return closed::tstar_string_even_arg(two_m, n); }, ts);

        // Cyclotomic intermediates must reduce to rationals with no imaginary part.
        const auto ev = m % 2 == 1 ? closed::odd_subset_sum(m, n) : closed::sign_vector_sum(m, n, false);
        const auto evs = closed::secant_product_coefficient(m, n);
        const bool ok = ev.imaginary_zero && ev.rational && evs.imaginary_zero && evs.rational;
        rep.cases.push_back({p, "cyclotomic sums real and rational", ok ? Status::Pass : Status::Fail,
                             ok ? ev.rational->to_string() + ", " + evs.rational->to_string() : ev.sum.to_string(),
                             ev.sum.to_string(), evs.sum.to_string()});
    }
    return rep;
}

VerifyReport verify_zhao(unsigned nmax) {
    VerifyReport rep{"zhao", {{"nmax", static_cast<long>(nmax)}}, {}};
    const VerifyOptions opts;
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= n; ++k)
            rep.cases.push_back(compare(mnk(2, n, k), "two-string form = Zhao form",
                                        closed::sum_even(n, k, false, closed::SumVariant::Theorem).value,
                                        closed::sum_even(n, k, false, closed::SumVariant::Zhao).value, opts));
    return rep;
}

VerifyReport verify_weight4(unsigned nmax) {
    VerifyReport rep{"weight4", {{"nmax", static_cast<long>(nmax)}}, {}};
    const VerifyOptions opts;
    const auto t = oracle::string_oracle_table(4, nmax, false);
    const auto ts = oracle::string_oracle_table(4, nmax, true);
    for (unsigned n = 1; n <= nmax; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const PiValue zero = PiValue::zero(4 * n);
            rep.cases.push_back(compare(mnk(4, n, k), "T", closed::sum_weight4(n, k, false).value,
                                        identities::theorem_T(t, ts, n, k, zero), opts));
            rep.cases.push_back(compare(mnk(4, n, k), "Tstar", closed::sum_weight4(n, k, true).value,
                                        identities::theorem_Tstar(t, ts, n, k, zero), opts));
        }
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma1", "theorem", "corollary", "euler-identity",
                                                "par",    "props",   "zhao",      "weight4"};
    return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, std::optional<unsigned> m, std::optional<unsigned> nmax,
                                    const VerifyOptions& opts) {
    std::vector<VerifyReport> out;
    if (name == "all") {
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, m, nmax, opts);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
    }
    // Default grids: even m exactly, odd m = 3 numerically.
    auto relation = [&](auto fn, unsigned even_nmax, unsigned odd_nmax) {
        const std::vector<unsigned> ms = m ? std::vector<unsigned>{*m} : std::vector<unsigned>{2, 4, 3};
        for (unsigned mm : ms) out.push_back(fn(mm, nmax.value_or(mm % 2 == 0 ? even_nmax : odd_nmax), opts));
    };
    if (name == "lemma1") {
        relation(verify_lemma1, 8, 4);
    } else if (name == "theorem") {
        relation(verify_theorem, 8, 4);
    } else if (name == "corollary") {
        relation(verify_corollary, 8, 4);
    } else if (name == "par") {
        const std::vector<unsigned> ms = m ? std::vector<unsigned>{*m} : std::vector<unsigned>{2, 4, 3};
        for (unsigned mm : ms) {
            const unsigned top = nmax.value_or(mm == 2 ? 6 : (mm % 2 == 0 ? 4 : 3));
            for (unsigned n = 1; n <= top; ++n) out.push_back(verify_par(mm, n, opts));
        }
    } else if (name == "euler-identity") {
        out.push_back(verify_euler_identity(nmax.value_or(10)));
    } else if (name == "props") {
        const std::vector<unsigned> args = m ? std::vector<unsigned>{*m} : std::vector<unsigned>{4, 6, 8, 10, 12};
        for (unsigned a : args) out.push_back(verify_props(a, nmax.value_or(3)));
    } else if (name == "zhao") {
        out.push_back(verify_zhao(nmax.value_or(10)));
    } else if (name == "weight4") {
        out.push_back(verify_weight4(nmax.value_or(3)));
    } else {
        throw DomainError("unknown suite '" + name + "'");
    }
    return out;
}

}  // namespace mtv::verify
