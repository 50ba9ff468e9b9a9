// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include "mtv/ball.hpp"
#include "mtv/closed_forms.hpp"
#include "mtv/euler.hpp"
#include "mtv/series.hpp"
#include "mtv/symfun.hpp"
#include "mtv/verify.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;
using mtv::BallReal;
using mtv::PiValue;
using mtv::Rational;
namespace closed = mtv::closed;
namespace numeric = mtv::numeric;
namespace oracle = mtv::oracle;
namespace verify = mtv::verify;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

constexpr unsigned kBits = 128;

bool all_pass(const verify::VerifyReport& r, Outcome& o, bool numeric_expected = false) {
    for (const auto& c : r.cases) {
        const bool good = numeric_expected ? c.status == verify::Status::NumericPass : c.status == verify::Status::Pass;
        if (!good) {
            std::ostringstream os;
            os << r.suite << " case";
            for (const auto& [k, v] : c.params) os << ' ' << k << '=' << v;
            os << ' ' << c.check << ": " << verify::to_string(c.status) << " (" << c.detail << ")";
            o.fail(os.str());
            return false;
        }
    }
    return true;
}

Outcome euler_numbers() {
    Outcome o;
    const auto t = mtv::euler_numbers(20);
    if (t.e2n(1) != -1 || t.e2n(2) != 5 || t.e2n(3) != -61) o.fail("E_2, E_4, E_6 differ from -1, 5, -61");
    for (std::size_t n = 0; n <= 20; ++n) {
        Rational c(0);
        for (std::size_t i = 0; i <= n; ++i)
            c += Rational(t.e2n(i), mtv::factorial(2 * i)) * Rational(mtv::BigInt(1), mtv::factorial(2 * (n - i)));
        if (c != Rational(n == 0 ? 1 : 0)) o.fail("sec*cos coefficient of x^" + std::to_string(2 * n) + " is " + c.to_string());
    }
    o.detail = o.ok ? "E_0..E_40, sec*cos = 1 through x^40" : o.detail;
    return o;
}

Outcome two_strings() {
    Outcome o;
    for (unsigned n = 0; n <= 12; ++n) {
        if (closed::t2_string(n) != oracle::t_string_oracle(2, n)) o.fail("t({2}^" + std::to_string(n) + ")");
        if (closed::tstar2_string(n) != oracle::tstar_string_oracle(2, n)) o.fail("t*({2}^" + std::to_string(n) + ")");
    }
    if (o.ok) o.detail = "n = 0..12, exact equality";
    return o;
}

Outcome even_strings() {
    Outcome o;
    for (unsigned two_m : {4u, 6u, 8u, 10u, 12u}) all_pass(verify::verify_props(two_m, 3), o);
    if (closed::t_string_even_arg(6, 1) != PiValue(Rational(1, 960), 6)) o.fail("t(6) != pi^6/960");
    if (closed::t_string_even_arg(8, 1) != PiValue(Rational(17, 161280), 8)) o.fail("t(8) != 17 pi^8/161280");
    if (closed::tstar_string_even_arg(4, 1) != PiValue(Rational(1, 96), 4)) o.fail("t*(4) != pi^4/96");
    if (o.ok) o.detail = "2m in {4,...,12}, n <= 3, cyclotomic sums rational; t(6), t(8), t*(4) specials";
    return o;
}

Outcome relations() {
    Outcome o;
    std::size_t exact = 0, numeric_cases = 0;
    for (unsigned m : {2u, 4u}) {
        for (const auto& r : {verify::verify_lemma1(m, 8), verify::verify_theorem(m, 8), verify::verify_corollary(m, 8)}) {
            all_pass(r, o);
            exact += r.cases.size();
        }
    }
    for (const auto& r : {verify::verify_lemma1(3, 4), verify::verify_theorem(3, 4), verify::verify_corollary(3, 4)}) {
        all_pass(r, o, true);
        numeric_cases += r.cases.size();
    }
    if (o.ok)
        o.detail = std::to_string(exact) + " exact cases (m = 2, 4; n <= 8), " + std::to_string(numeric_cases) +
                   " numeric cases (m = 3; n <= 4; 0 in ball, width < 2^-64)";
    return o;
}

Outcome euler_identity() {
    Outcome o;
    const auto r = verify::verify_euler_identity(10);
    all_pass(r, o);
    if (o.ok) o.detail = std::to_string(r.cases.size()) + " integer cases, k <= n <= 10";
    return o;
}

Outcome bivariate() {
    Outcome o;
    std::size_t cases = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        const auto r = verify::verify_par(2, n);
        all_pass(r, o);
        cases += r.cases.size();
    }
    if (o.ok) o.detail = std::to_string(cases) + " coefficient and derivative checks, m = 2, n <= 6";
    return o;
}

Outcome two_forms() {
    Outcome o;
    all_pass(verify::verify_zhao(10), o);
    all_pass(verify::verify_weight4(3), o);
    if (o.ok) o.detail = "T(2n,k) forms agree for k <= n <= 10; T(4n,k), T*(4n,k) match for n <= 3";
    return o;
}

Outcome containment() {
    Outcome o;
    std::size_t checked = 0;
    const auto check = [&](const BallReal& ball, const PiValue& exact, const std::string& label) {
        ++checked;
        if (!ball.contains(BallReal::from_pi_value(exact, kBits + 64))) o.fail(label + " ball misses " + exact.to_string());
    };
    struct StringFamily {
        unsigned arg;
        unsigned nmax;
    };
    for (const auto& [arg, nmax] : {StringFamily{2, 8}, {4, 4}, {6, 2}, {8, 2}, {10, 1}, {12, 1}}) {
        for (unsigned n = 1; n <= nmax; ++n) {
            const numeric::Composition alpha(std::vector<unsigned>(n, arg));
            for (bool star : {false, true})
                check(numeric::t_numeric(alpha, star, kBits).ball, closed::string_exact(arg, n, star),
                      (star ? "t*" : "t") + alpha.to_string());
        }
    }
    for (const auto& [m, nmax] : {std::pair{2u, 8u}, {4u, 4u}}) {
        for (bool star : {false, true}) {
            const auto table = numeric::sum_numeric_table(m, nmax, star, kBits);
            for (unsigned n = 1; n <= nmax; ++n)
                for (unsigned k = 1; k <= n; ++k)
                    check(table.at(n, k).ball, closed::sum_exact(m, n, k, star).value,
                          std::string(star ? "T*" : "T") + "(" + std::to_string(m * n) + "," + std::to_string(k) + ")");
        }
    }
    const auto t2 = numeric::t_numeric(numeric::Composition({2}), false, kBits).ball;
    const auto t22 = numeric::t_numeric(numeric::Composition({2, 2}), false, kBits).ball;
    check(t2, PiValue(Rational(1, 8), 2), "t(2)");
    check(t22, PiValue(Rational(1, 384), 4), "t(2,2)");
    if (o.ok)
        o.detail = std::to_string(checked) + " values; t(2) = " + t2.center_string(20) + " +/- " + t2.radius_string() +
                   ", t(2,2) = " + t22.center_string(20) + " +/- " + t22.radius_string();
    return o;
}

std::string run_mtv(const std::string& args, const fs::path& cache, int& code) {
    const std::string cmd = "MTV_CACHE_PATH='" + cache.string() + "' '" MTV_EXE "' " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome cli_round_trip() {
    Outcome o;
    const auto dir = fs::temp_directory_path() / ("mtv-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto cache = dir / "cache.json";
    const std::vector<std::string> commands{
        "value t --args 2,2 --exact",
        "value tstar --args 8,8 --format json",
        "sum Tstar --m 4 --n 3 --k 2",
        "euler --max 20",
        "table --m 6 --nmax 3 --kind tstar --format csv",
        "verify --suite props --format json",
    };
    std::vector<std::string> cold, warm, after_delete;
    int code = 0;
    const auto first = run_mtv(commands.front(), cache, code);
    if (first != "1/384 * pi^4\n" || code != 0) o.fail("value t --args 2,2 --exact printed '" + first + "'");
    for (const auto& c : commands) {
        cold.push_back(run_mtv(c, cache, code));
        if (code != 0) o.fail("'" + c + "' exited " + std::to_string(code));
    }
    if (!fs::exists(cache)) o.fail("no cache file written");
    for (const auto& c : commands) warm.push_back(run_mtv(c, cache, code));
    fs::remove(cache);
    for (const auto& c : commands) after_delete.push_back(run_mtv(c, cache, code));
    if (cold != warm || cold != after_delete) o.fail("output bytes changed after deleting the cache");
    fs::remove_all(dir);
    if (o.ok) o.detail = "prints 1/384 * pi^4; " + std::to_string(commands.size()) + " commands byte-identical with and without cache";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"euler-numbers", euler_numbers},   {"two-strings-vs-oracle", two_strings},
        {"even-strings-vs-oracle", even_strings}, {"lemma-theorem-corollary", relations},
        {"euler-identity", euler_identity}, {"bivariate-identity", bivariate},
        {"two-sum-forms", two_forms},       {"numeric-containment", containment},
        {"cli-round-trip", cli_round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.ok) ++failed;
        std::cout << "criterion " << i + 1 << " " << criteria[i].first << ": " << (o.ok ? "PASS" : "FAIL") << " - "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
