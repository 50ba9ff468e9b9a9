#include "cli.hpp"

#include "cache.hpp"

#include "mtv/closed_forms.hpp"
#include "mtv/errors.hpp"
#include "mtv/euler.hpp"
#include "mtv/series.hpp"
#include "mtv/symfun.hpp"
#include "mtv/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>

namespace mtv::cli {
namespace {

enum class Format { Plain, Json, Csv };

struct Settings {
    std::string kind;
    std::vector<unsigned> args;
    bool exact = false;
    bool numeric = false;
    unsigned bits = 128;
    std::optional<unsigned long> terms;
    unsigned m = 0;
    unsigned n = 0;
    unsigned k = 0;
    unsigned nmax = 0;
    unsigned max = 0;
    std::string suite;
    std::optional<unsigned> verify_m;
    std::optional<unsigned> verify_nmax;
    std::string format = "plain";
    std::string cache_action;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Plain;
}

void print_exact(const PiValue& v, Format fmt, std::ostream& out) {
    if (fmt == Format::Json) {
        nlohmann::ordered_json j{{"kind", "exact"}, {"rational", v.coef().to_string()}, {"pi_power", v.weight()}};
        out << j.dump() << '\n';
    } else {
        out << v.to_string() << '\n';
    }
}

int center_digits(unsigned bits) { return static_cast<int>(bits * 0.30103) + 1; }

void print_numeric(const numeric::SeriesResult& r, unsigned bits, Format fmt, std::ostream& out,
                   std::ostream& err) {
    if (r.capped)
        err << "warning: term cap " << r.terms << " reached before the tail fell below 2^-" << bits
            << "; the radius is correspondingly wider\n";
    const auto center = r.ball.center_string(center_digits(bits));
    const auto radius = r.ball.radius_string();
    if (fmt == Format::Json) {
        nlohmann::ordered_json j{{"kind", "numeric"}, {"center", center}, {"radius", radius}, {"bits", bits}};
        out << j.dump() << '\n';
    } else {
        out << center << " +/- " << radius << '\n';
    }
}

int cmd_value(const Settings& s, std::ostream& out, std::ostream& err) {
    const bool star = s.kind == "tstar";
    const auto fmt = parse_format(s.format);
    if (std::find(s.args.begin(), s.args.end(), 0u) != s.args.end()) throw DomainError("arguments must be positive");
    numeric::Composition alpha(s.args);
    if (!alpha.admissible()) throw DivergenceError("series diverges: the last argument must be at least 2");

    const bool uniform = std::all_of(s.args.begin(), s.args.end(), [&](unsigned a) { return a == s.args.front(); });
    const bool has_odd = std::any_of(s.args.begin(), s.args.end(), [](unsigned a) { return a % 2 == 1; });
    const bool exact_ok = uniform && !has_odd;
    if (s.exact && !exact_ok) {
        err << "error: no exact evaluation for " << (has_odd ? "odd arguments" : "mixed arguments")
            << "; use --numeric\n";
        return kExitUsage;
    }
    if (!s.numeric && exact_ok) {
        print_exact(closed::string_exact(s.args.front(), static_cast<unsigned>(s.args.size()), star), fmt, out);
        return kExitOk;
    }
    print_numeric(numeric::t_numeric(alpha, star, s.bits, s.terms), s.bits, fmt, out, err);
    return kExitOk;
}

int cmd_sum(const Settings& s, std::ostream& out, std::ostream& err) {
    const bool star = s.kind == "Tstar";
    const auto fmt = parse_format(s.format);
    if (s.m < 1 || s.k < 1 || s.k > s.n) throw DomainError("need m >= 1 and 1 <= k <= n");
    const bool exact_ok = s.m % 2 == 0;
    if (s.exact && !exact_ok) {
        err << "error: no exact evaluation for odd m; use --numeric\n";
        return kExitUsage;
    }
    if (!s.numeric && exact_ok) {
        print_exact(closed::sum_exact(s.m, s.n, s.k, star).value, fmt, out);
        return kExitOk;
    }
    if (s.m == 1) throw DivergenceError("series diverges for m = 1");
    print_numeric(numeric::sum_numeric(s.m, s.n, s.k, star, s.bits, s.terms), s.bits, fmt, out, err);
    return kExitOk;
}

int cmd_euler(const Settings& s, std::ostream& out) {
    const auto table = euler_table(s.max);
    if (parse_format(s.format) == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i <= s.max; ++i) j[std::to_string(2 * i)] = table.e2n(i).get_str();
        out << nlohmann::ordered_json{{"euler", j}}.dump() << '\n';
    } else {
        for (std::size_t i = 0; i <= s.max; ++i) out << "E_" << 2 * i << " = " << table.e2n(i).get_str() << '\n';
    }
    return kExitOk;
}

struct Row {
    unsigned n;
    unsigned k;
    PiValue value;
};

int cmd_table(const Settings& s, std::ostream& out, std::ostream& err) {
    if (s.m % 2 == 1) {
        err << "error: tables are exact and need even m; use `value` or `sum` with --numeric\n";
        return kExitUsage;
    }
    if (s.m == 0) throw DomainError("m must be positive");
    const bool star = s.kind == "tstar" || s.kind == "Tstar";
    const bool strings = s.kind == "t" || s.kind == "tstar";
    std::vector<Row> rows;
    for (unsigned n = 1; n <= s.nmax; ++n) {
        if (strings) {
            rows.push_back({n, n, closed::string_exact(s.m, n, star)});
        } else {
            for (unsigned k = 1; k <= n; ++k) rows.push_back({n, k, closed::sum_exact(s.m, n, k, star).value});
        }
    }
    switch (parse_format(s.format)) {
    case Format::Csv:
        out << "kind,m,n,k,rational,pi_power\n";
        for (const auto& r : rows)
            out << s.kind << ',' << s.m << ',' << r.n << ',' << r.k << ',' << r.value.coef().to_string() << ','
                << r.value.weight() << '\n';
        break;
    case Format::Json: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"kind", s.kind}, {"m", s.m}, {"n", r.n}, {"k", r.k},
                           {"rational", r.value.coef().to_string()}, {"pi_power", r.value.weight()}});
        out << arr.dump() << '\n';
        break;
    }
    case Format::Plain:
        for (const auto& r : rows) {
            if (strings)
                out << s.kind << "({" << s.m << "}^" << r.n << ") = " << r.value.to_string() << '\n';
            else
                out << s.kind << '(' << s.m * r.n << ',' << r.k << ") = " << r.value.to_string() << '\n';
        }
        break;
    }
    return kExitOk;
}

std::string params_text(const verify::Params& p) {
    std::string s;
    for (const auto& [key, value] : p) {
        if (!s.empty()) s += ' ';
        s += key + '=' + std::to_string(value);
    }
    return s;
}

int cmd_verify(const Settings& s, std::ostream& out) {
    verify::VerifyOptions opts;
    opts.bits = s.bits;
    if (s.terms) opts.numeric_terms = *s.terms;
    const auto reports = verify::run_suite(s.suite, s.verify_m, s.verify_nmax, opts);
    const bool json = parse_format(s.format) == Format::Json;
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (json) {
            out << r.to_json() << '\n';
            continue;
        }
        const auto numeric = std::count_if(r.cases.begin(), r.cases.end(),
                                           [](const auto& c) { return c.status == verify::Status::NumericPass; });
        out << r.suite << " [" << params_text(r.grid) << "]: " << (r.passed() ? "pass" : "FAIL") << " ("
            << r.cases.size() << " cases";
        if (numeric > 0) out << ", " << numeric << " numeric";
        out << ")\n";
        if (auto ce = r.counterexample()) {
            out << "  counterexample " << params_text(ce->params) << " " << ce->check << ": " << ce->detail << '\n'
                << "    lhs = " << ce->lhs << '\n'
                << "    rhs = " << ce->rhs << '\n';
        }
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_cache(const Settings& s, const CacheFile& loaded, std::ostream& out) {
    const auto path = default_cache_path();
    if (s.cache_action == "path") {
        out << path.string() << '\n';
    } else if (s.cache_action == "clear") {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        out << "removed " << path.string() << '\n';
    } else {
        out << "path: " << path.string() << '\n'
            << "euler: " << loaded.euler.size() << " entries\n"
            << "power_sums: " << loaded.power_sums.size() << " entries\n";
    }
    return kExitOk;
}

void add_format(CLI::App* sub, Settings& s, std::vector<std::string> allowed) {
    sub->add_option("--format", s.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_numeric_flags(CLI::App* sub, Settings& s) {
    auto* exact = sub->add_flag("--exact", s.exact, "require an exact result");
    auto* numeric = sub->add_flag("--numeric", s.numeric, "evaluate as a certified ball");
    exact->excludes(numeric);
    sub->add_option("--prec", s.bits, "working precision in bits")->check(CLI::Range(32u, 1u << 16));
    sub->add_option("--terms", s.terms, "truncation index J")->check(CLI::Range(1ul, numeric::kMaxTerms));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Multiple t-values: exact closed forms, oracles, certified numerics"};
    app.name("mtv");
    app.require_subcommand(1);

    auto* value = app.add_subcommand("value", "t(a1,...,ak) or t*(a1,...,ak)");
    value->add_option("kind", s.kind, "t or tstar")->required()->check(CLI::IsMember({"t", "tstar"}));
    value->add_option("--args", s.args, "comma-separated arguments")->required()->delimiter(',');
    add_numeric_flags(value, s);
    add_format(value, s, {"plain", "json"});

    auto* sum = app.add_subcommand("sum", "T(mn,k) or T*(mn,k)");
    sum->add_option("kind", s.kind, "T or Tstar")->required()->check(CLI::IsMember({"T", "Tstar"}));
    sum->add_option("--m", s.m)->required();
    sum->add_option("--n", s.n)->required();
    sum->add_option("--k", s.k)->required();
    add_numeric_flags(sum, s);
    add_format(sum, s, {"plain", "json"});

    auto* euler = app.add_subcommand("euler", "Euler numbers E_0, E_2, ..., E_2N");
    euler->add_option("--max", s.max, "N")->required()->check(CLI::Range(0u, 2000u));
    add_format(euler, s, {"plain", "json"});

    auto* table = app.add_subcommand("table", "exact table of strings or sums");
    table->add_option("--m", s.m)->required();
    table->add_option("--nmax", s.nmax)->required()->check(CLI::Range(1u, 40u));
    table->add_option("--kind", s.kind)->required()->check(CLI::IsMember({"t", "tstar", "T", "Tstar"}));
    add_format(table, s, {"plain", "json", "csv"});

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suites = verify::suite_names();
    suites.emplace_back("all");
    ver->add_option("--suite", s.suite)->required()->check(CLI::IsMember(suites));
    ver->add_option("--m", s.verify_m, "restrict to one m (2m for props)");
    ver->add_option("--nmax", s.verify_nmax);
    ver->add_option("--prec", s.bits, "precision for numeric checks")->check(CLI::Range(64u, 1u << 16));
    ver->add_option("--terms", s.terms, "shared truncation for numeric checks")
        ->check(CLI::Range(1ul, numeric::kMaxTerms));
    add_format(ver, s, {"plain", "json"});

    auto* cache = app.add_subcommand("cache", "inspect or clear the on-disk cache");
    cache->add_option("action", s.cache_action)->required()->check(CLI::IsMember({"show", "clear", "path"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const auto path = default_cache_path();
    const auto loaded = load_cache(path);
    if (cache->parsed()) return cmd_cache(s, loaded, out);

    int code = kExitOk;
    try {
        if (value->parsed()) code = cmd_value(s, out, err);
        else if (sum->parsed()) code = cmd_sum(s, out, err);
        else if (euler->parsed()) code = cmd_euler(s, out);
        else if (table->parsed()) code = cmd_table(s, out, err);
        else code = cmd_verify(s, out);
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedExactError& e) {
        err << "error: " << e.what() << "; use --numeric\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto current = snapshot_cache();
    if (current != loaded) save_cache_atomic(path, current);
    return code;
}

}  // namespace mtv::cli
