#pragma once

#include "mtv/identities.hpp"
#include "mtv/pi_value.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mtv::verify {

using BivariatePi = identities::Bivariate<PiValue>;

enum class Status { Pass, Fail, NumericPass };

std::string to_string(Status s);

using Params = std::vector<std::pair<std::string, long>>;

struct CaseResult {
    Params params;
    std::string check;  ///< which relation or slot the case covers
    Status status;
    std::string detail;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string suite;
    Params grid;
    std::vector<CaseResult> cases;

    bool passed() const;
    /// First failing case; present whenever passed() is false.
    std::optional<CaseResult> counterexample() const;
    /// {"suite":..,"grid":{..},"cases":[{"params":{..},"status":..,"detail":..}],..}
    std::string to_json() const;
};

struct VerifyOptions {
    unsigned bits = 128;
    /// Shared truncation for numeric (odd m) checks. Both sides are evaluated
    /// on the same finite alphabet, where the relations hold exactly.
    unsigned long numeric_terms = 2000;
    /// Numeric pass needs the truncated difference ball narrower than 2^this.
    long width_exp2 = -64;
};

VerifyReport verify_lemma1(unsigned m, unsigned nmax, const VerifyOptions& opts = {});
VerifyReport verify_theorem(unsigned m, unsigned nmax, const VerifyOptions& opts = {});
VerifyReport verify_corollary(unsigned m, unsigned nmax, const VerifyOptions& opts = {});
VerifyReport verify_euler_identity(unsigned nmax);
/// Both sides of the bivariate identity coefficient by coefficient at one n,
/// plus the k-th y-derivatives at (y,z) = (-1,1) against k! T(mn,k).
VerifyReport verify_par(unsigned m, unsigned n, const VerifyOptions& opts = {});
VerifyReport verify_props(unsigned two_m, unsigned nmax);
VerifyReport verify_zhao(unsigned nmax);
/// Weight-4 Euler-number forms against the two-string expansion over oracle strings.
VerifyReport verify_weight4(unsigned nmax);

/// Names accepted by run_suite(), "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") over its default grid, optionally narrowed
/// to a single m (string argument, 2m for "props") and a different nmax.
/// Throws DomainError for an unknown suite.
std::vector<VerifyReport> run_suite(const std::string& name, std::optional<unsigned> m = std::nullopt,
                                    std::optional<unsigned> nmax = std::nullopt, const VerifyOptions& opts = {});

}  // namespace mtv::verify
