#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbern/rational.hpp"

namespace qbern {

enum class Suite { bernstein, euler, integrals, stirling };

/// Parses "all", "bernstein", "euler", "integrals" or "stirling"; throws ParseError.
std::set<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);

enum class Verdict { pass, fail };

struct ReportEntry {
    std::string identity_id;
    std::map<std::string, std::string> params;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::fail;
    /// Set for floating-point identities; exact identities compare structurally.
    std::optional<double> tolerance;
    bool relative_tolerance = false;
};

struct ReportSummary {
    long checked = 0;
    long passed = 0;
    long failed = 0;
};

/// Outcome of a verification run.
///
/// `entries` holds the identities as implemented and must all pass.
/// `counterexamples` holds the literal printed forms of identities that
/// are known to be misstated; each such identity is expected to fail on at
/// least one instance.
struct IdentityReport {
    std::vector<ReportEntry> entries;
    std::vector<ReportEntry> counterexamples;

    ReportSummary summary() const;
    ReportSummary counterexample_summary() const;
    /// Printed-form identities for which no instance failed.
    std::vector<std::string> unrefuted_counterexamples() const;
    /// True when every entry passes and every printed form is refuted.
    bool ok() const;

    /// Sorts both sections by (identity_id, params).
    void sort();
    nlohmann::json to_json() const;
};

struct VerifyConfig {
    std::set<Suite> suites{Suite::bernstein, Suite::euler, Suite::integrals, Suite::stirling};
    std::vector<ExactRational> qs;
    long nmax = 12;
    long smax = 3;
    long kmax = 2;
    bool include_printed = false;

    static VerifyConfig defaults();
};

inline constexpr long kMaxVerifyDegree = 16;
inline constexpr long kMaxVerifyFactors = 3;

/// The default rational sample set {1/2, 2/3, 3/5, 5/4, 3}.
std::vector<ExactRational> default_q_samples();

/// Runs every registered identity of the selected suites. Throws UsageError
/// for an empty q list or bounds beyond the documented maxima, DomainError
/// for a pole value of q.
IdentityReport run_verify_suite(const VerifyConfig& config);

}  // namespace qbern
