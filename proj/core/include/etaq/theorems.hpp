#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/congruence.hpp"
#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// Order multiplier applied to every check's default ranges.
enum class Profile { Fast, Default, Deep };

double profile_scale(Profile profile);
std::string_view to_string(Profile profile);

enum class CheckKind { Claim, InternalCongruence, ExactIdentity, SelfSimilarity };

std::string_view to_string(CheckKind kind);

/// Lazily expanded generating functions shared by all checks of one run.
/// Sources are keyed by id ("R_2_3", "R_4_3", "R_4_9", "R_2_5", "R_3_5",
/// "R_8_3", "PPO"); the cache keeps the longest expansion seen so far and is
/// safe for concurrent use.
class SuiteContext {
public:
    Series source(std::string_view id, long min_prec);
    SeriesProvider provider();

private:
    std::map<std::string, Series, std::less<>> cache_;
    std::mutex mutex_;
};

/// One registered congruence or identity check. `run` is deterministic given
/// the scale; rows marked expected_fail are negative controls that must fail
/// (with a small witness index) for the suite to count as passing.
struct TheoremCheck {
    std::string id;
    std::string description;
    std::string citation;
    CheckKind kind = CheckKind::Claim;
    bool expected_fail = false;
    std::function<CheckReport(SuiteContext&, double scale)> run;
};

class TheoremSuite {
public:
    /// All rows, ordered by id.
    const std::vector<TheoremCheck>& rows() const { return rows_; }
    const TheoremCheck* find(std::string_view id) const;

    /// Run one row; throws UnknownCheck. The report carries id and wall time.
    CheckReport run_check(std::string_view id, SuiteContext& context,
                          double scale = 1.0) const;
    CheckReport run_check(std::string_view id, double scale = 1.0) const;

    /// Run every row in id order against one shared context.
    std::vector<CheckReport> run_all(Profile profile, SuiteContext& context) const;
    std::vector<CheckReport> run_all(Profile profile = Profile::Default) const;

    void add(TheoremCheck row);

    /// The built-in registry of theorem-level checks.
    static const TheoremSuite& standard();

private:
    std::vector<TheoremCheck> rows_;
};

/// Aggregate verdict: every regular row passed and every expected-fail row
/// failed as declared.
bool suite_passed(const TheoremSuite& suite, const std::vector<CheckReport>& reports);

} // namespace etaq
