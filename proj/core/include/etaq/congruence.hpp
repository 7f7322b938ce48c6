#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// Index exclusions a congruence claim may carry. Closed enumeration so that
/// claims serialize cleanly into reports.
enum class ExceptionRule { None, OddSquare, Square };

std::string_view to_string(ExceptionRule rule);

/// "Coefficients of <source> along t*n + r vanish mod m for n >= start,
/// except at indices n matching the exception rule."
struct CongruenceClaim {
    std::string source; // generating-function id resolved by a SeriesProvider
    long step = 1;      // t >= 1
    long residue = 0;   // 0 <= r < t
    Int modulus = 2;    // m >= 2
    long start = 0;     // first progression index n checked (0 or 1)
    ExceptionRule exception = ExceptionRule::None;
};

/// Resolves a generating-function id to its series with at least the given
/// precision. Implementations may serve cached expansions.
using SeriesProvider = std::function<Series(std::string_view id, long min_prec)>;

/// Check coefficient(t*n + r) == 0 (mod m) for start <= n < term_count,
/// skipping excepted n. A failing witness reports the absolute coefficient
/// index t*n + r and the offending canonical residue. Throws
/// InsufficientPrecision if the provider cannot supply t*(term_count-1)+r+1
/// coefficients.
CheckReport check_claim(const CongruenceClaim& claim, long term_count,
                        const SeriesProvider& provider);

/// Same, against an already-expanded series.
CheckReport check_claim_against(const CongruenceClaim& claim, long term_count,
                                const Series& source);

/// Verifies both halves of the self-similarity vanishing argument for G:
/// (i) G(q) == q^s G(q^t) (mod k) to order N, and (ii) G == 0 (mod k) to
/// order N. Both must hold; at finite order the pair is a consistency check
/// of the mechanism, not a proof of the implication.
CheckReport verify_vanishing_via_self_similarity(const Series& g, long s, long t,
                                                 const Int& k, long N);

/// Residues r in [1, k-1] with no solution to m^2 == r (mod k), by scanning
/// all squares mod k.
std::vector<long> quadratic_nonresidues(long k);

/// Exact floor square root of a nonnegative integer.
Int isqrt(const Int& n);

bool is_square(const Int& n);
bool is_square(long n);

/// n == m^2 for odd m.
bool is_odd_square(const Int& n);
bool is_odd_square(long n);

/// Confirms m(m+1)/2 mod 3 lies in {0, 1} for all 0 <= m <= m_max, i.e. no
/// triangular number is congruent to 2 mod 3.
CheckReport triangular_residue_check(long m_max);

} // namespace etaq
