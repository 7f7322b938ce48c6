#pragma once

#include <string>

#include "etaq/report.hpp"

namespace etaq {

/// Which part sizes an overpartition may use.
struct PartsPredicate {
    enum class Kind { All, Odd, NotDivisible };

    Kind kind = Kind::All;
    long ell = 0, mu = 0; // NotDivisible: parts divisible by ell or mu are banned

    static PartsPredicate all() { return {}; }
    static PartsPredicate odd() { return {Kind::Odd, 0, 0}; }
    static PartsPredicate not_divisible(long ell, long mu);

    bool allows(long part) const;
    std::string to_string() const;
};

struct OracleConfig {
    long max_n = 40; // largest n enumerated exhaustively
};

/// Number of overpartitions of n with allowed parts only: multisets of parts
/// weighted by 2^(distinct part sizes), via recursion over the largest
/// allowed part. Shares nothing with the series engine. Throws TooLarge for
/// n beyond config.max_n.
Int count_overpartitions(long n, const PartsPredicate& parts, const OracleConfig& config = {});

/// Same statistic by brute-force enumeration of every overpartition, walking
/// (largest part, overline choice) one object at a time. Exponential; meant
/// for cross-checking the weighted count at small n.
Int count_overpartitions_enumerated(long n, const PartsPredicate& parts,
                                    const OracleConfig& config = {});

/// Overpartitions of n with no part divisible by ell or mu (coprime, > 1).
Int count_lmu_regular(long ell, long mu, long n, const OracleConfig& config = {});

/// Ordered pairs of overpartitions into odd parts with total sum n.
Int count_ppo(long n, const OracleConfig& config = {});

} // namespace etaq
