#include "etaq/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "etaq/errors.hpp"

namespace etaq {

PartsPredicate PartsPredicate::not_divisible(long ell, long mu) {
    if (ell <= 1 || mu <= 1)
        throw std::invalid_argument("part divisors must be > 1");
    if (std::gcd(ell, mu) != 1)
        throw NotCoprime("(" + std::to_string(ell) + ", " + std::to_string(mu) +
                         ") are not coprime");
    return {Kind::NotDivisible, ell, mu};
}

bool PartsPredicate::allows(long part) const {
    switch (kind) {
    case Kind::All: return true;
    case Kind::Odd: return part % 2 == 1;
    case Kind::NotDivisible: return part % ell != 0 && part % mu != 0;
    }
    return false;
}

std::string PartsPredicate::to_string() const {
    switch (kind) {
    case Kind::All: return "all";
    case Kind::Odd: return "odd";
    case Kind::NotDivisible:
        return "not-div-" + std::to_string(ell) + "-or-" + std::to_string(mu);
    }
    return "?";
}

namespace {

void require_in_range(long n, const OracleConfig& config) {
    if (n < 0) throw std::invalid_argument("oracle: n must be nonnegative");
    if (n > config.max_n)
        throw TooLarge("oracle: n = " + std::to_string(n) +
                       " exceeds the enumeration bound " + std::to_string(config.max_n));
}

std::vector<long> allowed_parts(long n, const PartsPredicate& parts) {
    std::vector<long> out;
    for (long p = 1; p <= n; ++p)
        if (parts.allows(p)) out.push_back(p);
    return out;
}

// Multisets of parts[0..i-1] summing to n, weighted 2^(distinct sizes used).
// Memo over the (n+1) x (i+1) grid; each part either stays unused or is used
// c >= 1 times, the first occurrence carrying the overline factor 2.
class WeightedCounter {
public:
    WeightedCounter(long n, std::vector<long> parts)
        : parts_(std::move(parts)),
          memo_(static_cast<std::size_t>(n + 1) * (parts_.size() + 1), Int(-1)) {}

    Int count(long n, std::size_t i) {
        if (n == 0) return 1;
        if (i == 0) return 0;
        Int& slot = memo_[static_cast<std::size_t>(n) * (parts_.size() + 1) + i];
        if (slot >= 0) return slot;
        Int total = count(n, i - 1);
        const long p = parts_[i - 1];
        for (long rest = n - p; rest >= 0; rest -= p)
            total += 2 * count(rest, i - 1);
        slot = total;
        return slot;
    }

private:
    std::vector<long> parts_;
    std::vector<Int> memo_;
};

// Walks every overpartition: largest part first, and for each part size an
// explicit branch on whether its first occurrence is overlined.
Int enumerate_all(long remaining, std::size_t i, const std::vector<long>& parts) {
    if (remaining == 0) return 1;
    if (i == 0) return 0;
    Int total = enumerate_all(remaining, i - 1, parts);
    const long p = parts[i - 1];
    for (long c = 1; c * p <= remaining; ++c) {
        const Int below = enumerate_all(remaining - c * p, i - 1, parts);
        total += below; // first occurrence plain
        total += below; // first occurrence overlined
    }
    return total;
}

} // namespace

Int count_overpartitions(long n, const PartsPredicate& parts, const OracleConfig& config) {
    require_in_range(n, config);
    if (n == 0) return 1;
    std::vector<long> usable = allowed_parts(n, parts);
    const std::size_t count = usable.size();
    WeightedCounter counter(n, std::move(usable));
    return counter.count(n, count);
}

Int count_overpartitions_enumerated(long n, const PartsPredicate& parts,
                                    const OracleConfig& config) {
    require_in_range(n, config);
    if (n == 0) return 1;
    const std::vector<long> usable = allowed_parts(n, parts);
    return enumerate_all(n, usable.size(), usable);
}

Int count_lmu_regular(long ell, long mu, long n, const OracleConfig& config) {
    return count_overpartitions(n, PartsPredicate::not_divisible(ell, mu), config);
}

Int count_ppo(long n, const OracleConfig& config) {
    require_in_range(n, config);
    std::vector<Int> odd(static_cast<std::size_t>(n + 1));
    for (long j = 0; j <= n; ++j) odd[static_cast<std::size_t>(j)] =
        count_overpartitions(j, PartsPredicate::odd(), config);
    Int total = 0;
    for (long j = 0; j <= n; ++j)
        total += odd[static_cast<std::size_t>(j)] * odd[static_cast<std::size_t>(n - j)];
    return total;
}

} // namespace etaq
