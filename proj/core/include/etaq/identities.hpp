#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etaq/expr.hpp"
#include "etaq/report.hpp"

namespace etaq {

/// One verified two-sided identity. Sides are built per requested order so
/// that rows with an order-dependent truncation rule (the phi(-q) inverse
/// product) can carry that rule with the row itself; most rows ignore N.
struct IdentityRecord {
    std::string id;
    std::function<ExprPtr(long N)> lhs;
    std::function<ExprPtr(long N)> rhs;
    std::optional<Int> modulus; // exact identity when absent
    std::string citation;       // where the identity is established
};

class IdentityRegistry {
public:
    void add(IdentityRecord row);

    const IdentityRecord* find(std::string_view id) const;
    const std::vector<IdentityRecord>& rows() const { return rows_; }

    /// The built-in catalog of classical eta/theta identities used by the
    /// congruence suite. Immutable after first use.
    static const IdentityRegistry& standard();

private:
    std::vector<IdentityRecord> rows_;
};

constexpr long kDefaultIdentityOrder = 400;

/// eq_up_to of the two sides at order N (mod the row's modulus when one is
/// set). Throws UnknownIdentity for unregistered ids.
CheckReport verify_identity(const IdentityRegistry& registry, std::string_view id,
                            long N = kDefaultIdentityOrder);

/// Verify every registered row; reports carry the row ids, in registry order.
std::vector<CheckReport> verify_all_identities(const IdentityRegistry& registry,
                                               long N = kDefaultIdentityOrder);

/// The Euler-factor power congruence f_l^{p^k} == f_{lp}^{p^{k-1}} (mod p^k)
/// for prime p, checked to order N.
CheckReport verify_modpk_family(long p, long k, long l, long N = kDefaultIdentityOrder);

} // namespace etaq
