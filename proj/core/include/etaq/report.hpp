#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace etaq {

using Int = mpz_class;

/// First point at which a check went wrong: the coefficient index, what the
/// check expected there, and what was actually found. For congruence claims
/// `expected` is 0 and `actual` is the offending residue.
struct Witness {
    long index = 0;
    Int expected;
    Int actual;
};

/// Machine-readable outcome of a single check. A failing report always
/// carries a witness; `order` records the order or number of progression
/// terms that were examined.
struct CheckReport {
    std::string id;
    bool passed = false;
    long order = 0;
    std::optional<Witness> witness;
    double millis = 0.0;
    std::string note;
};

inline CheckReport pass_report(long order) {
    CheckReport r;
    r.passed = true;
    r.order = order;
    return r;
}

inline CheckReport fail_report(long order, long index, Int expected, Int actual) {
    CheckReport r;
    r.passed = false;
    r.order = order;
    r.witness = Witness{index, std::move(expected), std::move(actual)};
    return r;
}

} // namespace etaq
