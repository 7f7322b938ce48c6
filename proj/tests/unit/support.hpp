#pragma once

#include <random>

#include "etaq/series.hpp"

namespace etaq::testing {

/// Literal truncated product prod_{i>=1} (1 - q^{k i}), multiplied out factor
/// by factor. This is the reference construction the pentagonal-sum path is
/// checked against; it must never call euler_series.
inline Series literal_euler_product(long k, long N) {
    std::vector<Int> acc(static_cast<std::size_t>(N));
    acc[0] = 1;
    for (long e = k; e < N; e += k) {
        // multiply by (1 - q^e) in place, highest coefficient first
        for (long n = N - 1; n >= e; --n)
            acc[static_cast<std::size_t>(n)] -= acc[static_cast<std::size_t>(n - e)];
    }
    return Series(std::move(acc));
}

inline Series random_series(std::mt19937_64& rng, long prec, long magnitude = 4) {
    std::uniform_int_distribution<long> dist(-magnitude, magnitude);
    std::vector<Int> coeffs(static_cast<std::size_t>(prec));
    for (auto& c : coeffs) c = dist(rng);
    return Series(std::move(coeffs));
}

/// Random series whose constant term is +1 or -1.
inline Series random_unit_series(std::mt19937_64& rng, long prec, long magnitude = 4) {
    Series s = random_series(rng, prec, magnitude);
    std::vector<Int> coeffs = s.coeffs();
    coeffs[0] = (rng() & 1) ? 1 : -1;
    return Series(std::move(coeffs));
}

} // namespace etaq::testing
