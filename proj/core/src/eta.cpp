#include "etaq/eta.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "etaq/errors.hpp"

namespace etaq {

EtaQuotient::EtaQuotient(std::initializer_list<std::pair<long, long>> factors) {
    for (const auto& [k, e] : factors) multiply_by(k, e);
}

void EtaQuotient::multiply_by(long k, long e) {
    if (k < 1) throw std::invalid_argument("eta factor subscript must be >= 1");
    if (e == 0) return;
    auto [it, inserted] = factors_.emplace(k, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
    }
}

std::string EtaQuotient::to_string() const {
    std::ostringstream num, den;
    for (const auto& [k, e] : factors_) {
        std::ostringstream& side = e > 0 ? num : den;
        if (side.tellp() > 0) side << "*";
        side << "f" << k;
        const long mag = e > 0 ? e : -e;
        if (mag != 1) side << "^" << mag;
    }
    std::string n = num.str(), d = den.str();
    if (n.empty() && d.empty()) return "1";
    if (n.empty()) n = "1";
    return d.empty() ? n : n + "/" + d;
}

namespace {

std::vector<Int> pentagonal_coeffs(long k, long N) {
    std::vector<Int> c(static_cast<std::size_t>(N));
    if (N > 0) c[0] = 1;
    for (long j = 1;; ++j) {
        // generalized pentagonal exponents j(3j-1)/2 and j(3j+1)/2, dilated by k
        const long g1 = k * (j * (3 * j - 1) / 2);
        if (g1 >= N) break;
        const int s = (j % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(g1)] += s;
        const long g2 = k * (j * (3 * j + 1) / 2);
        if (g2 < N) c[static_cast<std::size_t>(g2)] += s;
    }
    return c;
}

// Longest expansion computed so far, per subscript. Concurrent reads are
// fine; insertion is serialized.
std::mutex g_euler_mutex;
std::map<long, std::vector<Int>>& euler_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}

} // namespace

Series euler_series(long k, long N) {
    if (k < 1) throw std::invalid_argument("euler_series: k must be >= 1");
    if (N < 1) throw std::invalid_argument("euler_series: order must be >= 1");
    std::lock_guard<std::mutex> lock(g_euler_mutex);
    auto& entry = euler_cache()[k];
    if (static_cast<long>(entry.size()) < N) entry = pentagonal_coeffs(k, N);
    std::vector<Int> out(entry.begin(), entry.begin() + N);
    return Series(std::move(out));
}

Series expand_eta_quotient(const EtaQuotient& spec, long N) {
    if (N < 1) throw std::invalid_argument("expand_eta_quotient: order must be >= 1");
    Series acc = Series::one(N);
    for (const auto& [k, e] : spec.factors()) {
        const Series fk = euler_series(k, N);
        for (long i = 0; i < (e > 0 ? e : -e); ++i)
            acc = e > 0 ? mul(acc, fk) : div_unit(acc, fk);
    }
    return acc;
}

Series theta_phi_general(int sign, long d, long N) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta sign must be +1 or -1");
    if (d < 1 || N < 1) throw std::invalid_argument("theta_phi_general: bad arguments");
    std::vector<Int> c(static_cast<std::size_t>(N));
    c[0] = 1;
    for (long n = 1; d * n * n < N; ++n)
        c[static_cast<std::size_t>(d * n * n)] = (sign < 0 && n % 2 == 1) ? -2 : 2;
    return Series(std::move(c));
}

Series theta_phi(long N) { return theta_phi_general(1, 1, N); }

Series theta_phi_neg(long N) { return theta_phi_general(-1, 1, N); }

Series triangular_cube_scaled(long d, long N) {
    if (d < 1 || N < 1) throw std::invalid_argument("triangular_cube: bad arguments");
    std::vector<Int> c(static_cast<std::size_t>(N));
    for (long m = 0; d * (m * (m + 1) / 2) < N; ++m) {
        const long t = d * (m * (m + 1) / 2);
        c[static_cast<std::size_t>(t)] = (m % 2 == 0) ? (2 * m + 1) : -(2 * m + 1);
    }
    return Series(std::move(c));
}

Series triangular_cube(long N) { return triangular_cube_scaled(1, N); }

EtaQuotient lmu_regular_quotient(long ell, long mu) {
    if (ell <= 1 || mu <= 1)
        throw std::invalid_argument("regular overpartition parameters must be > 1");
    if (std::gcd(ell, mu) != 1)
        throw NotCoprime("(" + std::to_string(ell) + ", " + std::to_string(mu) +
                         ") are not coprime");
    EtaQuotient spec;
    spec.multiply_by(2, 1);
    spec.multiply_by(ell, 2);
    spec.multiply_by(mu, 2);
    spec.multiply_by(2 * ell * mu, 1);
    spec.multiply_by(1, -2);
    spec.multiply_by(2 * ell, -1);
    spec.multiply_by(2 * mu, -1);
    spec.multiply_by(ell * mu, -2);
    return spec;
}

Series gen_lmu_regular(long ell, long mu, long N) {
    return expand_eta_quotient(lmu_regular_quotient(ell, mu), N);
}

Series gen_ppo(long N) { return mul(theta_phi(N), invert(theta_phi_neg(N))); }

} // namespace etaq
