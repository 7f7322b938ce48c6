#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "etaq/series.hpp"

namespace etaq {

/// A finite product prod_k f_k^{e_k} of Euler factors f_k = (q^k; q^k)_inf,
/// described by its exponent map. Colliding subscripts merge by summing
/// exponents; factors whose exponent cancels to zero are dropped, so the map
/// holds only nonzero exponents with subscripts >= 1.
class EtaQuotient {
public:
    EtaQuotient() = default;
    EtaQuotient(std::initializer_list<std::pair<long, long>> factors);

    /// Merge f_k^e into the quotient.
    void multiply_by(long k, long e);

    const std::map<long, long>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Rendering like "f2^3*f3^2/f1^2*f4*f6^3" (numerator then denominator).
    std::string to_string() const;

private:
    std::map<long, long> factors_;
};

/// f_k = (q^k; q^k)_inf to order N, via the pentagonal-number expansion
/// f_1 = sum_{j in Z} (-1)^j q^{j(3j-1)/2}. Expansions are cached per k and
/// shared read-only; the cache keeps the longest expansion computed so far.
Series euler_series(long k, long N);

/// prod f_k^{e_k} to order N. Computed by multiplying or dividing one sparse
/// Euler factor at a time, which is exact and much cheaper than inverting a
/// dense denominator.
Series expand_eta_quotient(const EtaQuotient& spec, long N);

/// phi(sign * q^d) = 1 + 2 sum_{n>=1} sign^n q^{d n^2}, for sign = +1 or -1.
Series theta_phi_general(int sign, long d, long N);

/// Ramanujan theta phi(q) = 1 + 2 sum q^{n^2}.
Series theta_phi(long N);

/// phi(-q) = sum (-1)^k q^{k^2} = f_1^2 / f_2.
Series theta_phi_neg(long N);

/// f_1^3 via the signed triangular-number series sum (-1)^m (2m+1) q^{m(m+1)/2},
/// with q replaced by q^d.
Series triangular_cube_scaled(long d, long N);
Series triangular_cube(long N);

/// Generating function of the (ell, mu)-regular overpartition counts: the
/// eta quotient f_2 f_ell^2 f_mu^2 f_{2 ell mu} / (f_1^2 f_{2 ell} f_{2 mu}
/// f_{ell mu}^2), subscripts merged. Requires ell, mu > 1 coprime.
Series gen_lmu_regular(long ell, long mu, long N);

/// The merged exponent map behind gen_lmu_regular.
EtaQuotient lmu_regular_quotient(long ell, long mu);

/// Generating function of overpartition pairs into odd parts: phi(q)/phi(-q).
Series gen_ppo(long N);

} // namespace etaq
