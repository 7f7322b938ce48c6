#include "etaq/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq {

long Series::require_prec(long prec) {
    if (prec < 0) throw std::invalid_argument("series precision must be nonnegative");
    return prec;
}

Series Series::monomial(long e, long prec) {
    if (e < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    Series s(prec);
    if (e < prec) s.coeffs_[static_cast<std::size_t>(e)] = 1;
    return s;
}

const Int& Series::coeff(long n) const {
    if (n < 0 || n >= precision())
        throw InsufficientPrecision("coefficient index " + std::to_string(n) +
                                    " outside tracked precision " + std::to_string(precision()));
    return coeffs_[static_cast<std::size_t>(n)];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return sgn(c) == 0; });
}

long Series::nonzero_count() const {
    long n = 0;
    for (const Int& c : coeffs_)
        if (sgn(c) != 0) ++n;
    return n;
}

Series add(const Series& a, const Series& b) {
    const long prec = std::min(a.precision(), b.precision());
    std::vector<Int> out(static_cast<std::size_t>(prec));
    for (long n = 0; n < prec; ++n)
        out[static_cast<std::size_t>(n)] = a.coeffs()[static_cast<std::size_t>(n)] +
                                           b.coeffs()[static_cast<std::size_t>(n)];
    return Series(std::move(out));
}

Series sub(const Series& a, const Series& b) {
    const long prec = std::min(a.precision(), b.precision());
    std::vector<Int> out(static_cast<std::size_t>(prec));
    for (long n = 0; n < prec; ++n)
        out[static_cast<std::size_t>(n)] = a.coeffs()[static_cast<std::size_t>(n)] -
                                           b.coeffs()[static_cast<std::size_t>(n)];
    return Series(std::move(out));
}

Series negate(const Series& a) {
    std::vector<Int> out(a.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = -a.coeffs()[n];
    return Series(std::move(out));
}

Series scalar_mul(const Int& c, const Series& a) {
    std::vector<Int> out(a.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = c * a.coeffs()[n];
    return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
    const long prec = std::min(a.precision(), b.precision());
    std::vector<Int> out(static_cast<std::size_t>(prec));
    if (prec == 0) return Series(std::move(out));

    // Schoolbook product, driving the outer loop from whichever operand has
    // fewer nonzero coefficients. Euler factors and theta series are sparse,
    // so this keeps eta-quotient expansion near O(N^1.5) without changing
    // any retained value.
    const bool a_outer = a.nonzero_count() <= b.nonzero_count();
    const std::vector<Int>& u = a_outer ? a.coeffs() : b.coeffs();
    const std::vector<Int>& v = a_outer ? b.coeffs() : a.coeffs();

    for (long i = 0; i < prec; ++i) {
        const Int& ui = u[static_cast<std::size_t>(i)];
        if (sgn(ui) == 0) continue;
        const long jmax = prec - i;
        for (long j = 0; j < jmax; ++j) {
            const Int& vj = v[static_cast<std::size_t>(j)];
            if (sgn(vj) == 0) continue;
            // mpz_addmul under the hood
            out[static_cast<std::size_t>(i + j)] += ui * vj;
        }
    }
    return Series(std::move(out));
}

namespace {

int unit_sign_or_throw(const Series& b, const char* op) {
    if (b.precision() == 0)
        throw NotAUnit(std::string(op) + ": empty series has no constant term");
    const Int& c0 = b.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw NotAUnit(std::string(op) + ": constant term must be +1 or -1, got " + c0.get_str());
    return static_cast<int>(sgn(c0));
}

} // namespace

Series div_unit(const Series& a, const Series& b) {
    const int b0 = unit_sign_or_throw(b, "div_unit");
    const long prec = std::min(a.precision(), b.precision());
    std::vector<Int> out(static_cast<std::size_t>(prec));

    // Gather the nonzero divisor terms once; the recurrence then costs
    // O(prec * nnz(b)), which is what makes dividing by Euler factors cheap.
    std::vector<std::pair<long, const Int*>> bnz;
    for (long j = 1; j < prec; ++j) {
        const Int& bj = b.coeffs()[static_cast<std::size_t>(j)];
        if (sgn(bj) != 0) bnz.emplace_back(j, &bj);
    }

    Int acc;
    for (long n = 0; n < prec; ++n) {
        acc = a.coeffs()[static_cast<std::size_t>(n)];
        for (const auto& [j, bj] : bnz) {
            if (j > n) break;
            acc -= *bj * out[static_cast<std::size_t>(n - j)];
        }
        if (b0 < 0) acc = -acc;
        out[static_cast<std::size_t>(n)] = acc;
    }
    return Series(std::move(out));
}

Series invert(const Series& a) { return div_unit(Series::one(a.precision()), a); }

Series pow(const Series& a, long e) {
    if (e == 0) return Series::one(a.precision());
    if (e < 0) {
        if (e == std::numeric_limits<long>::min())
            throw std::invalid_argument("pow: exponent out of range");
        return pow(invert(a), -e);
    }
    Series result = Series::one(a.precision());
    Series base = a;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

Series substitute_power(const Series& a, long t) {
    if (t < 1) throw std::invalid_argument("substitute_power: t must be >= 1");
    if (t == 1) return a;
    const long prec = a.precision() * t;
    std::vector<Int> out(static_cast<std::size_t>(prec));
    for (long n = 0; n < a.precision(); ++n)
        out[static_cast<std::size_t>(n * t)] = a.coeffs()[static_cast<std::size_t>(n)];
    return Series(std::move(out));
}

Series shift(const Series& a, long s) {
    if (s < 0) throw std::invalid_argument("shift: s must be nonnegative");
    std::vector<Int> out(static_cast<std::size_t>(a.precision() + s));
    for (long n = 0; n < a.precision(); ++n)
        out[static_cast<std::size_t>(n + s)] = a.coeffs()[static_cast<std::size_t>(n)];
    return Series(std::move(out));
}

Series alternate_signs(const Series& a) {
    std::vector<Int> out(a.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = (n % 2 == 0) ? a.coeffs()[n] : -a.coeffs()[n];
    return Series(std::move(out));
}

Series extract_progression(const Series& a, long t, long r) {
    if (t < 1) throw std::invalid_argument("extract_progression: t must be >= 1");
    if (r < 0 || r >= t) throw std::invalid_argument("extract_progression: need 0 <= r < t");
    const long avail = a.precision() - r;
    const long prec = avail > 0 ? (avail + t - 1) / t : 0;
    std::vector<Int> out(static_cast<std::size_t>(prec));
    for (long n = 0; n < prec; ++n)
        out[static_cast<std::size_t>(n)] = a.coeffs()[static_cast<std::size_t>(t * n + r)];
    return Series(std::move(out));
}

Series reduce_mod(const Series& a, const Int& m) {
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    std::vector<Int> out(a.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n)
        mpz_fdiv_r(out[n].get_mpz_t(), a.coeffs()[n].get_mpz_t(), m.get_mpz_t());
    return Series(std::move(out));
}

Series truncate(const Series& a, long prec) {
    if (prec < 0 || prec > a.precision())
        throw InsufficientPrecision("truncate: requested " + std::to_string(prec) +
                                    " of " + std::to_string(a.precision()) + " coefficients");
    std::vector<Int> out(a.coeffs().begin(), a.coeffs().begin() + prec);
    return Series(std::move(out));
}

CheckReport eq_up_to(const Series& a, const Series& b, long order,
                     const std::optional<Int>& modulus) {
    if (order < 0) throw std::invalid_argument("eq_up_to: negative order");
    if (order > a.precision() || order > b.precision())
        throw InsufficientPrecision("eq_up_to: order " + std::to_string(order) +
                                    " exceeds precision (" + std::to_string(a.precision()) +
                                    ", " + std::to_string(b.precision()) + ")");
    if (modulus && *modulus < 2)
        throw std::invalid_argument("eq_up_to: modulus must be >= 2");

    Int ra, rb;
    for (long n = 0; n < order; ++n) {
        const Int& ca = a.coeffs()[static_cast<std::size_t>(n)];
        const Int& cb = b.coeffs()[static_cast<std::size_t>(n)];
        if (modulus) {
            mpz_fdiv_r(ra.get_mpz_t(), ca.get_mpz_t(), modulus->get_mpz_t());
            mpz_fdiv_r(rb.get_mpz_t(), cb.get_mpz_t(), modulus->get_mpz_t());
            if (ra != rb) return fail_report(order, n, rb, ra);
        } else if (ca != cb) {
            return fail_report(order, n, cb, ca);
        }
    }
    return pass_report(order);
}

std::string to_string(const Series& a, long max_terms) {
    std::ostringstream os;
    long printed = 0;
    for (long n = 0; n < a.precision() && printed < max_terms; ++n) {
        const Int& c = a.coeffs()[static_cast<std::size_t>(n)];
        if (sgn(c) == 0) continue;
        if (printed > 0) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Int mag = abs(c);
        if (mag != 1 || n == 0) os << mag.get_str();
        if (n > 0) {
            if (mag != 1) os << "*";
            os << "q";
            if (n > 1) os << "^" << n;
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    os << " + O(q^" << a.precision() << ")";
    return os.str();
}

} // namespace etaq
