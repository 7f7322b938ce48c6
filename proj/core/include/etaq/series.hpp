#pragma once

#include <optional>
#include <vector>

#include "etaq/report.hpp"

namespace etaq {

/// A formal power series in q truncated at a tracked precision: exactly
/// `precision()` coefficients are known, for q^0 .. q^(precision()-1).
/// Coefficients of q^n for n >= precision() are unknown, not zero.
///
/// Values are immutable after construction and safe to share across threads.
/// All arithmetic is exact over arbitrary-precision integers; nothing is ever
/// rounded or silently reduced.
class Series {
public:
    /// Zero series with `prec` tracked coefficients.
    explicit Series(long prec) : coeffs_(static_cast<std::size_t>(require_prec(prec))) {}

    /// Takes ownership of a full coefficient vector; precision = size.
    explicit Series(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

    static Series zero(long prec) { return Series(prec); }

    static Series one(long prec) {
        Series s(prec);
        if (prec > 0) s.coeffs_[0] = 1;
        return s;
    }

    static Series constant(Int c, long prec) {
        Series s(prec);
        if (prec > 0) s.coeffs_[0] = std::move(c);
        return s;
    }

    /// q^e, truncated at `prec` (the zero series when e >= prec).
    static Series monomial(long e, long prec);

    long precision() const { return static_cast<long>(coeffs_.size()); }

    /// Coefficient of q^n; n must be < precision().
    const Int& coeff(long n) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    /// Number of nonzero tracked coefficients.
    long nonzero_count() const;

private:
    static long require_prec(long prec);

    std::vector<Int> coeffs_;
};

// Arithmetic. Binary operations emit the intersection of what both operands
// know: result precision = min of the operand precisions.

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scalar_mul(const Int& c, const Series& a);

/// Truncated Cauchy product. Every retained coefficient is exact: dropped
/// input terms only influence exponents at or beyond the result precision.
Series mul(const Series& a, const Series& b);

/// Quotient a / b for unit b (constant term +1 or -1), by the standard
/// recurrence c_n = (a_n - sum_{j=1..n} b_j c_{n-j}) / b_0. Result precision
/// is min(prec_a, prec_b). Throws NotAUnit otherwise.
Series div_unit(const Series& a, const Series& b);

/// Multiplicative inverse of a unit series, to the operand's precision.
Series invert(const Series& a);

/// Integer power by repeated squaring; pow(a, 0) = 1, negative exponents
/// require a unit constant term.
Series pow(const Series& a, long e);

/// a(q^t) for t >= 1; result precision = precision(a) * t.
Series substitute_power(const Series& a, long t);

/// q^s * a; result precision = precision(a) + s.
Series shift(const Series& a, long s);

/// a(-q): negate the coefficients at odd exponents.
Series alternate_signs(const Series& a);

/// The sub-series b with b_n = a_{t n + r}, for 0 <= r < t.
/// Result precision = ceil((precision(a) - r) / t).
Series extract_progression(const Series& a, long t, long r);

/// Every coefficient replaced by its canonical representative in [0, m), m >= 2.
Series reduce_mod(const Series& a, const Int& m);

/// Prefix of the first `prec` coefficients; prec <= precision(a).
Series truncate(const Series& a, long prec);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// Compares coefficients for 0 <= n < order, exactly or modulo m when given.
/// Requires order <= min precision of the operands (InsufficientPrecision
/// otherwise). On failure the witness holds the first disagreeing index with
/// actual = a's value and expected = b's value (canonical residues mod m).
CheckReport eq_up_to(const Series& a, const Series& b, long order,
                     const std::optional<Int>& modulus = std::nullopt);

std::string to_string(const Series& a, long max_terms = 16);

} // namespace etaq
