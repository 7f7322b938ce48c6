#include "etaq/congruence.hpp"

#include <stdexcept>

#include "etaq/errors.hpp"

namespace etaq {

std::string_view to_string(ExceptionRule rule) {
    switch (rule) {
    case ExceptionRule::None: return "none";
    case ExceptionRule::OddSquare: return "odd-square";
    case ExceptionRule::Square: return "square";
    }
    return "?";
}

namespace {

bool excepted(ExceptionRule rule, long n) {
    switch (rule) {
    case ExceptionRule::None: return false;
    case ExceptionRule::OddSquare: return is_odd_square(n);
    case ExceptionRule::Square: return is_square(n);
    }
    return false;
}

void validate_claim(const CongruenceClaim& claim, long term_count) {
    if (claim.step < 1) throw std::invalid_argument("claim: step must be >= 1");
    if (claim.residue < 0 || claim.residue >= claim.step)
        throw std::invalid_argument("claim: need 0 <= residue < step");
    if (claim.modulus < 1) throw std::invalid_argument("claim: modulus must be >= 1");
    if (claim.start < 0 || term_count < 0)
        throw std::invalid_argument("claim: negative range");
}

} // namespace

CheckReport check_claim_against(const CongruenceClaim& claim, long term_count,
                                const Series& source) {
    validate_claim(claim, term_count);
    const long need = term_count > 0 ? claim.step * (term_count - 1) + claim.residue + 1 : 0;
    if (source.precision() < need)
        throw InsufficientPrecision("claim on '" + claim.source + "' needs " +
                                    std::to_string(need) + " coefficients, have " +
                                    std::to_string(source.precision()));
    // m = 1 holds vacuously
    if (claim.modulus == 1) return pass_report(term_count);

    Int residue;
    for (long n = claim.start; n < term_count; ++n) {
        if (excepted(claim.exception, n)) continue;
        const long index = claim.step * n + claim.residue;
        mpz_fdiv_r(residue.get_mpz_t(), source.coeff(index).get_mpz_t(),
                   claim.modulus.get_mpz_t());
        if (sgn(residue) != 0) return fail_report(term_count, index, Int(0), residue);
    }
    return pass_report(term_count);
}

CheckReport check_claim(const CongruenceClaim& claim, long term_count,
                        const SeriesProvider& provider) {
    validate_claim(claim, term_count);
    const long need = term_count > 0 ? claim.step * (term_count - 1) + claim.residue + 1 : 0;
    return check_claim_against(claim, term_count, provider(claim.source, need));
}

CheckReport verify_vanishing_via_self_similarity(const Series& g, long s, long t,
                                                 const Int& k, long N) {
    if (s < 1 || t < 2) throw std::invalid_argument("self-similarity: need s >= 1, t >= 2");
    if (k < 2) throw std::invalid_argument("self-similarity: modulus must be >= 2");
    if (g.precision() < N)
        throw InsufficientPrecision("self-similarity: series has " +
                                    std::to_string(g.precision()) + " coefficients, need " +
                                    std::to_string(N));

    // (i) G(q) == q^s G(q^t) (mod k)
    const Series image = shift(substitute_power(g, t), s);
    CheckReport hypothesis = eq_up_to(truncate(g, N), truncate(image, N), N, k);
    if (!hypothesis.passed) {
        hypothesis.note = "G(q) != q^s G(q^t) (mod k)";
        return hypothesis;
    }

    // (ii) G == 0 (mod k)
    CheckReport conclusion = eq_up_to(truncate(g, N), Series::zero(N), N, k);
    if (!conclusion.passed) conclusion.note = "G(q) != 0 (mod k)";
    return conclusion;
}

std::vector<long> quadratic_nonresidues(long k) {
    if (k < 2) throw std::invalid_argument("quadratic_nonresidues: k must be >= 2");
    std::vector<bool> is_sq(static_cast<std::size_t>(k), false);
    for (long m = 0; m < k; ++m) is_sq[static_cast<std::size_t>((m * m) % k)] = true;
    std::vector<long> out;
    for (long r = 1; r < k; ++r)
        if (!is_sq[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(long n) { return is_square(Int(n)); }

bool is_odd_square(const Int& n) {
    if (n < 0 || mpz_odd_p(n.get_mpz_t()) == 0) return false;
    return is_square(n);
}

bool is_odd_square(long n) { return is_odd_square(Int(n)); }

CheckReport triangular_residue_check(long m_max) {
    if (m_max < 1) throw std::invalid_argument("triangular_residue_check: m_max must be >= 1");
    Int triangular;
    for (long m = 0; m <= m_max; ++m) {
        triangular = Int(m) * (m + 1) / 2;
        const long r = mpz_fdiv_ui(triangular.get_mpz_t(), 3);
        if (r == 2) return fail_report(m_max, m, Int(0), Int(2));
    }
    return pass_report(m_max);
}

} // namespace etaq
