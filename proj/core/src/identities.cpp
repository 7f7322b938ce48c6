#include "etaq/identities.hpp"

#include <stdexcept>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq {

void IdentityRegistry::add(IdentityRecord row) {
    if (find(row.id)) throw std::invalid_argument("duplicate identity id: " + row.id);
    rows_.push_back(std::move(row));
}

const IdentityRecord* IdentityRegistry::find(std::string_view id) const {
    for (const auto& row : rows_)
        if (row.id == id) return &row;
    return nullptr;
}

namespace {

// f_{k1}^{e1} * ... as a single leaf.
ExprPtr F(std::initializer_list<std::pair<long, long>> factors) { return eta_expr(factors); }

// c * q^s * quotient — the shape of nearly every dissection term.
ExprPtr term(long c, long s, std::initializer_list<std::pair<long, long>> factors) {
    std::vector<ExprPtr> parts;
    if (c != 1) parts.push_back(scalar_expr(c));
    if (s != 0) parts.push_back(qpow_expr(s));
    parts.push_back(eta_expr(factors));
    if (parts.size() == 1) return parts.front();
    return product_expr(std::move(parts));
}

std::function<ExprPtr(long)> fixed(ExprPtr e) {
    return [e = std::move(e)](long) { return e; };
}

IdentityRegistry build_standard() {
    IdentityRegistry reg;

    // --- Theta evaluations -------------------------------------------------

    reg.add({"PHI_AS_ETA", fixed(phi_expr()),
             fixed(F({{2, 5}, {1, -2}, {4, -2}})),
             std::nullopt, "Hirschhorn, The Power of q, (1.5.6)"});

    reg.add({"PHINEG_AS_ETA", fixed(phi_expr(-1)),
             fixed(F({{1, 2}, {2, -1}})),
             std::nullopt, "Hirschhorn, The Power of q, (1.5.8)"});

    reg.add({"PHI_VIA_PHINEG", fixed(phi_expr()),
             fixed(product_expr({power_expr(phi_expr(-1, 2), 2),
                                 power_expr(phi_expr(-1, 1), -1)})),
             std::nullopt, "Hirschhorn, The Power of q, (1.5.14)"});

    // 1/phi(-q) = phi(q) phi(q^2)^2 phi(q^4)^4 ... ; factors with 2^j >= N
    // are 1 + O(q^N) and cannot touch retained coefficients, so the row
    // truncates the product there.
    reg.add({"INV_PHINEG_PRODUCT", fixed(power_expr(phi_expr(-1), -1)),
             [](long N) {
                 std::vector<ExprPtr> factors;
                 for (long p = 1; p < N; p *= 2)
                     factors.push_back(power_expr(phi_expr(1, p), p));
                 return product_expr(std::move(factors));
             },
             std::nullopt, "Hirschhorn, The Power of q, (1.5.16)"});

    reg.add({"PHI4_MOD8", fixed(power_expr(phi_expr(), 4)), fixed(scalar_expr(1)),
             Int(8), "phi(q)^4 == 1 (mod 8); squares of 1 + 2*(...)"});

    // --- 2-dissections -----------------------------------------------------

    reg.add({"F1_CUBED_TRIANGULAR", fixed(F({{1, 3}})), fixed(tri_cube_expr()),
             std::nullopt, "Hirschhorn, The Power of q, (1.7.1)"});

    reg.add({"INV_F14_2DISSECT", fixed(F({{1, -4}})),
             fixed(sum_expr({term(1, 0, {{4, 14}, {2, -14}, {8, -4}}),
                             term(4, 1, {{4, 2}, {8, 4}, {2, -10}})})),
             std::nullopt, "Brietzke, da Silva, Sellers"});

    reg.add({"F9_OVER_F1_2DISSECT", fixed(F({{9, 1}, {1, -1}})),
             fixed(sum_expr({term(1, 0, {{12, 3}, {18, 1}, {2, -2}, {6, -1}, {36, -1}}),
                             term(1, 1, {{4, 2}, {6, 1}, {36, 1}, {2, -3}, {12, -1}})})),
             std::nullopt, "Xia, Yao, Lemma 3.5"});

    reg.add({"F33_OVER_F1_2DISSECT", fixed(F({{3, 3}, {1, -1}})),
             fixed(sum_expr({term(1, 0, {{4, 3}, {6, 2}, {2, -2}, {12, -1}}),
                             term(1, 1, {{12, 3}, {4, -1}})})),
             std::nullopt, "Xia, Yao (2013)"});

    reg.add({"F3_OVER_F13_2DISSECT", fixed(F({{3, 1}, {1, -3}})),
             fixed(sum_expr({term(1, 0, {{4, 6}, {6, 3}, {2, -9}, {12, -2}}),
                             term(3, 1, {{4, 2}, {6, 1}, {12, 2}, {2, -7}})})),
             std::nullopt, "Xia, Yao (2013)"});

    reg.add({"F32_OVER_F12_2DISSECT", fixed(F({{3, 2}, {1, -2}})),
             fixed(sum_expr({term(1, 0, {{4, 4}, {6, 1}, {12, 2}, {2, -5}, {8, -1}, {24, -1}}),
                             term(2, 1, {{4, 1}, {6, 2}, {8, 1}, {24, 1}, {2, -4}, {12, -1}})})),
             std::nullopt, "Xia, Yao (2013)"});

    // q -> -q image of F33_OVER_F1_2DISSECT, via (-q;-q) = f2^3/(f1 f4).
    reg.add({"F1_OVER_F33_2DISSECT", fixed(F({{1, 1}, {3, -3}})),
             fixed(sum_expr({term(1, 0, {{2, 1}, {4, 2}, {12, 2}, {6, -7}}),
                             term(-1, 1, {{2, 3}, {12, 6}, {4, -2}, {6, -9}})})),
             std::nullopt, "Xia, Yao (2013), negated-argument image"});

    reg.add({"F3_OVER_F1_2DISSECT", fixed(F({{3, 1}, {1, -1}})),
             fixed(sum_expr({term(1, 0, {{4, 1}, {6, 1}, {16, 1}, {24, 2},
                                         {2, -2}, {8, -1}, {12, -1}, {48, -1}}),
                             term(1, 1, {{6, 1}, {8, 2}, {48, 1}, {2, -2}, {16, -1}, {24, -1}})})),
             std::nullopt, "da Silva, Sellers, (31)"});

    reg.add({"F1F3_2DISSECT", fixed(F({{1, 1}, {3, 1}})),
             fixed(sum_expr({term(1, 0, {{2, 1}, {8, 2}, {12, 4}, {4, -2}, {6, -1}, {24, -2}}),
                             term(-1, 1, {{4, 4}, {6, 1}, {24, 2}, {2, -1}, {8, -2}, {12, -2}})})),
             std::nullopt, "da Silva, Sellers, (32)"});

    reg.add({"NEGQ_EULER", fixed(alt_sign_expr(F({{1, 1}}))),
             fixed(F({{2, 3}, {1, -1}, {4, -1}})),
             std::nullopt, "(-q;-q) = f2^3/(f1 f4)"});

    // --- 3-dissections -----------------------------------------------------

    reg.add({"F1F2_3DISSECT", fixed(F({{1, 1}, {2, 1}})),
             fixed(sum_expr({term(1, 0, {{6, 1}, {9, 4}, {3, -1}, {18, -2}}),
                             term(-1, 1, {{9, 1}, {18, 1}}),
                             term(-2, 2, {{3, 1}, {18, 4}, {6, -1}, {9, -2}})})),
             std::nullopt, "Hirschhorn, Sellers (2014)"});

    reg.add({"F2_OVER_F12_3DISSECT", fixed(F({{2, 1}, {1, -2}})),
             fixed(sum_expr({term(1, 0, {{6, 4}, {9, 6}, {3, -8}, {18, -3}}),
                             term(2, 1, {{6, 3}, {9, 3}, {3, -7}}),
                             term(4, 2, {{6, 2}, {18, 3}, {3, -6}})})),
             std::nullopt, "Hirschhorn, Sellers (2005)"});

    reg.add({"F1_OVER_F4_3DISSECT", fixed(F({{1, 1}, {4, -1}})),
             fixed(sum_expr({term(1, 0, {{6, 1}, {9, 1}, {18, 1}, {12, -3}}),
                             term(-1, 1, {{3, 1}, {18, 4}, {9, -2}, {12, -3}}),
                             term(-1, 2, {{6, 2}, {9, 1}, {36, 3}, {12, -4}, {18, -2}})})),
             std::nullopt, "Das, Maity, Saikia, Lemma 5.1"});

    reg.add({"INV_F1F2_3DISSECT", fixed(F({{1, -1}, {2, -1}})),
             fixed(sum_expr({term(1, 0, {{9, 9}, {3, -6}, {6, -2}, {18, -3}}),
                             term(1, 1, {{9, 6}, {3, -5}, {6, -3}}),
                             term(3, 2, {{9, 3}, {18, 3}, {3, -4}, {6, -4}}),
                             term(-2, 3, {{18, 6}, {3, -3}, {6, -5}}),
                             term(4, 4, {{18, 9}, {3, -2}, {6, -6}, {9, -3}})})),
             std::nullopt, "Sellers, Lemma 9"});

    reg.add({"F12_OVER_F2_3DISSECT", fixed(F({{1, 2}, {2, -1}})),
             fixed(sum_expr({term(1, 0, {{9, 2}, {18, -1}}),
                             term(-2, 1, {{3, 1}, {18, 2}, {6, -1}, {9, -1}})})),
             std::nullopt, "Hirschhorn, The Power of q, (14.3.2)"});

    return reg;
}

} // namespace

const IdentityRegistry& IdentityRegistry::standard() {
    static const IdentityRegistry reg = build_standard();
    return reg;
}

CheckReport verify_identity(const IdentityRegistry& registry, std::string_view id, long N) {
    const IdentityRecord* row = registry.find(id);
    if (!row) throw UnknownIdentity("no identity named '" + std::string(id) + "'");
    CheckReport report = eq_up_to(eval_expr(row->lhs(N), N), eval_expr(row->rhs(N), N),
                                  N, row->modulus);
    report.id = row->id;
    return report;
}

std::vector<CheckReport> verify_all_identities(const IdentityRegistry& registry, long N) {
    std::vector<CheckReport> out;
    out.reserve(registry.rows().size());
    for (const auto& row : registry.rows()) out.push_back(verify_identity(registry, row.id, N));
    return out;
}

CheckReport verify_modpk_family(long p, long k, long l, long N) {
    if (p < 2 || k < 1 || l < 1 || N < 1)
        throw std::invalid_argument("verify_modpk_family: bad arguments");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("verify_modpk_family: p must be prime");

    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    if (!pk.fits_slong_p())
        throw std::invalid_argument("verify_modpk_family: p^k too large for an exponent");

    const long e_lhs = pk.get_si();
    const long e_rhs = e_lhs / p;
    const Series lhs = expand_eta_quotient(EtaQuotient{{l, e_lhs}}, N);
    const Series rhs = expand_eta_quotient(EtaQuotient{{l * p, e_rhs}}, N);
    CheckReport report = eq_up_to(lhs, rhs, N, pk);
    report.id = "f" + std::to_string(l) + "^" + std::to_string(e_lhs) + " == f" +
                std::to_string(l * p) + "^" + std::to_string(e_rhs) + " mod " + pk.get_str();
    return report;
}

} // namespace etaq
