#include "etaq/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/expr.hpp"

namespace etaq {

double profile_scale(Profile profile) {
    switch (profile) {
    case Profile::Fast: return 0.5;
    case Profile::Default: return 1.0;
    case Profile::Deep: return 2.0;
    }
    return 1.0;
}

std::string_view to_string(Profile profile) {
    switch (profile) {
    case Profile::Fast: return "fast";
    case Profile::Default: return "default";
    case Profile::Deep: return "deep";
    }
    return "?";
}

std::string_view to_string(CheckKind kind) {
    switch (kind) {
    case CheckKind::Claim: return "claim";
    case CheckKind::InternalCongruence: return "internal-congruence";
    case CheckKind::ExactIdentity: return "exact-identity";
    case CheckKind::SelfSimilarity: return "self-similarity";
    }
    return "?";
}

Series SuiteContext::source(std::string_view id, long min_prec) {
    if (min_prec < 1) min_prec = 1;
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(id);
    if (it == cache_.end() || it->second.precision() < min_prec) {
        // grow geometrically so a run with slowly increasing demands does
        // not re-expand the same function many times
        const long have = it == cache_.end() ? 0 : it->second.precision();
        const long target = std::max(min_prec, 2 * have);
        Series expanded = [&]() -> Series {
            if (id == "PPO") return gen_ppo(target);
            if (id.size() >= 5 && id.substr(0, 2) == "R_") {
                const auto sep = id.find('_', 2);
                if (sep != std::string_view::npos) {
                    const long ell = std::stol(std::string(id.substr(2, sep - 2)));
                    const long mu = std::stol(std::string(id.substr(sep + 1)));
                    return gen_lmu_regular(ell, mu, target);
                }
            }
            throw UnknownCheck("unknown series source '" + std::string(id) + "'");
        }();
        it = cache_.insert_or_assign(cache_.end(), std::string(id), std::move(expanded));
    }
    return truncate(it->second, min_prec);
}

SeriesProvider SuiteContext::provider() {
    return [this](std::string_view id, long min_prec) { return source(id, min_prec); };
}

namespace {

long scaled(long base, double scale) {
    return std::max(4L, static_cast<long>(std::lround(base * scale)));
}

ExprPtr term(long c, long s, std::initializer_list<std::pair<long, long>> factors) {
    std::vector<ExprPtr> parts;
    if (c != 1) parts.push_back(scalar_expr(c));
    if (s != 0) parts.push_back(qpow_expr(s));
    parts.push_back(eta_expr(factors));
    if (parts.size() == 1) return parts.front();
    return product_expr(std::move(parts));
}

// phi(sign * q^d) - 1 = 2 sum_{n>=1} sign^n q^{d n^2}
ExprPtr phi_minus_one(int sign, long d) {
    return sum_expr({phi_expr(sign, d), scalar_expr(-1)});
}

ExprPtr g_series_expr() {
    // G(q) = f1^8 f2^8 - q f2^24 - f1^24
    return sum_expr({eta_expr({{1, 8}, {2, 8}}),
                     term(-1, 1, {{2, 24}}),
                     term(-1, 0, {{1, 24}})});
}

ExprPtr f_series_expr() {
    // F(q) = f2^28 + q f1^8 f2^4 f4^16 - f1^8 f2^8 f4^8
    return sum_expr({eta_expr({{2, 28}}),
                     term(1, 1, {{1, 8}, {2, 4}, {4, 16}}),
                     term(-1, 0, {{1, 8}, {2, 8}, {4, 8}})});
}

struct ClaimSpec {
    std::string id, description, citation;
    CongruenceClaim claim;
    long base_terms = 0;
    bool expected_fail = false;
};

TheoremCheck make_claim_row(ClaimSpec spec) {
    TheoremCheck row;
    row.id = spec.id;
    row.description = spec.description;
    row.citation = spec.citation;
    row.kind = CheckKind::Claim;
    row.expected_fail = spec.expected_fail;
    row.run = [claim = spec.claim, base = spec.base_terms](SuiteContext& ctx, double scale) {
        return check_claim(claim, scaled(base, scale), ctx.provider());
    };
    return row;
}

// Progression claims sized by a cap on the largest coefficient index instead
// of a term count.
TheoremCheck make_capped_claim_row(ClaimSpec spec, long base_index_cap) {
    TheoremCheck row = make_claim_row(spec);
    row.run = [claim = spec.claim, base_index_cap](SuiteContext& ctx, double scale) {
        const long cap = static_cast<long>(std::lround(base_index_cap * scale));
        const long terms = std::max(4L, (cap - claim.residue) / claim.step + 1);
        return check_claim(claim, terms, ctx.provider());
    };
    return row;
}

// LHS: progression (t, r) of a cached source. RHS: an expression, compared
// exactly or mod m at the scaled order.
struct ExtractIdentitySpec {
    std::string id, description, citation;
    std::string source;
    long step = 1;
    long residue = 0;
    std::function<ExprPtr(long)> rhs;
    std::optional<Int> modulus;
    long base_order = 400;
};

TheoremCheck make_extract_identity_row(ExtractIdentitySpec spec) {
    TheoremCheck row;
    row.id = spec.id;
    row.description = spec.description;
    row.citation = spec.citation;
    row.kind = CheckKind::ExactIdentity;
    row.run = [spec](SuiteContext& ctx, double scale) {
        const long order = scaled(spec.base_order, scale);
        const Series source = ctx.source(spec.source, spec.step * order + spec.residue);
        const Series lhs = truncate(extract_progression(source, spec.step, spec.residue), order);
        const Series rhs = eval_expr(spec.rhs(order), order);
        return eq_up_to(lhs, rhs, order, spec.modulus);
    };
    return row;
}

void add_cor23_rows(TheoremSuite& suite) {
    // R_2_3(3**b (3n+2)) == 0 (mod 6), realized per b as the progression
    // 3**(b+1) n + 2*3**b, checked for every index up to the cap.
    long step = 3;
    for (long beta = 1; beta <= 4; ++beta) {
        step *= 3; // 3**(beta+1)
        ClaimSpec spec;
        spec.id = "COR23_MOD6_B" + std::to_string(beta);
        spec.description = "R_2_3(3^" + std::to_string(beta) +
                           "(3n+2)) == 0 (mod 6), all indices up to 10000";
        spec.citation = beta == 1
                            ? "Alanazi-Munagi-Saikia, Thm 4.1 (10); Ghoshal-Jana, Thm 3.1"
                            : "";
        spec.claim = {"R_2_3", step, 2 * (step / 3), Int(6), 0, ExceptionRule::None};
        suite.add(make_capped_claim_row(spec, 10000));
    }
}

void add_family_mod24_rows(TheoremSuite& suite) {
    // R_4_9(4(kn+r)) == 0 (mod 24) for every quadratic nonresidue r mod k.
    for (long k : {3, 4, 5, 6, 8, 12}) {
        TheoremCheck row;
        row.id = "T49_FAMILY_MOD24_K" + std::to_string(k);
        row.description = "R_4_9(4(" + std::to_string(k) +
                          "n+r)) == 0 (mod 24) for every quadratic nonresidue r";
        row.citation = k == 4 ? "includes Alanazi-Munagi-Saikia, Thm 4.1 (19)" : "";
        row.kind = CheckKind::Claim;
        row.run = [k](SuiteContext& ctx, double scale) {
            const long terms = scaled(250, scale);
            long checked = 0;
            for (long r : quadratic_nonresidues(k)) {
                CongruenceClaim claim{"R_4_9", 4 * k, 4 * r, Int(24), 0, ExceptionRule::None};
                CheckReport report = check_claim(claim, terms, ctx.provider());
                if (!report.passed) {
                    report.note = "failed at r = " + std::to_string(r);
                    return report;
                }
                checked += report.order;
            }
            CheckReport ok = pass_report(terms);
            ok.note = std::to_string(quadratic_nonresidues(k).size()) + " residues, " +
                      std::to_string(checked) + " progression terms";
            return ok;
        };
        suite.add(row);
    }
}

void add_conjecture_row(TheoremSuite& suite) {
    TheoremCheck row;
    row.id = "CONJ_AMS_MOD6";
    row.description = "R_4_9(4*l*n + 4*k) == 0 (mod 6) for l in 2..6, 1 <= k <= l";
    row.citation = "Alanazi-Munagi-Saikia, Conjecture 5.1";
    row.kind = CheckKind::Claim;
    row.run = [](SuiteContext& ctx, double scale) {
        const long terms = scaled(250, scale);
        for (long l = 2; l <= 6; ++l) {
            for (long k = 1; k <= l; ++k) {
                // k = l gives the progression 4l(n+1): residue 0 from n = 1 on
                CongruenceClaim claim{"R_4_9", 4 * l, k == l ? 0 : 4 * k, Int(6),
                                      k == l ? 1 : 0, ExceptionRule::None};
                CheckReport report = check_claim(claim, k == l ? terms + 1 : terms,
                                                 ctx.provider());
                if (!report.passed) {
                    report.note = "failed at (l, k) = (" + std::to_string(l) + ", " +
                                  std::to_string(k) + ")";
                    return report;
                }
            }
        }
        CheckReport ok = pass_report(terms);
        ok.note = "20 progressions";
        return ok;
    };
    suite.add(row);
}

void add_vanishing_rows(TheoremSuite& suite) {
    {
        TheoremCheck row;
        row.id = "GQ_VANISH";
        row.description =
            "G = f1^8 f2^8 - q f2^24 - f1^24: G == qG(q^2) (mod 3) and G == 0 (mod 3)";
        row.kind = CheckKind::SelfSimilarity;
        row.run = [](SuiteContext&, double scale) {
            const long order = scaled(600, scale);
            const Series g = eval_expr(g_series_expr(), order);
            return verify_vanishing_via_self_similarity(g, 1, 2, Int(3), order);
        };
        suite.add(row);
    }
    {
        TheoremCheck row;
        row.id = "FQ_VANISH";
        row.description = "F = f2^28 + q f1^8 f2^4 f4^16 - f1^8 f2^8 f4^8: "
                          "F == -f2^4 G(q^2) (mod 3) and F == 0 (mod 3)";
        row.kind = CheckKind::SelfSimilarity;
        row.run = [](SuiteContext&, double scale) {
            const long order = scaled(600, scale);
            const Series f = eval_expr(f_series_expr(), order);
            const ExprPtr rhs = product_expr(
                {scalar_expr(-1), eta_expr({{2, 4}}), subst_expr(g_series_expr(), 2)});
            CheckReport identity = eq_up_to(f, eval_expr(rhs, order), order, Int(3));
            if (!identity.passed) {
                identity.note = "F(q) != -f2^4 G(q^2) (mod 3)";
                return identity;
            }
            CheckReport vanish = eq_up_to(f, Series::zero(order), order, Int(3));
            if (!vanish.passed) vanish.note = "F(q) != 0 (mod 3)";
            return vanish;
        };
        suite.add(row);
    }
}

ExprPtr mod8_structure_rhs() {
    // The expansion of phi(q) phi(q^2)^2 phi(q^36) phi(q^72)^2 phi(-q^4)
    // phi(-q^9) surviving reduction mod 8: the constant, each single theta
    // tail with its multiplicity, and the eight pair products whose
    // coefficient stays 4.
    return sum_expr({scalar_expr(1),
                     phi_minus_one(1, 1),
                     product_expr({scalar_expr(2), phi_minus_one(1, 2)}),
                     phi_minus_one(1, 36),
                     product_expr({scalar_expr(2), phi_minus_one(1, 72)}),
                     phi_minus_one(-1, 4),
                     phi_minus_one(-1, 9),
                     product_expr({phi_minus_one(1, 2), phi_minus_one(1, 2)}),
                     product_expr({phi_minus_one(1, 72), phi_minus_one(1, 72)}),
                     product_expr({phi_minus_one(1, 1), phi_minus_one(1, 36)}),
                     product_expr({phi_minus_one(1, 9), phi_minus_one(1, 36)}),
                     product_expr({phi_minus_one(1, 1), phi_minus_one(1, 9)}),
                     product_expr({phi_minus_one(1, 4), phi_minus_one(1, 9)}),
                     product_expr({phi_minus_one(1, 1), phi_minus_one(1, 4)}),
                     product_expr({phi_minus_one(1, 4), phi_minus_one(1, 36)})});
}

TheoremSuite build_standard() {
    TheoremSuite suite;

    // ---- (2,3): internal congruence and its corollary ladder ----

    {
        TheoremCheck row;
        row.id = "T23_INTERNAL";
        row.description = "R_2_3(27n) == R_2_3(3n) (mod 3)";
        row.kind = CheckKind::InternalCongruence;
        row.run = [](SuiteContext& ctx, double scale) {
            const long terms = scaled(200, scale);
            const Series source = ctx.source("R_2_3", 27 * terms);
            const Series lhs = extract_progression(source, 27, 0);
            const Series rhs = extract_progression(source, 3, 0);
            return eq_up_to(truncate(lhs, terms), truncate(rhs, terms), terms, Int(3));
        };
        suite.add(row);
    }
    add_cor23_rows(suite);

    suite.add(make_extract_identity_row(
        {"R233N_INTERMEDIATE", "sum R_2_3(3n) q^n == phi(q) f3^2/f6 (mod 3)", "",
         "R_2_3", 3, 0,
         [](long) { return product_expr({phi_expr(), eta_expr({{3, 2}, {6, -1}})}); },
         Int(3), 400}));

    suite.add(make_extract_identity_row(
        {"R2327N_INTERMEDIATE", "sum R_2_3(27n) q^n == phi(q) f3^2/f6 (mod 3)", "",
         "R_2_3", 27, 0,
         [](long) { return product_expr({phi_expr(), eta_expr({{3, 2}, {6, -1}})}); },
         Int(3), 200}));

    // ---- (4,3): even-index congruences and the odd-parts pair identification ----

    suite.add(make_claim_row({"T43_MOD4", "R_4_3(2n) == 0 (mod 4), n >= 1", "",
                              {"R_4_3", 2, 0, Int(4), 1, ExceptionRule::None}, 1000}));

    suite.add(make_claim_row({"T43_MOD8",
                              "R_4_3(2n) == 0 (mod 8), n >= 1 not an odd square", "",
                              {"R_4_3", 2, 0, Int(8), 1, ExceptionRule::OddSquare}, 1000}));

    suite.add(make_extract_identity_row(
        {"T43_EXACT_PPO", "sum R_4_3(2n) q^n == phi(q)/phi(-q), exactly", "",
         "R_4_3", 2, 0,
         [](long) {
             return product_expr({phi_expr(), power_expr(phi_expr(-1), -1)});
         },
         std::nullopt, 1000}));

    suite.add(make_extract_identity_row(
        {"T43_MOD8_STRUCTURE",
         "sum R_4_3(2n) q^n == 1 + 4 sum_{odd n} q^{n^2} (mod 8)", "",
         "R_4_3", 2, 0,
         [](long) {
             return sum_expr({scalar_expr(1),
                              product_expr({scalar_expr(2), phi_minus_one(1, 1)}),
                              product_expr({scalar_expr(-2), phi_minus_one(1, 4)})});
         },
         Int(8), 1000}));

    // ---- (4,9): progression congruences ----

    suite.add(make_claim_row({"T49_4N_MOD12", "R_4_9(4n) == 0 (mod 12), n >= 1",
                              "extends Nadji-Ahmia-Ramirez, Thm 4.1 mod 3",
                              {"R_4_9", 4, 0, Int(12), 1, ExceptionRule::None}, 1000}));

    suite.add(make_claim_row({"T49_3N_MOD8",
                              "R_4_9(3n) == 0 (mod 8), n >= 1 (n = 0 excluded: R_4_9(0) = 1)",
                              "",
                              {"R_4_9", 3, 0, Int(8), 1, ExceptionRule::None}, 1000}));

    suite.add(make_extract_identity_row(
        {"T49_3N_EXACT",
         "sum R_4_9(3n) q^n == f2^4 f3^8/(f1^8 f6^4) - 8q^2 f2^2 f3^2 f4 f6^2 f24^3/(f1^6 f8 f12^3)",
         "", "R_4_9", 3, 0,
         [](long) {
             return sum_expr({eta_expr({{2, 4}, {3, 8}, {1, -8}, {6, -4}}),
                              term(-8, 2, {{2, 2}, {3, 2}, {4, 1}, {6, 2}, {24, 3},
                                           {1, -6}, {8, -1}, {12, -3}})});
         },
         std::nullopt, 400}));

    suite.add(make_extract_identity_row(
        {"T49_49N_EXACT",
         "sum R_4_9(n) q^n as the 3-dissection of f2/f1^2 times the f4^2/f8 dissection",
         "", "R_4_9", 1, 0,
         [](long) {
             return product_expr(
                 {sum_expr({eta_expr({{6, 4}, {9, 6}, {3, -8}, {18, -3}}),
                            term(2, 1, {{6, 3}, {9, 3}, {3, -7}}),
                            term(4, 2, {{6, 2}, {18, 3}, {3, -6}})}),
                  sum_expr({eta_expr({{36, 2}, {72, -1}}),
                            term(-2, 4, {{12, 1}, {72, 2}, {24, -1}, {36, -1}})}),
                  eta_expr({{9, 2}, {72, 1}, {18, -1}, {36, -2}})});
         },
         std::nullopt, 400}));

    add_family_mod24_rows(suite);

    suite.add(make_claim_row({"T49_N_MOD4",
                              "R_4_9(n) == 0 (mod 4), n >= 1 not an odd square", "",
                              {"R_4_9", 1, 0, Int(4), 1, ExceptionRule::OddSquare}, 2000}));

    add_conjecture_row(suite);

    suite.add(make_claim_row({"T49_18N12_MOD96", "R_4_9(18n+12) == 0 (mod 96)",
                              "Alanazi-Munagi-Saikia, Thm 4.1 (20)",
                              {"R_4_9", 18, 12, Int(96), 0, ExceptionRule::None}, 300}));

    suite.add(make_claim_row({"T49_18N15_MOD48", "R_4_9(18n+15) == 0 (mod 48)",
                              "Alanazi-Munagi-Saikia, Thm 4.1 (21)",
                              {"R_4_9", 18, 15, Int(48), 0, ExceptionRule::None}, 300}));

    suite.add(make_claim_row({"T49_24N20_MOD216", "R_4_9(24n+20) == 0 (mod 216)",
                              "Alanazi-Munagi-Saikia, Thm 4.1 (22)",
                              {"R_4_9", 24, 20, Int(216), 0, ExceptionRule::None}, 300}));

    suite.add(make_claim_row({"T49_36N12_MOD32", "R_4_9(36n+12) == 0 (mod 32)", "",
                              {"R_4_9", 36, 12, Int(32), 0, ExceptionRule::None}, 150}));

    suite.add(make_claim_row({"T49_36N30_MOD32", "R_4_9(36n+30) == 0 (mod 32)", "",
                              {"R_4_9", 36, 30, Int(32), 0, ExceptionRule::None}, 150}));

    suite.add(make_extract_identity_row(
        {"T49_6N3_MOD16_INTERMEDIATE",
         "sum R_4_9(6n+3) q^n == 8 f1^3 f3 f6^5/f12^2 (mod 16)", "",
         "R_4_9", 6, 3,
         [](long) {
             return product_expr({scalar_expr(8), tri_cube_expr(),
                                  eta_expr({{3, 1}, {6, 5}, {12, -2}})});
         },
         Int(16), 300}));

    suite.add(make_extract_identity_row(
        {"MOD8_49_STRUCTURE",
         "sum R_4_9(n) q^n == the 15-term theta expansion (mod 8)", "",
         "R_4_9", 1, 0, [](long) { return mod8_structure_rhs(); }, Int(8), 400}));

    add_vanishing_rows(suite);

    // ---- parity across pairs ----

    for (auto [ell, mu] : {std::pair<long, long>{2, 3}, {2, 5}, {3, 5}, {4, 3}, {4, 9}, {8, 3}}) {
        const std::string src = "R_" + std::to_string(ell) + "_" + std::to_string(mu);
        suite.add(make_claim_row({"TLU_EVEN_" + std::to_string(ell) + "_" + std::to_string(mu),
                                  src + "(n) == 0 (mod 2), n >= 1", "",
                                  {src, 1, 0, Int(2), 1, ExceptionRule::None}, 500}));
    }

    // ---- 2-adic spot checks at k = 4 ----

    const Int m14 = Int(1) << 14, m13 = Int(1) << 13, m12 = Int(1) << 12;

    suite.add(make_claim_row({"PPO_2ADIC_K4_32N", "PPO(32n) == 0 (mod 2^14), n >= 1",
                              "Adiga-Dasappa, Thm 1.2",
                              {"PPO", 32, 0, m14, 1, ExceptionRule::None}, 31}));
    suite.add(make_claim_row({"PPO_2ADIC_K4_4N3", "PPO(16(4n+3)) == 0 (mod 2^13)",
                              "Adiga-Dasappa, Thm 1.2",
                              {"PPO", 64, 48, m13, 0, ExceptionRule::None}, 20}));
    suite.add(make_claim_row({"PPO_2ADIC_K4_8N5", "PPO(16(8n+5)) == 0 (mod 2^12)",
                              "Adiga-Dasappa, Thm 1.2",
                              {"PPO", 128, 80, m12, 0, ExceptionRule::None}, 20}));

    suite.add(make_claim_row({"R43_2ADIC_K4_64N", "R_4_3(64n) == 0 (mod 2^14), n >= 1",
                              "via R_4_3(2n) = PPO(n) and Adiga-Dasappa",
                              {"R_4_3", 64, 0, m14, 1, ExceptionRule::None}, 31}));
    suite.add(make_claim_row({"R43_2ADIC_K4_4N3", "R_4_3(32(4n+3)) == 0 (mod 2^13)",
                              "via R_4_3(2n) = PPO(n) and Adiga-Dasappa",
                              {"R_4_3", 128, 96, m13, 0, ExceptionRule::None}, 20}));
    suite.add(make_claim_row({"R43_2ADIC_K4_8N5", "R_4_3(32(8n+5)) == 0 (mod 2^12)",
                              "via R_4_3(2n) = PPO(n) and Adiga-Dasappa",
                              {"R_4_3", 256, 160, m12, 0, ExceptionRule::None}, 20}));

    // ---- negative controls: each must fail, with a witness at a small index ----

    suite.add(make_claim_row({"XFAIL_T43_MOD8_NOEXC",
                              "R_4_3(2n) == 0 (mod 8) WITHOUT the odd-square exception "
                              "(fails at n = 1)",
                              "",
                              {"R_4_3", 2, 0, Int(8), 1, ExceptionRule::None}, 50, true}));

    suite.add(make_claim_row({"XFAIL_T49_N_MOD8",
                              "R_4_9(n) == 0 (mod 8) outside odd squares "
                              "(mod 4 is the true modulus; fails at n = 2)",
                              "",
                              {"R_4_9", 1, 0, Int(8), 1, ExceptionRule::OddSquare}, 50, true}));

    suite.add(make_claim_row({"XFAIL_R23_MOD4",
                              "R_2_3(n) == 0 (mod 4), n >= 1 "
                              "(mod 2 is the true modulus; fails at n = 1)",
                              "",
                              {"R_2_3", 1, 0, Int(4), 1, ExceptionRule::None}, 50, true}));

    return suite;
}

} // namespace

void TheoremSuite::add(TheoremCheck row) {
    if (find(row.id)) throw std::invalid_argument("duplicate check id: " + row.id);
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.id,
                                [](const TheoremCheck& a, const std::string& id) {
                                    return a.id < id;
                                });
    rows_.insert(pos, std::move(row));
}

const TheoremCheck* TheoremSuite::find(std::string_view id) const {
    for (const auto& row : rows_)
        if (row.id == id) return &row;
    return nullptr;
}

CheckReport TheoremSuite::run_check(std::string_view id, SuiteContext& context,
                                    double scale) const {
    const TheoremCheck* row = find(id);
    if (!row) throw UnknownCheck("no check named '" + std::string(id) + "'");
    const auto start = std::chrono::steady_clock::now();
    CheckReport report = row->run(context, scale);
    const auto stop = std::chrono::steady_clock::now();
    report.id = row->id;
    report.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

CheckReport TheoremSuite::run_check(std::string_view id, double scale) const {
    SuiteContext context;
    return run_check(id, context, scale);
}

std::vector<CheckReport> TheoremSuite::run_all(Profile profile, SuiteContext& context) const {
    std::vector<CheckReport> reports;
    reports.reserve(rows_.size());
    for (const auto& row : rows_)
        reports.push_back(run_check(row.id, context, profile_scale(profile)));
    return reports;
}

std::vector<CheckReport> TheoremSuite::run_all(Profile profile) const {
    SuiteContext context;
    return run_all(profile, context);
}

const TheoremSuite& TheoremSuite::standard() {
    static const TheoremSuite suite = build_standard();
    return suite;
}

bool suite_passed(const TheoremSuite& suite, const std::vector<CheckReport>& reports) {
    for (const auto& report : reports) {
        const TheoremCheck* row = suite.find(report.id);
        const bool expected_fail = row && row->expected_fail;
        if (report.passed == expected_fail) return false;
    }
    return true;
}

} // namespace etaq
