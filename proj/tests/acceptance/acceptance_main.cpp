// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Ranges and moduli are
// pinned here on purpose -- nothing is read from configuration.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "etaq/congruence.hpp"
#include "etaq/eta.hpp"
#include "etaq/expr.hpp"
#include "etaq/identities.hpp"
#include "etaq/oracle.hpp"
#include "etaq/theorems.hpp"

using namespace etaq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string& detail)> run;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = "failed: " + what;
    return ok;
}

bool claim_holds(SuiteContext& ctx, const std::string& source, long t, long r,
                 long m, long n0, ExceptionRule exc, long terms, std::string& detail) {
    const CongruenceClaim claim{source, t, r, Int(m), n0, exc};
    const CheckReport report = check_claim(claim, terms, ctx.provider());
    if (!report.passed) {
        std::ostringstream os;
        os << "failed: " << source << "(" << t << "n+" << r << ") mod " << m
           << " at index " << report.witness->index << " residue "
           << report.witness->actual.get_str();
        detail = os.str();
    }
    return report.passed;
}

std::vector<Criterion> build_criteria() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "identity registry verifies to order 400 in under 10s",
                        [](std::string& detail) {
        const auto start = Clock::now();
        const auto& registry = IdentityRegistry::standard();
        bool ok = expect(registry.rows().size() == 20, "registry has 20 rows", detail);
        for (const auto& report : verify_all_identities(registry, 400))
            ok &= expect(report.passed, "identity " + report.id, detail);
        const long modpk[4][3] = {{3, 1, 1}, {2, 3, 1}, {2, 1, 3}, {3, 2, 1}};
        for (const auto& row : modpk)
            ok &= expect(verify_modpk_family(row[0], row[1], row[2], 400).passed,
                         "Euler power congruence", detail);
        const double elapsed = seconds_since(start);
        ok &= expect(elapsed < 10.0, "runtime under 10s", detail);
        if (ok) {
            std::ostringstream os;
            os << "24 rows in " << static_cast<long>(elapsed * 1000) << "ms";
            detail = os.str();
        }
        return ok;
    }});

    criteria.push_back({2, "R_2_3: internal congruence mod 3 and the mod-6 ladder",
                        [](std::string& detail) {
        SuiteContext ctx;
        const Series r23 = ctx.source("R_2_3", 10001);
        bool ok = true;

        // R_2_3(27n) == R_2_3(3n) (mod 3) for 0 <= n < 200
        const Series a = extract_progression(r23, 27, 0);
        const Series b = extract_progression(r23, 3, 0);
        ok &= expect(eq_up_to(truncate(a, 200), truncate(b, 200), 200, Int(3)).passed,
                     "R_2_3(27n) == R_2_3(3n) mod 3, n < 200", detail);

        // R_2_3(3^b (3n+2)) == 0 (mod 6) for b <= 4, indices <= 10000
        long step = 3;
        for (long beta = 1; beta <= 4; ++beta) {
            step *= 3;
            const long residue = 2 * (step / 3);
            const long terms = (10000 - residue) / step + 1;
            ok &= claim_holds(ctx, "R_2_3", step, residue, 6, 0, ExceptionRule::None,
                              terms, detail);
        }
        return ok;
    }});

    criteria.push_back({3, "R_4_3(2n): mod 4, mod 8 outside odd squares, residue 4 on them",
                        [](std::string& detail) {
        SuiteContext ctx;
        bool ok = claim_holds(ctx, "R_4_3", 2, 0, 4, 1, ExceptionRule::None, 1000, detail);
        ok &= claim_holds(ctx, "R_4_3", 2, 0, 8, 1, ExceptionRule::OddSquare, 1000, detail);

        const Series r43 = ctx.source("R_4_3", 2000);
        for (long m = 1; m * m < 1000; m += 2) {
            const Int residue = r43.coeff(2 * m * m) % 8;
            ok &= expect(residue == 4,
                         "R_4_3(2*" + std::to_string(m * m) + "^2...) == 4 mod 8", detail);
        }
        return ok;
    }});

    criteria.push_back({4, "R_4_3(2n) equals the odd-parts overpartition pair count",
                        [](std::string& detail) {
        SuiteContext ctx;
        const Series r43 = ctx.source("R_4_3", 2000);
        const Series even_part = extract_progression(r43, 2, 0);
        bool ok = expect(eq_up_to(truncate(even_part, 1000), gen_ppo(1000), 1000).passed,
                         "series-vs-series to n < 1000", detail);
        for (long n = 0; n <= 40; ++n)
            ok &= expect(count_ppo(n) == even_part.coeff(n),
                         "series-vs-oracle at n = " + std::to_string(n), detail);
        return ok;
    }});

    criteria.push_back({5, "R_4_9: mod 12 on 4n, mod 8 on 3n, the mod-24 family, mod 4",
                        [](std::string& detail) {
        SuiteContext ctx;
        bool ok = claim_holds(ctx, "R_4_9", 4, 0, 12, 1, ExceptionRule::None, 1000, detail);
        ok &= claim_holds(ctx, "R_4_9", 3, 0, 8, 1, ExceptionRule::None, 1000, detail);
        for (long k : {3, 4, 5, 6, 8, 12})
            for (long r : quadratic_nonresidues(k))
                ok &= claim_holds(ctx, "R_4_9", 4 * k, 4 * r, 24, 0, ExceptionRule::None,
                                  250, detail);
        ok &= claim_holds(ctx, "R_4_9", 1, 0, 4, 1, ExceptionRule::OddSquare, 2000, detail);
        return ok;
    }});

    criteria.push_back({6, "R_4_9: mod 96 / 48 / 216 progressions and the mod-32 split",
                        [](std::string& detail) {
        SuiteContext ctx;
        bool ok = claim_holds(ctx, "R_4_9", 18, 12, 96, 0, ExceptionRule::None, 300, detail);
        ok &= claim_holds(ctx, "R_4_9", 18, 15, 48, 0, ExceptionRule::None, 300, detail);
        ok &= claim_holds(ctx, "R_4_9", 24, 20, 216, 0, ExceptionRule::None, 300, detail);
        ok &= claim_holds(ctx, "R_4_9", 36, 12, 32, 0, ExceptionRule::None, 150, detail);
        ok &= claim_holds(ctx, "R_4_9", 36, 30, 32, 0, ExceptionRule::None, 150, detail);
        return ok;
    }});

    criteria.push_back({7, "vanishing arguments for G and F mod 3 to order 600",
                        [](std::string& detail) {
        const ExprPtr g_expr =
            sum_expr({eta_expr({{1, 8}, {2, 8}}),
                      product_expr({scalar_expr(-1), qpow_expr(1), eta_expr({{2, 24}})}),
                      product_expr({scalar_expr(-1), eta_expr({{1, 24}})})});
        const ExprPtr f_expr =
            sum_expr({eta_expr({{2, 28}}),
                      product_expr({qpow_expr(1), eta_expr({{1, 8}, {2, 4}, {4, 16}})}),
                      product_expr({scalar_expr(-1), eta_expr({{1, 8}, {2, 8}, {4, 8}})})});

        const Series g = eval_expr(g_expr, 600);
        bool ok = expect(verify_vanishing_via_self_similarity(g, 1, 2, Int(3), 600).passed,
                         "G == qG(q^2) == 0 (mod 3)", detail);

        const Series f = eval_expr(f_expr, 600);
        const Series rhs = eval_expr(
            product_expr({scalar_expr(-1), eta_expr({{2, 4}}), subst_expr(g_expr, 2)}), 600);
        ok &= expect(eq_up_to(f, rhs, 600, Int(3)).passed, "F == -f2^4 G(q^2) (mod 3)",
                     detail);
        ok &= expect(eq_up_to(f, Series::zero(600), 600, Int(3)).passed, "F == 0 (mod 3)",
                     detail);
        return ok;
    }});

    criteria.push_back({8, "2-adic spot checks at k = 4 and their even-index mirrors",
                        [](std::string& detail) {
        SuiteContext ctx;
        bool ok = claim_holds(ctx, "PPO", 32, 0, 16384, 1, ExceptionRule::None, 31, detail);
        ok &= claim_holds(ctx, "PPO", 64, 48, 8192, 0, ExceptionRule::None, 20, detail);
        ok &= claim_holds(ctx, "PPO", 128, 80, 4096, 0, ExceptionRule::None, 20, detail);
        ok &= claim_holds(ctx, "R_4_3", 64, 0, 16384, 1, ExceptionRule::None, 31, detail);
        ok &= claim_holds(ctx, "R_4_3", 128, 96, 8192, 0, ExceptionRule::None, 20, detail);
        ok &= claim_holds(ctx, "R_4_3", 256, 160, 4096, 0, ExceptionRule::None, 20, detail);
        return ok;
    }});

    criteria.push_back({9, "combinatorial oracle agrees with every generating function",
                        [](std::string& detail) {
        bool ok = true;
        const Series overp = expand_eta_quotient(EtaQuotient{{1, -2}, {2, 1}}, 41);
        for (long n = 0; n <= 40; ++n)
            ok &= expect(count_overpartitions(n, PartsPredicate::all()) == overp.coeff(n),
                         "overpartitions at n = " + std::to_string(n), detail);
        ok &= expect(count_overpartitions(4, PartsPredicate::all()) == 14 &&
                         count_overpartitions_enumerated(4, PartsPredicate::all()) == 14 &&
                         overp.coeff(4) == 14,
                     "14 overpartitions of 4 via every path", detail);

        for (auto [ell, mu] :
             {std::pair<long, long>{2, 3}, {2, 5}, {3, 5}, {4, 3}, {4, 9}}) {
            const Series series = gen_lmu_regular(ell, mu, 41);
            for (long n = 0; n <= 40; ++n)
                ok &= expect(count_lmu_regular(ell, mu, n) == series.coeff(n),
                             "regular pair (" + std::to_string(ell) + "," +
                                 std::to_string(mu) + ") at n = " + std::to_string(n),
                             detail);
        }

        const Series ppo = gen_ppo(41);
        for (long n = 0; n <= 40; ++n)
            ok &= expect(count_ppo(n) == ppo.coeff(n),
                         "odd-parts pairs at n = " + std::to_string(n), detail);
        return ok;
    }});

    criteria.push_back({10, "performance: order-10000 expansion < 5s, default suite < 120s",
                        [](std::string& detail) {
        const auto t0 = Clock::now();
        const Series r49 = expand_eta_quotient(lmu_regular_quotient(4, 9), 10000);
        const double expand_seconds = seconds_since(t0);
        bool ok = expect(r49.coeff(0) == 1, "expansion sanity", detail);
        ok &= expect(expand_seconds < 5.0, "expansion under 5s", detail);

        const auto t1 = Clock::now();
        const auto& suite = TheoremSuite::standard();
        const auto reports = suite.run_all(Profile::Default);
        const double suite_seconds = seconds_since(t1);
        ok &= expect(suite_passed(suite, reports), "default suite passes", detail);
        ok &= expect(suite_seconds < 120.0, "default suite under 120s", detail);
        if (ok) {
            std::ostringstream os;
            os.setf(std::ios::fixed);
            os.precision(2);
            os << "expand " << expand_seconds << "s, suite " << suite_seconds << "s";
            detail = os.str();
        }
        return ok;
    }});

    criteria.push_back({11, "negative controls fail with witnesses at index <= 10",
                        [](std::string& detail) {
        const auto& suite = TheoremSuite::standard();
        SuiteContext ctx;
        bool ok = true;
        long controls = 0;
        for (const auto& row : suite.rows()) {
            if (!row.expected_fail) continue;
            ++controls;
            const CheckReport report = suite.run_check(row.id, ctx);
            ok &= expect(!report.passed, row.id + " must fail", detail);
            ok &= expect(report.witness.has_value() && report.witness->index <= 10,
                         row.id + " witness at index <= 10", detail);
        }
        ok &= expect(controls == 3, "exactly three controls", detail);
        return ok;
    }});

    return criteria;
}

} // namespace

int main() {
    const auto criteria = build_criteria();
    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion.number,
                    criterion.title.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) std::printf("all %zu criteria passed\n", criteria.size());
    else std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
