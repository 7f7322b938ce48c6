#include <doctest.h>

#include <algorithm>

#include "etaq/congruence.hpp"
#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/expr.hpp"

using namespace etaq;

namespace {

SeriesProvider lmu_provider() {
    return [](std::string_view id, long min_prec) -> Series {
        if (id == "R_2_3") return gen_lmu_regular(2, 3, min_prec);
        if (id == "R_4_3") return gen_lmu_regular(4, 3, min_prec);
        throw UnknownCheck("unexpected source in test");
    };
}

} // namespace

TEST_CASE("check_claim") {
    // R_2_3(9n+6) == 0 (mod 6)
    const CongruenceClaim cor23{"R_2_3", 9, 6, Int(6), 0, ExceptionRule::None};
    CHECK(check_claim(cor23, 200, lmu_provider()).passed);

    // everything vanishes mod 1
    const CongruenceClaim vacuous{"R_2_3", 1, 0, Int(1), 0, ExceptionRule::None};
    CHECK(check_claim(vacuous, 50, lmu_provider()).passed);

    // without the odd-square exception the mod-8 claim breaks at R_4_3(2*1) = 4
    const CongruenceClaim no_exception{"R_4_3", 2, 0, Int(8), 1, ExceptionRule::None};
    const CheckReport broken = check_claim(no_exception, 100, lmu_provider());
    CHECK(!broken.passed);
    REQUIRE(broken.witness.has_value());
    CHECK(broken.witness->index == 2);
    CHECK(broken.witness->actual == 4);

    // with the exception it holds
    const CongruenceClaim with_exception{"R_4_3", 2, 0, Int(8), 1, ExceptionRule::OddSquare};
    CHECK(check_claim(with_exception, 100, lmu_provider()).passed);
}

TEST_CASE("check_claim precision handling") {
    const CongruenceClaim claim{"short", 3, 1, Int(2), 0, ExceptionRule::None};
    const auto short_provider = [](std::string_view, long) { return Series::one(10); };
    CHECK_THROWS_AS(check_claim(claim, 100, short_provider), InsufficientPrecision);
    CHECK(check_claim_against(claim, 3, reduce_mod(Series::zero(10), Int(2))).passed);
}

TEST_CASE("check_claim agrees with a direct reduced scan") {
    const Series source = gen_lmu_regular(2, 3, 200);
    const Series reduced = reduce_mod(source, Int(6));
    const CongruenceClaim claim{"R_2_3", 9, 6, Int(6), 0, ExceptionRule::None};
    const CheckReport fast_path = check_claim_against(claim, 21, source);

    bool slow_path = true;
    for (long n = 0; n < 21; ++n)
        if (sgn(reduced.coeff(9 * n + 6)) != 0) slow_path = false;
    CHECK(fast_path.passed == slow_path);
}

TEST_CASE("self-similarity vanishing") {
    // G = f1^8 f2^8 - q f2^24 - f1^24 has G == qG(q^2) == 0 (mod 3)
    const ExprPtr g_expr =
        sum_expr({eta_expr({{1, 8}, {2, 8}}),
                  product_expr({scalar_expr(-1), qpow_expr(1), eta_expr({{2, 24}})}),
                  product_expr({scalar_expr(-1), eta_expr({{1, 24}})})});
    const Series g = eval_expr(g_expr, 600);
    CHECK(verify_vanishing_via_self_similarity(g, 1, 2, Int(3), 600).passed);

    CHECK(verify_vanishing_via_self_similarity(Series::zero(100), 1, 2, Int(3), 100).passed);
    CHECK(verify_vanishing_via_self_similarity(Series::zero(100), 3, 5, Int(7), 100).passed);

    // constant 1: hypothesis fails immediately at the constant term
    const CheckReport bad = verify_vanishing_via_self_similarity(Series::one(64), 1, 2,
                                                                 Int(3), 64);
    CHECK(!bad.passed);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->index == 0);

    CHECK_THROWS_AS(verify_vanishing_via_self_similarity(Series::one(10), 1, 2, Int(3), 20),
                    InsufficientPrecision);
}

TEST_CASE("quadratic_nonresidues") {
    CHECK(quadratic_nonresidues(4) == std::vector<long>{2, 3});
    CHECK(quadratic_nonresidues(2).empty());

    const auto q24 = quadratic_nonresidues(24);
    CHECK(std::find(q24.begin(), q24.end(), 17) != q24.end());

    // nonresidues and residues of squares partition [0, k)
    for (long k : {3L, 4L, 5L, 6L, 8L, 12L, 24L}) {
        std::vector<bool> covered(static_cast<std::size_t>(k), false);
        for (long m = 0; m < k; ++m) covered[static_cast<std::size_t>((m * m) % k)] = true;
        const auto nonresidues = quadratic_nonresidues(k);
        for (long r : nonresidues) {
            CHECK(!covered[static_cast<std::size_t>(r)]);
            covered[static_cast<std::size_t>(r)] = true;
        }
        CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("square predicates") {
    CHECK(is_odd_square(9));
    CHECK(is_odd_square(1));
    CHECK(is_odd_square(225));
    CHECK(!is_odd_square(4));
    CHECK(!is_odd_square(2));
    CHECK(!is_odd_square(0));

    for (long n = 0; n <= 2000; ++n) {
        const Int root = isqrt(Int(n));
        const bool expected = (n % 2 == 1) && root * root == n;
        CHECK(is_odd_square(n) == expected);
    }

    const Int big("123456789123456789123456789");
    CHECK(is_square(big * big));
    CHECK(!is_square(big * big + 1));
    CHECK(isqrt(big * big + big) == big);
}

TEST_CASE("triangular numbers avoid residue 2 mod 3") {
    CHECK(triangular_residue_check(1000).passed);
    const long first_four[4] = {0, 1, 3, 6};
    for (long m = 0; m < 4; ++m) CHECK(first_four[m] % 3 != 2);
}
