#include <doctest.h>

#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/oracle.hpp"

using namespace etaq;

TEST_CASE("count_overpartitions") {
    CHECK(count_overpartitions(4, PartsPredicate::all()) == 14);
    CHECK(count_overpartitions(0, PartsPredicate::all()) == 1);
    CHECK(count_overpartitions(0, PartsPredicate::odd()) == 1);
    CHECK(count_overpartitions(6, PartsPredicate::not_divisible(2, 3)) == 6);

    CHECK_THROWS_AS(count_overpartitions(41, PartsPredicate::all()), TooLarge);
    const OracleConfig wide{80};
    CHECK(count_overpartitions(41, PartsPredicate::all(), wide) > 0);
}

TEST_CASE("count_lmu_regular") {
    CHECK(count_lmu_regular(2, 3, 5) == 4);  // (5), (5bar), (1^5), (1bar 1^4)
    CHECK(count_lmu_regular(7, 5, 0) == 1);
    CHECK(count_lmu_regular(4, 3, 2) == 4);  // (2), (2bar), (1 1), (1bar 1)
    CHECK_THROWS_AS(count_lmu_regular(2, 4, 3), NotCoprime);
    CHECK_THROWS_AS(count_lmu_regular(2, 3, 50), TooLarge);
}

TEST_CASE("count_ppo") {
    CHECK(count_ppo(0) == 1);
    CHECK(count_ppo(1) == 4);
    CHECK(count_ppo(2) == 8);
}

TEST_CASE("weighted count equals one-by-one enumeration") {
    const PartsPredicate predicates[] = {PartsPredicate::all(), PartsPredicate::odd(),
                                         PartsPredicate::not_divisible(2, 3)};
    for (const auto& parts : predicates)
        for (long n = 0; n <= 25; ++n) {
            INFO(parts.to_string(), " n=", n);
            CHECK(count_overpartitions(n, parts) == count_overpartitions_enumerated(n, parts));
        }
}

TEST_CASE("oracle matches the series engine") {
    const Series overp = expand_eta_quotient(EtaQuotient{{1, -2}, {2, 1}}, 41);
    for (long n = 0; n <= 40; ++n)
        CHECK(count_overpartitions(n, PartsPredicate::all()) == overp.coeff(n));

    for (auto [ell, mu] : {std::pair<long, long>{2, 3}, {2, 5}, {3, 5}, {4, 3}, {4, 9}}) {
        const Series series = gen_lmu_regular(ell, mu, 41);
        for (long n = 0; n <= 40; ++n) {
            INFO("(", ell, ",", mu, ") n=", n);
            CHECK(count_lmu_regular(ell, mu, n) == series.coeff(n));
        }
    }

    const Series ppo = gen_ppo(41);
    for (long n = 0; n <= 40; ++n) CHECK(count_ppo(n) == ppo.coeff(n));
}

TEST_CASE("even R_4_3 values equal odd-parts pair counts, by counting alone") {
    const OracleConfig wide{80};
    for (long n = 0; n <= 40; ++n)
        CHECK(count_lmu_regular(4, 3, 2 * n, wide) == count_ppo(n, wide));
}
