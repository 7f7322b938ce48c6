#include <doctest.h>

#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/expr.hpp"
#include "etaq/quotient_grammar.hpp"

using namespace etaq;

namespace {

Series eval_text(std::string_view text, long N) {
    return eval_expr(parse_quotient_expr(text), N);
}

} // namespace

TEST_CASE("quotient grammar accepts the documented forms") {
    const Series overp = expand_eta_quotient(EtaQuotient{{1, -2}, {2, 1}}, 40);
    CHECK(eq_up_to(eval_text("f2/f1^2", 40), overp, 40).passed);
    CHECK(eq_up_to(eval_text("  f2 / f1 ^ 2 ", 40), overp, 40).passed);

    CHECK(eq_up_to(eval_text("phi", 64), theta_phi(64), 64).passed);
    CHECK(eq_up_to(eval_text("phineg", 64), theta_phi_neg(64), 64).passed);
    CHECK(eq_up_to(eval_text("phi/phineg", 64), gen_ppo(64), 64).passed);

    CHECK(eq_up_to(eval_text("f1^0", 8), Series::one(8), 8).passed);
    CHECK(eq_up_to(eval_text("f1^-1", 32),
                   invert(euler_series(1, 32)), 32).passed);
    CHECK(eq_up_to(eval_text("f1*f1*f1", 64), triangular_cube(64), 64).passed);

    // exponents merge across mentions: f2^3 * f2^-3 cancels
    CHECK(eq_up_to(eval_text("f2^3*f2^-3", 16), Series::one(16), 16).passed);

    const Series r49 = gen_lmu_regular(4, 9, 32);
    CHECK(eq_up_to(eval_text("f2*f4^2*f9^2*f72/f1^2/f8/f18/f36^2", 32), r49, 32).passed);
}

TEST_CASE("quotient grammar rejects malformed input with a position") {
    for (const char* bad : {"", "f0", "g1", "f1**2", "f1^", "f1*", "phi phi", "f", "^2", "f2//f1"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_quotient_expr(bad), ParseError);
    }
    try {
        parse_quotient_expr("f2/x1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}
