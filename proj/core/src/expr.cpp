#include "etaq/expr.hpp"

#include <stdexcept>
#include <utility>

namespace etaq {

namespace {

std::shared_ptr<Expr> make(Expr::Kind k) { return std::make_shared<Expr>(k); }

} // namespace

ExprPtr eta_expr(EtaQuotient spec) {
    auto e = make(Expr::Kind::EtaQ);
    e->eta = std::move(spec);
    return e;
}

ExprPtr eta_expr(std::initializer_list<std::pair<long, long>> factors) {
    return eta_expr(EtaQuotient(factors));
}

ExprPtr phi_expr(int sign, long scale) {
    auto e = make(Expr::Kind::PhiTheta);
    e->sign = sign;
    e->scale = scale;
    return e;
}

ExprPtr tri_cube_expr(long scale) {
    auto e = make(Expr::Kind::TriangularCube);
    e->scale = scale;
    return e;
}

ExprPtr scalar_expr(Int c) {
    auto e = make(Expr::Kind::IntScalar);
    e->scalar = std::move(c);
    return e;
}

ExprPtr scalar_expr(long c) { return scalar_expr(Int(c)); }

ExprPtr qpow_expr(long s) {
    if (s < 0) throw std::invalid_argument("qpow_expr: exponent must be nonnegative");
    auto e = make(Expr::Kind::QPower);
    e->qpow = s;
    return e;
}

ExprPtr sum_expr(std::vector<ExprPtr> terms) {
    auto e = make(Expr::Kind::Sum);
    e->children = std::move(terms);
    return e;
}

ExprPtr product_expr(std::vector<ExprPtr> factors) {
    auto e = make(Expr::Kind::Product);
    e->children = std::move(factors);
    return e;
}

ExprPtr power_expr(ExprPtr base, long exp) {
    auto e = make(Expr::Kind::Power);
    e->children = {std::move(base)};
    e->exponent = exp;
    return e;
}

ExprPtr subst_expr(ExprPtr inner, long t) {
    if (t < 1) throw std::invalid_argument("subst_expr: t must be >= 1");
    auto e = make(Expr::Kind::Subst);
    e->children = {std::move(inner)};
    e->scale = t;
    return e;
}

ExprPtr alt_sign_expr(ExprPtr inner) {
    auto e = make(Expr::Kind::AltSign);
    e->children = {std::move(inner)};
    return e;
}

Series eval_expr(const ExprPtr& e, long N) {
    if (!e) throw std::invalid_argument("eval_expr: null expression");
    if (N < 1) throw std::invalid_argument("eval_expr: order must be >= 1");

    switch (e->kind) {
    case Expr::Kind::EtaQ:
        return expand_eta_quotient(e->eta, N);
    case Expr::Kind::PhiTheta:
        return theta_phi_general(e->sign, e->scale, N);
    case Expr::Kind::TriangularCube:
        return triangular_cube_scaled(e->scale, N);
    case Expr::Kind::IntScalar:
        return Series::constant(e->scalar, N);
    case Expr::Kind::QPower:
        return Series::monomial(e->qpow, N);
    case Expr::Kind::Sum: {
        Series acc = Series::zero(N);
        for (const auto& child : e->children) acc = add(acc, eval_expr(child, N));
        return acc;
    }
    case Expr::Kind::Product: {
        Series acc = Series::one(N);
        for (const auto& child : e->children) acc = mul(acc, eval_expr(child, N));
        return acc;
    }
    case Expr::Kind::Power:
        return pow(eval_expr(e->children.front(), N), e->exponent);
    case Expr::Kind::Subst: {
        const long inner = (N + e->scale - 1) / e->scale;
        return truncate(substitute_power(eval_expr(e->children.front(), inner), e->scale), N);
    }
    case Expr::Kind::AltSign:
        return alternate_signs(eval_expr(e->children.front(), N));
    }
    throw std::logic_error("eval_expr: unhandled node kind");
}

} // namespace etaq
