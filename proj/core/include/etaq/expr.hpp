#pragma once

#include <memory>
#include <vector>

#include "etaq/eta.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// Expression tree describing one side of a series identity. Leaves are the
/// named constructions (eta quotients, theta series, the triangular-number
/// cube, scalars, powers of q); interior nodes combine them. Trees are
/// immutable and shared by pointer.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind {
        EtaQ,           // prod f_k^{e_k}
        PhiTheta,       // phi(sign * q^scale)
        TriangularCube, // f_1^3 triangular-sum expansion, q -> q^scale
        IntScalar,      // integer constant
        QPower,         // q^s
        Sum,
        Product,
        Power,          // child ^ exponent (negative needs a unit)
        Subst,          // child with q -> q^scale
        AltSign,        // child with q -> -q
    };

    Kind kind;
    EtaQuotient eta;              // EtaQ
    int sign = 1;                 // PhiTheta
    long scale = 1;               // PhiTheta, TriangularCube, Subst
    Int scalar;                   // IntScalar
    long qpow = 0;                // QPower
    long exponent = 1;            // Power
    std::vector<ExprPtr> children;

    explicit Expr(Kind k) : kind(k) {}
};

// Leaf constructors.
ExprPtr eta_expr(EtaQuotient spec);
ExprPtr eta_expr(std::initializer_list<std::pair<long, long>> factors);
ExprPtr phi_expr(int sign = 1, long scale = 1);
ExprPtr tri_cube_expr(long scale = 1);
ExprPtr scalar_expr(Int c);
ExprPtr scalar_expr(long c);
ExprPtr qpow_expr(long s);

// Combinators.
ExprPtr sum_expr(std::vector<ExprPtr> terms);
ExprPtr product_expr(std::vector<ExprPtr> factors);
ExprPtr power_expr(ExprPtr base, long e);
ExprPtr subst_expr(ExprPtr inner, long t);
ExprPtr alt_sign_expr(ExprPtr inner);

/// Evaluate to a series of exactly N tracked coefficients, every one exact.
/// Subst nodes evaluate their operand at ceil(N / t) and re-expand, so the
/// requested order is always met. Power with a negative exponent throws
/// NotAUnit when the base has a non-unit constant term.
Series eval_expr(const ExprPtr& e, long N);

} // namespace etaq
