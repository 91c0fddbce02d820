#pragma once

#include <optional>

#include "qgen/genocchi.hpp"
#include "qgen/qgamma.hpp"

namespace qgen {

// Abel/Euler value of sum_{l>=0} (-1)^l p(l) for a polynomial p in l:
// the finite Euler transform sum_{k=0..deg p} (-1)^k (Delta^k p)(0)/2^{k+1}.
// Exact, and linear in p.
Rational euler_regularized_altsum(const QPolynomial& p);

// The q-Hurwitz-zeta type sum at z = -n, regularized: [2]_q^alpha times the
// Euler-regularized sum over s of (-1)^s C(s+alpha-1, alpha-1) (qx+qs)^n.
// The alpha-fold multi-index sum collapses along s = l_1+...+l_alpha with
// the composition-count weight.
Rational qzeta_neg_int(const QContext& ctx, unsigned n, const Rational& x, unsigned alpha);

// Negative-integer interpolation record: lhs is the regularized zeta value,
// rhs is q^{-n} G^{(alpha)}_{n+alpha}(x) / ([alpha]_q! qbinom(n+alpha, alpha)).
// Both exact; equal iff they match exactly. Asserted only at q = 1.
struct ZetaReport {
    unsigned n = 0;
    Rational x;
    unsigned alpha = 1;
    Rational q;
    Rational lhs;
    Rational rhs;
    bool equal = false;
    std::optional<Rational> ratio;  // lhs/rhs when rhs != 0
};

ZetaReport interpolation_check(const QContext& ctx, unsigned n, const Rational& x, unsigned alpha);

// Convergent regime z > 0, x > 0: the collapsed alternating sum evaluated
// with Euler-transform acceleration; relative error <= tol.
Eval qzeta_numeric_ex(const FloatContext& fctx, const Real& z, const Real& x, unsigned alpha);
Real qzeta_numeric(const FloatContext& fctx, const Real& z, const Real& x, unsigned alpha);

}  // namespace qgen
