// Test-only oracles, independent of the library implementation paths they
// check: Pascal-recurrence Gaussian binomials, the five-term Rubin quotient,
// a classical generating-function engine on plain vectors, iterated
// (dimension-by-dimension) Euler regularization, and alternating-series
// acceleration in double precision.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "qgen/qpolynomial.hpp"
#include "qgen/rational.hpp"

namespace qgen::test {

// Gaussian binomials by the q-Pascal recurrence
// b[n][k] = q^k b[n-1][k] + b[n-1][k-1].
inline std::vector<std::vector<Rational>> pascal_qbinomial_table(const Rational& q,
                                                                 unsigned nmax) {
    std::vector<std::vector<Rational>> b(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
        b[n].assign(n + 1, Rational(0));
        b[n][0] = 1;
        b[n][n] = 1;
        for (unsigned k = 1; k < n; ++k) {
            b[n][k] = rat_pow(q, static_cast<long>(k)) * b[n - 1][k] + b[n - 1][k - 1];
        }
    }
    return b;
}

// Rubin's quotient evaluated symbolically on f = x^l: substituting the five
// arguments q^{-1}x, -q^{-1}x, qx, -qx, -x gives the numerator bracket; the
// result is the coefficient of x^{l-1}.
inline Rational rubin_quotient_coeff(const Rational& q, unsigned long l) {
    const long e = static_cast<long>(l);
    const Rational f_qinv = rat_pow(1 / q, e);        // f(q^-1 x)
    const Rational f_mqinv = rat_pow(-1 / q, e);      // f(-q^-1 x)
    const Rational f_q = rat_pow(q, e);               // f(q x)
    const Rational f_mq = rat_pow(-q, e);             // f(-q x)
    const Rational f_m = rat_pow(Rational(-1), e);    // f(-x)
    return (f_qinv + f_mqinv - f_q + f_mq - 2 * f_m) / (2 * (1 - q));
}

// Classical higher-order Genocchi polynomials from (2t/(e^t+1))^alpha e^{xt},
// computed with plain vector convolutions. polys[n][k] is the coefficient of
// x^k in G^{(alpha)}_n(x).
inline std::vector<std::vector<Rational>> classical_genocchi_polys(unsigned alpha, unsigned order) {
    const std::size_t len = order + 1;
    // e^t + 1
    std::vector<Rational> denom(len, Rational(0));
    Rational fact(1);
    denom[0] = 2;
    for (std::size_t l = 1; l < len; ++l) {
        fact *= static_cast<long>(l);
        denom[l] = 1 / fact;
    }
    // 1/(e^t + 1) by forward substitution
    std::vector<Rational> inv(len, Rational(0));
    inv[0] = Rational(1) / 2;
    for (std::size_t n = 1; n < len; ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += denom[k] * inv[n - k];
        inv[n] = -acc / 2;
    }
    // (2t/(e^t+1))^alpha
    std::vector<Rational> kernel(len, Rational(0));
    kernel[0] = 1;
    for (unsigned rep = 0; rep < alpha; ++rep) {
        std::vector<Rational> next(len, Rational(0));
        for (std::size_t i = 0; i + 1 < len; ++i) {
            for (std::size_t k = 0; i + 1 + k < len; ++k) {
                next[i + 1 + k] += kernel[i] * 2 * inv[k];
            }
        }
        kernel = std::move(next);
    }
    // multiply by e^{xt}: z^n coefficient is sum_j kernel[n-j] x^j/j!, then
    // scale by n!.
    std::vector<std::vector<Rational>> polys(len);
    Rational nfact(1);
    std::vector<Rational> jfact(len, Rational(1));
    for (std::size_t j = 1; j < len; ++j) jfact[j] = jfact[j - 1] * static_cast<long>(j);
    for (std::size_t n = 0; n < len; ++n) {
        if (n >= 1) nfact *= static_cast<long>(n);
        polys[n].assign(n + 1, Rational(0));
        for (std::size_t j = 0; j <= n; ++j) {
            polys[n][j] = kernel[n - j] / jfact[j] * nfact;
        }
        while (!polys[n].empty() && polys[n].back() == 0) polys[n].pop_back();
    }
    return polys;
}

// One Euler-regularization pass in polynomial form:
// R(u) = sum_k (-1)^k (Delta^k p)(u) / 2^{k+1}, the Abel value of
// sum_{s>=0} (-1)^s p(u+s) as a polynomial in the shift u.
inline QPolynomial euler_reg_poly(const QPolynomial& p) {
    QPolynomial result;
    QPolynomial diff = p;
    Rational denom(2);
    long sign = 1;
    const int d = std::max(0, p.degree());
    for (int k = 0; k <= d; ++k) {
        result += diff * (Rational(sign) / denom);
        diff = diff.shift_argument(Rational(1)) - diff;
        denom *= 2;
        sign = -sign;
    }
    return result;
}

// Dimension-by-dimension regularization of the alpha-fold alternating sum of
// (qx + q(l_1+...+l_alpha))^n; the brute-force counterpart of the collapsed
// composition-weighted single sum.
inline Rational iterated_multisum_regularized(const QContext& ctx, unsigned n, const Rational& x,
                                              unsigned alpha) {
    QPolynomial summand(1);
    const QPolynomial linear = QPolynomial::from_coeffs({ctx.q() * x, ctx.q()});
    for (unsigned i = 0; i < n; ++i) summand *= linear;
    for (unsigned dim = 0; dim < alpha; ++dim) summand = euler_reg_poly(summand);
    return rat_pow(q_int(ctx, 2), static_cast<long>(alpha)) * poly_eval(summand, Rational(0));
}

// Cohen-Rodriguez Villegas-Zagier acceleration for sum_{k>=0} (-1)^k a_k.
inline double cvz_alternating_sum(const std::function<double(int)>& a, int n) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    return s / d;
}

// Abel mean sum_{l>=0} (-1)^l p(l) r^l for deg p <= 4, through the closed
// forms of S_k(r) = sum_l (-1)^l l^k r^l (term-by-term summation near r = 1
// cancels catastrophically in doubles; these rational functions do not).
// S_0 = 1/(1+r), S_{k+1} = r dS_k/dr.
inline double abel_mean(const QPolynomial& p, double r) {
    const double u = 1.0 + r;
    const double s[5] = {
        1.0 / u,
        -r / (u * u),
        (r * r - r) / (u * u * u),
        (-r * r * r + 4 * r * r - r) / (u * u * u * u),
        (r * r * r * r - 11 * r * r * r + 11 * r * r - r) / (u * u * u * u * u),
    };
    if (p.degree() > 4) throw DomainError("abel_mean oracle covers degree <= 4 only");
    double sum = 0.0;
    for (int k = 0; k <= p.degree(); ++k) {
        sum += p.coeff(static_cast<unsigned>(k)).get_d() * s[k];
    }
    return sum;
}

// Deterministic random rationals and polynomials for property tests.
class Rng {
public:
    explicit Rng(unsigned long seed) : gen_(seed) {}

    Rational rational(bool nonzero = false) {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        long n = num(gen_);
        while (nonzero && n == 0) n = num(gen_);
        Rational r(n, den(gen_));
        r.canonicalize();
        return r;
    }

    QPolynomial poly(unsigned max_degree, bool nonzero_coeffs = false) {
        std::uniform_int_distribution<unsigned> deg(0, max_degree);
        const unsigned d = deg(gen_);
        std::vector<Rational> coeffs;
        coeffs.reserve(d + 1);
        for (unsigned k = 0; k <= d; ++k) coeffs.push_back(rational(nonzero_coeffs));
        return QPolynomial::from_coeffs(std::move(coeffs));
    }

    std::mt19937_64& gen() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace qgen::test
