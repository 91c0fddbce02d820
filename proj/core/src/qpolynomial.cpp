#include "qgen/qpolynomial.hpp"

#include <sstream>

namespace qgen {

namespace {
const Rational kZero(0);
}

QPolynomial QPolynomial::from_coeffs(std::vector<Rational> coeffs) {
    QPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

QPolynomial QPolynomial::monomial(unsigned k, const Rational& coeff) {
    QPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = coeff;
    }
    return p;
}

const Rational& QPolynomial::coeff(unsigned k) const {
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

QPolynomial QPolynomial::scale_argument(const Rational& s) const {
    QPolynomial p;
    p.coeffs_.reserve(coeffs_.size());
    Rational power(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        p.coeffs_.push_back(coeffs_[k] * power);
        power *= s;
    }
    p.trim();
    return p;
}

QPolynomial QPolynomial::shift_argument(const Rational& c) const {
    // Horner on polynomial coefficients: p(x + c) = sum a_k (x + c)^k.
    QPolynomial out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        out *= QPolynomial::from_coeffs({c, Rational(1)});
        out += QPolynomial(coeffs_[i]);
    }
    return out;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void QPolynomial::assign_constant(const Rational& c) {
    coeffs_.clear();
    if (c != 0) coeffs_.push_back(c);
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool ring_try_invert(const QPolynomial& c, QPolynomial& out) {
    if (c.degree() != 0) return false;  // zero or non-constant
    out = QPolynomial(1 / c.coeff(0));
    return true;
}

Rational poly_eval(const QPolynomial& p, const Rational& x0) {
    Rational acc(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * x0 + p.coeffs()[i];
    }
    return acc;
}

QPolynomial jackson_derivative(const QContext& ctx, const QPolynomial& p) {
    if (p.degree() < 1) return QPolynomial();
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    for (unsigned long n = 1; n <= static_cast<unsigned long>(p.degree()); ++n) {
        out[n - 1] = p.coeff(static_cast<unsigned>(n)) * q_int(ctx, n);
    }
    return QPolynomial::from_coeffs(std::move(out));
}

QPolynomial jackson_integral(const QContext& ctx, const QPolynomial& p) {
    if (p.is_zero()) return QPolynomial();
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
    for (unsigned long n = 0; n <= static_cast<unsigned long>(p.degree()); ++n) {
        out[n + 1] = p.coeff(static_cast<unsigned>(n)) / q_int(ctx, n + 1);
    }
    return QPolynomial::from_coeffs(std::move(out));
}

QPolynomial rubin_derivative(const QContext& ctx, const QPolynomial& p) {
    if (ctx.is_classical()) {
        // The defining quotient degenerates at q = 1; the operator is the
        // classical derivative there.
        return jackson_derivative(ctx, p);
    }
    if (p.degree() < 1) return QPolynomial();
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    for (unsigned long l = 1; l <= static_cast<unsigned long>(p.degree()); ++l) {
        Rational action = q_int(ctx, l);
        if (l % 2 == 0) action *= rat_pow(ctx.q(), -static_cast<long>(l));
        out[l - 1] = p.coeff(static_cast<unsigned>(l)) * action;
    }
    return QPolynomial::from_coeffs(std::move(out));
}

std::vector<std::string> poly_coeff_strings(const QPolynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

std::string poly_to_string(const QPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        const Rational mag = (c > 0 || first) ? c : Rational(-c);
        os << to_string(mag);
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace qgen
