#include "poweroid/polynomial.hpp"

#include <stdexcept>

namespace poweroid {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    normalize();
}

void Polynomial::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return power(1); }

Polynomial Polynomial::power(int n) {
    if (n < 0) throw std::domain_error("negative power");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c.back() = Rational(1);
    return Polynomial(std::move(c));
}

Rational Polynomial::coeff(int m) const {
    if (m < 0) throw std::out_of_range("negative coefficient index");
    if (m > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(m)];
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t m = 1; m < coeffs_.size(); ++m)
        c[m - 1] = Rational(BigInt(m)) * coeffs_[m];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(const Rational& h) const {
    // Horner in (x + h).
    Polynomial base({h, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * base + Polynomial::constant(*it);
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int m = degree(); m >= 0; --m) {
        const Rational& c = coeffs_[static_cast<std::size_t>(m)];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const bool neg = c < Rational(0);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        Rational mag = neg ? -c : c;
        if (m == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += m == 1 ? "x" : "x^" + std::to_string(m);
        }
    }
    return out;
}

}  // namespace poweroid
