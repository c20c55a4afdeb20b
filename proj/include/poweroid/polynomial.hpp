#pragma once

#include "poweroid/rational.hpp"

#include <vector>

namespace poweroid {

/// Dense univariate polynomial over Rational; coeff(m) multiplies x^m.
/// Always normalized: no trailing zeros, the zero polynomial is {0}.
class Polynomial {
public:
    Polynomial() : coeffs_{Rational(0)} {}
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial x();
    /// x^n
    static Polynomial power(int n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    Rational coeff(int m) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& at) const;
    Polynomial derivative() const;
    /// p(x + h)
    Polynomial shifted(const Rational& h) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "x^3 - 3*x^2 + 2*x".
    std::string str() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace poweroid
