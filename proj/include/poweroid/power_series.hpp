#pragma once

#include "poweroid/polynomial.hpp"

#include <vector>

namespace poweroid {

/// Truncated formal power series over Rational. coeff(m) multiplies t^m
/// and is trusted through t^order() inclusive; trailing zeros are stored
/// explicitly because they assert the coefficient is exactly zero.
///
/// Binary operations return the minimum of the input orders; equality
/// compares coefficientwise up to the minimum order.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries zero(int order);
    static PowerSeries one(int order);
    /// The series t.
    static PowerSeries identity(int order);
    /// Exact embedding of a polynomial; order must cover the degree.
    static PowerSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int m) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    PowerSeries truncated(int new_order) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<Rational> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const Rational& c);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return sub(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }
inline PowerSeries operator*(const Rational& c, const PowerSeries& a) { return scale(a, c); }

/// Termwise d/dt; drops one order of trust.
PowerSeries derivative(const PowerSeries& a);

/// Multiplicative inverse; requires a nonzero constant term.
PowerSeries reciprocal(const PowerSeries& a);

/// outer(inner(t)); inner must have zero constant term.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Compositional inverse g with a(g(t)) = t, solved order by order.
/// Requires zero constant term and nonzero linear term.
PowerSeries comp_inverse(const PowerSeries& a);

/// Formal exponential; requires zero constant term.
PowerSeries exp_series(const PowerSeries& a);

/// Formal logarithm; requires constant term one.
PowerSeries log_series(const PowerSeries& a);

/// a^k by repeated truncated multiplication; k = 0 gives 1.
PowerSeries int_pow(const PowerSeries& a, int k);

/// a / t; requires zero constant term, drops one order of trust.
PowerSeries divide_by_t(const PowerSeries& a);

/// The value f(D) x^n at x = 0, i.e. n! * coeff_n(f). Requires n <= f.order().
Rational op_at_zero(const PowerSeries& f, int n);

/// f(D) applied to a polynomial: sum_m coeff_m(f) * p^(m).
/// Requires f.order() >= degree(p) so that the truncation is exact.
Polynomial apply_operator(const PowerSeries& f, const Polynomial& p);

}  // namespace poweroid
