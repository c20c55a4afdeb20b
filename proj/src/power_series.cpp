#include "poweroid/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace poweroid {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

PowerSeries PowerSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

PowerSeries PowerSeries::one(int order) {
    auto s = zero(order);
    s.coeffs_[0] = Rational(1);
    return s;
}

PowerSeries PowerSeries::identity(int order) {
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    auto s = zero(order);
    s.coeffs_[1] = Rational(1);
    return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int order) {
    if (order < p.degree() && !p.is_zero())
        throw std::domain_error("insufficient truncation order for polynomial degree");
    auto s = zero(order);
    for (int m = 0; m <= p.degree(); ++m) s.coeffs_[static_cast<std::size_t>(m)] = p.coeff(m);
    return s;
}

const Rational& PowerSeries::coeff(int m) const {
    if (m < 0 || m > order()) throw std::out_of_range("coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(m)];
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::domain_error("insufficient truncation order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int m = 0; m <= n; ++m)
        if (a.coeffs_[static_cast<std::size_t>(m)] != b.coeffs_[static_cast<std::size_t>(m)])
            return false;
    return true;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) c[static_cast<std::size_t>(m)] = a.coeff(m) + b.coeff(m);
    return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) c[static_cast<std::size_t>(m)] = a.coeff(m) - b.coeff(m);
    return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& a, const Rational& c) {
    std::vector<Rational> out(a.coefficients());
    for (auto& x : out) x *= c;
    return PowerSeries(std::move(out));
}

PowerSeries derivative(const PowerSeries& a) {
    if (a.order() < 1) throw std::domain_error("derivative of an order-0 series");
    std::vector<Rational> c(static_cast<std::size_t>(a.order()));
    for (int m = 1; m <= a.order(); ++m)
        c[static_cast<std::size_t>(m - 1)] = Rational(m) * a.coeff(m);
    return PowerSeries(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& a) {
    if (a.coeff(0).is_zero()) throw std::domain_error("not invertible as a series");
    const int n = a.order();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1, Rational(0));
    r[0] = Rational(1) / a.coeff(0);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int j = 1; j <= m; ++j) acc += a.coeff(j) * r[static_cast<std::size_t>(m - j)];
        r[static_cast<std::size_t>(m)] = -acc / a.coeff(0);
    }
    return PowerSeries(std::move(r));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::domain_error("composition requires zero constant term in the inner series");
    const int n = std::min(outer.order(), inner.order());
    const PowerSeries in = inner.truncated(n);
    // Horner: coeff_m of the result only sees outer coefficients <= m.
    PowerSeries acc = PowerSeries::zero(n);
    for (int m = n; m >= 0; --m) {
        acc = mul(acc, in);
        acc = add(acc, scale(PowerSeries::one(n), outer.coeff(m)));
    }
    return acc;
}

PowerSeries comp_inverse(const PowerSeries& a) {
    if (!a.coeff(0).is_zero() || a.order() < 1 || a.coeff(1).is_zero())
        throw std::domain_error("not a delta-operator series");
    const int n = a.order();
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1, Rational(0));
    g[1] = Rational(1) / a.coeff(1);
    for (int m = 2; m <= n; ++m) {
        // With g fixed through t^{m-1} and g_m pending, coeff_m(a(g)) is
        // (current mismatch) + a_1 * g_m; solve for g_m.
        const PowerSeries partial(std::vector<Rational>(g.begin(), g.begin() + m + 1));
        const Rational mismatch = compose(a.truncated(m), partial).coeff(m);
        g[static_cast<std::size_t>(m)] = -mismatch / a.coeff(1);
    }
    return PowerSeries(std::move(g));
}

PowerSeries exp_series(const PowerSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("exp of a series with nonzero constant term");
    const int n = a.order();
    PowerSeries result = PowerSeries::one(n);
    PowerSeries term = PowerSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        term = scale(mul(term, a), Rational(1, k));
        result = add(result, term);
    }
    return result;
}

PowerSeries log_series(const PowerSeries& a) {
    if (!a.coeff(0).is_one())
        throw std::domain_error("log of a series with constant term != 1");
    const int n = a.order();
    const PowerSeries u = sub(a, PowerSeries::one(n));
    PowerSeries result = PowerSeries::zero(n);
    PowerSeries term = PowerSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        term = mul(term, u);
        result = add(result, scale(term, Rational(k % 2 == 1 ? 1 : -1, k)));
    }
    return result;
}

PowerSeries int_pow(const PowerSeries& a, int k) {
    if (k < 0) throw std::domain_error("negative series power");
    PowerSeries result = PowerSeries::one(a.order());
    for (int i = 0; i < k; ++i) result = mul(result, a);
    return result;
}

PowerSeries divide_by_t(const PowerSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("division by t of a series with nonzero constant term");
    if (a.order() < 1) throw std::domain_error("insufficient truncation order");
    std::vector<Rational> c(a.coefficients().begin() + 1, a.coefficients().end());
    return PowerSeries(std::move(c));
}

Rational op_at_zero(const PowerSeries& f, int n) {
    if (n < 0 || n > f.order()) throw std::domain_error("insufficient truncation order");
    return Rational(factorial(n)) * f.coeff(n);
}

Polynomial apply_operator(const PowerSeries& f, const Polynomial& p) {
    if (f.order() < p.degree() && !p.is_zero())
        throw std::domain_error("insufficient truncation order for operand degree");
    Polynomial result;
    Polynomial dp = p;
    for (int m = 0; m <= p.degree(); ++m) {
        result += f.coeff(m) * dp;
        if (m < p.degree()) dp = dp.derivative();
    }
    return result;
}

}  // namespace poweroid
