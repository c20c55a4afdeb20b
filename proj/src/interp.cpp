#include "poweroid/interp.hpp"

#include <cmath>
#include <stdexcept>

namespace poweroid {

PoweroidExpansion expand(const DeltaOperator& op, const Polynomial& f) {
    const int d = f.degree();
    if (op.order() < d) throw std::domain_error("insufficient truncation order");
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    PowerSeries phi_pow = PowerSeries::one(op.order());
    for (int nu = 0; nu <= d; ++nu) {
        c[static_cast<std::size_t>(nu)] =
            apply_operator(phi_pow, f)(Rational(0)) / Rational(factorial(nu));
        if (nu < d) phi_pow = mul(phi_pow, op.phi());
    }
    return PoweroidExpansion{op, std::move(c)};
}

Polynomial reconstruct(const PoweroidExpansion& e) {
    const int d = static_cast<int>(e.coeffs.size()) - 1;
    if (d < 0) return Polynomial();
    const PoweroidSequence seq = basic_sequence_transfer(e.op, d);
    Polynomial acc;
    for (int nu = 0; nu <= d; ++nu)
        acc += e.coeffs[static_cast<std::size_t>(nu)] * seq.b(nu);
    return acc;
}

std::vector<Rational> difference_table(const DeltaOperator& op, const Polynomial& f) {
    PoweroidExpansion e = expand(op, f);
    for (std::size_t nu = 0; nu < e.coeffs.size(); ++nu)
        e.coeffs[nu] *= Rational(factorial(static_cast<int>(nu)));
    return std::move(e.coeffs);
}

Polynomial from_difference_table(const DeltaOperator& op, const std::vector<Rational>& table) {
    std::vector<Rational> c(table.size());
    for (std::size_t nu = 0; nu < table.size(); ++nu)
        c[nu] = table[nu] / Rational(factorial(static_cast<int>(nu)));
    return reconstruct(PoweroidExpansion{op, std::move(c)});
}

Polynomial theta_inverse(const DeltaOperator& op, const Polynomial& p) {
    const int d = p.degree();
    if (op.order() < d + 1) throw std::domain_error("insufficient truncation order");
    const PoweroidExpansion e = expand(op, p);
    const PoweroidSequence seq = basic_sequence_transfer(op, d + 1);
    Polynomial acc;
    for (int nu = 0; nu <= d; ++nu)
        acc += (e.coeffs[static_cast<std::size_t>(nu)] / Rational(nu + 1)) * seq.b(nu + 1);
    return acc;
}

std::vector<Rational> expand_in_phi(const Rational& r, const DeltaOperator& op, int terms) {
    if (terms < 0) throw std::domain_error("negative term count");
    if (op.order() < terms) throw std::domain_error("insufficient truncation order");
    const PoweroidSequence seq = basic_sequence_transfer(op, terms);
    std::vector<Rational> out(static_cast<std::size_t>(terms) + 1);
    for (int n = 0; n <= terms; ++n)
        out[static_cast<std::size_t>(n)] = seq.b(n)(r) / Rational(factorial(n));
    return out;
}

double trig_check(int n, const std::vector<double>& phi_samples) {
    if (n < 1 || n > 8) throw std::domain_error("trig check supports 1 <= n <= 8");
    // The sum terminates: n^[2k] = 0 once 2k >= 2n + 2.
    std::vector<double> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const Rational coeff =
            gould_factorial(Rational(-1, 2), Rational(1), 2 * k)(Rational(n)) /
            Rational(factorial(2 * k));
        q[static_cast<std::size_t>(k)] = coeff.to_double();
    }
    double max_err = 0.0;
    for (double phi : phi_samples) {
        const double s = std::sin(phi / 2);
        const double z = -4.0 * s * s;
        double sum = 0.0;
        double zk = 1.0;
        for (int k = 0; k <= n; ++k) {
            sum += q[static_cast<std::size_t>(k)] * zk;
            zk *= z;
        }
        max_err = std::max(max_err, std::abs(sum - std::cos(n * phi)));
    }
    return max_err;
}

}  // namespace poweroid
