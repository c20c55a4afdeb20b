#pragma once

#include "poweroid/poweroids.hpp"

namespace poweroid {

/// Expansion of a polynomial in the poweroid basis of op:
/// f = sum_nu c_nu b_nu with c_nu = (theta^nu f)(0) / nu!.
/// For a degree-d input, c_nu = 0 for nu > d, so coeffs has d + 1 entries.
struct PoweroidExpansion {
    DeltaOperator op;
    std::vector<Rational> coeffs;
};

PoweroidExpansion expand(const DeltaOperator& op, const Polynomial& f);
Polynomial reconstruct(const PoweroidExpansion& e);

/// The raw difference table (theta^nu f)(0), nu = 0..deg f -- the
/// numerical input format of the interpolation commands.
std::vector<Rational> difference_table(const DeltaOperator& op, const Polynomial& f);

/// Rebuilds the unique polynomial with the given difference table.
Polynomial from_difference_table(const DeltaOperator& op, const std::vector<Rational>& table);

/// The right inverse of theta with no b_0 component: expand p, map
/// b_nu -> b_{nu+1}/(nu+1), reassemble. Satisfies theta Theta = 1 and
/// Theta theta = 1 - (evaluation at zero).
Polynomial theta_inverse(const DeltaOperator& op, const Polynomial& p);

/// Coefficients of the expansion e^{rx} = sum_n (b_n(r)/n!) phi^n(x):
/// entry n is b_n(r)/n!, for n = 0..terms.
std::vector<Rational> expand_in_phi(const Rational& r, const DeltaOperator& op, int terms);

/// Evaluates the finite central-case cosine sum
///   cos(n phi) = sum_k (n^[2k]/(2k)!) (-4 sin^2(phi/2))^k
/// at the given sample angles and returns the maximum absolute deviation
/// from the library cosine. The single floating-point touchpoint.
double trig_check(int n, const std::vector<double>& phi_samples);

}  // namespace poweroid
