#pragma once

#include "poweroid/delta_operator.hpp"

#include <string>
#include <vector>

namespace poweroid {

/// The basic (poweroid) sequence of a delta operator: b_0 = 1,
/// b_n(0) = 0 for n >= 1, theta b_n = n b_{n-1}, deg b_n = n.
struct PoweroidSequence {
    DeltaOperator op;
    std::vector<Polynomial> polys;

    int length() const { return static_cast<int>(polys.size()) - 1; }
    const Polynomial& b(int n) const { return polys.at(static_cast<std::size_t>(n)); }
};

enum class TriangleKind { FirstKind, SecondKind };

/// Lower-triangular table of coefficients. Entry (n, v) of a first-kind
/// triangle is g(n, v), the coefficient of x^v in b_n; for a second-kind
/// triangle it is gbar(v, n) = theta^v 0^n / v!. The two triangles of one
/// operator are matrix inverses.
struct CoefficientTriangle {
    TriangleKind kind;
    std::string op_spec;
    int order = 0;
    std::vector<std::vector<Rational>> rows;

    const Rational& entry(int n, int nu) const;
};

/// Builds b_0..b_N from powers of the conjugate series, b_n's x^v
/// coefficient being (n!/v!) coeff_n(eta^v).
PoweroidSequence basic_sequence_transfer(const DeltaOperator& op, int N);

/// Builds the same sequence by the recursion b_n = x (phi')^{-1} b_{n-1}.
PoweroidSequence basic_sequence_rodrigues(const DeltaOperator& op, int N);

/// The closed-form Gould factorial x(x-na-b)(x-na-2b)...(x-na-(n-1)b),
/// expanded exactly; n = 0 gives 1 and n = 1 gives x.
Polynomial gould_factorial(const Rational& alpha, const Rational& beta, int n);

CoefficientTriangle triangle_first_kind(const DeltaOperator& op, int N);
CoefficientTriangle triangle_second_kind(const DeltaOperator& op, int N);

/// theta^nu 0^n (or eta^nu 0^n for a first-kind triangle): nu! * entry(n, nu).
Rational difference_of_nothing(const CoefficientTriangle& t, int nu, int n);

struct InversionCheck {
    bool identity = false;
    int row = -1;
    int col = -1;
    Rational value;
};

/// Multiplies a first-kind by a second-kind triangle of equal order and
/// reports whether the product is the identity; on failure carries the
/// first offending entry.
InversionCheck triangle_invert_check(const CoefficientTriangle& g,
                                     const CoefficientTriangle& gbar);

/// Substitutes seq1's polynomials for the powers of x inside seq2's,
/// the group operation on basic sequences. Matches the sequence of
/// op_compose(seq1.op, seq2.op).
PoweroidSequence umbral_compose(const PoweroidSequence& seq1, const PoweroidSequence& seq2);

/// Constants expressing op1's basic polynomials in op2's basis: the
/// first-kind triangle of the operator phi1(phi2^{-1}(D)).
CoefficientTriangle connection_constants(const DeltaOperator& op1, const DeltaOperator& op2,
                                         int N);

/// Same constants by triangular basis-change solve; the independent
/// route used for verification.
CoefficientTriangle connection_constants_by_solve(const DeltaOperator& op1,
                                                  const DeltaOperator& op2, int N);

/// Central factorials x^[n] from the power-series recursion
/// M_m = (4x^2 - (m-2)^2) M_{m-2}, M_0 = 1, M_1 = 2x, with x^[n] = M_n / 2^n.
/// The recursion itself forces M_2 = 4x^2 (the value x^2 sometimes quoted
/// fails the cross-check against the product form).
PoweroidSequence central_hansen(int N);

/// eta as a power series in theta: coefficient m is (eta b_m)(0) / m!.
/// Equals the twice-iterated compositional inverse of phi.
PowerSeries eta_in_theta(const DeltaOperator& op, int N);

std::string to_json(const CoefficientTriangle& t);
std::string to_csv(const CoefficientTriangle& t);
std::string to_pretty(const CoefficientTriangle& t);
std::string to_json(const PoweroidSequence& s);
std::string to_csv(const PoweroidSequence& s);
std::string to_pretty(const PoweroidSequence& s);

}  // namespace poweroid
