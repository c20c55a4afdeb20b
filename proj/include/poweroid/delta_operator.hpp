#pragma once

#include "poweroid/power_series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace poweroid {

/// A delta operator theta = phi(D): a power series in D with zero
/// constant term and nonzero linear term, order >= 2. `name` carries the
/// catalog spec the operator was built from; derived operators carry an
/// empty name and render as a raw series spec.
class DeltaOperator {
public:
    explicit DeltaOperator(PowerSeries phi, std::string name = {});

    const PowerSeries& phi() const { return phi_; }
    const std::string& name() const { return name_; }
    int order() const { return phi_.order(); }
    Rational linear_coeff() const { return phi_.coeff(1); }
    bool is_normalized() const { return phi_.coeff(1).is_one(); }

    /// Canonical operator-spec string: the catalog name when known,
    /// otherwise "series:[...]" listing the phi coefficients.
    std::string spec_string() const;

private:
    PowerSeries phi_;
    std::string name_;
};

/// Gould's divided difference E^alpha (E^beta - 1) / beta as a series in D.
/// beta = 0 is the confluent limit handled by make_abel.
DeltaOperator make_gould(const Rational& alpha, const Rational& beta, int order);
/// Abel operator D e^{aD}, the beta -> 0 limit of the Gould family.
DeltaOperator make_abel(const Rational& a, int order);
DeltaOperator make_forward(int order);
DeltaOperator make_backward(int order);
DeltaOperator make_central(int order);
DeltaOperator make_confluent(int order);
/// log(1 + D), the conjugate of the forward difference.
DeltaOperator make_touchard(int order);
DeltaOperator make_from_series(std::vector<Rational> coeffs);

/// The conjugate operator eta = phi^{-1}(D).
DeltaOperator conjugate(const DeltaOperator& op);

/// Composite of two umbral actions, op2 after op1: phi = phi2(phi1(D)).
DeltaOperator op_compose(const DeltaOperator& op1, const DeltaOperator& op2);

/// Rescales phi so the linear coefficient is 1.
DeltaOperator normalized(const DeltaOperator& op);

/// (theta^nu p)(0): apply the nu-th power of the operator, evaluate at zero.
Rational generalized_difference(const DeltaOperator& op, int nu, const Polynomial& p);

/// The Gould operator applied by explicit shifts, (p(x+a+b) - p(x+a))/b.
/// Series-free route used to cross-check apply_operator.
Polynomial apply_gould_by_shifts(const Rational& alpha, const Rational& beta,
                                 const Polynomial& p);

/// Parsed form of the operator mini-language:
///   forward | backward | central | confluent | touchard
///   | gould:a=RAT,b=RAT | abel:a=RAT | series:[RAT,...]
struct OperatorSpec {
    enum class Kind { Forward, Backward, Central, Confluent, Gould, Abel, Touchard, Series };

    Kind kind = Kind::Confluent;
    Rational a;
    Rational b;
    std::vector<Rational> coeffs;

    /// Throws std::invalid_argument with the offending position on
    /// malformed input.
    static OperatorSpec parse(std::string_view text);
    std::string render() const;
    /// Builds the operator at the requested truncation order; series
    /// specs carry their own order and ignore the request.
    DeltaOperator instantiate(int order) const;

    bool operator==(const OperatorSpec& o) const;
};

/// parse + instantiate in one step.
DeltaOperator catalog(std::string_view spec_text, int order);

}  // namespace poweroid
