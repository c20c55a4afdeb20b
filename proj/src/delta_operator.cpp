#include "poweroid/delta_operator.hpp"

#include <cctype>
#include <stdexcept>

namespace poweroid {

DeltaOperator::DeltaOperator(PowerSeries phi, std::string name)
    : phi_(std::move(phi)), name_(std::move(name)) {
    if (phi_.order() < 2)
        throw std::domain_error("delta operator needs truncation order >= 2");
    if (!phi_.coeff(0).is_zero() || phi_.coeff(1).is_zero())
        throw std::domain_error("not a delta-operator series");
}

std::string DeltaOperator::spec_string() const {
    if (!name_.empty()) return name_;
    return "series:[" + literal_list(phi_.coefficients()) + "]";
}

namespace {

// e^{ct} truncated: coefficients c^m / m!.
PowerSeries exponential(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    Rational term(1);
    v[0] = term;
    for (int m = 1; m <= order; ++m) {
        term = term * c / Rational(m);
        v[static_cast<std::size_t>(m)] = term;
    }
    return PowerSeries(std::move(v));
}

}  // namespace

DeltaOperator make_gould(const Rational& alpha, const Rational& beta, int order) {
    if (beta.is_zero())
        throw std::domain_error("gould with b=0 is the Abel limit; use abel:a=...");
    if (order < 2) throw std::domain_error("delta operator needs truncation order >= 2");
    PowerSeries phi =
        scale(sub(exponential(alpha + beta, order), exponential(alpha, order)),
              Rational(1) / beta);
    OperatorSpec spec;
    spec.kind = OperatorSpec::Kind::Gould;
    spec.a = alpha;
    spec.b = beta;
    return DeltaOperator(std::move(phi), spec.render());
}

DeltaOperator make_abel(const Rational& a, int order) {
    if (order < 2) throw std::domain_error("delta operator needs truncation order >= 2");
    // t e^{at}: coefficient m is a^{m-1}/(m-1)!.
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
    Rational term(1);
    for (int m = 1; m <= order; ++m) {
        v[static_cast<std::size_t>(m)] = term;
        term = term * a / Rational(m);
    }
    OperatorSpec spec;
    spec.kind = OperatorSpec::Kind::Abel;
    spec.a = a;
    return DeltaOperator(PowerSeries(std::move(v)), spec.render());
}

DeltaOperator make_forward(int order) {
    return DeltaOperator(make_gould(Rational(0), Rational(1), order).phi(), "forward");
}

DeltaOperator make_backward(int order) {
    return DeltaOperator(make_gould(Rational(0), Rational(-1), order).phi(), "backward");
}

DeltaOperator make_central(int order) {
    return DeltaOperator(make_gould(Rational(-1, 2), Rational(1), order).phi(), "central");
}

DeltaOperator make_confluent(int order) {
    if (order < 2) throw std::domain_error("delta operator needs truncation order >= 2");
    return DeltaOperator(PowerSeries::identity(order), "confluent");
}

DeltaOperator make_touchard(int order) {
    if (order < 2) throw std::domain_error("delta operator needs truncation order >= 2");
    PowerSeries one_plus_t = add(PowerSeries::one(order), PowerSeries::identity(order));
    return DeltaOperator(log_series(one_plus_t), "touchard");
}

DeltaOperator make_from_series(std::vector<Rational> coeffs) {
    OperatorSpec spec;
    spec.kind = OperatorSpec::Kind::Series;
    spec.coeffs = coeffs;
    return DeltaOperator(PowerSeries(std::move(coeffs)), spec.render());
}

DeltaOperator conjugate(const DeltaOperator& op) {
    return DeltaOperator(comp_inverse(op.phi()));
}

DeltaOperator op_compose(const DeltaOperator& op1, const DeltaOperator& op2) {
    return DeltaOperator(compose(op2.phi(), op1.phi()));
}

DeltaOperator normalized(const DeltaOperator& op) {
    if (op.is_normalized()) return op;
    return DeltaOperator(scale(op.phi(), Rational(1) / op.linear_coeff()));
}

Rational generalized_difference(const DeltaOperator& op, int nu, const Polynomial& p) {
    if (nu < 0) throw std::domain_error("negative operator power");
    return apply_operator(int_pow(op.phi(), nu), p)(Rational(0));
}

Polynomial apply_gould_by_shifts(const Rational& alpha, const Rational& beta,
                                 const Polynomial& p) {
    if (beta.is_zero()) throw std::domain_error("gould shift form undefined at b=0");
    return (Rational(1) / beta) * (p.shifted(alpha + beta) - p.shifted(alpha));
}

// ---------------------------------------------------------------------------
// Operator mini-language.

namespace {

class SpecCursor {
public:
    explicit SpecCursor(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("operator spec \"" + std::string(text_) + "\": " + what +
                                    " at position " + std::to_string(pos_));
    }

    bool eat(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!eat(token)) fail("expected \"" + std::string(token) + "\"");
    }

    Rational rational() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        auto parsed = Rational::parse(text_.substr(start, pos_ - start));
        if (!parsed) {
            pos_ = start;
            fail("invalid rational literal");
        }
        return *parsed;
    }

    bool done() const { return pos_ == text_.size(); }
    void require_done() {
        if (!done()) fail("trailing characters");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

OperatorSpec OperatorSpec::parse(std::string_view text) {
    SpecCursor cur(text);
    OperatorSpec spec;
    if (cur.eat("forward")) {
        spec.kind = Kind::Forward;
    } else if (cur.eat("backward")) {
        spec.kind = Kind::Backward;
    } else if (cur.eat("central")) {
        spec.kind = Kind::Central;
    } else if (cur.eat("confluent")) {
        spec.kind = Kind::Confluent;
    } else if (cur.eat("touchard")) {
        spec.kind = Kind::Touchard;
    } else if (cur.eat("gould:")) {
        spec.kind = Kind::Gould;
        cur.expect("a=");
        spec.a = cur.rational();
        cur.expect(",b=");
        spec.b = cur.rational();
    } else if (cur.eat("abel:")) {
        spec.kind = Kind::Abel;
        cur.expect("a=");
        spec.a = cur.rational();
    } else if (cur.eat("series:[")) {
        spec.kind = Kind::Series;
        spec.coeffs.push_back(cur.rational());
        while (cur.eat(",")) spec.coeffs.push_back(cur.rational());
        cur.expect("]");
    } else {
        cur.fail("unknown operator name");
    }
    cur.require_done();
    return spec;
}

std::string OperatorSpec::render() const {
    switch (kind) {
        case Kind::Forward: return "forward";
        case Kind::Backward: return "backward";
        case Kind::Central: return "central";
        case Kind::Confluent: return "confluent";
        case Kind::Touchard: return "touchard";
        case Kind::Gould: return "gould:a=" + a.str() + ",b=" + b.str();
        case Kind::Abel: return "abel:a=" + a.str();
        case Kind::Series: return "series:[" + literal_list(coeffs) + "]";
    }
    throw std::logic_error("unreachable operator kind");
}

DeltaOperator OperatorSpec::instantiate(int order) const {
    switch (kind) {
        case Kind::Forward: return make_forward(order);
        case Kind::Backward: return make_backward(order);
        case Kind::Central: return make_central(order);
        case Kind::Confluent: return make_confluent(order);
        case Kind::Touchard: return make_touchard(order);
        case Kind::Gould: return make_gould(a, b, order);
        case Kind::Abel: return make_abel(a, order);
        case Kind::Series: return make_from_series(coeffs);
    }
    throw std::logic_error("unreachable operator kind");
}

bool OperatorSpec::operator==(const OperatorSpec& o) const {
    return kind == o.kind && a == o.a && b == o.b && coeffs == o.coeffs;
}

DeltaOperator catalog(std::string_view spec_text, int order) {
    return OperatorSpec::parse(spec_text).instantiate(order);
}

}  // namespace poweroid
