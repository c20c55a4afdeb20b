#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace poweroid {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number: always in lowest terms, denominator > 0.
/// The scalar field for every coefficient in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    double to_double() const;

    /// Literal format used everywhere: "-3/4", "0", "7". No whitespace.
    std::string str() const;

    /// Strict parse of the literal grammar (optional sign, digits,
    /// optional "/digits" with nonzero denominator). nullopt on any
    /// deviation, including stray characters or embedded whitespace.
    static std::optional<Rational> parse(std::string_view text);

private:
    boost::multiprecision::cpp_rational v_;
};

Rational pow_int(const Rational& base, int k);
BigInt factorial(int n);
BigInt binomial_coefficient(int n, int k);

/// "0,1,-1/2" -- the comma-joined literal list used by series specs and CSV.
std::string literal_list(const std::vector<Rational>& xs);

}  // namespace poweroid
