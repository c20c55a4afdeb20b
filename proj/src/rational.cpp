#include "poweroid/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace poweroid {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(v_); }

bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::str() const {
    return v_.str();  // cpp_rational renders "-3/4", "0", "7"
}

std::optional<Rational> Rational::parse(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto scan_digits = [&](BigInt& out) -> bool {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return false;
        out = BigInt(std::string(text.substr(start, i - start)));
        return true;
    };
    BigInt num;
    if (!scan_digits(num)) return std::nullopt;
    BigInt den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        if (!scan_digits(den)) return std::nullopt;
        if (den.is_zero()) return std::nullopt;
    }
    if (i != n) return std::nullopt;
    if (negative) num = -num;
    return Rational(num, den);
}

Rational pow_int(const Rational& base, int k) {
    if (k < 0) {
        if (base.is_zero()) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow_int(base, -k);
    }
    Rational result(1);
    Rational b = base;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (int i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

std::string literal_list(const std::vector<Rational>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += xs[i].str();
    }
    return out;
}

}  // namespace poweroid
