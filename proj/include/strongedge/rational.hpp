#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace strongedge {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
/// Backed by arbitrary-precision integers, so sums over large corpora never overflow.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : _value(value) {}   // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p"; throws std::invalid_argument on malformed text or zero denominator.
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(_value); }
    BigInt den() const { return boost::multiprecision::denominator(_value); }

    std::string str() const;

    Rational& operator+=(const Rational& o) { _value += o._value; return *this; }
    Rational& operator-=(const Rational& o) { _value -= o._value; return *this; }
    Rational& operator*=(const Rational& o) { _value *= o._value; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r._value = -a._value; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a._value == b._value; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a._value < b._value)
            return std::strong_ordering::less;
        if (b._value < a._value)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    int sign() const { return _value.sign(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational _value;
};

} // namespace strongedge
