#include "strongedge/rational.hpp"

#include <stdexcept>

namespace strongedge {

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    *this = Rational(BigInt(num), BigInt(den));
}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    // Some Boost releases reject a negative denominator outright, so move the sign first.
    _value = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o._value == 0)
        throw std::domain_error("division by zero rational");
    _value /= o._value;
    return *this;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text), BigInt(1));
    return Rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
}

std::string Rational::str() const
{
    return num().str() + "/" + den().str();
}

} // namespace strongedge
