#include "ipr/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ipr {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    // mpz_class rejects a leading '+'
    if (text.front() == '+')
        text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

} // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const BigInt den = parse_integer(den_text, text);
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace ipr
