#include "fujimoto/rational.hpp"

#include <cctype>
#include <ostream>

namespace fujimoto {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    }
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw ParseError("malformed rational \"" + std::string(whole) + "\"");
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

} // namespace

Rational Rational::parse(std::string_view text, bool* was_canonical) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (was_canonical) {
            *was_canonical = true;
        }
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational r(num, den);
    if (was_canonical) {
        *was_canonical = (text == r.to_string());
    }
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace fujimoto
