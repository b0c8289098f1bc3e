#include "hopfgk/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace hopfgk {

namespace {

bool isDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!isDigits(num) || !isDigits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const { return value_.get_str(); }

std::string Scalar::fractionString() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.isZero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace hopfgk
