#include "hopcum/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hopcum {

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(const mpq_class& value) : value_(value) {
    if (sgn(value_.get_den()) == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

bool is_unsigned_literal(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_unsigned_literal(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') {
        num.remove_prefix(1);
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) {
        throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    }
    return Scalar(mpq_class(n, d));
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    // mpq has no fused multiply-add; one temporary is unavoidable.
    mpq_class t = a.value_ * b.value_;
    value_ += t;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(mpq_class(f));
}

Scalar power(const Scalar& x, unsigned k) {
    Scalar out(1);
    for (unsigned i = 0; i < k; ++i) {
        out *= x;
    }
    return out;
}

}  // namespace hopcum
