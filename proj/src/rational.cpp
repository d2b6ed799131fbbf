#include "timmp/rational.hpp"

#include "timmp/errors.hpp"

#include <cctype>
#include <limits>

namespace timmp {

void require_size(bool ok, const std::string& operation, const std::string& limit) {
    if (!ok) {
        throw SizeGuardError(operation + ": input exceeds size guard (" + limit + ")");
    }
}

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw ValidationError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
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

mpz_class parse_integer(std::string_view s) {
    std::string text(s);
    if (!text.empty() && text[0] == '+') {
        text.erase(0, 1);
    }
    return mpz_class(text, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-') {
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) {
        throw ValidationError("rational with zero denominator '" + std::string(text) + "'");
    }
    return Rational(mpq_class(parse_integer(num), d));
}

std::int64_t Rational::numerator_i64() const {
    if (!value_.get_num().fits_slong_p()) {
        throw InternalError("rational numerator overflows 64 bits");
    }
    return value_.get_num().get_si();
}

std::int64_t Rational::denominator_i64() const {
    if (!value_.get_den().fits_slong_p()) {
        throw InternalError("rational denominator overflows 64 bits");
    }
    return value_.get_den().get_si();
}

std::int64_t Rational::ceil_i64() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw InternalError("rational ceiling overflows 64 bits");
    }
    return q.get_si();
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

std::string Rational::pretty() const { return is_integer() ? numerator_str() : str(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw InternalError("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace timmp
