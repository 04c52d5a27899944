#include "uavcov/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace uavcov {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    BigInt v(std::string(s), 10);
    return negative ? BigInt(-v) : v;
}

BigInt pow10(int n) {
    BigInt r = 1;
    for (int i = 0; i < n; ++i) r *= 10;
    return r;
}

}  // namespace

Rational::Rational(long long value) : value_(static_cast<signed long>(value)) {}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(BigInt(static_cast<signed long>(num)), BigInt(static_cast<signed long>(den)));
    value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw std::invalid_argument("bad denominator: '" + std::string(text) + "'");
        const BigInt den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part))
            throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
        const BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part), 10);
        const BigInt scale = pow10(static_cast<int>(frac_part.size()));
        BigInt num = whole * scale + BigInt(std::string(frac_part), 10);
        if (negative) num = -num;
        return Rational(num, scale);
    }
    return Rational(parse_integer(text), BigInt(1));
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const {
    const BigInt scale = pow10(places);
    BigInt scaled_abs;
    {
        // round half away from zero on |value| * 10^places
        const mpq_class mag = abs(value_) * mpq_class(scale);
        const mpq_class shifted = mag + mpq_class(1, 2);
        mpz_fdiv_q(scaled_abs.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    }
    const BigInt whole = scaled_abs / scale;
    const BigInt frac = scaled_abs % scale;
    std::string out = (sign() < 0 && scaled_abs != 0) ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += '.';
        out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

std::string Rational::to_exact_decimal() const {
    if (is_integer()) return to_string();
    BigInt den = value_.get_den();
    int twos = 0;
    int fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return to_string();
    std::string s = to_decimal(std::max(twos, fives));
    return s;
}

Rational& Rational::operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
Rational& Rational::operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
Rational& Rational::operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

RationalTime from_ms(long long ms) { return Rational(ms, 1000); }
RationalTime minutes(const Rational& m) { return m * Rational(60); }
RationalTime seconds(const Rational& s) { return s; }

std::string to_ms_string(const RationalTime& t) { return (t * Rational(1000)).to_string(); }

RationalTime parse_ms(std::string_view text) {
    if (text.find('.') != std::string_view::npos)
        throw std::invalid_argument("time_ms must be an integer or p/q: '" + std::string(text) + "'");
    return Rational::parse(text) / Rational(1000);
}

BigInt ceil_div(const Rational& a, const Rational& b) {
    if (b.sign() <= 0) throw std::domain_error("ceil_div requires a positive divisor");
    return (a / b).ceil();
}

BigInt floor_div(const Rational& a, const Rational& b) {
    if (b.sign() <= 0) throw std::domain_error("floor_div requires a positive divisor");
    return (a / b).floor();
}

std::int64_t to_i64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer out of 64-bit range: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("integer out of unsigned 64-bit range: " + v.get_str());
    return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace uavcov
