#include "zkn/rational.hpp"

#include <stdexcept>

#include "zkn/errors.hpp"

namespace zkn {

namespace {

bool to_int64(const mpz_class& z, std::int64_t& out)
{
    if (!z.fits_slong_p())
        return false;
    const long v = z.get_si();
    if (!detail::fits_small(v))
        return false;
    out = v;
    return true;
}

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b)
{
    while (b != 0) {
        if (a <= UINT64_MAX && b <= UINT64_MAX)
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        const unsigned __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

mpz_class to_mpz(__int128 v)
{
    const bool negative = v < 0;
    const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(mag >> 64));
    mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(mag & UINT64_MAX));
    return negative ? mpz_class(-out) : out;
}

}  // namespace

Rational Rational::from_int128(__int128 num, __int128 den)
{
    if (den <= 0)
        throw std::domain_error("from_int128: denominator must be positive");
    if (num == 0)
        return Rational();
    const unsigned __int128 mag = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
    const auto g = static_cast<__int128>(gcd_u128(mag, static_cast<unsigned __int128>(den)));
    num /= g;
    den /= g;
    if (num > INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    return Rational(mpq_class(to_mpz(num), to_mpz(den)));
}

Rational::Rational(long long num, long long den)
{
    if (den == 0)
        throw InvalidInput("zero denominator");
    if (!detail::fits_small(num) || !detail::fits_small(den)) {
        assign_big(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = detail::gcd_abs(num, den);
    num_ = num / g;
    den_ = den / g;
}

void Rational::assign_big(mpq_class value)
{
    value.canonicalize();
    std::int64_t n, d;
    if (to_int64(value.get_num(), n) && to_int64(value.get_den(), d)) {
        num_ = n;
        den_ = d;
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(value));
    }
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
}

Rational Rational::add_slow(const Rational& a, const Rational& b)
{
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational Rational::mul_slow(const Rational& a, const Rational& b)
{
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    if (big_)
        return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

bool operator<(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return a.to_mpq() < b.to_mpq();
    // Cross-multiplication in 128 bits cannot overflow for 63-bit operands.
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    if (s.empty())
        throw InvalidInput("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        if (t.empty())
            return false;
        std::size_t start = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+'))
            start = 1;
        if (start == t.size())
            return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw InvalidInput("malformed rational literal '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class d(den);
    if (d == 0)
        throw InvalidInput("zero denominator in '" + s + "'");
    return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::num_str() const
{
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::den_str() const
{
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const
{
    const std::string d = den_str();
    return d == "1" ? num_str() : num_str() + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace zkn
