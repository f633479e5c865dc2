#ifndef ZKN_RATIONAL_HPP
#define ZKN_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace zkn {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Values whose numerator and denominator fit in 63 bits are held inline and
/// handled with overflow-checked machine arithmetic; anything larger is
/// promoted to a GMP rational and demoted again as soon as it fits.  The two
/// representations never describe the same value, so equality is field-wise.
class Rational {
public:
    Rational() = default;
    Rational(int value) : num_(value) {}
    Rational(long value) : Rational(static_cast<long long>(value)) {}
    Rational(long long value);
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& value) { assign_big(value); }

    /// num / den for 128-bit operands, den > 0.
    static Rational from_int128(__int128 num, __int128 den);

    /// Parses "n" or "n/d" with optional leading sign on the numerator.
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_small() const { return !big_; }
    int sign() const;

    /// Inline numerator/denominator, valid only when is_small().
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }

    std::string num_str() const;
    std::string den_str() const;
    std::string str() const;
    mpq_class to_mpq() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational inverse() const;

private:
    void assign_big(mpq_class value);
    static Rational add_slow(const Rational& a, const Rational& b);
    static Rational mul_slow(const Rational& a, const Rational& b);

    // Small form: den_ > 0, gcd(|num_|, den_) == 1, num_ != INT64_MIN.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

namespace detail {

inline bool fits_small(std::int64_t v) { return v != INT64_MIN; }

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b)
{
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace detail

inline Rational::Rational(long long value)
{
    if (detail::fits_small(value))
        num_ = value;
    else
        assign_big(mpq_class(std::to_string(value)));
}

inline int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

inline Rational Rational::operator-() const
{
    if (big_)
        return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

inline Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational::add_slow(a, b);
    if (a.num_ == 0)
        return b;
    if (b.num_ == 0)
        return a;
    Rational r;
    if (a.den_ == 1 && b.den_ == 1) {
        if (__builtin_add_overflow(a.num_, b.num_, &r.num_) || !detail::fits_small(r.num_))
            return Rational::add_slow(a, b);
        return r;
    }
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t da = a.den_ / g;
    const std::int64_t db = b.den_ / g;
    std::int64_t n1, n2, n, d;
    if (__builtin_mul_overflow(a.num_, db, &n1) || __builtin_mul_overflow(b.num_, da, &n2)
        || __builtin_add_overflow(n1, n2, &n) || !detail::fits_small(n))
        return Rational::add_slow(a, b);
    if (n == 0)
        return r;
    const std::int64_t g2 = detail::gcd_abs(n, g);
    if (__builtin_mul_overflow(a.den_ / g2, db, &d))
        return Rational::add_slow(a, b);
    r.num_ = n / g2;
    r.den_ = d;
    return r;
}

inline Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

inline Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational::mul_slow(a, b);
    Rational r;
    if (a.num_ == 0 || b.num_ == 0)
        return r;
    const std::int64_t g1 = detail::gcd_abs(a.num_, b.den_);
    const std::int64_t g2 = detail::gcd_abs(b.num_, a.den_);
    if (__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &r.num_) || !detail::fits_small(r.num_)
        || __builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &r.den_))
        return Rational::mul_slow(a, b);
    return r;
}

inline Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

inline bool operator==(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace zkn

namespace Eigen {

template <>
struct NumTraits<zkn::Rational> : GenericNumTraits<zkn::Rational> {
    using Real = zkn::Rational;
    using NonInteger = zkn::Rational;
    using Nested = zkn::Rational;
    using Literal = zkn::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // ZKN_RATIONAL_HPP
