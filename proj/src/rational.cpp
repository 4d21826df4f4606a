#include "coxwitness/rational.hpp"

#include <limits>
#include <ostream>

namespace coxwitness {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x)
{
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(i128 x)
{
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    auto lo = static_cast<std::uint64_t>(u);
    mpz_class r = hi;
    r <<= 64;
    r += mpz_class(lo);
    return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(std::int64_t x)
{
    return mpz_from_i128(x);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw DivisionByZero();
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        num_ = c.get_num().get_si();
        den_ = c.get_den().get_si();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(c));
    }
}

Rational Rational::from_i128(i128 n, i128 d)
{
    if (d == 0)
        throw DivisionByZero();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d != 1) {
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    Rational r;
    if (fits64(n) && fits64(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
    } else {
        mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    if (q.get_den() == 0)
        throw DivisionByZero();
    return Rational(q);
}

bool Rational::is_integer() const
{
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

std::int64_t Rational::num() const
{
    if (big_)
        throw std::overflow_error("rational numerator exceeds 64 bits");
    return num_;
}

std::int64_t Rational::den() const
{
    if (big_)
        throw std::overflow_error("rational denominator exceeds 64 bits");
    return den_;
}

Rational Rational::operator-() const
{
    if (big_)
        return Rational(mpq_class(-*big_));
    return from_i128(-static_cast<i128>(num_), den_);
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (big_)
        return Rational(mpq_class(1 / *big_));
    return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s))
                return Rational(s);
        }
        if (a.den_ == b.den_)
            return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(a.num_, b.num_, &s))
                return Rational(s);
        }
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0)
            return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p))
                return Rational(p);
        }
        return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    if (!a.big_ && !b.big_)
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    // Canonical forms differ in storage class only if the values differ.
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::string Rational::to_string() const
{
    if (big_) {
        if (big_->get_den() == 1)
            return big_->get_num().get_str();
        return big_->get_str();
    }
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const
{
    if (big_)
        return std::hash<std::string>{}(big_->get_str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

}  // namespace coxwitness
