#include "coxwitness/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxwitness {

namespace {

using Poly = std::vector<Rational>;

std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den)
{
    // den is monic; the division is exact by construction.
    std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        std::int64_t c = num[k];
        q[k - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[k - dn + j] -= c * den[j];
    }
    return q;
}

void trim(Poly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

/// Remainder of p modulo a monic polynomial with integer coefficients.
void reduce_mod(Poly& p, const std::vector<std::int64_t>& m)
{
    std::size_t d = m.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k].is_zero())
            continue;
        Rational c = p[k];
        for (std::size_t j = 0; j < d; ++j)
            if (m[j] != 0)
                p[k - d + j] -= c * Rational(m[j]);
        p[k] = Rational();
    }
    if (p.size() > d)
        p.resize(d);
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

/// Quotient and remainder over ℚ; b must be trimmed and nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    Rational lead_inv = b.back().inverse();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k].is_zero())
            continue;
        Rational c = a[k] * lead_inv;
        q[k - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[k - (b.size() - 1) + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

std::int64_t mod_pos(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

std::int64_t lcm_order(std::int64_t a, std::int64_t b)
{
    return std::lcm(a, b);
}

std::vector<std::int64_t> cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = poly_div_exact(p, cyclotomic_polynomial(d));
    return p;
}

const CyclotomicField& CyclotomicField::get(int order)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end())
        return *it->second;
    auto f = std::make_unique<CyclotomicField>();
    f->order = order;
    f->modulus = cyclotomic_polynomial(order);
    f->degree = static_cast<int>(f->modulus.size()) - 1;
    auto& ref = *f;
    cache.emplace(order, std::move(f));
    return ref;
}

CycloNumber CycloNumber::from_poly(const CyclotomicField& f, Poly poly)
{
    // Fold exponents mod n first, then reduce mod Φ_n.
    auto n = static_cast<std::size_t>(f.order);
    if (poly.size() > n) {
        for (std::size_t k = n; k < poly.size(); ++k)
            if (!poly[k].is_zero())
                poly[k % n] += poly[k];
        poly.resize(n);
    }
    reduce_mod(poly, f.modulus);
    poly.resize(static_cast<std::size_t>(f.degree));
    bool rational = true;
    for (std::size_t k = 1; k < poly.size(); ++k)
        if (!poly[k].is_zero()) {
            rational = false;
            break;
        }
    CycloNumber c;
    if (rational) {
        c.rational_ = poly.empty() ? Rational() : poly[0];
        return c;
    }
    c.order_ = f.order;
    c.coeffs_ = std::move(poly);
    return c;
}

CycloNumber CycloNumber::make(int order, std::span<const std::pair<std::int64_t, Rational>> terms)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    const auto& f = CyclotomicField::get(order);
    Poly p(static_cast<std::size_t>(order));
    for (const auto& [k, r] : terms)
        p[static_cast<std::size_t>(mod_pos(k, order))] += r;
    return from_poly(f, std::move(p));
}

CycloNumber CycloNumber::make(int order, std::initializer_list<std::pair<std::int64_t, Rational>> terms)
{
    return make(order, std::span<const std::pair<std::int64_t, Rational>>(terms.begin(), terms.size()));
}

CycloNumber CycloNumber::root_of_unity(int order, std::int64_t exponent)
{
    return make(order, {{exponent, Rational(1)}});
}

CycloNumber CycloNumber::cos_2pi(int n, std::int64_t k)
{
    return make(n, {{k, Rational(1, 2)}, {-k, Rational(1, 2)}});
}

const Rational& CycloNumber::rational_value() const
{
    if (order_ != 1)
        throw std::domain_error("cyclotomic number is not rational: " + to_string());
    return rational_;
}

std::vector<Rational> CycloNumber::coeffs() const
{
    if (order_ == 1)
        return {rational_};
    return coeffs_;
}

std::vector<Rational> CycloNumber::coeffs_in(int target) const
{
    if (target % order_ != 0)
        throw std::invalid_argument("cannot embed order " + std::to_string(order_) + " into order "
                                    + std::to_string(target));
    const auto& f = CyclotomicField::get(target);
    if (order_ == 1) {
        Poly p(static_cast<std::size_t>(f.degree));
        p[0] = rational_;
        return p;
    }
    if (order_ == target)
        return coeffs_;
    std::size_t step = static_cast<std::size_t>(target / order_);
    Poly p(static_cast<std::size_t>(target));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        p[j * step] = coeffs_[j];
    reduce_mod(p, f.modulus);
    p.resize(static_cast<std::size_t>(f.degree));
    return p;
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber c = *this;
    c.rational_ = -c.rational_;
    for (auto& x : c.coeffs_)
        x = -x;
    return c;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& b)
{
    if (order_ == 1 && b.order_ == 1) {
        rational_ += b.rational_;
        return *this;
    }
    return *this = *this + b;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b)
{
    if (a.order_ == 1 && b.order_ == 1)
        return CycloNumber(a.rational_ + b.rational_);
    if (b.order_ == 1) {
        CycloNumber c = a;
        c.coeffs_[0] += b.rational_;
        return c;
    }
    if (a.order_ == 1)
        return b + a;
    int n = static_cast<int>(lcm_order(a.order_, b.order_));
    Poly x = a.coeffs_in(n);
    Poly y = b.coeffs_in(n);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += y[i];
    return CycloNumber::from_poly(CyclotomicField::get(n), std::move(x));
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b)
{
    return a + (-b);
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b)
{
    if (a.order_ == 1 && b.order_ == 1)
        return CycloNumber(a.rational_ * b.rational_);
    if (b.order_ == 1) {
        if (b.rational_.is_zero())
            return CycloNumber();
        CycloNumber c = a;
        for (auto& x : c.coeffs_)
            x *= b.rational_;
        return c;
    }
    if (a.order_ == 1)
        return b * a;
    int n = static_cast<int>(lcm_order(a.order_, b.order_));
    return CycloNumber::from_poly(CyclotomicField::get(n), poly_mul(a.coeffs_in(n), b.coeffs_in(n)));
}

CycloNumber CycloNumber::inverse() const
{
    if (order_ == 1)
        return CycloNumber(rational_.inverse());
    const auto& f = CyclotomicField::get(order_);
    // Extended Euclid: find s with s·a ≡ gcd (a constant) mod Φ_n.
    Poly r0(f.modulus.begin(), f.modulus.end());
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1)
        throw std::logic_error("cyclotomic inverse: modulus not irreducible");
    Rational c = r0[0].inverse();
    for (auto& x : s0)
        x *= c;
    return from_poly(f, std::move(s0));
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    if (b.order_ == 1)
        return a * CycloNumber(b.rational_.inverse());
    return a * b.inverse();
}

CycloNumber CycloNumber::galois(std::int64_t k) const
{
    if (order_ == 1)
        return *this;
    if (std::gcd(mod_pos(k, order_), static_cast<std::int64_t>(order_)) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the field order");
    Poly p(static_cast<std::size_t>(order_));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero())
            p[static_cast<std::size_t>(mod_pos(static_cast<std::int64_t>(j) * k, order_))] += coeffs_[j];
    return from_poly(CyclotomicField::get(order_), std::move(p));
}

bool operator==(const CycloNumber& a, const CycloNumber& b)
{
    if (a.order_ == 1 || b.order_ == 1) {
        // Rational values are always stored with order 1.
        return a.order_ == b.order_ && a.rational_ == b.rational_;
    }
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    int n = static_cast<int>(lcm_order(a.order_, b.order_));
    return a.coeffs_in(n) == b.coeffs_in(n);
}

bool embed_and_compare(const CycloNumber& a, const CycloNumber& b)
{
    return a == b;
}

std::string CycloNumber::to_string() const
{
    if (order_ == 1)
        return rational_.to_string();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << "*";
        os << "E(" << order_ << ")";
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c)
{
    return os << c.to_string();
}

}  // namespace coxwitness
