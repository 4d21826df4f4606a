#include "coxwitness/linalg.hpp"

#include <numeric>

namespace coxwitness {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n)
{
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

}  // namespace

ModularImage::ModularImage(int order, int index) : order_(order)
{
    if (order < 1)
        throw std::invalid_argument("modular image: order must be positive");
    const u64 n = static_cast<u64>(order);
    u64 k = ((u64{1} << 62) - 1) / n;
    int seen = 0;
    for (;; --k) {
        u64 p = k * n + 1;
        if (is_prime(p) && seen++ == index) {
            p_ = p;
            break;
        }
    }
    auto qs = prime_factors(n);
    for (u64 x = 2;; ++x) {
        u64 g = powmod(x, (p_ - 1) / n, p_);
        bool primitive = true;
        for (u64 q : qs)
            if (powmod(g, n / q, p_) == 1)
                primitive = false;
        if (primitive) {
            root_powers_.resize(n);
            root_powers_[0] = 1;
            for (u64 j = 1; j < n; ++j)
                root_powers_[j] = mulmod(root_powers_[j - 1], g, p_);
            break;
        }
    }
}

std::uint64_t ModularImage::pow(std::uint64_t a, std::uint64_t e) const
{
    return powmod(a, e, p_);
}

std::uint64_t ModularImage::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw DivisionByZero();
    return powmod(a, p_ - 2, p_);
}

std::uint64_t ModularImage::reduce(const Rational& r) const
{
    auto to_mod = [this](const mpz_class& z) {
        mpz_class m = z % mpz_class(static_cast<unsigned long>(p_));
        if (m < 0)
            m += static_cast<unsigned long>(p_);
        return static_cast<u64>(m.get_ui());
    };
    u64 num;
    u64 den;
    if (r.small()) {
        std::int64_t a = r.num() % static_cast<std::int64_t>(p_);
        num = static_cast<u64>(a < 0 ? a + static_cast<std::int64_t>(p_) : a);
        den = static_cast<u64>(r.den()) % p_;
    } else {
        mpq_class q = r.to_mpq();
        num = to_mod(q.get_num());
        den = to_mod(q.get_den());
    }
    if (den == 0)
        throw std::domain_error("denominator vanishes modulo the chosen prime");
    return mulmod(num, inv(den), p_);
}

std::uint64_t ModularImage::reduce(const CycloNumber& c) const
{
    if (order_ % c.order() != 0)
        throw std::invalid_argument("modular image: incompatible cyclotomic order");
    auto co = c.coeffs();
    u64 step = static_cast<u64>(order_ / c.order());
    u64 acc = 0;
    for (std::size_t k = 0; k < co.size(); ++k)
        if (!co[k].is_zero())
            acc = add(acc, mul(reduce(co[k]), root_powers_[(k * step) % static_cast<u64>(order_)]));
    return acc;
}

std::size_t modular_rank(const ModularImage& f, std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[p * cols + j], a[r * cols + j]);
        u64 inv = f.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            a[r * cols + j] = f.mul(a[r * cols + j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            u64 x = a[i * cols + c];
            if (x == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                if (a[r * cols + j] != 0)
                    a[i * cols + j] = f.sub(a[i * cols + j], f.mul(x, a[r * cols + j]));
        }
        ++r;
    }
    return r;
}

}  // namespace coxwitness
