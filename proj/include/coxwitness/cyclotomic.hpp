#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coxwitness/rational.hpp"

namespace coxwitness {

/// ℚ(ζ_n) presented as ℚ[x]/(Φ_n). Instances live for the whole process and
/// are shared by every number of that order.
struct CyclotomicField {
    int order = 1;
    int degree = 1;
    /// Φ_n, lowest coefficient first; monic of length degree + 1.
    std::vector<std::int64_t> modulus;

    static const CyclotomicField& get(int order);
};

/// Φ_n with integer coefficients, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

std::int64_t lcm_order(std::int64_t a, std::int64_t b);

/// An exact element of a cyclotomic field ℚ(ζ_n), ζ_n = exp(2πi/n), stored in
/// the power basis 1, ζ, …, ζ^{φ(n)-1}.
///
/// Values that happen to be rational are always stored with order 1, so the
/// representation of a rational number is unique. Operands of different
/// orders are embedded into ℚ(ζ_lcm) before combining.
class CycloNumber {
public:
    CycloNumber() = default;
    CycloNumber(const Rational& r) : rational_(r) {}     // NOLINT(google-explicit-constructor)
    CycloNumber(std::int64_t r) : rational_(r) {}        // NOLINT(google-explicit-constructor)
    CycloNumber(int r) : rational_(std::int64_t{r}) {}   // NOLINT(google-explicit-constructor)

    /// Σ r_k ζ_order^k; exponents are arbitrary integers taken mod order.
    static CycloNumber make(int order, std::span<const std::pair<std::int64_t, Rational>> terms);
    static CycloNumber make(int order, std::initializer_list<std::pair<std::int64_t, Rational>> terms);
    static CycloNumber root_of_unity(int order, std::int64_t exponent);
    /// cos(2πk/n) as an element of the real subfield of ℚ(ζ_n).
    static CycloNumber cos_2pi(int n, std::int64_t k);

    int order() const { return order_; }
    bool is_zero() const { return order_ == 1 && rational_.is_zero(); }
    bool is_one() const { return order_ == 1 && rational_.is_one(); }
    bool is_rational() const { return order_ == 1; }
    /// Throws std::domain_error unless is_rational().
    const Rational& rational_value() const;

    /// Power-basis coefficients in ℚ(ζ_order); length φ(order).
    std::vector<Rational> coeffs() const;
    /// Power-basis coefficients after embedding into ℚ(ζ_target); order() must divide target.
    std::vector<Rational> coeffs_in(int target) const;

    CycloNumber operator-() const;
    CycloNumber inverse() const;
    /// Image under the automorphism ζ_n ↦ ζ_n^k, gcd(k, n) = 1.
    CycloNumber galois(std::int64_t k) const;
    /// Complex conjugate (ζ ↦ ζ⁻¹).
    CycloNumber conj() const { return galois(-1); }

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
    CycloNumber& operator+=(const CycloNumber& b);
    CycloNumber& operator-=(const CycloNumber& b) { return *this = *this - b; }
    CycloNumber& operator*=(const CycloNumber& b) { return *this = *this * b; }
    CycloNumber& operator/=(const CycloNumber& b) { return *this = *this / b; }

    /// Equality as complex numbers (embeds both sides into a common field).
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    /// GAP-style rendering, e.g. "1/2 + E(8)^3".
    std::string to_string() const;

private:
    static CycloNumber from_poly(const CyclotomicField& f, std::vector<Rational> poly);

    int order_ = 1;
    Rational rational_;
    std::vector<Rational> coeffs_;  // empty iff order_ == 1
};

/// True iff a and b are equal as complex numbers.
bool embed_and_compare(const CycloNumber& a, const CycloNumber& b);

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

}  // namespace coxwitness
