#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hec/rational.hpp"
#include "hec/root_of_unity.hpp"

namespace hec {

/**
 * Exact element of the cyclotomic field Q(zeta_336), represented by its
 * coefficient vector of length phi(336) = 96 against the power basis
 * 1, zeta, ..., zeta^95, always reduced modulo the cyclotomic polynomial
 * Phi_336. Equality is coefficient-wise; values are immutable in spirit and
 * safe to share across threads.
 *
 * Phi_336 itself is computed once at startup by iterated exact division of
 * x^336 - 1 by the Phi_d of proper divisors d, then self-tested (degree 96,
 * divides x^336 - 1); a failed self-test aborts with std::logic_error.
 */
class CyclotomicNumber {
public:
    static constexpr int degree = 96;

    CyclotomicNumber();  // zero

    static CyclotomicNumber zero() { return CyclotomicNumber(); }
    static CyclotomicNumber one() { return from_rational(Rational(1)); }
    static CyclotomicNumber from_rational(const Rational& r);

    // The canonical image of zeta_n^k, i.e. zeta_336^(336 k / n).
    static CyclotomicNumber embed(const RootOfUnity& r);

    const Rational& coefficient(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;

    // The constant coefficient when all higher coefficients vanish.
    std::optional<Rational> as_rational() const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    CyclotomicNumber scaled(const Rational& s) const;
    CyclotomicNumber pow(unsigned long n) const;

    bool operator==(const CyclotomicNumber& o) const { return c_ == o.c_; }
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) {
        return os << x.str();
    }

    // Phi_336 as integer coefficients c_0..c_96 (monic); exposed so tests can
    // re-run the startup self-check independently.
    static const std::vector<long long>& minimal_polynomial();

private:
    std::vector<Rational> c_;  // size 96
};

} // namespace hec
