#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace hec {

using Integer = mpz_class;

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator. Thin veneer over GMP's mpq_class that enforces
 * canonicalization at every construction site.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}               // NOLINT: implicit by design
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(long long n) { set_ll(n); }
    Rational(const Integer& n) : q_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        Rational n(num), d(den);
        q_ = n.q_ / d.q_;
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Exact integer value; throws if the denominator is not 1.
    Integer to_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
        return q_.get_num();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}  // assumed canonical
    void set_ll(long long n) {
        if (n >= 0) {
            q_ = mpq_class(Integer(static_cast<unsigned long>(n)));
        } else {
            // avoid overflow on LLONG_MIN
            Integer m(static_cast<unsigned long>(-(n + 1)));
            q_ = mpq_class(Integer(-(m + 1)));
        }
    }

    mpq_class q_;
};

} // namespace hec
