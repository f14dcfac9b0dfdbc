#pragma once

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hec {

// Every root of unity in the strata tables lies in the cyclotomic field of
// conductor 336 = lcm(16, 12, 14); the field order is fixed once and for all.
inline constexpr int kCyclotomicOrder = 336;

/**
 * A root of unity zeta_n^k with n | 336, stored as the pair (order, exponent)
 * with the exponent reduced mod the order. Two values compare equal when they
 * denote the same complex number, i.e. when their exponents agree in Z/336.
 */
class RootOfUnity {
public:
    RootOfUnity() : order_(1), exponent_(0) {}

    RootOfUnity(int order, int exponent) : order_(order) {
        if (order < 1 || kCyclotomicOrder % order != 0)
            throw std::domain_error("RootOfUnity: order " + std::to_string(order) +
                                    " does not divide 336");
        exponent_ = ((exponent % order) + order) % order;
    }

    static RootOfUnity one() { return RootOfUnity(1, 0); }
    static RootOfUnity minus_one() { return RootOfUnity(2, 1); }
    static RootOfUnity i() { return RootOfUnity(4, 1); }

    // zeta_336^e in reduced form (order = 336/gcd(e,336)).
    static RootOfUnity from_exponent336(int e) {
        e = ((e % kCyclotomicOrder) + kCyclotomicOrder) % kCyclotomicOrder;
        int g = std::gcd(e, kCyclotomicOrder);
        return RootOfUnity(kCyclotomicOrder / g, e / g);
    }

    int order() const { return order_; }
    int exponent() const { return exponent_; }

    // The exponent of this value as a power of zeta_336.
    int exponent336() const { return (kCyclotomicOrder / order_) * exponent_; }

    // (n, k) -> (n, -k mod n): the multiplicative inverse, order label kept.
    RootOfUnity inverse() const { return RootOfUnity(order_, order_ - exponent_); }

    RootOfUnity operator*(const RootOfUnity& o) const {
        return from_exponent336(exponent336() + o.exponent336());
    }

    RootOfUnity negated() const { return *this * minus_one(); }
    RootOfUnity squared() const { return from_exponent336(2 * exponent336()); }

    RootOfUnity pow(int m) const {
        long long e = static_cast<long long>(exponent336()) * m % kCyclotomicOrder;
        return from_exponent336(static_cast<int>(e));
    }

    bool operator==(const RootOfUnity& o) const { return exponent336() == o.exponent336(); }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    std::string str() const {
        return "zeta_" + std::to_string(order_) + "^" + std::to_string(exponent_);
    }
    friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) {
        return os << r.str();
    }

private:
    int order_;
    int exponent_;
};

} // namespace hec
