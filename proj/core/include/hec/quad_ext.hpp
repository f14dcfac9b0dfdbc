#pragma once

#include <stdexcept>

#include "hec/rational.hpp"
#include "hec/rings.hpp"

namespace hec {

/**
 * Element a + b*sqrt(q) of the real quadratic extension Q(sqrt q), the exact
 * carrier for Frobenius eigenvalues rescaled by sqrt(q). Rational iff b = 0.
 * The ambient q lives in the ring context, not the element.
 */
struct QuadExt {
    Rational a;
    Rational b;

    bool is_rational() const { return b.is_zero(); }
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
};

class QuadExtRing {
public:
    using Value = QuadExt;

    explicit QuadExtRing(long long q) : q_(q) {
        long long r = 1;
        while (r * r < q) ++r;
        if (q <= 0 || r * r == q)
            throw std::invalid_argument("QuadExtRing: q must be positive and not a perfect square");
    }

    long long q() const { return q_; }

    Value zero() const { return {Rational(0), Rational(0)}; }
    Value one() const { return {Rational(1), Rational(0)}; }
    Value from_int(long long n) const { return {Rational(n), Rational(0)}; }
    Value from_rational(const Rational& r) const { return {r, Rational(0)}; }
    Value sqrt_q() const { return {Rational(0), Rational(1)}; }

    Value add(const Value& x, const Value& y) const { return {x.a + y.a, x.b + y.b}; }
    Value sub(const Value& x, const Value& y) const { return {x.a - y.a, x.b - y.b}; }
    Value neg(const Value& x) const { return {-x.a, -x.b}; }
    Value mul(const Value& x, const Value& y) const {
        return {x.a * y.a + x.b * y.b * Rational(q_), x.a * y.b + x.b * y.a};
    }
    Value div_int(const Value& x, long long n) const {
        Rational d(n);
        return {x.a / d, x.b / d};
    }
    bool is_zero(const Value& x) const { return x.a.is_zero() && x.b.is_zero(); }
    bool eq(const Value& x, const Value& y) const { return x == y; }

    // norm-based inverse: (a + b sqrt q)^-1 = (a - b sqrt q) / (a^2 - q b^2)
    Value inverse(const Value& x) const {
        Rational norm = x.a * x.a - x.b * x.b * Rational(q_);
        if (norm.is_zero()) throw std::domain_error("QuadExtRing: inverse of zero");
        return {x.a / norm, -(x.b / norm)};
    }

private:
    long long q_;
};

static_assert(RingContext<QuadExtRing>);

} // namespace hec
