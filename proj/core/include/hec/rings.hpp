#pragma once

#include <concepts>

#include "hec/cyclotomic.hpp"
#include "hec/rational.hpp"

namespace hec {

/**
 * Contract for an exact commutative coefficient ring, supplied to the
 * character engine as a small context object. div_int must be exact division
 * by a nonzero integer (all rings used here contain Q). Inverses of spectral
 * values are not part of the contract: callers supply them alongside the
 * values (roots of unity invert by exponent negation, quadratic-extension
 * elements by their norm).
 */
template <class C>
concept RingContext = requires(const C& c, const typename C::Value& x, long long n) {
    typename C::Value;
    { c.zero() } -> std::same_as<typename C::Value>;
    { c.one() } -> std::same_as<typename C::Value>;
    { c.from_int(n) } -> std::same_as<typename C::Value>;
    { c.add(x, x) } -> std::same_as<typename C::Value>;
    { c.sub(x, x) } -> std::same_as<typename C::Value>;
    { c.mul(x, x) } -> std::same_as<typename C::Value>;
    { c.neg(x) } -> std::same_as<typename C::Value>;
    { c.div_int(x, n) } -> std::same_as<typename C::Value>;
    { c.is_zero(x) } -> std::convertible_to<bool>;
    { c.eq(x, x) } -> std::convertible_to<bool>;
};

struct RationalRing {
    using Value = Rational;
    Value zero() const { return Rational(); }
    Value one() const { return Rational(1); }
    Value from_int(long long n) const { return Rational(n); }
    Value add(const Value& x, const Value& y) const { return x + y; }
    Value sub(const Value& x, const Value& y) const { return x - y; }
    Value mul(const Value& x, const Value& y) const { return x * y; }
    Value neg(const Value& x) const { return -x; }
    Value div_int(const Value& x, long long n) const { return x / Rational(n); }
    bool is_zero(const Value& x) const { return x.is_zero(); }
    bool eq(const Value& x, const Value& y) const { return x == y; }
};

struct CyclotomicRing {
    using Value = CyclotomicNumber;
    Value zero() const { return CyclotomicNumber::zero(); }
    Value one() const { return CyclotomicNumber::one(); }
    Value from_int(long long n) const { return CyclotomicNumber::from_rational(Rational(n)); }
    Value add(const Value& x, const Value& y) const { return x + y; }
    Value sub(const Value& x, const Value& y) const { return x - y; }
    Value mul(const Value& x, const Value& y) const { return x * y; }
    Value neg(const Value& x) const { return -x; }
    Value div_int(const Value& x, long long n) const { return x.scaled(Rational(1, n)); }
    bool is_zero(const Value& x) const { return x.is_zero(); }
    bool eq(const Value& x, const Value& y) const { return x == y; }
};

static_assert(RingContext<RationalRing>);
static_assert(RingContext<CyclotomicRing>);

} // namespace hec
