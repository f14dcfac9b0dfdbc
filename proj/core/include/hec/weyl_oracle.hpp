#pragma once

#include <array>
#include <map>
#include <mutex>

#include "hec/partition.hpp"
#include "hec/rational.hpp"

namespace hec {

/**
 * Sparse Laurent polynomial over Q in three variables. Just enough ring
 * structure for the Weyl alternants and their exact quotient.
 */
class LaurentPoly3 {
public:
    using Exponents = std::array<int, 3>;

    LaurentPoly3() = default;
    static LaurentPoly3 monomial(const Exponents& e, const Rational& c);

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly3 operator+(const LaurentPoly3& o) const;
    LaurentPoly3 operator-(const LaurentPoly3& o) const;
    LaurentPoly3 operator*(const LaurentPoly3& o) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool operator==(const LaurentPoly3& o) const { return terms_ == o.terms_; }

    // Requires all x_i nonzero (negative exponents occur).
    Rational evaluate(const std::array<Rational, 3>& x) const;

private:
    std::map<Exponents, Rational> terms_;  // exponent -> nonzero coefficient
};

/**
 * Weyl character formula for Sp(6) (type C3), used as an independent oracle
 * for the determinantal character: with l = (l1+3, l2+2, l3+1),
 *
 *   chi_lambda = det(x_j^{l_i} - x_j^{-l_i}) / det(x_j^{4-i} - x_j^{-(4-i)}),
 *
 * computed once per lambda by clearing denominators and performing exact
 * dense polynomial division under the lexicographic monomial order. The
 * quotient is cached; evaluation is then a sparse monomial sum.
 */
class WeylCharacterOracle {
public:
    const LaurentPoly3& character_polynomial(const Partition& la) const;

    // Throws std::domain_error on a degenerate point (zero alternant
    // denominator); perturb the triple and retry.
    Rational evaluate(const Partition& la, const std::array<Rational, 3>& x) const;

    static bool degenerate(const std::array<Rational, 3>& x);

private:
    mutable std::map<Partition, LaurentPoly3> cache_;
    mutable std::mutex mutex_;
};

} // namespace hec
