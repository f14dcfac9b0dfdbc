#pragma once

#include <cstdint>
#include <vector>

namespace hec {

/**
 * F_{p^k} for an odd prime p and k in {1,2,3}, built from a fixed monic
 * irreducible modulus (root-freeness suffices as the irreducibility test for
 * degree <= 3). Elements are dense indices 0..p^k-1 packing the coefficient
 * vector in base p, so base-field constants embed as themselves. All
 * arithmetic is table-driven; chi is the quadratic character u^((p^k-1)/2)
 * mapped to {-1, 0, +1}.
 */
class FiniteField {
public:
    // modulus: coefficients c_0..c_k of a monic polynomial over F_p (c_k = 1).
    // For k = 1 the modulus is immaterial and may be {0, 1} (i.e. x).
    FiniteField(int p, int k, std::vector<int> modulus);

    static FiniteField prime_field(int p) { return FiniteField(p, 1, {0, 1}); }

    int p() const { return p_; }
    int k() const { return k_; }
    int size() const { return size_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg(b))]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
    int inverse(int a) const;  // std::domain_error at 0
    int pow(int a, long long e) const;
    int chi(int a) const { return chi_[static_cast<size_t>(a)]; }

private:
    size_t idx(int a, int b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(size_) + static_cast<size_t>(b);
    }

    int p_, k_, size_;
    std::vector<int> modulus_;
    std::vector<int16_t> add_, mul_;
    std::vector<int16_t> neg_, inv_;
    std::vector<int8_t> chi_;
};

/**
 * The tower F_p, F_{p^2}, F_{p^3} used for point counting, with fixed checked
 * moduli so runs are reproducible bit for bit: x^2+1 and x^3-x-1 over F_3,
 * x^2-2 and x^3+x+1 over F_5.
 */
struct FieldTower {
    FiniteField base;   // k = 1
    FiniteField quad;   // k = 2
    FiniteField cubic;  // k = 3

    const FiniteField& level(int k) const;
};

FieldTower standard_tower(int p);  // p in {3, 5}

} // namespace hec
