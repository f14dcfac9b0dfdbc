#pragma once

#include <array>
#include <span>
#include <vector>

#include "hec/partition.hpp"
#include "hec/rational.hpp"
#include "hec/rings.hpp"

namespace hec {

/**
 * Evaluation point of a symplectic character: three invertible ring elements
 * together with their inverses. The engine never divides; whoever builds the
 * triple supplies the inversion rule of its ring (exponent negation for roots
 * of unity, the norm trick for quadratic-extension elements).
 */
template <RingContext C>
struct SpectralTriple {
    std::array<typename C::Value, 3> x;
    std::array<typename C::Value, 3> x_inv;
};

// The six eigenvalues x1, x1^-1, x2, x2^-1, x3, x3^-1 carried by a triple.
template <RingContext C>
std::array<typename C::Value, 6> spectrum_values(const SpectralTriple<C>& t) {
    return {t.x[0], t.x_inv[0], t.x[1], t.x_inv[1], t.x[2], t.x_inv[2]};
}

// e_1..e_6 of six ring values, by iterated multiplication of (1 + v_i t).
template <RingContext C>
std::array<typename C::Value, 6> elementary_symmetric6(const C& R,
                                                       const std::array<typename C::Value, 6>& v) {
    using V = typename C::Value;
    std::array<V, 7> e{R.one(), R.zero(), R.zero(), R.zero(), R.zero(), R.zero(), R.zero()};
    for (int n = 0; n < 6; ++n)
        for (int j = n + 1; j >= 1; --j)
            e[static_cast<size_t>(j)] =
                R.add(e[static_cast<size_t>(j)], R.mul(e[static_cast<size_t>(j - 1)], v[static_cast<size_t>(n)]));
    return {e[1], e[2], e[3], e[4], e[5], e[6]};
}

// Extends h (h[0] = 1 prefix assumed valid) up to index dmax using the
// generating-function recurrence h_d = sum_{j=1..min(d,6)} (-1)^{j-1} e_j h_{d-j},
// i.e. coefficient extraction from 1 / prod (1 - v_i t).
template <RingContext C>
void extend_h_sequence(const C& R, const std::array<typename C::Value, 6>& e,
                       std::vector<typename C::Value>& h, int dmax) {
    if (h.empty()) h.push_back(R.one());
    for (int d = static_cast<int>(h.size()); d <= dmax; ++d) {
        typename C::Value acc = R.zero();
        for (int j = 1; j <= d && j <= 6; ++j) {
            auto term = R.mul(e[static_cast<size_t>(j - 1)], h[static_cast<size_t>(d - j)]);
            acc = (j % 2 == 1) ? R.add(acc, term) : R.sub(acc, term);
        }
        h.push_back(std::move(acc));
    }
}

template <RingContext C>
std::vector<typename C::Value> h_sequence(const C& R, const std::array<typename C::Value, 6>& v,
                                          int dmax) {
    std::vector<typename C::Value> h;
    extend_h_sequence(R, elementary_symmetric6(R, v), h, dmax);
    return h;
}

// h_d(v_1..v_6); zero for d < 0, one for d = 0.
template <RingContext C>
typename C::Value complete_homogeneous(const C& R, long long d,
                                       const std::array<typename C::Value, 6>& v) {
    if (d < 0) return R.zero();
    return h_sequence(R, v, static_cast<int>(d)).back();
}

// J_d(x1,x2,x3) = h_d(x1, x1^-1, x2, x2^-1, x3, x3^-1).
template <RingContext C>
typename C::Value j_value(const C& R, long long d, const SpectralTriple<C>& t) {
    return complete_homogeneous(R, d, spectrum_values(t));
}

namespace detail {

template <RingContext C>
typename C::Value det3(const C& R, const std::array<typename C::Value, 9>& m) {
    auto minor = [&](int a, int b, int c, int d) {
        return R.sub(R.mul(m[static_cast<size_t>(a)], m[static_cast<size_t>(d)]),
                     R.mul(m[static_cast<size_t>(b)], m[static_cast<size_t>(c)]));
    };
    auto t0 = R.mul(m[0], minor(4, 5, 7, 8));
    auto t1 = R.mul(m[1], minor(3, 5, 6, 8));
    auto t2 = R.mul(m[2], minor(3, 4, 6, 7));
    return R.add(R.sub(t0, t1), t2);
}

} // namespace detail

/**
 * Character of the Sp(6) irreducible V_lambda evaluated through a sequence of
 * J-values (h indexed from 0; negative indices read as zero). Row i of the
 * determinant is
 *
 *     ( J_{l_i+1},  J_{l_i+2} + J_{l_i},  J_{l_i+3} + J_{l_i-1} ),   l_i = lambda_i - i.
 *
 * The first column is J_{l_i+1}, not J_{l_i+2}: the alternative with a
 * repeated J_{l_i+2} fails the Weyl-alternant oracle already at
 * lambda=(1,0,0), (1,1,1) (it yields -1 instead of dim 6). The oracle
 * equality test in tests/ pins this choice.
 */
template <RingContext C>
typename C::Value symplectic_character_from_h(const C& R, const Partition& la,
                                              std::span<const typename C::Value> h) {
    auto H = [&](long long d) -> typename C::Value {
        if (d < 0) return R.zero();
        return h[static_cast<size_t>(d)];
    };
    std::array<typename C::Value, 9> m = {R.zero(), R.zero(), R.zero(), R.zero(), R.zero(),
                                          R.zero(), R.zero(), R.zero(), R.zero()};
    for (int i = 0; i < 3; ++i) {
        long long li = la[i] - (i + 1);
        m[static_cast<size_t>(3 * i + 0)] = H(li + 1);
        m[static_cast<size_t>(3 * i + 1)] = R.add(H(li + 2), H(li));
        m[static_cast<size_t>(3 * i + 2)] = R.add(H(li + 3), H(li - 1));
    }
    return detail::det3(R, m);
}

template <RingContext C>
typename C::Value symplectic_character(const C& R, const Partition& la,
                                       const SpectralTriple<C>& t) {
    auto h = h_sequence(R, spectrum_values(t), la[0] + 2);
    return symplectic_character_from_h<C>(R, la, h);
}

// dim V_lambda by the Weyl product formula for C3: with l = (l1+3, l2+2, l3+1),
// dim = l1 l2 l3 (l1^2-l2^2)(l1^2-l3^2)(l2^2-l3^2) / 720.
inline Integer weyl_dimension(const Partition& la) {
    Integer l1 = la[0] + 3, l2 = la[1] + 2, l3 = la[2] + 1;
    Integer num = l1 * l2 * l3 * (l1 * l1 - l2 * l2) * (l1 * l1 - l3 * l3) * (l2 * l2 - l3 * l3);
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Integer(720).get_mpz_t());
    if (r != 0) throw std::logic_error("weyl_dimension: product not divisible by 720");
    return q;
}

// Newton identity d h_d = sum_{i=1..d} s_i h_{d-i}; s[k-1] holds the power
// sum s_k. Returns h_0..h_{s.size()}. Requires exact division by d.
template <RingContext C>
std::vector<typename C::Value> h_from_power_sums(const C& R,
                                                 std::span<const typename C::Value> s) {
    std::vector<typename C::Value> h;
    h.push_back(R.one());
    for (size_t d = 1; d <= s.size(); ++d) {
        typename C::Value acc = R.zero();
        for (size_t i = 1; i <= d; ++i)
            acc = R.add(acc, R.mul(s[i - 1], h[d - i]));
        h.push_back(R.div_int(acc, static_cast<long long>(d)));
    }
    return h;
}

} // namespace hec
