#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hec/characters.hpp"
#include "hec/cyclotomic.hpp"
#include "hec/weyl_oracle.hpp"

using namespace hec;

namespace {

// brute-force h_d: sum over all multisets i_1 <= ... <= i_d of products
Rational h_by_enumeration(int d, const std::array<Rational, 6>& v, int start = 0,
                          Rational prefix = Rational(1)) {
    if (d == 0) return prefix;
    Rational acc(0);
    for (int i = start; i < 6; ++i) acc += h_by_enumeration(d - 1, v, i, prefix * v[static_cast<size_t>(i)]);
    return acc;
}

SpectralTriple<RationalRing> rational_triple(const std::array<Rational, 3>& x) {
    return {x, {Rational(1) / x[0], Rational(1) / x[1], Rational(1) / x[2]}};
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

// the defective printed determinant row, with J_{l+2} repeated in the first
// column; kept in tests only, to pin the resolved variant forever
template <RingContext C>
typename C::Value printed_variant(const C& R, const Partition& la, const SpectralTriple<C>& t) {
    auto h = h_sequence(R, spectrum_values(t), la[0] + 3);
    auto H = [&](long long d) { return d < 0 ? R.zero() : h[static_cast<size_t>(d)]; };
    std::array<typename C::Value, 9> m = {R.zero(), R.zero(), R.zero(), R.zero(), R.zero(),
                                          R.zero(), R.zero(), R.zero(), R.zero()};
    for (int i = 0; i < 3; ++i) {
        long long li = la[i] - (i + 1);
        m[static_cast<size_t>(3 * i + 0)] = H(li + 2);
        m[static_cast<size_t>(3 * i + 1)] = R.add(H(li + 2), H(li));
        m[static_cast<size_t>(3 * i + 2)] = R.add(H(li + 3), H(li - 1));
    }
    auto minor = [&](int a, int b, int c, int d) {
        return R.sub(R.mul(m[static_cast<size_t>(a)], m[static_cast<size_t>(d)]),
                     R.mul(m[static_cast<size_t>(b)], m[static_cast<size_t>(c)]));
    };
    return R.add(R.sub(R.mul(m[0], minor(4, 5, 7, 8)), R.mul(m[1], minor(3, 5, 6, 8))),
                 R.mul(m[2], minor(3, 4, 6, 7)));
}

std::array<Rational, 3> random_nondegenerate_triple(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    while (true) {
        std::array<Rational, 3> x;
        bool ok = true;
        for (auto& xi : x) {
            int n = num(rng);
            xi = Rational(n, den(rng));
            if (xi.is_zero() || xi == Rational(1) || xi == Rational(-1)) ok = false;
        }
        if (ok && !WeylCharacterOracle::degenerate(x)) return x;
    }
}

} // namespace

TEST_CASE("complete_homogeneous examples") {
    RationalRing R;
    std::array<Rational, 6> ones = {1, 1, 1, 1, 1, 1};
    CHECK(complete_homogeneous(R, 0, ones) == Rational(1));
    CHECK(complete_homogeneous(R, -3, ones) == Rational(0));
    CHECK(complete_homogeneous(R, 2, ones) == Rational(21));

    std::array<Rational, 6> mixed = {Rational(2), Rational(1, 2), 1, 1, 1, 1};
    CHECK(complete_homogeneous(R, 3, mixed) == h_by_enumeration(3, mixed));
}

TEST_CASE("j_value examples") {
    RationalRing R;
    auto ones = rational_triple({Rational(1), Rational(1), Rational(1)});
    CHECK(j_value(R, 1, ones) == Rational(6));
    CHECK(j_value(R, 2, ones) == Rational(21));

    // at x = i: i + 1/i + 4 = 4
    CyclotomicRing C;
    auto i = CyclotomicNumber::embed(RootOfUnity(4, 1));
    auto iinv = CyclotomicNumber::embed(RootOfUnity(4, 3));
    auto one = CyclotomicNumber::one();
    SpectralTriple<CyclotomicRing> t{{i, one, one}, {iinv, one, one}};
    CHECK(j_value(C, 1, t) == C.from_int(4));
}

TEST_CASE("symplectic character examples") {
    RationalRing R;
    auto ones = rational_triple({Rational(1), Rational(1), Rational(1)});
    CHECK(symplectic_character(R, Partition(0, 0, 0), ones) == Rational(1));
    CHECK(symplectic_character(R, Partition(1, 0, 0), ones) == Rational(6));
    CHECK(symplectic_character(R, Partition(1, 1, 0), ones) == Rational(14));

    // Sym^k of the standard representation stays irreducible for Sp(6):
    // dim V_(k,0,0) = C(k+5,5), cross-checked against the Weyl product formula
    for (int k = 0; k <= 8; ++k) {
        Rational dim = symplectic_character(R, Partition(k, 0, 0), ones);
        CHECK(dim == binomial(k + 5, 5));
        CHECK(dim == Rational(weyl_dimension(Partition(k, 0, 0))));
    }
}

TEST_CASE("weyl_dimension examples") {
    CHECK(weyl_dimension(Partition(0, 0, 0)) == 1);
    CHECK(weyl_dimension(Partition(1, 0, 0)) == 6);
    CHECK(weyl_dimension(Partition(1, 1, 1)) == 14);
    CHECK(weyl_dimension(Partition(2, 0, 0)) == 21);
}

TEST_CASE("weyl oracle examples") {
    WeylCharacterOracle oracle;
    std::array<Rational, 3> x = {Rational(2), Rational(3), Rational(5)};
    CHECK(oracle.evaluate(Partition(0, 0, 0), x) == Rational(1));

    Rational p1 = Rational(2) + Rational(1, 2) + Rational(3) + Rational(1, 3) + Rational(5) +
                  Rational(1, 5);
    CHECK(oracle.evaluate(Partition(1, 0, 0), x) == p1);

    RationalRing R;
    CHECK(oracle.evaluate(Partition(2, 1, 0), x) ==
          symplectic_character(R, Partition(2, 1, 0), rational_triple(x)));

    CHECK(WeylCharacterOracle::degenerate({Rational(1), Rational(2), Rational(3)}));
    CHECK_THROWS_AS(oracle.evaluate(Partition(1, 0, 0), {Rational(1), Rational(2), Rational(3)}),
                    std::domain_error);
}

TEST_CASE("determinant variant is pinned by the oracle") {
    RationalRing R;
    auto ones = rational_triple({Rational(1), Rational(1), Rational(1)});
    // the repeated-first-entry variant gives -1 where the dimension is 6
    CHECK(printed_variant(R, Partition(1, 0, 0), ones) == Rational(-1));

    WeylCharacterOracle oracle;
    std::array<Rational, 3> x = {Rational(2), Rational(3), Rational(5)};
    for (const Partition& la : {Partition(1, 0, 0), Partition(2, 1, 0), Partition(2, 2, 1)}) {
        Rational ref = oracle.evaluate(la, x);
        CHECK(symplectic_character(R, la, rational_triple(x)) == ref);
        CHECK_FALSE(printed_variant(R, la, rational_triple(x)) == ref);
    }
}

TEST_CASE("h_from_power_sums examples") {
    RationalRing R;
    std::vector<Rational> six_ones = {Rational(6), Rational(6), Rational(6)};
    auto h = h_from_power_sums(R, std::span<const Rational>(six_ones.data(), six_ones.size()));
    REQUIRE(h.size() == 4);
    CHECK(h[0] == Rational(1));
    CHECK(h[1] == Rational(6));
    CHECK(h[2] == Rational(21));
    CHECK(h[3] == Rational(56));

    // vanishing first power sum forces h_1 = 0
    std::vector<Rational> s0 = {Rational(0)};
    CHECK(h_from_power_sums(R, std::span<const Rational>(s0.data(), s0.size()))[1] == Rational(0));
}

TEST_CASE("property: Newton h equals enumeration h on random rational multisets") {
    RationalRing R;
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 15; ++trial) {
        std::array<Rational, 6> v;
        for (auto& x : v) x = Rational(num(rng), den(rng));
        // power sums s_1..s_6
        std::vector<Rational> s;
        for (int k = 1; k <= 6; ++k) {
            Rational acc(0);
            for (const auto& x : v) {
                Rational p(1);
                for (int i = 0; i < k; ++i) p *= x;
                acc += p;
            }
            s.push_back(acc);
        }
        auto h = h_from_power_sums(R, std::span<const Rational>(s.data(), s.size()));
        for (int d = 0; d <= 6; ++d)
            CHECK(h[static_cast<size_t>(d)] == h_by_enumeration(d, v));
    }
}

TEST_CASE("property: generating-function h equals enumeration h") {
    RationalRing R;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<Rational, 6> v;
        for (auto& x : v) x = Rational(num(rng), den(rng));
        for (int d = 0; d <= 6; ++d)
            CHECK(complete_homogeneous(R, d, v) == h_by_enumeration(d, v));
    }
}

TEST_CASE("property: oracle equality on random non-degenerate triples") {
    RationalRing R;
    WeylCharacterOracle oracle;
    std::mt19937 rng(13579);
    for (int w = 0; w <= 6; ++w) {
        for (const auto& la : Partition::all_of_weight(w)) {
            for (int trial = 0; trial < 5; ++trial) {
                auto x = random_nondegenerate_triple(rng);
                CHECK(symplectic_character(R, la, rational_triple(x)) == oracle.evaluate(la, x));
            }
        }
    }
}

TEST_CASE("property: character parity in the weight") {
    RationalRing R;
    std::mt19937 rng(2468);
    for (const Partition& la :
         {Partition(2, 1, 0), Partition(3, 0, 0), Partition(3, 2, 1), Partition(4, 1, 1)}) {
        for (int trial = 0; trial < 8; ++trial) {
            auto x = random_nondegenerate_triple(rng);
            std::array<Rational, 3> nx = {-x[0], -x[1], -x[2]};
            Rational lhs = symplectic_character(R, la, rational_triple(nx));
            Rational rhs = symplectic_character(R, la, rational_triple(x));
            if (la.weight() % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("property: Weyl symmetry (permutations and inversions)") {
    RationalRing R;
    std::mt19937 rng(1122);
    for (const Partition& la : {Partition(2, 1, 0), Partition(3, 1, 1), Partition(2, 2, 2)}) {
        for (int trial = 0; trial < 6; ++trial) {
            auto x = random_nondegenerate_triple(rng);
            Rational base = symplectic_character(R, la, rational_triple(x));
            std::array<Rational, 3> permuted = {x[2], x[0], x[1]};
            CHECK(symplectic_character(R, la, rational_triple(permuted)) == base);
            std::array<Rational, 3> inverted = {Rational(1) / x[0], x[1], Rational(1) / x[2]};
            CHECK(symplectic_character(R, la, rational_triple(inverted)) == base);
        }
    }
}

TEST_CASE("symplectic character at (1,1,1) matches the Weyl dimension, |lambda| <= 10") {
    RationalRing R;
    auto ones = rational_triple({Rational(1), Rational(1), Rational(1)});
    for (const auto& la : Partition::up_to_weight(10))
        CHECK(symplectic_character(R, la, ones) == Rational(weyl_dimension(la)));
}
