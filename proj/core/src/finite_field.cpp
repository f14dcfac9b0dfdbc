#include "hec/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace hec {
namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// digits of a in base p, little-endian, length k
void unpack(int a, int p, int k, int* out) {
    for (int i = 0; i < k; ++i) {
        out[i] = a % p;
        a /= p;
    }
}

} // namespace

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_odd_prime(p)) throw std::invalid_argument("FiniteField: p must be an odd prime");
    if (k < 1 || k > 3) throw std::invalid_argument("FiniteField: k must be 1, 2 or 3");
    if (modulus_.size() != static_cast<size_t>(k) + 1 || modulus_.back() != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of degree k");
    for (int c : modulus_)
        if (c < 0 || c >= p) throw std::invalid_argument("FiniteField: modulus coefficients must be reduced mod p");
    if (k >= 2) {
        // degree 2 or 3: irreducible over F_p iff root-free
        for (int x = 0; x < p; ++x) {
            long long v = 0;
            for (int i = k; i >= 0; --i) v = (v * x + modulus_[static_cast<size_t>(i)]) % p;
            if (v == 0)
                throw std::invalid_argument("FiniteField: modulus has root " + std::to_string(x) +
                                            " mod " + std::to_string(p));
        }
    }

    size_ = 1;
    for (int i = 0; i < k; ++i) size_ *= p;
    if (size_ > 4096) throw std::invalid_argument("FiniteField: field too large for table arithmetic");

    add_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
    mul_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
    neg_.resize(static_cast<size_t>(size_));
    inv_.assign(static_cast<size_t>(size_), 0);
    chi_.resize(static_cast<size_t>(size_));

    int da[3], db[3], prod[5];
    for (int a = 0; a < size_; ++a) {
        unpack(a, p, k, da);
        int n = 0, pw = 1;
        for (int i = 0; i < k; ++i) {
            n += ((p - da[i]) % p) * pw;
            pw *= p;
        }
        neg_[static_cast<size_t>(a)] = static_cast<int16_t>(n);
    }
    for (int a = 0; a < size_; ++a) {
        unpack(a, p, k, da);
        for (int b = 0; b < size_; ++b) {
            unpack(b, p, k, db);
            int s = 0, pw = 1;
            for (int i = 0; i < k; ++i) {
                s += ((da[i] + db[i]) % p) * pw;
                pw *= p;
            }
            add_[idx(a, b)] = static_cast<int16_t>(s);

            for (int i = 0; i < 2 * k - 1; ++i) prod[i] = 0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            // reduce by the monic modulus
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int j = 0; j < k; ++j)
                    prod[d - k + j] = ((prod[d - k + j] - c * modulus_[static_cast<size_t>(j)]) % p + p) % p;
            }
            int m = 0, pw2 = 1;
            for (int i = 0; i < k; ++i) {
                m += prod[i] * pw2;
                pw2 *= p;
            }
            mul_[idx(a, b)] = static_cast<int16_t>(m);
        }
    }
    for (int a = 1; a < size_; ++a) {
        for (int b = 1; b < size_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[static_cast<size_t>(a)] = static_cast<int16_t>(b);
                break;
            }
        if (inv_[static_cast<size_t>(a)] == 0)
            throw std::logic_error("FiniteField: element without inverse; modulus not irreducible?");
    }
    chi_[0] = 0;
    long long half = (static_cast<long long>(size_) - 1) / 2;
    for (int a = 1; a < size_; ++a)
        chi_[static_cast<size_t>(a)] = static_cast<int8_t>(pow(a, half) == 1 ? 1 : -1);
}

int FiniteField::inverse(int a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    return inv_[static_cast<size_t>(a)];
}

int FiniteField::pow(int a, long long e) const {
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    int acc = 1, base = a;
    while (e > 0) {
        if (e & 1LL) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1LL;
    }
    return acc;
}

const FiniteField& FieldTower::level(int k) const {
    switch (k) {
        case 1: return base;
        case 2: return quad;
        case 3: return cubic;
        default: throw std::invalid_argument("FieldTower: level must be 1, 2 or 3");
    }
}

FieldTower standard_tower(int p) {
    switch (p) {
        case 3:
            return FieldTower{FiniteField::prime_field(3),
                              FiniteField(3, 2, {1, 0, 1}),      // x^2 + 1
                              FiniteField(3, 3, {2, 2, 0, 1})};  // x^3 - x - 1
        case 5:
            return FieldTower{FiniteField::prime_field(5),
                              FiniteField(5, 2, {3, 0, 1}),      // x^2 - 2
                              FiniteField(5, 3, {1, 1, 0, 1})};  // x^3 + x + 1
        default:
            throw std::invalid_argument("standard_tower: only p = 3 and p = 5 are wired up");
    }
}

} // namespace hec
