#include "hec/cyclotomic.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hec {
namespace {

using Poly = std::vector<long long>;  // dense integer coefficients, c[0] + c[1] x + ...

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// Exact division of integer polynomials with monic divisor; throws if the
// division leaves a remainder.
Poly exact_divide(Poly num, const Poly& den) {
    int dd = poly_degree(den);
    if (dd < 0 || den[static_cast<size_t>(dd)] != 1)
        throw std::logic_error("exact_divide: divisor must be monic");
    int dn = poly_degree(num);
    if (dn < dd) throw std::logic_error("exact_divide: degree underflow");
    Poly quot(static_cast<size_t>(dn - dd + 1), 0);
    for (int k = dn - dd; k >= 0; --k) {
        long long c = num[static_cast<size_t>(k + dd)];
        quot[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<size_t>(k + j)] -= c * den[static_cast<size_t>(j)];
    }
    if (poly_degree(num) >= 0)
        throw std::logic_error("exact_divide: nonzero remainder");
    return quot;
}

Poly x_pow_minus_one(int n) {
    Poly p(static_cast<size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    return p;
}

// Phi_n by recursion on divisors: Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
const Poly& cyclotomic_poly(int n, std::map<int, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly p = x_pow_minus_one(n);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = exact_divide(std::move(p), cyclotomic_poly(d, memo));
    }
    return memo.emplace(n, std::move(p)).first->second;
}

struct Tables {
    Poly phi;                                          // Phi_336, degree 96, monic
    std::vector<std::pair<int, long long>> phi_lower;  // nonzero coefficients below x^96
    std::vector<std::array<long long, 96>> zeta_pow;   // zeta^e mod Phi for e in [0, 336)

    Tables() {
        std::map<int, Poly> memo;
        phi = cyclotomic_poly(kCyclotomicOrder, memo);

        // startup self-test: degree phi(336) = 96 and exact divisibility of x^336 - 1
        if (poly_degree(phi) != CyclotomicNumber::degree)
            throw std::logic_error("Phi_336 self-test failed: wrong degree");
        exact_divide(x_pow_minus_one(kCyclotomicOrder), phi);

        for (int i = 0; i < CyclotomicNumber::degree; ++i)
            if (phi[static_cast<size_t>(i)] != 0)
                phi_lower.emplace_back(i, phi[static_cast<size_t>(i)]);

        zeta_pow.resize(kCyclotomicOrder);
        zeta_pow[0].fill(0);
        zeta_pow[0][0] = 1;
        for (int e = 1; e < kCyclotomicOrder; ++e) {
            const auto& prev = zeta_pow[static_cast<size_t>(e - 1)];
            auto& cur = zeta_pow[static_cast<size_t>(e)];
            long long top = prev[95];
            for (int j = 95; j >= 1; --j) cur[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
            cur[0] = 0;
            if (top != 0)  // x^96 = -(lower part of Phi)
                for (const auto& [m, c] : phi_lower) cur[static_cast<size_t>(m)] -= top * c;
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

} // namespace

CyclotomicNumber::CyclotomicNumber() : c_(degree) {}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& r) {
    CyclotomicNumber x;
    x.c_[0] = r;
    return x;
}

CyclotomicNumber CyclotomicNumber::embed(const RootOfUnity& r) {
    const auto& row = tables().zeta_pow[static_cast<size_t>(r.exponent336())];
    CyclotomicNumber x;
    for (int j = 0; j < degree; ++j)
        if (row[static_cast<size_t>(j)] != 0) x.c_[static_cast<size_t>(j)] = Rational(row[static_cast<size_t>(j)]);
    return x;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
    for (int i = 1; i < degree; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) return std::nullopt;
    return c_[0];
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    CyclotomicNumber r(*this);
    r += o;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    CyclotomicNumber r(*this);
    r -= o;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    for (int i = 0; i < degree; ++i)
        if (!o.c_[static_cast<size_t>(i)].is_zero()) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    for (int i = 0; i < degree; ++i)
        if (!o.c_[static_cast<size_t>(i)].is_zero()) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r;
    for (int i = 0; i < degree; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    // sparse-aware schoolbook product, then reduction by the monic Phi_336
    std::array<int, degree> nza{}, nzb{};
    int na = 0, nb = 0;
    for (int i = 0; i < degree; ++i) {
        if (!c_[static_cast<size_t>(i)].is_zero()) nza[static_cast<size_t>(na++)] = i;
        if (!o.c_[static_cast<size_t>(i)].is_zero()) nzb[static_cast<size_t>(nb++)] = i;
    }
    std::array<Rational, 2 * degree - 1> acc;
    for (int ia = 0; ia < na; ++ia) {
        int i = nza[static_cast<size_t>(ia)];
        const Rational& ai = c_[static_cast<size_t>(i)];
        for (int ib = 0; ib < nb; ++ib) {
            int j = nzb[static_cast<size_t>(ib)];
            acc[static_cast<size_t>(i + j)] += ai * o.c_[static_cast<size_t>(j)];
        }
    }
    const auto& lower = tables().phi_lower;
    for (int d = 2 * degree - 2; d >= degree; --d) {
        if (acc[static_cast<size_t>(d)].is_zero()) continue;
        const Rational c = acc[static_cast<size_t>(d)];
        for (const auto& [m, pm] : lower)
            acc[static_cast<size_t>(d - degree + m)] -= c * Rational(pm);
    }
    CyclotomicNumber r;
    for (int i = 0; i < degree; ++i) r.c_[static_cast<size_t>(i)] = acc[static_cast<size_t>(i)];
    return r;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& s) const {
    CyclotomicNumber r;
    if (s.is_zero()) return r;
    for (int i = 0; i < degree; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * s;
    return r;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long n) const {
    CyclotomicNumber result = one();
    CyclotomicNumber base(*this);
    while (n > 0) {
        if (n & 1UL) result *= base;
        base *= base;
        n >>= 1UL;
    }
    return result;
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < degree; ++i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << c;
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

const std::vector<long long>& CyclotomicNumber::minimal_polynomial() {
    return tables().phi;
}

} // namespace hec
