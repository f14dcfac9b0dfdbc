#include "hec/weyl_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace hec {

LaurentPoly3 LaurentPoly3::monomial(const Exponents& e, const Rational& c) {
    LaurentPoly3 p;
    p.add_term(e, c);
    return p;
}

void LaurentPoly3::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly3 LaurentPoly3::operator+(const LaurentPoly3& o) const {
    LaurentPoly3 r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly3 LaurentPoly3::operator-(const LaurentPoly3& o) const {
    LaurentPoly3 r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly3 LaurentPoly3::operator*(const LaurentPoly3& o) const {
    LaurentPoly3 r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned n = static_cast<unsigned>(inv ? -e : e);
    Rational acc(1), base = x;
    while (n > 0) {
        if (n & 1U) acc *= base;
        base *= base;
        n >>= 1U;
    }
    return inv ? Rational(1) / acc : acc;
}

} // namespace

Rational LaurentPoly3::evaluate(const std::array<Rational, 3>& x) const {
    for (const auto& xi : x)
        if (xi.is_zero()) throw std::domain_error("LaurentPoly3::evaluate: zero variable");
    // per-variable power caches keyed by offset exponent
    std::array<std::map<int, Rational>, 3> pows;
    auto power = [&](int var, int e) -> const Rational& {
        auto& cache = pows[static_cast<size_t>(var)];
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, rational_pow(x[static_cast<size_t>(var)], e)).first;
        return it->second;
    };
    Rational acc(0);
    for (const auto& [e, c] : terms_)
        acc += c * power(0, e[0]) * power(1, e[1]) * power(2, e[2]);
    return acc;
}

namespace {

constexpr std::array<int, 3> kRho = {3, 2, 1};

// det(x_j^{l_i} - x_j^{-l_i}) expanded over the six permutations.
LaurentPoly3 alternant(const std::array<int, 3>& l) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static constexpr int signs[6] = {1, -1, -1, 1, 1, -1};
    LaurentPoly3 det;
    for (int p = 0; p < 6; ++p) {
        LaurentPoly3 prod = LaurentPoly3::monomial({0, 0, 0}, Rational(signs[p]));
        for (int i = 0; i < 3; ++i) {
            int j = perms[p][i];  // column = variable index
            LaurentPoly3 factor;
            std::array<int, 3> e{0, 0, 0};
            e[static_cast<size_t>(j)] = l[static_cast<size_t>(i)];
            factor.add_term(e, Rational(1));
            e[static_cast<size_t>(j)] = -l[static_cast<size_t>(i)];
            factor.add_term(e, Rational(-1));
            prod = prod * factor;
        }
        det = det + prod;
    }
    return det;
}

struct DenseCube {
    int w = 0;                // exponents live in [0, w) per variable
    std::vector<Rational> c;  // flattened, lex order == flat index order

    explicit DenseCube(int width) : w(width), c(static_cast<size_t>(width) * width * width) {}

    size_t flatten(const std::array<int, 3>& e) const {
        return (static_cast<size_t>(e[0]) * static_cast<size_t>(w) + static_cast<size_t>(e[1])) *
                   static_cast<size_t>(w) +
               static_cast<size_t>(e[2]);
    }
    std::array<int, 3> unflatten(size_t idx) const {
        int e2 = static_cast<int>(idx % static_cast<size_t>(w));
        idx /= static_cast<size_t>(w);
        int e1 = static_cast<int>(idx % static_cast<size_t>(w));
        int e0 = static_cast<int>(idx / static_cast<size_t>(w));
        return {e0, e1, e2};
    }
};

// Exact division of the cleared numerator by the cleared denominator under
// lex order; the scan index only ever moves down because every subtraction
// lands strictly lex-below the current leading term. A non-exact division
// surfaces as a negative quotient exponent.
LaurentPoly3 divide_exact(DenseCube num, const LaurentPoly3& den, const std::array<int, 3>& shift) {
    std::array<int, 3> dlead{};
    Rational dlead_coeff;
    bool first = true;
    std::vector<std::pair<std::array<int, 3>, Rational>> dterms;
    for (const auto& [e, c] : den.terms()) {
        dterms.emplace_back(e, c);
        if (first || e > dlead) {
            dlead = e;
            dlead_coeff = c;
            first = false;
        }
    }

    LaurentPoly3 quotient;
    size_t idx = num.c.size();
    while (idx > 0) {
        --idx;
        if (num.c[idx].is_zero()) continue;
        auto e = num.unflatten(idx);
        std::array<int, 3> q{e[0] - dlead[0], e[1] - dlead[1], e[2] - dlead[2]};
        if (q[0] < 0 || q[1] < 0 || q[2] < 0)
            throw std::logic_error("weyl oracle: alternant division is not exact");
        Rational qc = num.c[idx] / dlead_coeff;
        quotient.add_term({q[0] - shift[0], q[1] - shift[1], q[2] - shift[2]}, qc);
        for (const auto& [f, d] : dterms) {
            std::array<int, 3> target{q[0] + f[0], q[1] + f[1], q[2] + f[2]};
            if (target[0] >= num.w || target[1] >= num.w || target[2] >= num.w)
                throw std::logic_error("weyl oracle: alternant division is not exact");
            num.c[num.flatten(target)] -= qc * d;
        }
        // the leading slot is now exactly cancelled; keep scanning downward
    }
    return quotient;
}

} // namespace

const LaurentPoly3& WeylCharacterOracle::character_polynomial(const Partition& la) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(la);
    if (it != cache_.end()) return it->second;

    std::array<int, 3> l{la[0] + kRho[0], la[1] + kRho[1], la[2] + kRho[2]};
    LaurentPoly3 numerator = alternant(l);
    LaurentPoly3 denominator = alternant(kRho);

    // clear denominators: numerator * (x1 x2 x3)^l1, denominator * (x1 x2 x3)^3
    int width = 2 * l[0] + 1;
    DenseCube cleared(width);
    for (const auto& [e, c] : numerator.terms())
        cleared.c[cleared.flatten({e[0] + l[0], e[1] + l[0], e[2] + l[0]})] = c;
    LaurentPoly3 den_cleared;
    for (const auto& [e, c] : denominator.terms())
        den_cleared.add_term({e[0] + kRho[0], e[1] + kRho[0], e[2] + kRho[0]}, c);

    // quotient carries a residual (x1 x2 x3)^{l1 - 3} = (x1 x2 x3)^{lambda1}
    std::array<int, 3> shift{la[0], la[0], la[0]};
    auto quotient = divide_exact(std::move(cleared), den_cleared, shift);
    return cache_.emplace(la, std::move(quotient)).first->second;
}

Rational WeylCharacterOracle::evaluate(const Partition& la, const std::array<Rational, 3>& x) const {
    if (degenerate(x))
        throw std::domain_error(
            "WeylCharacterOracle: degenerate evaluation point (zero Weyl denominator); "
            "perturb the triple");
    return character_polynomial(la).evaluate(x);
}

bool WeylCharacterOracle::degenerate(const std::array<Rational, 3>& x) {
    for (const auto& xi : x)
        if (xi.is_zero()) return true;
    std::array<std::array<Rational, 3>, 3> a;  // a[i][j] = x_j^{rho_i} - x_j^{-rho_i}
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                rational_pow(x[static_cast<size_t>(j)], kRho[static_cast<size_t>(i)]) -
                rational_pow(x[static_cast<size_t>(j)], -kRho[static_cast<size_t>(i)]);
    Rational det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    return det.is_zero();
}

} // namespace hec
