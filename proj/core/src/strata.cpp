#include "hec/strata.hpp"

#include <algorithm>
#include <sstream>

#include "hec/characters.hpp"
#include "hec/errors.hpp"

namespace hec {

long long StratumRecord::spectra_cardinality() const {
    long long n = 0;
    for (const auto& p : spectra) n += p.multiplicity;
    return n;
}

void validate_strata(const std::vector<StratumRecord>& records) {
    if (records.size() != 11)
        throw ConsistencyError("strata: expected 11 records, got " + std::to_string(records.size()));
    long long euler_sum = 0;
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        std::string tag = "stratum " + std::to_string(r.index);
        if (r.index != static_cast<int>(i) + 1)
            throw ConsistencyError("strata: records out of order at position " + std::to_string(i + 1));
        if (r.group_order <= 0 || r.group_order % 4 != 0)
            throw ConsistencyError("strata: group order of " + tag + " is not a positive multiple of 4");
        if (r.spectra.empty())
            throw ConsistencyError("strata: empty spectral set for " + tag);
        for (const auto& p : r.spectra)
            if (p.multiplicity < 1)
                throw ConsistencyError("strata: non-positive multiplicity in " + tag);
        if (r.spectra_cardinality() != r.group_order / 4)
            throw ConsistencyError("strata: |Y_i| = #G_i/4 violated for " + tag + ": " +
                                   std::to_string(r.spectra_cardinality()) + " != " +
                                   std::to_string(r.group_order / 4));
        euler_sum += r.euler_number;
    }
    if (euler_sum != 1)
        throw ConsistencyError("strata: Table-2 sum of Euler numbers is " +
                               std::to_string(euler_sum) + ", expected 1");
}

std::array<RootOfUnity, 6> six_eigenvalues(const SpectralPair& p) {
    RootOfUnity a2 = p.a.squared();
    RootOfUnity a2inv = a2.inverse();
    RootOfUnity xi = p.xi;
    RootOfUnity xiinv = xi.inverse();
    return {a2 * xi, a2inv * xiinv, a2inv * xi, a2 * xiinv, xi, xiinv};
}

EulerEngine::EulerEngine() : records_(builtin_strata()) {}

EulerEngine::EulerEngine(std::vector<StratumRecord> records) : records_(std::move(records)) {
    validate_strata(records_);
}

std::array<int, 3> EulerEngine::canonical_triple(std::array<int, 3> exps) {
    for (auto& e : exps) {
        e = ((e % kCyclotomicOrder) + kCyclotomicOrder) % kCyclotomicOrder;
        e = std::min(e, (kCyclotomicOrder - e) % kCyclotomicOrder);  // fold x -> 1/x
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

CyclotomicNumber EulerEngine::character_at(const Partition& la, const std::array<int, 3>& exps) const {
    auto canon = canonical_triple(exps);
    auto key = std::make_pair(canon, la);
    auto it = char_cache_.find(key);
    if (it != char_cache_.end()) return it->second;

    long long hkey = (static_cast<long long>(canon[0]) * kCyclotomicOrder + canon[1]) *
                         kCyclotomicOrder +
                     canon[2];
    auto hit = h_cache_.find(hkey);
    if (hit == h_cache_.end()) {
        CyclotomicRing R;
        std::array<CyclotomicNumber, 6> values;
        for (int i = 0; i < 3; ++i) {
            values[static_cast<size_t>(2 * i)] =
                CyclotomicNumber::embed(RootOfUnity::from_exponent336(canon[static_cast<size_t>(i)]));
            values[static_cast<size_t>(2 * i + 1)] =
                CyclotomicNumber::embed(RootOfUnity::from_exponent336(-canon[static_cast<size_t>(i)]));
        }
        HCache entry;
        entry.e = elementary_symmetric6(R, values);
        hit = h_cache_.emplace(hkey, std::move(entry)).first;
    }

    CyclotomicRing R;
    extend_h_sequence(R, hit->second.e, hit->second.h, la[0] + 2);
    CyclotomicNumber value = symplectic_character_from_h<CyclotomicRing>(R, la, hit->second.h);
    char_cache_.emplace(std::move(key), value);
    return value;
}

Integer EulerEngine::dim_invariants(int stratum_index, const Partition& la) const {
    if (stratum_index < 1 || stratum_index > static_cast<int>(records_.size()))
        throw std::invalid_argument("dim_invariants: stratum index out of range 1..11");

    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(stratum_index, la);
    auto it = dim_cache_.find(key);
    if (it != dim_cache_.end()) return it->second;

    const StratumRecord& rec = records_[static_cast<size_t>(stratum_index - 1)];
    const int half = kCyclotomicOrder / 2;  // exponent shift of the sign flip

    CyclotomicNumber total;
    for (const auto& pair : rec.spectra) {
        int ea = pair.a.exponent336();
        int exi = pair.xi.exponent336();
        CyclotomicNumber pair_sum;
        for (int sa = 0; sa < 2; ++sa) {
            for (int sxi = 0; sxi < 2; ++sxi) {
                int a_e = (ea + sa * half) % kCyclotomicOrder;
                int xi_e = (exi + sxi * half) % kCyclotomicOrder;
                std::array<int, 3> exps = {(2 * a_e + xi_e) % kCyclotomicOrder,
                                           (2 * (kCyclotomicOrder - a_e) + xi_e) % kCyclotomicOrder,
                                           xi_e};
                pair_sum += character_at(la, exps);
            }
        }
        total += pair_sum.scaled(Rational(pair.multiplicity));
    }

    auto rational = total.scaled(Rational(1, rec.group_order)).as_rational();
    std::ostringstream diag;
    diag << "dim_invariants: stratum " << stratum_index << ", lambda " << la.str();
    if (!rational)
        throw ConsistencyError(diag.str() + ": averaged character sum is not rational");
    if (!rational->is_integer() || rational->sign() < 0)
        throw ConsistencyError(diag.str() + ": expected a non-negative integer, got " +
                               rational->str());

    Integer dim = rational->to_integer();
    dim_cache_.emplace(key, dim);
    return dim;
}

Integer EulerEngine::euler_characteristic(const Partition& la) const {
    Integer total = 0;
    for (const auto& rec : records_)
        total += Integer(static_cast<long>(rec.euler_number)) * dim_invariants(rec.index, la);
    return total;
}

} // namespace hec
