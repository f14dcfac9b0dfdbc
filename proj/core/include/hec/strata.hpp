#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hec/cyclotomic.hpp"
#include "hec/partition.hpp"
#include "hec/rational.hpp"
#include "hec/root_of_unity.hpp"

namespace hec {

/**
 * One entry (a, xi) of a set Y_i, with multiplicity. Replacing it by the four
 * sign combinations (+-a, +-xi) recovers the group elements it stands for.
 */
struct SpectralPair {
    RootOfUnity a;
    RootOfUnity xi;
    int multiplicity = 1;
};

/**
 * One stratum of the moduli space: the stabilizer group G_i (name and order),
 * the compactly supported Euler characteristic of the open stratum Sigma_i,
 * and the spectral set Y_i of cardinality #G_i / 4.
 */
struct StratumRecord {
    int index = 0;  // 1..11
    std::string group_name;
    long long group_order = 0;
    long long euler_number = 0;
    std::vector<SpectralPair> spectra;

    long long spectra_cardinality() const;
};

// Construction-time integrity tripwire: throws ConsistencyError naming the
// violated constraint (multiplicities >= 1, sum of multiplicities = #G/4,
// Euler numbers summing to 1 over the full list, indices 1..11).
void validate_strata(const std::vector<StratumRecord>& records);

// The canonical eleven records; validated once on first use.
const std::vector<StratumRecord>& builtin_strata();

// The six eigenvalues (a^2 xi, a^-2 xi^-1, a^-2 xi, a^2 xi^-1, xi, xi^-1)
// of the symplectic action attached to a spectral pair.
std::array<RootOfUnity, 6> six_eigenvalues(const SpectralPair& p);

// The printed table of e_c(H_3, V_lambda) for all even |lambda| <= 10 in
// weight-ascending, lexicographically descending order (38 golden pairs).
const std::vector<std::pair<Partition, long long>>& table4_values();

// Closure-diagram edges that are genuine stabilizer containments
// (big group -> small group), used by the invariant-dimension monotonicity
// check. Two further closure edges, 4->2 and 6->3, relate strata whose
// stabilizers share the SL2-image but carry different lift characters
// ((C_4,chi^2)/(C_4,1) and (Q_8,chi_0)/(Q_8,1)); neither group contains the
// other there, the subspace argument does not apply, and indeed
// dim V^{G_4} = 8 > 6 = dim V^{G_2} already at lambda = (1,1,0).
const std::vector<std::pair<int, int>>& monotonicity_edges();

/**
 * Evaluator for the stratified Euler characteristic
 *
 *   e_c(H_3, V_lambda) = sum_i e_c(Sigma_i) * dim V_lambda^{G_i},
 *
 * with dim V_lambda^{G_i} averaged over the group through the expanded
 * spectral sets. Character values are cached per (lambda, triple up to Weyl
 * symmetry) and h-sequences per triple; all caches are mutex-guarded, so a
 * single engine may be shared across threads.
 */
class EulerEngine {
public:
    EulerEngine();
    explicit EulerEngine(std::vector<StratumRecord> records);

    const std::vector<StratumRecord>& records() const { return records_; }

    // dim V_lambda^{G_i} for stratum_index in 1..11; throws ConsistencyError
    // if the averaged character sum is not a non-negative rational integer.
    Integer dim_invariants(int stratum_index, const Partition& la) const;

    Integer euler_characteristic(const Partition& la) const;

private:
    struct HCache {
        std::array<CyclotomicNumber, 6> e;
        std::vector<CyclotomicNumber> h;
    };

    CyclotomicNumber character_at(const Partition& la, const std::array<int, 3>& exps) const;
    static std::array<int, 3> canonical_triple(std::array<int, 3> exps);

    std::vector<StratumRecord> records_;
    mutable std::unordered_map<long long, HCache> h_cache_;
    mutable std::map<std::pair<std::array<int, 3>, Partition>, CyclotomicNumber> char_cache_;
    mutable std::map<std::pair<int, Partition>, Integer> dim_cache_;
    mutable std::mutex mutex_;
};

} // namespace hec
