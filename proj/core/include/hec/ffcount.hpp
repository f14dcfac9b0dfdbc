#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hec/finite_field.hpp"
#include "hec/partition.hpp"
#include "hec/rational.hpp"

namespace hec {

/**
 * y^2 = f(x) with f of degree exactly 7 or 8 over F_p; c[d] is the
 * coefficient of x^d (c[8] = 0 in degree 7). Only squarefree f define smooth
 * genus-3 curves; enumeration filters on gcd(f, f') being constant.
 */
struct CurveEquation {
    int degree = 7;
    std::array<int, 9> c{};
};

bool is_squarefree(const FiniteField& base, const CurveEquation& f);

// #C(F_{p^k}) on the smooth projective model: affine points via the quadratic
// character, plus 1 point at infinity in degree 7, plus 1 + chi(c_8) in
// degree 8.
long long point_count(const FieldTower& tower, const CurveEquation& f, int k);

// s_k = p^k + 1 - #C(F_{p^k}) for k = 1..3, checked against the Weil bound
// |s_k| <= floor(6 p^{k/2}).
struct PowerSums {
    int s1 = 0, s2 = 0, s3 = 0;
};
PowerSums curve_power_sums(const FieldTower& tower, const CurveEquation& f);

/**
 * Degree-6 Weil polynomial data of a curve over F_q: eigenvalue power sums
 * s_1..s_3 and elementary symmetric functions e_1..e_6, completed through the
 * functional equation e_4 = q e_2, e_5 = q^2 e_1, e_6 = q^3.
 */
struct FrobeniusData {
    int q = 0;
    long long s1 = 0, s2 = 0, s3 = 0;
    std::array<long long, 6> e{};
};

// Newton reconstruction e_1 = s_1, e_2 = (e_1 s_1 - s_2)/2,
// e_3 = (e_2 s_1 - e_1 s_2 + s_3)/3; non-exact division or a Weil-bound
// violation raises ConsistencyError.
FrobeniusData weil_polynomial(long long s1, long long s2, long long s3, int q);

// Tr(F, V_lambda(H^1)) = q^{|lambda|/2} * sp_lambda(alpha / sqrt q), computed
// exactly in Q(sqrt q) from the rescaled power sums; zero for odd weight.
// A non-rational or non-integral outcome raises ConsistencyError.
Integer frobenius_trace(const FrobeniusData& d, const Partition& la);

/**
 * Aggregated scan of every squarefree f over F_p: the number of curves and
 * the multiset of (s_1, s_2, s_3) observed. The scan partitions the flat
 * equation space (degree, leading coefficient, lower digits) into contiguous
 * index ranges, one per shard; results are exact and independent of the
 * shard count.
 */
struct Census {
    int p = 0;
    long long curves = 0;
    std::map<std::array<int, 3>, long long> histogram;
};

using ProgressFn = std::function<void(long long scanned, long long total)>;

Census run_census(int p, int shards = 1, const ProgressFn& progress = nullptr);

// Sequential enumeration of squarefree curves in canonical index order.
void for_each_squarefree_curve(int p, const std::function<void(const CurveEquation&)>& fn);

long long raw_equation_count(int p);         // (p-1)(p^7 + p^8)
long long squarefree_equation_count(int p);  // (p-1)(p^8 - p^6), the closed form

/**
 * Per-curve cache record and its binary file format: magic "HE3C", one
 * version byte (1), u32le q, then 8-byte records (u8 degree, u8 leading
 * coefficient, s1/s2/s3 as i16le) in canonical enumeration order, and a
 * u64le record-count trailer. Any header/count mismatch on read raises
 * ConsistencyError.
 */
struct CurveRecord {
    uint8_t degree = 0;
    uint8_t lc = 0;
    int16_t s1 = 0, s2 = 0, s3 = 0;
};

std::vector<CurveRecord> enumerate_records(int p, int shards = 1,
                                           const ProgressFn& progress = nullptr);
void write_curve_cache(const std::string& path, int p, const std::vector<CurveRecord>& records);
std::vector<CurveRecord> read_curve_cache(const std::string& path, int expected_p);
Census census_from_records(int p, const std::vector<CurveRecord>& records);

// Reads a valid cache if present, otherwise scans (writing the cache when a
// path is given).
Census load_or_run_census(int p, int shards, const std::optional<std::string>& cache_path,
                          const ProgressFn& progress = nullptr);

/**
 * The groupoid-weighted trace sum sum_f Tr(F, V_lambda(H^1)) / D(q) with
 * effective divisor D(q) = (q^2-1)(q^2-q): the equation space is a torsor
 * under GL_2 x Gm modulo the kernel {(sI, s^4)} of order q-1. The q^5 mass
 * check empirically pins the divisor.
 */
struct TraceSumResult {
    Integer raw_sum;
    Integer divisor;
    Rational value;
};

TraceSumResult trace_sum(const Census& census, const Partition& la);
Rational trace_sum(const Partition& la, int q, int shards = 1);

/** Integer polynomial in the Tate class L. */
struct MotivicPolynomial {
    std::map<int, long long> coeff;  // exponent -> coefficient, zeros absent

    Integer eval(long long L) const;
    std::string str() const;  // e.g. "-L^6 + L^2 - 1"
    bool operator==(const MotivicPolynomial& o) const { return coeff == o.coeff; }
};

// The seven conjectural motivic Euler characteristics.
const std::vector<std::pair<Partition, MotivicPolynomial>>& table5();
const MotivicPolynomial* table5_lookup(const Partition& la);

} // namespace hec
