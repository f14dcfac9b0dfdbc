// Acceptance suite: runs every headline correctness criterion at its stated
// tolerance (always exact arithmetic) and prints one PASS/FAIL line each.
// Criterion 8 (the q = 5 sweep) is long and runs only when HEC_ACCEPT_LONG=1
// is set; it prints SKIP otherwise. Exit code 0 iff nothing failed.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "hec/characters.hpp"
#include "hec/errors.hpp"
#include "hec/ffcount.hpp"
#include "hec/strata.hpp"
#include "hec/weyl_oracle.hpp"

using namespace hec;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome criterion_table4() {
    auto t0 = std::chrono::steady_clock::now();
    EulerEngine engine;
    size_t matched = 0;
    for (const auto& [la, expected] : table4_values()) {
        if (engine.euler_characteristic(la) != static_cast<long>(expected))
            return {false, "mismatch at " + la.str()};
        ++matched;
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << matched << "/38 printed values exact in " << dt << " s";
    if (dt >= 5.0) return {false, os.str() + " (budget 5 s exceeded)"};
    return {true, os.str()};
}

Outcome criterion_odd_vanishing() {
    EulerEngine engine;
    auto odd = Partition::up_to_weight(9, 1);
    for (const auto& la : odd)
        if (engine.euler_characteristic(la) != 0) return {false, "nonzero at " + la.str()};
    return {true, std::to_string(odd.size()) + " odd-weight partitions all vanish"};
}

Outcome criterion_worked_formula() {
    EulerEngine engine;
    for (int k = 0; k <= 12; ++k) {
        Integer expected = (k % 2 == 0) ? binomial(k + 5, 5) : Integer(0);
        if (engine.dim_invariants(1, Partition(k, 0, 0)) != expected)
            return {false, "mismatch at k=" + std::to_string(k)};
    }
    return {true, "dim V_(k,0,0)^{G_1} = C(k+5,5)(1+(-1)^k)/2 for k = 0..12"};
}

Outcome criterion_data_integrity() {
    try {
        const auto& records = builtin_strata();  // construction-time tripwire
        long long sum = 0;
        for (const auto& r : records) {
            if (r.spectra_cardinality() != r.group_order / 4)
                return {false, "cardinality broken in stratum " + std::to_string(r.index)};
            sum += r.euler_number;
        }
        if (sum != 1) return {false, "Euler numbers sum to " + std::to_string(sum)};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    return {true, "sum e_c(Sigma_i) = 1 and |Y_i| = #G_i/4 for all 11 strata"};
}

Outcome criterion_oracle_equivalence() {
    RationalRing R;
    WeylCharacterOracle oracle;
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto random_triple = [&]() {
        while (true) {
            std::array<Rational, 3> x;
            bool ok = true;
            for (auto& xi : x) {
                xi = Rational(num(rng), den(rng));
                if (xi.is_zero() || xi == Rational(1) || xi == Rational(-1)) ok = false;
            }
            if (ok && !WeylCharacterOracle::degenerate(x)) return x;
        }
    };

    long long comparisons = 0;
    for (int w = 0; w <= 8; ++w) {
        for (const auto& la : Partition::all_of_weight(w)) {
            for (int trial = 0; trial < 50; ++trial) {
                auto x = random_triple();
                SpectralTriple<RationalRing> t{
                    {x[0], x[1], x[2]},
                    {Rational(1) / x[0], Rational(1) / x[1], Rational(1) / x[2]}};
                if (symplectic_character(R, la, t) != oracle.evaluate(la, x))
                    return {false, "oracle mismatch at " + la.str()};
                ++comparisons;
            }
        }
    }

    auto ones = SpectralTriple<RationalRing>{{Rational(1), Rational(1), Rational(1)},
                                             {Rational(1), Rational(1), Rational(1)}};
    for (const auto& la : Partition::up_to_weight(10))
        if (symplectic_character(R, la, ones) != Rational(weyl_dimension(la)))
            return {false, "dimension mismatch at " + la.str()};

    return {true, std::to_string(comparisons) + " exact oracle comparisons, 50 triples per " +
                      "partition of weight <= 8, plus dimensions up to weight 10"};
}

Outcome criterion_mass(Census& census3) {
    auto t0 = std::chrono::steady_clock::now();
    census3 = run_census(3, 1);  // single-threaded by construction
    auto r = trace_sum(census3, Partition(0, 0, 0));
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "trace_sum((0,0,0),3) = " << r.value << " in " << dt << " s single-threaded";
    if (r.value != Rational(243)) return {false, os.str() + " (expected 243)"};
    if (dt >= 10.0) return {false, os.str() + " (budget 10 s exceeded)"};
    return {true, os.str()};
}

Outcome criterion_table5_q3(const Census& census3) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& [la, poly] : table5()) {
        auto r = trace_sum(census3, la);
        if (r.value != Rational(poly.eval(3)))
            return {false, "mismatch at " + la.str() + ": got " + r.value.str()};
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "all seven rows equal the polynomial at L=3, " << dt << " s";
    if (dt >= 60.0) return {false, os.str() + " (budget 60 s exceeded)"};
    return {true, os.str()};
}

Outcome criterion_table5_q5() {
    auto t0 = std::chrono::steady_clock::now();
    Census census5 = run_census(5, 8);
    for (const auto& [la, poly] : table5()) {
        auto r = trace_sum(census5, la);
        if (r.value != Rational(poly.eval(5)))
            return {false, "mismatch at " + la.str() + ": got " + r.value.str()};
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "all seven rows equal the polynomial at L=5 (" << census5.curves << " curves, 8 shards, "
       << dt << " s)";
    if (dt >= 1800.0) return {false, os.str() + " (budget 30 min exceeded)"};
    return {true, os.str()};
}

Outcome criterion_l1_bridge() {
    for (const auto& [la, poly] : table5()) {
        bool found = false;
        for (const auto& [gla, value] : table4_values()) {
            if (gla != la) continue;
            found = true;
            if (poly.eval(1) != static_cast<long>(value))
                return {false, "bridge broken at " + la.str()};
        }
        if (!found) return {false, la.str() + " missing from the printed table"};
    }
    return {true, "every motivic polynomial at L=1 equals the printed Euler characteristic"};
}

Outcome criterion_integrality(const Census& census3) {
    EulerEngine engine;
    try {
        for (const auto& la : Partition::up_to_weight(12))
            for (const auto& rec : builtin_strata()) engine.dim_invariants(rec.index, la);
    } catch (const ConsistencyError& e) {
        return {false, e.what()};
    }

    // exhaustive per-curve trace integrality at q=3, weight <= 4; traces are
    // memoized per Frobenius datum, every curve is visited
    auto lambdas = Partition::up_to_weight(4);
    std::map<std::array<int, 3>, bool> seen;
    long long curves = 0;
    const FieldTower tower = standard_tower(3);
    try {
        for_each_squarefree_curve(3, [&](const CurveEquation& f) {
            ++curves;
            auto ps = curve_power_sums(tower, f);
            std::array<int, 3> key{ps.s1, ps.s2, ps.s3};
            if (seen.emplace(key, true).second) {
                auto d = weil_polynomial(ps.s1, ps.s2, ps.s3, 3);
                for (const auto& la : lambdas) frobenius_trace(d, la);
            }
        });
    } catch (const ConsistencyError& e) {
        return {false, e.what()};
    }
    if (curves != census3.curves) return {false, "enumeration count drifted"};
    std::ostringstream os;
    os << "dims integral for |lambda| <= 12 on all strata; traces integral for all " << curves
       << " q=3 curves, |lambda| <= 4";
    return {true, os.str()};
}

} // namespace

int main() {
    bool run_long = false;
    if (const char* env = std::getenv("HEC_ACCEPT_LONG"); env && std::string(env) == "1")
        run_long = true;

    Census census3;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"criterion 1 (Table 4 golden, < 5 s)", criterion_table4},
        {"criterion 2 (odd-weight vanishing)", criterion_odd_vanishing},
        {"criterion 3 (stratum-1 worked formula)", criterion_worked_formula},
        {"criterion 4 (strata data integrity)", criterion_data_integrity},
        {"criterion 5 (character oracle equivalence)", criterion_oracle_equivalence},
        {"criterion 6 (q=3 mass = 243, < 10 s)", [&] { return criterion_mass(census3); }},
        {"criterion 7 (Table 5 at q=3, < 60 s)", [&] { return criterion_table5_q3(census3); }},
        {"criterion 8 (Table 5 at q=5, long)", criterion_table5_q5},
        {"criterion 9 (L=1 bridge)", criterion_l1_bridge},
        {"criterion 10 (integrality tripwires)", [&] { return criterion_integrality(census3); }},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& [label, fn] = criteria[i];
        if (i == 7 && !run_long) {
            std::cout << "SKIP " << label << ": set HEC_ACCEPT_LONG=1 to run\n";
            continue;
        }
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (out.pass ? "PASS " : "FAIL ") << label << ": " << out.detail << "\n";
        if (!out.pass) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
