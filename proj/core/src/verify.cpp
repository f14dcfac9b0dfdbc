#include "hec/verify.hpp"

#include <sstream>

#include "hec/characters.hpp"
#include "hec/errors.hpp"
#include "hec/strata_file.hpp"
#include "hec/weyl_oracle.hpp"

namespace hec {

CheckResult check_table2_sum(const std::vector<StratumRecord>& records) {
    long long sum = 0;
    for (const auto& r : records) sum += r.euler_number;
    if (sum == 1) return {"Table-2 sum", true, ""};
    return {"Table-2 sum", false,
            "stratum Euler numbers sum to " + std::to_string(sum) + ", expected 1"};
}

CheckResult check_cardinalities(const std::vector<StratumRecord>& records) {
    for (const auto& r : records) {
        if (r.group_order % 4 != 0)
            return {"|Y_i| = #G_i/4", false,
                    "stratum " + std::to_string(r.index) + ": order not divisible by 4"};
        if (r.spectra_cardinality() != r.group_order / 4)
            return {"|Y_i| = #G_i/4", false,
                    "stratum " + std::to_string(r.index) + ": |Y| = " +
                        std::to_string(r.spectra_cardinality()) + " but #G/4 = " +
                        std::to_string(r.group_order / 4)};
    }
    return {"|Y_i| = #G_i/4", true, ""};
}

CheckResult check_file_matches_builtin(const std::vector<StratumRecord>& file_records) {
    std::string why = describe_strata_mismatch(builtin_strata(), file_records);
    if (why.empty()) return {"strata file matches builtin", true, ""};
    return {"strata file matches builtin", false, why};
}

CheckResult check_determinant_variant() {
    // generic rational triples, none on the Weyl-denominator vanishing locus
    const std::array<std::array<Rational, 3>, 3> points = {{
        {Rational(2), Rational(3), Rational(5)},
        {Rational(1, 2), Rational(7, 3), Rational(4)},
        {Rational(-3, 2), Rational(5, 7), Rational(9, 4)},
    }};
    const std::vector<Partition> lambdas = {{1, 0, 0}, {1, 1, 1}, {2, 1, 0}, {3, 2, 1}, {4, 2, 2}};
    WeylCharacterOracle oracle;
    RationalRing R;
    for (const auto& la : lambdas) {
        for (const auto& x : points) {
            if (WeylCharacterOracle::degenerate(x)) continue;
            SpectralTriple<RationalRing> t{
                {x[0], x[1], x[2]},
                {Rational(1) / x[0], Rational(1) / x[1], Rational(1) / x[2]}};
            Rational det = symplectic_character(R, la, t);
            Rational ref = oracle.evaluate(la, x);
            if (det != ref) {
                std::ostringstream os;
                os << "mismatch at lambda " << la.str() << ", x = (" << x[0] << "," << x[1] << ","
                   << x[2] << "): determinant " << det << " vs oracle " << ref;
                return {"determinant variant vs Weyl oracle", false, os.str()};
            }
        }
    }
    return {"determinant variant vs Weyl oracle", true, ""};
}

CheckResult check_table4(const EulerEngine& engine) {
    for (const auto& [la, expected] : table4_values()) {
        Integer got = engine.euler_characteristic(la);
        if (got != static_cast<long>(expected)) {
            std::ostringstream os;
            os << "e_c" << la.str() << " = " << got << ", table says " << expected;
            return {"Table 4 golden values", false, os.str()};
        }
    }
    return {"Table 4 golden values", true, ""};
}

CheckResult check_l1_consistency(const std::vector<std::pair<Partition, MotivicPolynomial>>& rows) {
    for (const auto& [la, poly] : rows) {
        Integer at_one = poly.eval(1);
        bool found = false;
        for (const auto& [gla, value] : table4_values()) {
            if (gla != la) continue;
            found = true;
            if (at_one != static_cast<long>(value)) {
                std::ostringstream os;
                os << "lambda " << la.str() << ": polynomial " << poly.str() << " at L=1 gives "
                   << at_one << ", Table 4 says " << value;
                return {"L=1 consistency", false, os.str()};
            }
        }
        if (!found)
            return {"L=1 consistency", false, "lambda " + la.str() + " missing from Table 4"};
    }
    return {"L=1 consistency", true, ""};
}

std::vector<CheckResult> run_verification(const std::string& strata_path) {
    std::vector<CheckResult> out;

    bool file_ok = false;
    std::vector<StratumRecord> file_records;
    try {
        file_records = load_strata_raw(strata_path);
        file_ok = true;
        out.push_back({"strata file parses", true, ""});
    } catch (const std::exception& e) {
        out.push_back({"strata file parses", false, std::string(e.what()) + " (" + strata_path + ")"});
    }
    if (file_ok) {
        out.push_back(check_table2_sum(file_records));
        out.push_back(check_cardinalities(file_records));
        out.push_back(check_file_matches_builtin(file_records));
    } else {
        out.push_back({"Table-2 sum", false, "strata file unavailable"});
        out.push_back({"|Y_i| = #G_i/4", false, "strata file unavailable"});
        out.push_back({"strata file matches builtin", false, "strata file unavailable"});
    }

    out.push_back(check_determinant_variant());

    EulerEngine engine;
    out.push_back(check_table4(engine));
    out.push_back(check_l1_consistency(table5()));
    return out;
}

} // namespace hec
