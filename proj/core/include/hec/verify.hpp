#pragma once

#include <string>
#include <vector>

#include "hec/ffcount.hpp"
#include "hec/partition.hpp"
#include "hec/strata.hpp"

namespace hec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // diagnostic when failing
};

// Granular integrity checks. They take their data as parameters so that
// seeded-fault tests can feed doctored tables through the same code paths
// the CLI uses.
CheckResult check_table2_sum(const std::vector<StratumRecord>& records);
CheckResult check_cardinalities(const std::vector<StratumRecord>& records);
CheckResult check_file_matches_builtin(const std::vector<StratumRecord>& file_records);
CheckResult check_determinant_variant();
CheckResult check_table4(const EulerEngine& engine);
CheckResult check_l1_consistency(const std::vector<std::pair<Partition, MotivicPolynomial>>& rows);

// The full `verify` suite: strata file vs compiled table, Table-2 sum,
// cardinalities, determinant variant vs the Weyl oracle, Table-4 golden
// values, Table 5 at L=1 vs Table 4.
std::vector<CheckResult> run_verification(const std::string& strata_path);

} // namespace hec
