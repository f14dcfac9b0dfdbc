#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hec/strata.hpp"

namespace hec {

/**
 * Plain-text strata data file, the double-entry twin of the compiled table.
 * Grammar (one section per stratum, order significant, '#' starts a comment):
 *
 *   [stratum 1]
 *   name  = "(C_2, 1)"
 *   order = 4
 *   euler = -1
 *   spectrum = 1 0 1 0 1     # a_order a_exp xi_order xi_exp multiplicity
 *
 * 'spectrum' repeats once per Y_i entry. Parsed records must pass the same
 * construction invariants as the compiled data (ConsistencyError otherwise);
 * syntax faults raise std::invalid_argument.
 */
std::vector<StratumRecord> parse_strata(std::istream& in);
std::vector<StratumRecord> load_strata_file(const std::string& path);

// Syntax and value-level parsing only, without the cross-record invariants;
// lets the verify suite report which table-level constraint a bad file breaks.
std::vector<StratumRecord> parse_strata_raw(std::istream& in);
std::vector<StratumRecord> load_strata_raw(const std::string& path);

void write_strata_file(std::ostream& out, const std::vector<StratumRecord>& records);

// "" when equal as data (spectra compared as value multisets), otherwise a
// one-line description of the first mismatch.
std::string describe_strata_mismatch(const std::vector<StratumRecord>& expected,
                                     const std::vector<StratumRecord>& actual);

// HEC_STRATA_FILE environment override, else "data/strata.toml".
std::string default_strata_path();

} // namespace hec
