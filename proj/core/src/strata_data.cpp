#include "hec/strata.hpp"

namespace hec {
namespace {

SpectralPair sp(int a_order, int a_exp, int xi_order, int xi_exp, int mult) {
    return SpectralPair{RootOfUnity(a_order, a_exp), RootOfUnity(xi_order, xi_exp), mult};
}

std::vector<StratumRecord> make_builtin() {
    std::vector<StratumRecord> r(11);

    r[0] = {1, "(C_2, 1)", 4, -1, {sp(1, 0, 1, 0, 1)}};

    r[1] = {2, "(C_4, 1)", 8, 2, {sp(1, 0, 1, 0, 1), sp(4, 1, 1, 0, 1)}};

    r[2] = {3, "(Q_8, 1)", 16, 1, {sp(1, 0, 1, 0, 1), sp(4, 1, 1, 0, 3)}};

    r[3] = {4, "(C_4, chi^2)", 8, 1, {sp(1, 0, 1, 0, 1), sp(4, 1, 4, 1, 1)}};

    r[4] = {5, "(Q_16, 1)", 32, -2,
            {sp(1, 0, 1, 0, 1), sp(16, 2, 1, 0, 1), sp(16, 6, 1, 0, 1), sp(4, 1, 1, 0, 5)}};

    r[5] = {6, "(Q_8, chi_0)", 16, -2,
            {sp(1, 0, 1, 0, 1), sp(4, 1, 1, 0, 1), sp(4, 1, 4, 1, 2)}};

    r[6] = {7, "(Q_12, 1)", 24, -2,
            {sp(1, 0, 1, 0, 1), sp(12, 2, 1, 0, 1), sp(12, 4, 1, 0, 1), sp(4, 1, 1, 0, 3)}};

    r[7] = {8, "(Q_32, chi_-)", 64, 1,
            {sp(1, 0, 1, 0, 1), sp(16, 1, 4, 1, 1), sp(16, 2, 1, 0, 1), sp(16, 3, 4, 1, 1),
             sp(16, 5, 4, 1, 1), sp(16, 6, 1, 0, 1), sp(16, 7, 4, 1, 1), sp(4, 1, 4, 1, 4),
             sp(4, 1, 1, 0, 5)}};

    // The printed table carries this 24-element row twice (once mislabelled);
    // cardinality #G_9/4 = 24 pins it to the binary octahedral stratum.
    r[8] = {9, "(O, 1)", 96, 1,
            {sp(1, 0, 1, 0, 1), sp(4, 1, 1, 0, 9), sp(12, 2, 1, 0, 4), sp(12, 4, 1, 0, 4),
             sp(16, 2, 1, 0, 3), sp(16, 6, 1, 0, 3)}};

    r[9] = {10, "(Q_24, chi_-)", 48, 1,
            {sp(1, 0, 1, 0, 1), sp(12, 1, 4, 1, 1), sp(12, 5, 4, 1, 1), sp(12, 2, 1, 0, 1),
             sp(12, 4, 1, 0, 1), sp(4, 1, 4, 1, 4), sp(4, 1, 1, 0, 3)}};

    r[10] = {11, "(C_14, chi^6)", 28, 1,
             {sp(1, 0, 1, 0, 1), sp(14, 1, 14, 3, 1), sp(14, 2, 14, 6, 1), sp(14, 3, 14, 9, 1),
              sp(14, 4, 14, 12, 1), sp(14, 5, 14, 1, 1), sp(14, 6, 14, 4, 1)}};

    return r;
}

} // namespace

const std::vector<StratumRecord>& builtin_strata() {
    static const std::vector<StratumRecord> records = [] {
        auto r = make_builtin();
        validate_strata(r);
        return r;
    }();
    return records;
}

const std::vector<std::pair<Partition, long long>>& table4_values() {
    static const std::vector<std::pair<Partition, long long>> values = {
        {{0, 0, 0}, 1},    {{2, 0, 0}, -1},  {{1, 1, 0}, 0},   {{4, 0, 0}, -1},
        {{3, 1, 0}, 0},    {{2, 2, 0}, -1},  {{2, 1, 1}, 0},   {{6, 0, 0}, -5},
        {{5, 1, 0}, -2},   {{4, 2, 0}, -5},  {{4, 1, 1}, 0},   {{3, 3, 0}, 0},
        {{3, 2, 1}, 0},    {{2, 2, 2}, -3},  {{8, 0, 0}, -7},  {{7, 1, 0}, -8},
        {{6, 2, 0}, -13},  {{6, 1, 1}, -2},  {{5, 3, 0}, -10}, {{5, 2, 1}, -10},
        {{4, 4, 0}, -5},   {{4, 3, 1}, -4},  {{4, 2, 2}, -7},  {{3, 3, 2}, -2},
        {{10, 0, 0}, -17}, {{9, 1, 0}, -22}, {{8, 2, 0}, -43}, {{8, 1, 1}, -8},
        {{7, 3, 0}, -34},  {{7, 2, 1}, -32}, {{6, 4, 0}, -37}, {{6, 3, 1}, -26},
        {{6, 2, 2}, -27},  {{5, 5, 0}, -6},  {{5, 4, 1}, -22}, {{5, 3, 2}, -12},
        {{4, 4, 2}, -15},  {{4, 3, 3}, 0},
    };
    return values;
}

const std::vector<std::pair<int, int>>& monotonicity_edges() {
    // big stabilizer -> small stabilizer, restricted to honest group
    // containments (see the header note on the excluded 4->2 and 6->3).
    static const std::vector<std::pair<int, int>> edges = {
        {2, 1}, {3, 2}, {5, 3}, {6, 4}, {7, 4},
        {8, 5}, {9, 5}, {10, 6}, {10, 7}, {11, 1},
    };
    return edges;
}

} // namespace hec
