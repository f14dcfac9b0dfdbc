#include "hec/strata_file.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "hec/errors.hpp"

namespace hec {
namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& s, const std::string& what, int line_no) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size())
        throw std::invalid_argument("strata file line " + std::to_string(line_no) +
                                    ": malformed integer for " + what + ": '" + s + "'");
    return v;
}

struct PendingRecord {
    StratumRecord rec;
    bool has_name = false, has_order = false, has_euler = false;
    int header_line = 0;
};

void finish(std::vector<StratumRecord>& out, PendingRecord& p) {
    if (p.rec.index == 0) return;
    if (!p.has_name || !p.has_order || !p.has_euler || p.rec.spectra.empty())
        throw std::invalid_argument("strata file: incomplete [stratum " +
                                    std::to_string(p.rec.index) + "] section (line " +
                                    std::to_string(p.header_line) + ")");
    out.push_back(std::move(p.rec));
    p = PendingRecord{};
}

} // namespace

std::vector<StratumRecord> parse_strata_raw(std::istream& in) {
    std::vector<StratumRecord> out;
    PendingRecord cur;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("strata file line " + std::to_string(line_no) +
                                            ": unterminated section header");
            std::istringstream hdr(line.substr(1, line.size() - 2));
            std::string kw;
            int idx = 0;
            if (!(hdr >> kw >> idx) || kw != "stratum" || !(hdr >> std::ws).eof())
                throw std::invalid_argument("strata file line " + std::to_string(line_no) +
                                            ": expected [stratum N]");
            finish(out, cur);
            cur.rec.index = idx;
            cur.header_line = line_no;
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos || cur.rec.index == 0)
            throw std::invalid_argument("strata file line " + std::to_string(line_no) +
                                        ": expected 'key = value' inside a [stratum N] section");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "name") {
            if (value.size() < 2 || value.front() != '"' || value.back() != '"')
                throw std::invalid_argument("strata file line " + std::to_string(line_no) +
                                            ": name must be double-quoted");
            cur.rec.group_name = value.substr(1, value.size() - 2);
            cur.has_name = true;
        } else if (key == "order") {
            cur.rec.group_order = parse_int(value, "order", line_no);
            cur.has_order = true;
        } else if (key == "euler") {
            cur.rec.euler_number = parse_int(value, "euler", line_no);
            cur.has_euler = true;
        } else if (key == "spectrum") {
            std::istringstream row(value);
            long long a_ord, a_exp, xi_ord, xi_exp, mult;
            if (!(row >> a_ord >> a_exp >> xi_ord >> xi_exp >> mult) || !(row >> std::ws).eof())
                throw std::invalid_argument(
                    "strata file line " + std::to_string(line_no) +
                    ": spectrum wants 'a_order a_exp xi_order xi_exp mult'");
            try {
                cur.rec.spectra.push_back(SpectralPair{
                    RootOfUnity(static_cast<int>(a_ord), static_cast<int>(a_exp)),
                    RootOfUnity(static_cast<int>(xi_ord), static_cast<int>(xi_exp)),
                    static_cast<int>(mult)});
            } catch (const std::domain_error& e) {
                throw ConsistencyError("strata file line " + std::to_string(line_no) + ": " +
                                       e.what());
            }
        } else {
            throw std::invalid_argument("strata file line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        }
    }
    finish(out, cur);
    return out;
}

std::vector<StratumRecord> parse_strata(std::istream& in) {
    auto records = parse_strata_raw(in);
    validate_strata(records);
    return records;
}

std::vector<StratumRecord> load_strata_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConsistencyError("strata file: cannot open '" + path + "'");
    return parse_strata_raw(in);
}

std::vector<StratumRecord> load_strata_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConsistencyError("strata file: cannot open '" + path + "'");
    return parse_strata(in);
}

void write_strata_file(std::ostream& out, const std::vector<StratumRecord>& records) {
    out << "# Stabilizer strata of the genus-3 hyperelliptic locus: group name and\n"
           "# order, Euler characteristic of the open stratum, and the spectral set\n"
           "# Y_i, one 'spectrum = a_order a_exp xi_order xi_exp mult' line per entry.\n";
    for (const auto& r : records) {
        out << "\n[stratum " << r.index << "]\n";
        out << "name = \"" << r.group_name << "\"\n";
        out << "order = " << r.group_order << "\n";
        out << "euler = " << r.euler_number << "\n";
        for (const auto& p : r.spectra)
            out << "spectrum = " << p.a.order() << " " << p.a.exponent() << " " << p.xi.order()
                << " " << p.xi.exponent() << " " << p.multiplicity << "\n";
    }
}

std::string describe_strata_mismatch(const std::vector<StratumRecord>& expected,
                                     const std::vector<StratumRecord>& actual) {
    if (expected.size() != actual.size())
        return "record count differs: " + std::to_string(expected.size()) + " vs " +
               std::to_string(actual.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        const auto& a = expected[i];
        const auto& b = actual[i];
        std::string tag = "stratum " + std::to_string(a.index) + ": ";
        if (a.index != b.index) return tag + "index differs";
        if (a.group_name != b.group_name) return tag + "group name differs";
        if (a.group_order != b.group_order) return tag + "group order differs";
        if (a.euler_number != b.euler_number) return tag + "Euler number differs";
        // spectra as value multisets: (a, xi) keyed by exponents in Z/336
        auto multiset = [](const StratumRecord& r) {
            std::map<std::pair<int, int>, long long> m;
            for (const auto& p : r.spectra)
                m[{p.a.exponent336(), p.xi.exponent336()}] += p.multiplicity;
            return m;
        };
        if (multiset(a) != multiset(b)) return tag + "spectral multiset differs";
    }
    return "";
}

std::string default_strata_path() {
    if (const char* env = std::getenv("HEC_STRATA_FILE"); env && *env) return env;
    return "data/strata.toml";
}

} // namespace hec
