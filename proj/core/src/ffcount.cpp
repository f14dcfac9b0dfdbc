#include "hec/ffcount.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hec/characters.hpp"
#include "hec/errors.hpp"
#include "hec/quad_ext.hpp"

namespace hec {
namespace {

Integer ipow(long long base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<long>(base);
    return r;
}

long long weil_bound(int p, int k) {
    // floor(6 p^{k/2}) = isqrt(36 p^k)
    long long v = 36;
    for (int i = 0; i < k; ++i) v *= p;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// polynomial helpers over F_p on small int vectors (little-endian coefficients)
int degree_of(const std::vector<int>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, const FiniteField& F) {
    int db = degree_of(b);
    int inv_lead = F.inverse(b[static_cast<size_t>(db)]);
    for (int da = degree_of(a); da >= db; da = degree_of(a)) {
        int c = F.mul(a[static_cast<size_t>(da)], inv_lead);
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] =
                F.sub(a[static_cast<size_t>(da - db + j)], F.mul(c, b[static_cast<size_t>(j)]));
    }
    return a;
}

} // namespace

bool is_squarefree(const FiniteField& base, const CurveEquation& f) {
    std::vector<int> a(f.c.begin(), f.c.begin() + f.degree + 1);
    std::vector<int> b(static_cast<size_t>(f.degree), 0);  // formal derivative
    for (int i = 1; i <= f.degree; ++i)
        b[static_cast<size_t>(i - 1)] = base.mul(i % base.p(), f.c[static_cast<size_t>(i)]);
    while (degree_of(b) >= 0) {
        a = poly_mod(std::move(a), b, base);
        std::swap(a, b);
    }
    return degree_of(a) == 0;
}

long long point_count(const FieldTower& tower, const CurveEquation& f, int k) {
    const FiniteField& F = tower.level(k);
    long long affine = 0;
    const int deg = f.degree;
    for (int x = 0; x < F.size(); ++x) {
        int v = f.c[static_cast<size_t>(deg)];
        for (int d = deg - 1; d >= 0; --d) v = F.add(F.mul(v, x), f.c[static_cast<size_t>(d)]);
        affine += 1 + F.chi(v);
    }
    long long infinity = (deg == 7) ? 1 : 1 + F.chi(f.c[8]);
    return affine + infinity;
}

PowerSums curve_power_sums(const FieldTower& tower, const CurveEquation& f) {
    PowerSums s;
    long long counts[4] = {0, 0, 0, 0};
    for (int k = 1; k <= 3; ++k) counts[k] = point_count(tower, f, k);
    const long long q = tower.base.p();
    s.s1 = static_cast<int>(q + 1 - counts[1]);
    s.s2 = static_cast<int>(q * q + 1 - counts[2]);
    s.s3 = static_cast<int>(q * q * q + 1 - counts[3]);
    const long long sk[3] = {s.s1, s.s2, s.s3};
    for (int k = 1; k <= 3; ++k)
        if (std::abs(sk[k - 1]) > weil_bound(tower.base.p(), k)) {
            std::ostringstream os;
            os << "curve_power_sums: Weil bound violated at k=" << k << " (s=" << sk[k - 1]
               << ") for degree-" << f.degree << " curve";
            throw ConsistencyError(os.str());
        }
    return s;
}

FrobeniusData weil_polynomial(long long s1, long long s2, long long s3, int q) {
    const long long sk[3] = {s1, s2, s3};
    for (int k = 1; k <= 3; ++k)
        if (std::abs(sk[k - 1]) > weil_bound(q, k))
            throw ConsistencyError("weil_polynomial: |s_" + std::to_string(k) +
                                   "| exceeds the Weil bound for q=" + std::to_string(q));
    FrobeniusData d;
    d.q = q;
    d.s1 = s1;
    d.s2 = s2;
    d.s3 = s3;
    long long e1 = s1;
    long long n2 = e1 * s1 - s2;
    if (n2 % 2 != 0) throw ConsistencyError("weil_polynomial: e_2 division not exact");
    long long e2 = n2 / 2;
    long long n3 = e2 * s1 - e1 * s2 + s3;
    if (n3 % 3 != 0) throw ConsistencyError("weil_polynomial: e_3 division not exact");
    long long e3 = n3 / 3;
    long long qq = q;
    d.e = {e1, e2, e3, qq * e2, qq * qq * e1, qq * qq * qq};
    return d;
}

Integer frobenius_trace(const FrobeniusData& d, const Partition& la) {
    int w = la.weight();
    if (w % 2 == 1) return 0;

    QuadExtRing R(d.q);
    const int dmax = la[0] + 2;  // largest J index used by the determinant

    // rescaled elementary symmetric functions e_j / q^{j/2} in Q(sqrt q)
    std::array<QuadExt, 6> ehat;
    for (int j = 1; j <= 6; ++j) {
        Rational c(Integer(static_cast<long>(d.e[static_cast<size_t>(j - 1)])), ipow(d.q, (j + 1) / 2));
        ehat[static_cast<size_t>(j - 1)] =
            (j % 2 == 0) ? QuadExt{c, Rational(0)} : QuadExt{Rational(0), c};
    }

    // Newton: p_k = sum_{j=1..min(k-1,6)} (-1)^{j-1} ehat_j p_{k-j} + (-1)^{k-1} k ehat_k
    std::vector<QuadExt> sigma;
    sigma.reserve(static_cast<size_t>(dmax));
    for (int k = 1; k <= dmax; ++k) {
        QuadExt acc = R.zero();
        for (int j = 1; j < k && j <= 6; ++j) {
            QuadExt t = R.mul(ehat[static_cast<size_t>(j - 1)], sigma[static_cast<size_t>(k - j - 1)]);
            acc = (j % 2 == 1) ? R.add(acc, t) : R.sub(acc, t);
        }
        if (k <= 6) {
            QuadExt t = R.mul(R.from_int(k), ehat[static_cast<size_t>(k - 1)]);
            acc = (k % 2 == 1) ? R.add(acc, t) : R.sub(acc, t);
        }
        sigma.push_back(acc);
    }

    auto h = h_from_power_sums(R, std::span<const QuadExt>(sigma.data(), sigma.size()));
    QuadExt val = symplectic_character_from_h(R, la, std::span<const QuadExt>(h.data(), h.size()));

    std::ostringstream diag;
    diag << "frobenius_trace: q=" << d.q << " s=(" << d.s1 << "," << d.s2 << "," << d.s3
         << ") lambda=" << la.str();
    if (!val.is_rational())
        throw ConsistencyError(diag.str() + ": character value not rational: sqrt(q) part " +
                               val.b.str());
    Rational res = val.a * Rational(ipow(d.q, w / 2));
    if (!res.is_integer())
        throw ConsistencyError(diag.str() + ": twisted trace not integral: " + res.str());
    return res.to_integer();
}

long long raw_equation_count(int p) {
    long long n7 = 1;
    for (int i = 0; i < 7; ++i) n7 *= p;
    return (p - 1) * (n7 + n7 * p);
}

long long squarefree_equation_count(int p) {
    long long n6 = 1;
    for (int i = 0; i < 6; ++i) n6 *= p;
    return (p - 1) * (n6 * p * p - n6);
}

namespace {

CurveEquation decode_curve(int p, long long index) {
    long long n7 = 1;
    for (int i = 0; i < 7; ++i) n7 *= p;
    const long long block7 = (p - 1) * n7;
    CurveEquation f;
    long long rest;
    int digits;
    if (index < block7) {
        f.degree = 7;
        f.c[7] = 1 + static_cast<int>(index / n7);
        rest = index % n7;
        digits = 7;
    } else {
        long long j = index - block7;
        long long n8 = n7 * p;
        f.degree = 8;
        f.c[8] = 1 + static_cast<int>(j / n8);
        rest = j % n8;
        digits = 8;
    }
    for (int i = 0; i < digits; ++i) {
        f.c[static_cast<size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
    }
    return f;
}

void scan_range(const FieldTower& tower, long long lo, long long hi,
                const std::function<void(const CurveEquation&, const PowerSums&)>& sink,
                std::atomic<long long>* scanned, const ProgressFn& progress, long long total) {
    const int p = tower.base.p();
    long long local = 0;
    for (long long i = lo; i < hi; ++i) {
        CurveEquation f = decode_curve(p, i);
        if (is_squarefree(tower.base, f)) sink(f, curve_power_sums(tower, f));
        if (scanned && (++local & 0x3FFF) == 0) {
            long long done = scanned->fetch_add(0x4000) + 0x4000;
            if (progress) progress(done, total);
        }
    }
    if (scanned) scanned->fetch_add(local & 0x3FFF);
}

std::vector<std::pair<long long, long long>> shard_ranges(long long total, int shards) {
    if (shards < 1 || shards > 4096)
        throw std::invalid_argument("shard count must be between 1 and 4096");
    std::vector<std::pair<long long, long long>> ranges;
    for (int s = 0; s < shards; ++s) {
        long long lo = total * s / shards;
        long long hi = total * (s + 1) / shards;
        ranges.emplace_back(lo, hi);
    }
    return ranges;
}

} // namespace

Census run_census(int p, int shards, const ProgressFn& progress) {
    const FieldTower tower = standard_tower(p);
    const long long total = raw_equation_count(p);
    auto ranges = shard_ranges(total, shards);

    std::vector<Census> partial(static_cast<size_t>(shards));
    std::atomic<long long> scanned{0};
    std::mutex progress_mutex;
    ProgressFn locked_progress;
    if (progress)
        locked_progress = [&](long long done, long long t) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            progress(done, t);
        };

    auto work = [&](int s) {
        Census& c = partial[static_cast<size_t>(s)];
        c.p = p;
        scan_range(
            tower, ranges[static_cast<size_t>(s)].first, ranges[static_cast<size_t>(s)].second,
            [&](const CurveEquation&, const PowerSums& ps) {
                ++c.curves;
                ++c.histogram[{ps.s1, ps.s2, ps.s3}];
            },
            &scanned, locked_progress, total);
    };

    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(shards));
        for (int s = 0; s < shards; ++s) threads.emplace_back(work, s);
        for (auto& t : threads) t.join();
    }

    Census merged;
    merged.p = p;
    for (const auto& c : partial) {
        merged.curves += c.curves;
        for (const auto& [key, count] : c.histogram) merged.histogram[key] += count;
    }
    return merged;
}

void for_each_squarefree_curve(int p, const std::function<void(const CurveEquation&)>& fn) {
    const FieldTower tower = standard_tower(p);
    const long long total = raw_equation_count(p);
    for (long long i = 0; i < total; ++i) {
        CurveEquation f = decode_curve(p, i);
        if (is_squarefree(tower.base, f)) fn(f);
    }
}

std::vector<CurveRecord> enumerate_records(int p, int shards, const ProgressFn& progress) {
    const FieldTower tower = standard_tower(p);
    const long long total = raw_equation_count(p);
    auto ranges = shard_ranges(total, shards);

    std::vector<std::vector<CurveRecord>> partial(static_cast<size_t>(shards));
    std::atomic<long long> scanned{0};
    std::mutex progress_mutex;
    ProgressFn locked_progress;
    if (progress)
        locked_progress = [&](long long done, long long t) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            progress(done, t);
        };

    auto work = [&](int s) {
        auto& out = partial[static_cast<size_t>(s)];
        scan_range(
            tower, ranges[static_cast<size_t>(s)].first, ranges[static_cast<size_t>(s)].second,
            [&](const CurveEquation& f, const PowerSums& ps) {
                out.push_back(CurveRecord{static_cast<uint8_t>(f.degree),
                                          static_cast<uint8_t>(f.c[static_cast<size_t>(f.degree)]),
                                          static_cast<int16_t>(ps.s1), static_cast<int16_t>(ps.s2),
                                          static_cast<int16_t>(ps.s3)});
            },
            &scanned, locked_progress, total);
    };

    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(shards));
        for (int s = 0; s < shards; ++s) threads.emplace_back(work, s);
        for (auto& t : threads) t.join();
    }

    std::vector<CurveRecord> records;
    for (auto& part : partial)
        records.insert(records.end(), part.begin(), part.end());
    return records;
}

namespace {

constexpr char kCacheMagic[4] = {'H', 'E', '3', 'C'};
constexpr uint8_t kCacheVersion = 1;

void put_u32le(std::ostream& os, uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                 static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
    os.write(b, 4);
}

void put_u64le(std::ostream& os, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b, 8);
}

void put_i16le(std::ostream& os, int16_t v) {
    uint16_t u = static_cast<uint16_t>(v);
    char b[2] = {static_cast<char>(u & 0xFF), static_cast<char>((u >> 8) & 0xFF)};
    os.write(b, 2);
}

uint32_t get_u32le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint64_t get_u64le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

int16_t get_i16le(std::istream& is) {
    unsigned char b[2];
    is.read(reinterpret_cast<char*>(b), 2);
    return static_cast<int16_t>(static_cast<uint16_t>(b[0]) |
                                (static_cast<uint16_t>(b[1]) << 8));
}

} // namespace

void write_curve_cache(const std::string& path, int p, const std::vector<CurveRecord>& records) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConsistencyError("curve cache: cannot write '" + path + "'");
    os.write(kCacheMagic, 4);
    os.put(static_cast<char>(kCacheVersion));
    put_u32le(os, static_cast<uint32_t>(p));
    for (const auto& r : records) {
        os.put(static_cast<char>(r.degree));
        os.put(static_cast<char>(r.lc));
        put_i16le(os, r.s1);
        put_i16le(os, r.s2);
        put_i16le(os, r.s3);
    }
    put_u64le(os, records.size());
    if (!os) throw ConsistencyError("curve cache: write failure on '" + path + "'");
}

std::vector<CurveRecord> read_curve_cache(const std::string& path, int expected_p) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConsistencyError("curve cache: cannot open '" + path + "'");
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != std::string(kCacheMagic, 4))
        throw ConsistencyError("curve cache: bad magic in '" + path + "'");
    int version = is.get();
    if (version != kCacheVersion)
        throw ConsistencyError("curve cache: unsupported version " + std::to_string(version));
    uint32_t q = get_u32le(is);
    if (!is || static_cast<int>(q) != expected_p)
        throw ConsistencyError("curve cache: stored q=" + std::to_string(q) + " but expected " +
                               std::to_string(expected_p));

    is.seekg(0, std::ios::end);
    std::streamoff end = is.tellg();
    constexpr std::streamoff header = 4 + 1 + 4, trailer = 8, record_size = 8;
    std::streamoff body = end - header - trailer;
    if (body < 0 || body % record_size != 0)
        throw ConsistencyError("curve cache: truncated file '" + path + "'");
    is.seekg(header);

    std::vector<CurveRecord> records;
    records.reserve(static_cast<size_t>(body / record_size));
    for (std::streamoff i = 0; i < body / record_size; ++i) {
        CurveRecord r;
        r.degree = static_cast<uint8_t>(is.get());
        r.lc = static_cast<uint8_t>(is.get());
        r.s1 = get_i16le(is);
        r.s2 = get_i16le(is);
        r.s3 = get_i16le(is);
        if (!is) throw ConsistencyError("curve cache: truncated record in '" + path + "'");
        records.push_back(r);
    }
    uint64_t count = get_u64le(is);
    if (!is || count != records.size())
        throw ConsistencyError("curve cache: record-count trailer mismatch in '" + path + "'");
    return records;
}

Census census_from_records(int p, const std::vector<CurveRecord>& records) {
    Census c;
    c.p = p;
    for (const auto& r : records) {
        ++c.curves;
        ++c.histogram[{r.s1, r.s2, r.s3}];
    }
    return c;
}

Census load_or_run_census(int p, int shards, const std::optional<std::string>& cache_path,
                          const ProgressFn& progress) {
    if (cache_path) {
        std::ifstream probe(*cache_path, std::ios::binary);
        if (probe.good()) {
            probe.close();
            return census_from_records(p, read_curve_cache(*cache_path, p));
        }
        auto records = enumerate_records(p, shards, progress);
        write_curve_cache(*cache_path, p, records);
        return census_from_records(p, records);
    }
    return run_census(p, shards, progress);
}

TraceSumResult trace_sum(const Census& census, const Partition& la) {
    TraceSumResult r;
    r.raw_sum = 0;
    for (const auto& [key, count] : census.histogram) {
        FrobeniusData fd = weil_polynomial(key[0], key[1], key[2], census.p);
        r.raw_sum += Integer(static_cast<long>(count)) * frobenius_trace(fd, la);
    }
    long long q = census.p;
    r.divisor = Integer(static_cast<long>((q * q - 1) * (q * q - q)));
    r.value = Rational(r.raw_sum, r.divisor);
    return r;
}

Rational trace_sum(const Partition& la, int q, int shards) {
    return trace_sum(run_census(q, shards), la).value;
}

Integer MotivicPolynomial::eval(long long L) const {
    Integer acc = 0;
    for (const auto& [e, c] : coeff) acc += Integer(static_cast<long>(c)) * ipow(L, e);
    return acc;
}

std::string MotivicPolynomial::str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        long long c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long mag = std::abs(c);
        if (mag != 1 || it->first == 0) os << mag;
        if (it->first > 0) {
            os << "L";
            if (it->first > 1) os << "^" << it->first;
        }
        first = false;
    }
    return os.str();
}

const std::vector<std::pair<Partition, MotivicPolynomial>>& table5() {
    static const std::vector<std::pair<Partition, MotivicPolynomial>> rows = {
        {{0, 0, 0}, MotivicPolynomial{{{5, 1}}}},
        {{2, 0, 0}, MotivicPolynomial{{{0, -1}}}},
        {{1, 1, 0}, MotivicPolynomial{{}}},
        {{4, 0, 0}, MotivicPolynomial{{{2, 1}, {0, -2}}}},
        {{3, 1, 0}, MotivicPolynomial{{{2, 1}, {0, -1}}}},
        {{2, 2, 0}, MotivicPolynomial{{{6, -1}, {2, 1}, {0, -1}}}},
        {{2, 1, 1}, MotivicPolynomial{{{5, 1}, {4, -1}, {3, -1}, {2, 1}}}},
    };
    return rows;
}

const MotivicPolynomial* table5_lookup(const Partition& la) {
    for (const auto& [p, poly] : table5())
        if (p == la) return &poly;
    return nullptr;
}

} // namespace hec
