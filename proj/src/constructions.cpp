#include "fewdist/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fewdist {

namespace {

uint64_t popcount64(uint64_t x) { return static_cast<uint64_t>(std::popcount(x)); }

// enumerate all n-bit masks of given weight, ascending
void masks_of_weight(int n, int w, std::vector<uint64_t>& out) {
    if (w == 0) {
        out.push_back(0);
        return;
    }
    if (w > n) return;
    uint64_t v = (uint64_t(1) << w) - 1;
    uint64_t limit = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    while (v <= limit) {
        out.push_back(v);
        uint64_t t = v | (v - 1);  // Gosper's hack
        if (t == ~uint64_t(0)) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
}

// exact pairwise inner products for integer-fitting coordinates
bool all_coords_small(const PointSet& ps, std::vector<std::vector<int64_t>>& out) {
    out.clear();
    out.reserve(ps.coords.size());
    for (const auto& v : ps.coords) {
        std::vector<int64_t> row;
        row.reserve(v.size());
        for (const auto& c : v) {
            if (!c.is_integer() || !c.num().fits_slong_p()) return false;
            int64_t x = c.num().get_si();
            if (x > (int64_t(1) << 20) || x < -(int64_t(1) << 20)) return false;
            row.push_back(x);
        }
        out.push_back(std::move(row));
    }
    return true;
}

}  // namespace

SpectrumReport verify_spectrum(const PointSet& ps) {
    if (ps.size() < 2) throw std::invalid_argument("verify_spectrum needs at least 2 points");
    SpectrumReport rep;
    rep.cardinality = ps.size();
    if (ps.space.finite()) {
        std::set<uint64_t> seen(ps.words.begin(), ps.words.end());
        if (seen.size() != ps.words.size())
            throw std::invalid_argument("verify_spectrum: duplicate points");
        std::set<long> dist;
        const bool johnson = ps.space.kind == SpaceKind::johnson;
        for (size_t i = 0; i < ps.words.size(); ++i) {
            if (johnson && popcount64(ps.words[i]) != static_cast<uint64_t>(ps.space.w))
                throw std::invalid_argument("verify_spectrum: Johnson point of wrong weight");
            for (size_t j = i + 1; j < ps.words.size(); ++j) {
                uint64_t diff = popcount64(ps.words[i] ^ ps.words[j]);
                dist.insert(johnson ? static_cast<long>(diff / 2) : static_cast<long>(diff));
            }
        }
        for (long d : dist) rep.distances.push_back(Rat(d));
    } else {
        if (ps.norm2.sign() <= 0)
            throw std::invalid_argument("verify_spectrum: sphere set needs positive norm");
        std::vector<std::vector<int64_t>> fast;
        std::set<Rat> dist;
        if (all_coords_small(ps, fast)) {
            // integer fast path; verify the common norm as we go
            for (size_t i = 0; i < fast.size(); ++i) {
                int64_t nn = 0;
                for (int64_t c : fast[i]) nn += c * c;
                if (Rat(static_cast<long>(nn)) != ps.norm2)
                    throw std::invalid_argument("verify_spectrum: mixed squared norms");
            }
            std::set<int64_t> raw;
            for (size_t i = 0; i < fast.size(); ++i)
                for (size_t j = i + 1; j < fast.size(); ++j) {
                    int64_t dot = 0;
                    const auto &a = fast[i], &b = fast[j];
                    for (size_t c = 0; c < a.size(); ++c) dot += a[c] * b[c];
                    raw.insert(dot);
                }
            for (int64_t d : raw) dist.insert(Rat(static_cast<long>(d)) / ps.norm2);
        } else {
            for (const auto& v : ps.coords) {
                Rat nn(0);
                for (const auto& c : v) nn += c * c;
                if (nn != ps.norm2)
                    throw std::invalid_argument("verify_spectrum: mixed squared norms");
            }
            for (size_t i = 0; i < ps.coords.size(); ++i)
                for (size_t j = i + 1; j < ps.coords.size(); ++j) {
                    Rat dot(0);
                    for (size_t c = 0; c < ps.coords[i].size(); ++c)
                        dot += ps.coords[i][c] * ps.coords[j][c];
                    dist.insert(dot / ps.norm2);
                }
        }
        for (const auto& d : dist) rep.distances.push_back(d);
    }
    rep.s = static_cast<int>(rep.distances.size());
    return rep;
}

PointSet hamming_weight_classes(int n, int s) {
    if (n < 1 || s < 1 || 2 * s > n)
        throw std::invalid_argument("hamming_weight_classes needs 1 <= s and 2s <= n");
    if (n > 64) throw std::invalid_argument("hamming_weight_classes supports n <= 64");
    PointSet ps;
    ps.space = Space::hamming(n);
    ps.label = "hamming-weight-classes:" + std::to_string(n) + "," + std::to_string(s);
    for (int k = s; k >= 0; k -= 2) masks_of_weight(n, k, ps.words);
    std::sort(ps.words.begin(), ps.words.end());
    return ps;
}

PointSet johnson_prefix(int n, int w, int s) {
    if (s < 1 || s > w || s > n - w)
        throw std::invalid_argument("johnson_prefix needs 1 <= s <= min(w, n-w)");
    if (n > 64) throw std::invalid_argument("johnson_prefix supports n <= 64");
    Space sp = Space::johnson(n, w);
    PointSet ps;
    ps.space = sp;
    ps.label = "johnson-prefix:" + std::to_string(n) + "," + std::to_string(w) + "," +
               std::to_string(s);
    uint64_t prefix = (uint64_t(1) << (w - s)) - 1;  // w-s ones up front
    std::vector<uint64_t> tails;
    masks_of_weight(n - (w - s), s, tails);
    for (uint64_t t : tails) ps.words.push_back(prefix | (t << (w - s)));
    std::sort(ps.words.begin(), ps.words.end());
    return ps;
}

PointSet sphere_01(int n, int s) {
    if (s < 1 || 2 * s > n + 1)
        throw std::invalid_argument("sphere_01 needs 1 <= s and 2s <= n+1");
    PointSet ps;
    ps.space = Space::sphere(n);
    ps.label = "sphere-01:" + std::to_string(n) + "," + std::to_string(s);
    // 0/1 vectors of length n+1 with s ones, centered: v' = (n+1) v - s * 1;
    // all entries integer, squared norm (n+1) s (n+1-s)
    std::vector<uint64_t> masks;
    masks_of_weight(n + 1, s, masks);
    const long np1 = n + 1;
    for (uint64_t m : masks) {
        std::vector<Rat> v(np1, Rat(-s));
        for (int i = 0; i < np1; ++i)
            if (m >> i & 1) v[i] = Rat(np1 - s);
        ps.coords.push_back(std::move(v));
    }
    ps.norm2 = Rat(np1) * Rat(s) * Rat(np1 - s);
    return ps;
}

const GolayCode& golay23() {
    static const GolayCode code = [] {
        GolayCode g;
        // cyclic [23,12,7] code generated by the quadratic-residue polynomial
        //   g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
        // (exponents are the non-residues shifted; the reciprocal polynomial
        // generates the equivalent sibling code)
        const uint32_t gen = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) |
                             (1u << 2) | 1u;
        for (int row = 0; row < 12; ++row) g.generators[row] = gen << row;
        g.codewords.reserve(4096);
        for (uint32_t msg = 0; msg < 4096; ++msg) {
            uint32_t c = 0;
            for (int row = 0; row < 12; ++row)
                if (msg >> row & 1) c ^= g.generators[row];
            g.codewords.push_back(c);
        }
        std::sort(g.codewords.begin(), g.codewords.end());
        g.weight_distribution.assign(24, 0);
        g.min_distance = 23;
        for (uint32_t c : g.codewords) {
            int w = std::popcount(c);
            ++g.weight_distribution[w];
            if (c && w < g.min_distance) g.min_distance = w;
        }
        return g;
    }();
    return code;
}

std::vector<uint32_t> golay23_dual() {
    const GolayCode& g = golay23();
    // nullspace of the generator matrix over F2
    std::vector<uint32_t> rows(g.generators.begin(), g.generators.end());
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < 23 && r < 12; ++col) {
        int sel = -1;
        for (int i = r; i < 12; ++i)
            if (rows[i] >> col & 1) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        for (int i = 0; i < 12; ++i)
            if (i != r && (rows[i] >> col & 1)) rows[i] ^= rows[r];
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<int> free_cols;
    for (int col = 0; col < 23; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
            free_cols.push_back(col);
    // dual basis: for each free column, a vector of the orthogonal complement
    std::vector<uint32_t> basis;
    for (int fc : free_cols) {
        uint32_t v = uint32_t(1) << fc;
        for (int i = 0; i < r; ++i)
            if (rows[i] >> fc & 1) v |= uint32_t(1) << pivot_col[i];
        basis.push_back(v);
    }
    std::vector<uint32_t> dual;
    dual.reserve(size_t(1) << basis.size());
    for (uint32_t msg = 0; msg < (uint32_t(1) << basis.size()); ++msg) {
        uint32_t v = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            if (msg >> i & 1) v ^= basis[i];
        dual.push_back(v);
    }
    std::sort(dual.begin(), dual.end());
    return dual;
}

PointSet golay23_even() {
    PointSet ps;
    ps.space = Space::hamming(23);
    ps.label = "golay23-even";
    for (uint32_t c : golay23().codewords)
        if (std::popcount(c) % 2 == 0) ps.words.push_back(c);
    return ps;
}

PointSet golay23_weight7() {
    PointSet ps;
    ps.space = Space::johnson(23, 7);
    ps.label = "golay23-weight7";
    for (uint32_t c : golay23().codewords)
        if (std::popcount(c) == 7) ps.words.push_back(c);
    return ps;
}

PointSet johnson24_lift() {
    PointSet ps;
    ps.space = Space::johnson(24, 8);
    ps.label = "johnson24-lift";
    for (uint32_t c : golay23().codewords)
        if (std::popcount(c) == 7) ps.words.push_back((uint64_t(c) << 1) | 1);
    return ps;
}

namespace {

std::vector<std::vector<Rat>> e8_roots_scaled() {
    // roots scaled by 2: (+-2, +-2, 0^6) and (+-1)^8 with an even number of
    // minus signs; squared norm 8
    std::vector<std::vector<Rat>> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    std::vector<Rat> v(8, Rat(0));
                    v[i] = Rat(2 * si);
                    v[j] = Rat(2 * sj);
                    roots.push_back(std::move(v));
                }
    for (uint32_t m = 0; m < 256; ++m) {
        if (std::popcount(m) % 2 != 0) continue;
        std::vector<Rat> v(8);
        for (int i = 0; i < 8; ++i) v[i] = Rat(m >> i & 1 ? -1 : 1);
        roots.push_back(std::move(v));
    }
    return roots;
}

bool lex_positive(const std::vector<Rat>& v) {
    for (const auto& c : v) {
        if (c.sign() > 0) return true;
        if (c.sign() < 0) return false;
    }
    return false;
}

}  // namespace

PointSet e8_full() {
    PointSet ps;
    ps.space = Space::sphere(8);
    ps.label = "e8-roots";
    ps.coords = e8_roots_scaled();
    ps.norm2 = Rat(8);
    return ps;
}

PointSet e8_half(std::optional<uint64_t> seed) {
    PointSet ps;
    ps.space = Space::sphere(8);
    ps.label = "e8-half";
    ps.norm2 = Rat(8);
    auto roots = e8_roots_scaled();
    if (!seed) {
        for (auto& v : roots)
            if (lex_positive(v)) ps.coords.push_back(std::move(v));
    } else {
        // random halving: pick one representative per antipodal pair
        std::mt19937_64 rng(*seed);
        std::map<std::vector<std::string>, std::vector<Rat>> pairs;
        for (auto& v : roots) {
            std::vector<Rat> key = v;
            if (!lex_positive(key))
                for (auto& c : key) c = -c;
            std::vector<std::string> ks;
            for (const auto& c : key) ks.push_back(c.str());
            if (!pairs.count(ks)) pairs[ks] = key;
        }
        for (auto& [ks, v] : pairs) {
            std::vector<Rat> pick = v;
            if (rng() & 1)
                for (auto& c : pick) c = -c;
            ps.coords.push_back(std::move(pick));
        }
    }
    return ps;
}

namespace {

// extended Golay code G24: G23 codewords with an overall parity bit appended
std::vector<uint32_t> golay24_codewords() {
    std::vector<uint32_t> out;
    out.reserve(4096);
    for (uint32_t c : golay23().codewords) {
        uint32_t parity = std::popcount(c) & 1;
        out.push_back(c | (parity << 23));
    }
    return out;
}

}  // namespace

const std::vector<std::array<int8_t, 24>>& leech_minimal_vectors() {
    static const std::vector<std::array<int8_t, 24>> vecs = [] {
        std::vector<std::array<int8_t, 24>> out;
        out.reserve(196560);
        // shape (+-4, +-4, 0^22): any signs, any two positions
        for (int i = 0; i < 24; ++i)
            for (int j = i + 1; j < 24; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        std::array<int8_t, 24> v{};
                        v[i] = static_cast<int8_t>(4 * si);
                        v[j] = static_cast<int8_t>(4 * sj);
                        out.push_back(v);
                    }
        auto g24 = golay24_codewords();
        // shape (+-2^8, 0^16) on each octad, even number of minus signs
        for (uint32_t c : g24) {
            if (std::popcount(c) != 8) continue;
            int pos[8], pi = 0;
            for (int i = 0; i < 24; ++i)
                if (c >> i & 1) pos[pi++] = i;
            for (uint32_t m = 0; m < 256; ++m) {
                if (std::popcount(m) % 2 != 0) continue;
                std::array<int8_t, 24> v{};
                for (int i = 0; i < 8; ++i) v[pos[i]] = static_cast<int8_t>(m >> i & 1 ? -2 : 2);
                out.push_back(v);
            }
        }
        // shape (+-3, +-1^23): one vector per (codeword, position) pair;
        // entries are +1 off the codeword and -1 on it, except the chosen
        // position carries +3 (on the codeword) or -3 (off it)
        for (uint32_t c : g24) {
            for (int k = 0; k < 24; ++k) {
                std::array<int8_t, 24> v{};
                for (int j = 0; j < 24; ++j) v[j] = static_cast<int8_t>(c >> j & 1 ? -1 : 1);
                v[k] = static_cast<int8_t>(c >> k & 1 ? 3 : -3);
                out.push_back(v);
            }
        }
        if (out.size() != 196560)
            throw std::logic_error("Leech minimal vector count mismatch");
        return out;
    }();
    return vecs;
}

PointSet leech_section(std::optional<uint64_t> pair_seed) {
    const auto& X = leech_minimal_vectors();
    auto dot = [](const std::array<int8_t, 24>& a, const std::array<int8_t, 24>& b) {
        int d = 0;
        for (int i = 0; i < 24; ++i) d += int(a[i]) * int(b[i]);
        return d;
    };
    // pick x, y with <x,y> = -8 (normalized inner product -1/4)
    size_t xi = 0, yi = 0;
    bool found = false;
    if (!pair_seed) {
        for (size_t j = 1; j < X.size() && !found; ++j)
            if (dot(X[0], X[j]) == -8) {
                xi = 0;
                yi = j;
                found = true;
            }
    } else {
        std::mt19937_64 rng(*pair_seed);
        while (!found) {
            xi = rng() % X.size();
            yi = rng() % X.size();
            if (xi != yi && dot(X[xi], X[yi]) == -8) found = true;
        }
    }
    if (!found) throw std::logic_error("no Leech pair at inner product -1/4");

    PointSet ps;
    ps.space = Space::sphere(22);
    ps.label = "leech-section";
    const auto &x = X[xi], &y = X[yi];
    for (const auto& z : X) {
        if (dot(z, x) != 16 || dot(z, y) != 0) continue;
        // project out span(x, y) and clear denominators: v = 15 z - 8 x - 2 y
        std::vector<Rat> v(24);
        for (int i = 0; i < 24; ++i)
            v[i] = Rat(15L * z[i] - 8L * x[i] - 2L * y[i]);
        ps.coords.push_back(std::move(v));
    }
    ps.norm2 = Rat(5280);  // 15 * 32 * 11
    return ps;
}

void write_pointset(std::ostream& os, const PointSet& ps) {
    os << "# fewdist pointset space=" << ps.space.str() << " label=" << ps.label
       << " points=" << ps.size();
    if (!ps.space.finite()) os << " norm2=" << ps.norm2.str();
    os << "\n";
    if (ps.space.finite()) {
        for (uint64_t w : ps.words) {
            std::string row(ps.space.n, '0');
            for (int i = 0; i < ps.space.n; ++i)
                if (w >> i & 1) row[i] = '1';
            os << row << "\n";
        }
    } else {
        for (const auto& v : ps.coords) {
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
            os << "\n";
        }
    }
}

PointSet read_pointset(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# fewdist pointset ", 0) != 0)
        throw std::invalid_argument("read_pointset: missing header");
    auto field = [&](const std::string& key) -> std::optional<std::string> {
        std::string marker = key + "=";
        size_t pos = header.find(marker);
        if (pos == std::string::npos) return std::nullopt;
        size_t start = pos + marker.size();
        size_t end = header.find(' ', start);
        return header.substr(start, end == std::string::npos ? end : end - start);
    };
    auto spstr = field("space");
    if (!spstr) throw std::invalid_argument("read_pointset: missing space field");
    auto sp = Space::parse(*spstr);
    if (!sp) throw std::invalid_argument("read_pointset: bad space descriptor");
    PointSet ps;
    ps.space = *sp;
    if (auto l = field("label")) ps.label = *l;
    if (auto n2 = field("norm2")) {
        auto r = Rat::parse(*n2);
        if (!r) throw std::invalid_argument("read_pointset: bad norm2");
        ps.norm2 = *r;
    }
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (ps.space.finite()) {
            if (static_cast<int>(line.size()) != ps.space.n)
                throw std::invalid_argument("read_pointset: row length mismatch");
            uint64_t w = 0;
            for (int i = 0; i < ps.space.n; ++i) {
                if (line[i] == '1') w |= uint64_t(1) << i;
                else if (line[i] != '0')
                    throw std::invalid_argument("read_pointset: bad bit character");
            }
            ps.words.push_back(w);
        } else {
            std::vector<Rat> v;
            std::stringstream ss(line);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto r = Rat::parse(tok);
                if (!r) throw std::invalid_argument("read_pointset: bad coordinate " + tok);
                v.push_back(*r);
            }
            ps.coords.push_back(std::move(v));
        }
    }
    return ps;
}

}  // namespace fewdist
