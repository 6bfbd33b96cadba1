#pragma once

// Generators for the extremal configurations: Hamming weight classes, Johnson
// prefix sets, sphere 0/1 sets, the binary Golay code and its derived sets,
// the E8 half root system, and the Leech minimal-vector section — plus the
// distance-spectrum verifier they are all checked against.
//
// Sphere point sets are stored as exact rational coordinate vectors sharing
// one squared norm; normalization to the unit sphere happens only inside the
// inner-product computation, so no irrational coordinates ever appear.

#include "fewdist/rational.hpp"
#include "fewdist/spaces.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fewdist {

struct PointSet {
    Space space{SpaceKind::hamming, 1, 0};
    std::string label;
    // finite spaces: bit vectors (n <= 64)
    std::vector<uint64_t> words;
    // sphere: rational coordinate vectors with common squared norm
    std::vector<std::vector<Rat>> coords;
    Rat norm2{0};

    size_t size() const { return space.finite() ? words.size() : coords.size(); }
};

struct SpectrumReport {
    size_t cardinality = 0;
    std::vector<Rat> distances;  // sorted ascending, exact
    int s = 0;
};

SpectrumReport verify_spectrum(const PointSet& ps);

// all binary vectors of weight s, s-2, s-4, ... (requires 2s <= n)
PointSet hamming_weight_classes(int n, int s);

// w-s ones fixed on the first coordinates, s ones free among the rest
PointSet johnson_prefix(int n, int w, int s);

// 0/1 vectors of length n+1 with s ones, centered on their hyperplane
// (requires 2s <= n+1)
PointSet sphere_01(int n, int s);

// the perfect binary [23,12,7] Golay code
struct GolayCode {
    std::vector<uint32_t> codewords;                 // all 4096, 23-bit masks
    std::array<uint32_t, 12> generators;             // generator matrix rows
    std::vector<size_t> weight_distribution;         // index = weight
    int min_distance = 0;
};
const GolayCode& golay23();

PointSet golay23_even();     // 2048 even-weight codewords in H(23,2)
PointSet golay23_weight7();  // 253 weight-7 codewords in J(23,7)
PointSet johnson24_lift();   // the weight-7 set prefixed with a 1, in J(24,8)

// dual code of the Golay [23,12] code (computed from the generator matrix);
// computationally shown to coincide with the even-weight subcode
std::vector<uint32_t> golay23_dual();

// one representative per antipodal pair of the 240 E8 roots; the default
// picks the lexicographically positive vector, a seed samples a random
// halving instead
PointSet e8_half(std::optional<uint64_t> seed = std::nullopt);
PointSet e8_full();  // all 240 roots

// 196560 Leech minimal vectors (integer coordinates, squared norm 32)
const std::vector<std::array<int8_t, 24>>& leech_minimal_vectors();

// section {z : <z,x> = 1/2, <z,y> = 0} for a pair x,y at inner product -1/4,
// projected to the orthogonal complement of span(x, y): 2025 points of S^21.
// pair_seed = nullopt takes the first pair in generation order.
PointSet leech_section(std::optional<uint64_t> pair_seed = std::nullopt);

// newline-delimited text exchange: header line, then one point per line
void write_pointset(std::ostream& os, const PointSet& ps);
PointSet read_pointset(std::istream& is);

}  // namespace fewdist
