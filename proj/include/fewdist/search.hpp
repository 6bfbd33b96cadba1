#pragma once

// Candidate-family searches behind the combined bound:
//   A(M,s) <= max over admissible D of B(D), against the 2N(M,s)-1 fallback.
//
// Finite spaces enumerate every s-subset of the distance domain exactly.
// Subsets whose K vector is non-integral (or over the ceiling) cannot occur
// for |X| >= 2N, so they contribute min(B(D), 2N-1) instead of B(D); this
// per-candidate combination is what the known Hamming/Johnson maxima
// require (the plain max against the fallback is weaker for small n).
//
// Sphere searches follow the proofs: enumerate integer K tuples, grid the
// largest distance over (0,1), and recover the remaining distances by the
// closed form (s=3, exact Q(sqrt(m)) arithmetic) or Newton iteration (s=4,
// float-certified bounds with exact-rational upgrade when roots reconstruct).
// Grid results are numerically supported, not a proof over the continuum;
// SearchResult::rigor says which applies.
//
// Parallel evaluation partitions work items statically and merges item
// results in index order, so output is identical for every parallel width.

#include "fewdist/bounds.hpp"
#include "fewdist/lrs.hpp"
#include "fewdist/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fewdist {

struct SearchConfig {
    int lp_m = 0;             // 0 -> s + 7, capped by the space
    long grid_steps = 0;      // 0 -> 2000 (s=3) / 400 (s=4)
    int precision_bits = 256; // sphere s=4 working precision
    double residual_tol = 1e-30;
    double dedup_radius = 1e-20;
    int newton_starts = 64;
    int parallel_width = 0;   // 0 -> hardware concurrency
    bool emit_all_candidates = false;
    uint64_t seed = 0;        // reserved for construction sampling via CLI

    BoundConfig bound_config(int s, const Space& sp) const {
        BoundConfig b;
        b.lp_m = lp_m > 0 ? lp_m : s + 7;
        (void)sp;
        return b;
    }
};

struct Candidate {
    std::vector<std::string> distances;  // exact strings (or 30-digit decimals)
    std::vector<Int> k;                  // integer K aligned with distances
    BoundReport report;

    json to_json() const;
};

struct SearchResult {
    Space space{SpaceKind::hamming, 1, 0};
    int s = 0;
    Int upper_bound = 0;
    Int fallback = 0;  // 2 N(M,s) - 1
    std::optional<Candidate> best;
    uint64_t examined = 0;
    enum class Rigor { exact, grid_numeric } rigor = Rigor::exact;
    long grid_steps_used = 0;
    int lp_m_used = 0;

    json to_json() const;
};

// Exhaustive search over all s-subsets of the distance domain (Hamming or
// Johnson).
SearchResult search_finite(const Space& sp, int s, const SearchConfig& cfg = {});

// K-enumeration + d3 grid search on S^{n-1} (n ambient).
SearchResult search_sphere_s3(int n, const SearchConfig& cfg = {});

// K-enumeration + d4 grid + numeric root finding on S^{n-1} (n ambient).
SearchResult search_sphere_s4(int n, const SearchConfig& cfg = {});

inline Int k_to_int(const Rat& k) { return k.num(); }
inline Int k_to_int(const QuadExt& k) { return k.rational().num(); }

// Single-D evaluation: admissibility data plus a full BoundReport.
template <class T>
Candidate bound_for_known(const DistanceSet<T>& D, const SearchConfig& cfg = {}) {
    Candidate c;
    auto kv = k_vector(D);
    for (const auto& x : D.d) c.distances.push_back(x.str());
    bool all_int = true;
    for (const auto& k : kv.values) {
        if (k.is_integer()) c.k.push_back(k_to_int(k));
        else all_int = false;
    }
    if (!all_int) c.k.clear();  // non-integral K: omit
    c.report = combined_bound(D, cfg.bound_config(D.s(), D.space));
    return c;
}

// restricted s=4 pipeline: max certified B(D) over the d4 grid for one K
// tuple (slots 1..3 are the unknowns, slot 4 rides the grid)
Int s4_ktuple_max(int n, const std::array<Int, 4>& K, const SearchConfig& cfg = {});

}  // namespace fewdist
