#pragma once

// K_i machinery: the Lagrange-type values K_i = prod_{j!=i} (d_j-tau0)/(d_j-d_i),
// their integrality ceiling, the power-sum identities they satisfy, and the
// closed-form inversions for s=2,3. The s=4 numeric solver lives in lrs_s4.cpp.

#include "fewdist/mpreal.hpp"
#include "fewdist/quadext.hpp"
#include "fewdist/rational.hpp"
#include "fewdist/spaces.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fewdist {

// N(M,s) = h_0 + ... + h_{s-1}
inline Int n_of(const Space& sp, int s) {
    if (s < 1) throw std::invalid_argument("n_of: s must be >= 1");
    Int acc = 0;
    for (int i = 0; i < s; ++i) acc += sp.multiplicity(i);
    return acc;
}

// floor(1/2 + sqrt(N^2/(2N-2) + 1/4)), computed in integers:
// the largest t with t(t-1)(2N-2) <= N^2.
inline Int lrs_ceiling(const Int& N) {
    if (N < 2) throw std::invalid_argument("lrs_ceiling: N must be >= 2");
    Int lhs_scale = 2 * N - 2;
    Int rhs = N * N;
    Int t = isqrt_floor(rhs / lhs_scale);  // near sqrt(t(t-1)) guess
    while (t * (t - 1) * lhs_scale > rhs) --t;
    while ((t + 1) * t * lhs_scale <= rhs) ++t;
    if (t < 1) t = 1;
    return t;
}

template <class T>
struct KVector {
    std::vector<T> values;  // aligned with the sorted distances
    bool all_integer = false;
    Int ceiling = 0;
    bool within_ceiling = false;
};

template <class T>
KVector<T> k_vector(const DistanceSet<T>& D) {
    const int s = D.s();
    if (s < 2) throw std::invalid_argument("k_vector needs s >= 2");
    T tau0{D.space.tau0()};
    KVector<T> kv;
    kv.values.reserve(s);
    for (int i = 0; i < s; ++i) {
        T prod(1);
        for (int j = 0; j < s; ++j) {
            if (j == i) continue;
            prod = prod * ((D.d[j] - tau0) / (D.d[j] - D.d[i]));
        }
        kv.values.push_back(std::move(prod));
    }
    kv.ceiling = lrs_ceiling(n_of(D.space, s));
    kv.all_integer = true;
    kv.within_ceiling = true;
    T cap{Rat(kv.ceiling)};
    for (const auto& k : kv.values) {
        if (!k.is_integer()) kv.all_integer = false;
        if (!(k.abs() <= cap)) kv.within_ceiling = false;
    }
    return kv;
}

// sum_i d_i^j K_i == tau0^j exactly for j = 0..s-1
template <class T>
bool check_power_sums(const DistanceSet<T>& D, const KVector<T>& kv) {
    const int s = D.s();
    if (static_cast<int>(kv.values.size()) != s)
        throw std::invalid_argument("check_power_sums: misaligned lengths");
    T tau0{D.space.tau0()};
    std::vector<T> dpow(s, T(1));
    T tpow(1);
    for (int j = 0; j < s; ++j) {
        T acc(0);
        for (int i = 0; i < s; ++i) acc += dpow[i] * kv.values[i];
        if (!(acc == tpow)) return false;
        for (int i = 0; i < s; ++i) dpow[i] = dpow[i] * D.d[i];
        tpow = tpow * tau0;
    }
    return true;
}

// s=2 closed form: d1 = (tau0 - d2 K2) / K1
template <class T>
T solve_s2(const Int& k1, const Int& k2, const T& d2, const T& tau0) {
    if (k1 == 0) throw std::domain_error("solve_s2: K1 must be nonzero");
    return (tau0 - d2 * T(Rat(k2))) / T(Rat(k1));
}

// s=3 closed form (the principal-branch root pair for the system
//   K1 d1 + K2 d2 = tau0 - K3 d3,  K1 d1^2 + K2 d2^2 = tau0^2 - K3 d3^2),
// returned sorted ascending, in Q(sqrt(m)) with m = squarefree(-K1 K2 K3).
inline std::pair<QuadExt, QuadExt> solve_s3(const std::array<Int, 3>& K, const Rat& d3,
                                            const Rat& tau0) {
    const Int &K1 = K[0], &K2 = K[1], &K3 = K[2];
    if (K1 == 0 || K2 == 0) throw std::domain_error("solve_s3: zero K");
    if (K1 + K2 == 0) throw std::domain_error("solve_s3: zero divisor (K1 + K2 = 0)");
    Int radicand = -K1 * K2 * K3;
    if (radicand < 0) throw std::domain_error("solve_s3: negative radicand");
    Rat S1 = tau0 - Rat(K3) * d3;
    QuadExt root = QuadExt::sqrt_of(radicand);
    QuadExt d1 = (QuadExt(S1 * Rat(K1)) - QuadExt(d3 - tau0) * root) /
                 QuadExt(Rat(Int(K1 * (K1 + K2))));
    QuadExt d2 = (QuadExt(S1) - QuadExt(Rat(K1)) * d1) / QuadExt(Rat(K2));
    if (d2 < d1) std::swap(d1, d2);
    return {d1, d2};
}

// companion for the degenerate K1 + K2 = 0 (i.e. K3 = 1 when sum K = 1) case,
// where the quadratic collapses to a linear system with rational roots
inline std::pair<Rat, Rat> solve_s3_k1k2_opposite(const Int& k1, const Rat& d3,
                                                  const Int& k3, const Rat& tau0) {
    if (k1 == 0) throw std::domain_error("solve_s3_k1k2_opposite: zero K1");
    Rat S1 = tau0 - Rat(k3) * d3;
    Rat S2 = tau0 * tau0 - Rat(k3) * d3 * d3;
    if (S1.is_zero()) throw std::domain_error("solve_s3_k1k2_opposite: S1 = 0");
    Rat dsum = S2 / S1;
    Rat ddiff = S1 / Rat(k1);
    Rat r1 = (dsum + ddiff) / Rat(2);
    Rat r2 = (dsum - ddiff) / Rat(2);
    return r1 <= r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

// |K at the distance farthest from tau0| < |K at the next one|, for distance
// sets lying strictly on one side of tau0.
template <class T>
bool monotone_k_property(const DistanceSet<T>& D) {
    const int s = D.s();
    if (s < 2) throw std::domain_error("monotone_k_property needs s >= 2");
    T tau0{D.space.tau0()};
    bool below = D.d.back() < tau0;   // all distances below tau0 (sphere)
    bool above = tau0 < D.d.front();  // all above (Hamming/Johnson)
    if (!below && !above) throw std::domain_error("monotone_k_property: distances straddle tau0");
    auto kv = k_vector(D);
    // farthest from tau0: first element when below, last when above
    T k1 = below ? kv.values.front() : kv.values.back();
    T k2 = below ? kv.values[1] : kv.values[s - 2];
    return k1.abs() < k2.abs();
}

// Multi-start damped Newton for the s=4 system
//   sum_{i=1}^{4} K_i d_i^j = tau0^j  (j = 1,2,3),  d4 fixed,
// in the unknowns (d1,d2,d3) aligned with K[0..2]. Returns all distinct
// converged real solutions (residual below tolerance), deterministically
// ordered. Empty when nothing converges.
struct S4Config {
    int precision_bits = 256;
    int newton_starts = 64;
    double residual_tol = 1e-30;
    double dedup_radius = 1e-20;
    int max_iterations = 80;
};

std::vector<std::array<Real, 3>> solve_s4_numeric(const std::array<Int, 4>& K, const Real& d4,
                                                  const Rat& tau0, const S4Config& cfg = {});

}  // namespace fewdist
