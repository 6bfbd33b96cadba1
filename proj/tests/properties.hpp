#pragma once

// Randomized property suites shared between the unit tests and the
// acceptance runner. Every function returns true on success and appends a
// description of the first failure to `why` otherwise. All randomness is
// seeded deterministically.

#include "fewdist/bounds.hpp"
#include "fewdist/constructions.hpp"
#include "fewdist/lrs.hpp"
#include "fewdist/search.hpp"
#include "fewdist/simplex.hpp"
#include "fewdist/spaces.hpp"

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fewdist::props {

inline bool zonal_at_tau0_is_one(std::string& why) {
    std::vector<Space> spaces = {Space::hamming(12), Space::johnson(12, 5), Space::sphere(8),
                                 Space::sphere(23)};
    for (const auto& sp : spaces) {
        int kmax = sp.max_degree() < 0 ? 12 : std::min(12, sp.max_degree());
        for (int k = 0; k <= kmax; ++k) {
            if (zonal(sp, k, Rat(sp.tau0())) != Rat(1)) {
                why = "zonal(" + sp.str() + "," + std::to_string(k) + ", tau0) != 1";
                return false;
            }
        }
    }
    return true;
}

inline bool zonal_degree_property(std::string& why) {
    std::vector<Space> spaces = {Space::hamming(12), Space::johnson(12, 5), Space::sphere(8)};
    for (const auto& sp : spaces) {
        int kmax = sp.max_degree() < 0 ? 12 : std::min(12, sp.max_degree());
        for (int k = 0; k <= kmax; ++k) {
            auto c = zonal_monomial_coeffs(sp, k);
            if (static_cast<int>(c.size()) != k + 1 || c.back().is_zero()) {
                why = "zonal_monomial_coeffs(" + sp.str() + "," + std::to_string(k) +
                      ") degree defect";
                return false;
            }
        }
    }
    return true;
}

// zonal evaluated directly == monomial-coefficient polynomial at the point
inline bool zonal_consistency(std::string& why, int points = 50) {
    std::mt19937_64 rng(20240811);
    std::vector<Space> spaces = {Space::hamming(12), Space::johnson(12, 5), Space::sphere(7)};
    for (const auto& sp : spaces) {
        int kmax = sp.max_degree() < 0 ? 12 : std::min(12, sp.max_degree());
        for (int p = 0; p < points; ++p) {
            Rat x;
            if (sp.finite()) {
                x = Rat(1 + static_cast<long>(rng() % sp.domain_max()));
            } else {
                long num = static_cast<long>(rng() % 2001) - 1000;
                x = Rat(num, 1001);  // in (-1, 1)
            }
            for (int k = 0; k <= kmax; ++k) {
                auto c = zonal_monomial_coeffs(sp, k);
                Rat direct = zonal(sp, k, x);
                Rat horner(0);
                for (size_t i = c.size(); i-- > 0;) horner = horner * x + c[i];
                if (direct != horner) {
                    why = "zonal mismatch at " + sp.str() + " k=" + std::to_string(k) +
                          " x=" + x.str();
                    return false;
                }
            }
        }
    }
    return true;
}

// sum_{x,y in X} h_k Phi_k(tau(x,y)) >= 0 for random finite point sets, and
// for random rational points on the sphere (checked exactly, not just to a
// floating tolerance)
inline bool positive_definiteness(std::string& why, int sets_per_space = 200) {
    std::mt19937_64 rng(987654321);
    // Hamming and Johnson
    for (int rep = 0; rep < sets_per_space; ++rep) {
        bool johnson = rep % 2;
        int n = 6 + static_cast<int>(rng() % 7);  // 6..12
        int w = johnson ? 2 + static_cast<int>(rng() % (n / 2 - 1)) : 0;
        Space sp = johnson ? Space::johnson(n, w) : Space::hamming(n);
        size_t count = 2 + rng() % 19;
        std::vector<uint64_t> pts;
        while (pts.size() < count) {
            uint64_t v;
            if (johnson) {
                v = 0;
                while (std::popcount(v) < w) v |= uint64_t(1) << (rng() % n);
                if (std::popcount(v) != w) continue;
            } else {
                v = rng() & ((uint64_t(1) << n) - 1);
            }
            pts.push_back(v);
        }
        int kmax = sp.max_degree();
        for (int k = 0; k <= kmax; ++k) {
            Rat acc(0);
            for (uint64_t a : pts)
                for (uint64_t b : pts) {
                    long tau = std::popcount(a ^ b);
                    if (johnson) tau /= 2;
                    acc += zonal(sp, k, Rat(tau));
                }
            acc *= Rat(sp.multiplicity(k));
            if (acc.sign() < 0) {
                why = "positive definiteness violated on " + sp.str() + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    // sphere: random rational unit vectors via stereographic projection
    for (int rep = 0; rep < sets_per_space / 10; ++rep) {
        int n = 3 + static_cast<int>(rng() % 4);  // ambient 3..6
        Space sp = Space::sphere(n);
        size_t count = 2 + rng() % 9;
        std::vector<std::vector<Rat>> pts;
        for (size_t i = 0; i < count; ++i) {
            std::vector<Rat> u(n - 1);
            for (auto& c : u) c = Rat(static_cast<long>(rng() % 21) - 10, 1 + rng() % 7);
            Rat norm2(0);
            for (const auto& c : u) norm2 += c * c;
            std::vector<Rat> x(n);
            for (int j = 0; j < n - 1; ++j) x[j] = Rat(2) * u[j] / (norm2 + Rat(1));
            x[n - 1] = (norm2 - Rat(1)) / (norm2 + Rat(1));
            pts.push_back(std::move(x));
        }
        for (int k = 0; k <= 8; ++k) {
            Rat acc(0);
            for (const auto& a : pts)
                for (const auto& b : pts) {
                    Rat dot(0);
                    for (int j = 0; j < n; ++j) dot += a[j] * b[j];
                    acc += zonal_row(sp, k, dot)[k];
                }
            if (acc.sign() < 0) {
                why = "sphere positive definiteness violated, n=" + std::to_string(n) +
                      " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

inline bool multiplicity_sums(std::string& why) {
    for (int n = 2; n <= 14; ++n) {
        Int acc = 0;
        for (int i = 0; i <= n; ++i) acc += Space::hamming(n).multiplicity(i);
        if (acc != int_pow(Int(2), n)) {
            why = "Hamming multiplicity sum != 2^n at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 4; n <= 14; ++n)
        for (int w = 1; 2 * w <= n; ++w) {
            Int acc = 0;
            for (int i = 0; i <= w; ++i) acc += Space::johnson(n, w).multiplicity(i);
            if (acc != binomial(Int(n), w)) {
                why = "Johnson multiplicity sum != C(n,w) at n=" + std::to_string(n) +
                      ",w=" + std::to_string(w);
                return false;
            }
        }
    return true;
}

// random valid distance set in a space (sorted, in-domain, distinct)
inline std::vector<Rat> random_distances(std::mt19937_64& rng, const Space& sp, int s) {
    std::set<Rat> d;
    while (static_cast<int>(d.size()) < s) {
        if (sp.finite()) {
            d.insert(Rat(1 + static_cast<long>(rng() % sp.domain_max())));
        } else {
            long den = 2 + rng() % 40;
            long num = static_cast<long>(rng() % (2 * den)) - den;  // [-den, den)
            d.insert(Rat(num, den));
        }
    }
    return std::vector<Rat>(d.begin(), d.end());
}

inline bool power_sum_identities(std::string& why, int per_space = 500) {
    std::mt19937_64 rng(13579);
    std::vector<Space> spaces = {Space::hamming(12), Space::johnson(14, 6), Space::sphere(9)};
    for (const auto& sp : spaces) {
        for (int rep = 0; rep < per_space; ++rep) {
            int smax = sp.finite() ? static_cast<int>(std::min<long>(5, sp.domain_max())) : 5;
            int s = 2 + static_cast<int>(rng() % (smax - 1));
            DistanceSet<Rat> D(sp, random_distances(rng, sp, s));
            auto kv = k_vector(D);
            Rat total(0);
            for (const auto& k : kv.values) total += k;
            if (total != Rat(1)) {
                why = "sum K != 1 on " + sp.str();
                return false;
            }
            if (!check_power_sums(D, kv)) {
                why = "power sums failed on " + sp.str();
                return false;
            }
        }
    }
    return true;
}

inline bool solve_s3_roundtrip(std::string& why, int wanted = 500) {
    std::mt19937_64 rng(246810);
    Space sp = Space::sphere(9);
    int done = 0, attempts = 0;
    while (done < wanted && attempts < wanted * 60) {
        ++attempts;
        long k1 = static_cast<long>(rng() % 13) - 6;
        long k2 = static_cast<long>(rng() % 13) - 6;
        long k3 = 1 - k1 - k2;
        if (!k1 || !k2 || !k3 || k1 + k2 == 0) continue;
        if (-k1 * k2 * k3 < 0) continue;
        long den = 3 + rng() % 50;
        Rat d3(1 + static_cast<long>(rng() % (den - 1)), den);  // in (0,1)
        std::pair<QuadExt, QuadExt> roots;
        try {
            roots = solve_s3({Int(k1), Int(k2), Int(k3)}, d3, Rat(1));
        } catch (const std::domain_error&) {
            continue;
        }
        QuadExt d3q{d3};
        if (!(QuadExt(Rat(-1)) <= roots.first && roots.first < roots.second &&
              roots.second < d3q))
            continue;
        DistanceSet<QuadExt> D(sp, {roots.first, roots.second, d3q});
        auto kv = k_vector(D);
        // the recovered K must be the input K: K3 stays on d3, and K1/K2 land
        // on the two roots in sorted order
        std::vector<long> got;
        for (const auto& k : kv.values) {
            if (!k.is_integer()) {
                why = "solve_s3 round-trip produced non-integer K";
                return false;
            }
            got.push_back(static_cast<long>(k_to_int(k).get_si()));
        }
        if (got[2] != k3) {
            why = "solve_s3 round-trip lost K3";
            return false;
        }
        if (!((got[0] == k1 && got[1] == k2) || (got[0] == k2 && got[1] == k1))) {
            why = "solve_s3 round-trip lost K1/K2 (got " + std::to_string(got[0]) + "," +
                  std::to_string(got[1]) + " want " + std::to_string(k1) + "," +
                  std::to_string(k2) + ")";
            return false;
        }
        if (!check_power_sums(D, kv)) {
            why = "solve_s3 triple fails power sums";
            return false;
        }
        ++done;
    }
    if (done < wanted) {
        why = "solve_s3 round-trip: not enough valid samples (" + std::to_string(done) + ")";
        return false;
    }
    return true;
}

inline bool lp_primal_dual_agreement(std::string& why, int instances = 100) {
    std::mt19937_64 rng(11223344);
    for (int rep = 0; rep < instances; ++rep) {
        int nvar = 1 + rng() % 4, nrow = 1 + rng() % 4;
        // primal: max c.x st A x <= b, x >= 0 with b >= 0 (feasible at 0)
        // plus box rows to keep it bounded
        std::vector<Rat> c(nvar);
        for (auto& v : c) v = Rat(static_cast<long>(rng() % 11) - 3, 1 + rng() % 4);
        Matrix<Rat> A(nrow, std::vector<Rat>(nvar));
        std::vector<Rat> b(nrow);
        for (int i = 0; i < nrow; ++i) {
            for (auto& v : A[i]) v = Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
            b[i] = Rat(static_cast<long>(rng() % 12), 1 + rng() % 3);
        }
        LpProblem<Rat> primal;
        primal.maximize = true;
        primal.objective = c;
        for (int i = 0; i < nrow; ++i) primal.rows.push_back({A[i], Rel::le, b[i]});
        for (int j = 0; j < nvar; ++j) {
            std::vector<Rat> row(nvar, Rat(0));
            row[j] = Rat(1);
            primal.rows.push_back({row, Rel::le, Rat(7)});  // box: x_j <= 7
        }
        auto ps = lp_solve(primal);
        if (ps.status != LpStatus::optimal) {
            why = "random primal not optimal";
            return false;
        }
        // replay constraints exactly
        for (const auto& row : primal.rows) {
            Rat acc(0);
            for (int j = 0; j < nvar; ++j) acc += row.coeffs[j] * ps.x[j];
            if (acc > row.rhs) {
                why = "primal solution violates a constraint";
                return false;
            }
        }
        // dual: min b.y st A^T y >= c, y >= 0 (over the extended row set)
        int mrows = static_cast<int>(primal.rows.size());
        LpProblem<Rat> dual;
        dual.maximize = false;
        for (int i = 0; i < mrows; ++i) dual.objective.push_back(primal.rows[i].rhs);
        for (int j = 0; j < nvar; ++j) {
            std::vector<Rat> row(mrows);
            for (int i = 0; i < mrows; ++i) row[i] = primal.rows[i].coeffs[j];
            dual.rows.push_back({row, Rel::ge, c[j]});
        }
        auto ds = lp_solve(dual);
        if (ds.status != LpStatus::optimal) {
            why = "random dual not optimal";
            return false;
        }
        if (!(ps.objective == ds.objective)) {
            why = "primal optimum != dual optimum (" + ps.objective.str() + " vs " +
                  ds.objective.str() + ")";
            return false;
        }
    }
    return true;
}

inline bool monotone_k_sampling(std::string& why, int wanted = 500) {
    std::mt19937_64 rng(55667788);
    std::vector<Space> spaces = {Space::sphere(9), Space::hamming(12), Space::johnson(14, 6)};
    int done = 0;
    while (done < wanted) {
        const Space& sp = spaces[done % spaces.size()];
        int smax = sp.finite() ? static_cast<int>(std::min<long>(5, sp.domain_max())) : 5;
        int s = 2 + static_cast<int>(rng() % (smax - 1));
        DistanceSet<Rat> D(sp, random_distances(rng, sp, s));
        bool prop = monotone_k_property(D);
        // independent ratio check: |K_far / K_next| < 1 via the product form
        auto kv = k_vector(D);
        Rat tau0 = sp.tau0();
        bool below = D.d.back() < tau0;
        Rat kf = below ? kv.values.front() : kv.values.back();
        Rat kn = below ? kv.values[1] : kv.values[s - 2];
        bool ratio_lt_1 = kf.abs() < kn.abs();
        if (prop != ratio_lt_1) {
            why = "monotone property disagrees with direct ratio";
            return false;
        }
        if (!prop) {
            why = "monotone |K1|<|K2| violated on " + sp.str();
            return false;
        }
        ++done;
    }
    return true;
}

// every LP bound carries a certificate that re-verifies from scratch
inline bool certificates_reverify(std::string& why) {
    std::mt19937_64 rng(99887766);
    for (int rep = 0; rep < 25; ++rep) {
        Space sp = rep % 2 ? Space::sphere(5 + rng() % 6) : Space::hamming(8 + rng() % 5);
        int s = 2 + rng() % 2;
        DistanceSet<Rat> D(sp, random_distances(rng, sp, s));
        auto lp = lp_bound_dual(D, s + 7);
        if (lp.status != LpStatus::optimal) continue;
        if (!lp.verified || !verify_dual_certificate(D, lp.f, Rat(-1))) {
            why = "certificate failed independent re-verification on " + sp.str();
            return false;
        }
        // serialized form round-trips
        BoundReport rep2 = combined_bound(D);
        if (rep2.lp_ok) {
            std::string reason;
            if (!verify_certificate_json(rep2.certificate_json(), &reason)) {
                why = "serialized certificate failed: " + reason;
                return false;
            }
        }
    }
    return true;
}

}  // namespace fewdist::props
