#pragma once

// The three upper bounds for a fixed distance set D:
//   - absolute bound: sum of multiplicities h_0..h_s,
//   - harmonic bound H(D): sum of h_i over indices where the Phi-expansion of
//     the annihilator polynomial prod (d_i - t)/(d_i - tau0) is strictly
//     positive,
//   - LP bound L(D): Delsarte linear program, solved in exact arithmetic with
//     the dual certificate re-verified independently of the solver,
// and the combination B(D) = min(H(D), L(D)).
//
// Cardinalities are integers, so the integer form of an LP bound is the floor
// of the exact optimum.
//
// Floating-point distance sets (sphere s=4 roots) go through the
// float-certified path: the certificate is found by exact simplex at dyadic
// rational images of the inputs, then re-verified over outward-rounded
// intervals around them; near-zero harmonic coefficients count as positive
// (which can only weaken the bound).

#include "fewdist/interval.hpp"
#include "fewdist/linsolve.hpp"
#include "fewdist/lrs.hpp"
#include "fewdist/mpreal.hpp"
#include "fewdist/poly.hpp"
#include "fewdist/quadext.hpp"
#include "fewdist/simplex.hpp"
#include "fewdist/spaces.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fewdist {

using json = nlohmann::json;

Int absolute_bound(const Space& sp, int s);

template <class T>
struct HarmonicExpansion {
    std::vector<T> f;           // coefficients f_0..f_s in the Phi basis
    std::vector<int> positive;  // indices with f_i > 0 (strict)
    std::vector<int> zero;      // indices with f_i == 0 exactly
};

// Expand the annihilator polynomial in the Phi basis by solving the
// upper-triangular monomial change-of-basis system.
template <class T>
std::pair<Int, HarmonicExpansion<T>> harmonic_bound(const DistanceSet<T>& D) {
    const int s = D.s();
    const Space& sp = D.space;
    T tau0{sp.tau0()};
    Poly<T> f(std::vector<T>{T(1)});
    for (const T& d : D.d) {
        T denom = d - tau0;
        f *= Poly<T>(std::vector<T>{d / denom, T(-1) / denom});
    }
    // monomial coefficients of Phi_0..Phi_s (exact rationals)
    Matrix<T> a(s + 1, std::vector<T>(s + 1, T(0)));
    for (int k = 0; k <= s; ++k) {
        auto col = zonal_monomial_coeffs(sp, k);
        for (int r = 0; r <= k; ++r) a[r][k] = T(col[r]);
    }
    std::vector<T> rhs(s + 1, T(0));
    for (int r = 0; r <= s; ++r) rhs[r] = f.coeff(r);
    std::vector<T> coeffs = solve_linear(a, rhs);

    HarmonicExpansion<T> exp;
    exp.f = std::move(coeffs);
    Int bound = 0;
    for (int i = 0; i <= s; ++i) {
        int sg = exp.f[i].sign();
        if (sg > 0) {
            exp.positive.push_back(i);
            bound += sp.multiplicity(i);
        } else if (sg == 0) {
            exp.zero.push_back(i);
        }
    }
    return {bound, std::move(exp)};
}

template <class T>
struct LpBound {
    LpStatus status = LpStatus::infeasible;
    T optimum{};         // 1 + sum of LP variables, exact (when optimal)
    Int bound = 0;       // floor(optimum): the integer cardinality bound
    std::vector<T> f;    // dual certificate f_1..f_m (dual direction only)
    int truncation = 0;  // m (dual) or kmax (primal) actually used
    bool verified = false;
};

Int floor_of(const Rat& x);
Int floor_of(const QuadExt& x);

// Independent certificate check: f_k >= 0 and sum_k f_k Phi_k(d_i) <= rhs
// for every distance, evaluated from scratch.
template <class T>
bool verify_dual_certificate(const DistanceSet<T>& D, const std::vector<T>& f, const Rat& rhs) {
    for (const auto& fk : f)
        if (fk.sign() < 0) return false;
    const int m = static_cast<int>(f.size());
    for (const T& d : D.d) {
        auto phis = zonal_row(D.space, m, d);
        T acc(0);
        for (int k = 1; k <= m; ++k) acc += f[k - 1] * phis[k];
        if (!(acc <= T(rhs))) return false;
    }
    return true;
}

// min{1 + f_1 + ... + f_m : sum_k f_k Phi_k(d_i) <= -1, f >= 0}
template <class T>
LpBound<T> lp_bound_dual(const DistanceSet<T>& D, int m, const Rat& rhs = Rat(-1)) {
    const Space& sp = D.space;
    m = sp.cap_degree(m);
    if (m < 1) throw std::invalid_argument("lp_bound_dual: m must be >= 1");
    LpProblem<T> p;
    p.maximize = false;
    p.objective.assign(m, T(1));
    for (const T& d : D.d) {
        auto phis = zonal_row(sp, m, d);
        typename LpProblem<T>::Row row;
        row.coeffs.assign(phis.begin() + 1, phis.end());
        row.rel = Rel::le;
        row.rhs = T(rhs);
        p.rows.push_back(std::move(row));
    }
    auto sol = lp_solve(p);
    LpBound<T> out;
    out.status = sol.status;
    out.truncation = m;
    if (sol.status != LpStatus::optimal) return out;
    out.f = sol.x;
    out.optimum = T(1) + sol.objective;
    out.bound = floor_of(out.optimum);
    out.verified = verify_dual_certificate(D, out.f, rhs);
    if (!out.verified) throw std::logic_error("exact dual certificate failed re-verification");
    return out;
}

// max{1 + a_1 + ... + a_s : sum_i a_i Phi_k(d_i) >= -1 (k = 1..kmax), a >= 0}
template <class T>
LpBound<T> lp_bound_primal(const DistanceSet<T>& D, int kmax) {
    const Space& sp = D.space;
    kmax = sp.cap_degree(kmax);
    const int s = D.s();
    if (kmax < s) throw std::invalid_argument("lp_bound_primal: kmax must be >= s");
    std::vector<std::vector<T>> cols;
    for (const T& d : D.d) cols.push_back(zonal_row(sp, kmax, d));
    LpProblem<T> p;
    p.maximize = true;
    p.objective.assign(s, T(1));
    for (int k = 1; k <= kmax; ++k) {
        typename LpProblem<T>::Row row;
        row.coeffs.reserve(s);
        for (int i = 0; i < s; ++i) row.coeffs.push_back(cols[i][k]);
        row.rel = Rel::ge;
        row.rhs = T(Rat(-1));
        p.rows.push_back(std::move(row));
    }
    auto sol = lp_solve(p);
    LpBound<T> out;
    out.status = sol.status;
    out.truncation = kmax;
    if (sol.status != LpStatus::optimal) return out;
    out.optimum = T(1) + sol.objective;
    out.bound = floor_of(out.optimum);
    out.verified = true;
    return out;
}

struct BoundConfig {
    int lp_m = 0;  // 0 -> s + 7, capped at the space's top harmonic degree
    // float-certified path:
    int pad_exp10 = 24;  // interval half-width 10^-pad around each distance
    std::vector<Rat> margins = {Rat(0), Rat(1, 1000000000000L),
                                Rat(Int(1), int_pow(Int(10), 9)),
                                Rat(Int(1), int_pow(Int(10), 6))};
    int effective_m(int s, const Space& sp) const {
        int m = lp_m > 0 ? lp_m : s + 7;
        return sp.cap_degree(std::max(m, s));
    }
};

struct BoundReport {
    Space space{SpaceKind::hamming, 1, 0};
    std::vector<std::string> distances;
    int s = 0;
    Int absolute = 0;
    Int harmonic = 0;
    std::vector<int> harmonic_positive, harmonic_zero;
    bool harmonic_zero_flag = false;  // some f_i == 0: strict/inclusive reading differs
    bool lp_ok = false;
    Int lp = 0;
    std::string lp_optimum;
    std::vector<std::string> certificate_f;
    int lp_m = 0;
    Int combined = 0;
    enum class Rigor { exact, float_certified } rigor = Rigor::exact;

    json to_json() const;
    json certificate_json() const;  // {space, distances, m, f, bound}
};

template <class T>
BoundReport combined_bound(const DistanceSet<T>& D, const BoundConfig& cfg = {}) {
    BoundReport r;
    r.space = D.space;
    r.s = D.s();
    for (const T& d : D.d) r.distances.push_back(d.str());
    r.absolute = absolute_bound(D.space, r.s);
    auto [hb, exp] = harmonic_bound(D);
    r.harmonic = hb;
    r.harmonic_positive = exp.positive;
    r.harmonic_zero = exp.zero;
    r.harmonic_zero_flag = !exp.zero.empty();
    int m = cfg.effective_m(r.s, D.space);
    auto lp = lp_bound_dual(D, m);
    r.lp_m = lp.truncation;
    if (lp.status == LpStatus::optimal) {
        r.lp_ok = true;
        r.lp = lp.bound;
        r.lp_optimum = lp.optimum.str();
        for (const auto& fk : lp.f) r.certificate_f.push_back(fk.str());
        r.combined = std::min(r.harmonic, r.lp);
    } else {
        // infeasible at this truncation: harmonic bound stands alone
        r.lp_ok = false;
        r.combined = r.harmonic;
    }
    r.rigor = BoundReport::Rigor::exact;
    return r;
}

// Float-certified combination for high-precision floating distances.
// When skip_lp_if_harmonic_below is set and the harmonic bound falls under
// it, the LP step is skipped (the report then carries the harmonic bound
// alone, which is still a valid upper bound).
BoundReport combined_bound_float(const Space& sp, const std::vector<Real>& d,
                                 const BoundConfig& cfg = {},
                                 const std::optional<Int>& skip_lp_if_harmonic_below = {});

// Re-check a serialized certificate document; returns false on any mismatch.
bool verify_certificate_json(const json& doc, std::string* why = nullptr);

}  // namespace fewdist
