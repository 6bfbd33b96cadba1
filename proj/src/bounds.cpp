#include "fewdist/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace fewdist {

Int absolute_bound(const Space& sp, int s) {
    if (s < 1) throw std::invalid_argument("absolute_bound: s must be >= 1");
    if (sp.max_degree() >= 0 && s > sp.max_degree())
        throw std::invalid_argument("absolute_bound: s exceeds the space's degree range");
    Int acc = 0;
    for (int i = 0; i <= s; ++i) acc += sp.multiplicity(i);
    return acc;
}

Int floor_of(const Rat& x) { return x.floor(); }

Int floor_of(const QuadExt& x) {
    if (x.is_rational()) return x.rational().floor();
    // start from a double estimate, then fix up with exact comparisons
    Int t(static_cast<long>(std::floor(x.to_double())));
    while (x < QuadExt(Rat(t))) --t;
    while (!(x < QuadExt(Rat(Int(t + 1))))) ++t;
    return t;
}

json BoundReport::to_json() const {
    json j;
    j["space"] = space.str();
    j["s"] = s;
    j["distances"] = distances;
    j["absolute"] = to_int64(absolute);
    j["harmonic"] = to_int64(harmonic);
    j["harmonic_positive"] = harmonic_positive;
    j["harmonic_zero"] = harmonic_zero;
    j["harmonic_zero_flag"] = harmonic_zero_flag;
    j["lp_ok"] = lp_ok;
    if (lp_ok) {
        j["lp"] = to_int64(lp);
        j["lp_optimum"] = lp_optimum;
        j["m"] = lp_m;
        j["f"] = certificate_f;
    }
    j["combined"] = to_int64(combined);
    j["rigor"] = rigor == Rigor::exact ? "exact" : "float-certified";
    return j;
}

json BoundReport::certificate_json() const {
    json j;
    j["space"] = space.str();
    j["distances"] = distances;
    j["m"] = lp_m;
    j["f"] = certificate_f;
    j["bound"] = to_int64(lp);
    return j;
}

namespace {

// round a Real to 64 significant bits and return the exact dyadic rational
Rat dyadic64(const Real& x) {
    Real y(x);
    mpfr_prec_round(y.raw(), 64, MPFR_RNDN);
    return y.to_rat_exact();
}

}  // namespace

BoundReport combined_bound_float(const Space& sp, const std::vector<Real>& d,
                                 const BoundConfig& cfg,
                                 const std::optional<Int>& skip_lp_if_harmonic_below) {
    const int s = static_cast<int>(d.size());
    if (s < 1) throw std::invalid_argument("combined_bound_float: empty distance set");
    for (int i = 1; i < s; ++i)
        if (!(d[i - 1] < d[i]))
            throw std::invalid_argument("combined_bound_float: distances must increase");

    BoundReport r;
    r.space = sp;
    r.s = s;
    for (const auto& x : d) r.distances.push_back(x.str(30));
    r.absolute = absolute_bound(sp, s);
    r.rigor = BoundReport::Rigor::float_certified;

    // harmonic bound with the inclusive sign rule: coefficients within
    // 1e-20 of zero are counted positive (only ever weakens the bound)
    {
        Real tau0{sp.tau0()};
        Poly<Real> f(std::vector<Real>{Real(1L)});
        for (const Real& x : d) {
            Real denom = x - tau0;
            f *= Poly<Real>(std::vector<Real>{x / denom, Real(-1L) / denom});
        }
        Matrix<Real> a(s + 1, std::vector<Real>(s + 1, Real(0L)));
        for (int k = 0; k <= s; ++k) {
            auto col = zonal_monomial_coeffs(sp, k);
            for (int row = 0; row <= k; ++row) a[row][k] = Real(col[row]);
        }
        std::vector<Real> rhs(s + 1, Real(0L));
        for (int row = 0; row <= s; ++row) rhs[row] = f.coeff(row);
        auto coeffs = solve_linear(a, rhs);
        Real eps{Rat(Int(1), int_pow(Int(10), 20))};
        Int hb = 0;
        for (int i = 0; i <= s; ++i) {
            if (coeffs[i].abs() <= eps) {
                r.harmonic_zero.push_back(i);
                r.harmonic_positive.push_back(i);  // inclusive
                hb += sp.multiplicity(i);
            } else if (coeffs[i].sign() > 0) {
                r.harmonic_positive.push_back(i);
                hb += sp.multiplicity(i);
            }
        }
        r.harmonic = hb;
        r.harmonic_zero_flag = !r.harmonic_zero.empty();
    }

    // LP: solve exactly at dyadic images of the inputs, then certify the
    // certificate over outward-rounded intervals around the true values
    const int m = cfg.effective_m(s, sp);
    r.lp_m = m;
    r.lp_ok = false;
    if (skip_lp_if_harmonic_below && r.harmonic < *skip_lp_if_harmonic_below) {
        r.combined = r.harmonic;
        return r;
    }
    Rat pad(Int(1), int_pow(Int(10), cfg.pad_exp10));
    Real padR{pad};
    std::vector<Rat> dy;
    for (const auto& x : d) dy.push_back(dyadic64(x));
    bool in_domain = true;
    for (const auto& q : dy)
        if (!(q >= Rat(-1) && q < Rat(1))) in_domain = false;

    if (in_domain) {
        for (const Rat& margin : cfg.margins) {
            Rat rhs = Rat(-1) - margin;
            LpBound<Rat> lp;
            try {
                DistanceSet<Rat> Dq(sp, dy);
                lp = lp_bound_dual(Dq, m, rhs);
            } catch (const std::invalid_argument&) {
                break;  // dyadic images collapsed; no LP certificate
            }
            if (lp.status != LpStatus::optimal) continue;
            // interval re-verification at the floating inputs
            bool ok = true;
            for (const auto& x : d) {
                Interval xi = Interval::pad(x, padR);
                auto phis = zonal_row(sp, m, xi);
                Interval acc(0);
                for (int k = 1; k <= m; ++k) acc += Interval(lp.f[k - 1]) * phis[k];
                if (!acc.upper_at_most(Rat(-1))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            r.lp_ok = true;
            r.lp = lp.bound;
            r.lp_optimum = lp.optimum.str();
            for (const auto& fk : lp.f) r.certificate_f.push_back(fk.str());
            break;
        }
    }
    r.combined = r.lp_ok ? std::min(r.harmonic, r.lp) : r.harmonic;
    return r;
}

bool verify_certificate_json(const json& doc, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    try {
        auto sp = Space::parse(doc.at("space").get<std::string>());
        if (!sp) return fail("bad space descriptor");
        int m = doc.at("m").get<int>();
        std::vector<std::string> ds = doc.at("distances").get<std::vector<std::string>>();
        std::vector<std::string> fs = doc.at("f").get<std::vector<std::string>>();
        Int bound(doc.at("bound").get<long>());
        if (static_cast<int>(fs.size()) != m) return fail("certificate length != m");

        bool quad = false;
        for (const auto& t : ds)
            if (t.find("√") != std::string::npos || t.find("sqrt") != std::string::npos)
                quad = true;
        auto run = [&](auto tag) -> bool {
            using T = decltype(tag);
            std::vector<T> dv;
            for (const auto& t : ds) {
                auto v = T::parse(t);
                if (!v) return fail("unparsable distance: " + t);
                dv.push_back(*v);
            }
            std::vector<T> fv;
            for (const auto& t : fs) {
                auto v = T::parse(t);
                if (!v) return fail("unparsable coefficient: " + t);
                fv.push_back(*v);
            }
            DistanceSet<T> D(*sp, dv);
            if (!verify_dual_certificate(D, fv, Rat(-1)))
                return fail("certificate violates dual feasibility");
            T total(1);
            for (const auto& fk : fv) total += fk;
            // the claim is justified when the certified value is at least as
            // strong as the claimed bound
            if (floor_of(total) > bound) return fail("claimed bound is stronger than certified");
            return true;
        };
        return quad ? run(QuadExt()) : run(Rat());
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace fewdist
