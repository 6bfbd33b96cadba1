#include "fewdist/linsolve.hpp"
#include "fewdist/lrs.hpp"

#include <algorithm>
#include <cmath>

namespace fewdist {

namespace {

// scalar adapter so solve_linear works on plain double
struct Dbl {
    double v = 0;
    Dbl() = default;
    Dbl(long x) : v(static_cast<double>(x)) {}
    Dbl(int x) : v(static_cast<double>(x)) {}
    Dbl(double x) : v(x) {}
    Dbl operator-() const { return Dbl(-v); }
    friend Dbl operator+(Dbl a, Dbl b) { return Dbl(a.v + b.v); }
    friend Dbl operator-(Dbl a, Dbl b) { return Dbl(a.v - b.v); }
    friend Dbl operator*(Dbl a, Dbl b) { return Dbl(a.v * b.v); }
    friend Dbl operator/(Dbl a, Dbl b) { return Dbl(a.v / b.v); }
    Dbl& operator-=(Dbl o) { v -= o.v; return *this; }
    friend bool operator<(Dbl a, Dbl b) { return a.v < b.v; }
    Dbl abs() const { return Dbl(std::fabs(v)); }
    bool is_zero() const { return v == 0.0; }
};

// Halton low-discrepancy point, mapped to [-1, 1)
double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return 2.0 * r - 1.0;
}

bool newton_double(const std::array<double, 4>& K, const std::array<double, 3>& c,
                   std::array<double, 3>& d, int max_iters) {
    auto resid = [&](const std::array<double, 3>& x) {
        double r = 0;
        for (int j = 1; j <= 3; ++j) {
            double acc = -c[j - 1];
            for (int i = 0; i < 3; ++i) acc += K[i] * std::pow(x[i], j);
            r = std::max(r, std::fabs(acc));
        }
        return r;
    };
    double res = resid(d);
    for (int it = 0; it < max_iters; ++it) {
        if (res < 1e-11) return true;
        Matrix<Dbl> J(3, std::vector<Dbl>(3));
        std::vector<Dbl> F(3);
        for (int j = 1; j <= 3; ++j) {
            double acc = -c[j - 1];
            for (int i = 0; i < 3; ++i) {
                acc += K[i] * std::pow(d[i], j);
                J[j - 1][i] = Dbl(j * K[i] * std::pow(d[i], j - 1));
            }
            F[j - 1] = Dbl(acc);
        }
        std::vector<Dbl> step;
        try {
            step = solve_linear(J, F);
        } catch (const std::domain_error&) {
            return false;
        }
        double lambda = 1.0;
        for (int h = 0; h < 40; ++h) {
            std::array<double, 3> cand = d;
            for (int i = 0; i < 3; ++i) cand[i] -= lambda * step[i].v;
            double rc = resid(cand);
            if (rc < res || rc < 1e-11) {
                d = cand;
                res = rc;
                lambda = -1;
                break;
            }
            lambda *= 0.5;
        }
        if (lambda > 0) return res < 1e-11;  // no progress
        if (!std::isfinite(d[0]) || !std::isfinite(d[1]) || !std::isfinite(d[2])) return false;
    }
    return res < 1e-11;
}

}  // namespace

std::vector<std::array<Real, 3>> solve_s4_numeric(const std::array<Int, 4>& Kint, const Real& d4,
                                                  const Rat& tau0, const S4Config& cfg) {
    Real::PrecisionGuard guard(cfg.precision_bits);

    std::array<double, 4> K{};
    for (int i = 0; i < 4; ++i) K[i] = Kint[i].get_d();
    const double t0 = tau0.to_double();
    const double d4d = d4.to_double();
    std::array<double, 3> c{};
    for (int j = 1; j <= 3; ++j) c[j - 1] = std::pow(t0, j) - K[3] * std::pow(d4d, j);

    // phase 1: double-precision multi-start
    std::vector<std::array<double, 3>> coarse;
    for (int sidx = 0; sidx < cfg.newton_starts; ++sidx) {
        std::array<double, 3> d{halton(sidx + 1, 2), halton(sidx + 1, 3), halton(sidx + 1, 5)};
        if (!newton_double(K, c, d, cfg.max_iterations)) continue;
        bool dup = false;
        for (const auto& seen : coarse)
            if (std::fabs(seen[0] - d[0]) < 1e-6 && std::fabs(seen[1] - d[1]) < 1e-6 &&
                std::fabs(seen[2] - d[2]) < 1e-6)
                dup = true;
        if (!dup) coarse.push_back(d);
    }

    // phase 2: polish at working precision, keep residual <= tolerance
    Real tol(cfg.residual_tol);
    Real dedup(cfg.dedup_radius);
    std::array<Real, 3> cR;
    {
        Real t0R{Rat(tau0)};
        for (int j = 1; j <= 3; ++j) {
            Real p(1L);
            for (int e = 0; e < j; ++e) p = p * t0R;
            Real q(1L);
            for (int e = 0; e < j; ++e) q = q * d4;
            cR[j - 1] = p - Real(Kint[3]) * q;
        }
    }
    std::array<Real, 4> KR{Real(Kint[0]), Real(Kint[1]), Real(Kint[2]), Real(Kint[3])};
    auto residR = [&](const std::array<Real, 3>& x) {
        Real r(0L);
        for (int j = 1; j <= 3; ++j) {
            Real acc = -cR[j - 1];
            for (int i = 0; i < 3; ++i) {
                Real p(1L);
                for (int e = 0; e < j; ++e) p = p * x[i];
                acc += KR[i] * p;
            }
            if (acc.abs() > r) r = acc.abs();
        }
        return r;
    };

    std::vector<std::array<Real, 3>> out;
    for (const auto& start : coarse) {
        std::array<Real, 3> d{Real(start[0]), Real(start[1]), Real(start[2])};
        Real res = residR(d);
        bool ok = false;
        for (int it = 0; it < cfg.max_iterations; ++it) {
            if (res <= tol) {
                ok = true;
                break;
            }
            Matrix<Real> J(3, std::vector<Real>(3));
            std::vector<Real> F(3);
            for (int j = 1; j <= 3; ++j) {
                Real acc = -cR[j - 1];
                for (int i = 0; i < 3; ++i) {
                    Real p(1L);
                    for (int e = 0; e < j - 1; ++e) p = p * d[i];
                    J[j - 1][i] = Real(static_cast<long>(j)) * KR[i] * p;
                    acc += KR[i] * p * d[i];
                }
                F[j - 1] = acc;
            }
            std::vector<Real> step;
            try {
                step = solve_linear(J, F);
            } catch (const std::domain_error&) {
                break;
            }
            for (int i = 0; i < 3; ++i) d[i] -= step[i];
            Real nres = residR(d);
            if (!(nres < res) && nres > tol) break;  // stalled
            res = nres;
        }
        if (!ok && !(res <= tol)) continue;
        bool dup = false;
        for (const auto& seen : out) {
            bool close = true;
            for (int i = 0; i < 3; ++i)
                if ((seen[i] - d[i]).abs() > dedup) close = false;
            if (close) dup = true;
        }
        if (!dup) out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (int i = 0; i < 3; ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    });
    return out;
}

}  // namespace fewdist
