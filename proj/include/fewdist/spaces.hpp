#pragma once

// The three two-point-homogeneous spaces: binary Hamming H(n,2), binary
// Johnson J(n,w), and the unit sphere S^{n-1} (n = ambient dimension).
//
// Conventions:
//   - tau is Hamming distance / half symmetric difference / inner product,
//     so the self-distance tau0 is 0, 0, 1 respectively.
//   - Phi_k is Krawtchouk / Hahn / Gegenbauer-normalized, with Phi_k(tau0)=1.
//   - h_k are the harmonic multiplicities; for Hamming we use the integer
//     eigenspace dimension C(n,k).
//
// zonal_row evaluates Phi_0..Phi_k in one pass over any ring R that has
// constructors from long and Rat plus +,-,*. Instantiating R = Poly<Rat>
// yields monomial coefficients from the identical code path.

#include "fewdist/poly.hpp"
#include "fewdist/quadext.hpp"
#include "fewdist/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fewdist {

enum class SpaceKind { hamming, johnson, sphere };

struct Space {
    SpaceKind kind;
    int n = 0;
    int w = 0;  // Johnson only

    static Space hamming(int n);
    static Space johnson(int n, int w);
    static Space sphere(int n);  // ambient dimension, i.e. S^{n-1}

    Rat tau0() const { return kind == SpaceKind::sphere ? Rat(1) : Rat(0); }
    bool finite() const { return kind != SpaceKind::sphere; }

    // h_k; Johnson requires k <= w
    Int multiplicity(int k) const;

    // largest harmonic degree for finite spaces (n resp. w); -1 means unbounded
    int max_degree() const {
        if (kind == SpaceKind::hamming) return n;
        if (kind == SpaceKind::johnson) return w;
        return -1;
    }
    int cap_degree(int k) const {
        int md = max_degree();
        return md < 0 ? k : std::min(k, md);
    }

    // distance domain (excluding tau0): integers 1..n / 1..w, or [-1, 1)
    bool integer_domain() const { return finite(); }
    long domain_max() const { return kind == SpaceKind::hamming ? n : w; }

    struct DistanceDomain {
        bool integers;        // true: {lo..hi}; false: [lo, hi) real interval
        Rat lo, hi;
        std::string str() const {
            if (integers) return "{" + lo.str() + ".." + hi.str() + "}";
            return "[" + lo.str() + ", " + hi.str() + ")";
        }
    };
    DistanceDomain distance_domain() const {
        if (finite()) return {true, Rat(1), Rat(domain_max())};
        return {false, Rat(-1), Rat(1)};
    }

    template <class T>
    bool distance_in_domain(const T& d) const;

    std::string str() const;
    static std::optional<Space> parse(std::string_view text);

    friend bool operator==(const Space& a, const Space& b) {
        return a.kind == b.kind && a.n == b.n && a.w == b.w;
    }
};

namespace detail {

// C(x, j) as the falling-factorial polynomial, rowwise: out[j] = C(x, j)
template <class R>
std::vector<R> binomial_row(const R& x, int jmax) {
    std::vector<R> row;
    row.reserve(jmax + 1);
    row.push_back(R(1));
    for (int j = 1; j <= jmax; ++j)
        row.push_back(row.back() * (x - R(j - 1)) * R(Rat(1, j)));
    return row;
}

}  // namespace detail

template <class R>
std::vector<R> zonal_row(const Space& sp, int kmax, const R& x) {
    std::vector<R> phi;
    phi.reserve(kmax + 1);
    switch (sp.kind) {
        case SpaceKind::sphere: {
            // x G_k = lam_{k+1} G_{k+1} + (1 - lam_{k-1}) G_{k-1},
            // lam_k = k/(n+2k-2), lam_0 = 0, G_0 = 1, G_1 = n x
            const int n = sp.n;
            std::vector<R> G;
            G.reserve(kmax + 1);
            G.push_back(R(1));
            if (kmax >= 1) G.push_back(R(Rat(n)) * x);
            for (int k = 1; k < kmax; ++k) {
                Rat lam_next(k + 1, n + 2 * (k + 1) - 2);
                Rat lam_prev = (k - 1 == 0) ? Rat(0) : Rat(k - 1, n + 2 * (k - 1) - 2);
                R next = (x * G[k] - R(Rat(1) - lam_prev) * G[k - 1]) * R(Rat(1) / lam_next);
                G.push_back(std::move(next));
            }
            for (int k = 0; k <= kmax; ++k)
                phi.push_back(G[k] * R(Rat(Int(1), sp.multiplicity(k))));
            break;
        }
        case SpaceKind::hamming: {
            const int n = sp.n;
            if (kmax > n) throw std::domain_error("Hamming zonal degree exceeds n");
            auto cx = detail::binomial_row(x, kmax);
            auto cnx = detail::binomial_row(R(Rat(n)) - x, kmax);
            for (int k = 0; k <= kmax; ++k) {
                R acc(0);
                for (int j = 0; j <= k; ++j) {
                    R term = cx[j] * cnx[k - j];
                    acc = (j % 2 == 0) ? acc + term : acc - term;
                }
                phi.push_back(acc * R(Rat(1) / Rat(binomial(Int(n), k))));
            }
            break;
        }
        case SpaceKind::johnson: {
            const int n = sp.n, w = sp.w;
            if (kmax > w) throw std::domain_error("Johnson zonal degree exceeds w");
            auto cx = detail::binomial_row(x, kmax);
            for (int k = 0; k <= kmax; ++k) {
                R acc(0);
                for (int j = 0; j <= k; ++j) {
                    Rat c(binomial(Int(k), j) * binomial(Int(n + 1 - k), j),
                          binomial(Int(w), j) * binomial(Int(n - w), j));
                    if (j % 2) c = -c;
                    acc = acc + cx[j] * R(c);
                }
                phi.push_back(acc);
            }
            break;
        }
    }
    return phi;
}

// Phi_k(x) with domain checking for scalar inputs (closed domain incl. tau0).
template <class T>
T zonal(const Space& sp, int k, const T& x) {
    if (k < 0) throw std::domain_error("zonal: negative degree");
    if (!(sp.distance_in_domain(x) || x == T(sp.tau0())))
        throw std::domain_error("zonal: point outside distance domain");
    return zonal_row(sp, k, x)[k];
}

// Monomial coefficients of Phi_k: length k+1, nonzero leading coefficient.
inline std::vector<Rat> zonal_monomial_coeffs(const Space& sp, int k) {
    if (k < 0) throw std::domain_error("zonal_monomial_coeffs: negative degree");
    Poly<Rat> p = zonal_row(sp, k, Poly<Rat>::x())[k];
    std::vector<Rat> c = p.coeffs();
    c.resize(k + 1, Rat(0));
    return c;
}

template <class T>
bool Space::distance_in_domain(const T& d) const {
    if (kind == SpaceKind::sphere) return T(Rat(-1)) <= d && d < T(Rat(1));
    // integer in [1, n] resp. [1, w]
    return d.is_integer() && T(Rat(1)) <= d && d <= T(Rat(domain_max()));
}

// A space plus s strictly increasing distances, none equal to tau0.
template <class T>
struct DistanceSet {
    Space space;
    std::vector<T> d;

    DistanceSet(Space sp, std::vector<T> dist) : space(sp), d(std::move(dist)) { validate(); }

    int s() const { return static_cast<int>(d.size()); }

    void validate() const {
        if (d.empty()) throw std::invalid_argument("distance set must be nonempty");
        for (size_t i = 0; i < d.size(); ++i) {
            if (!space.distance_in_domain(d[i]))
                throw std::invalid_argument("distance outside the space's domain");
            if (i > 0 && !(d[i - 1] < d[i]))
                throw std::invalid_argument("distances must be strictly increasing");
        }
    }
};

}  // namespace fewdist
