#include "fewdist/search.hpp"

#include <algorithm>
#include <thread>

namespace fewdist {

namespace {

int effective_width(const SearchConfig& cfg) {
    if (cfg.parallel_width > 0) return cfg.parallel_width;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// candidate ordering for deterministic argmax: larger combined bound first,
// then smaller harmonic bound (prefers the tighter certificate), then
// lexicographically smaller distance vector
struct BestSlot {
    bool used = false;
    Int combined = 0;
    Int harmonic = 0;
    std::vector<Rat> dkey;  // numeric sort key for the distances
    Candidate cand;

    bool beats(const BestSlot& o) const {
        if (!used) return false;
        if (!o.used) return true;
        if (combined != o.combined) return combined > o.combined;
        if (harmonic != o.harmonic) return harmonic < o.harmonic;
        return std::lexicographical_compare(dkey.begin(), dkey.end(), o.dkey.begin(),
                                            o.dkey.end());
    }
};

Rat sort_key(const Rat& x) { return x; }
Rat sort_key(const QuadExt& x) {
    if (x.is_rational()) return x.rational();
    // dyadic key at 128 bits; distinct candidate values in these searches are
    // separated far above 2^-120, so order is preserved
    Real::PrecisionGuard guard(128);
    Real a{x.a()};
    Real root{Rat(x.m())};
    return (a + Real(x.b()) * root.sqrt()).to_rat_exact();
}

template <class T>
void offer(BestSlot& slot, const DistanceSet<T>& D, const std::vector<Int>& K,
           const BoundReport& report) {
    BestSlot next;
    next.used = true;
    next.combined = report.combined;
    next.harmonic = report.harmonic;
    for (const auto& d : D.d) next.dkey.push_back(sort_key(d));
    next.cand.distances = report.distances;
    next.cand.k = K;
    next.cand.report = report;
    if (next.beats(slot)) slot = std::move(next);
}

// static partition of [0, items) into `width` chunks, run in threads, merge
// results in chunk order so output is width-independent
template <class Fn>
void parallel_items(size_t items, int width, Fn&& run_item_range) {
    width = std::max(1, std::min<int>(width, static_cast<int>(items ? items : 1)));
    if (width == 1) {
        run_item_range(0, items, 0);
        return;
    }
    std::vector<std::thread> threads;
    size_t chunk = (items + width - 1) / width;
    for (int t = 0; t < width; ++t) {
        size_t lo = t * chunk, hi = std::min(items, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi, t] { run_item_range(lo, hi, t); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace

json Candidate::to_json() const {
    json j;
    j["distances"] = distances;
    std::vector<int64_t> kk;
    for (const auto& v : k) kk.push_back(to_int64(v));
    j["K"] = kk;
    j["harmonic"] = to_int64(report.harmonic);
    if (report.lp_ok) j["lp"] = to_int64(report.lp);
    j["combined"] = to_int64(report.combined);
    j["certificate"] = report.certificate_json();
    return j;
}

json SearchResult::to_json() const {
    json j;
    j["space"] = space.str();
    j["s"] = s;
    j["upper_bound"] = to_int64(upper_bound);
    j["fallback"] = to_int64(fallback);
    if (best) j["best_candidate"] = best->to_json();
    j["examined"] = examined;
    j["rigor"] = rigor == SearchResult::Rigor::exact ? "exact" : "grid-numeric";
    json cfg;
    cfg["grid_steps"] = grid_steps_used;
    cfg["lp_m"] = lp_m_used;
    j["config"] = cfg;
    return j;
}

SearchResult search_finite(const Space& sp, int s, const SearchConfig& cfg) {
    if (!sp.finite()) throw std::invalid_argument("search_finite needs a Hamming/Johnson space");
    const long dmax = sp.domain_max();
    if (s < 2 || s > dmax) throw std::invalid_argument("search_finite: s out of range");

    const Int N = n_of(sp, s);
    const Int fallback = 2 * N - 1;
    const BoundConfig bcfg = cfg.bound_config(s, sp);

    // all s-subsets of {1..dmax}, in lexicographic order
    std::vector<std::vector<long>> subsets;
    std::vector<long> cur(s);
    for (int i = 0; i < s; ++i) cur[i] = i + 1;
    for (;;) {
        subsets.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[i] == dmax - (s - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }

    struct ChunkOut {
        BestSlot best_adm;
        Int max_inadmissible = 0;
        uint64_t examined = 0;
    };
    const int width = effective_width(cfg);
    std::vector<ChunkOut> outs(std::max(1, width));

    parallel_items(subsets.size(), width, [&](size_t lo, size_t hi, int slot) {
        ChunkOut& out = outs[slot];
        for (size_t idx = lo; idx < hi; ++idx) {
            std::vector<Rat> dv;
            for (long v : subsets[idx]) dv.push_back(Rat(v));
            DistanceSet<Rat> D(sp, dv);
            auto kv = k_vector(D);
            bool admissible = kv.all_integer && kv.within_ceiling;
            BoundReport rep = combined_bound(D, bcfg);
            ++out.examined;
            if (admissible) {
                std::vector<Int> K;
                for (const auto& k : kv.values) K.push_back(k_to_int(k));
                offer(out.best_adm, D, K, rep);
            } else {
                out.max_inadmissible = std::max(out.max_inadmissible, rep.combined);
            }
        }
    });

    BestSlot best;
    Int max_inadmissible = 0;
    uint64_t examined = 0;
    for (const auto& o : outs) {
        if (o.best_adm.beats(best)) best = o.best_adm;
        max_inadmissible = std::max(max_inadmissible, o.max_inadmissible);
        examined += o.examined;
    }

    SearchResult res;
    res.space = sp;
    res.s = s;
    res.fallback = fallback;
    res.examined = examined;
    res.rigor = SearchResult::Rigor::exact;
    res.lp_m_used = bcfg.effective_m(s, sp);
    // admissible candidates carry B(D); inadmissible ones imply |X| <= 2N-1,
    // so they contribute min(B(D), 2N-1)
    Int bound = best.used ? best.combined : Int(0);
    bound = std::max(bound, std::min(fallback, max_inadmissible));
    res.upper_bound = bound;
    if (best.used) res.best = best.cand;
    return res;
}

namespace {

struct S3Item {
    Int k1, k2, k3;
};

}  // namespace

SearchResult search_sphere_s3(int n, const SearchConfig& cfg) {
    if (n < 3) throw std::invalid_argument("search_sphere_s3 needs ambient n >= 3");
    const Space sp = Space::sphere(n);
    const int s = 3;
    const Int N = n_of(sp, s);
    const Int fallback = 2 * N - 1;
    const Int ceiling = lrs_ceiling(N);
    const long grid = cfg.grid_steps > 0 ? cfg.grid_steps : 2000;
    if (grid < 2) throw std::invalid_argument("grid_steps must be >= 2");
    const BoundConfig bcfg = cfg.bound_config(s, sp);
    const Rat tau0 = sp.tau0();
    const long cl = to_int64(ceiling);

    // ordered (K1, K2) with K3 = 1 - K1 - K2: the principal branch of the
    // closed form applied to both orderings covers both root pairs
    std::vector<S3Item> items;
    for (long a = -cl; a <= cl; ++a) {
        if (a == 0) continue;
        for (long b = -cl; b <= cl; ++b) {
            if (b == 0) continue;
            long c = 1 - a - b;
            if (c == 0 || std::abs(c) > cl) continue;
            if (a + b == 0 && a < 0) continue;  // symmetric duplicate of (|a|, -|a|)
            Int R = Int(-a) * Int(b) * Int(c);
            if (R < 0) continue;
            items.push_back({Int(a), Int(b), Int(c)});
        }
    }

    struct ChunkOut {
        BestSlot best;
        uint64_t examined = 0;
    };
    const int width = effective_width(cfg);
    std::vector<ChunkOut> outs(std::max(1, width));

    parallel_items(items.size(), width, [&](size_t lo, size_t hi, int slot) {
        ChunkOut& out = outs[slot];
        Int local_best = fallback;  // harmonic prune threshold
        for (size_t idx = lo; idx < hi; ++idx) {
            const S3Item& it = items[idx];
            for (long t = 1; t < grid; ++t) {
                Rat d3(t, grid);
                QuadExt r1, r2;
                try {
                    if (it.k1 + it.k2 == 0) {
                        auto pr = solve_s3_k1k2_opposite(it.k1, d3, it.k3, tau0);
                        r1 = QuadExt(pr.first);
                        r2 = QuadExt(pr.second);
                    } else {
                        std::tie(r1, r2) = solve_s3({it.k1, it.k2, it.k3}, d3, tau0);
                    }
                } catch (const std::domain_error&) {
                    continue;
                }
                QuadExt d3q{d3};
                if (!(QuadExt(Rat(-1)) <= r1 && r1 < r2 && r2 < d3q)) continue;
                DistanceSet<QuadExt> D(sp, {r1, r2, d3q});
                // admissibility re-check: the K vector must come back exactly
                auto kv = k_vector(D);
                if (!kv.all_integer || !kv.within_ceiling) continue;
                std::vector<Int> K;
                for (const auto& k : kv.values) K.push_back(k_to_int(k));
                ++out.examined;

                auto [hb, hexp] = harmonic_bound(D);
                if (hb < local_best && !cfg.emit_all_candidates) continue;  // B <= H
                BoundReport rep = combined_bound(D, bcfg);
                if (rep.combined > local_best) local_best = rep.combined;
                offer(out.best, D, K, rep);
            }
        }
    });

    BestSlot best;
    uint64_t examined = 0;
    for (const auto& o : outs) {
        if (o.best.beats(best)) best = o.best;
        examined += o.examined;
    }

    SearchResult res;
    res.space = sp;
    res.s = s;
    res.fallback = fallback;
    res.examined = examined;
    res.rigor = SearchResult::Rigor::grid_numeric;
    res.grid_steps_used = grid;
    res.lp_m_used = bcfg.effective_m(s, sp);
    res.upper_bound = std::max(fallback, best.used ? best.combined : Int(0));
    if (best.used) res.best = best.cand;
    return res;
}

namespace {

struct S4Item {
    std::array<Int, 4> k;
};

// shared inner loop for the full s=4 search and the single-K restriction
struct S4Sweep {
    Space sp;
    long grid;
    SearchConfig cfg;
    BoundConfig bcfg;

    // evaluates one K tuple over the whole d4 grid
    void run(const S4Item& item, BestSlot& best, uint64_t& examined, Int& local_best) const {
        S4Config scfg;
        scfg.precision_bits = cfg.precision_bits;
        scfg.newton_starts = cfg.newton_starts;
        scfg.residual_tol = cfg.residual_tol;
        scfg.dedup_radius = cfg.dedup_radius;
        Real::PrecisionGuard guard(cfg.precision_bits);
        const Rat tau0 = sp.tau0();
        Real sep(cfg.dedup_radius);  // distances closer than this count as equal

        for (long t = 1; t < grid; ++t) {
            Rat d4q(t, grid);
            Real d4{d4q};
            auto roots = solve_s4_numeric(item.k, d4, tau0, scfg);
            for (const auto& root : roots) {
                // sort the three unknowns, carrying their K slots
                std::array<std::pair<Real, Int>, 3> trip{
                    std::make_pair(root[0], item.k[0]), std::make_pair(root[1], item.k[1]),
                    std::make_pair(root[2], item.k[2])};
                std::sort(trip.begin(), trip.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                // strict ordering with margin, inside [-1, d4)
                if (!(trip[0].first >= Real(-1L) - sep)) continue;
                bool ordered = true;
                Real prev = trip[0].first;
                for (int i = 1; i < 3; ++i) {
                    if (!(trip[i].first - prev > sep)) ordered = false;
                    prev = trip[i].first;
                }
                if (!ordered || !(Real(d4q) - trip[2].first > sep)) continue;

                ++examined;
                std::vector<Int> K{trip[0].second, trip[1].second, trip[2].second,
                                   item.k[3]};

                // exact upgrade: all three roots reconstruct as small rationals
                // whose K vector matches exactly
                bool exact_done = false;
                {
                    std::vector<Rat> dv;
                    bool ok = true;
                    for (int i = 0; i < 3 && ok; ++i) {
                        auto q = reconstruct_rational(trip[i].first);
                        if (!q) ok = false;
                        else dv.push_back(*q);
                    }
                    if (ok) {
                        dv.push_back(d4q);
                        ok = dv[0] >= Rat(-1) && dv[3] < Rat(1);
                        for (int i = 1; i < 4 && ok; ++i) ok = dv[i - 1] < dv[i];
                        if (ok) {
                            DistanceSet<Rat> D(sp, dv);
                            auto kv = k_vector(D);
                            bool match = kv.all_integer;
                            for (int i = 0; i < 4 && match; ++i)
                                match = k_to_int(kv.values[i]) == K[i];
                            if (match && kv.within_ceiling) {
                                auto [hb, hexp] = harmonic_bound(D);
                                if (hb >= local_best || cfg.emit_all_candidates) {
                                    BoundReport rep = combined_bound(D, bcfg);
                                    if (rep.combined > local_best) local_best = rep.combined;
                                    offer(best, D, K, rep);
                                }
                                exact_done = true;
                            }
                        }
                    }
                }
                if (exact_done) continue;

                // float-certified path; the LP is skipped when the harmonic
                // bound already caps the candidate below the running best
                std::vector<Real> dv{trip[0].first, trip[1].first, trip[2].first, Real(d4q)};
                if (dv[0] < Real(-1L)) continue;  // outside the domain
                std::optional<Int> skip;
                if (!cfg.emit_all_candidates) skip = local_best;
                BoundReport rep = combined_bound_float(sp, dv, bcfg, skip);
                if (!rep.lp_ok && rep.combined < local_best) continue;  // pruned
                if (rep.combined > local_best) local_best = rep.combined;
                BestSlot nextslot;
                nextslot.used = true;
                nextslot.combined = rep.combined;
                nextslot.harmonic = rep.harmonic;
                for (const auto& x : dv)
                    nextslot.dkey.push_back(x.to_rat_exact());
                nextslot.cand.distances = rep.distances;
                nextslot.cand.k = K;
                nextslot.cand.report = rep;
                if (nextslot.beats(best)) best = std::move(nextslot);
            }
        }
    }

    // continued-fraction rational reconstruction with small denominator
    static std::optional<Rat> reconstruct_rational(const Real& x) {
        const Int den_cap = 1000000;
        Rat target = x.to_rat_exact();
        Int p0 = 1, q0 = 0;
        Int p1 = target.floor(), q1 = 1;
        Rat frac = target - Rat(p1);
        Rat approx_err(Int(1), int_pow(Int(10), 24));
        for (int iter = 0; iter < 64; ++iter) {
            Rat cand(p1, q1);
            if ((cand - target).abs() <= approx_err) return cand;
            if (frac.is_zero()) break;
            Rat inv = Rat(1) / frac;
            Int a = inv.floor();
            frac = inv - Rat(a);
            Int p2 = a * p1 + p0;
            Int q2 = a * q1 + q0;
            if (q2 > den_cap) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        }
        return std::nullopt;
    }
};

}  // namespace

SearchResult search_sphere_s4(int n, const SearchConfig& cfg) {
    if (n < 4) throw std::invalid_argument("search_sphere_s4 needs ambient n >= 4");
    const Space sp = Space::sphere(n);
    const int s = 4;
    const Int N = n_of(sp, s);
    const Int fallback = 2 * N - 1;
    const Int ceiling = lrs_ceiling(N);
    const long grid = cfg.grid_steps > 0 ? cfg.grid_steps : 400;
    const long cl = to_int64(ceiling);

    // multisets for the three symmetric unknown slots; K4 rides the grid
    std::vector<S4Item> items;
    for (long a = -cl; a <= cl; ++a) {
        if (a == 0) continue;
        for (long b = a; b <= cl; ++b) {
            if (b == 0) continue;
            for (long c = b; c <= cl; ++c) {
                if (c == 0) continue;
                long d = 1 - a - b - c;
                if (d == 0 || std::abs(d) > cl) continue;
                items.push_back({{Int(a), Int(b), Int(c), Int(d)}});
            }
        }
    }

    S4Sweep sweep{sp, grid, cfg, cfg.bound_config(s, sp)};

    struct ChunkOut {
        BestSlot best;
        uint64_t examined = 0;
    };
    const int width = effective_width(cfg);
    std::vector<ChunkOut> outs(std::max(1, width));
    parallel_items(items.size(), width, [&](size_t lo, size_t hi, int slot) {
        ChunkOut& out = outs[slot];
        Int local_best = fallback;
        for (size_t idx = lo; idx < hi; ++idx)
            sweep.run(items[idx], out.best, out.examined, local_best);
    });

    BestSlot best;
    uint64_t examined = 0;
    for (const auto& o : outs) {
        if (o.best.beats(best)) best = o.best;
        examined += o.examined;
    }

    SearchResult res;
    res.space = sp;
    res.s = s;
    res.fallback = fallback;
    res.examined = examined;
    res.rigor = SearchResult::Rigor::grid_numeric;
    res.grid_steps_used = grid;
    res.lp_m_used = sweep.bcfg.effective_m(s, sp);
    res.upper_bound = std::max(fallback, best.used ? best.combined : Int(0));
    if (best.used) res.best = best.cand;
    return res;
}

Int s4_ktuple_max(int n, const std::array<Int, 4>& K, const SearchConfig& cfg) {
    const Space sp = Space::sphere(n);
    const long grid = cfg.grid_steps > 0 ? cfg.grid_steps : 400;
    S4Sweep sweep{sp, grid, cfg, cfg.bound_config(4, sp)};
    BestSlot best;
    uint64_t examined = 0;
    Int local_best = 0;
    sweep.run({K}, best, examined, local_best);
    return best.used ? best.combined : Int(0);
}

}  // namespace fewdist
