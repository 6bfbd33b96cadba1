#pragma once

// Outward-rounded interval arithmetic over MPFR, for re-verifying LP
// certificates at floating distance sets. Every endpoint operation uses
// directed rounding (RNDD for lower, RNDU for upper), so the interval
// always encloses the exact result.

#include "fewdist/mpreal.hpp"
#include "fewdist/rational.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace fewdist {

class Interval {
public:
    Interval() : lo_(), hi_() {}
    Interval(long x) : lo_(x), hi_(x) {}
    explicit Interval(const Rat& q) {
        mpfr_set_q(lo_.raw(), q.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_.raw(), q.raw().get_mpq_t(), MPFR_RNDU);
    }
    Interval(const Real& lo, const Real& hi) : lo_(lo), hi_(hi) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }
    static Interval point(const Real& x) { return Interval(x, x); }
    static Interval pad(const Real& center, const Real& radius) {
        Interval r;
        mpfr_sub(r.lo_.raw(), center.raw(), radius.raw(), MPFR_RNDD);
        mpfr_add(r.hi_.raw(), center.raw(), radius.raw(), MPFR_RNDU);
        return r;
    }

    const Real& lower() const { return lo_; }
    const Real& upper() const { return hi_; }
    bool is_zero() const { return lo_.is_zero() && hi_.is_zero(); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r;
        mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
        mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        // min/max of the four endpoint products under both roundings
        Interval r;
        bool first = true;
        mpfr_t t;
        mpfr_init2(t, Real::working_precision());
        for (const Real* x : {&a.lo_, &a.hi_}) {
            for (const Real* y : {&b.lo_, &b.hi_}) {
                mpfr_mul(t, x->raw(), y->raw(), MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_.raw()) < 0) mpfr_set(r.lo_.raw(), t, MPFR_RNDD);
                mpfr_mul(t, x->raw(), y->raw(), MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t, MPFR_RNDU);
                first = false;
            }
        }
        mpfr_clear(t);
        return r;
    }
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool upper_at_most(const Rat& c) const {
        Real cR;
        mpfr_set_q(cR.raw(), c.raw().get_mpq_t(), MPFR_RNDD);
        return hi_ <= cR;
    }

private:
    Real lo_, hi_;
};

}  // namespace fewdist
