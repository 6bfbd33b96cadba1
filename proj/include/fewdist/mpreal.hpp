#pragma once

// Minimal RAII wrapper around MPFR for the high-precision floating paths
// (sphere s=4 root finding and float-certified bounds). Precision is taken
// from a thread-local working precision; results round to nearest.

#include "fewdist/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace fewdist {

class Real {
public:
    static mpfr_prec_t& working_precision() {
        thread_local mpfr_prec_t prec = 256;
        return prec;
    }

    struct PrecisionGuard {
        explicit PrecisionGuard(mpfr_prec_t p) : saved(working_precision()) {
            working_precision() = p;
        }
        ~PrecisionGuard() { working_precision() = saved; }
        mpfr_prec_t saved;
    };

    Real() { mpfr_init2(v_, working_precision()); mpfr_set_zero(v_, 1); }
    Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x) : Real(static_cast<long>(x)) {}
    Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit Real(const Rat& q) : Real() { mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN); }
    explicit Real(const Int& z) : Real() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    Real operator-() const {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    Real abs() const {
        Real r(*this);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const {
        Real r(*this);
        mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // exact: every finite mpfr value is a dyadic rational
    Rat to_rat_exact() const {
        if (is_zero()) return Rat(0);
        Int mant;
        mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
        Rat r(mant);
        if (e >= 0) return r * Rat(int_pow(Int(2), static_cast<unsigned long>(e)));
        return r / Rat(int_pow(Int(2), static_cast<unsigned long>(-e)));
    }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    static Real pow2(long e) {  // 2^e
        Real r(1L);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static Real binop(const Real& a, const Real& b,
                      int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        Real r;
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

}  // namespace fewdist
