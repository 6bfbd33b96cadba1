#pragma once

// Dense univariate polynomials over an exact scalar ring.
// Used as the "x" argument of the zonal recurrences, so that coefficient
// extraction and pointwise evaluation share one code path.

#include "fewdist/rational.hpp"

#include <vector>

namespace fewdist {

template <class T>
class Poly {
public:
    Poly() : c_{} {}
    Poly(long v) : c_{T(v)} { trim(); }
    Poly(const T& v) : c_{v} { trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator/(const Poly& p, const T& d) {
        std::vector<T> r(p.c_.size());
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i] / d;
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

    T eval(const T& x) const {
        T r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<T> c_;
};

}  // namespace fewdist
