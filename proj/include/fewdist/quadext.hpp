#pragma once

// Real quadratic field elements a + b*sqrt(m), with exact total order.
//
// A single radicand per value: mixing two irrational radicands is a domain
// error. Rational values carry m = 0, so they combine with any radicand.
// Signs are decided by case analysis on a, b and the exact comparison of
// a^2 against b^2*m; no floating point is involved.

#include "fewdist/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace fewdist {

class QuadExt {
public:
    QuadExt() : a_(0), b_(0), m_(0) {}
    QuadExt(long x) : a_(x), b_(0), m_(0) {}
    QuadExt(const Rat& x) : a_(x), b_(0), m_(0) {}

    // a + b*sqrt(m); m is reduced to square-free form, perfect squares
    // collapse to plain rationals.
    QuadExt(const Rat& a, const Rat& b, const Int& m) : a_(a), b_(b), m_(m) {
        if (m < 0) throw std::domain_error("negative radicand");
        auto [f, s] = squarefree_split(m_);
        m_ = f;
        b_ = b_ * Rat(s);
        if (m_ <= 1) {  // sqrt(0)=0, sqrt(1)=1
            a_ = a_ + b_ * Rat(m_);
            b_ = 0;
            m_ = 0;
        }
        if (b_.is_zero()) m_ = 0;
    }

    static QuadExt sqrt_of(const Int& m) { return QuadExt(Rat(0), Rat(1), m); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& m() const { return m_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_integer() const { return is_rational() && a_.is_integer(); }
    const Rat& rational() const {
        if (!is_rational()) throw std::domain_error("QuadExt is irrational");
        return a_;
    }

    // Sign of a + b*sqrt(m), exact.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with b^2*m
        Rat a2 = a_ * a_, b2m = b_ * b_ * Rat(m_);
        if (a2 == b2m) return 0;
        return (a2 > b2m) ? sa : sb;
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_, m_, 0); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Int m = merged_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, m, 0);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Int m = merged_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rat(m), x.a_ * y.b_ + x.b_ * y.a_, m, 0);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("QuadExt division by zero");
        Int m = merged_radicand(x, y);
        // multiply by conjugate: 1/(a+b√m) = (a-b√m)/(a²-b²m)
        Rat denom = y.a_ * y.a_ - y.b_ * y.b_ * Rat(m);
        QuadExt conj(y.a_, -y.b_, m, 0);
        QuadExt num = x * conj;
        return QuadExt(num.a_ / denom, num.b_ / denom, m, 0);
    }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (!x.is_rational() && !y.is_rational() && x.m_ != y.m_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const;

    // "p/q", or "a+b√m" / "a-b√m" with rational a, b.
    std::string str() const {
        if (is_rational()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        Rat babs = b_.abs();
        if (!s.empty()) s += (b_.sign() < 0) ? "-" : "+";
        else if (b_.sign() < 0) s += "-";
        if (babs != Rat(1)) s += babs.str();
        s += "√" + m_.get_str();
        return s;
    }

    static std::optional<QuadExt> parse(std::string_view text);

private:
    // raw constructor: trusts that m is already square-free and consistent
    QuadExt(Rat a, Rat b, Int m, int) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
        if (b_.is_zero()) m_ = 0;
    }

    static Int merged_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.is_rational()) return y.m_;
        if (y.is_rational()) return x.m_;
        if (x.m_ != y.m_) throw std::domain_error("mixed quadratic radicands");
        return x.m_;
    }

    Rat a_, b_;
    Int m_;
};

inline double QuadExt::to_double() const {
    double r = a_.to_double();
    if (!b_.is_zero()) {
        mpf_class mf(m_, 128);
        mpf_class s;
        mpf_sqrt(s.get_mpf_t(), mf.get_mpf_t());
        r += b_.to_double() * s.get_d();
    }
    return r;
}

inline std::optional<QuadExt> QuadExt::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    // accept "√" (UTF-8) or "sqrt" as the radical marker
    size_t rad = s.find("√");
    size_t radlen = 3;
    if (rad == std::string::npos) {
        rad = s.find("sqrt");
        radlen = 4;
    }
    if (rad == std::string::npos) {
        auto r = Rat::parse(s);
        if (!r) return std::nullopt;
        return QuadExt(*r);
    }
    auto mm = Rat::parse(s.substr(rad + radlen));
    if (!mm || !mm->is_integer() || mm->sign() < 0) return std::nullopt;
    // split "a+b" / "a-b" / "b" / "" before the radical
    std::string head = s.substr(0, rad);
    Rat a(0), b(1);
    // find the +/- separating a from b (not a leading sign)
    size_t split = std::string::npos;
    for (size_t i = 1; i < head.size(); ++i) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-')
            split = i;
    }
    std::string bs;
    if (split == std::string::npos) {
        bs = head;
    } else {
        auto ar = Rat::parse(head.substr(0, split));
        if (!ar) return std::nullopt;
        a = *ar;
        bs = head.substr(split);
    }
    if (bs.empty() || bs == "+") b = Rat(1);
    else if (bs == "-") b = Rat(-1);
    else {
        auto br = Rat::parse(bs);
        if (!br) return std::nullopt;
        b = *br;
    }
    return QuadExt(a, b, mm->num());
}

}  // namespace fewdist
