#pragma once

// Exact arbitrary-precision integers and rationals, backed by GMP.
// Rat keeps the canonical form invariant (den > 0, gcd(num, den) = 1).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fewdist {

using Int = mpz_class;

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt_floor(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    if (n >= 0 && Int(k) > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    return binomial(Int(n), static_cast<unsigned long>(k));
}

inline int64_t to_int64(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("Int does not fit in 64 bits");
    return static_cast<int64_t>(x.get_si());
}

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long x) : v_(x) {}
    Rat(const Int& x) : v_(x) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    static std::optional<Rat> parse(std::string_view text);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }
    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    Rat pow(unsigned long e) const { return Rat(int_pow(num(), e), int_pow(den(), e)); }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline std::optional<Rat> Rat::parse(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) return std::nullopt;
    std::string s(text.substr(b, e - b + 1));
    size_t slash = s.find('/');
    auto parse_int = [](std::string t) -> std::optional<Int> {
        if (t.empty()) return std::nullopt;
        if (t[0] == '+') t.erase(0, 1);  // mpz rejects a leading '+'
        size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return std::nullopt;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
        return Int(t, 10);
    };
    if (slash == std::string::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(*n, *d);
}

// Square-free decomposition m = s^2 * f with f square-free; returns {f, s}.
// Radicands here are small (products of a few bounded integers), so trial
// division is enough.
inline std::pair<Int, Int> squarefree_split(Int m) {
    if (m < 0) throw std::domain_error("squarefree_split of negative value");
    Int square_part = 1;
    for (Int p = 2; p * p <= m; ++p) {
        Int pp = p * p;
        while (m % pp == 0) {
            m /= pp;
            square_part *= p;
        }
    }
    return {m, square_part};
}

}  // namespace fewdist
