#pragma once

#include <gmp.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "minadet/int.hpp"

namespace minadet {

// Exact rational number. Always stored normalized: positive denominator,
// gcd(|num|, den) = 1, zero as 0/1. Structural equality of the stored form
// therefore coincides with mathematical equality.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("division by zero");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::domain_error("division by zero");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rat(const Int& num) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
    }
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // Parses "p", "-p" or "p/q". Normalizes; rejects q = 0 and junk.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den.is_zero()) throw std::domain_error("division by zero");
        return Rat(num, den);
    }

    Int num() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Int den() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rat operator-() const {
        Rat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rat& operator+=(const Rat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        Rat r;
        mpq_inv(r.q_, q_);
        return r;
    }

    // Integer power; negative exponents require a nonzero base. 0^0 = 1.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        bool inv = e < 0;
        unsigned long mag = inv ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
        if (inv && is_zero()) throw std::domain_error("division by zero");
        Rat r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), mag);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), mag);
        if (inv) mpq_inv(r.q_, r.q_);
        return r;
    }

    Rat abs() const {
        Rat r;
        mpq_abs(r.q_, q_);
        return r;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    // The value as a nonnegative machine integer, when it is one.
    std::optional<long> as_nonneg_int() const {
        if (mpz_cmp_ui(mpq_denref(q_), 1) != 0) return std::nullopt;
        if (mpq_sgn(q_) < 0) return std::nullopt;
        if (!mpz_fits_slong_p(mpq_numref(q_))) return std::nullopt;
        return mpz_get_si(mpq_numref(q_));
    }
    std::optional<long> as_int() const {
        if (mpz_cmp_ui(mpq_denref(q_), 1) != 0) return std::nullopt;
        if (!mpz_fits_slong_p(mpq_numref(q_))) return std::nullopt;
        return mpz_get_si(mpq_numref(q_));
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }

    // "p/q", or just "p" for integers.
    std::string str() const {
        std::string s = num().str();
        if (mpz_cmp_ui(mpq_denref(q_), 1) != 0) s += "/" + den().str();
        return s;
    }

    size_t bit_length() const { return std::max(num().bit_length(), den().bit_length()); }

private:
    mpq_t q_;
};

inline Rat rat_make(const Int& num, const Int& den) { return Rat(num, den); }

}  // namespace minadet
