#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace minadet {

// Arbitrary-precision signed integer, a value-semantic wrapper over GMP's
// mpz_t. Zero always has the unique GMP representation; arithmetic is exact
// at any operand size.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("invalid integer literal: \"" + s + "\"");
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Division that must leave no remainder; the Bareiss interior divisions
    // rely on this. Throws if b is zero or does not divide a.
    Int divexact(const Int& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero");
        Int q, r;
        mpz_tdiv_qr(q.z_, r.z_, z_, b.z_);
        if (!r.is_zero()) throw std::domain_error("inexact integer division");
        return q;
    }

    Int pow(unsigned long e) const {
        Int r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }
    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return b < a; }
    friend bool operator>=(const Int& a, const Int& b) { return b <= a; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("integer does not fit a machine long");
        return mpz_get_si(z_);
    }

    std::string str() const {
        char* raw = mpz_get_str(nullptr, 10, z_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }

    friend Int gcd(const Int& a, const Int& b) {
        Int r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    mpz_t z_;
};

}  // namespace minadet
