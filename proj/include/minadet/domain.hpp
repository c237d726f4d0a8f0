#pragma once

#include <optional>
#include <string>

#include "minadet/int.hpp"
#include "minadet/poly.hpp"
#include "minadet/rat.hpp"

namespace minadet {

// The coefficient-domain contract the series and matrix code is generic
// over: exact ring arithmetic plus exact division by a nonzero rational
// scalar, exact in-domain division where divisibility is guaranteed
// (Bareiss pivots), and embeddings of machine/rational constants.
//
// Int satisfies the matrix part of the contract only; series coefficients
// need rational scalars (Rat and Poly).
template <typename T>
struct domain;

template <>
struct domain<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static Int from_int(long v) { return Int(v); }
    static Int from_rat(const Rat& r) {
        if (!r.den().is_one()) throw std::domain_error("not an integer");
        return r.num();
    }
    static bool is_zero(const Int& a) { return a.is_zero(); }
    static bool is_one(const Int& a) { return a.is_one(); }
    static Int divexact(const Int& a, const Int& b) { return a.divexact(b); }
    static std::string str(const Int& a) { return a.str(); }
    static size_t bit_length(const Int& a) { return a.bit_length(); }
};

template <>
struct domain<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    static Rat from_rat(const Rat& r) { return r; }
    static bool is_zero(const Rat& a) { return a.is_zero(); }
    static bool is_one(const Rat& a) { return a.is_one(); }
    static Rat divexact(const Rat& a, const Rat& b) { return a / b; }
    static Rat mul_rat(const Rat& a, const Rat& s) { return a * s; }
    static Rat div_rat(const Rat& a, const Rat& s) { return a / s; }
    static std::optional<long> as_nonneg_int(const Rat& a) { return a.as_nonneg_int(); }
    static std::string str(const Rat& a) { return a.str(); }
    static size_t bit_length(const Rat& a) { return a.bit_length(); }
};

template <>
struct domain<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly::one(); }
    static Poly from_int(long v) { return Poly(Rat(v)); }
    static Poly from_rat(const Rat& r) { return Poly(r); }
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static bool is_one(const Poly& a) { return a.is_one(); }
    static Poly divexact(const Poly& a, const Poly& b) { return a.divexact(b); }
    static Poly mul_rat(const Poly& a, const Rat& s) { return a.scaled(s); }
    static Poly div_rat(const Poly& a, const Rat& s) { return a.div_rat(s); }
    static std::optional<long> as_nonneg_int(const Poly& a) {
        if (auto c = a.as_constant()) return c->as_nonneg_int();
        return std::nullopt;
    }
    static std::string str(const Poly& a) { return a.str(); }
    static size_t bit_length(const Poly& a) { return a.bit_length(); }
};

}  // namespace minadet
