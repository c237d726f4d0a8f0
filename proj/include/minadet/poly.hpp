#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minadet/rat.hpp"

namespace minadet {

// Dense univariate polynomial with Rat coefficients, canonical form: no
// trailing zero coefficients are ever stored. The zero polynomial has an
// empty coefficient vector and degree() == kZeroDegree, the "minus infinity"
// marker. The indeterminate is nameless; str() picks the display variable.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(const Rat& c0) {
        if (!c0.is_zero()) c_.push_back(c0);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }

    // kZeroDegree for the zero polynomial, else the index of the highest
    // nonzero coefficient.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
        return c_[k];
    }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    // The constant value when degree <= 0.
    std::optional<Rat> as_constant() const {
        if (c_.empty()) return Rat(0);
        if (c_.size() == 1) return c_[0];
        return std::nullopt;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rat> r;
        r.reserve(c_.size());
        for (const Rat& c : c_) r.push_back(-c);
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rat& s) const {
        if (s.is_zero()) return Poly();
        std::vector<Rat> r;
        r.reserve(c_.size());
        for (const Rat& c : c_) r.push_back(c * s);
        return Poly(std::move(r));
    }

    // Exact coefficientwise division by a nonzero rational.
    Poly div_rat(const Rat& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero");
        return scaled(d.inverse());
    }

    // Division that must leave no remainder (the Bareiss pivot divisions are
    // exact by construction). Not a general quotient/remainder operation.
    Poly divexact(const Poly& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (is_zero()) return Poly();
        std::vector<Rat> rem = c_;
        int db = b.degree();
        int dq = degree() - db;
        if (dq < 0) throw std::domain_error("inexact polynomial division");
        std::vector<Rat> q(dq + 1, Rat(0));
        Rat lead_inv = b.leading().inverse();
        for (int k = dq; k >= 0; --k) {
            Rat t = rem[k + db] * lead_inv;
            q[k] = t;
            if (t.is_zero()) continue;
            for (int i = 0; i <= db; ++i) rem[k + i] -= t * b.coeff(i);
        }
        for (const Rat& r : rem)
            if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return Poly(std::move(q));
    }

    Poly pow(unsigned long e) const {
        Poly r = one();
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r;
        r.reserve(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * Rat(static_cast<long>(k)));
        return Poly(std::move(r));
    }

    // Horner evaluation, exact.
    Rat eval(const Rat& v) const {
        Rat acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * v + c_[k];
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Monomials in descending degree, e.g. "z^2 - 1" or "1/2*z".
    std::string str(const std::string& var = "z") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rat& c = c_[k];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rat m = c.abs();
            if (k == 0) {
                out += m.str();
            } else {
                if (!m.is_one()) out += m.str() + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    size_t bit_length() const {
        size_t m = 0;
        for (const Rat& c : c_) m = std::max(m, c.bit_length());
        return m;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

}  // namespace minadet
