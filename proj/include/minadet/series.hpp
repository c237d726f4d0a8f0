#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minadet/combinat.hpp"
#include "minadet/domain.hpp"

namespace minadet {

// Truncated formal power series over a coefficient domain T. Index k of the
// coefficient vector holds [x^k]f; coefficients are stored for 0..ord
// inclusive and reading past ord is an error, never a silent zero.
//
// The polynomial flag marks series whose coefficients beyond ord are
// genuinely zero (set by the polynomial builder and preserved by
// taylor_shift); arithmetic results never carry it.
template <typename T>
class Series {
public:
    explicit Series(std::vector<T> coeffs, bool polynomial = false)
        : c_(std::move(coeffs)), poly_(polynomial) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
    }

    static Series constant(const T& c, int ord) {
        std::vector<T> v(static_cast<size_t>(ord) + 1, domain<T>::zero());
        v[0] = c;
        return Series(std::move(v));
    }
    static Series one(int ord) { return constant(domain<T>::one(), ord); }
    static Series zero(int ord) { return constant(domain<T>::zero(), ord); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_polynomial() const { return poly_; }

    const T& coeff(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("insufficient truncation order");
        return c_[static_cast<size_t>(k)];
    }
    const T& constant_term() const { return c_[0]; }
    const std::vector<T>& coeffs() const { return c_; }

    // Truncates to a lower order, or zero-extends a polynomial series.
    Series truncated(int ord) const {
        if (ord < 0) throw std::invalid_argument("negative truncation order");
        if (ord <= order())
            return Series(std::vector<T>(c_.begin(), c_.begin() + ord + 1), poly_ && ord >= order());
        if (!poly_) throw std::out_of_range("insufficient truncation order");
        std::vector<T> v = c_;
        v.resize(static_cast<size_t>(ord) + 1, domain<T>::zero());
        return Series(std::move(v), true);
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<T> c_;
    bool poly_;
};

template <typename T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<T> r(static_cast<size_t>(ord) + 1, domain<T>::zero());
    for (int k = 0; k <= ord; ++k) r[k] = a.coeffs()[k] + b.coeffs()[k];
    return Series<T>(std::move(r));
}

template <typename T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<T> r(static_cast<size_t>(ord) + 1, domain<T>::zero());
    for (int k = 0; k <= ord; ++k) r[k] = a.coeffs()[k] - b.coeffs()[k];
    return Series<T>(std::move(r));
}

// Cauchy product, truncated at min(ord(a), ord(b)).
template <typename T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<T> r(static_cast<size_t>(ord) + 1, domain<T>::zero());
    for (int i = 0; i <= ord; ++i) {
        if (domain<T>::is_zero(a.coeffs()[i])) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (domain<T>::is_zero(b.coeffs()[j])) continue;
            r[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return Series<T>(std::move(r));
}

template <typename T>
Series<T> mul_const(const Series<T>& f, const T& c) {
    std::vector<T> r;
    r.reserve(f.coeffs().size());
    for (const T& a : f.coeffs()) r.push_back(a * c);
    return Series<T>(std::move(r));
}

// f^m by repeated squaring; f^0 is the constant-one series at ord(f).
template <typename T>
Series<T> series_pow_int(const Series<T>& f, unsigned long m) {
    Series<T> r = Series<T>::one(f.order());
    Series<T> base = f;
    while (m > 0) {
        if (m & 1) r = r * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return r;
}

// log f for f with unit constant term; the termwise recurrence
// g_n = f_n - (1/n) sum_{k=1}^{n-1} k g_k f_{n-k} from f (log f)' = f'.
template <typename T>
Series<T> series_log(const Series<T>& f) {
    if (!domain<T>::is_one(f.constant_term()))
        throw std::domain_error("log requires unit constant term");
    int ord = f.order();
    std::vector<T> g(static_cast<size_t>(ord) + 1, domain<T>::zero());
    for (int n = 1; n <= ord; ++n) {
        T acc = domain<T>::zero();
        for (int k = 1; k < n; ++k)
            acc += domain<T>::mul_rat(g[k] * f.coeffs()[n - k], Rat(k));
        g[n] = f.coeffs()[n] - domain<T>::div_rat(acc, Rat(n));
    }
    return Series<T>(std::move(g));
}

// exp f for f with zero constant term; h_n = (1/n) sum_{k=1}^{n} k f_k h_{n-k}.
template <typename T>
Series<T> series_exp(const Series<T>& f) {
    if (!domain<T>::is_zero(f.constant_term()))
        throw std::domain_error("exp requires zero constant term");
    int ord = f.order();
    std::vector<T> h(static_cast<size_t>(ord) + 1, domain<T>::zero());
    h[0] = domain<T>::one();
    for (int n = 1; n <= ord; ++n) {
        T acc = domain<T>::zero();
        for (int k = 1; k <= n; ++k)
            acc += domain<T>::mul_rat(f.coeffs()[k] * h[n - k], Rat(k));
        h[n] = domain<T>::div_rat(acc, Rat(n));
    }
    return Series<T>(std::move(h));
}

// f^c = exp(c log f). Requires unit constant term; agrees with
// series_pow_int when c is a nonnegative integer of the domain.
template <typename T>
Series<T> series_pow_scalar(const Series<T>& f, const T& c) {
    if (!domain<T>::is_one(f.constant_term()))
        throw std::domain_error("fractional power requires unit constant term");
    return series_exp(mul_const(series_log(f), c));
}

// Same, reusing a precomputed log f (several exponents of one base).
template <typename T>
Series<T> series_pow_scalar_with_log(const Series<T>& log_f, const T& c) {
    return series_exp(mul_const(log_f, c));
}

// Shifts coefficients down by k; every discarded low coefficient must be zero.
template <typename T>
Series<T> series_div_x_pow(const Series<T>& f, int k) {
    if (k <= 0) throw std::invalid_argument("x-power must be positive");
    if (f.order() < k) throw std::out_of_range("insufficient truncation order");
    for (int i = 0; i < k; ++i)
        if (!domain<T>::is_zero(f.coeffs()[i])) throw std::domain_error("not divisible by x^k");
    std::vector<T> r(f.coeffs().begin() + k, f.coeffs().end());
    return Series<T>(std::move(r));
}

// g with g(u) = f(t + u) for a polynomial series f; exact binomial expansion,
// g_l = sum_{m>=l} binom(m,l) f_m t^{m-l}.
template <typename T>
Series<T> taylor_shift(const Series<T>& f, const Rat& t) {
    if (!f.is_polynomial())
        throw std::invalid_argument("taylor_shift requires a polynomial series");
    int d = f.order();
    std::vector<T> g(static_cast<size_t>(d) + 1, domain<T>::zero());
    for (int l = 0; l <= d; ++l) {
        T acc = domain<T>::zero();
        for (int m = l; m <= d; ++m) {
            Rat w = Rat(binomial_int(m, l)) * t.pow(m - l);
            acc += domain<T>::mul_rat(f.coeffs()[m], w);
        }
        g[l] = std::move(acc);
    }
    return Series<T>(std::move(g), true);
}

// "c0 + c1*x + ... + O(x^{ord+1})"; zero terms are skipped, compound
// coefficients are parenthesized.
template <typename T>
std::string series_str(const Series<T>& f, const std::string& var = "x") {
    std::string out;
    for (int k = 0; k <= f.order(); ++k) {
        const T& c = f.coeffs()[k];
        if (domain<T>::is_zero(c)) continue;
        std::string cs = domain<T>::str(c);
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        if (!out.empty()) {
            if (cs.size() > 1 && cs[0] == '-') {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var + "^" + std::to_string(f.order() + 1) + ")";
}

inline Series<Poly> lift_series(const Series<Rat>& f) {
    std::vector<Poly> c;
    c.reserve(f.coeffs().size());
    for (const Rat& a : f.coeffs()) c.emplace_back(a);
    return Series<Poly>(std::move(c));
}

inline Series<Rat> series_from_poly(const Poly& p, int ord = -1) {
    if (ord < 0) ord = std::max(p.degree(), 0);
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(ord) + 1);
    for (int k = 0; k <= ord; ++k) c.push_back(p.coeff(k));
    bool exact = ord >= p.degree();
    return Series<Rat>(std::move(c), exact);
}

inline Poly series_to_poly(const Series<Rat>& f) {
    if (!f.is_polynomial())
        throw std::invalid_argument("series is not flagged as a polynomial");
    return Poly(f.coeffs());
}

namespace builders {

inline Series<Rat> one_plus_x(int ord) {
    std::vector<Rat> c(static_cast<size_t>(ord) + 1, Rat(0));
    c[0] = Rat(1);
    if (ord >= 1) c[1] = Rat(1);
    return Series<Rat>(std::move(c));
}

inline Series<Rat> exp_x(int ord) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(ord) + 1);
    for (int k = 0; k <= ord; ++k) c.push_back(Rat(Int(1), factorial(k)));
    return Series<Rat>(std::move(c));
}

// (e^x - 1)/x: coefficient of x^k is 1/(k+1)!.
inline Series<Rat> exp_m1_over_x(int ord) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(ord) + 1);
    for (int k = 0; k <= ord; ++k) c.push_back(Rat(Int(1), factorial(k + 1)));
    return Series<Rat>(std::move(c));
}

// log(1+x)/x: coefficient of x^k is (-1)^k/(k+1).
inline Series<Rat> log1p_over_x(int ord) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(ord) + 1);
    for (int k = 0; k <= ord; ++k) c.push_back(Rat(k % 2 ? -1 : 1, k + 1));
    return Series<Rat>(std::move(c));
}

// The Catalan generating function, built from C_{n+1} = sum C_m C_{n-m}.
inline Series<Rat> catalan_gf(int ord) {
    std::vector<Int> cat = catalan_numbers(ord + 1);
    std::vector<Rat> c;
    c.reserve(cat.size());
    for (const Int& v : cat) c.emplace_back(v);
    return Series<Rat>(std::move(c));
}

// sum_{e in S} x^e truncated at ord. S must be strictly increasing and start
// 0, 1 (the unit-determinant conclusion needs a_0 = a_1 = 1).
inline Series<Rat> exponent_set(const std::vector<long>& S, int ord) {
    if (S.size() < 2 || S[0] != 0 || S[1] != 1)
        throw std::invalid_argument("exponent set must start 0, 1");
    for (size_t i = 1; i < S.size(); ++i)
        if (S[i] <= S[i - 1])
            throw std::invalid_argument("exponent set must be strictly increasing");
    std::vector<Rat> c(static_cast<size_t>(ord) + 1, Rat(0));
    for (long e : S)
        if (e <= ord) c[static_cast<size_t>(e)] = Rat(1);
    return Series<Rat>(std::move(c));
}

// sum_m x^{m^p}: squares for p = 2, cubes for p = 3, ...
inline Series<Rat> sum_of_powers(int p, int ord) {
    if (p < 1) throw std::invalid_argument("power must be positive");
    long cap = std::max(ord, 1);
    std::vector<long> S;
    for (long m = 0;; ++m) {
        long e = 1;
        bool over = false;
        for (int i = 0; i < p && !over; ++i) {
            e *= m;
            if (e > cap) over = true;
        }
        if (over) break;
        S.push_back(e);
    }
    return exponent_set(S, ord);
}

inline Series<Rat> polynomial(std::vector<Rat> coeffs) {
    if (coeffs.empty()) coeffs.push_back(Rat(0));
    return Series<Rat>(std::move(coeffs), true);
}

}  // namespace builders

}  // namespace minadet
