#pragma once

#include <stdexcept>
#include <vector>

#include "minadet/int.hpp"
#include "minadet/rat.hpp"

namespace minadet {

inline Int factorial(long n) {
    if (n < 0) throw std::out_of_range("factorial of a negative integer");
    Int r;
    mpz_fac_ui(r.raw(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial_int(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// binom(y, j) = y(y-1)...(y-j+1)/j! for arbitrary rational y.
inline Rat binomial_rat(const Rat& y, long j) {
    if (j < 0) return Rat(0);
    Rat r(1);
    for (long l = 0; l < j; ++l) r *= y - Rat(l);
    return r / Rat(factorial(j));
}

// Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline Int stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling index out of range");
    std::vector<Int> row{Int(1)};
    for (long m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, Int(0));
        for (long i = 0; i <= m; ++i) {
            if (i <= m - 1) next[i] += Int(i) * row[i];
            if (i >= 1 && i - 1 <= m - 1) next[i] += row[i - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

// Unsigned Stirling numbers of the first kind,
// c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1).
inline Int stirling1_unsigned(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling index out of range");
    std::vector<Int> row{Int(1)};
    for (long m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, Int(0));
        for (long i = 0; i <= m; ++i) {
            if (i <= m - 1) next[i] += Int(m - 1) * row[i];
            if (i >= 1 && i - 1 <= m - 1) next[i] += row[i - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

// Signed convention: s(n,k) = (-1)^{n-k} c(n,k).
inline Int stirling1_signed(long n, long k) {
    Int u = stirling1_unsigned(n, k);
    return ((n - k) % 2 != 0) ? -u : u;
}

// Catalan numbers from the defining recurrence C_{n+1} = sum C_m C_{n-m}.
inline std::vector<Int> catalan_numbers(int count) {
    std::vector<Int> c;
    if (count <= 0) return c;
    c.reserve(count);
    c.push_back(Int(1));
    for (int n = 0; n + 1 < count; ++n) {
        Int s(0);
        for (int m = 0; m <= n; ++m) s += c[m] * c[n - m];
        c.push_back(s);
    }
    return c;
}

// Ordered i-tuples over the exponent set S (strictly increasing) whose
// entries sum to target. Brute-force enumeration with partial-sum pruning;
// the independent oracle for the representation-count matrices.
inline long long count_exponent_tuples(const std::vector<long>& S, int arity, long target) {
    if (target < 0) return 0;
    if (arity == 0) return target == 0 ? 1 : 0;
    long long total = 0;
    for (long e : S) {
        if (e > target) break;
        total += count_exponent_tuples(S, arity - 1, target - e);
    }
    return total;
}

}  // namespace minadet
