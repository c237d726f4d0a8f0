#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minadet/combinat.hpp"
#include "minadet/domain.hpp"
#include "minadet/series.hpp"

namespace minadet {

// Dense matrix over an exact coefficient domain; entries row-major, all in
// canonical form of their domain. Immutable by convention after building.
template <typename T>
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(checked_size(rows, cols), domain<T>::zero()) {}
    ExactMatrix(int rows, int cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != checked_size(rows, cols))
            throw std::invalid_argument("entry count does not match dimensions");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = domain<T>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const T& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    T& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    ExactMatrix transpose() const {
        ExactMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Upper-left (k+1)x(k+1) section.
    ExactMatrix leading_section(int k) const {
        ExactMatrix r(k + 1, k + 1);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) r.at(i, j) = at(i, j);
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    size_t max_bit_length() const {
        size_t m = 0;
        for (const T& v : e_) m = std::max(m, domain<T>::bit_length(v));
        return m;
    }

private:
    static size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
        return static_cast<size_t>(rows) * static_cast<size_t>(cols);
    }

    int rows_, cols_;
    std::vector<T> e_;
};

template <typename T>
ExactMatrix<T> operator+(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch");
    ExactMatrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

template <typename T>
ExactMatrix<T> operator*(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    ExactMatrix<T> r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (domain<T>::is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (domain<T>::is_zero(b.at(k, j))) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

// Fraction-free Bareiss elimination; every interior division is exact in the
// domain (Sylvester's identity), so Int and Poly stay inside their rings.
// Zero pivots are handled by searching down the column and flipping the sign;
// an all-zero column means a zero determinant.
template <typename T>
T det_bareiss(ExactMatrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
    int n = m.rows();
    if (n == 0) return domain<T>::one();
    bool negate = false;
    T prev = domain<T>::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (domain<T>::is_zero(m.at(k, k))) {
            int r = k + 1;
            while (r < n && domain<T>::is_zero(m.at(r, k))) ++r;
            if (r == n) return domain<T>::zero();
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) =
                    domain<T>::divexact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = domain<T>::zero();
        }
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

// Laplace expansion along the first row; the brute-force oracle. Kept behind
// a dimension cap because of its factorial cost.
template <typename T>
T det_cofactor(const ExactMatrix<T>& m, int cap = 7) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
    if (m.rows() > cap) throw std::domain_error("oracle cap exceeded");
    int n = m.rows();
    if (n == 0) return domain<T>::one();
    if (n == 1) return m.at(0, 0);
    T acc = domain<T>::zero();
    for (int j = 0; j < n; ++j) {
        if (domain<T>::is_zero(m.at(0, j))) continue;
        ExactMatrix<T> sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        T term = m.at(0, j) * det_cofactor(sub, cap);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

template <typename T>
bool is_upper_triangular_with_diag(const ExactMatrix<T>& m, const std::vector<T>& d) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix expected");
    if (d.size() != static_cast<size_t>(m.rows())) return false;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < i; ++j)
            if (!domain<T>::is_zero(m.at(i, j))) return false;
        if (!(m.at(i, i) == d[static_cast<size_t>(i)])) return false;
    }
    return true;
}

// (n+1)x(n+1) matrix with entry (i,j) = [x^j] f^{zi}. Row i is h^i for
// h = f^z, so pow_int serves z a nonnegative integer (any constant term) and
// exp(z log f) serves the rest (unit constant term required).
template <typename T>
ExactMatrix<T> coeff_matrix(const Series<T>& f, int n, const T& z) {
    if (n < 0) throw std::invalid_argument("negative matrix order");
    if (f.order() < n) throw std::out_of_range("insufficient truncation order");
    auto zint = domain<T>::as_nonneg_int(z);
    if (!zint && !domain<T>::is_one(f.constant_term()))
        throw std::domain_error("fractional power requires unit constant term");
    Series<T> h = zint ? series_pow_int(f, static_cast<unsigned long>(*zint))
                       : series_pow_scalar(f, z);
    ExactMatrix<T> m(n + 1, n + 1);
    Series<T> row = Series<T>::one(f.order());
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) m.at(i, j) = row.coeff(j);
        if (i < n) row = row * h;
    }
    return m;
}

// b_{i,j} = (-1)^{i+j} binom(i,j): lower triangular, unit diagonal, det 1.
template <typename T>
ExactMatrix<T> binomial_sign_matrix(int n) {
    ExactMatrix<T> b(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
            T v = domain<T>::from_rat(Rat(binomial_int(i, j)));
            b.at(i, j) = ((i + j) % 2 != 0) ? -v : v;
        }
    return b;
}

// prod_{i<j} (xs[j] - xs[i]); 1 for a single node.
inline Rat vandermonde_product(const std::vector<Rat>& xs) {
    Rat p(1);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) p *= xs[j] - xs[i];
    return p;
}

// Entry (i,j) = xs[j]^i; det = vandermonde_product(xs).
inline ExactMatrix<Rat> vandermonde_matrix(const std::vector<Rat>& xs) {
    int n = static_cast<int>(xs.size());
    ExactMatrix<Rat> v(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v.at(i, j) = xs[static_cast<size_t>(j)].pow(i);
    return v;
}

// Entry (i,j) = j! [x^j] f^{z xs[i]}, which is the j-th derivative of
// f^{z xs[i]} at the origin.
inline ExactMatrix<Rat> mina_matrix_origin(const Series<Rat>& f, const Rat& z,
                                           const std::vector<Rat>& xs, int n) {
    if (n < 0) throw std::invalid_argument("negative matrix order");
    if (xs.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("xs must have n+1 entries");
    if (f.order() < n) throw std::out_of_range("insufficient truncation order");
    bool unit = f.constant_term().is_one();
    std::optional<Series<Rat>> log_f;
    if (unit) log_f = series_log(f);
    ExactMatrix<Rat> m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat c = z * xs[static_cast<size_t>(i)];
        Series<Rat> row = [&] {
            if (auto e = c.as_nonneg_int()) return series_pow_int(f, static_cast<unsigned long>(*e));
            if (!unit) throw std::domain_error("fractional power requires unit constant term");
            return series_pow_scalar_with_log(*log_f, c);
        }();
        Rat fact(1);
        for (int j = 0; j <= n; ++j) {
            if (j > 0) fact *= Rat(j);
            m.at(i, j) = fact * row.coeff(j);
        }
    }
    return m;
}

// Entry (i,j) = (d^j/dx^j) fp^{ms[i]} evaluated at t, with nonnegative
// integer exponents so every row stays a genuine polynomial.
inline ExactMatrix<Rat> mina_matrix_at_point(const Poly& fp, const std::vector<long>& ms,
                                             const Rat& t, int n) {
    if (n < 0) throw std::invalid_argument("negative matrix order");
    if (ms.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("ms must have n+1 entries");
    ExactMatrix<Rat> m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        long e = ms[static_cast<size_t>(i)];
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative integers");
        Poly p = fp.pow(static_cast<unsigned long>(e));
        for (int j = 0; j <= n; ++j) {
            m.at(i, j) = p.eval(t);
            p = p.derivative();
        }
    }
    return m;
}

// Aligned plain-text grid, entries right-justified per column.
template <typename T>
std::string matrix_str(const ExactMatrix<T>& m) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<size_t>(m.rows()) * m.cols());
    std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells.push_back(domain<T>::str(m.at(i, j)));
            width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], cells.back().size());
        }
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[static_cast<size_t>(i) * m.cols() + j];
            if (j > 0) out += "  ";
            out.append(width[static_cast<size_t>(j)] - s.size(), ' ');
            out += s;
        }
        out += "\n";
    }
    return out;
}

}  // namespace minadet
