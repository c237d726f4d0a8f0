#pragma once

#include <vector>

#include "minadet/matrix.hpp"
#include "minadet/report.hpp"
#include "minadet/series.hpp"

namespace minadet {

struct VerifyOptions {
    bool oracle = false;  // cross-check every small determinant by cofactor expansion
    int oracle_cap = 7;
};

// Polynomials p_0 .. p_n over Rat where p_j has exact degree j.
class PolyFamily {
public:
    explicit PolyFamily(std::vector<Poly> ps);

    const std::vector<Poly>& polys() const { return ps_; }
    std::vector<Rat> leading_coeffs() const;

private:
    std::vector<Poly> ps_;
};

// det(coeff_matrix(f, n, 1)) = a_1^{n(n+1)/2}, for any constant term
// (unit, general nonzero, or zero).
Report verify_theorem1(const Series<Rat>& f, int n, const VerifyOptions& opt = {});

// det over the polynomial ring in z equals (z a_1)^{n(n+1)/2} structurally.
Report verify_theorem2_symbolic(const Series<Rat>& f, int n, const VerifyOptions& opt = {});

// b * c is upper triangular with diagonal (z a_1)^0 .. (z a_1)^n.
Report verify_triangularization(const Series<Rat>& f, int n, const Rat& z,
                                const VerifyOptions& opt = {});

// Representation-count matrices of an exponent set: entries against the
// tuple-counting oracle, every leading principal minor determinant 1.
Report verify_representations(const std::vector<long>& S, int n, const VerifyOptions& opt = {});

// Stirling second kind: recurrence-built entries match the series engine,
// det = (z/2)^{n(n+1)/2}.
Report verify_stirling2(long z, int n, const VerifyOptions& opt = {});

// Stirling first kind under the signed convention s(n,k) = (-1)^{n-k} c(n,k)
// (the one the series engine dictates): det = (-z/2)^{n(n+1)/2}; the
// unsigned reading gives the (z/2)^{n(n+1)/2} form, checked as well.
Report verify_stirling1(long z, int n, const VerifyOptions& opt = {});

// Catalan power coefficients and both determinant normalizations:
// det([x^j]C^{zk})_{j,k=1}^{n} = z^{n(n+1)/2} and the factorial-ratio display
// det((2j+zk-1)!/(zk+j)!)_{j,k=1}^{n} = z^{n(n-1)/2} 1! 2! ... (n-1)!.
Report verify_catalan(long z, int n, const VerifyOptions& opt = {});

// det(u + v) = prod_i (f'(0)^i + g'(0)^i) for unit constant terms.
Report verify_additive(const Series<Rat>& f, const Series<Rat>& g, int n,
                       const VerifyOptions& opt = {});

// det(sum_r c(r) binom(ri, j)) = prod_j sum_r c(r) r^j.
Report verify_weighted(const std::vector<Rat>& S, const std::vector<Rat>& c, int n,
                       const VerifyOptions& opt = {});

// det(int_0^1 f(x) binom(xi, j) dx) = prod_j mu_j(f).
Report verify_moments(const Poly& fp, int n, const VerifyOptions& opt = {});

// det(j! [x^j] f^{z x_i}) = (z a_1)^{n(n+1)/2} prod_{i<j} (x_j - x_i).
Report verify_mina_origin(const Series<Rat>& f, const Rat& z, const std::vector<Rat>& xs, int n,
                          const VerifyOptions& opt = {});

// det(D^j fp^{m_i} at t) = fp(t)^{sum(m_i - i)} fp'(t)^{n(n+1)/2}
// prod_{i<j} (m_j - m_i), exact rationals throughout.
Report verify_mina_at_point(const Poly& fp, const std::vector<long>& ms, const Rat& t, int n,
                            const VerifyOptions& opt = {});

// det(p_j(x_i)) = (prod leading coeffs) * vandermonde, plus the entrywise
// factorization through the coefficient and Vandermonde matrices.
Report verify_lemma_polys(const PolyFamily& ps, const std::vector<Rat>& xs,
                          const VerifyOptions& opt = {});

// j! [x^j] f^w is a polynomial in w of exact degree j with leading
// coefficient a_1^j.
Report verify_degree_claim(const Series<Rat>& f, int n, const VerifyOptions& opt = {});

}  // namespace minadet
