#ifndef SYMPQ_FACTORIAL_HPP
#define SYMPQ_FACTORIAL_HPP

#include <string_view>
#include <vector>

#include "sympq/gamma_ring.hpp"
#include "sympq/laurent_models.hpp"
#include "sympq/laurent_poly.hpp"
#include "sympq/partitions.hpp"

namespace sympq {

// Factorial parameters a_0, a_1, ..., a_{M-1}.
struct FactorialParams {
    std::vector<Rational> values;

    FactorialParams() = default;
    explicit FactorialParams(std::vector<Rational> v) : values(std::move(v)) {}
    static FactorialParams zeros(int m) { return FactorialParams(std::vector<Rational>(m, Rational(0))); }
    static FactorialParams parse(std::string_view text);  // "0,1/2,3"; throws ParseError

    int size() const { return static_cast<int>(values.size()); }
    // Throws DomainError past the end.
    const Rational& at(int i) const;
    // (a_from, ..., a_{to-1}); throws DomainError if too short.
    std::vector<Rational> slice(int from, int to) const;
    std::string to_string() const;
};

// e_k of a list of numbers; 0 for k < 0 or k > size.
Rational elementary(int k, const std::vector<Rational>& xs);

// (x|a)^r = (x + a_0) ... (x + a_{r-1})
Rational factorial_monomial(const Rational& x, const FactorialParams& a, int r);
LaurentPoly factorial_monomial(const LaurentPoly& x, const FactorialParams& a, int r);

// g_d(x|a) = 2((x|a)^d - (x^{-1}|a)^d)(x + x^{-1})/(x - x^{-1}), g_0 = 1.
LaurentPoly g_tilde_fac(int d, const FactorialParams& a, int nvars = 1, int var = 0);

// g_r(x|a) rebuilt from the g_k(x). FullPrefix uses e_{r-k}(a_0..a_{r-1}),
// which is what expanding (x|a)^r gives; Truncated uses e_{r-k}(a_0..a_{r-k}),
// which differs from r = 3 on.
enum class FgReading { FullPrefix, Truncated };
LaurentPoly g_tilde_fac_from_g(int r, const FactorialParams& a, FgReading reading = FgReading::FullPrefix);

// det(e_{lam_i - mu_j}(a_0..a_{lam_i - 1})); needs l(lam) = l(mu).
Rational d_coeff(const StrictPartition& lam, const StrictPartition& mu, const FactorialParams& a);

// sum over mu inside lam with l(mu) = l(lam) of d_{lam,mu} Q^C_mu.
GammaElement ufac_Q(const StrictPartition& lam, const FactorialParams& a);
// Two-row entries with the usual conventions ((s,r) = -(r,s), (r,0) = one row).
GammaElement ufac_Q_pair(int r, int s, const FactorialParams& a);
// R_{r/k}: full one-row for k = 0, one-row with parameters (0, a_{k+1}, ...,
// a_{r-1}) for 0 < k < r, 1 for k = r, 0 otherwise.
GammaElement R_coeff(int r, int k, const FactorialParams& a);
GammaElement ufac_Q_skew(const StrictPartition& lam, const StrictPartition& mu, const FactorialParams& a);

// Sum over QTab of prod (x_k -+ a_{j-i}) or (x_k^{-1} -+ a_{j-i}); needs a_0 = 0.
LaurentPoly fac_tableau_sum(const SkewShiftedShape& shape, int n, const FactorialParams& a);

// sum_{k=j}^{r-i} e_{k-j}(a_0..a_{k-1}) e_{r-k-i}(a_{k+1}..a_{r-1}) = e_{r-i-j}(a_0..a_{r-1})
bool check_rel_e(const FactorialParams& a, int r, int i, int j);

// Q^C_(r)(x_1..x_n, y|a) = sum_k R_{r/k}(x|a) g_k(y|a).
CheckResult check_Q_equals_Rg(int r, int n, const FactorialParams& a);
// Q^C_lam(x, y|a) = sum_mu Q^C_{lam/mu}(x|a) Q^C_mu(y|a), x of size n, y of size m.
CheckResult check_fac_separation(const StrictPartition& lam, int n, int m, const FactorialParams& a);

// Parameters with a_0 = 0 and the rest uniform in [-bound, bound] with
// denominators up to bound.
FactorialParams random_params(int m, std::mt19937_64& rng, int bound = 10);

}  // namespace sympq

#endif
