#ifndef SYMPQ_LAURENT_MODELS_HPP
#define SYMPQ_LAURENT_MODELS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sympq/gamma_ring.hpp"
#include "sympq/lambda_ring.hpp"
#include "sympq/laurent_poly.hpp"
#include "sympq/partitions.hpp"
#include "sympq/trunc_series.hpp"

namespace sympq {

struct SpecializationContext {
    int n = 1;
    explicit SpecializationContext(int n_);
};

struct EvaluationPoint {
    std::vector<Rational> values;
    int size() const { return static_cast<int>(values.size()); }
};

struct CheckResult {
    bool ok = true;
    std::string detail;  // first discrepancy, empty when ok
};

// Images of q_r, h_r and e_r when the variables of Lambda are set to a
// finite alphabet of Laurent polynomials z_1, ..., z_m:
//   sum h_r t^r = prod 1/(1 - z_i t),  sum e_r t^r = prod (1 + z_i t),
//   q_r = sum_p e_p h_{r-p}.
// Series are extended on demand; safe to share between threads.
class AlphabetSpecializer {
public:
    AlphabetSpecializer(int nvars, std::vector<LaurentPoly> alphabet);
    // pi-tilde: alphabet x_v, x_v^{-1} for v in vars.
    static AlphabetSpecializer symplectic(int nvars, const std::vector<int>& vars);
    static std::vector<LaurentPoly> symplectic_alphabet(int nvars, const std::vector<int>& vars);
    // Alphabet x_v + x_v^{-1}, for classical functions of the substituted variables.
    static AlphabetSpecializer substituted(int nvars);

    int nvars() const { return nvars_; }
    LaurentPoly q(int r) const;
    LaurentPoly h(int r) const;
    LaurentPoly e(int r) const;
    LaurentPoly apply(const GammaElement& g) const;
    LaurentPoly apply(const LambdaElement& l) const;

private:
    struct Series {
        std::vector<LaurentPoly> h, e, q;
    };
    int nvars_;
    std::vector<LaurentPoly> alphabet_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const Series> series_;
    std::shared_ptr<const Series> ensure(int degree) const;
};

// The specializer for pi-tilde_n, shared process-wide.
const AlphabetSpecializer& standard_specializer(int n);

LaurentPoly specialize(const GammaElement& e, SpecializationContext ctx);
LaurentPoly specialize(const LambdaElement& e, SpecializationContext ctx);

// f_d = (x^d - x^{-d})(x + x^{-1})/(x - x^{-1}), f_0 = 1; g_d = 2 f_d (d >= 1).
LaurentPoly f_tilde(int d, int nvars = 1, int var = 0);
LaurentPoly g_tilde(int d, int nvars = 1, int var = 0);

// Pf(Q^C_{(lam_i,lam_j)}(x)) with two-row entries from the generating
// function recursion seeded by one-row values.
LaurentPoly schur_pfaffian_QC(const StrictPartition& lam, SpecializationContext ctx);
// Two-row values Q^C_{(r,s)}(x), same recursion; total on pairs like the
// universal version.
LaurentPoly two_row_QC(int r, int s, SpecializationContext ctx);

enum class PQKind { P, Q };

// Pf(A, V or W; -V^T, O)/Delta at pt. With factorial parameters the border
// entries are g_d(x|a) (Q only).
Rational nimmo_eval(const StrictPartition& lam, PQKind kind, const EvaluationPoint& pt,
                    const std::vector<Rational>* factorial_params = nullptr);

// det(x_i^{mu_j+n-j+1} - x_i^{-(mu_j+n-j+1)}) divided exactly by
// prod (x_i - x_i^{-1}) prod_{i<j} ((x_i + x_i^{-1}) - (x_j + x_j^{-1})).
LaurentPoly bialternant_SC(const Partition& mu, SpecializationContext ctx);

// W_n-sum of the type C Hall-Littlewood kernel divided by v_lam(t), at pt.
// At fixed x the sum is a polynomial in t divisible by v_lam(t); the
// quotient is formed exactly in Q[t] before substituting t, which is what
// makes t = -1 usable when lam has zero parts (v_lam(-1) = 0 there).
Rational weyl_hall_littlewood_oracle(const Partition& lam, const Rational& t, const EvaluationPoint& pt);

// Coefficients of f in the S^C basis, by peeling lexicographically
// largest dominant exponents (S^C_mu = x^mu + lower dominant terms).
std::map<Partition, Rational> expand_in_SC_basis(const LaurentPoly& f, SpecializationContext ctx);

CheckResult separation_check(const StrictPartition& lam, int n, int m);
CheckResult delta_identities(int r, int s, SpecializationContext ctx);
CheckResult check_gf_length1(int n, int order);
CheckResult check_gf_length2(int n, int order);

// Random rational point with |num|, |den| <= bound avoiding x^2 = 1 and
// x_i = +-x_j^{+-1}.
EvaluationPoint random_point(int n, std::mt19937_64& rng, int bound = 50);

}  // namespace sympq

#endif
