#ifndef SYMPQ_LAMBDA_RING_HPP
#define SYMPQ_LAMBDA_RING_HPP

#include <map>

#include "sympq/gamma_ring.hpp"
#include "sympq/generator_poly.hpp"
#include "sympq/partitions.hpp"

namespace sympq {

struct LambdaTag;
using LambdaElement = GeneratorPoly<LambdaTag>;

// Lambda = Q[h_1, h_2, ...]; the h_r are algebraically independent, so the
// stored form is already canonical.
struct LambdaTag {
    static constexpr const char* symbol = "h";
    static LambdaElement canonical(const LambdaElement& e) { return e; }
};

inline LambdaElement h(int r) { return LambdaElement::gen(r); }

// e_p = det(h_{1-i+j})_{p x p}
LambdaElement elementary_in_h(int p);
// q_r = sum_p e_p h_{r-p}
LambdaElement q_in_h(int r);
// Ring map Gamma -> Lambda.
LambdaElement embed(const GammaElement& e);

// Jacobi-Trudi s_lam = det(h_{lam_i-i+j}).
LambdaElement schur_s(const Partition& lam);
// s^C_lam = 1/2 det(h_{lam_i-i+j} + h_{lam_i-i-j+2}).
LambdaElement usymp_schur(const Partition& lam);

// Expansion in the s^C basis (graded solve; s^C_mu = s_mu + lower terms).
std::map<Partition, Rational> expand_in_usymp_schur(const LambdaElement& e);

// g-tilde_{lam,mu}: P^C_lam in the s^C basis.
std::map<Partition, Rational> g_tilde_expansion(const StrictPartition& lam);

}  // namespace sympq

#endif
