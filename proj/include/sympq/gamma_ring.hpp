#ifndef SYMPQ_GAMMA_RING_HPP
#define SYMPQ_GAMMA_RING_HPP

#include <map>
#include <string>
#include <string_view>

#include "sympq/generator_poly.hpp"
#include "sympq/partitions.hpp"

namespace sympq {

struct GammaTag;
using GammaElement = GeneratorPoly<GammaTag>;

// Elements of Gamma are stored as polynomials in q_1, q_2, ... . The q_r are
// not algebraically independent (Q(z)Q(-z) = 1 forces q_2 = q_1^2/2, ...),
// so comparison goes through the normal form in the odd q_r, which are.
struct GammaTag {
    static constexpr const char* symbol = "q";
    static GammaElement canonical(const GammaElement& e);
};

inline GammaElement q(int r) { return GammaElement::gen(r); }

// Rewrites every even q_{2m} through
//   q_{2m} = 1/2 sum_{i=1}^{2m-1} (-1)^{i-1} q_i q_{2m-i}.
GammaElement gamma_canonical(const GammaElement& e);

// Two-row entries, total on integer pairs: (s,r) = -(r,s), (r,r) = 0,
// (r,0) = q_r, and zero when an index is negative.
GammaElement schur_Q_pair(int r, int s);
GammaElement usymp_Q_pair(int r, int s);

GammaElement schur_Q(const StrictPartition& lam);
GammaElement schur_P(const StrictPartition& lam);
GammaElement usymp_Q(const StrictPartition& lam);
GammaElement usymp_P(const StrictPartition& lam);
GammaElement usymp_Q_skew(const StrictPartition& lam, const StrictPartition& mu);
GammaElement usymp_P_skew(const StrictPartition& lam, const StrictPartition& mu);

enum class Basis { SchurQ, SchurP, SympQ, SympP };
std::string basis_name(Basis b);
Basis parse_basis(std::string_view name);  // throws ParseError

struct BasisExpansion {
    Basis basis = Basis::SympP;
    std::map<StrictPartition, Rational> coeffs;  // no zeros

    Rational at(const StrictPartition& lam) const {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

GammaElement basis_element(Basis b, const StrictPartition& lam);
BasisExpansion to_basis(const GammaElement& e, Basis b);
GammaElement from_basis(const BasisExpansion& x);

// P^C_mu P^C_nu in the P^C basis: the f-tilde constants.
BasisExpansion structure_constants(const StrictPartition& mu, const StrictPartition& nu);
// Skew Q^C_{lam/mu} in the Q^C basis: the d-tilde constants.
BasisExpansion coproduct_constants(const StrictPartition& lam, const StrictPartition& mu);
// Schur P_lam in the P^C basis.
BasisExpansion schurP_in_sympP(const StrictPartition& lam);
// Product of two elements of basis b, expanded in b.
BasisExpansion product_in_basis(const StrictPartition& mu, const StrictPartition& nu, Basis b);

}  // namespace sympq

#endif
