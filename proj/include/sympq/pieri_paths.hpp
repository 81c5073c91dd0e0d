#ifndef SYMPQ_PIERI_PATHS_HPP
#define SYMPQ_PIERI_PATHS_HPP

#include <map>
#include <vector>

#include "sympq/partitions.hpp"
#include "sympq/rational.hpp"
#include "sympq/trunc_series.hpp"

namespace sympq {

using ZSeries = TruncSeries<Rational>;

// Coefficient of P^C_lam in P^C_mu * P^C_(r), by the kappa-sum of 2-powers.
long pieri_closed(const StrictPartition& lam, const StrictPartition& mu, int r);
std::map<StrictPartition, long> pieri_expand(const StrictPartition& mu, int r);

// b^r_s(z) from its closed form, through z^K.
ZSeries b_series(int r, int s, int K);
// The same numbers from f_s(x) * Pi_z(x) = sum_r b^r_s(z) f_r(x), by
// expanding each z-coefficient in the f basis (one variable).
ZSeries b_series_from_f_expansion(int r, int s, int K);

// The graph G': A_{i+1} -> A_i, A_i -> B_i, A_{i+1} -> B_i (i >= 1),
// B_i -> C_i, B_i -> C_{i+1}, C_i -> C_{i+1}. Vertical steps weigh 1,
// all others z.
enum class Level { A = 0, B = 1, C = 2 };
struct Vertex {
    Level level;
    int index;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};
bool is_edge(const Vertex& from, const Vertex& to);
// Exponent of z on an edge; throws DomainError for a non-edge.
int edge_z_degree(const Vertex& from, const Vertex& to);

struct LatticePath {
    std::vector<Vertex> vertices;
    int z_degree() const;
    int b_index() const;  // the unique B vertex on the path
};

// All paths A_s -> C_r with z-degree <= max_degree.
std::vector<LatticePath> lattice_paths(int s, int r, int max_degree);

// w^r_s(z) for r >= 1 by the one-step recurrence in (r, s).
ZSeries path_weight_sum(int s, int r, int K);
// w^r_s(z) by listing paths.
ZSeries path_weight_sum_enumerated(int s, int r, int K);

// u^lam_mu(z) = det(b^{lam_i}_{beta_j}) with beta = mu, or mu with a 0
// appended when l(lam) = l(mu)+1; zero for other lengths.
ZSeries u_series(const StrictPartition& lam, const StrictPartition& mu, int K);
// The same series summed over non-intersecting path families.
ZSeries u_series_paths(const StrictPartition& lam, const StrictPartition& mu, int K);

// Number of non-intersecting families A_mu -> C_lam whose i-th path meets
// B_{kappa_i}: 2^{a(lam,kappa)+a(mu,kappa)-[l(mu)>l(kappa)]}.
// Throws DomainError unless mu and lam both interlace kappa.
long class_count(const StrictPartition& mu, const StrictPartition& lam, const StrictPartition& kappa);
long class_count_enumerated(const StrictPartition& mu, const StrictPartition& lam, const StrictPartition& kappa);

}  // namespace sympq

#endif
