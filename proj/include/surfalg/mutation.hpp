#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfalg/algebra.hpp"
#include "surfalg/quiver.hpp"

namespace surfalg {

// the local subquiver around one chosen virtual arrow (base-quiver indices)
struct LocalAtlas {
  int xi, mu;                         // the virtual orbit, xi the chosen arrow
  int alpha, beta, nu, delta;         // f-orbits (alpha xi delta), (beta nu mu)
  int sigma, rho, gamma, omega;       // surrounding arrows of the patch
  int a, b, c, d;                     // base vertices
  bool alpha3 = false;                // |O(alpha)| == 3  (then gamma == sigma)
  bool nu3 = false;                   // |O(nu)| == 3     (then rho == omega)
};

// everything needed to present the mutated algebra
struct MutationData {
  TriangulationQuiver base;
  Weights w_orig;   // as supplied
  Weights w_norm;   // with the chosen orbits' parameters rescaled to 1
  std::vector<LocalAtlas> atlas;

  Quiver qx;                    // the surgered quiver
  std::vector<int> to_base;     // qx arrow -> base arrow, -1 for the new arrows
  std::vector<int> from_base;   // base arrow -> qx arrow, -1 when removed
  std::vector<int> tau;         // i -> qx arrow index
  std::vector<int> tau_of;      // qx arrow -> i, -1 otherwise

  std::vector<char> in_star;    // qx arrow: survives into the reduced quiver
  std::vector<char> star_vertex;  // qx vertex: not one of the c_i
  std::vector<int> c_of, d_of;    // qx vertex -> patch index, -1 otherwise

  std::vector<int> tilde, f_star, g_star, g_star_inv;  // on star arrows, else -1
  std::vector<std::vector<int>> gs_orbits;
  std::vector<int> gs_orbit_of;  // qx arrow -> orbit, -1 for non-star
  std::vector<long> m_star;      // per orbit
  std::vector<Rat> c_star;
  std::vector<int> n_nu;         // per orbit: how many nu_i lie in it

  long star_mn(int qx_arrow) const {
    return m_star[gs_orbit_of[qx_arrow]] * (long)gs_orbits[gs_orbit_of[qx_arrow]].size();
  }
  bool star_virtual(int qx_arrow) const { return star_mn(qx_arrow) == 2; }
};

MutationData build_mutated_quiver(const TriangulationQuiver& tq, const Weights& w,
                                  const std::vector<std::string>& xi_ids,
                                  bool allow_singular = false);

// distinguished cycles in the surgered quiver
Path star_A(const MutationData& md, int qx_arrow);   // length m*n* - 1
Path star_B(const MutationData& md, int qx_arrow);   // length m*n*
Path star_C_delta(const MutationData& md, int i);    // A*_delta without its head
Path star_A_alpha(const MutationData& md, int i);    // alpha C*
Path star_B_alpha(const MutationData& md, int i);    // alpha C* beta

// which arrows got a length-3 zero relation of each kind, and which were
// exempted by the virtual-neighbour conditions (for audit dumps)
struct RelationAudit {
  std::vector<std::string> triple_emitted, triple_suppressed;
  std::vector<std::string> cycle_emitted, cycle_suppressed;
};

std::vector<Relation> mutation_relations(const MutationData& md,
                                         RelationAudit* audit = nullptr);

PresentedAlgebra build_mutation(const TriangulationQuiver& tq, const Weights& w,
                                const std::vector<std::string>& xi_ids,
                                bool allow_singular = false);
PresentedAlgebra build_mutation(const MutationData& md);

// a vertex of the Gabriel quiver whose degree rules out the original shape
std::optional<std::string> not_wta_witness(const Quiver& gabriel);

struct IdentityReport {
  bool ok = true;
  std::vector<std::string> notes;
};

// oracle checks of the derived identities in the mutated algebra: socle
// products, the vanishing products around each patch, and the branch
// identities where m_{alpha_i} = 1 and |O(alpha_i)| = 3
IdentityReport mutation_identity_suite(const MutationData& md, const RewriteSystem& rs);
IdentityReport branch_consequences(const MutationData& md, int i,
                                         const RewriteSystem& rs);

}  // namespace surfalg
