#pragma once

#include <string>
#include <vector>

#include "surfalg/algebra.hpp"
#include "surfalg/mutation.hpp"

namespace surfalg {

// multiplication and coordinate helpers for a frozen algebra
struct AlgebraOps {
  const Quiver* q = nullptr;
  const RewriteSystem* rs = nullptr;
  long N = 0;
  // std monomial indices grouped as monos[src][tgt]
  std::vector<std::vector<std::vector<int>>> monos;

  Poly mul(const Poly& a, const Poly& b) const;
  std::vector<Rat> coords(const Poly& p) const;
  Poly mono(int idx) const;
  // the class of a single path
  Poly of_path(const Path& p) const;
};

AlgebraOps make_ops(const PresentedAlgebra& alg, const RewriteSystem& rs);

// two-term complex of projectives, degrees 1 and 0
struct ProjectiveComplex {
  std::vector<int> deg1, deg0;  // vertex indices of the summands
  // d[j][p]: the component P_{deg1[p]} -> P_{deg0[j]}, an element of
  // e_{deg0[j]} . A . e_{deg1[p]}
  std::vector<std::vector<Poly>> d;
};

ProjectiveComplex stalk_complex(int vertex);
ProjectiveComplex two_term_complex(int src_vertex, int tgt_vertex, const Poly& diff);

// dimension of Hom(X, Y[shift]) in the homotopy category; shift in {-1,0,1}
long chain_hom_dim(const AlgebraOps& ops, const ProjectiveComplex& X,
                   const ProjectiveComplex& Y, int shift);

// one summand per vertex of the relevant algebra, in declaration order
struct TiltingFamily {
  std::string which;  // "T_xi" | "That_xi" | "T_xi_mu"
  std::vector<ProjectiveComplex> summands;
};

TiltingFamily build_T_xi(const AlgebraOps& base_ops, const MutationData& md);
TiltingFamily build_That_xi(const AlgebraOps& mut_ops, const MutationData& md);
TiltingFamily build_T_xi_mu(const AlgebraOps& base_ops, const MutationData& md);

// left approximation: composing with f is surjective onto Hom(P_c, P_y) for
// every complement vertex y
bool approximates(const AlgebraOps& ops, int c_vertex,
                  const std::vector<std::pair<int, Poly>>& f,
                  const std::vector<int>& complement);
bool approximation_check(const AlgebraOps& ops, const MutationData& md,
                         const std::string& which);

struct TiltingReport {
  std::string which;
  bool t1_holds = false;
  long dim_end = 0;
  long dim_target = 0;
  bool cartan_match = false;
  std::vector<std::vector<long>> cartan_end;
};

TiltingReport end_algebra_summary(const AlgebraOps& ops, const TiltingFamily& fam,
                                  const std::vector<std::vector<long>>& target_cartan,
                                  long target_dim);

// comparison target for the double-mutation family: the base Cartan matrix
// read through the vertex swap c_i <-> d_i induced by mutating both ways
std::vector<std::vector<long>> t_xi_mu_target(const MutationData& md,
                                              const std::vector<std::vector<long>>& base_cartan);

}  // namespace surfalg
