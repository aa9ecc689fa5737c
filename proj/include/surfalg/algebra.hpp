#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfalg/groebner.hpp"
#include "surfalg/quiver.hpp"

namespace surfalg {

// a finite dimensional algebra presented by quiver + relations, carrying the
// closed-form basis, dimension, Cartan matrix and socle generators
struct PresentedAlgebra {
  Quiver q;
  std::vector<Relation> relations;
  // basis[i][j] = ordered list of basis paths from vertex i to vertex j
  std::vector<std::vector<std::vector<Path>>> basis;
  long dimension = 0;
  std::vector<std::vector<long>> cartan;
  std::vector<Path> socle_reps;  // one per vertex

  std::vector<Path> basis_flat() const;
};

// relations of the weighted triangulation algebra for (tq, w)
std::vector<Relation> wta_relations(const TriangulationQuiver& tq, const Weights& w);

// guard against the degenerate shapes excluded by the theory; throws
// PossiblySingular unless allow_singular
void singular_guard(const TriangulationQuiver& tq, const Weights& w, bool allow_singular);

PresentedAlgebra build_wta(const TriangulationQuiver& tq, const Weights& w,
                           bool allow_singular = false);

// oracle-backed checks
struct SocleReport {
  bool ok = true;
  std::vector<std::string> notes;  // witnesses on failure
};
SocleReport socle_check(const PresentedAlgebra& alg, const TriangulationQuiver& tq,
                        const Weights& w, const RewriteSystem& rs);

// arrows whose class lies in rad^2 get removed
Quiver gabriel_quiver(const PresentedAlgebra& alg, const RewriteSystem& rs);

}  // namespace surfalg
