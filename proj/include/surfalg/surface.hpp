#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "surfalg/quiver.hpp"

namespace surfalg {

// combinatorial directed triangulated surface: triangles are oriented triples
// of edge ids (cyclic order = orientation, self-folded encoded (a,a,b))
struct Surface {
  std::vector<std::string> edges;
  std::vector<std::array<std::string, 3>> triangles;
  std::vector<std::string> boundary;
};

void validate_surface(const Surface& s);

// quiver: vertices = edges; per triangle (a b c) arrows a->b, b->c, c->a with
// f cycling them; a fixed loop at each boundary edge. arrow ids "t{k}.{slot}"
// and "bnd.{edge}".
TriangulationQuiver quiver_from_surface(const Surface& s);

struct BlowUpResult {
  Surface surface;
  std::vector<std::string> I;
  // per blown-up edge: the four replacement edges (a, b, c, d)
  std::map<std::string, std::array<std::string, 4>> abcd;
};

BlowUpResult blow_up(const Surface& s, const std::vector<std::string>& I);

// transport weights: old orbits extend (same m, c), the fresh length-2 orbits
// through c_i <-> d_i get (1, 1)
Weights blow_up_weights(const Surface& base, const Weights& w, const BlowUpResult& r);

// pick the virtual arrow per blown-up edge: +1 -> c_i -> d_i, -1 -> d_i -> c_i;
// returns arrow ids in the blow-up quiver, ordered like r.I
std::vector<std::string> epsilon_to_xi(const BlowUpResult& r,
                                       const std::map<std::string, int>& eps);

// glue a self-folded triangle (i(x), i(x), x) onto each boundary edge x in X
Surface attach_self_folded_boundary(const Surface& s, const std::vector<std::string>& X);

}  // namespace surfalg
