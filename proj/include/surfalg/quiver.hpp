#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "surfalg/error.hpp"
#include "surfalg/rat.hpp"

namespace surfalg {

struct Arrow {
  std::string id;
  int src = -1;
  int tgt = -1;
};

// plain quiver with opaque string ids; all orderings are declaration order
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  // derived lookup tables, filled by finish()
  std::unordered_map<std::string, int> vmap, amap;
  std::vector<std::vector<int>> out, in;  // arrow indices per vertex

  int add_vertex(const std::string& id);
  int add_arrow(const std::string& id, int src, int tgt);
  void finish();  // rebuilds the lookup tables; throws BadInput on duplicate ids

  int vindex(const std::string& id) const;  // -1 when absent
  int aindex(const std::string& id) const;
};

// path = source vertex plus a composable arrow sequence (source needed for
// stationary paths); equality is structural
struct Path {
  int src = -1;
  std::vector<int> arrows;

  int length() const { return (int)arrows.size(); }
  int target(const Quiver& q) const;
  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
  bool operator<(const Path& o) const {
    if (src != o.src) return src < o.src;
    return arrows < o.arrows;
  }
};

std::string path_str(const Quiver& q, const Path& p);

// one defining relation: a linear combination of parallel paths, read as = 0
struct RelTerm {
  Rat coef;
  Path path;
};
using Relation = std::vector<RelTerm>;

// validated triangulation quiver: connected, 2-regular, f a permutation with
// s(f(a)) = t(a) and all f-cycles of length 1 or 3
struct TriangulationQuiver {
  Quiver q;
  std::vector<int> f, finv;  // arrow permutations
  std::vector<int> bar;      // the other arrow with the same source
  std::vector<int> g, ginv;  // g = bar . f
  std::vector<std::vector<int>> f_orbits;
  std::vector<std::vector<int>> g_orbits;  // deterministic: ordered by least arrow
  std::vector<int> g_orbit_of;             // arrow index -> g-orbit index

  int n_of(int a) const { return (int)g_orbits[g_orbit_of[a]].size(); }
};

TriangulationQuiver validate_triangulation_quiver(
    Quiver q, const std::vector<std::pair<std::string, std::string>>& f_pairs);

// weight m >= 1 and parameter c != 0 per g-orbit
struct Weights {
  std::vector<long> m;
  std::vector<Rat> c;
};

struct WeightSpecEntry {
  std::string rep;  // any arrow id of the orbit
  long m = 1;
  Rat c = 1;
};

// resolve per-orbit data from representative arrows; each orbit exactly once
Weights resolve_weights(const TriangulationQuiver& tq,
                        const std::vector<WeightSpecEntry>& entries);

long mn(const TriangulationQuiver& tq, const Weights& w, int a);
bool is_virtual(const TriangulationQuiver& tq, const Weights& w, int a);

// the standing weight admissibility conditions; throws AssumptionViolated
void check_assumption(const TriangulationQuiver& tq, const Weights& w);

// the distinguished cycles out of an arrow:
//   A(a) = a g(a) ... g^{mn-2}(a)      (length mn-1)
//   B(a) = a g(a) ... g^{mn-1}(a)      (length mn)
//   A'(a) = a g(a) ... g^{mn-3}(a)     (length mn-2, needs n >= 3)
Path A_path(const TriangulationQuiver& tq, const Weights& w, int a);
Path B_path(const TriangulationQuiver& tq, const Weights& w, int a);
Path Aprime_path(const TriangulationQuiver& tq, const Weights& w, int a);

}  // namespace surfalg
