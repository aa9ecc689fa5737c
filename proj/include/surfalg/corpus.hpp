#pragma once

// the bundled example family: programmatic builders for the shapes used by the
// regression suite and the tests, plus their expected dimensions and Cartan
// matrices as closed formulas in the weight parameters

#include <map>
#include <string>
#include <vector>

#include "surfalg/algebra.hpp"
#include "surfalg/mutation.hpp"
#include "surfalg/quiver.hpp"
#include "surfalg/surface.hpp"

namespace surfalg::corpus {

inline Surface disc_surface() {
  Surface s;
  s.edges = {"1", "2", "3", "4"};
  s.triangles = {{"1", "2", "4"}, {"2", "3", "4"}};
  s.boundary = {"1", "3"};
  return s;
}

// weights: the long orbits get (m, lam) -- or only the orbit of rep when one
// is named -- and every other orbit gets (1, 1)
inline Weights default_weights(const TriangulationQuiver& tq, long m, const Rat& lam,
                               const std::string& rep = "") {
  Weights w;
  int big = -1;
  if (!rep.empty()) big = tq.g_orbit_of[tq.q.aindex(rep)];
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o) {
    bool hit = (big >= 0) ? (o == big) : tq.g_orbits[o].size() > 2;
    w.m.push_back(hit ? m : 1);
    w.c.push_back(hit ? lam : Rat(1));
  }
  return w;
}

inline TriangulationQuiver disc_quiver() { return quiver_from_surface(disc_surface()); }

// the five-vertex quiver with a boundary loop, entered directly
inline TriangulationQuiver pentagon_quiver() {
  Quiver q;
  for (auto v : {"1", "2", "3", "4", "5"}) q.add_vertex(v);
  q.finish();
  auto A = [&](const char* id, const char* s, const char* t) {
    q.add_arrow(id, q.vindex(s), q.vindex(t));
  };
  A("alpha", "1", "2");
  A("beta", "2", "3");
  A("gamma", "3", "4");
  A("rho", "4", "4");
  A("sigma", "4", "1");
  A("eps", "1", "3");
  A("nu", "3", "5");
  A("delta", "5", "1");
  A("xi", "2", "5");
  A("mu", "5", "2");
  std::vector<std::pair<std::string, std::string>> f = {
      {"alpha", "xi"}, {"xi", "delta"}, {"delta", "alpha"}, {"beta", "nu"},
      {"nu", "mu"},    {"mu", "beta"},  {"eps", "gamma"},   {"gamma", "sigma"},
      {"sigma", "eps"}, {"rho", "rho"}};
  return validate_triangulation_quiver(q, f);
}

inline Weights pentagon_weights(const TriangulationQuiver& tq, long m, const Rat& lam) {
  // (m, lam) on the 5-cycle orbit of alpha; (1,1) on the other two
  Weights w;
  int big = tq.g_orbit_of[tq.q.aindex("alpha")];
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o) {
    w.m.push_back(o == big ? m : 1);
    w.c.push_back(o == big ? lam : Rat(1));
  }
  return w;
}

inline Surface sphere_surface() {
  Surface s;
  s.edges = {"1", "2", "3", "4", "5", "6"};
  s.triangles = {{"1", "2", "5"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "1", "6"}};
  return s;
}

// weights (m,a) on the orbit of t0.0, (n,b) on the other long orbit
inline Weights sphere_weights(const TriangulationQuiver& tq, long m, long n, const Rat& a,
                              const Rat& b) {
  Weights w(default_weights(tq, 1, 1));
  int first = tq.g_orbit_of[tq.q.aindex("t0.0")];
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o) {
    if (tq.g_orbits[o].size() <= 2) continue;
    if (o == first) {
      w.m[o] = m;
      w.c[o] = a;
    } else {
      w.m[o] = n;
      w.c[o] = b;
    }
  }
  return w;
}

inline Surface torus_surface() {
  Surface s;
  s.edges = {"1", "2", "3"};
  s.triangles = {{"1", "2", "3"}, {"1", "2", "3"}};
  return s;
}

inline Surface selffolded3_surface() {
  Surface s;
  s.edges = {"1", "2", "3", "4", "5", "6"};
  s.triangles = {{"1", "1", "4"}, {"2", "2", "5"}, {"3", "3", "6"}, {"4", "5", "6"}};
  return s;
}

// weights for the triple self-folded example: loop orbits get (m, 1), the long
// orbit gets (1, lam), any leftover length-2 orbit gets (1, 1)
inline Weights selffolded3_weights(const TriangulationQuiver& tq, long m, const Rat& lam) {
  Weights w;
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o) {
    size_t sz = tq.g_orbits[o].size();
    int a = tq.g_orbits[o][0];
    bool loop = sz == 1 && tq.q.arrows[a].src == tq.q.arrows[a].tgt;
    if (loop) {
      w.m.push_back(m);
      w.c.push_back(1);
    } else if (sz > 2) {
      w.m.push_back(1);
      w.c.push_back(lam);
    } else {
      w.m.push_back(1);
      w.c.push_back(1);
    }
  }
  return w;
}

// ---- expected invariants, as closed formulas in the weight parameters ----

using Mat = std::vector<std::vector<long>>;

inline long disc_dim(long m) { return 36 * m + 4; }
inline long disc_mut_dim(long m) { return 36 * m; }
inline long pentagon_dim(long m) { return 25 * m + 13; }
inline long pentagon_xi_dim(long m) { return 16 * m + 16; }
inline long pentagon_mu_dim(long m) { return 36 * m + 4; }
inline long sphere_dim(long m, long n) { return 16 * (m + n) + 8; }
inline long sphere_xi_dim(long m, long n) { return 9 * m + 25 * n + 4; }
inline long sphere_xi_eta_dim(long m, long n) { return 4 * m + 36 * n; }
inline long sphere_xi_zeta_dim(long m, long n) { return 16 * (m + n); }
inline long selffolded3_dim(long m) { return 3 * m + 81; }
inline long selffolded3_blown_dim(long m) { return 27 * m + 237; }
inline long selffolded3_deformed_dim(long m) { return 24 * m + 256; }
inline long torus_dim() { return 36; }
inline long torus_blown_dim() { return 204; }
inline long torus_deformed_dim() { return 196; }

inline Mat disc_cartan(long m) {
  return {{4 * m, 2 * m, 4 * m, 2 * m},
          {2 * m, m + 1, 2 * m, m + 1},
          {4 * m, 2 * m, 4 * m, 2 * m},
          {2 * m, m + 1, 2 * m, m + 1}};
}

inline Mat disc_mut_cartan(long m) {
  return {{4 * m, 2 * m, 4 * m, 2 * m},
          {2 * m, m + 1, 2 * m, m - 1},
          {4 * m, 2 * m, 4 * m, 2 * m},
          {2 * m, m - 1, 2 * m, m + 1}};
}

inline Mat pentagon_cartan(long m) {
  return {{m + 1, m, m + 1, 2 * m, 1},
          {m, m + 1, m, 2 * m, 1},
          {m + 1, m, m + 1, 2 * m, 1},
          {2 * m, 2 * m, 2 * m, 4 * m, 0},
          {1, 1, 1, 0, 2}};
}

inline Mat pentagon_xi_cartan(long m) {
  return {{m + 1, 1, m + 1, 2 * m, 1},
          {1, 2, 1, 0, 0},
          {m + 1, 1, m + 1, 2 * m, 1},
          {2 * m, 0, 2 * m, 4 * m, 0},
          {1, 0, 1, 0, 2}};
}

inline Mat pentagon_mu_cartan(long m) {
  return {{m + 1, m, m + 1, 2 * m, m},
          {m, m + 1, m, 2 * m, m - 1},
          {m + 1, m, m + 1, 2 * m, m},
          {2 * m, 2 * m, 2 * m, 4 * m, 2 * m},
          {m, m - 1, m, 2 * m, m + 1}};
}

}  // namespace surfalg::corpus
