#include "surfalg/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace surfalg {

int Quiver::add_vertex(const std::string& id) {
  vertices.push_back(id);
  return (int)vertices.size() - 1;
}

int Quiver::add_arrow(const std::string& id, int src, int tgt) {
  arrows.push_back({id, src, tgt});
  return (int)arrows.size() - 1;
}

void Quiver::finish() {
  vmap.clear();
  amap.clear();
  for (int i = 0; i < (int)vertices.size(); ++i)
    if (!vmap.emplace(vertices[i], i).second)
      throw Error(Err::BadInput, "duplicate vertex id '" + vertices[i] + "'");
  for (int i = 0; i < (int)arrows.size(); ++i) {
    if (!amap.emplace(arrows[i].id, i).second)
      throw Error(Err::BadInput, "duplicate arrow id '" + arrows[i].id + "'");
    if (arrows[i].src < 0 || arrows[i].src >= (int)vertices.size() ||
        arrows[i].tgt < 0 || arrows[i].tgt >= (int)vertices.size())
      throw Error(Err::BadInput, "arrow '" + arrows[i].id + "' has bad endpoints");
  }
  out.assign(vertices.size(), {});
  in.assign(vertices.size(), {});
  for (int i = 0; i < (int)arrows.size(); ++i) {
    out[arrows[i].src].push_back(i);
    in[arrows[i].tgt].push_back(i);
  }
}

int Quiver::vindex(const std::string& id) const {
  auto it = vmap.find(id);
  return it == vmap.end() ? -1 : it->second;
}

int Quiver::aindex(const std::string& id) const {
  auto it = amap.find(id);
  return it == amap.end() ? -1 : it->second;
}

int Path::target(const Quiver& q) const {
  return arrows.empty() ? src : q.arrows[arrows.back()].tgt;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.src];
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += " ";
    s += q.arrows[p.arrows[i]].id;
  }
  return s;
}

static std::vector<std::vector<int>> perm_orbits(const std::vector<int>& p) {
  // cycles ordered by least element, each starting at its least element
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(p.size(), 0);
  for (int a = 0; a < (int)p.size(); ++a) {
    if (seen[a]) continue;
    std::vector<int> orb;
    for (int b = a; !seen[b]; b = p[b]) {
      seen[b] = 1;
      orb.push_back(b);
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

TriangulationQuiver validate_triangulation_quiver(
    Quiver q, const std::vector<std::pair<std::string, std::string>>& f_pairs) {
  q.finish();
  if ((int)q.vertices.size() < 2)
    throw Error(Err::FewerThanTwoVertices,
                "need at least 2 vertices, got " + std::to_string(q.vertices.size()));
  for (int v = 0; v < (int)q.vertices.size(); ++v)
    if (q.out[v].size() != 2 || q.in[v].size() != 2)
      throw Error(Err::NotTwoRegular, "vertex '" + q.vertices[v] + "' has out-degree " +
                                          std::to_string(q.out[v].size()) + ", in-degree " +
                                          std::to_string(q.in[v].size()));

  TriangulationQuiver tq;
  tq.f.assign(q.arrows.size(), -1);
  std::vector<int> hit(q.arrows.size(), 0);
  for (auto& [from, to] : f_pairs) {
    int a = q.aindex(from), b = q.aindex(to);
    if (a < 0) throw Error(Err::UnknownArrow, "f key '" + from + "'");
    if (b < 0) throw Error(Err::UnknownArrow, "f value '" + to + "'");
    if (tq.f[a] != -1) throw Error(Err::BadInput, "f defined twice on '" + from + "'");
    tq.f[a] = b;
    hit[b]++;
  }
  for (int a = 0; a < (int)q.arrows.size(); ++a) {
    if (tq.f[a] == -1)
      throw Error(Err::UnknownArrow, "f undefined on '" + q.arrows[a].id + "'");
    if (hit[a] != 1)
      throw Error(Err::FNotFollowingArrows,
                  "f is not a permutation at '" + q.arrows[a].id + "'");
    if (q.arrows[tq.f[a]].src != q.arrows[a].tgt)
      throw Error(Err::FNotFollowingArrows,
                  "s(f(" + q.arrows[a].id + ")) != t(" + q.arrows[a].id + ")");
  }

  tq.f_orbits = perm_orbits(tq.f);
  for (auto& orb : tq.f_orbits)
    if (orb.size() != 1 && orb.size() != 3)
      throw Error(Err::FCycleNotLength1Or3,
                  "f-cycle through '" + q.arrows[orb[0]].id + "' has length " +
                      std::to_string(orb.size()));

  // connectivity of the underlying undirected graph
  {
    std::vector<char> seen(q.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : q.out[v])
        if (!seen[q.arrows[a].tgt]) seen[q.arrows[a].tgt] = 1, stack.push_back(q.arrows[a].tgt);
      for (int a : q.in[v])
        if (!seen[q.arrows[a].src]) seen[q.arrows[a].src] = 1, stack.push_back(q.arrows[a].src);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw Error(Err::Disconnected, "underlying graph is not connected");
  }

  tq.finv.assign(q.arrows.size(), -1);
  for (int a = 0; a < (int)q.arrows.size(); ++a) tq.finv[tq.f[a]] = a;
  tq.bar.assign(q.arrows.size(), -1);
  for (int v = 0; v < (int)q.vertices.size(); ++v) {
    tq.bar[q.out[v][0]] = q.out[v][1];
    tq.bar[q.out[v][1]] = q.out[v][0];
  }
  tq.g.assign(q.arrows.size(), -1);
  for (int a = 0; a < (int)q.arrows.size(); ++a) tq.g[a] = tq.bar[tq.f[a]];
  tq.ginv.assign(q.arrows.size(), -1);
  for (int a = 0; a < (int)q.arrows.size(); ++a) tq.ginv[tq.g[a]] = a;
  tq.g_orbits = perm_orbits(tq.g);
  tq.g_orbit_of.assign(q.arrows.size(), -1);
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o)
    for (int a : tq.g_orbits[o]) tq.g_orbit_of[a] = o;

  tq.q = std::move(q);
  return tq;
}

Weights resolve_weights(const TriangulationQuiver& tq,
                        const std::vector<WeightSpecEntry>& entries) {
  Weights w;
  w.m.assign(tq.g_orbits.size(), 0);
  w.c.assign(tq.g_orbits.size(), 0);
  std::vector<char> set(tq.g_orbits.size(), 0);
  for (auto& e : entries) {
    int a = tq.q.aindex(e.rep);
    if (a < 0) throw Error(Err::UnknownArrow, "weight representative '" + e.rep + "'");
    int o = tq.g_orbit_of[a];
    if (set[o])
      throw Error(Err::OrbitMismatch, "orbit of '" + e.rep + "' weighted twice");
    if (e.m < 1) throw Error(Err::BadInput, "weight m must be >= 1 at '" + e.rep + "'");
    if (e.c == 0) throw Error(Err::BadInput, "parameter c must be nonzero at '" + e.rep + "'");
    set[o] = 1;
    w.m[o] = e.m;
    w.c[o] = e.c;
  }
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o)
    if (!set[o])
      throw Error(Err::OrbitMismatch, "no weight given for the orbit of '" +
                                          tq.q.arrows[tq.g_orbits[o][0]].id + "'");
  return w;
}

long mn(const TriangulationQuiver& tq, const Weights& w, int a) {
  return w.m[tq.g_orbit_of[a]] * (long)tq.n_of(a);
}

bool is_virtual(const TriangulationQuiver& tq, const Weights& w, int a) {
  return mn(tq, w, a) == 2;
}

void check_assumption(const TriangulationQuiver& tq, const Weights& w) {
  for (int a = 0; a < (int)tq.q.arrows.size(); ++a) {
    long v = mn(tq, w, a);
    const std::string& id = tq.q.arrows[a].id;
    if (v < 2)
      throw Error(Err::AssumptionViolated, "m n = " + std::to_string(v) + " < 2 at '" + id + "'");
    int b = tq.bar[a];
    if (is_virtual(tq, w, b)) {
      bool loop = tq.q.arrows[b].src == tq.q.arrows[b].tgt;
      if (loop && v < 4)
        throw Error(Err::AssumptionViolated,
                    "m n = " + std::to_string(v) + " < 4 at '" + id + "' (virtual loop companion)");
      if (!loop && v < 3)
        throw Error(Err::AssumptionViolated,
                    "m n = " + std::to_string(v) + " < 3 at '" + id + "' (virtual companion)");
    }
  }
}

static Path g_run(const TriangulationQuiver& tq, int a, long len) {
  Path p;
  p.src = tq.q.arrows[a].src;
  p.arrows.reserve(len);
  int cur = a;
  for (long i = 0; i < len; ++i) {
    p.arrows.push_back(cur);
    cur = tq.g[cur];
  }
  return p;
}

Path A_path(const TriangulationQuiver& tq, const Weights& w, int a) {
  return g_run(tq, a, mn(tq, w, a) - 1);
}

Path B_path(const TriangulationQuiver& tq, const Weights& w, int a) {
  return g_run(tq, a, mn(tq, w, a));
}

Path Aprime_path(const TriangulationQuiver& tq, const Weights& w, int a) {
  if (tq.n_of(a) < 3)
    throw Error(Err::APrimeUndefined,
                "A' needs an orbit of length >= 3 at '" + tq.q.arrows[a].id + "'");
  return g_run(tq, a, mn(tq, w, a) - 2);
}

}  // namespace surfalg
