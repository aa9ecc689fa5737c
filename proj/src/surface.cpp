#include "surfalg/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace surfalg {

void validate_surface(const Surface& s) {
  if (s.edges.size() < 2)
    throw Error(Err::InvalidSurface, "need at least two edges");
  std::set<std::string> eset;
  for (auto& e : s.edges)
    if (!eset.insert(e).second)
      throw Error(Err::InvalidSurface, "duplicate edge id '" + e + "'");
  std::map<std::string, int> occ;
  for (size_t k = 0; k < s.triangles.size(); ++k) {
    auto& t = s.triangles[k];
    if (t[0] == t[1] && t[1] == t[2])
      throw Error(Err::InvalidSurface, "triangle " + std::to_string(k) +
                                           " uses a single edge thrice");
    for (auto& e : t) {
      if (!eset.count(e))
        throw Error(Err::UnknownEdge, "triangle edge '" + e + "'");
      occ[e]++;
    }
  }
  std::set<std::string> bset;
  for (auto& e : s.boundary) {
    if (!eset.count(e)) throw Error(Err::UnknownEdge, "boundary edge '" + e + "'");
    if (!bset.insert(e).second)
      throw Error(Err::InvalidSurface, "boundary edge '" + e + "' listed twice");
  }
  // every edge sits in two triangle slots, or in one slot plus the boundary
  for (auto& e : s.edges) {
    int n = occ.count(e) ? occ[e] : 0;
    bool bnd = bset.count(e) > 0;
    if (!((n == 2 && !bnd) || (n == 1 && bnd)))
      throw Error(Err::InvalidSurface,
                  "edge '" + e + "' occurs " + std::to_string(n) + " time(s), boundary=" +
                      (bnd ? "yes" : "no"));
  }
}

TriangulationQuiver quiver_from_surface(const Surface& s) {
  validate_surface(s);
  Quiver q;
  for (auto& e : s.edges) q.add_vertex(e);
  q.finish();  // vertex lookup needed while adding arrows
  std::vector<std::pair<std::string, std::string>> f_pairs;
  for (size_t k = 0; k < s.triangles.size(); ++k) {
    auto& t = s.triangles[k];
    std::string base = "t" + std::to_string(k) + ".";
    for (int sl = 0; sl < 3; ++sl)
      q.add_arrow(base + std::to_string(sl), q.vindex(t[sl]), q.vindex(t[(sl + 1) % 3]));
    for (int sl = 0; sl < 3; ++sl)
      f_pairs.emplace_back(base + std::to_string(sl), base + std::to_string((sl + 1) % 3));
  }
  for (auto& e : s.boundary) {
    std::string id = "bnd." + e;
    q.add_arrow(id, q.vindex(e), q.vindex(e));
    f_pairs.emplace_back(id, id);
  }
  try {
    return validate_triangulation_quiver(std::move(q), f_pairs);
  } catch (const Error& err) {
    if (err.code == Err::NotTwoRegular)
      throw Error(Err::ResultNotTwoRegular, err.what());
    throw;
  }
}

BlowUpResult blow_up(const Surface& s, const std::vector<std::string>& I) {
  validate_surface(s);
  if (I.empty()) throw Error(Err::EmptyEdgeSet, "blow-up needs a nonempty edge set");
  std::set<std::string> eset(s.edges.begin(), s.edges.end());
  std::set<std::string> iset;
  for (auto& i : I) {
    if (!eset.count(i)) throw Error(Err::UnknownEdge, "blow-up edge '" + i + "'");
    if (!iset.insert(i).second) throw Error(Err::BadInput, "edge '" + i + "' repeated in I");
  }

  BlowUpResult r;
  r.surface = s;
  r.I = I;
  for (auto& i : I) {
    Surface& cur = r.surface;
    std::string a = i + ".a", b = i + ".b", c = i + ".c", d = i + ".d";
    r.abcd[i] = {a, b, c, d};
    // replace i in the edge list by a, append the rest
    *std::find(cur.edges.begin(), cur.edges.end(), i) = a;
    cur.edges.push_back(b);
    cur.edges.push_back(c);
    cur.edges.push_back(d);

    std::vector<std::pair<int, int>> hits;  // (triangle, slot)
    for (int k = 0; k < (int)cur.triangles.size(); ++k)
      for (int sl = 0; sl < 3; ++sl)
        if (cur.triangles[k][sl] == i) hits.emplace_back(k, sl);

    auto bit = std::find(cur.boundary.begin(), cur.boundary.end(), i);
    if (bit != cur.boundary.end()) {
      // boundary edge: one slot becomes a, the disc closes up with b boundary
      cur.triangles[hits[0].first][hits[0].second] = a;
      *bit = b;
    } else if (hits[0].first == hits[1].first) {
      // self-folded: rotate (i i x) so the doubled edge sits in slots r, r+1;
      // the slot hit by the arrow from x becomes b, the other a
      auto& t = cur.triangles[hits[0].first];
      int rot = -1;
      for (int sl = 0; sl < 3; ++sl)
        if (t[sl] == i && t[(sl + 1) % 3] == i) rot = sl;
      t[rot] = b;
      t[(rot + 1) % 3] = a;
    } else {
      // internal edge in two triangles: first declared occurrence becomes a
      cur.triangles[hits[0].first][hits[0].second] = a;
      cur.triangles[hits[1].first][hits[1].second] = b;
    }
    cur.triangles.push_back({a, c, d});
    cur.triangles.push_back({c, b, d});
  }
  validate_surface(r.surface);
  return r;
}

Weights blow_up_weights(const Surface& base, const Weights& w, const BlowUpResult& r) {
  TriangulationQuiver oldtq = quiver_from_surface(base);
  TriangulationQuiver newtq = quiver_from_surface(r.surface);
  if (w.m.size() != oldtq.g_orbits.size())
    throw Error(Err::OrbitMismatch, "weight data does not fit the base quiver");
  Weights nw;
  nw.m.assign(newtq.g_orbits.size(), 0);
  nw.c.assign(newtq.g_orbits.size(), 0);
  for (int o = 0; o < (int)newtq.g_orbits.size(); ++o) {
    int old_orbit = -1;
    for (int a : newtq.g_orbits[o]) {
      int oa = oldtq.q.aindex(newtq.q.arrows[a].id);
      if (oa < 0) continue;  // arrow created by the blow-up
      int oo = oldtq.g_orbit_of[oa];
      if (old_orbit != -1 && old_orbit != oo)
        throw Error(Err::OrbitMismatch, "orbit merged across distinct base orbits");
      old_orbit = oo;
    }
    if (old_orbit >= 0) {
      nw.m[o] = w.m[old_orbit];
      nw.c[o] = w.c[old_orbit];
    } else {
      // must be one of the fresh (xi_i mu_i) orbits inside a glued disc
      if (newtq.g_orbits[o].size() != 2)
        throw Error(Err::OrbitMismatch, "unexpected fresh orbit of length " +
                                            std::to_string(newtq.g_orbits[o].size()));
      nw.m[o] = 1;
      nw.c[o] = 1;
    }
  }
  return nw;
}

std::vector<std::string> epsilon_to_xi(const BlowUpResult& r,
                                       const std::map<std::string, int>& eps) {
  TriangulationQuiver tq = quiver_from_surface(r.surface);
  std::vector<std::string> xi;
  for (auto& i : r.I) {
    auto it = eps.find(i);
    if (it == eps.end())
      throw Error(Err::MissingEpsilonValue, "no epsilon for edge '" + i + "'");
    if (it->second != 1 && it->second != -1)
      throw Error(Err::BadInput, "epsilon must be +1 or -1 at '" + i + "'");
    auto& names = r.abcd.at(i);
    int c = tq.q.vindex(names[2]), d = tq.q.vindex(names[3]);
    int from = it->second == 1 ? c : d, to = it->second == 1 ? d : c;
    int found = -1;
    for (auto& ar : tq.q.arrows)
      if (ar.src == from && ar.tgt == to) found = tq.q.aindex(ar.id);
    if (found < 0) throw Error(Err::OrbitMismatch, "no virtual arrow at edge '" + i + "'");
    xi.push_back(tq.q.arrows[found].id);
  }
  return xi;
}

Surface attach_self_folded_boundary(const Surface& s, const std::vector<std::string>& X) {
  validate_surface(s);
  Surface r = s;
  for (auto& x : X) {
    auto it = std::find(r.boundary.begin(), r.boundary.end(), x);
    if (it == r.boundary.end())
      throw Error(Err::NotBoundaryEdge, "edge '" + x + "' is not a boundary edge");
    r.boundary.erase(it);
    std::string nx = "i." + x;
    r.edges.push_back(nx);
    r.triangles.push_back({nx, nx, x});
  }
  validate_surface(r);
  return r;
}

}  // namespace surfalg
