#include "surfalg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "surfalg/linalg.hpp"

namespace surfalg {

std::vector<Path> PresentedAlgebra::basis_flat() const {
  std::vector<Path> all;
  for (auto& row : basis)
    for (auto& cell : row)
      for (auto& p : cell) all.push_back(p);
  return all;
}

static Path cat(const Path& a, const Path& b) {
  Path r = a;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

std::vector<Relation> wta_relations(const TriangulationQuiver& tq, const Weights& w) {
  std::vector<Relation> rels;
  const Quiver& q = tq.q;
  for (int a = 0; a < (int)q.arrows.size(); ++a) {
    int ab = tq.bar[a];
    // clause 1: a f(a) = c_{abar} A_{abar}
    {
      Path lhs;
      lhs.src = q.arrows[a].src;
      lhs.arrows = {a, tq.f[a]};
      Relation r;
      r.push_back({Rat(1), lhs});
      r.push_back({-w.c[tq.g_orbit_of[ab]], A_path(tq, w, ab)});
      rels.push_back(std::move(r));
    }
    // clause 2: a f(a) g(f(a)) = 0, with the stated exceptions
    {
      bool skip = is_virtual(tq, w, tq.f[tq.f[a]]) ||
                  (is_virtual(tq, w, tq.f[ab]) && w.m[tq.g_orbit_of[ab]] == 1 &&
                   tq.n_of(ab) == 3);
      if (!skip) {
        Path p;
        p.src = q.arrows[a].src;
        p.arrows = {a, tq.f[a], tq.g[tq.f[a]]};
        rels.push_back({{Rat(1), p}});
      }
    }
    // clause 3: a g(a) f(g(a)) = 0, with the stated exceptions
    {
      int fa = tq.f[a];
      bool skip = is_virtual(tq, w, fa) ||
                  (is_virtual(tq, w, tq.f[fa]) && w.m[tq.g_orbit_of[fa]] == 1 &&
                   tq.n_of(fa) == 3);
      if (!skip) {
        Path p;
        p.src = q.arrows[a].src;
        p.arrows = {a, tq.g[a], tq.f[tq.g[a]]};
        rels.push_back({{Rat(1), p}});
      }
    }
  }
  return rels;
}

void singular_guard(const TriangulationQuiver& tq, const Weights& w, bool allow_singular) {
  if (allow_singular) return;
  if ((int)tq.q.vertices.size() <= 3)
    throw Error(Err::PossiblySingular,
                "quiver has <= 3 vertices (possibly a singular shape); override to proceed");
  // the degenerate spherical shape: orbit sizes {4,4,2,2}, all m = 1, both
  // 2-orbits virtual, and the product of the 4-orbit parameters equal to 1
  if (tq.g_orbits.size() == 4) {
    std::vector<int> big, small;
    for (int o = 0; o < 4; ++o)
      (tq.g_orbits[o].size() == 4 ? big : small).push_back(o);
    if (big.size() == 2 && small.size() == 2 && tq.g_orbits[small[0]].size() == 2 &&
        tq.g_orbits[small[1]].size() == 2) {
      bool all_m1 = w.m[0] == 1 && w.m[1] == 1 && w.m[2] == 1 && w.m[3] == 1;
      if (all_m1 && w.c[big[0]] * w.c[big[1]] == 1)
        throw Error(Err::SingularSpherical,
                    "spherical shape with m = n = 1 and product of parameters 1; "
                    "override to proceed");
    }
  }
}

PresentedAlgebra build_wta(const TriangulationQuiver& tq, const Weights& w,
                           bool allow_singular) {
  check_assumption(tq, w);
  singular_guard(tq, w, allow_singular);
  const Quiver& q = tq.q;
  PresentedAlgebra alg;
  alg.q = q;
  alg.relations = wta_relations(tq, w);

  int nv = (int)q.vertices.size();
  alg.basis.assign(nv, std::vector<std::vector<Path>>(nv));
  alg.cartan.assign(nv, std::vector<long>(nv, 0));
  alg.socle_reps.assign(nv, Path{});

  auto put = [&](int i, const Path& p) {
    int j = p.target(q);
    alg.basis[i][j].push_back(p);
    alg.cartan[i][j]++;
    alg.dimension++;
  };

  for (int i = 0; i < nv; ++i) {
    int a0 = q.out[i][0], a1 = q.out[i][1];
    bool v0 = is_virtual(tq, w, a0), v1 = is_virtual(tq, w, a1);
    Path e;
    e.src = i;
    put(i, e);
    if (v0 || v1) {
      if (v0 && v1)
        throw Error(Err::AssumptionViolated, "two virtual arrows share a source");
      int vir = v0 ? a0 : a1, other = v0 ? a1 : a0;
      // all initial pieces of the full cycle out of the non-virtual arrow,
      // plus the virtual arrow's class written as other.f(other)
      Path b = B_path(tq, w, other);
      Path pre;
      pre.src = i;
      for (int arr : b.arrows) {
        pre.arrows.push_back(arr);
        put(i, pre);
      }
      Path vf;
      vf.src = i;
      vf.arrows = {other, tq.f[other]};
      put(i, vf);
      (void)vir;
      alg.socle_reps[i] = b;
    } else {
      // proper initial pieces of both cycles, plus one full cycle
      Path b0 = B_path(tq, w, a0), b1 = B_path(tq, w, a1);
      for (int which = 0; which < 2; ++which) {
        const Path& b = which ? b1 : b0;
        Path pre;
        pre.src = i;
        for (size_t k = 0; k + 1 < b.arrows.size(); ++k) {
          pre.arrows.push_back(b.arrows[k]);
          put(i, pre);
        }
      }
      put(i, b0);
      alg.socle_reps[i] = b0;
    }
  }

  long closed = 0;
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o) {
    long n = (long)tq.g_orbits[o].size();
    closed += w.m[o] * n * n;
  }
  if (closed != alg.dimension)
    throw Error(Err::ClosedFormMismatch,
                "basis count " + std::to_string(alg.dimension) +
                    " != closed form " + std::to_string(closed));
  return alg;
}

namespace {

std::vector<Rat> coords(const RewriteSystem& rs, const std::map<Path, int>& idx,
                        const Poly& p) {
  std::vector<Rat> v(rs.dimension, Rat(0));
  for (auto& t : p.terms) v[idx.at(t.path)] = t.coef;
  return v;
}

std::map<Path, int> std_index_map(const RewriteSystem& rs) {
  std::map<Path, int> idx;
  for (int i = 0; i < (int)rs.std_monos.size(); ++i) idx[rs.std_monos[i]] = i;
  return idx;
}

}  // namespace

SocleReport socle_check(const PresentedAlgebra& alg, const TriangulationQuiver& tq,
                        const Weights& w, const RewriteSystem& rs) {
  SocleReport rep;
  const Quiver& q = alg.q;
  auto nf = [&](const Path& p) { return rs.normal_form({{{Rat(1), p}}}); };
  auto scaled = [&](const Rat& c, const Path& p) { return rs.normal_form({{{c, p}}}); };
  auto eq = [&](const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].path == b.terms[i].path) || a.terms[i].coef != b.terms[i].coef)
        return false;
    return true;
  };
  for (int i = 0; i < (int)q.vertices.size(); ++i) {
    const Path& soc = alg.socle_reps[i];
    Poly socnf = nf(soc);
    if (socnf.zero()) {
      rep.ok = false;
      rep.notes.push_back("socle generator vanishes at vertex " + q.vertices[i]);
      continue;
    }
    // the socle is killed by every arrow on both sides
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
      if (q.arrows[a].src == i) {
        Path p = soc;  // socle rep is a cycle at i
        p.arrows.push_back(a);
        if (!nf(p).zero()) {
          rep.ok = false;
          rep.notes.push_back("socle at " + q.vertices[i] + " survives right mult by " +
                              q.arrows[a].id);
        }
      }
      if (q.arrows[a].tgt == i) {
        Path p;
        p.src = q.arrows[a].src;
        p.arrows = {a};
        p.arrows.insert(p.arrows.end(), soc.arrows.begin(), soc.arrows.end());
        if (!nf(p).zero()) {
          rep.ok = false;
          rep.notes.push_back("socle at " + q.vertices[i] + " survives left mult by " +
                              q.arrows[a].id);
        }
      }
    }
    int a0 = q.out[i][0], a1 = q.out[i][1];
    if (is_virtual(tq, w, a0) || is_virtual(tq, w, a1)) continue;
    // triple product identity at vertices with two non-virtual arrows
    for (int a : {a0, a1}) {
      Path trip;
      trip.src = i;
      trip.arrows = {a, tq.f[a], tq.f[tq.f[a]]};
      Poly lhs = nf(trip);
      Poly rhs = scaled(w.c[tq.g_orbit_of[a]], B_path(tq, w, a));
      if (!eq(lhs, rhs)) {
        rep.ok = false;
        rep.notes.push_back("triple product mismatch for arrow " + q.arrows[a].id);
      }
    }
    Poly ba = scaled(w.c[tq.g_orbit_of[a0]], B_path(tq, w, a0));
    Poly bb = scaled(w.c[tq.g_orbit_of[a1]], B_path(tq, w, a1));
    if (!eq(ba, bb)) {
      rep.ok = false;
      rep.notes.push_back("the two cycle classes differ at vertex " + q.vertices[i]);
    }
  }
  return rep;
}

Quiver gabriel_quiver(const PresentedAlgebra& alg, const RewriteSystem& rs) {
  const Quiver& q = alg.q;
  auto idx = std_index_map(rs);
  int N = (int)rs.dimension;

  // span of the square of the radical: normal forms of length-2 paths, closed
  // under right multiplication by arrows
  RowSpace rad2(N);
  std::deque<std::vector<Rat>> fresh;
  for (int a = 0; a < (int)q.arrows.size(); ++a)
    for (int b : q.out[q.arrows[a].tgt]) {
      Path p;
      p.src = q.arrows[a].src;
      p.arrows = {a, b};
      auto v = coords(rs, idx, rs.nf_path(p));
      if (rad2.add(v)) fresh.push_back(rad2.rows.back());
    }
  while (!fresh.empty()) {
    auto v = fresh.front();
    fresh.pop_front();
    for (int c = 0; c < (int)q.arrows.size(); ++c) {
      Poly prod;
      {
        std::vector<RelTerm> terms;
        for (int i = 0; i < N; ++i) {
          if (v[i] == 0) continue;
          const Path& s = rs.std_monos[i];
          if (s.target(q) != q.arrows[c].src) continue;
          Path t = s;
          t.arrows.push_back(c);
          terms.push_back({v[i], t});
        }
        prod = rs.normal_form({terms});
      }
      if (prod.zero()) continue;
      if (rad2.add(coords(rs, idx, prod))) fresh.push_back(rad2.rows.back());
    }
  }

  Quiver g;
  g.vertices = q.vertices;
  for (int a = 0; a < (int)q.arrows.size(); ++a) {
    // drop the arrow when its class is spanned by rad^2 and the other arrows
    RowSpace span = rad2;
    for (int b = 0; b < (int)q.arrows.size(); ++b) {
      if (b == a) continue;
      Path p;
      p.src = q.arrows[b].src;
      p.arrows = {b};
      span.add(coords(rs, idx, rs.nf_path(p)));
    }
    Path pa;
    pa.src = q.arrows[a].src;
    pa.arrows = {a};
    if (!span.contains(coords(rs, idx, rs.nf_path(pa))))
      g.add_arrow(q.arrows[a].id, q.arrows[a].src, q.arrows[a].tgt);
  }
  g.finish();
  return g;
}

}  // namespace surfalg
