#include "surfalg/mutation.hpp"

#include <algorithm>
#include <set>

namespace surfalg {

namespace {

// composability-checked path constructor; guards the identity suites against
// malformed products
Path mk(const Quiver& q, int src, const std::vector<int>& arrows) {
  Path p;
  p.src = src;
  int at = src;
  for (int a : arrows) {
    if (q.arrows[a].src != at)
      throw Error(Err::BadInput, "non-composable path through " + q.arrows[a].id);
    at = q.arrows[a].tgt;
    p.arrows.push_back(a);
  }
  return p;
}

Path cat(const Quiver& q, const Path& a, const Path& b) {
  std::vector<int> arrows = a.arrows;
  arrows.insert(arrows.end(), b.arrows.begin(), b.arrows.end());
  return mk(q, a.src, arrows);
}

void spherical_check(const TriangulationQuiver& tq, const Weights& w) {
  if (tq.g_orbits.size() != 4) return;
  std::vector<int> big, small;
  for (int o = 0; o < 4; ++o) (tq.g_orbits[o].size() == 4 ? big : small).push_back(o);
  if (big.size() != 2 || tq.g_orbits[small[0]].size() != 2 ||
      tq.g_orbits[small[1]].size() != 2)
    return;
  if (w.m[0] == 1 && w.m[1] == 1 && w.m[2] == 1 && w.m[3] == 1 &&
      w.c[big[0]] * w.c[big[1]] == 1)
    throw Error(Err::SingularSpherical,
                "base is the degenerate spherical instance; mutation undefined");
}

}  // namespace

MutationData build_mutated_quiver(const TriangulationQuiver& tq, const Weights& w,
                                  const std::vector<std::string>& xi_ids,
                                  bool allow_singular) {
  check_assumption(tq, w);
  const Quiver& bq = tq.q;
  if ((int)bq.vertices.size() < 4)
    throw Error(Err::TooFewVertices, "mutation needs at least 4 vertices");
  if (!allow_singular) spherical_check(tq, w);
  if (xi_ids.empty()) throw Error(Err::BadInput, "no arrows chosen for mutation");

  MutationData md;
  md.base = tq;
  md.w_orig = w;
  md.w_norm = w;

  std::vector<int> orbits_used;
  std::set<int> local_arrows;
  for (auto& id : xi_ids) {
    int xi = bq.aindex(id);
    if (xi < 0) throw Error(Err::UnknownArrow, "no arrow named " + id);
    int o = tq.g_orbit_of[xi];
    if (tq.g_orbits[o].size() != 2 || w.m[o] != 1 ||
        bq.arrows[xi].src == bq.arrows[xi].tgt)
      throw Error(Err::NotVirtualOrbit, id + " is not a virtual non-loop arrow");
    if (std::find(orbits_used.begin(), orbits_used.end(), o) != orbits_used.end())
      throw Error(Err::OrbitRepeated, "orbit of " + id + " chosen twice");
    orbits_used.push_back(o);
    md.w_norm.c[o] = 1;

    LocalAtlas at;
    at.xi = xi;
    at.mu = tq.g[xi];
    at.alpha = tq.finv[xi];
    at.delta = tq.f[xi];
    at.nu = tq.finv[at.mu];
    at.beta = tq.f[at.mu];
    at.c = bq.arrows[xi].src;
    at.d = bq.arrows[xi].tgt;
    at.a = bq.arrows[at.alpha].src;
    at.b = bq.arrows[at.beta].tgt;
    at.sigma = tq.ginv[at.alpha];
    at.rho = tq.g[at.delta];
    at.gamma = tq.g[at.beta];
    at.omega = tq.ginv[at.nu];
    if (tq.n_of(at.alpha) < 3 || tq.n_of(at.nu) < 3)
      throw Error(Err::AssumptionViolated, "surrounding orbits of " + id + " too short");
    at.alpha3 = tq.n_of(at.alpha) == 3;
    at.nu3 = tq.n_of(at.nu) == 3;
    for (int a : {at.alpha, at.beta, at.nu, at.delta, at.xi, at.mu})
      if (!local_arrows.insert(a).second)
        throw Error(Err::BadInput,
                    "overlapping mutation patches around " + bq.arrows[a].id);
    md.atlas.push_back(at);
  }
  int r = (int)md.atlas.size();

  // the surgered quiver: same vertices, the two virtual arrows of each patch
  // removed, alpha/beta reversed in place, one new arrow per patch
  md.qx.vertices = bq.vertices;
  int nb = (int)bq.arrows.size();
  md.from_base.assign(nb, -1);
  auto role = [&](int a, int LocalAtlas::*fld) {
    for (int i = 0; i < r; ++i)
      if (md.atlas[i].*fld == a) return i;
    return -1;
  };
  for (int a = 0; a < nb; ++a) {
    if (role(a, &LocalAtlas::xi) >= 0 || role(a, &LocalAtlas::mu) >= 0) continue;
    bool rev = role(a, &LocalAtlas::alpha) >= 0 || role(a, &LocalAtlas::beta) >= 0;
    int src = rev ? bq.arrows[a].tgt : bq.arrows[a].src;
    int tgt = rev ? bq.arrows[a].src : bq.arrows[a].tgt;
    int k = md.qx.add_arrow(bq.arrows[a].id, src, tgt);
    md.from_base[a] = k;
  }
  md.tau.assign(r, -1);
  for (int i = 0; i < r; ++i)
    md.tau[i] =
        md.qx.add_arrow("tau." + std::to_string(i + 1), md.atlas[i].a, md.atlas[i].b);
  md.qx.finish();
  int nq = (int)md.qx.arrows.size();
  md.to_base.assign(nq, -1);
  for (int a = 0; a < nb; ++a)
    if (md.from_base[a] >= 0) md.to_base[md.from_base[a]] = a;
  md.tau_of.assign(nq, -1);
  for (int i = 0; i < r; ++i) md.tau_of[md.tau[i]] = i;

  md.in_star.assign(nq, 1);
  for (int i = 0; i < r; ++i) {
    md.in_star[md.from_base[md.atlas[i].alpha]] = 0;
    md.in_star[md.from_base[md.atlas[i].beta]] = 0;
  }
  md.star_vertex.assign(md.qx.vertices.size(), 1);
  md.c_of.assign(md.qx.vertices.size(), -1);
  md.d_of.assign(md.qx.vertices.size(), -1);
  for (int i = 0; i < r; ++i) {
    md.star_vertex[md.atlas[i].c] = 0;
    md.c_of[md.atlas[i].c] = i;
    md.d_of[md.atlas[i].d] = i;
  }

  // successor permutation on the surviving arrows
  md.f_star.assign(nq, -1);
  for (int h = 0; h < nq; ++h) {
    if (!md.in_star[h]) continue;
    int i = md.tau_of[h];
    if (i >= 0) {
      md.f_star[h] = md.from_base[md.atlas[i].nu];
      continue;
    }
    int e = md.to_base[h];
    int inu = role(e, &LocalAtlas::nu), idel = role(e, &LocalAtlas::delta);
    if (inu >= 0)
      md.f_star[h] = md.from_base[md.atlas[inu].delta];
    else if (idel >= 0)
      md.f_star[h] = md.tau[idel];
    else {
      int fb = md.from_base[tq.f[e]];
      if (fb < 0 || !md.in_star[fb])
        throw Error(Err::BadInput, "successor of " + md.qx.arrows[h].id +
                                       " leaves the reduced quiver");
      md.f_star[h] = fb;
    }
  }
  for (int h = 0; h < nq; ++h) {
    if (!md.in_star[h]) continue;
    if (md.qx.arrows[md.f_star[h]].src != md.qx.arrows[h].tgt)
      throw Error(Err::BadInput, "successor permutation broken at " + md.qx.arrows[h].id);
    if (md.f_star[md.f_star[md.f_star[h]]] != h)
      throw Error(Err::BadInput, "successor cubes to identity fails at " +
                                     md.qx.arrows[h].id);
  }

  // pairing of arrows with the same source; self-paired at the d_i
  md.tilde.assign(nq, -1);
  for (int x = 0; x < (int)md.qx.vertices.size(); ++x) {
    if (!md.star_vertex[x]) continue;
    std::vector<int> outs;
    for (int a : md.qx.out[x])
      if (md.in_star[a]) outs.push_back(a);
    if (outs.size() == 1) {
      if (md.d_of[x] < 0)
        throw Error(Err::BadInput, "unexpected single-exit vertex " + md.qx.vertices[x]);
      md.tilde[outs[0]] = outs[0];
    } else if (outs.size() == 2) {
      md.tilde[outs[0]] = outs[1];
      md.tilde[outs[1]] = outs[0];
    } else {
      throw Error(Err::BadInput, "vertex " + md.qx.vertices[x] + " has " +
                                     std::to_string(outs.size()) + " exits");
    }
  }

  md.g_star.assign(nq, -1);
  md.g_star_inv.assign(nq, -1);
  for (int h = 0; h < nq; ++h)
    if (md.in_star[h]) md.g_star[h] = md.tilde[md.f_star[h]];
  for (int h = 0; h < nq; ++h)
    if (md.in_star[h]) md.g_star_inv[md.g_star[h]] = h;

  // orbit decomposition, deterministic: ordered and anchored by least index
  md.gs_orbit_of.assign(nq, -1);
  for (int h = 0; h < nq; ++h) {
    if (!md.in_star[h] || md.gs_orbit_of[h] >= 0) continue;
    std::vector<int> orb;
    int cur = h;
    do {
      md.gs_orbit_of[cur] = (int)md.gs_orbits.size();
      orb.push_back(cur);
      cur = md.g_star[cur];
    } while (cur != h);
    md.gs_orbits.push_back(std::move(orb));
  }

  int no = (int)md.gs_orbits.size();
  md.m_star.assign(no, 0);
  md.c_star.assign(no, Rat(0));
  md.n_nu.assign(no, 0);
  for (int o = 0; o < no; ++o) {
    long m = -1;
    Rat c;
    for (int h : md.gs_orbits[o]) {
      int e = md.to_base[h];
      if (e < 0) continue;
      int bo = tq.g_orbit_of[e];
      if (m < 0) {
        m = md.w_norm.m[bo];
        c = md.w_norm.c[bo];
      } else if (m != md.w_norm.m[bo] || c != md.w_norm.c[bo]) {
        throw Error(Err::OrbitMismatch,
                    "merged orbit inherits conflicting weights at " + md.qx.arrows[h].id);
      }
    }
    if (m < 0) {
      // orbit made of new arrows only: inherit from the smallest patch involved
      int best = -1;
      for (int h : md.gs_orbits[o])
        if (md.tau_of[h] >= 0 && (best < 0 || md.tau_of[h] < best)) best = md.tau_of[h];
      int bo = tq.g_orbit_of[md.atlas[best].alpha];
      m = md.w_norm.m[bo];
      c = md.w_norm.c[bo];
    }
    md.m_star[o] = m;
    md.c_star[o] = c;
  }
  for (int i = 0; i < r; ++i) md.n_nu[md.gs_orbit_of[md.from_base[md.atlas[i].nu]]]++;

  for (int h = 0; h < nq; ++h)
    if (md.in_star[h] && md.star_mn(h) < 2)
      throw Error(Err::AssumptionViolated,
                  "reduced orbit of " + md.qx.arrows[h].id + " has m*n* < 2");
  return md;
}

Path star_A(const MutationData& md, int qx_arrow) {
  long len = md.star_mn(qx_arrow) - 1;
  Path p;
  p.src = md.qx.arrows[qx_arrow].src;
  int cur = qx_arrow;
  for (long k = 0; k < len; ++k) {
    p.arrows.push_back(cur);
    cur = md.g_star[cur];
  }
  return p;
}

Path star_B(const MutationData& md, int qx_arrow) {
  Path p = star_A(md, qx_arrow);
  long len = md.star_mn(qx_arrow);
  p.arrows.push_back(p.arrows.empty() ? qx_arrow
                                      : md.g_star[p.arrows.back()]);
  (void)len;
  return p;
}

Path star_C_delta(const MutationData& md, int i) {
  Path a = star_A(md, md.from_base[md.atlas[i].delta]);
  Path c;
  c.src = md.qx.arrows[a.arrows[0]].tgt;
  c.arrows.assign(a.arrows.begin() + 1, a.arrows.end());
  return c;
}

Path star_A_alpha(const MutationData& md, int i) {
  Path al;
  int aq = md.from_base[md.atlas[i].alpha];
  al.src = md.qx.arrows[aq].src;
  al.arrows = {aq};
  return cat(md.qx, al, star_C_delta(md, i));
}

Path star_B_alpha(const MutationData& md, int i) {
  Path p = star_A_alpha(md, i);
  p.arrows.push_back(md.from_base[md.atlas[i].beta]);
  return mk(md.qx, p.src, p.arrows);
}

std::vector<Relation> mutation_relations(const MutationData& md, RelationAudit* audit) {
  const Quiver& q = md.qx;
  const TriangulationQuiver& tq = md.base;
  int r = (int)md.atlas.size();
  std::vector<Relation> rels;

  auto p1 = [&](int a) { return mk(q, q.arrows[a].src, {a}); };
  auto p2 = [&](int a, int b) { return mk(q, q.arrows[a].src, {a, b}); };
  auto p3 = [&](int a, int b, int c) { return mk(q, q.arrows[a].src, {a, b, c}); };
  (void)p1;

  // clause 1: the squeezed commutation relation and the two short zeros
  for (int i = 0; i < r; ++i) {
    int nu = md.from_base[md.atlas[i].nu], de = md.from_base[md.atlas[i].delta];
    int be = md.from_base[md.atlas[i].beta], al = md.from_base[md.atlas[i].alpha];
    int nt = md.tilde[nu];
    Relation r1;
    r1.push_back({Rat(1), p2(nu, de)});
    r1.push_back({Rat(-1), p2(be, al)});
    r1.push_back({-md.c_star[md.gs_orbit_of[nt]], star_A(md, nt)});
    rels.push_back(std::move(r1));
    rels.push_back({{Rat(1), p2(al, md.tau[i])}});
    rels.push_back({{Rat(1), p2(md.tau[i], be)}});
  }

  std::vector<char> is_nu(q.arrows.size(), 0), is_delta(q.arrows.size(), 0);
  for (int i = 0; i < r; ++i) {
    is_nu[md.from_base[md.atlas[i].nu]] = 1;
    is_delta[md.from_base[md.atlas[i].delta]] = 1;
  }

  // clause 2: successor products hit the long cycle, except at the nu_i
  for (int h = 0; h < (int)q.arrows.size(); ++h) {
    if (!md.in_star[h] || is_nu[h]) continue;
    int ht = md.tilde[h];
    Relation rel;
    rel.push_back({Rat(1), p2(h, md.f_star[h])});
    rel.push_back({-md.c_star[md.gs_orbit_of[ht]], star_A(md, ht)});
    rels.push_back(std::move(rel));
  }

  // clause 3: triple successor products vanish
  for (int h = 0; h < (int)q.arrows.size(); ++h) {
    if (!md.in_star[h] || is_nu[h] || md.tau_of[h] >= 0) continue;
    if (!is_delta[h]) {
      int e = md.to_base[h];
      int eb = tq.bar[e];
      bool skip = is_virtual(tq, md.w_norm, tq.f[tq.f[e]]) ||
                  (is_virtual(tq, md.w_norm, tq.f[eb]) &&
                   md.w_norm.m[tq.g_orbit_of[eb]] == 1 && tq.n_of(eb) == 3);
      if (skip) {
        if (audit) audit->triple_suppressed.push_back(q.arrows[h].id);
        continue;
      }
    }
    if (audit) audit->triple_emitted.push_back(q.arrows[h].id);
    int f1 = md.f_star[h];
    rels.push_back({{Rat(1), p3(h, f1, md.g_star[f1])}});
  }

  // clause 4: cycle-then-successor products vanish
  for (int h = 0; h < (int)q.arrows.size(); ++h) {
    if (!md.in_star[h] || is_nu[h]) continue;
    if (is_nu[md.g_star[h]]) continue;
    int i = md.tau_of[h];
    bool skip = false;
    if (i >= 0) {
      int onu = tq.g_orbit_of[md.atlas[i].nu];
      skip = md.w_norm.m[onu] == 1 && tq.n_of(md.atlas[i].nu) == 3;
    } else {
      int e = md.to_base[h];
      skip = is_virtual(tq, md.w_norm, tq.f[e]) ||
             (is_virtual(tq, md.w_norm, tq.f[tq.f[e]]) &&
              md.w_norm.m[tq.g_orbit_of[tq.f[e]]] == 1 && tq.n_of(tq.f[e]) == 3);
    }
    if (skip) {
      if (audit) audit->cycle_suppressed.push_back(q.arrows[h].id);
      continue;
    }
    if (audit) audit->cycle_emitted.push_back(q.arrows[h].id);
    int g1 = md.g_star[h];
    rels.push_back({{Rat(1), p3(h, g1, md.f_star[g1])}});
  }

  return rels;
}

namespace {

// proper initial pieces of a cycle
void add_prefixes(const Quiver& q, const Path& b, std::vector<Path>& out) {
  Path pre;
  pre.src = b.src;
  for (size_t k = 0; k + 1 < b.arrows.size(); ++k) {
    pre.arrows.push_back(b.arrows[k]);
    out.push_back(pre);
  }
  (void)q;
}

// the bypass elements: replace a non-final occurrence of nu_j by beta_j
void add_bypasses(const MutationData& md, const Path& b, std::vector<Path>& out) {
  int r = (int)md.atlas.size();
  for (size_t p = 0; p + 1 < b.arrows.size(); ++p) {
    for (int j = 0; j < r; ++j) {
      if (b.arrows[p] != md.from_base[md.atlas[j].nu]) continue;
      Path u;
      u.src = b.src;
      u.arrows.assign(b.arrows.begin(), b.arrows.begin() + p);
      u.arrows.push_back(md.from_base[md.atlas[j].beta]);
      out.push_back(mk(md.qx, u.src, u.arrows));
    }
  }
}

}  // namespace

PresentedAlgebra build_mutation(const MutationData& md) {
  const Quiver& q = md.qx;
  int nv = (int)q.vertices.size();
  PresentedAlgebra alg;
  alg.q = q;
  alg.relations = mutation_relations(md);
  alg.basis.assign(nv, std::vector<std::vector<Path>>(nv));
  alg.cartan.assign(nv, std::vector<long>(nv, 0));
  alg.socle_reps.assign(nv, Path{});

  auto put = [&](int i, const Path& p) {
    int j = p.target(q);
    alg.basis[i][j].push_back(p);
    alg.cartan[i][j]++;
    alg.dimension++;
  };

  for (int x = 0; x < nv; ++x) {
    Path e;
    e.src = x;
    std::vector<Path> items;
    Path soc;
    if (md.c_of[x] >= 0) {
      Path b = star_B_alpha(md, md.c_of[x]);
      add_prefixes(q, b, items);
      add_bypasses(md, b, items);
      items.push_back(b);
      soc = b;
    } else if (md.d_of[x] >= 0) {
      Path b = star_B(md, md.from_base[md.atlas[md.d_of[x]].delta]);
      add_prefixes(q, b, items);
      add_bypasses(md, b, items);
      items.push_back(b);
      soc = b;
    } else {
      std::vector<int> outs;
      for (int a : q.out[x])
        if (md.in_star[a]) outs.push_back(a);
      bool v0 = md.star_virtual(outs[0]), v1 = md.star_virtual(outs[1]);
      if (!v0 && !v1) {
        Path b0 = star_B(md, outs[0]), b1 = star_B(md, outs[1]);
        add_prefixes(q, b0, items);
        add_bypasses(md, b0, items);
        add_prefixes(q, b1, items);
        add_bypasses(md, b1, items);
        items.push_back(b0);
        soc = b0;
      } else {
        int eta = (!v0) ? outs[0] : outs[1];  // the non-virtual one when present
        Path b = star_B(md, eta);
        add_prefixes(q, b, items);
        add_bypasses(md, b, items);
        items.push_back(b);
        // the class of the virtual companion; the two-arrow form collides
        // with a prefix of the long cycle exactly when t(eta) is a d_i
        Path vf;
        vf.src = x;
        if (md.f_star[eta] == md.g_star[eta])
          vf.arrows = {md.tilde[eta]};
        else
          vf.arrows = {eta, md.f_star[eta]};
        items.push_back(vf);
        soc = b;
      }
    }
    put(x, e);
    std::set<Path> seen;
    seen.insert(e);
    for (auto& p : items) {
      if (!seen.insert(p).second)
        throw Error(Err::ClosedFormMismatch,
                    "duplicate basis element " + path_str(q, p));
      put(x, p);
    }
    alg.socle_reps[x] = soc;
  }

  long closed = 0;
  for (int h = 0; h < (int)q.arrows.size(); ++h) {
    if (!md.in_star[h]) continue;
    int o = md.gs_orbit_of[h];
    closed += md.m_star[o] * ((long)md.gs_orbits[o].size() + md.n_nu[o]);
  }
  for (auto& at : md.atlas) {
    int o = md.gs_orbit_of[md.from_base[at.delta]];
    closed += md.m_star[o] * ((long)md.gs_orbits[o].size() + md.n_nu[o]);
  }
  if (closed != alg.dimension)
    throw Error(Err::ClosedFormMismatch,
                "basis count " + std::to_string(alg.dimension) + " != closed form " +
                    std::to_string(closed));
  return alg;
}

PresentedAlgebra build_mutation(const TriangulationQuiver& tq, const Weights& w,
                                const std::vector<std::string>& xi_ids,
                                bool allow_singular) {
  return build_mutation(build_mutated_quiver(tq, w, xi_ids, allow_singular));
}

std::optional<std::string> not_wta_witness(const Quiver& gabriel) {
  for (int v = 0; v < (int)gabriel.vertices.size(); ++v) {
    size_t od = gabriel.out[v].size(), id = gabriel.in[v].size();
    if (od < 1 || od > 2 || id < 1 || id > 2) return gabriel.vertices[v];
  }
  return std::nullopt;
}

namespace {

Poly nf(const RewriteSystem& rs, const Rat& c, const Path& p) {
  return rs.normal_form({{{c, p}}});
}

bool poly_eq(const Poly& a, const Poly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].path == b.terms[i].path) || a.terms[i].coef != b.terms[i].coef)
      return false;
  return true;
}

}  // namespace

IdentityReport mutation_identity_suite(const MutationData& md, const RewriteSystem& rs) {
  IdentityReport rep;
  const Quiver& q = md.qx;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.notes.push_back(s);
  };

  // the two successor products of any arrow land on the same scaled cycle
  for (int h = 0; h < (int)q.arrows.size(); ++h) {
    if (!md.in_star[h]) continue;
    int f1 = md.f_star[h], f2 = md.f_star[f1];
    Poly lhs = nf(rs, Rat(1), mk(q, q.arrows[h].src, {h, f1, f2}));
    Poly cyc = nf(rs, md.c_star[md.gs_orbit_of[h]], star_B(md, h));
    if (!poly_eq(lhs, cyc)) fail("triple successor product mismatch at " + q.arrows[h].id);
    int ht = md.tilde[h];
    Poly cyt = nf(rs, md.c_star[md.gs_orbit_of[ht]], star_B(md, ht));
    if (!poly_eq(cyc, cyt)) fail("paired cycle classes differ at " + q.arrows[h].id);
  }

  for (int i = 0; i < (int)md.atlas.size(); ++i) {
    int nu = md.from_base[md.atlas[i].nu], be = md.from_base[md.atlas[i].beta];
    // extending the shortened cycles by the removed corner vanishes
    Path an = star_A_alpha(md, i);
    an.arrows.push_back(nu);
    if (!nf(rs, Rat(1), mk(q, an.src, an.arrows)).zero())
      fail("shortened cycle times nu survives in patch " + std::to_string(i + 1));
    Path ab = star_A(md, md.from_base[md.atlas[i].delta]);
    ab.arrows.push_back(be);
    if (!nf(rs, Rat(1), mk(q, ab.src, ab.arrows)).zero())
      fail("shortened cycle times beta survives in patch " + std::to_string(i + 1));
    // the corner cycle is a nonzero socle element
    Path b = star_B_alpha(md, i);
    if (nf(rs, Rat(1), b).zero())
      fail("corner cycle vanishes in patch " + std::to_string(i + 1));
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
      if (q.arrows[a].src == md.atlas[i].c) {
        Path p = b;
        p.arrows.push_back(a);
        if (!nf(rs, Rat(1), p).zero())
          fail("corner cycle survives right mult by " + q.arrows[a].id);
      }
      if (q.arrows[a].tgt == md.atlas[i].c) {
        Path p;
        p.src = q.arrows[a].src;
        p.arrows = {a};
        p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
        if (!nf(rs, Rat(1), p).zero())
          fail("corner cycle survives left mult by " + q.arrows[a].id);
      }
    }
  }
  return rep;
}

IdentityReport branch_consequences(const MutationData& md, int i,
                                         const RewriteSystem& rs) {
  const TriangulationQuiver& tq = md.base;
  const LocalAtlas& at = md.atlas[i];
  int oa = tq.g_orbit_of[at.alpha];
  if (md.w_norm.m[oa] != 1 || tq.n_of(at.alpha) != 3)
    throw Error(Err::BadInput, "branch condition m=1, n=3 does not hold here");

  IdentityReport rep;
  const Quiver& q = md.qx;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.notes.push_back(s);
  };
  auto need = [&](int base_arrow) {
    int h = md.from_base[base_arrow];
    if (h < 0)
      throw Error(Err::BadInput, "patch arrow missing from the surgered quiver");
    return h;
  };
  int nu = need(at.nu), de = need(at.delta), be = need(at.beta), al = need(at.alpha);
  int rho = need(at.rho), om = need(at.omega), ga = need(at.gamma);
  int tau = md.tau[i];
  Rat cg = md.c_star[md.gs_orbit_of[ga]];
  Rat cr = md.c_star[md.gs_orbit_of[rho]];
  Rat cn = md.c_star[md.gs_orbit_of[nu]];
  Rat cd = md.c_star[md.gs_orbit_of[de]];

  auto zero = [&](const Poly& p, const std::string& what) {
    if (!p.zero()) fail(what);
  };
  auto add = [](Poly a, const Poly& b) {
    // inputs are already normal forms; just merge term lists
    for (auto& t : b.terms) a.terms.push_back(t);
    return a;
  };
  auto P = [&](std::vector<int> arrows) {
    return nf(rs, Rat(1), mk(q, q.arrows[arrows[0]].src, arrows));
  };
  auto S = [&](const Rat& c, const Path& p) { return nf(rs, -c, p); };
  auto renf = [&](const Poly& p) { return rs.normal_form(p); };

  // (1) the commutation relation collapses to a single arrow; the outer
  //     product collapses to the new arrow
  zero(renf(add(add(P({nu, de}), nf(rs, Rat(-1), mk(q, q.arrows[be].src, {be, al}))),
                S(cg, mk(q, q.arrows[ga].src, {ga})))),
       "nu delta != beta alpha + c gamma");
  zero(renf(add(P({rho, om}), S(cg, mk(q, q.arrows[tau].src, {tau})))),
       "rho omega != c tau");
  // (2) prepended by omega
  zero(renf(add(add(P({om, nu, de}), nf(rs, Rat(-1), mk(q, q.arrows[om].src, {om, be, al}))),
                S(cg * cr, star_A(md, md.g_star[rho])))),
       "omega nu delta expansion fails");
  // (3) appended by rho
  zero(renf(add(add(P({nu, de, rho}), nf(rs, Rat(-1), mk(q, q.arrows[be].src, {be, al, rho}))),
                S(cg * cn, star_A(md, nu)))),
       "nu delta rho expansion fails");
  // (4)
  zero(renf(add(P({rho, om, nu}), S(cg * cr, star_A(md, rho)))),
       "rho omega nu expansion fails");
  zero(renf(add(P({rho, om, nu, de}), S(cr, star_B(md, rho)))),
       "rho omega nu delta is not the full cycle");
  // (5)
  zero(renf(add(P({de, rho, om}), S(cg * cd, star_A(md, de)))),
       "delta rho omega expansion fails");
  zero(renf(add(P({de, rho, om, nu}), S(cd, star_B(md, de)))),
       "delta rho omega nu is not the full cycle");
  // (6)
  zero(P({al, rho, om}), "alpha rho omega nonzero");
  zero(P({rho, om, be}), "rho omega beta nonzero");
  return rep;
}

}  // namespace surfalg
