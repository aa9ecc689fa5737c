#include "surfalg/tilting.hpp"

#include <algorithm>
#include <map>

#include "surfalg/linalg.hpp"

namespace surfalg {

namespace {
std::map<Path, int> index_map(const RewriteSystem& rs) {
  std::map<Path, int> m;
  for (int i = 0; i < (int)rs.std_monos.size(); ++i) m[rs.std_monos[i]] = i;
  return m;
}
}  // namespace

// mono index tables kept in a side table keyed by the rewrite system pointer;
// a small map avoids touching the public header
static std::map<const RewriteSystem*, std::map<Path, int>> g_idx;

AlgebraOps make_ops(const PresentedAlgebra& alg, const RewriteSystem& rs) {
  AlgebraOps ops;
  ops.q = &alg.q;
  ops.rs = &rs;
  ops.N = rs.dimension;
  int nv = (int)alg.q.vertices.size();
  ops.monos.assign(nv, std::vector<std::vector<int>>(nv));
  for (int i = 0; i < (int)rs.std_monos.size(); ++i) {
    const Path& p = rs.std_monos[i];
    ops.monos[p.src][p.target(alg.q)].push_back(i);
  }
  g_idx[&rs] = index_map(rs);
  return ops;
}

Poly AlgebraOps::mul(const Poly& a, const Poly& b) const {
  std::vector<RelTerm> terms;
  for (auto& t : a.terms)
    for (auto& u : b.terms) {
      if (t.path.target(*q) != u.path.src) continue;
      Path p = t.path;
      p.arrows.insert(p.arrows.end(), u.path.arrows.begin(), u.path.arrows.end());
      terms.push_back({t.coef * u.coef, p});
    }
  return rs->normal_form({terms});
}

std::vector<Rat> AlgebraOps::coords(const Poly& p) const {
  std::vector<Rat> v(N, Rat(0));
  auto& idx = g_idx.at(rs);
  for (auto& t : p.terms) v[idx.at(t.path)] = t.coef;
  return v;
}

Poly AlgebraOps::mono(int i) const { return {{{Rat(1), rs->std_monos[i]}}}; }

Poly AlgebraOps::of_path(const Path& p) const { return rs->normal_form({{{Rat(1), p}}}); }

ProjectiveComplex stalk_complex(int vertex) {
  ProjectiveComplex c;
  c.deg0 = {vertex};
  return c;
}

ProjectiveComplex two_term_complex(int src_vertex, int tgt_vertex, const Poly& diff) {
  ProjectiveComplex c;
  c.deg1 = {src_vertex};
  c.deg0 = {tgt_vertex};
  c.d = {{diff}};
  return c;
}

namespace {

// description of a space of maps between the summand lists `from` and `to`:
// one block per (to-summand, from-summand) pair, coordinates over the std
// monomials of e_{to} A e_{from}
struct MapSpace {
  std::vector<std::pair<int, int>> blocks;  // (to index, from index)
  std::vector<std::pair<int, int>> units;   // (block, std mono index)
  std::vector<int> block_of_pair;           // to * nfrom + from -> block

  MapSpace(const AlgebraOps& ops, const std::vector<int>& to,
           const std::vector<int>& from) {
    block_of_pair.assign(to.size() * std::max<size_t>(from.size(), 1), -1);
    for (int t = 0; t < (int)to.size(); ++t)
      for (int f = 0; f < (int)from.size(); ++f) {
        int b = (int)blocks.size();
        block_of_pair[t * from.size() + f] = b;
        blocks.push_back({t, f});
        for (int m : ops.monos[to[t]][from[f]]) units.push_back({b, m});
      }
  }
  int dim() const { return (int)units.size(); }
};

// accumulate a value into the stacked coordinate vector of a map space
void acc(const AlgebraOps& ops, std::vector<Rat>& vec, const MapSpace& sp, int to,
         int from, int nfrom, const Poly& val) {
  int b = sp.block_of_pair[to * nfrom + from];
  auto c = ops.coords(val);
  for (long i = 0; i < ops.N; ++i) vec[(long)b * ops.N + i] += c[i];
}

}  // namespace

long chain_hom_dim(const AlgebraOps& ops, const ProjectiveComplex& X,
                   const ProjectiveComplex& Y, int shift) {
  if (shift < -1 || shift > 1)
    throw Error(Err::UnsupportedShift, "only shifts -1, 0, 1 are supported");
  auto dX = [&](int j, int p) { return X.d[j][p]; };
  auto dY = [&](int j, int p) { return Y.d[j][p]; };
  int nX0 = (int)X.deg0.size(), nX1 = (int)X.deg1.size();
  int nY0 = (int)Y.deg0.size(), nY1 = (int)Y.deg1.size();

  if (shift == 0) {
    MapSpace s0(ops, Y.deg0, X.deg0), s1(ops, Y.deg1, X.deg1);
    MapSpace cons(ops, Y.deg0, X.deg1);
    long U = s0.dim() + s1.dim();
    RowSpace rk((int)(cons.blocks.size() * ops.N));
    long rank = 0;
    auto img = [&](bool from_s0, int block, int m) {
      std::vector<Rat> v(cons.blocks.size() * ops.N, Rat(0));
      Poly u = ops.mono(m);
      if (from_s0) {
        auto [q0, j] = s0.blocks[block];
        for (int p = 0; p < nX1; ++p)
          acc(ops, v, cons, q0, p, nX1, ops.mul(u, dX(j, p)));
      } else {
        auto [q1, p] = s1.blocks[block];
        for (int q0 = 0; q0 < nY0; ++q0) {
          Poly t = ops.mul(dY(q0, q1), u);
          for (auto& tt : t.terms) tt.coef = -tt.coef;
          acc(ops, v, cons, q0, p, nX1, t);
        }
      }
      if (rk.add(std::move(v))) ++rank;
    };
    for (auto& [b, m] : s0.units) img(true, b, m);
    for (auto& [b, m] : s1.units) img(false, b, m);
    long chain = U - rank;

    // null-homotopic chain maps
    MapSpace hs(ops, Y.deg1, X.deg0);
    RowSpace hk((int)((s0.blocks.size() + s1.blocks.size()) * ops.N));
    long hrank = 0;
    for (auto& [b, m] : hs.units) {
      auto [q1, j] = hs.blocks[b];
      std::vector<Rat> v((s0.blocks.size() + s1.blocks.size()) * ops.N, Rat(0));
      Poly u = ops.mono(m);
      for (int q0 = 0; q0 < nY0; ++q0) {
        int blk = s0.block_of_pair[q0 * nX0 + j];
        auto c = ops.coords(ops.mul(dY(q0, q1), u));
        for (long i = 0; i < ops.N; ++i) v[(long)blk * ops.N + i] += c[i];
      }
      for (int p = 0; p < nX1; ++p) {
        int blk = s1.block_of_pair[q1 * nX1 + p];
        auto c = ops.coords(ops.mul(u, dX(j, p)));
        for (long i = 0; i < ops.N; ++i)
          v[(s0.blocks.size() + (long)blk) * ops.N + i] += c[i];
      }
      if (hk.add(std::move(v))) ++hrank;
    }
    return chain - hrank;
  }

  if (shift == 1) {
    // maps X1 -> Y0 modulo dY.Hom(X1,Y1) + Hom(X0,Y0).dX
    MapSpace psi(ops, Y.deg0, X.deg1);
    MapSpace gs(ops, Y.deg1, X.deg1), ks(ops, Y.deg0, X.deg0);
    RowSpace rk((int)(psi.blocks.size() * ops.N));
    long rank = 0;
    for (auto& [b, m] : gs.units) {
      auto [q1, p] = gs.blocks[b];
      std::vector<Rat> v(psi.blocks.size() * ops.N, Rat(0));
      Poly u = ops.mono(m);
      for (int q0 = 0; q0 < nY0; ++q0)
        acc(ops, v, psi, q0, p, nX1, ops.mul(dY(q0, q1), u));
      if (rk.add(std::move(v))) ++rank;
    }
    for (auto& [b, m] : ks.units) {
      auto [q0, j] = ks.blocks[b];
      std::vector<Rat> v(psi.blocks.size() * ops.N, Rat(0));
      Poly u = ops.mono(m);
      for (int p = 0; p < nX1; ++p)
        acc(ops, v, psi, q0, p, nX1, ops.mul(u, dX(j, p)));
      if (rk.add(std::move(v))) ++rank;
    }
    return psi.dim() - rank;
  }

  // shift == -1: maps X0 -> Y1 with both composites zero, no homotopies
  MapSpace phi(ops, Y.deg1, X.deg0);
  MapSpace c1(ops, Y.deg0, X.deg0), c2(ops, Y.deg1, X.deg1);
  RowSpace rk((int)((c1.blocks.size() + c2.blocks.size()) * ops.N));
  long rank = 0;
  for (auto& [b, m] : phi.units) {
    auto [q1, j] = phi.blocks[b];
    std::vector<Rat> v((c1.blocks.size() + c2.blocks.size()) * ops.N, Rat(0));
    Poly u = ops.mono(m);
    for (int q0 = 0; q0 < nY0; ++q0) {
      int blk = c1.block_of_pair[q0 * nX0 + j];
      auto c = ops.coords(ops.mul(dY(q0, q1), u));
      for (long i = 0; i < ops.N; ++i) v[(long)blk * ops.N + i] += c[i];
    }
    for (int p = 0; p < nX1; ++p) {
      int blk = c2.block_of_pair[q1 * nX1 + p];
      auto c = ops.coords(ops.mul(u, dX(j, p)));
      for (long i = 0; i < ops.N; ++i)
        v[(c1.blocks.size() + (long)blk) * ops.N + i] += c[i];
    }
    if (rk.add(std::move(v))) ++rank;
  }
  return phi.dim() - rank;
}

namespace {
Poly arrow_class(const AlgebraOps& ops, int arrow) {
  Path p;
  p.src = ops.q->arrows[arrow].src;
  p.arrows = {arrow};
  return ops.of_path(p);
}
}  // namespace

TiltingFamily build_T_xi(const AlgebraOps& base_ops, const MutationData& md) {
  TiltingFamily fam;
  fam.which = "T_xi";
  int nv = (int)md.base.q.vertices.size();
  std::vector<int> patch(nv, -1);
  for (int i = 0; i < (int)md.atlas.size(); ++i) patch[md.atlas[i].c] = i;
  for (int x = 0; x < nv; ++x) {
    if (patch[x] < 0) {
      fam.summands.push_back(stalk_complex(x));
    } else {
      const LocalAtlas& at = md.atlas[patch[x]];
      fam.summands.push_back(two_term_complex(x, at.a, arrow_class(base_ops, at.alpha)));
    }
  }
  return fam;
}

TiltingFamily build_That_xi(const AlgebraOps& mut_ops, const MutationData& md) {
  TiltingFamily fam;
  fam.which = "That_xi";
  int nv = (int)md.qx.vertices.size();
  for (int x = 0; x < nv; ++x) {
    int i = md.c_of[x];
    if (i < 0) {
      fam.summands.push_back(stalk_complex(x));
    } else {
      int be = md.from_base[md.atlas[i].beta];
      fam.summands.push_back(
          two_term_complex(x, md.atlas[i].b, arrow_class(mut_ops, be)));
    }
  }
  return fam;
}

TiltingFamily build_T_xi_mu(const AlgebraOps& base_ops, const MutationData& md) {
  TiltingFamily fam;
  fam.which = "T_xi_mu";
  int nv = (int)md.base.q.vertices.size();
  std::vector<int> cpatch(nv, -1), dpatch(nv, -1);
  for (int i = 0; i < (int)md.atlas.size(); ++i) {
    cpatch[md.atlas[i].c] = i;
    dpatch[md.atlas[i].d] = i;
  }
  for (int x = 0; x < nv; ++x) {
    if (cpatch[x] >= 0) {
      const LocalAtlas& at = md.atlas[cpatch[x]];
      fam.summands.push_back(two_term_complex(x, at.a, arrow_class(base_ops, at.alpha)));
    } else if (dpatch[x] >= 0) {
      const LocalAtlas& at = md.atlas[dpatch[x]];
      fam.summands.push_back(two_term_complex(x, at.b, arrow_class(base_ops, at.nu)));
    } else {
      fam.summands.push_back(stalk_complex(x));
    }
  }
  return fam;
}

bool approximates(const AlgebraOps& ops, int c_vertex,
                  const std::vector<std::pair<int, Poly>>& f,
                  const std::vector<int>& complement) {
  for (int y : complement) {
    long want = (long)ops.monos[y][c_vertex].size();
    if (want == 0) continue;
    RowSpace rk((int)ops.N);
    long rank = 0;
    for (auto& [v, x] : f)
      for (int m : ops.monos[y][v])
        if (rk.add(ops.coords(ops.mul(ops.mono(m), x)))) ++rank;
    if (rank < want) return false;
  }
  return true;
}

bool approximation_check(const AlgebraOps& ops, const MutationData& md,
                         const std::string& which) {
  int r = (int)md.atlas.size();
  if (which == "That_xi") {
    std::vector<int> comp;
    for (int x = 0; x < (int)md.qx.vertices.size(); ++x)
      if (md.c_of[x] < 0) comp.push_back(x);
    for (int i = 0; i < r; ++i) {
      int be = md.from_base[md.atlas[i].beta];
      if (!approximates(ops, md.atlas[i].c, {{md.atlas[i].b, arrow_class(ops, be)}},
                        comp))
        return false;
    }
    return true;
  }
  std::vector<char> excl(md.base.q.vertices.size(), 0);
  for (auto& at : md.atlas) {
    excl[at.c] = 1;
    if (which == "T_xi_mu") excl[at.d] = 1;
  }
  std::vector<int> comp;
  for (int x = 0; x < (int)md.base.q.vertices.size(); ++x)
    if (!excl[x]) comp.push_back(x);
  for (auto& at : md.atlas) {
    if (!approximates(ops, at.c, {{at.a, arrow_class(ops, at.alpha)}}, comp))
      return false;
    if (which == "T_xi_mu" &&
        !approximates(ops, at.d, {{at.b, arrow_class(ops, at.nu)}}, comp))
      return false;
  }
  return true;
}

std::vector<std::vector<long>> t_xi_mu_target(
    const MutationData& md, const std::vector<std::vector<long>>& base_cartan) {
  int n = (int)base_cartan.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (auto& at : md.atlas) std::swap(perm[at.c], perm[at.d]);
  std::vector<std::vector<long>> t(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = base_cartan[perm[i]][perm[j]];
  return t;
}

TiltingReport end_algebra_summary(const AlgebraOps& ops, const TiltingFamily& fam,
                                  const std::vector<std::vector<long>>& target_cartan,
                                  long target_dim) {
  TiltingReport rep;
  rep.which = fam.which;
  int n = (int)fam.summands.size();
  rep.cartan_end.assign(n, std::vector<long>(n, 0));
  rep.t1_holds = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rep.cartan_end[i][j] = chain_hom_dim(ops, fam.summands[j], fam.summands[i], 0);
      rep.dim_end += rep.cartan_end[i][j];
      if (chain_hom_dim(ops, fam.summands[j], fam.summands[i], 1) != 0)
        rep.t1_holds = false;
      if (chain_hom_dim(ops, fam.summands[j], fam.summands[i], -1) != 0)
        rep.t1_holds = false;
    }
  rep.dim_target = target_dim;
  rep.cartan_match = rep.cartan_end == target_cartan;
  return rep;
}

}  // namespace surfalg
