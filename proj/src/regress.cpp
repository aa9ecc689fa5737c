#include "surfalg/regress.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "surfalg/corpus.hpp"
#include "surfalg/tilting.hpp"

namespace surfalg::regress {

namespace cp = surfalg::corpus;

using Mat = std::vector<std::vector<long>>;

static std::string eq(long got, long want, const std::string& what) {
  if (got == want) return "";
  return what + ": got " + std::to_string(got) + ", want " + std::to_string(want);
}

static std::string mat_str(const Mat& m) {
  std::ostringstream os;
  for (auto& row : m) {
    os << "[";
    for (size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << "]";
  }
  return os.str();
}

static std::string mat_eq(const Mat& got, const Mat& want, const std::string& what) {
  if (got == want) return "";
  return what + ": got " + mat_str(got) + ", want " + mat_str(want);
}

static std::string sym_check(const Mat& m, const std::string& what) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return what + ": cartan not symmetric";
  return "";
}

static long star_cap(const MutationData& md) {
  long cap = 0;
  for (int h = 0; h < (int)md.qx.arrows.size(); ++h)
    if (md.in_star[h]) cap = std::max(cap, md.star_mn(h));
  return 2 * cap + 4;
}

// ---- instance builders -----------------------------------------------------

struct Base {
  TriangulationQuiver tq;
  Weights w;
  PresentedAlgebra alg;
};

static Base disc_base(long m, const Rat& lam) {
  Base b{cp::disc_quiver(), {}, {}};
  b.w = cp::default_weights(b.tq, m, lam);
  b.alg = build_wta(b.tq, b.w);
  return b;
}

static Base pentagon_base(long m, const Rat& lam) {
  Base b{cp::pentagon_quiver(), {}, {}};
  b.w = cp::pentagon_weights(b.tq, m, lam);
  b.alg = build_wta(b.tq, b.w);
  return b;
}

static Base sphere_base(long m, long n) {
  Base b{quiver_from_surface(cp::sphere_surface()), {}, {}};
  b.w = cp::sphere_weights(b.tq, m, n, 2, 3);
  b.alg = build_wta(b.tq, b.w);
  return b;
}

struct Deformed {
  TriangulationQuiver tq;  // blown-up quiver
  Weights w;
  MutationData md;
  PresentedAlgebra alg;
};

static Deformed deform(const Surface& s, const Weights& base_w,
                       const std::vector<std::string>& I, const std::map<std::string, int>& eps) {
  Deformed d;
  auto r = blow_up(s, I);
  d.tq = quiver_from_surface(r.surface);
  d.w = blow_up_weights(s, base_w, r);
  d.md = build_mutated_quiver(d.tq, d.w, epsilon_to_xi(r, eps));
  d.alg = build_mutation(d.md);
  return d;
}

static Deformed torus_deformed() {
  auto s = cp::torus_surface();
  auto tq = quiver_from_surface(s);
  return deform(s, cp::default_weights(tq, 1, 1), {"2", "3"}, {{"2", 1}, {"3", 1}});
}

static Deformed selffolded3_deformed(long m) {
  auto s = cp::selffolded3_surface();
  auto tq = quiver_from_surface(s);
  return deform(s, cp::selffolded3_weights(tq, m, 1), {"1", "2", "3"},
                {{"1", 1}, {"2", 1}, {"3", -1}});
}

// ---- shared checks ---------------------------------------------------------

static std::string oracle_vs(const PresentedAlgebra& alg, int cap, const std::string& what) {
  auto rs = complete_with_retry(alg.q, alg.relations, cap);
  std::string e = eq(rs.dimension, alg.dimension, what + " oracle dim");
  if (!e.empty()) return e;
  return mat_eq(rs.cartan, alg.cartan, what + " oracle cartan");
}

static std::string socle_row(const Base& b, const std::string& what) {
  auto rs = complete_with_retry(b.alg.q, b.alg.relations, default_cap(b.tq, b.w));
  auto rep = socle_check(b.alg, b.tq, b.w, rs);
  if (rep.ok) return "";
  std::string e = what + " socle:";
  for (auto& n : rep.notes) e += " " + n;
  return e;
}

static std::string identity_row(const MutationData& md, const PresentedAlgebra& alg,
                                const std::string& what) {
  auto rs = complete_with_retry(alg.q, alg.relations, star_cap(md));
  auto rep = mutation_identity_suite(md, rs);
  if (rep.ok) return "";
  std::string e = what + " identities:";
  for (auto& n : rep.notes) e += " " + n;
  return e;
}

// per-vertex basis sizes against the closed counting formulas
static std::string counting_row(const MutationData& md, const PresentedAlgebra& alg,
                                const std::string& what) {
  const Quiver& q = md.qx;
  auto term = [&](int h) {
    int o = md.gs_orbit_of[h];
    return md.m_star[o] * ((long)md.gs_orbits[o].size() + md.n_nu[o]);
  };
  for (int x = 0; x < (int)q.vertices.size(); ++x) {
    long got = 0;
    for (long v : alg.cartan[x]) got += v;
    long want;
    if (md.c_of[x] >= 0 || md.d_of[x] >= 0) {
      int i = md.c_of[x] >= 0 ? md.c_of[x] : md.d_of[x];
      want = term(md.from_base[md.atlas[i].delta]);
    } else {
      std::vector<int> outs;
      for (int a : q.out[x])
        if (md.in_star[a]) outs.push_back(a);
      bool v0 = md.star_virtual(outs[0]), v1 = md.star_virtual(outs[1]);
      if (!v0 && !v1)
        want = term(outs[0]) + term(outs[1]);
      else if (v0 && v1)
        want = 4;
      else
        want = term(v0 ? outs[1] : outs[0]) + 2;
    }
    std::string e = eq(got, want, what + " |B_" + q.vertices[x] + "|");
    if (!e.empty()) return e;
  }
  for (int h = 0; h < (int)q.arrows.size(); ++h)
    if (md.in_star[h] && md.star_virtual(h)) {
      std::string e = eq(term(h), 2, what + " virtual weight at " + q.arrows[h].id);
      if (!e.empty()) return e;
    }
  return "";
}

static std::string tilting_row(const TriangulationQuiver& tq, const Weights& w,
                               const MutationData& md, const std::string& what) {
  auto base = build_wta(tq, w, true);
  auto brs = complete_with_retry(base.q, base.relations, default_cap(tq, w));
  auto bops = make_ops(base, brs);
  auto mut = build_mutation(md);
  auto mrs = complete_with_retry(mut.q, mut.relations, star_cap(md));
  auto mops = make_ops(mut, mrs);

  auto judge = [&](const TiltingReport& r, bool approx) -> std::string {
    if (!r.t1_holds) return what + " " + r.which + ": Hom(T,T[+-1]) != 0";
    if (r.dim_end != r.dim_target)
      return what + " " + r.which + ": " + eq(r.dim_end, r.dim_target, "End dim");
    if (!r.cartan_match) return what + " " + r.which + ": End cartan mismatch";
    if (!approx) return what + " " + r.which + ": approximation check failed";
    return "";
  };
  {
    auto fam = build_T_xi(bops, md);
    auto r = end_algebra_summary(bops, fam, mut.cartan, mut.dimension);
    std::string e = judge(r, approximation_check(bops, md, "T_xi"));
    if (!e.empty()) return e;
  }
  {
    auto fam = build_That_xi(mops, md);
    auto r = end_algebra_summary(mops, fam, base.cartan, base.dimension);
    std::string e = judge(r, approximation_check(mops, md, "That_xi"));
    if (!e.empty()) return e;
  }
  {
    auto fam = build_T_xi_mu(bops, md);
    auto r = end_algebra_summary(bops, fam, t_xi_mu_target(md, base.cartan), base.dimension);
    std::string e = judge(r, approximation_check(bops, md, "T_xi_mu"));
    if (!e.empty()) return e;
  }
  return "";
}

// ---- random instance generator --------------------------------------------

static std::string fuzz_row() {
  std::mt19937 rng(20260823u);
  auto ri = [&](int n) { return (int)(rng() % (unsigned)n); };
  const std::vector<Rat> cs = {1, -1, 2, Rat(1, 2), 3, Rat(-2, 3)};
  int done = 0, mutated = 0;
  while (done < 200) {
    // random directed triangulated surface: pair up triangle slots, leave a
    // few slots as boundary edges
    int T = 1 + ri(8);
    std::vector<std::pair<int, int>> slots;
    for (int t = 0; t < T; ++t)
      for (int s = 0; s < 3; ++s) slots.push_back({t, s});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::array<std::string, 3>> tris(T);
    std::vector<std::string> edges, boundary;
    int next_edge = 1;
    auto fresh = [&]() { return std::to_string(next_edge++); };
    size_t k = 0;
    while (k < slots.size()) {
      std::string e = fresh();
      edges.push_back(e);
      if (k + 1 < slots.size() && ri(100) >= 20) {
        tris[slots[k].first][slots[k].second] = e;
        tris[slots[k + 1].first][slots[k + 1].second] = e;
        k += 2;
      } else {
        tris[slots[k].first][slots[k].second] = e;
        boundary.push_back(e);
        k += 1;
      }
    }
    if ((int)edges.size() > 12 || (int)edges.size() < 2) continue;
    Surface s;
    s.edges = edges;
    s.boundary = boundary;
    bool bad = false;
    for (auto& t : tris) {
      // rotate a repeated edge into the leading two slots
      if (t[0] == t[1] && t[1] == t[2]) bad = true;
      if (t[1] == t[2]) t = {t[1], t[2], t[0]};
      if (t[2] == t[0]) t = {t[2], t[0], t[1]};
      s.triangles.push_back(t);
    }
    if (bad) continue;

    TriangulationQuiver tq;
    try {
      validate_surface(s);
      tq = quiver_from_surface(s);
    } catch (const Error&) {
      continue;  // e.g. disconnected gluing
    }

    // random weights, then raise m's until the admissibility conditions hold
    Weights w;
    for (size_t o = 0; o < tq.g_orbits.size(); ++o) {
      // keep short orbits light so virtual arrows (and thus mutations) occur
      w.m.push_back(tq.g_orbits[o].size() <= 2 ? 1 : 1 + ri(3));
      w.c.push_back(cs[ri((int)cs.size())]);
    }
    bool ok = false;
    for (int it = 0; it < 200; ++it) {
      try {
        check_assumption(tq, w);
        ok = true;
        break;
      } catch (const Error&) {
        int best = 0;
        long bmn = w.m[0] * (long)tq.g_orbits[0].size();
        for (int o = 1; o < (int)tq.g_orbits.size(); ++o) {
          long v = w.m[o] * (long)tq.g_orbits[o].size();
          if (v < bmn) bmn = v, best = o;
        }
        w.m[best]++;
      }
    }
    if (!ok) continue;

    PresentedAlgebra alg;
    try {
      alg = build_wta(tq, w, true);
    } catch (const Error& e) {
      return "instance " + std::to_string(done) + ": build failed: " + e.what();
    }
    long want = 0;
    for (int o = 0; o < (int)tq.g_orbits.size(); ++o)
      want += w.m[o] * (long)tq.g_orbits[o].size() * (long)tq.g_orbits[o].size();
    std::string e = eq(alg.dimension, want, "instance " + std::to_string(done) + " dim");
    if (!e.empty()) return e;
    e = sym_check(alg.cartan, "instance " + std::to_string(done));
    if (!e.empty()) return e;

    // every legal single-choice mutation must assemble consistently
    if (tq.q.vertices.size() >= 4) {
      for (int o = 0; o < (int)tq.g_orbits.size(); ++o) {
        int a = tq.g_orbits[o][0];
        if (!is_virtual(tq, w, a)) continue;
        if (tq.q.arrows[a].src == tq.q.arrows[a].tgt) continue;
        try {
          auto md = build_mutated_quiver(tq, w, {tq.q.arrows[a].id});
          auto mut = build_mutation(md);
          e = sym_check(mut.cartan, "instance " + std::to_string(done) + " mutation " +
                                        tq.q.arrows[a].id);
          if (!e.empty()) return e;
          mutated++;
        } catch (const Error& err) {
          if (err.code == Err::SingularSpherical) continue;
          return "instance " + std::to_string(done) + " mutation " + tq.q.arrows[a].id +
                 ": " + err.what();
        }
      }
    }
    done++;
  }
  if (mutated < 50)
    return "only " + std::to_string(mutated) + " mutations exercised across 200 instances";
  return "";
}

// ---- the suite -------------------------------------------------------------

std::vector<Row> build_rows() {
  std::vector<Row> rows;
  auto add = [&](std::string name, std::function<std::string()> fn) {
    rows.push_back({std::move(name), std::move(fn)});
  };
  const std::vector<long> ms = {1, 2, 3};
  const std::vector<std::pair<long, long>> mns = {{1, 1}, {1, 2}, {2, 3}, {3, 3}};
  const std::vector<long> sf_ms = {3, 4, 5};

  // dimension golden values of the base algebras and blow-ups
  for (long m : ms) {
    add("dims/disc-m" + std::to_string(m),
        [m] { return eq(disc_base(m, 1).alg.dimension, cp::disc_dim(m), "dim"); });
    add("dims/pentagon-m" + std::to_string(m),
        [m] { return eq(pentagon_base(m, 1).alg.dimension, cp::pentagon_dim(m), "dim"); });
  }
  add("dims/disc-m2-lam5/3",
      [] { return eq(disc_base(2, Rat(5, 3)).alg.dimension, cp::disc_dim(2), "dim"); });
  for (auto [m, n] : mns)
    add("dims/sphere-m" + std::to_string(m) + "n" + std::to_string(n), [m, n] {
      return eq(sphere_base(m, n).alg.dimension, cp::sphere_dim(m, n), "dim");
    });
  add("dims/torus", [] {
    auto tq = quiver_from_surface(cp::torus_surface());
    // three vertices only, so the conservative singularity guard must be waived
    return eq(build_wta(tq, cp::default_weights(tq, 1, 1), true).dimension, cp::torus_dim(),
              "dim");
  });
  add("dims/torus-blown", [] {
    auto s = cp::torus_surface();
    auto tq = quiver_from_surface(s);
    auto r = blow_up(s, {"2", "3"});
    auto ntq = quiver_from_surface(r.surface);
    auto nw = blow_up_weights(s, cp::default_weights(tq, 1, 1), r);
    return eq(build_wta(ntq, nw).dimension, cp::torus_blown_dim(), "dim");
  });
  for (long m : sf_ms) {
    add("dims/selffolded3-m" + std::to_string(m), [m] {
      auto tq = quiver_from_surface(cp::selffolded3_surface());
      return eq(build_wta(tq, cp::selffolded3_weights(tq, m, 1)).dimension,
                cp::selffolded3_dim(m), "dim");
    });
    add("dims/selffolded3-blown-m" + std::to_string(m), [m] {
      auto s = cp::selffolded3_surface();
      auto tq = quiver_from_surface(s);
      auto r = blow_up(s, {"1", "2", "3"});
      auto ntq = quiver_from_surface(r.surface);
      auto nw = blow_up_weights(s, cp::selffolded3_weights(tq, m, 1), r);
      return eq(build_wta(ntq, nw).dimension, cp::selffolded3_blown_dim(m), "dim");
    });
  }

  // dimension golden values after mutation / deformation
  for (long m : ms) {
    add("mutdims/disc-m" + std::to_string(m), [m] {
      auto b = disc_base(m, 1);
      return eq(build_mutation(b.tq, b.w, {"t0.1"}).dimension, cp::disc_mut_dim(m), "dim");
    });
    add("mutdims/pentagon-xi-m" + std::to_string(m), [m] {
      auto b = pentagon_base(m, 1);
      return eq(build_mutation(b.tq, b.w, {"xi"}).dimension, cp::pentagon_xi_dim(m), "dim");
    });
    add("mutdims/pentagon-mu-m" + std::to_string(m), [m] {
      auto b = pentagon_base(m, 1);
      return eq(build_mutation(b.tq, b.w, {"mu"}).dimension, cp::pentagon_mu_dim(m), "dim");
    });
  }
  add("mutdims/disc-m2-lam5/3", [] {
    auto b = disc_base(2, Rat(5, 3));
    return eq(build_mutation(b.tq, b.w, {"t0.1"}).dimension, cp::disc_mut_dim(2), "dim");
  });
  for (auto [m, n] : mns) {
    std::string tag = "-m" + std::to_string(m) + "n" + std::to_string(n);
    add("mutdims/sphere-xi" + tag, [m, n] {
      auto b = sphere_base(m, n);
      return eq(build_mutation(b.tq, b.w, {"t0.1"}).dimension, cp::sphere_xi_dim(m, n), "dim");
    });
    add("mutdims/sphere-xi-eta" + tag, [m, n] {
      auto b = sphere_base(m, n);
      return eq(build_mutation(b.tq, b.w, {"t0.1", "t2.1"}).dimension,
                cp::sphere_xi_eta_dim(m, n), "dim");
    });
    add("mutdims/sphere-xi-zeta" + tag, [m, n] {
      auto b = sphere_base(m, n);
      return eq(build_mutation(b.tq, b.w, {"t0.1", "t3.2"}).dimension,
                cp::sphere_xi_zeta_dim(m, n), "dim");
    });
  }
  add("mutdims/torus-deformed",
      [] { return eq(torus_deformed().alg.dimension, cp::torus_deformed_dim(), "dim"); });
  for (long m : sf_ms)
    add("mutdims/selffolded3-deformed-m" + std::to_string(m), [m] {
      return eq(selffolded3_deformed(m).alg.dimension, cp::selffolded3_deformed_dim(m), "dim");
    });

  // the five displayed Cartan matrices
  for (long m : ms) {
    std::string tag = "-m" + std::to_string(m);
    add("cartan/disc" + tag,
        [m] { return mat_eq(disc_base(m, 1).alg.cartan, cp::disc_cartan(m), "cartan"); });
    add("cartan/disc-mutated" + tag, [m] {
      auto b = disc_base(m, 1);
      return mat_eq(build_mutation(b.tq, b.w, {"t0.1"}).cartan, cp::disc_mut_cartan(m),
                    "cartan");
    });
    add("cartan/pentagon" + tag, [m] {
      return mat_eq(pentagon_base(m, 1).alg.cartan, cp::pentagon_cartan(m), "cartan");
    });
    add("cartan/pentagon-xi" + tag, [m] {
      auto b = pentagon_base(m, 1);
      return mat_eq(build_mutation(b.tq, b.w, {"xi"}).cartan, cp::pentagon_xi_cartan(m),
                    "cartan");
    });
    add("cartan/pentagon-mu" + tag, [m] {
      auto b = pentagon_base(m, 1);
      return mat_eq(build_mutation(b.tq, b.w, {"mu"}).cartan, cp::pentagon_mu_cartan(m),
                    "cartan");
    });
  }

  // independent dual-route agreement on every instance
  for (long m : ms) {
    std::string tag = "-m" + std::to_string(m);
    add("oracle/disc" + tag, [m] {
      auto b = disc_base(m, 1);
      return oracle_vs(b.alg, default_cap(b.tq, b.w), "disc");
    });
    add("oracle/disc-mutated" + tag, [m] {
      auto b = disc_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"t0.1"});
      return oracle_vs(build_mutation(md), star_cap(md), "disc-mutated");
    });
    add("oracle/pentagon" + tag, [m] {
      auto b = pentagon_base(m, 1);
      return oracle_vs(b.alg, default_cap(b.tq, b.w), "pentagon");
    });
    add("oracle/pentagon-xi" + tag, [m] {
      auto b = pentagon_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"xi"});
      return oracle_vs(build_mutation(md), star_cap(md), "pentagon-xi");
    });
    add("oracle/pentagon-mu" + tag, [m] {
      auto b = pentagon_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"mu"});
      return oracle_vs(build_mutation(md), star_cap(md), "pentagon-mu");
    });
  }
  add("oracle/sphere-m1n2", [] {
    auto b = sphere_base(1, 2);
    return oracle_vs(b.alg, default_cap(b.tq, b.w), "sphere");
  });
  for (auto xi : std::vector<std::vector<std::string>>{
           {"t0.1"}, {"t0.1", "t2.1"}, {"t0.1", "t3.2"}}) {
    std::string tag = "sphere-m1n2";
    for (auto& x : xi) tag += "-" + x;
    add("oracle/" + tag, [xi, tag] {
      auto b = sphere_base(1, 2);
      auto md = build_mutated_quiver(b.tq, b.w, xi);
      return oracle_vs(build_mutation(md), star_cap(md), tag);
    });
  }
  add("oracle/torus-deformed", [] {
    auto d = torus_deformed();
    return oracle_vs(d.alg, star_cap(d.md), "torus-deformed");
  });
  add("oracle/selffolded3-deformed-m3", [] {
    auto d = selffolded3_deformed(3);
    return oracle_vs(d.alg, star_cap(d.md), "selffolded3-deformed");
  });

  // socle products on base algebras; derived identity suites on mutations
  for (long m : ms) {
    std::string tag = "-m" + std::to_string(m);
    add("identities/socle-disc" + tag, [m] { return socle_row(disc_base(m, 1), "disc"); });
    add("identities/socle-pentagon" + tag,
        [m] { return socle_row(pentagon_base(m, 1), "pentagon"); });
  }
  add("identities/socle-sphere-m1n2", [] { return socle_row(sphere_base(1, 2), "sphere"); });
  auto add_suite = [&](const std::string& name,
                       std::function<std::pair<MutationData, PresentedAlgebra>()> mk) {
    add("identities/suite-" + name, [mk, name] {
      auto [md, alg] = mk();
      return identity_row(md, alg, name);
    });
    add("counting/" + name, [mk, name] {
      auto [md, alg] = mk();
      return counting_row(md, alg, name);
    });
  };
  for (long m : ms) {
    std::string tag = "-m" + std::to_string(m);
    add_suite("disc" + tag, [m] {
      auto b = disc_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"t0.1"});
      auto alg = build_mutation(md);
      return std::make_pair(md, alg);
    });
    add_suite("pentagon-xi" + tag, [m] {
      auto b = pentagon_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"xi"});
      auto alg = build_mutation(md);
      return std::make_pair(md, alg);
    });
    add_suite("pentagon-mu" + tag, [m] {
      auto b = pentagon_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"mu"});
      auto alg = build_mutation(md);
      return std::make_pair(md, alg);
    });
  }
  for (auto xi : std::vector<std::vector<std::string>>{
           {"t0.1"}, {"t0.1", "t2.1"}, {"t0.1", "t3.2"}}) {
    std::string tag = "sphere-m1n2";
    for (auto& x : xi) tag += "-" + x;
    add_suite(tag, [xi] {
      auto b = sphere_base(1, 2);
      auto md = build_mutated_quiver(b.tq, b.w, xi);
      auto alg = build_mutation(md);
      return std::make_pair(md, alg);
    });
  }
  add_suite("torus-deformed", [] {
    auto d = torus_deformed();
    return std::make_pair(d.md, d.alg);
  });
  add_suite("selffolded3-deformed-m3", [] {
    auto d = selffolded3_deformed(3);
    return std::make_pair(d.md, d.alg);
  });
  // the branch identities and the two arrows they eliminate
  add("identities/branch-pentagon-mu", [] {
    auto b = pentagon_base(1, 1);
    auto md = build_mutated_quiver(b.tq, b.w, {"mu"});
    auto alg = build_mutation(md);
    auto rs = complete_with_retry(alg.q, alg.relations, star_cap(md));
    auto rep = branch_consequences(md, 0, rs);
    if (!rep.ok) {
      std::string e = "branch:";
      for (auto& n : rep.notes) e += " " + n;
      return e;
    }
    auto gq = gabriel_quiver(alg, rs);
    std::string gam = md.qx.arrows[md.from_base[md.atlas[0].gamma]].id;
    for (auto& a : gq.arrows)
      if (a.id == gam || a.id == "tau.1")
        return "arrow " + a.id + " should be absent from the ordinary quiver";
    return std::string();
  });

  // derived equivalence data
  for (long m : {1L, 2L})
    add("tilting/disc-m" + std::to_string(m), [m] {
      auto b = disc_base(m, 1);
      auto md = build_mutated_quiver(b.tq, b.w, {"t0.1"});
      return tilting_row(b.tq, b.w, md, "disc-m" + std::to_string(m));
    });
  add("tilting/pentagon-m1", [] {
    auto b = pentagon_base(1, 1);
    auto md = build_mutated_quiver(b.tq, b.w, {"xi"});
    return tilting_row(b.tq, b.w, md, "pentagon");
  });
  add("tilting/torus-deformed", [] {
    auto d = torus_deformed();
    return tilting_row(d.tq, d.w, d.md, "torus-deformed");
  });

  add("fuzz/random-200", fuzz_row);

  return rows;
}

}  // namespace surfalg::regress
