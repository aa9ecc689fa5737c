#include "surfalg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "surfalg/linalg.hpp"

namespace surfalg {

int mono_cmp(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size())
    return a.arrows.size() < b.arrows.size() ? -1 : 1;
  if (a.arrows != b.arrows) return a.arrows < b.arrows ? -1 : 1;
  if (a.src != b.src) return a.src < b.src ? -1 : 1;
  return 0;
}

namespace {

struct MonoGreater {
  bool operator()(const Path& a, const Path& b) const { return mono_cmp(a, b) > 0; }
};

using TermMap = std::map<Path, Rat, MonoGreater>;

Poly to_poly(TermMap&& m) {
  Poly p;
  for (auto& [mono, c] : m)
    if (c != 0) p.terms.push_back({c, mono});
  return p;
}

// the workhorse: fully reduce a polynomial against the active rules
struct Engine {
  const Quiver* q = nullptr;
  int cap = 0;
  std::vector<Rule> rules;
  std::vector<std::vector<int>> by_first;  // first lead arrow -> rule indices

  // leftmost occurrence of any active lead inside mono; (-1,-1) if irreducible
  std::pair<int, int> find_red(const Path& mono) const {
    for (int pos = 0; pos < (int)mono.arrows.size(); ++pos)
      for (int ri : by_first[mono.arrows[pos]]) {
        const Rule& r = rules[ri];
        if (!r.active) continue;
        int len = (int)r.lead.arrows.size();
        if (pos + len > (int)mono.arrows.size()) continue;
        if (std::equal(r.lead.arrows.begin(), r.lead.arrows.end(),
                       mono.arrows.begin() + pos))
          return {pos, ri};
      }
    return {-1, -1};
  }

  // only occurrences that end at the last arrow (enough when the prefix is
  // known irreducible)
  bool reducible_at_end(const Path& mono) const {
    int n = (int)mono.arrows.size();
    for (int pos = 0; pos < n; ++pos)
      for (int ri : by_first[mono.arrows[pos]]) {
        const Rule& r = rules[ri];
        if (!r.active) continue;
        if (pos + (int)r.lead.arrows.size() != n) continue;
        if (std::equal(r.lead.arrows.begin(), r.lead.arrows.end(),
                       mono.arrows.begin() + pos))
          return true;
      }
    return false;
  }

  Poly reduce(Poly p) const {
    TermMap pending;
    for (auto& t : p.terms) {
      auto [it, fresh] = pending.emplace(t.path, t.coef);
      if (!fresh) it->second += t.coef;
    }
    TermMap done;
    while (!pending.empty()) {
      auto it = pending.begin();  // largest remaining monomial
      Path mono = it->first;
      Rat coef = it->second;
      pending.erase(it);
      if (coef == 0) continue;
      auto [pos, ri] = find_red(mono);
      if (ri < 0) {
        done.emplace(mono, coef);
        continue;
      }
      const Rule& r = rules[ri];
      int len = (int)r.lead.arrows.size();
      for (auto& tt : r.tail.terms) {
        Path nm;
        nm.src = mono.src;
        nm.arrows.reserve(mono.arrows.size() - len + tt.path.arrows.size());
        nm.arrows.insert(nm.arrows.end(), mono.arrows.begin(), mono.arrows.begin() + pos);
        nm.arrows.insert(nm.arrows.end(), tt.path.arrows.begin(), tt.path.arrows.end());
        nm.arrows.insert(nm.arrows.end(), mono.arrows.begin() + pos + len,
                         mono.arrows.end());
        if (nm.arrows.empty()) nm.src = mono.src;
        Rat nc = coef * tt.coef;
        auto [jt, fresh] = pending.emplace(std::move(nm), nc);
        if (!fresh) jt->second += nc;
      }
    }
    return to_poly(std::move(done));
  }

  int add_rule(Poly p) {
    // p is already a normal form; turn "lead + rest = 0" into "lead = -rest/c"
    if (p.terms.front().path.length() == 0)
      throw Error(Err::InconsistentRelations,
                  "a stationary path reduces into the ideal");
    Rule r;
    r.lead = p.terms.front().path;
    Rat lc = p.terms.front().coef;
    for (size_t i = 1; i < p.terms.size(); ++i)
      r.tail.terms.push_back({-p.terms[i].coef / lc, p.terms[i].path});
    rules.push_back(std::move(r));
    int idx = (int)rules.size() - 1;
    by_first[rules[idx].lead.arrows[0]].push_back(idx);
    return idx;
  }
};

bool contains_subpath(const Path& big, const Path& small) {
  int n = (int)big.arrows.size(), m = (int)small.arrows.size();
  if (m > n) return false;
  for (int pos = 0; pos + m <= n; ++pos)
    if (std::equal(small.arrows.begin(), small.arrows.end(), big.arrows.begin() + pos))
      return true;
  return false;
}

Poly rule_poly(const Rule& r) {
  Poly p;
  p.terms.push_back({Rat(1), r.lead});
  for (auto& t : r.tail.terms) p.terms.push_back({-t.coef, t.path});
  return p;
}

}  // namespace

Poly RewriteSystem::normal_form(Poly p) const {
  Engine e;
  e.q = &q;
  e.cap = cap;
  e.rules = rules;  // cheap enough at our scale; keeps the api simple
  e.by_first.assign(q.arrows.size(), {});
  for (int i = 0; i < (int)rules.size(); ++i)
    if (rules[i].active) e.by_first[rules[i].lead.arrows[0]].push_back(i);
  return e.reduce(std::move(p));
}

Poly RewriteSystem::nf_path(const Path& p) const {
  Poly q1;
  q1.terms.push_back({Rat(1), p});
  return normal_form(std::move(q1));
}

bool RewriteSystem::is_std(const Path& p) const { return std_index(p) >= 0; }

int RewriteSystem::std_index(const Path& p) const {
  for (int i = 0; i < (int)std_monos.size(); ++i)
    if (std_monos[i] == p) return i;
  return -1;
}

RewriteSystem complete(const Quiver& q, const std::vector<Relation>& rels, int cap) {
  if (cap < 2) throw Error(Err::BadInput, "degree cap must be >= 2");
  Engine e;
  e.q = &q;
  e.cap = cap;
  e.by_first.assign(q.arrows.size(), {});

  std::deque<Poly> candidates;
  for (auto& rel : rels) {
    Poly p;
    for (auto& t : rel) p.terms.push_back(t);
    // merge duplicate monomials defensively
    TermMap m;
    for (auto& t : p.terms) {
      auto [it, fresh] = m.emplace(t.path, t.coef);
      if (!fresh) it->second += t.coef;
    }
    candidates.push_back(to_poly(std::move(m)));
  }

  std::deque<std::pair<int, int>> pairs;
  auto push_pairs = [&](int k) {
    for (int j = 0; j < (int)e.rules.size(); ++j) {
      if (!e.rules[j].active) continue;
      pairs.push_back({k, j});
      if (j != k) pairs.push_back({j, k});
    }
  };

  while (!candidates.empty() || !pairs.empty()) {
    if (!candidates.empty()) {
      Poly p = e.reduce(std::move(candidates.front()));
      candidates.pop_front();
      if (p.zero()) continue;
      int k = e.add_rule(std::move(p));
      // retire rules whose lead became reducible, recycling them as candidates
      for (int j = 0; j < k; ++j) {
        if (!e.rules[j].active) continue;
        if (contains_subpath(e.rules[j].lead, e.rules[k].lead)) {
          e.rules[j].active = false;
          candidates.push_back(rule_poly(e.rules[j]));
        }
      }
      push_pairs(k);
      continue;
    }
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (!e.rules[i].active || !e.rules[j].active) continue;
    const Path& u = e.rules[i].lead;
    const Path& v = e.rules[j].lead;
    int p = (int)u.arrows.size(), r = (int)v.arrows.size();
    for (int k = 1; k < std::min(p, r); ++k) {
      // proper overlap: last k arrows of u == first k arrows of v
      if (!std::equal(v.arrows.begin(), v.arrows.begin() + k, u.arrows.end() - k))
        continue;
      if (p + r - k > cap) continue;
      // s-poly: tail(u) * v-suffix  minus  u-prefix * tail(v)
      TermMap m;
      for (auto& t : e.rules[i].tail.terms) {
        Path nm;
        nm.src = t.path.arrows.empty() ? t.path.src : t.path.src;
        nm.src = u.src;
        nm.arrows = t.path.arrows;
        nm.arrows.insert(nm.arrows.end(), v.arrows.begin() + k, v.arrows.end());
        auto [it, fresh] = m.emplace(std::move(nm), t.coef);
        if (!fresh) it->second += t.coef;
      }
      for (auto& t : e.rules[j].tail.terms) {
        Path nm;
        nm.src = u.src;
        nm.arrows.assign(u.arrows.begin(), u.arrows.end() - k);
        nm.arrows.insert(nm.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
        auto [it, fresh] = m.emplace(std::move(nm), -t.coef);
        if (!fresh) it->second -= t.coef;
      }
      Poly sp = to_poly(std::move(m));
      if (!sp.zero()) candidates.push_back(std::move(sp));
    }
  }

  // final tidy-up: fully reduce every surviving tail
  for (auto& r : e.rules) {
    if (!r.active) continue;
    r.tail = e.reduce(std::move(r.tail));
  }

  RewriteSystem rs;
  rs.q = q;
  rs.cap = cap;
  for (auto& r : e.rules)
    if (r.active) rs.rules.push_back(r);

  // standard monomials: breadth-first, pruning any path whose suffix matches a
  // lead (the prefix is standard by induction)
  {
    Engine probe;
    probe.q = &q;
    probe.cap = cap;
    probe.rules = rs.rules;
    probe.by_first.assign(q.arrows.size(), {});
    for (int i = 0; i < (int)rs.rules.size(); ++i)
      probe.by_first[rs.rules[i].lead.arrows[0]].push_back(i);

    std::vector<Path> layer;
    for (int v = 0; v < (int)q.vertices.size(); ++v) {
      Path ep;
      ep.src = v;
      rs.std_monos.push_back(ep);
      layer.push_back(ep);
    }
    int maxlen = 0;
    while (!layer.empty()) {
      std::vector<Path> next;
      for (auto& s : layer) {
        int tv = s.target(q);
        for (int a : q.out[tv]) {
          Path t = s;
          t.arrows.push_back(a);
          if (!probe.reducible_at_end(t)) next.push_back(std::move(t));
        }
      }
      if (!next.empty()) {
        maxlen = next.front().length();
        if (maxlen >= cap - 1)
          throw Error(Err::CapExceeded, "standard monomials reach length " +
                                            std::to_string(maxlen) + " at cap " +
                                            std::to_string(cap));
        for (auto& t : next) rs.std_monos.push_back(t);
      }
      layer = std::move(next);
    }

    // cap certificate: every path of length cap-1 must reduce to zero; walk
    // the layer spans nf(arrows), nf(layer * arrow), ... which is valid since
    // rules never lengthen and all overlaps up to the cap were resolved
    int N = (int)rs.std_monos.size();
    std::map<Path, int> idx;
    for (int i = 0; i < N; ++i) idx[rs.std_monos[i]] = i;
    auto vec_of = [&](const Poly& p) {
      std::vector<Rat> v(N, Rat(0));
      for (auto& t : p.terms) {
        auto it = idx.find(t.path);
        if (it == idx.end())
          throw Error(Err::CapExceeded, "normal form escapes the standard monomials");
        v[it->second] = t.coef;
      }
      return v;
    };
    std::vector<std::vector<Rat>> basis;  // current layer span, echelon rows
    {
      RowSpace sp(N);
      for (int a = 0; a < (int)q.arrows.size(); ++a) {
        Path pa;
        pa.src = q.arrows[a].src;
        pa.arrows.push_back(a);
        sp.add(vec_of(probe.reduce({{ {Rat(1), pa} }})));
      }
      basis = sp.rows;
    }
    for (int len = 2; len <= cap - 1 && !basis.empty(); ++len) {
      RowSpace sp(N);
      for (auto& row : basis) {
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
          TermMap m;
          for (int i = 0; i < N; ++i) {
            if (row[i] == 0) continue;
            const Path& s = rs.std_monos[i];
            if (s.target(q) != q.arrows[a].src) continue;
            Path t = s;
            t.arrows.push_back(a);
            auto [it, fresh] = m.emplace(std::move(t), row[i]);
            if (!fresh) it->second += row[i];
          }
          Poly pr = probe.reduce(to_poly(std::move(m)));
          if (!pr.zero()) sp.add(vec_of(pr));
        }
      }
      basis = sp.rows;
    }
    if (!basis.empty())
      throw Error(Err::CapExceeded,
                  "paths of length cap-1 do not all reduce to zero at cap " +
                      std::to_string(cap));
  }

  rs.dimension = (long)rs.std_monos.size();
  int nv = (int)q.vertices.size();
  rs.cartan.assign(nv, std::vector<long>(nv, 0));
  for (auto& s : rs.std_monos) rs.cartan[s.src][s.target(q)]++;
  return rs;
}

RewriteSystem complete_with_retry(const Quiver& q, const std::vector<Relation>& rels,
                                  int cap) {
  try {
    return complete(q, rels, cap);
  } catch (const Error& e) {
    if (e.code != Err::CapExceeded) throw;
    return complete(q, rels, 2 * cap);
  }
}

int default_cap(const TriangulationQuiver& tq, const Weights& w) {
  long best = 2;
  for (int o = 0; o < (int)tq.g_orbits.size(); ++o)
    best = std::max(best, w.m[o] * (long)tq.g_orbits[o].size());
  return (int)(2 * best + 4);
}

}  // namespace surfalg
