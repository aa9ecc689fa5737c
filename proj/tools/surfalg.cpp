// batch front-end: documents in, deterministic json/text reports out
#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "surfalg/json_io.hpp"
#include "surfalg/regress.hpp"
#include "surfalg/tilting.hpp"

using namespace surfalg;

static long env_cap(long def) {
  if (const char* s = std::getenv("SURFALG_DEGREE_CAP")) {
    long v = std::atol(s);
    if (v > 0) return v;
  }
  return def;
}

static long star_cap(const MutationData& md) {
  long cap = 0;
  for (int h = 0; h < (int)md.qx.arrows.size(); ++h)
    if (md.in_star[h]) cap = std::max(cap, md.star_mn(h));
  return 2 * cap + 4;
}

static std::vector<std::string> split_commas(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (auto& a : args) {
    size_t p = 0;
    while (p <= a.size()) {
      size_t q = a.find(',', p);
      if (q == std::string::npos) q = a.size();
      if (q > p) out.push_back(a.substr(p, q - p));
      p = q + 1;
    }
  }
  return out;
}

static bool is_literal(const std::string& s) {
  try {
    rat_parse(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

static long parse_m(const std::string& s) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Err::BadInput, "weight m '" + s + "' is not an integer");
  }
}

// bind one channel (m or c) of command-line weight arguments:
//   name=value   binds a symbolic name from the document template
//   rep=value    (or O(rep)=value) overrides the orbit of arrow rep directly
//   value        binds the next unbound template symbol, in template order
struct ChannelBinding {
  std::map<std::string, std::string> by_sym;
  std::map<int, std::string> by_orbit;
};

static int orbit_of_rep(const TriangulationQuiver& tq, std::string rep) {
  if (rep.size() > 3 && rep.rfind("O(", 0) == 0 && rep.back() == ')')
    rep = rep.substr(2, rep.size() - 3);
  int a = tq.q.aindex(rep);
  return a < 0 ? -1 : tq.g_orbit_of[a];
}

static ChannelBinding bind_channel(const TriangulationQuiver& tq,
                                   const std::vector<std::string>& syms,
                                   const std::vector<std::string>& args) {
  ChannelBinding b;
  std::vector<std::string> positional;
  for (auto& tok : split_commas(args)) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      positional.push_back(tok);
      continue;
    }
    std::string lhs = tok.substr(0, eq), rhs = tok.substr(eq + 1);
    int o = orbit_of_rep(tq, lhs);
    if (o >= 0)
      b.by_orbit[o] = rhs;
    else
      b.by_sym[lhs] = rhs;
  }
  size_t p = 0;
  for (auto& s : syms)
    if (!b.by_sym.count(s) && p < positional.size()) b.by_sym[s] = positional[p++];
  if (p < positional.size())
    throw Error(Err::BadInput, "unbound weight value '" + positional[p] + "'");
  return b;
}

static Weights resolve_doc_weights(const TriangulationQuiver& tq,
                                   const std::vector<WeightTemplateEntry>& tmpl,
                                   const std::vector<std::string>& m_args,
                                   const std::vector<std::string>& c_args) {
  std::vector<std::string> m_syms, c_syms;
  auto note_sym = [](std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  };
  for (auto& e : tmpl) {
    if (!is_literal(e.m)) note_sym(m_syms, e.m);
    if (!is_literal(e.c)) note_sym(c_syms, e.c);
  }
  auto mb = bind_channel(tq, m_syms, m_args);
  auto cb = bind_channel(tq, c_syms, c_args);

  size_t n = tq.g_orbits.size();
  Weights w;
  w.m.assign(n, 1);
  w.c.assign(n, Rat(1));
  std::vector<char> seen(n, 0);
  for (auto& e : tmpl) {
    int o = orbit_of_rep(tq, e.rep);
    if (o < 0) throw Error(Err::UnknownArrow, "weight representative '" + e.rep + "'");
    if (seen[o]) throw Error(Err::OrbitMismatch, "orbit of '" + e.rep + "' weighted twice");
    seen[o] = 1;
    std::string mv = is_literal(e.m) ? e.m : (mb.by_sym.count(e.m) ? mb.by_sym.at(e.m) : "1");
    std::string cv = is_literal(e.c) ? e.c : (cb.by_sym.count(e.c) ? cb.by_sym.at(e.c) : "1");
    w.m[o] = parse_m(mv);
    w.c[o] = rat_parse(cv);
  }
  // inline per-orbit overrides win over the document, with a warning
  for (auto& [o, v] : mb.by_orbit) {
    long nv = parse_m(v);
    if (seen[o] && w.m[o] != nv)
      std::cerr << "warning: --m overrides document weight for the orbit of '"
                << tq.q.arrows[tq.g_orbits[o][0]].id << "'\n";
    w.m[o] = nv;
  }
  for (auto& [o, v] : cb.by_orbit) {
    Rat nv = rat_parse(v);
    if (seen[o] && w.c[o] != nv)
      std::cerr << "warning: --c overrides document parameter for the orbit of '"
                << tq.q.arrows[tq.g_orbits[o][0]].id << "'\n";
    w.c[o] = nv;
  }
  for (size_t o = 0; o < n; ++o) {
    if (w.m[o] < 1)
      throw Error(Err::BadInput, "weight m must be >= 1 on the orbit of '" +
                                     tq.q.arrows[tq.g_orbits[o][0]].id + "'");
    if (w.c[o] == 0)
      throw Error(Err::BadInput, "parameter c must be nonzero on the orbit of '" +
                                     tq.q.arrows[tq.g_orbits[o][0]].id + "'");
  }
  return w;
}

struct Common {
  std::string file;
  std::vector<std::string> m_args, c_args;
  bool allow_singular = false;
  bool text = false;
};

static void add_common(CLI::App* cmd, Common& c, bool weights = true) {
  cmd->add_option("file", c.file, "input document (surface or quiver json)")->required();
  if (weights) {
    cmd->add_option("--m", c.m_args, "weight bindings: value | name=value | O(rep)=value");
    cmd->add_option("--c", c.c_args, "parameter bindings: value | name=value | O(rep)=value");
    cmd->add_flag("--allow-possibly-singular", c.allow_singular,
                  "skip the singularity guard");
  }
  cmd->add_flag("--text", c.text, "human-readable output instead of json");
}

struct LoadedInput {
  InputDoc doc;
  TriangulationQuiver tq;
  Weights w;
};

static LoadedInput load_input(const Common& c) {
  LoadedInput L;
  L.doc = parse_input_doc(load_json_file(c.file));
  L.tq = doc_quiver(L.doc);
  L.w = resolve_doc_weights(L.tq, L.doc.weights, c.m_args, c.c_args);
  return L;
}

static void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

static std::vector<std::string> xi_list(const std::string& spec_file,
                                        const std::vector<std::string>& xi_args) {
  std::vector<std::string> xi = split_commas(xi_args);
  if (!spec_file.empty()) {
    Json j = load_json_file(spec_file);
    if (!j.contains("xi") || !j["xi"].is_array())
      throw Error(Err::BadInput, "mutation spec needs an 'xi' array");
    for (auto& x : j["xi"]) xi.push_back(x.get<std::string>());
  }
  if (xi.empty()) throw Error(Err::BadInput, "no virtual arrows given (use --xi or a spec file)");
  return xi;
}

static std::map<std::string, int> eps_map(const std::vector<std::string>& eps_args) {
  std::map<std::string, int> eps;
  for (auto& tok : split_commas(eps_args)) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw Error(Err::BadInput, "--eps entries must look like edge=1 or edge=-1");
    int v = (int)parse_m(tok.substr(eq + 1));
    if (v != 1 && v != -1) throw Error(Err::BadInput, "epsilon values must be 1 or -1");
    eps[tok.substr(0, eq)] = v;
  }
  return eps;
}

int main(int argc, char** argv) {
  CLI::App app{"weighted triangulation algebras: build, mutate, deform, check"};
  app.require_subcommand(1);

  Common c_validate, c_build, c_basis, c_cartan, c_gabriel, c_mutate, c_blowup, c_deform,
      c_oracle, c_tilt;
  std::string mutate_spec, tilt_which = "T_xi";
  std::vector<std::string> mutate_xi, blowup_I, deform_I, deform_eps, tilt_xi;
  bool show_star = false, deform_star = false;
  std::string only;
  int jobs = 1;

  auto* v = app.add_subcommand("validate", "structural checks on an input document");
  add_common(v, c_validate, false);

  auto* b = app.add_subcommand("build", "present the algebra of a weighted input");
  add_common(b, c_build);

  auto* bs = app.add_subcommand("basis", "basis paths per vertex pair");
  add_common(bs, c_basis);

  auto* ca = app.add_subcommand("cartan", "Cartan matrix");
  add_common(ca, c_cartan);

  auto* ga = app.add_subcommand("gabriel", "ordinary quiver (arrows outside rad^2)");
  add_common(ga, c_gabriel);

  auto* mu = app.add_subcommand("mutate", "present the mutated algebra");
  add_common(mu, c_mutate);
  mu->add_option("spec", mutate_spec, "mutation spec json ({\"xi\": [...]})");
  mu->add_option("--xi", mutate_xi, "virtual arrows, one per chosen orbit");
  mu->add_flag("--show-star", show_star, "include the reduced quiver dump");

  auto* bl = app.add_subcommand("blowup", "blow up edges of a surface");
  add_common(bl, c_blowup);
  bl->add_option("--I", blowup_I, "edges to blow up")->required();

  auto* de = app.add_subcommand("deform", "blow up, then mutate along epsilon");
  add_common(de, c_deform);
  de->add_option("--I", deform_I, "edges to blow up")->required();
  de->add_option("--eps", deform_eps, "orientation choices edge=1|-1")->required();
  de->add_flag("--show-star", deform_star, "include the reduced quiver dump");

  auto* oc = app.add_subcommand("oracle-check", "recheck an emitted algebra independently");
  add_common(oc, c_oracle, false);

  auto* tc = app.add_subcommand("tilting-check", "two-term complex family checks");
  add_common(tc, c_tilt);
  tc->add_option("--xi", tilt_xi, "virtual arrows, one per chosen orbit")->required();
  tc->add_option("--which", tilt_which, "T_xi | That_xi | T_xi_mu");

  auto* rg = app.add_subcommand("regress", "run the bundled regression suite");
  rg->add_option("--only", only, "run only rows whose name contains this substring");
  rg->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*v) {
      auto doc = parse_input_doc(load_json_file(c_validate.file));
      auto tq = doc_quiver(doc);
      if (c_validate.text) {
        std::cout << "valid: " << tq.q.vertices.size() << " vertices, "
                  << tq.q.arrows.size() << " arrows, " << tq.g_orbits.size()
                  << " cycle orbits\n";
      } else {
        emit(validation_summary_json(tq));
      }
    } else if (*b || *bs || *ca || *ga) {
      const Common& c = *b ? c_build : *bs ? c_basis : *ca ? c_cartan : c_gabriel;
      auto L = load_input(c);
      auto alg = build_wta(L.tq, L.w, c.allow_singular);
      if (*ga) {
        auto rs = complete_with_retry(alg.q, alg.relations,
                                      env_cap(default_cap(L.tq, L.w)));
        auto gq = gabriel_quiver(alg, rs);
        auto wit = not_wta_witness(gq);
        if (c.text) {
          for (auto& a : gq.arrows)
            std::cout << a.id << ": " << gq.vertices[a.src] << " -> "
                      << gq.vertices[a.tgt] << "\n";
          std::cout << "degree witness: " << (wit ? *wit : "none") << "\n";
        } else {
          Json j;
          j["schema"] = kSchema;
          j["vertices"] = gq.vertices;
          Json arrows = Json::array();
          for (auto& a : gq.arrows)
            arrows.push_back({{"id", a.id},
                              {"source", gq.vertices[a.src]},
                              {"target", gq.vertices[a.tgt]}});
          j["arrows"] = arrows;
          j["degree_witness"] = wit ? Json(*wit) : Json(nullptr);
          emit(j);
        }
      } else {
        Json full = algebra_to_json(alg);
        if (c.text) {
          if (*ca)
            std::cout << "dimension " << alg.dimension << "\n" << cartan_text(alg.cartan);
          else
            std::cout << algebra_text(alg);
        } else if (*bs) {
          emit(Json{{"schema", kSchema},
                    {"dimension", full["dimension"]},
                    {"basis", full["basis"]}});
        } else if (*ca) {
          emit(Json{{"schema", kSchema},
                    {"dimension", full["dimension"]},
                    {"cartan", full["cartan"]}});
        } else {
          emit(full);
        }
      }
    } else if (*mu) {
      auto L = load_input(c_mutate);
      auto md = build_mutated_quiver(L.tq, L.w, xi_list(mutate_spec, mutate_xi),
                                     c_mutate.allow_singular);
      auto alg = build_mutation(md);
      if (c_mutate.text) {
        std::cout << algebra_text(alg);
      } else {
        Json j = algebra_to_json(alg);
        if (show_star) {
          RelationAudit audit;
          mutation_relations(md, &audit);
          j["star"] = star_to_json(md, audit);
        }
        emit(j);
      }
    } else if (*bl) {
      auto L = load_input(c_blowup);
      if (!L.doc.is_surface)
        throw Error(Err::BadInput, "blowup needs a surface document");
      auto r = blow_up(L.doc.surface, split_commas(blowup_I));
      auto ntq = quiver_from_surface(r.surface);
      auto nw = blow_up_weights(L.doc.surface, L.w, r);
      std::vector<WeightTemplateEntry> entries;
      for (int o = 0; o < (int)ntq.g_orbits.size(); ++o)
        entries.push_back({ntq.q.arrows[ntq.g_orbits[o][0]].id,
                           std::to_string(nw.m[o]), rat_str(nw.c[o])});
      Json j = surface_doc_json(r.surface, entries);
      j["I"] = r.I;
      Json rep = Json::object();
      for (auto& [e, abcd] : r.abcd) rep[e] = {abcd[0], abcd[1], abcd[2], abcd[3]};
      j["replacements"] = rep;
      emit(j);
    } else if (*de) {
      auto L = load_input(c_deform);
      if (!L.doc.is_surface)
        throw Error(Err::BadInput, "deform needs a surface document");
      auto r = blow_up(L.doc.surface, split_commas(deform_I));
      auto ntq = quiver_from_surface(r.surface);
      auto nw = blow_up_weights(L.doc.surface, L.w, r);
      auto xi = epsilon_to_xi(r, eps_map(deform_eps));
      auto md = build_mutated_quiver(ntq, nw, xi, c_deform.allow_singular);
      auto alg = build_mutation(md);
      if (c_deform.text) {
        std::cout << algebra_text(alg);
      } else {
        Json j = algebra_to_json(alg);
        if (deform_star) {
          RelationAudit audit;
          mutation_relations(md, &audit);
          j["star"] = star_to_json(md, audit);
        }
        emit(j);
      }
    } else if (*oc) {
      auto doc = parse_algebra_doc(load_json_file(c_oracle.file));
      long maxlen = 2;
      for (auto& r : doc.relations)
        for (auto& t : r) maxlen = std::max(maxlen, (long)t.path.length());
      auto rs = complete_with_retry(doc.q, doc.relations, (int)env_cap(2 * (maxlen + 1) + 4));
      std::vector<std::string> mismatches;
      if (rs.dimension != doc.dimension)
        mismatches.push_back("dimension: oracle " + std::to_string(rs.dimension) +
                             " vs document " + std::to_string(doc.dimension));
      if (rs.cartan != doc.cartan) mismatches.push_back("cartan matrices differ");
      for (int i = 0; i < (int)doc.q.vertices.size(); ++i)
        for (int k = 0; k < (int)doc.q.vertices.size(); ++k) {
          std::string key = doc.q.vertices[i] + "->" + doc.q.vertices[k];
          auto it = doc.basis_counts.find(key);
          long claimed = it == doc.basis_counts.end() ? 0 : it->second;
          if (claimed != rs.cartan[i][k])
            mismatches.push_back("basis count " + key + ": oracle " +
                                 std::to_string(rs.cartan[i][k]) + " vs document " +
                                 std::to_string(claimed));
        }
      Json j;
      j["schema"] = kSchema;
      j["dimension"] = rs.dimension;
      j["cartan"] = rs.cartan;
      j["agrees"] = mismatches.empty();
      j["mismatches"] = mismatches;
      if (c_oracle.text)
        std::cout << (mismatches.empty() ? "agrees" : "MISMATCH") << ", oracle dimension "
                  << rs.dimension << "\n";
      else
        emit(j);
      return mismatches.empty() ? 0 : 1;
    } else if (*tc) {
      auto L = load_input(c_tilt);
      auto md = build_mutated_quiver(L.tq, L.w, xi_list("", tilt_xi),
                                     c_tilt.allow_singular);
      auto base = build_wta(L.tq, L.w, c_tilt.allow_singular);
      auto mut = build_mutation(md);
      TiltingReport rep;
      bool approx;
      if (tilt_which == "T_xi") {
        auto brs = complete_with_retry(base.q, base.relations,
                                       env_cap(default_cap(L.tq, L.w)));
        auto bops = make_ops(base, brs);
        rep = end_algebra_summary(bops, build_T_xi(bops, md), mut.cartan, mut.dimension);
        approx = approximation_check(bops, md, "T_xi");
      } else if (tilt_which == "That_xi") {
        auto mrs = complete_with_retry(mut.q, mut.relations, env_cap(star_cap(md)));
        auto mops = make_ops(mut, mrs);
        rep = end_algebra_summary(mops, build_That_xi(mops, md), base.cartan,
                                  base.dimension);
        approx = approximation_check(mops, md, "That_xi");
      } else if (tilt_which == "T_xi_mu") {
        auto brs = complete_with_retry(base.q, base.relations,
                                       env_cap(default_cap(L.tq, L.w)));
        auto bops = make_ops(base, brs);
        rep = end_algebra_summary(bops, build_T_xi_mu(bops, md),
                                  t_xi_mu_target(md, base.cartan), base.dimension);
        approx = approximation_check(bops, md, "T_xi_mu");
      } else {
        throw Error(Err::BadInput, "--which must be T_xi, That_xi or T_xi_mu");
      }
      bool ok = rep.t1_holds && rep.cartan_match && rep.dim_end == rep.dim_target && approx;
      Json j;
      j["schema"] = kSchema;
      j["which"] = rep.which;
      j["t1_holds"] = rep.t1_holds;
      j["dim_end"] = rep.dim_end;
      j["dim_target"] = rep.dim_target;
      j["cartan_match"] = rep.cartan_match;
      j["approximation"] = approx;
      if (c_tilt.text)
        std::cout << rep.which << ": " << (ok ? "ok" : "FAILED") << ", End dimension "
                  << rep.dim_end << " (target " << rep.dim_target << ")\n";
      else
        emit(j);
      return ok ? 0 : 1;
    } else if (*rg) {
      auto rows = regress::build_rows();
      std::vector<const regress::Row*> todo;
      for (auto& r : rows)
        if (only.empty() || r.name.find(only) != std::string::npos) todo.push_back(&r);
      std::vector<std::string> results(todo.size());
      std::atomic<size_t> next{0};
      auto worker = [&] {
        for (size_t i = next++; i < todo.size(); i = next++) {
          try {
            results[i] = todo[i]->run();
          } catch (const Error& e) {
            results[i] = std::string("error ") + err_name(e.code) + ": " + e.what();
          } catch (const std::exception& e) {
            results[i] = std::string("exception: ") + e.what();
          }
        }
      };
      int nw = std::max(1, jobs);
      std::vector<std::thread> pool;
      for (int t = 1; t < nw; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      int failed = 0;
      for (size_t i = 0; i < todo.size(); ++i) {
        if (results[i].empty()) {
          std::cout << "PASS " << todo[i]->name << "\n";
        } else {
          std::cout << "FAIL " << todo[i]->name << ": " << results[i] << "\n";
          failed++;
        }
      }
      Json j;
      j["schema"] = kSchema;
      j["total"] = (long)todo.size();
      j["passed"] = (long)todo.size() - failed;
      j["failed"] = failed;
      emit(j);
      return failed ? 1 : 0;
    }
  } catch (const Error& e) {
    Json j;
    j["schema"] = kSchema;
    j["error"] = err_name(e.code);
    j["message"] = e.what();
    emit(j);
    return 2;
  }
  return 0;
}
