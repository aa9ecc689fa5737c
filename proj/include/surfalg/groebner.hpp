#pragma once

#include <vector>

#include "surfalg/quiver.hpp"

namespace surfalg {

// linear combination of paths, kept sorted by descending monomial order with
// nonzero coefficients
struct Poly {
  std::vector<RelTerm> terms;
  bool zero() const { return terms.empty(); }
};

// length-lex monomial order with declaration-index tiebreak: returns <0, 0, >0
int mono_cmp(const Path& a, const Path& b);

struct Rule {
  Path lead;   // monic leading monomial
  Poly tail;   // lead = tail in the quotient; every tail monomial < lead
  bool active = true;
};

// completed degree-capped rewriting system for a path-algebra quotient
struct RewriteSystem {
  Quiver q;
  int cap = 0;
  std::vector<Rule> rules;
  std::vector<Path> std_monos;  // irreducible paths, BFS order (by length)
  long dimension = 0;
  std::vector<std::vector<long>> cartan;

  Poly normal_form(Poly p) const;
  Poly nf_path(const Path& p) const;
  bool is_std(const Path& p) const;
  int std_index(const Path& p) const;  // -1 when not standard
};

// overlap-close the relations up to words of length <= cap, then enumerate
// standard monomials and verify the cap certificate (every path of length
// cap-1 reduces to zero); throws CapExceeded / InconsistentRelations
RewriteSystem complete(const Quiver& q, const std::vector<Relation>& rels, int cap);

// one automatic retry with a doubled cap before CapExceeded escapes
RewriteSystem complete_with_retry(const Quiver& q, const std::vector<Relation>& rels,
                                  int cap);

int default_cap(const TriangulationQuiver& tq, const Weights& w);

}  // namespace surfalg
