#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfalg/algebra.hpp"
#include "surfalg/mutation.hpp"
#include "surfalg/quiver.hpp"
#include "surfalg/surface.hpp"

namespace surfalg {

// ordered keeps key order as written, so output is byte-stable
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "surfalg/1";

Json load_json_file(const std::string& path);  // Err::BadInput on failure

// weight entries as they appear in documents: m and c may be literal values
// or symbolic names bound on the command line
struct WeightTemplateEntry {
  std::string rep, m, c;
};

// an input document: a surface or an explicit quiver with its f map, plus an
// optional weight template
struct InputDoc {
  bool is_surface = false;
  Surface surface;
  Quiver quiver;
  std::vector<std::pair<std::string, std::string>> f_pairs;
  std::vector<WeightTemplateEntry> weights;
};

InputDoc parse_input_doc(const Json& j);
TriangulationQuiver doc_quiver(const InputDoc& doc);

Json surface_doc_json(const Surface& s, const std::vector<WeightTemplateEntry>& weights);
Json validation_summary_json(const TriangulationQuiver& tq);

Json algebra_to_json(const PresentedAlgebra& alg);

// the round-trip view needed to re-check a previously emitted algebra
struct AlgebraDoc {
  Quiver q;
  std::vector<Relation> relations;
  long dimension = 0;
  std::vector<std::vector<long>> cartan;
  std::map<std::string, long> basis_counts;  // "i->j" -> count
};

AlgebraDoc parse_algebra_doc(const Json& j);

// reduced-quiver dump for --show-star
Json star_to_json(const MutationData& md, const RelationAudit& audit);

// aligned human-readable rendering
std::string algebra_text(const PresentedAlgebra& alg);
std::string cartan_text(const std::vector<std::vector<long>>& cartan);

}  // namespace surfalg
