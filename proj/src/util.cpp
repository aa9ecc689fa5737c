#include <sstream>

#include "surfalg/error.hpp"
#include "surfalg/rat.hpp"

namespace surfalg {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotTwoRegular: return "NotTwoRegular";
    case Err::FCycleNotLength1Or3: return "FCycleNotLength1Or3";
    case Err::FNotFollowingArrows: return "FNotFollowingArrows";
    case Err::Disconnected: return "Disconnected";
    case Err::FewerThanTwoVertices: return "FewerThanTwoVertices";
    case Err::UnknownArrow: return "UnknownArrow";
    case Err::APrimeUndefined: return "APrimeUndefined";
    case Err::InvalidSurface: return "InvalidSurface";
    case Err::ResultNotTwoRegular: return "ResultNotTwoRegular";
    case Err::EmptyEdgeSet: return "EmptyEdgeSet";
    case Err::UnknownEdge: return "UnknownEdge";
    case Err::NotBoundaryEdge: return "NotBoundaryEdge";
    case Err::MissingEpsilonValue: return "MissingEpsilonValue";
    case Err::OrbitMismatch: return "OrbitMismatch";
    case Err::AssumptionViolated: return "AssumptionViolated";
    case Err::PossiblySingular: return "PossiblySingular";
    case Err::ClosedFormMismatch: return "ClosedFormMismatch";
    case Err::SocleViolation: return "SocleViolation";
    case Err::IdentityFailed: return "IdentityFailed";
    case Err::CapExceeded: return "CapExceeded";
    case Err::InconsistentRelations: return "InconsistentRelations";
    case Err::NotVirtualOrbit: return "NotVirtualOrbit";
    case Err::OrbitRepeated: return "OrbitRepeated";
    case Err::TooFewVertices: return "TooFewVertices";
    case Err::SingularSpherical: return "SingularSpherical";
    case Err::SpecMismatch: return "SpecMismatch";
    case Err::UnsupportedShift: return "UnsupportedShift";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(Err c, const std::string& msg)
    : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw Error(Err::BadInput, "empty rational literal");
  // validate by hand first; mpq_class aborts on garbage instead of throwing
  auto ok_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit((unsigned char)t[i])) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den))
    throw Error(Err::BadInput, "bad rational literal '" + s + "'");
  mpq_class r(num + "/" + den);
  if (r.get_den() == 0) throw Error(Err::BadInput, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  if (r.get_den() == 1)
    os << r.get_num();
  else
    os << r.get_num() << "/" << r.get_den();
  return os.str();
}

}  // namespace surfalg
