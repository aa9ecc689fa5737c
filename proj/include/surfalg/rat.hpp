#pragma once

#include <gmpxx.h>

#include <string>

namespace surfalg {

// exact rationals; gmp keeps results canonical as long as inputs are
using Rat = mpq_class;

// parse "p" or "p/q" (q > 0 after canonicalization); throws Err::BadInput
Rat rat_parse(const std::string& s);

// render as "p" or "p/q", matching the serialization used in all json output
std::string rat_str(const Rat& r);

}  // namespace surfalg
