#pragma once

// the shared programmatic corpus lives in the library now; keep the old alias
#include "surfalg/corpus.hpp"

namespace fx = surfalg::corpus;
