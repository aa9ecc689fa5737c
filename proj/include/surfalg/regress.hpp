#pragma once

#include <functional>
#include <string>
#include <vector>

namespace surfalg::regress {

// one independent regression row; run() returns "" on pass, a diagnostic
// message on failure
struct Row {
  std::string name;
  std::function<std::string()> run;
};

// the bundled suite: row names are grouped by prefix
//   dims/ mutdims/ cartan/ oracle/ identities/ counting/ tilting/ fuzz/
std::vector<Row> build_rows();

}  // namespace surfalg::regress
