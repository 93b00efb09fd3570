#pragma once

#include <string>
#include <vector>

namespace siltgeo {

/* The built-in verification run: the pentagon algebra and the four-vertex
   linear quiver with its standard two-summand presilting complex, checked
   against the frozen tables.  Deterministic and byte-stable. */
struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  bool ok = false;
  std::vector<VerifyCheck> checks;
  std::string report;  /* canonical report, identical across runs */
};

VerifyResult verify_paper();

}  // namespace siltgeo
