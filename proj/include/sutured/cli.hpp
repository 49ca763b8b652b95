#pragma once

#include <iosfwd>
#include <string>

#include "sutured/diagram.hpp"
#include "sutured/fox.hpp"

namespace sutured::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CrosscheckResult {
  bool match = false;
  std::string mode;  // "plain", "inverted" or empty
  std::string reason;
  diagram::EulerPolynomial euler;
  fox::TorsionResult torsion;
};

// Compares the Euler polynomial of a diagram with the torsion of a
// presentation of the same manifold. The two homology groups are identified
// through their Smith coordinates, so only the plain and the inverted
// identification are tried.
CrosscheckResult crosscheck(const diagram::Diagram& d, const fox::Presentation& p,
                            const fox::InclusionData& k);

// Fixture directory: SUTURED_KIT_FIXTURES when set, else the bundled one.
std::string fixture_directory();

}  // namespace sutured::cli
