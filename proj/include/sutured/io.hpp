#pragma once

// JSON encodings shared by the CLI and the tests.

#include <string>

#include <json.hpp>

#include "sutured/abelian.hpp"
#include "sutured/diagram.hpp"
#include "sutured/fox.hpp"
#include "sutured/maslov.hpp"
#include "sutured/oracle.hpp"
#include "sutured/polytope.hpp"

namespace sutured::io {

using Json = nlohmann::ordered_json;

// Integers are plain JSON numbers when they fit in a long, decimal strings
// otherwise.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json to_json(const Rational& x);  // "p/q" (or "p" when integral)
Rational rational_from_json(const Json& j);

Json to_json(const FinAbGroup& g);
Json to_json(const GroupElement& e);
Json to_json(const GroupRingElem& x);
GroupRingElem group_ring_from_json(const Json& j, const FinAbGroup& g);

diagram::SuturedDiagram diagram_from_json(const Json& j);
Json to_json(const diagram::SuturedDiagram& d);
Json to_json(const diagram::GeneratorMatching& x);

struct PresentationFile {
  fox::Presentation presentation;
  fox::InclusionData inclusion;
};

PresentationFile presentation_from_json(const Json& j);
Json to_json(const PresentationFile& p);

polytope::SupportData support_from_json(const Json& j);
Json to_json(const polytope::SupportData& s);
Json to_json(const polytope::SupportPolytope& p);

Json to_json(const oracle::RankTable& t);

// Complex entries as {"re": x, "im": y}, [x, y] or a plain number.
maslov::ComplexMatrix complex_matrix_from_json(const Json& j);
maslov::RealMatrix real_matrix_from_json(const Json& j);

// Reads and parses a JSON file; Error("BadInput") on failure.
Json read_json_file(const std::string& path);

}  // namespace sutured::io
