#include "sutured/io.hpp"

#include <algorithm>
#include <fstream>
#include <complex>
#include <limits>
#include <set>

#include "sutured/error.hpp"

namespace sutured::io {

namespace {

Error bad(const std::string& what) { return Error("BadInput", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw bad(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw bad(what + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::vector<Integer> integer_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw bad(what + " must be an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json integer_array(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw bad("not an integer: " + j.dump());
    return x;
  }
  throw bad("not an integer: " + j.dump());
}

Json to_json(const Rational& x) {
  if (x.get_den() == 1) return Json(x.get_num().get_str());
  return Json(x.get_num().get_str() + "/" + x.get_den().get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (!j.is_string()) throw bad("not a rational: " + j.dump());
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
    throw bad("not a rational: " + j.dump());
  q.canonicalize();
  return q;
}

Json to_json(const FinAbGroup& g) {
  return Json{{"free_rank", g.free_rank()}, {"torsion", integer_array(g.torsion())}};
}

Json to_json(const GroupElement& e) {
  return Json{{"exp_free", integer_array(e.free_part)},
              {"exp_torsion", integer_array(e.torsion_part)}};
}

Json to_json(const GroupRingElem& x) {
  Json a = Json::array();
  for (const auto& [e, c] : x.terms()) {
    Json t = to_json(e);
    t["coeff"] = to_json(c);
    a.push_back(std::move(t));
  }
  return a;
}

GroupRingElem group_ring_from_json(const Json& j, const FinAbGroup& g) {
  if (!j.is_array()) throw bad("group ring element must be an array of terms");
  GroupRingElem x;
  for (const auto& t : j) {
    GroupElement e{integer_list(field(t, "exp_free"), "exp_free"),
                   t.contains("exp_torsion") ? integer_list(t.at("exp_torsion"), "exp_torsion")
                                             : std::vector<Integer>{}};
    if (e.free_part.size() != g.free_rank() || e.torsion_part.size() != g.torsion().size())
      throw bad("term exponent does not match the group");
    x.add_term(g.reduce(e), integer_from_json(field(t, "coeff")));
  }
  return x;
}

diagram::SuturedDiagram diagram_from_json(const Json& j) {
  using namespace diagram;
  SuturedDiagram d;
  if (j.contains("name")) d.name = j.at("name").get<std::string>();
  try {
    d.genus = field(j, "genus").get<int>();
    d.boundary_circles = field(j, "boundary_circles").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("genus/boundary_circles: ") + e.what());
  }
  for (const auto& c : field(j, "alpha")) d.alpha.push_back(string_list(c, "alpha curve"));
  for (const auto& c : field(j, "beta")) d.beta.push_back(string_list(c, "beta curve"));
  const Json& signs = field(j, "crossing_sign");
  if (!signs.is_object()) throw bad("crossing_sign must be an object");
  for (const auto& [p, s] : signs.items()) {
    if (!s.is_number_integer()) throw bad("crossing sign of " + p + " must be an integer");
    d.crossing_sign[p] = s.get<int>();
  }
  for (const auto& r : field(j, "regions")) {
    Region reg;
    for (const auto& cyc : field(r, "cycles")) {
      std::vector<ArcRef> arcs;
      for (const auto& a : string_list(cyc, "region cycle")) arcs.push_back(parse_arc(a));
      reg.cycles.push_back(std::move(arcs));
    }
    if (r.contains("boundary_circles")) reg.boundary_circles = r.at("boundary_circles").get<std::size_t>();
    if (r.contains("genus")) reg.genus = r.at("genus").get<int>();
    d.regions.push_back(std::move(reg));
  }
  return d;
}

Json to_json(const diagram::SuturedDiagram& d) {
  Json j;
  j["name"] = d.name;
  j["genus"] = d.genus;
  j["boundary_circles"] = d.boundary_circles;
  j["alpha"] = d.alpha;
  j["beta"] = d.beta;
  Json signs = Json::object();
  for (const auto& [p, s] : d.crossing_sign) signs[p] = s;
  j["crossing_sign"] = signs;
  Json regions = Json::array();
  for (const auto& r : d.regions) {
    Json cycles = Json::array();
    for (const auto& cyc : r.cycles) {
      Json c = Json::array();
      for (const auto& a : cyc) c.push_back(diagram::format_arc(a));
      cycles.push_back(c);
    }
    regions.push_back(Json{{"cycles", cycles}, {"boundary_circles", r.boundary_circles}, {"genus", r.genus}});
  }
  j["regions"] = regions;
  return j;
}

Json to_json(const diagram::GeneratorMatching& x) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < x.points.size(); ++i)
    pts.push_back(Json{{"alpha", i + 1}, {"beta", x.beta_of_alpha[i] + 1}, {"point", x.points[i]}});
  return pts;
}

PresentationFile presentation_from_json(const Json& j) {
  PresentationFile p;
  p.presentation.generator_names = string_list(field(j, "generators"), "generators");
  for (const auto& r : string_list(field(j, "relators"), "relators"))
    p.presentation.relators.push_back(fox::parse_word(r, p.presentation.generator_names));
  const Json& genus = field(j, "boundary_genus");
  if (!genus.is_number_integer() || genus.get<long>() < 0)
    throw bad("boundary_genus must be a nonnegative integer");
  p.presentation.boundary_genus = genus.get<std::size_t>();
  if (j.contains("tree_generators"))
    for (const auto& name : string_list(j.at("tree_generators"), "tree_generators")) {
      const auto& names = p.presentation.generator_names;
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw bad("tree generator '" + name + "' is not a generator");
      p.presentation.tree_generators.push_back(static_cast<std::size_t>(it - names.begin()));
    }
  if (j.contains("sigma_images"))
    for (const auto& w : string_list(j.at("sigma_images"), "sigma_images"))
      p.inclusion.sigma_images.push_back(fox::parse_word(w, p.presentation.generator_names));
  return p;
}

Json to_json(const PresentationFile& p) {
  const auto& names = p.presentation.generator_names;
  Json rel = Json::array(), sig = Json::array();
  for (const auto& r : p.presentation.relators) rel.push_back(fox::format_word(r, names));
  for (const auto& w : p.inclusion.sigma_images) sig.push_back(fox::format_word(w, names));
  Json out{{"generators", names},
           {"relators", rel},
           {"boundary_genus", p.presentation.boundary_genus},
           {"sigma_images", sig}};
  if (!p.presentation.tree_generators.empty()) {
    Json tree = Json::array();
    for (std::size_t i : p.presentation.tree_generators) tree.push_back(names[i]);
    out["tree_generators"] = tree;
  }
  return out;
}

polytope::SupportData support_from_json(const Json& j) {
  polytope::SupportData s;
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw bad("points must be an array");
  for (const auto& p : pts) s.points.push_back(integer_list(p, "point"));
  if (j.contains("dimension")) s.dimension = j.at("dimension").get<std::size_t>();
  else if (!s.points.empty()) s.dimension = s.points.front().size();
  for (const auto& p : s.points)
    if (p.size() != s.dimension) throw Error("BadDimension", "support points differ in length");
  if (j.contains("multiplicity")) {
    s.multiplicity = integer_list(j.at("multiplicity"), "multiplicity");
    if (s.multiplicity.size() != s.points.size())
      throw bad("multiplicity must have one entry per point");
    for (const auto& m : s.multiplicity)
      if (m < 1) throw bad("multiplicities must be positive");
  }
  std::set<std::vector<Integer>> distinct(s.points.begin(), s.points.end());
  if (distinct.size() != s.points.size()) throw bad("support points must be distinct");
  return s;
}

Json to_json(const polytope::SupportData& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(integer_array(p));
  return Json{{"dimension", s.dimension}, {"points", pts}, {"multiplicity", integer_array(s.multiplicity)}};
}

Json to_json(const polytope::SupportPolytope& p) {
  auto rational_array = [](const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  auto planes = [&](const std::vector<polytope::Facet>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(Json{{"normal", integer_array(f.normal)}, {"offset", to_json(f.offset)}});
    return a;
  };
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(rational_array(v));
  return Json{{"dimension", p.dimension},
              {"affine_dimension", p.affine_dimension},
              {"vertices", verts},
              {"facets", planes(p.facets)},
              {"equations", planes(p.equations)},
              {"symmetric", polytope::is_centrally_symmetric(p)}};
}

Json to_json(const oracle::RankTable& t) {
  Json ranks = Json::object();
  for (const auto& [i, r] : t.ranks) ranks[std::to_string(i)] = to_json(r);
  return Json{{"ranks", ranks}, {"total", to_json(t.total())}};
}

namespace {

double number(const Json& j) {
  if (!j.is_number()) throw bad("expected a number, got " + j.dump());
  return j.get<double>();
}

std::complex<double> complex_entry(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0]), number(j[1])};
  if (j.is_object()) return {j.contains("re") ? number(j.at("re")) : 0.0, j.contains("im") ? number(j.at("im")) : 0.0};
  throw bad("not a complex number: " + j.dump());
}

template <class Matrix, class Entry>
Matrix matrix_from_json(const Json& j, Entry entry) {
  if (!j.is_array()) throw bad("a matrix is an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw bad("matrices must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = entry(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

maslov::ComplexMatrix complex_matrix_from_json(const Json& j) {
  return matrix_from_json<maslov::ComplexMatrix>(j, complex_entry);
}

maslov::RealMatrix real_matrix_from_json(const Json& j) {
  return matrix_from_json<maslov::RealMatrix>(j, number);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadInput", path + ": " + e.what());
  }
}

}  // namespace sutured::io
