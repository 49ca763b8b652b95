#include "sutured/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "sutured/error.hpp"
#include "sutured/io.hpp"

#ifndef SUTURED_KIT_FIXTURE_DIR
#define SUTURED_KIT_FIXTURE_DIR "fixtures"
#endif

namespace sutured::cli {

using io::Json;

namespace {

diagram::Diagram load_diagram(const std::string& path) {
  return diagram::Diagram(io::diagram_from_json(io::read_json_file(path)));
}

Json check_report(const std::string& path) {
  diagram::SuturedDiagram d = io::diagram_from_json(io::read_json_file(path));
  diagram::ValidationReport rep = diagram::validate(d);
  Json out;
  out["valid"] = rep.valid;
  if (!rep.valid) {
    out["violations"] = rep.violations;
    return out;
  }
  diagram::Diagram dg(std::move(d));
  diagram::BalanceReport bal = dg.balance();
  out["balanced"] = bal.balanced;
  out["admissible"] = dg.is_admissible();
  if (!bal.balanced) out["balance_reasons"] = bal.reasons;
  auto [plus, minus] = dg.euler_characteristics();
  out["euler_characteristics"] = Json{{"R_plus", plus}, {"R_minus", minus}};
  out["h1"] = io::to_json(dg.h1());
  out["periodic_domain_rank"] = dg.periodic_lattice().cols();
  return out;
}

Json generators_report(const std::string& path) {
  diagram::Diagram d = load_diagram(path);
  Json gens = Json::array();
  for (const auto& x : d.generators())
    gens.push_back(Json{{"points", io::to_json(x)}, {"sign", d.generator_sign(x)}});
  return Json{{"count", gens.size()}, {"generators", gens}};
}

Json spinc_report(const std::string& path) {
  diagram::Diagram d = load_diagram(path);
  std::vector<diagram::GeneratorMatching> gens = d.generators();
  diagram::SpincPartition part = d.spinc_partition();
  Json classes = Json::array();
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    Json members = Json::array();
    for (auto i : part.classes[c]) members.push_back(diagram::to_string(gens[i]));
    classes.push_back(Json{{"generators", members}, {"offset", io::to_json(part.offset[c])}});
  }
  return Json{{"group", io::to_json(d.h1())},
              {"base_class", part.base_class},
              {"classes", classes}};
}

Json euler_report(const std::string& path) {
  diagram::Diagram d = load_diagram(path);
  diagram::EulerPolynomial e = d.euler_polynomial();
  return Json{{"group", io::to_json(e.group)}, {"polynomial", io::to_json(e.polynomial)}};
}

Json torsion_report(const std::string& path) {
  io::PresentationFile p = io::presentation_from_json(io::read_json_file(path));
  fox::TorsionResult t = fox::torsion(p.presentation, p.inclusion);
  return Json{{"group", io::to_json(t.group)}, {"torsion", io::to_json(t.torsion)}};
}

Json crosscheck_report(const std::string& diagram_path, const std::string& pres_path) {
  diagram::Diagram d = load_diagram(diagram_path);
  io::PresentationFile p = io::presentation_from_json(io::read_json_file(pres_path));
  CrosscheckResult r = crosscheck(d, p.presentation, p.inclusion);
  Json out;
  out["match"] = r.match;
  out["mode"] = r.mode.empty() ? Json(nullptr) : Json(r.mode);
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["euler"] = Json{{"group", io::to_json(r.euler.group)}, {"polynomial", io::to_json(r.euler.polynomial)}};
  out["torsion"] = Json{{"group", io::to_json(r.torsion.group)}, {"torsion", io::to_json(r.torsion.torsion)}};
  return out;
}

Json polytope_report(const std::string& path, bool translate, const std::vector<long>& alpha,
                     bool have_alpha) {
  Json in = io::read_json_file(path);
  polytope::SupportData s;
  if (in.contains("points")) {
    s = io::support_from_json(in);
  } else {
    diagram::Diagram d(io::diagram_from_json(in));
    diagram::EulerPolynomial e = d.euler_polynomial();
    s = polytope::support_from_euler_polynomial(e.polynomial, e.group);
  }
  polytope::SupportPolytope p = polytope::hull(s);
  if (translate) p = polytope::canonical_translate(p);
  Json out = io::to_json(p);
  out["support"] = io::to_json(s);
  if (have_alpha) {
    polytope::IntVector a(alpha.begin(), alpha.end());
    polytope::Face f = polytope::face(polytope::hull(s), s, a);
    if (translate) f.polytope = polytope::canonical_translate(f.polytope);
    Json pts = Json::array();
    for (auto i : f.points) pts.push_back(i);
    out["alpha"] = alpha;
    out["y_t"] = io::to_json(polytope::support_function(p, a));
    out["face"] = Json{{"c", io::to_json(f.value)}, {"polytope", io::to_json(f.polytope)}, {"points", pts}};
  }
  return out;
}

Json maslov_report(const std::string& path, int samples) {
  Json in = io::read_json_file(path);
  if (!in.contains("kind") || !in.at("kind").is_string())
    throw Error("BadInput", "maslov input needs a \"kind\"");
  const std::string kind = in.at("kind").get<std::string>();
  Json out{{"kind", kind}};
  if (kind == "lagrangian" || kind == "symplectic") {
    maslov::UnitaryLoop loop;
    if (in.contains("samples")) {
      for (const auto& m : in.at("samples")) loop.samples.push_back(io::complex_matrix_from_json(m));
    } else if (in.contains("phases")) {
      std::vector<double> phases;
      for (const auto& c : in.at("phases")) phases.push_back(c.get<double>());
      // diag(exp(i*pi*c t)) for Lagrangian loops, diag(exp(2 i pi c t)) otherwise
      const double scale = kind == "lagrangian" ? std::numbers::pi : 2 * std::numbers::pi;
      loop = maslov::sample_loop(
          [&](double t) {
            maslov::ComplexMatrix a = maslov::ComplexMatrix::Zero(static_cast<Eigen::Index>(phases.size()),
                                                                  static_cast<Eigen::Index>(phases.size()));
            for (std::size_t j = 0; j < phases.size(); ++j)
              a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
                  std::polar(1.0, scale * phases[j] * t);
            return a;
          },
          samples);
    } else {
      throw Error("BadInput", "loop needs \"samples\" or \"phases\"");
    }
    out["samples"] = loop.samples.size();
    out["index"] = kind == "lagrangian" ? maslov::maslov_loop_index(loop)
                                        : maslov::symplectic_loop_index(loop);
  } else if (kind == "spectral_flow") {
    maslov::SymmetricPath path;
    if (in.contains("samples")) {
      for (const auto& m : in.at("samples")) path.samples.push_back(io::real_matrix_from_json(m));
    } else if (in.contains("endpoints") && in.at("endpoints").size() == 2) {
      const maslov::RealMatrix a = io::real_matrix_from_json(in.at("endpoints")[0]);
      const maslov::RealMatrix b = io::real_matrix_from_json(in.at("endpoints")[1]);
      if (a.rows() != b.rows()) throw Error("BadDimension", "endpoints differ in size");
      path = maslov::sample_path([&](double s) -> maslov::RealMatrix { return (1 - s) * a + s * b; },
                                 0.0, 1.0, samples);
    } else {
      throw Error("BadInput", "path needs \"samples\" or two \"endpoints\"");
    }
    maslov::SpectralFlowResult r = maslov::spectral_flow_detail(path);
    out["samples"] = path.samples.size();
    out["spectral_flow"] = r.endpoint_count;
    out["endpoint_count"] = r.endpoint_count;
    out["crossing_count"] = r.crossing_count;
  } else {
    throw Error("BadInput", "unknown maslov kind '" + kind + "'");
  }
  return out;
}

Json fixtures_report() {
  const std::string dir = fixture_directory();
  Json index = io::read_json_file(dir + "/index.json");
  Json list = Json::array();
  for (const auto& f : index) {
    Json item{{"name", f.at("name")}, {"description", f.value("description", "")}};
    for (const char* key : {"diagram", "presentation", "support"}) {
      if (f.contains(key) && f.at(key).is_string())
        item[key] = dir + "/" + f.at(key).get<std::string>();
      else
        item[key] = nullptr;
    }
    if (item["support"].is_string()) {
      polytope::SupportData s = io::support_from_json(io::read_json_file(item["support"]));
      item["support_points"] = s.points.size();
    }
    list.push_back(std::move(item));
  }
  return Json{{"directory", dir}, {"fixtures", list}};
}

Json oracle_report(const std::vector<long>& torus, const std::vector<std::string>& closed,
                   const std::vector<std::string>& sum, bool with_closed) {
  auto integer = [](const std::string& s) {
    Integer x;
    if (x.set_str(s, 10) != 0) throw Error("BadInput", "not an integer: " + s);
    return x;
  };
  if (!torus.empty()) {
    Json out = io::to_json(oracle::solid_torus_sfh(torus[0], torus[1], torus[2]));
    out["p"] = torus[0];
    out["q"] = torus[1];
    out["n"] = torus[2];
    return out;
  }
  if (!closed.empty()) {
    const Integer n = integer(closed[1]);
    if (!n.fits_slong_p()) throw Error("BadInput", "n too large");
    return Json{{"rank", io::to_json(oracle::closed_manifold_rank(integer(closed[0]), n.get_si()))}};
  }
  return Json{{"rank", io::to_json(oracle::connected_sum_rank(integer(sum[0]), integer(sum[1]), with_closed))},
              {"with_closed", with_closed}};
}

Json error_json(const std::string& code, const std::string& detail) {
  return Json{{"error", code}, {"detail", detail}};
}

}  // namespace

CrosscheckResult crosscheck(const diagram::Diagram& d, const fox::Presentation& p,
                            const fox::InclusionData& k) {
  CrosscheckResult r;
  r.euler = d.euler_polynomial();
  r.torsion = fox::torsion(p, k);
  if (!r.euler.group.isomorphic(r.torsion.group)) {
    r.reason = "homology groups differ";
    return r;
  }
  const FinAbGroup& g = r.torsion.group;
  if (doteq_equal(r.euler.polynomial, r.torsion.torsion, g, false)) {
    r.match = true;
    r.mode = "plain";
  } else if (doteq_equal(r.euler.polynomial, r.torsion.torsion, g, true)) {
    r.match = true;
    r.mode = "inverted";
  } else {
    r.reason = "no unit multiple matches";
  }
  return r;
}

std::string fixture_directory() {
  if (const char* env = std::getenv("SUTURED_KIT_FIXTURES"); env && *env) return env;
  return SUTURED_KIT_FIXTURE_DIR;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of balanced sutured manifolds from diagrams and presentations.",
               "sutured_kit"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the JSON result to this file instead of stdout");

  std::string d_path, p_path;
  auto* check = app.add_subcommand("check", "Validate a diagram; report balance and admissibility");
  check->add_option("diagram", d_path, "Diagram JSON")->required()->check(CLI::ExistingFile);
  auto* generators = app.add_subcommand("generators", "List generators with their signs");
  generators->add_option("diagram", d_path, "Diagram JSON")->required()->check(CLI::ExistingFile);
  auto* spinc = app.add_subcommand("spinc", "Partition generators into relative Spin^c classes");
  spinc->add_option("diagram", d_path, "Diagram JSON")->required()->check(CLI::ExistingFile);
  auto* euler = app.add_subcommand("euler", "Spin^c-graded Euler characteristic of a diagram");
  euler->add_option("diagram", d_path, "Diagram JSON")->required()->check(CLI::ExistingFile);
  auto* torsion = app.add_subcommand("torsion", "Sutured torsion of a presentation via Fox calculus");
  torsion->add_option("presentation", p_path, "Presentation JSON")->required()->check(CLI::ExistingFile);
  auto* cross = app.add_subcommand("crosscheck", "Compare a diagram's Euler polynomial with a presentation's torsion");
  cross->add_option("diagram", d_path, "Diagram JSON")->required()->check(CLI::ExistingFile);
  cross->add_option("presentation", p_path, "Presentation JSON")->required()->check(CLI::ExistingFile);

  std::string poly_path;
  bool translate = false;
  std::vector<long> alpha;
  auto* poly = app.add_subcommand("polytope", "Hull of support points (support JSON or diagram JSON)");
  poly->add_option("input", poly_path, "Support JSON ({\"points\": ...}) or diagram JSON")
      ->required()
      ->check(CLI::ExistingFile);
  poly->add_flag("--translate", translate, "Translate the lex-minimal vertex to the origin");
  auto* alpha_opt = poly->add_option("--alpha", alpha, "Class alpha for y_t and the face P_alpha, e.g. 1,0")
                        ->delimiter(',');

  std::vector<long> torus;
  std::vector<std::string> closed, sum;
  bool with_closed = false;
  auto* orc = app.add_subcommand("oracle", "Closed-form SFH ranks");
  auto* torus_opt = orc->add_option("--solid-torus", torus, "P Q N: SFH of T(p,q;n)")->expected(3);
  auto* closed_opt = orc->add_option("--closed", closed, "HF N: rank for a closed manifold with N punctures")
                         ->expected(2);
  auto* sum_opt = orc->add_option("--connected-sum", sum, "A B: rank of a connected sum")->expected(2);
  orc->add_flag("--with-closed", with_closed, "Second summand of --connected-sum is closed");
  torus_opt->excludes(closed_opt)->excludes(sum_opt);
  closed_opt->excludes(sum_opt);

  std::string maslov_path;
  int samples = 512;
  auto* mas = app.add_subcommand("maslov", "Maslov index of a loop or spectral flow of a path");
  mas->add_option("input", maslov_path, "Loop or path JSON")->required()->check(CLI::ExistingFile);
  mas->add_option("--samples", samples, "Sampling for parametric inputs")->check(CLI::Range(1, 1 << 20));

  auto* fix = app.add_subcommand("fixtures", "List bundled fixtures");

  try {
    app.parse(argc, argv);
    if (orc->parsed() && torus.empty() && closed.empty() && sum.empty())
      throw CLI::RequiredError("oracle needs --solid-torus, --closed or --connected-sum");
    if (with_closed && sum.empty()) throw CLI::ValidationError("--with-closed", "requires --connected-sum");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  Json result;
  int code = 0;
  try {
    if (check->parsed()) result = check_report(d_path);
    else if (generators->parsed()) result = generators_report(d_path);
    else if (spinc->parsed()) result = spinc_report(d_path);
    else if (euler->parsed()) result = euler_report(d_path);
    else if (torsion->parsed()) result = torsion_report(p_path);
    else if (cross->parsed()) result = crosscheck_report(d_path, p_path);
    else if (poly->parsed()) result = polytope_report(poly_path, translate, alpha, alpha_opt->count() > 0);
    else if (orc->parsed()) result = oracle_report(torus, closed, sum, with_closed);
    else if (mas->parsed()) result = maslov_report(maslov_path, samples);
    else if (fix->parsed()) result = fixtures_report();
  } catch (const Error& e) {
    result = error_json(e.code(), e.what());
    code = 1;
  } catch (const nlohmann::json::exception& e) {
    result = error_json("BadInput", e.what());
    code = 1;
  }

  const std::string text = result.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      out << error_json("BadOutput", "cannot write " + output).dump(2) << "\n";
      return 1;
    }
    f << text;
  }
  return code;
}

}  // namespace sutured::cli
