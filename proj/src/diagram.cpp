#include "sutured/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sutured/error.hpp"

namespace sutured::diagram {

namespace {

char kind_letter(CurveKind k) { return k == CurveKind::Alpha ? 'a' : 'b'; }

std::string curve_label(CurveKind k, std::size_t curve) {
  return std::string(1, kind_letter(k)) + std::to_string(curve + 1);
}

// Name of the artificial vertex carried by a curve without crossings.
std::string artificial_vertex(CurveKind k, std::size_t curve) {
  return "<" + curve_label(k, curve) + ">";
}

const std::vector<std::vector<std::string>>& curves_of(const SuturedDiagram& d, CurveKind k) {
  return k == CurveKind::Alpha ? d.alpha : d.beta;
}

std::size_t arcs_on(const std::vector<std::string>& curve) {
  return std::max<std::size_t>(1, curve.size());
}

// Endpoint names of an arc as traversed (sign applied).
std::pair<std::string, std::string> arc_endpoints(const SuturedDiagram& d, const ArcRef& a) {
  const auto& curve = curves_of(d, a.kind)[a.curve];
  if (curve.empty()) {
    std::string v = artificial_vertex(a.kind, a.curve);
    return {v, v};
  }
  std::string tail = curve[a.index];
  std::string head = curve[(a.index + 1) % curve.size()];
  if (a.sign < 0) std::swap(tail, head);
  return {tail, head};
}

bool arc_in_range(const SuturedDiagram& d, const ArcRef& a) {
  const auto& curves = curves_of(d, a.kind);
  return a.curve < curves.size() && a.index < arcs_on(curves[a.curve]) &&
         (a.sign == 1 || a.sign == -1);
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string format_arc(const ArcRef& a) {
  return std::string(a.sign < 0 ? "-" : "") + curve_label(a.kind, a.curve) + "." +
         std::to_string(a.index);
}

ArcRef parse_arc(const std::string& text) {
  auto fail = [&] { return Error("BadArc", "cannot parse arc reference '" + text + "'"); };
  std::size_t pos = 0;
  ArcRef a;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    a.sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  if (pos >= text.size()) throw fail();
  if (text[pos] == 'a') a.kind = CurveKind::Alpha;
  else if (text[pos] == 'b') a.kind = CurveKind::Beta;
  else throw fail();
  ++pos;
  std::size_t dot = text.find('.', pos);
  if (dot == std::string::npos || dot == pos || dot + 1 >= text.size()) throw fail();
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw fail();
    std::size_t v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (text[i] < '0' || text[i] > '9') throw fail();
      v = v * 10 + static_cast<std::size_t>(text[i] - '0');
    }
    return v;
  };
  std::size_t curve = digits(pos, dot);
  if (curve == 0) throw fail();
  a.curve = curve - 1;
  a.index = digits(dot + 1, text.size());
  return a;
}

std::string to_string(const GeneratorMatching& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.points.size(); ++i) out += (i ? "," : "") + x.points[i];
  return out + "}";
}

std::vector<GeneratorMatching> enumerate_generators(const SuturedDiagram& d) {
  const std::size_t n = d.alpha.size();
  if (d.beta.size() != n) return {};
  std::map<std::string, std::size_t> beta_of;
  for (std::size_t j = 0; j < d.beta.size(); ++j)
    for (const auto& p : d.beta[j]) beta_of[p] = j;
  // Candidates per alpha curve, ordered by (beta index, point name).
  std::vector<std::vector<std::pair<std::size_t, std::string>>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : d.alpha[i])
      if (auto it = beta_of.find(p); it != beta_of.end()) options[i].push_back({it->second, p});
    std::sort(options[i].begin(), options[i].end());
  }
  std::vector<GeneratorMatching> out;
  GeneratorMatching cur{std::vector<std::size_t>(n), std::vector<std::string>(n)};
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& [b, p] : options[i]) {
      if (used[b]) continue;
      used[b] = true;
      cur.beta_of_alpha[i] = b;
      cur.points[i] = p;
      self(self, i + 1);
      used[b] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

ValidationReport validate(const SuturedDiagram& d) {
  ValidationReport rep;
  auto violate = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };

  if (d.genus < 0) violate("genus must be >= 0");
  if (d.boundary_circles < 1) violate("boundary_circles must be >= 1");

  std::map<std::string, int> on_alpha, on_beta;
  for (const auto& c : d.alpha)
    for (const auto& p : c) ++on_alpha[p];
  for (const auto& c : d.beta)
    for (const auto& p : c) ++on_beta[p];
  std::set<std::string> points;
  for (const auto& [p, n] : on_alpha) points.insert(p);
  for (const auto& [p, n] : on_beta) points.insert(p);
  for (const auto& p : points) {
    if (p.empty() || p.front() == '<') violate("invalid point name '" + p + "'");
    if (on_alpha[p] != 1)
      violate("point " + p + " lies on " + std::to_string(on_alpha[p]) + " alpha positions");
    if (on_beta[p] != 1)
      violate("point " + p + " lies on " + std::to_string(on_beta[p]) + " beta positions");
    auto it = d.crossing_sign.find(p);
    if (it == d.crossing_sign.end()) violate("point " + p + " has no crossing sign");
    else if (it->second != 1 && it->second != -1)
      violate("crossing sign of " + p + " must be +1 or -1");
  }
  for (const auto& [p, s] : d.crossing_sign)
    if (!points.count(p)) violate("crossing sign given for unknown point " + p);

  // arc -> signs of its occurrences in region boundaries
  std::map<std::tuple<int, std::size_t, std::size_t>, std::vector<int>> uses;
  bool refs_ok = true;
  long region_chi = 0;
  long contained = 0;
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    const Region& reg = d.regions[r];
    const std::string where = "region " + std::to_string(r);
    if (reg.genus != 0)
      violate(where + ": region genus " + std::to_string(reg.genus) + " unsupported (must be 0)");
    if (reg.cycles.empty() && reg.boundary_circles == 0)
      violate(where + ": no boundary (closed component)");
    region_chi += 2 - 2L * reg.genus - static_cast<long>(reg.cycles.size()) -
                  static_cast<long>(reg.boundary_circles);
    contained += static_cast<long>(reg.boundary_circles);
    for (std::size_t c = 0; c < reg.cycles.size(); ++c) {
      const auto& cyc = reg.cycles[c];
      if (cyc.empty()) {
        violate(where + ": empty boundary cycle");
        continue;
      }
      bool cycle_ok = true;
      for (const auto& a : cyc) {
        if (!arc_in_range(d, a)) {
          violate(where + ": arc " + format_arc(a) + " does not exist");
          cycle_ok = refs_ok = false;
          continue;
        }
        uses[{static_cast<int>(a.kind), a.curve, a.index}].push_back(a.sign);
      }
      if (!cycle_ok) continue;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const auto& cur = cyc[k];
        const auto& next = cyc[(k + 1) % cyc.size()];
        if (arc_endpoints(d, cur).second != arc_endpoints(d, next).first)
          violate(where + ": cycle breaks between " + format_arc(cur) + " and " +
                  format_arc(next));
      }
    }
  }

  long vertex_count = 0, arc_count = 0;
  for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta}) {
    const auto& curves = curves_of(d, k);
    for (std::size_t c = 0; c < curves.size(); ++c) {
      vertex_count += static_cast<long>(arcs_on(curves[c]));
      arc_count += static_cast<long>(arcs_on(curves[c]));
      for (std::size_t i = 0; i < arcs_on(curves[c]); ++i) {
        const ArcRef a{k, c, i, 1};
        auto it = uses.find({static_cast<int>(k), c, i});
        std::vector<int> s = it == uses.end() ? std::vector<int>{} : it->second;
        std::sort(s.begin(), s.end());
        if (s != std::vector<int>{-1, 1})
          violate("arc " + format_arc(a) + " used " + std::to_string(s.size()) +
                  " times; needs one use per side with opposite signs");
      }
    }
  }
  // Each intersection point was counted once on its alpha and once on its beta.
  vertex_count -= static_cast<long>(points.size());

  if (contained != d.boundary_circles)
    violate("regions contain " + std::to_string(contained) + " boundary circles, expected " +
            std::to_string(d.boundary_circles));
  if (refs_ok) {
    const long chi = region_chi + vertex_count - arc_count;
    const long expected = 2 - 2L * d.genus - d.boundary_circles;
    if (chi != expected)
      violate("Euler characteristic mismatch: cells give " + std::to_string(chi) + ", surface " +
              std::to_string(expected));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Diagram::Diagram(SuturedDiagram d) : d_(std::move(d)) {
  ValidationReport rep = validate(d_);
  if (!rep.valid) {
    std::string msg = "invalid diagram";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw Error("InvalidDiagram", msg);
  }
  build_complex();
}

void Diagram::build_complex() {
  for (std::size_t i = 0; i < d_.alpha.size(); ++i)
    for (std::size_t k = 0; k < d_.alpha[i].size(); ++k) {
      points_[d_.alpha[i][k]].alpha = i;
      points_[d_.alpha[i][k]].alpha_pos = k;
    }
  for (std::size_t j = 0; j < d_.beta.size(); ++j)
    for (std::size_t k = 0; k < d_.beta[j].size(); ++k) {
      points_[d_.beta[j][k]].beta = j;
      points_[d_.beta[j][k]].beta_pos = k;
    }

  for (const auto& [name, info] : points_) vertex_index_.emplace(name, vertex_index_.size());
  auto register_curves = [&](CurveKind kind, const auto& curves, auto& verts, auto& first) {
    for (std::size_t c = 0; c < curves.size(); ++c) {
      std::vector<std::size_t> vs;
      if (curves[c].empty()) {
        std::string v = artificial_vertex(kind, c);
        vertex_index_.emplace(v, vertex_index_.size());
        vs.push_back(vertex_index_.at(v));
      } else {
        for (const auto& p : curves[c]) vs.push_back(vertex_index_.at(p));
      }
      first.push_back(arcs_.size());
      for (std::size_t k = 0; k < vs.size(); ++k)
        arcs_.push_back({kind, c, vs[k], vs[(k + 1) % vs.size()]});
      verts.push_back(std::move(vs));
    }
  };
  register_curves(CurveKind::Alpha, d_.alpha, alpha_vertices_, alpha_first_arc_);
  register_curves(CurveKind::Beta, d_.beta, beta_vertices_, beta_first_arc_);

  // Turn every region into a disk: each ∂Σ circle becomes a loop at a fresh
  // vertex, and every boundary component past the first is joined to the
  // region's base vertex by a connector edge (it cancels in ∂_2).
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // tail, head
  for (const auto& a : arcs_) edges.push_back({a.tail, a.head});
  std::size_t vertices = vertex_index_.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> region_terms(d_.regions.size());

  for (std::size_t r = 0; r < d_.regions.size(); ++r) {
    const Region& reg = d_.regions[r];
    for (const auto& cyc : reg.cycles)
      for (const auto& a : cyc) region_terms[r].push_back({arc_id(a), a.sign});

    auto signed_tail = [&](const ArcRef& a) {
      const Arc& arc = arcs_[arc_id(a)];
      return a.sign > 0 ? arc.tail : arc.head;
    };
    std::optional<std::size_t> base;
    if (!reg.cycles.empty()) {
      base = signed_tail(reg.cycles.front().front());
      for (std::size_t c = 1; c < reg.cycles.size(); ++c)
        edges.push_back({*base, signed_tail(reg.cycles[c].front())});
    }
    for (std::size_t k = 0; k < reg.boundary_circles; ++k) {
      const std::size_t v = vertices++;
      region_terms[r].push_back({edges.size(), 1});
      edges.push_back({v, v});
      if (base) edges.push_back({*base, v});
      else base = v;
    }
  }
  vertex_count_ = vertices;
  edge_count_ = edges.size();

  boundary1_ = IntMatrix(vertex_count_, edge_count_);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [t, h] = edges[e];
    if (t == h) continue;
    boundary1_(h, e) += 1;
    boundary1_(t, e) -= 1;
  }
  region_chains_ = IntMatrix(edge_count_, d_.regions.size());
  for (std::size_t r = 0; r < region_terms.size(); ++r)
    for (auto [e, s] : region_terms[r]) region_chains_(e, r) += s;

  // H_1(Σ) = ker ∂_1 / im ∂_2; quotient further by the curve classes.
  SmithForm snf = smith_normal_form(boundary1_);
  boundary1_rank_ = snf.rank;
  const std::size_t k = edge_count_ - snf.rank;
  cycle_coords_ = IntMatrix(k, edge_count_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t e = 0; e < edge_count_; ++e) cycle_coords_(i, e) = snf.v_inv(snf.rank + i, e);

  std::vector<std::vector<Integer>> relations;
  for (std::size_t r = 0; r < d_.regions.size(); ++r)
    relations.push_back(region_chains_.column(r));
  for (std::size_t i = 0; i < d_.alpha.size(); ++i)
    relations.push_back(curve_chain(CurveKind::Alpha, i));
  for (std::size_t j = 0; j < d_.beta.size(); ++j)
    relations.push_back(curve_chain(CurveKind::Beta, j));

  IntMatrix rel(k, relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c) {
    if (!is_cycle(relations[c]))
      throw Error("InvalidDiagram", "internal: relation " + std::to_string(c) + " is not a cycle");
    std::vector<Integer> coords = cycle_coords_.apply(relations[c]);
    for (std::size_t i = 0; i < k; ++i) rel(i, c) = coords[i];
  }
  h1_ = cokernel(rel);
}

const std::vector<std::size_t>& Diagram::curve_vertices(CurveKind kind, std::size_t curve) const {
  const auto& all = kind == CurveKind::Alpha ? alpha_vertices_ : beta_vertices_;
  if (curve >= all.size()) throw Error("BadCurve", "no curve " + curve_label(kind, curve));
  return all[curve];
}

std::size_t Diagram::curve_first_arc(CurveKind kind, std::size_t curve) const {
  const auto& first = kind == CurveKind::Alpha ? alpha_first_arc_ : beta_first_arc_;
  if (curve >= first.size()) throw Error("BadCurve", "no curve " + curve_label(kind, curve));
  return first[curve];
}

std::size_t Diagram::curve_arc_count(CurveKind kind, std::size_t curve) const {
  return curve_vertices(kind, curve).size();
}

std::size_t Diagram::arc_id(const ArcRef& a) const {
  if (a.index >= curve_arc_count(a.kind, a.curve)) throw Error("BadArc", format_arc(a));
  return curve_first_arc(a.kind, a.curve) + a.index;
}

std::vector<Integer> Diagram::curve_chain(CurveKind kind, std::size_t curve) const {
  std::vector<Integer> chain(edge_count_);
  const std::size_t first = curve_first_arc(kind, curve);
  for (std::size_t k = 0; k < curve_arc_count(kind, curve); ++k) chain[first + k] = 1;
  return chain;
}

std::vector<Integer> Diagram::path_chain(CurveKind kind, std::size_t curve,
                                         const std::string& from, const std::string& to,
                                         bool forward) const {
  const auto& names = curves_of(d_, kind).at(curve);
  auto position = [&](const std::string& p) {
    auto it = std::find(names.begin(), names.end(), p);
    if (it == names.end())
      throw Error("NotAGenerator", "point " + p + " is not on " + curve_label(kind, curve));
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<Integer> chain(edge_count_);
  const std::size_t n = names.size();
  const std::size_t first = curve_first_arc(kind, curve);
  std::size_t start = position(from), stop = position(to);
  int sign = 1;
  if (!forward) {
    std::swap(start, stop);
    sign = -1;
  }
  for (std::size_t k = start; k != stop; k = (k + 1) % n) chain[first + k] += sign;
  return chain;
}

bool Diagram::is_cycle(std::span<const Integer> chain) const {
  if (chain.size() != edge_count_) return false;
  std::vector<Integer> b = boundary1_.apply(chain);
  return std::all_of(b.begin(), b.end(), [](const Integer& x) { return x == 0; });
}

GroupElement Diagram::cycle_class(std::span<const Integer> chain) const {
  if (!is_cycle(chain)) throw Error("NotACycle", "chain has nonzero boundary");
  return h1_.project(cycle_coords_.apply(chain));
}

BalanceReport Diagram::balance() const {
  BalanceReport rep;
  if (d_.alpha.size() != d_.beta.size()) {
    rep.balanced = false;
    rep.reasons.push_back("|alpha| = " + std::to_string(d_.alpha.size()) + " but |beta| = " +
                          std::to_string(d_.beta.size()));
  }
  // Components of Σ minus one curve family: regions glued across the other
  // family's arcs.
  for (CurveKind cut : {CurveKind::Alpha, CurveKind::Beta}) {
    const CurveKind glue = cut == CurveKind::Alpha ? CurveKind::Beta : CurveKind::Alpha;
    UnionFind uf(d_.regions.size());
    std::map<std::size_t, std::size_t> seen;  // arc id -> first region using it
    for (std::size_t r = 0; r < d_.regions.size(); ++r)
      for (const auto& cyc : d_.regions[r].cycles)
        for (const auto& a : cyc) {
          if (a.kind != glue) continue;
          auto [it, fresh] = seen.try_emplace(arc_id(a), r);
          if (!fresh) uf.unite(it->second, r);
        }
    std::set<std::size_t> touching;
    for (std::size_t r = 0; r < d_.regions.size(); ++r)
      if (d_.regions[r].boundary_circles > 0) touching.insert(uf.find(r));
    std::set<std::size_t> closed;
    for (std::size_t r = 0; r < d_.regions.size(); ++r)
      if (!touching.count(uf.find(r))) closed.insert(uf.find(r));
    if (!closed.empty()) {
      rep.balanced = false;
      rep.reasons.push_back(std::to_string(closed.size()) + " component(s) of the complement of " +
                            (cut == CurveKind::Alpha ? "alpha" : "beta") +
                            " miss the boundary");
    }
  }
  return rep;
}

std::pair<long, long> Diagram::euler_characteristics() const {
  const long chi = 2 - 2L * d_.genus - d_.boundary_circles;
  return {chi + 2L * static_cast<long>(d_.alpha.size()),
          chi + 2L * static_cast<long>(d_.beta.size())};
}

void Diagram::require_balanced() const {
  BalanceReport rep = balance();
  if (rep.balanced) return;
  std::string msg = "diagram is not balanced";
  for (const auto& r : rep.reasons) msg += "; " + r;
  throw Error("NotBalanced", msg);
}

std::vector<GeneratorMatching> Diagram::generators() const {
  require_balanced();
  return enumerate_generators(d_);
}

void Diagram::require_generator(const GeneratorMatching& x) const {
  auto fail = [&](const std::string& why) {
    return Error("NotAGenerator", to_string(x) + ": " + why);
  };
  const std::size_t n = d_.alpha.size();
  if (x.points.size() != n || x.beta_of_alpha.size() != n || d_.beta.size() != n)
    throw fail("wrong number of points");
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = points_.find(x.points[i]);
    if (it == points_.end()) throw fail("unknown point " + x.points[i]);
    if (it->second.alpha != i || it->second.beta != x.beta_of_alpha[i])
      throw fail("point " + x.points[i] + " is not on the claimed curves");
    if (hit[x.beta_of_alpha[i]]) throw fail("beta curve used twice");
    hit[x.beta_of_alpha[i]] = true;
  }
}

int Diagram::generator_sign(const GeneratorMatching& x) const {
  require_generator(x);
  int sign = permutation_sign(x.beta_of_alpha);
  for (const auto& p : x.points) sign *= d_.crossing_sign.at(p);
  return sign;
}

std::vector<Integer> Diagram::epsilon_chain(const GeneratorMatching& x,
                                            const GeneratorMatching& y) const {
  require_generator(x);
  require_generator(y);
  std::vector<Integer> chain(edge_count_);
  auto accumulate = [&](const std::vector<Integer>& part) {
    for (std::size_t e = 0; e < chain.size(); ++e) chain[e] += part[e];
  };
  const std::size_t n = x.points.size();
  std::vector<std::string> x_on_beta(n), y_on_beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    x_on_beta[x.beta_of_alpha[i]] = x.points[i];
    y_on_beta[y.beta_of_alpha[i]] = y.points[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    accumulate(path_chain(CurveKind::Alpha, i, x.points[i], y.points[i]));
  for (std::size_t j = 0; j < n; ++j)
    accumulate(path_chain(CurveKind::Beta, j, y_on_beta[j], x_on_beta[j]));
  return chain;
}

GroupElement Diagram::epsilon(const GeneratorMatching& x, const GeneratorMatching& y) const {
  return cycle_class(epsilon_chain(x, y));
}

SpincPartition Diagram::spinc_partition() const {
  std::vector<GeneratorMatching> gens = generators();
  SpincPartition part;
  if (gens.empty()) return part;
  std::map<GroupElement, std::size_t> class_of;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    GroupElement e = epsilon(gens.front(), gens[i]);
    auto [it, fresh] = class_of.try_emplace(e, part.classes.size());
    if (fresh) {
      part.classes.emplace_back();
      part.offset.push_back(e);
    }
    part.classes[it->second].push_back(i);
  }
  part.base_class = 0;
  return part;
}

std::vector<std::size_t> Diagram::internal_regions() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < d_.regions.size(); ++r)
    if (d_.regions[r].boundary_circles == 0) out.push_back(r);
  return out;
}

std::vector<Integer> Diagram::arc_multiplicities(std::span<const Integer> domain) const {
  const std::vector<std::size_t> internal = internal_regions();
  if (domain.size() != internal.size())
    throw Error("BadDimension", "domain vector must have one entry per internal region");
  std::vector<Integer> mult(arcs_.size());
  for (std::size_t k = 0; k < internal.size(); ++k) {
    if (domain[k] == 0) continue;
    for (const auto& cyc : d_.regions[internal[k]].cycles)
      for (const auto& a : cyc) mult[arc_id(a)] += a.sign * domain[k];
  }
  return mult;
}

IntMatrix Diagram::constancy_matrix() const {
  const std::vector<std::size_t> internal = internal_regions();
  std::vector<std::vector<Integer>> columns;
  for (std::size_t k = 0; k < internal.size(); ++k) {
    DomainVector unit(internal.size());
    unit[k] = 1;
    columns.push_back(constancy_rhs(arc_multiplicities(unit)));
  }
  const std::size_t rows = constancy_rhs(std::vector<Integer>(arcs_.size())).size();
  IntMatrix m(rows, internal.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

std::vector<Integer> Diagram::constancy_rhs(std::span<const Integer> chain) const {
  std::vector<Integer> out;
  for (CurveKind kind : {CurveKind::Alpha, CurveKind::Beta}) {
    const std::size_t curves = curves_of(d_, kind).size();
    for (std::size_t c = 0; c < curves; ++c) {
      const std::size_t first = curve_first_arc(kind, c);
      for (std::size_t t = 1; t < curve_arc_count(kind, c); ++t)
        out.push_back(chain[first + t] - chain[first]);
    }
  }
  return out;
}

IntMatrix Diagram::periodic_lattice() const { return integer_kernel(constancy_matrix()); }

bool Diagram::is_periodic(std::span<const Integer> domain) const {
  std::vector<Integer> mult = arc_multiplicities(domain);
  std::vector<Integer> jumps = constancy_rhs(mult);
  return std::all_of(jumps.begin(), jumps.end(), [](const Integer& x) { return x == 0; });
}

bool Diagram::is_admissible() const { return !span_has_nonnegative(periodic_lattice()); }

std::optional<ConnectingDomains> Diagram::connecting_domains(const GeneratorMatching& x,
                                                             const GeneratorMatching& y) const {
  std::vector<Integer> chain = epsilon_chain(x, y);
  chain.resize(arcs_.size());  // ε only runs along curve arcs
  std::vector<Integer> rhs = constancy_rhs(chain);
  IntMatrix m = constancy_matrix();
  std::vector<Integer> particular;
  if (!solve_integer(m, rhs, particular)) return std::nullopt;
  return ConnectingDomains{std::move(particular), integer_kernel(m)};
}

EulerPolynomial Diagram::euler_polynomial() const {
  std::vector<GeneratorMatching> gens = generators();
  GroupRingElem poly;
  for (const auto& x : gens)
    poly.add_term(epsilon(gens.front(), x), generator_sign(x));
  return EulerPolynomial{h1_, doteq_normalize(poly, h1_)};
}

// ---------------------------------------------------------------------------

namespace {

// coef . c + constant >= 0
struct Inequality {
  std::vector<Rational> coef;
  Rational constant;
};

// Scale to a canonical positive multiple so duplicates collapse.
bool normalize(Inequality& q) {
  Rational scale = 0;
  for (const auto& c : q.coef)
    if (c != 0) {
      scale = abs(c);
      break;
    }
  if (scale == 0) return false;
  for (auto& c : q.coef) c /= scale;
  q.constant /= scale;
  return true;
}

}  // namespace

bool span_has_nonnegative(const IntMatrix& basis) {
  const std::size_t n = basis.rows();
  const std::size_t k = basis.cols();
  if (k == 0) return false;

  // Look for c with basis*c >= 0 and sum(basis*c) = 1.
  std::vector<Rational> total(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) total[j] += Rational(basis(i, j));
  std::size_t pivot = k;
  for (std::size_t j = 0; j < k; ++j)
    if (total[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == k) return false;  // every span element sums to zero

  std::vector<Inequality> system;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality q{std::vector<Rational>(k), 0};
    for (std::size_t j = 0; j < k; ++j) q.coef[j] = Rational(basis(i, j));
    // substitute c_pivot = (1 - sum_{j != pivot} total_j c_j) / total_pivot
    const Rational a = q.coef[pivot] / total[pivot];
    for (std::size_t j = 0; j < k; ++j)
      if (j != pivot) q.coef[j] -= a * total[j];
    q.coef[pivot] = 0;
    q.constant += a;
    system.push_back(std::move(q));
  }

  auto prune = [](std::vector<Inequality>& sys) {
    std::vector<Inequality> kept;
    std::set<std::vector<Rational>> seen;
    for (auto& q : sys) {
      if (!normalize(q)) {
        if (q.constant < 0) return false;
        continue;
      }
      std::vector<Rational> key = q.coef;
      key.push_back(q.constant);
      if (seen.insert(key).second) kept.push_back(std::move(q));
    }
    sys = std::move(kept);
    return true;
  };

  if (!prune(system)) return false;
  for (std::size_t var = 0; var < k; ++var) {
    if (var == pivot) continue;
    std::vector<Inequality> pos, neg, next;
    for (auto& q : system) {
      if (q.coef[var] > 0) pos.push_back(std::move(q));
      else if (q.coef[var] < 0) neg.push_back(std::move(q));
      else next.push_back(std::move(q));
    }
    for (const auto& p : pos)
      for (const auto& m : neg) {
        const Rational wp = -m.coef[var];
        const Rational wm = p.coef[var];
        Inequality q{std::vector<Rational>(k), wp * p.constant + wm * m.constant};
        for (std::size_t j = 0; j < k; ++j) q.coef[j] = wp * p.coef[j] + wm * m.coef[j];
        q.coef[var] = 0;
        next.push_back(std::move(q));
      }
    system = std::move(next);
    if (!prune(system)) return false;
  }
  return std::all_of(system.begin(), system.end(),
                     [](const Inequality& q) { return q.constant >= 0; });
}

}  // namespace sutured::diagram
