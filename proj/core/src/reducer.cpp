#include "filling/reducer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "filling/errors.hpp"
#include "filling/map_io.hpp"
#include "filling/surfmap.hpp"

namespace filling::reducer {

std::string to_string(CurveKind k) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(k)];
}

namespace {

bool empty_mask(const DartMask& g) { return std::none_of(g.begin(), g.end(), [](bool b) { return b; }); }

std::vector<int> darts_at(const StrandMap& theta, int d) {
  std::vector<int> out{d};
  for (int x = theta.sigma(d); x != d; x = theta.sigma(x)) out.push_back(x);
  return out;
}

bool all_disks(const RegionSplit& split) {
  return std::all_of(split.regions.begin(), split.regions.end(),
                     [](const Region& r) { return r.disk(); });
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// Straight extension from the middle of the edge of d0, forwards until the walk
// closes up or meets itself, then backwards until it meets the curve.
std::optional<CuttingCurve> first_curve_from(const StrandMap& theta, const std::vector<int>& vert,
                                             int d0) {
  std::map<int, int> forward_index;  // vertex -> order of first visit
  forward_index[vert[d0]] = 0;
  std::vector<int> forward{d0};
  int p = -1;
  for (int cur = d0;;) {
    const int a = theta.alpha(cur);
    const int nxt = theta.opposite(a);
    if (nxt == d0) {
      CuttingCurve c;
      c.darts = forward;
      c.kind = CurveKind::I;
      return c;
    }
    if (forward_index.count(vert[a])) {
      p = vert[a];
      break;
    }
    forward_index[vert[a]] = static_cast<int>(forward.size());
    if (nxt < 0) return std::nullopt;
    forward.push_back(nxt);
    cur = nxt;
  }

  std::set<int> on_curve;
  for (const auto& [v, i] : forward_index) on_curve.insert(v);
  std::vector<int> backward;
  int q = -1;
  for (int b = theta.opposite(d0);;) {
    if (b < 0) return std::nullopt;
    backward.push_back(b);
    const int a = theta.alpha(b);
    if (on_curve.count(vert[a])) {
      q = vert[a];
      break;
    }
    on_curve.insert(vert[a]);
    b = theta.opposite(a);
  }

  CuttingCurve c;
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) c.darts.push_back(theta.alpha(*it));
  c.darts.insert(c.darts.end(), forward.begin(), forward.end());
  if (q == p) {
    c.kind = CurveKind::IV;
  } else if (forward_index.count(q) && forward_index[q] > forward_index[p]) {
    c.kind = CurveKind::II;
  } else {
    c.kind = CurveKind::III;
  }
  return c;
}

// Straight walk from a vertex of g along d until it reaches g (type V) or its own
// earlier vertex (type VI).
std::optional<CuttingCurve> arc_from(const StrandMap& theta, const std::vector<int>& vert,
                                     const std::vector<bool>& vertex_on_g, int d) {
  CuttingCurve c;
  c.darts.push_back(d);
  std::set<int> visited;
  for (int cur = d;;) {
    const int a = theta.alpha(cur);
    const int v = vert[a];
    if (vertex_on_g[v]) {
      c.kind = CurveKind::V;
      return c;
    }
    if (visited.count(v)) {
      c.kind = CurveKind::VI;
      return c;
    }
    visited.insert(v);
    const int nxt = theta.opposite(a);
    if (nxt < 0) return std::nullopt;
    c.darts.push_back(nxt);
    cur = nxt;
  }
}

}  // namespace

DartMask curve_mask(const StrandMap& theta, const CuttingCurve& c) {
  DartMask m(theta.dart_count(), false);
  for (int d : c.darts) m[d] = m[theta.alpha(d)] = true;
  return m;
}

void check_cutting_curve(const StrandMap& theta, const DartMask& g, const CuttingCurve& c) {
  auto bad = [](const std::string& why) { throw InvalidInput("not a cutting curve: " + why); };
  if (c.darts.empty()) bad("no darts");
  const auto vert = theta.vertex_of();
  std::set<int> edges;
  for (int d : c.darts) {
    if (d < 0 || d >= theta.dart_count()) bad("dart out of range");
    if (g[d]) bad("uses an edge of the subgraph");
    if (!edges.insert(std::min(d, theta.alpha(d))).second) bad("repeats an edge");
  }
  for (std::size_t i = 0; i + 1 < c.darts.size(); ++i)
    if (theta.opposite(theta.alpha(c.darts[i])) != c.darts[i + 1]) bad("does not continue straight");
  const bool g_empty = empty_mask(g);
  const bool first_kind = c.kind == CurveKind::I || c.kind == CurveKind::II ||
                          c.kind == CurveKind::III || c.kind == CurveKind::IV;
  if (first_kind != g_empty) bad("kind does not match the subgraph");
  const int start = vert[c.darts.front()];
  const int end = vert[theta.alpha(c.darts.back())];
  if (c.kind == CurveKind::I) {
    if (theta.opposite(theta.alpha(c.darts.back())) != c.darts.front()) bad("type I is not closed");
    return;
  }
  std::vector<int> interior;
  for (std::size_t i = 0; i + 1 < c.darts.size(); ++i) interior.push_back(vert[theta.alpha(c.darts[i])]);
  if (!g_empty) {
    std::vector<bool> on_g(vert.empty() ? 0 : *std::max_element(vert.begin(), vert.end()) + 1, false);
    for (int d = 0; d < theta.dart_count(); ++d)
      if (g[d]) on_g[vert[d]] = true;
    if (!on_g[start]) bad("start is not on the subgraph");
    for (int v : interior)
      if (on_g[v]) bad("interior meets the subgraph");
    const bool end_on_curve = std::find(interior.begin(), interior.end(), end) != interior.end();
    if (c.kind == CurveKind::V && !on_g[end]) bad("type V end is not on the subgraph");
    if (c.kind == CurveKind::VI && (on_g[end] || !end_on_curve)) bad("type VI end is not on the curve");
  }
}

bool is_essential(const StrandMap& theta, const DartMask& g, CuttingCurve& c) {
  check_cutting_curve(theta, g, c);
  const auto map = theta.to_map();
  const auto before = complement_regions(map, g);
  const int home = before.region_of_face[before.face_of_corner[c.darts.front()]];

  DartMask after_mask = g;
  for (int d : c.darts) after_mask[d] = after_mask[theta.alpha(d)] = true;
  const auto after = complement_regions(map, after_mask);

  std::ostringstream witness;
  witness << "pieces:";
  c.essential = true;
  for (const auto& piece : after.regions) {
    if (before.region_of_face[piece.faces.front()] != home) continue;
    witness << " [chi=" << piece.euler << ",b=" << piece.boundaries.size();
    if (piece.disk()) {
      // Maximal runs of old-subgraph edges along the single boundary walk.
      const auto& walk = piece.boundaries.front();
      int runs = 0, old_edges = 0;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        const bool old = g[walk[i]];
        old_edges += old;
        if (old && !g[walk[(i + walk.size() - 1) % walk.size()]]) ++runs;
      }
      if (runs == 0 && old_edges > 0) runs = 1;
      witness << ",runs=" << runs;
      if (runs <= 1) c.essential = false;
    }
    witness << "]";
  }
  witness << (c.essential ? " essential" : " boundary-parallel");
  c.witness = witness.str();
  return c.essential;
}

std::optional<CuttingCurve> find_cutting_curve(const StrandMap& theta, const DartMask& g) {
  const auto vert = theta.vertex_of();
  if (empty_mask(g)) {
    for (int d0 = 0; d0 < theta.dart_count(); ++d0) {
      auto c = first_curve_from(theta, vert, d0);
      if (c && is_essential(theta, g, *c)) return c;
    }
    return std::nullopt;
  }
  if (all_disks(complement_regions(theta.to_map(), g))) {
    throw InvalidInput("find_cutting_curve: the subgraph already fills");
  }
  std::vector<bool> on_g(*std::max_element(vert.begin(), vert.end()) + 1, false);
  for (int d = 0; d < theta.dart_count(); ++d)
    if (g[d]) on_g[vert[d]] = true;
  for (int d = 0; d < theta.dart_count(); ++d) {
    if (g[d] || !on_g[vert[d]]) continue;
    auto c = arc_from(theta, vert, on_g, d);
    if (c && is_essential(theta, g, *c)) return c;
  }
  return std::nullopt;
}

bool convex_at(const StrandMap& theta, const DartMask& g, int d) {
  std::vector<int> in;
  for (int x : darts_at(theta, d))
    if (g[x]) in.push_back(x);
  auto has = [&](int x) { return x >= 0 && std::find(in.begin(), in.end(), x) != in.end(); };
  switch (in.size()) {
    case 2:
      return theta.opposite(in[0]) == in[1];
    case 3:
      return std::any_of(in.begin(), in.end(), [&](int x) { return has(theta.opposite(x)); });
    case 4:
      return theta.opposite(in[0]) == in[2] && theta.opposite(in[1]) == in[3];
    default:
      return false;
  }
}

namespace {

// Slide the curve end at dart e counterclockwise around its vertex to the next
// edge f of g: cross the strands t_1..t_r in between on new 4-valent vertices
// and land on a new vertex w subdividing f's edge.
void split_end(StrandMap& theta, DartMask& g, int e, std::vector<std::string>& notes) {
  std::vector<int> crossed;
  int f = theta.sigma(e);
  while (!g[f]) {
    crossed.push_back(f);
    f = theta.sigma(f);
  }
  if (f == e) throw InvariantViolation("split rule: no other subgraph edge at the vertex");

  auto grow = [&g](int d, bool in_g) {
    if (static_cast<int>(g.size()) <= d) g.resize(d + 1, false);
    g[d] = in_g;
  };
  const int partner = theta.opposite(e);
  if (partner >= 0 && partner != e) theta.set_opposite(partner, -1);
  theta.detach(e);

  int incoming = e, previous_out = -1;
  for (int t : crossed) {
    const int p = theta.add_dart(), q = theta.add_dart(), out = theta.add_dart();
    if (incoming != e) {
      incoming = theta.add_dart();
      theta.link(previous_out, incoming);
    }
    const int far = theta.alpha(t);
    theta.link(t, p);
    theta.link(q, far);
    theta.make_vertex({q, out, p, incoming});
    theta.set_opposite(p, q);
    theta.set_opposite(incoming, out);
    grow(p, false);
    grow(q, false);
    grow(out, true);
    grow(incoming, true);
    previous_out = out;
    incoming = -1;
  }
  const int x = theta.add_dart(), y = theta.add_dart();
  const int far = theta.alpha(f);
  theta.link(f, x);
  theta.link(y, far);
  int z = e;
  if (!crossed.empty()) {
    z = theta.add_dart();
    theta.link(previous_out, z);
  }
  theta.make_vertex({y, x, z});
  theta.set_opposite(x, y);
  theta.set_opposite(z, -1);
  grow(x, true);
  grow(y, true);
  grow(z, true);
  notes.push_back("split at dart " + std::to_string(e) + ": crossed " +
                  std::to_string(crossed.size()) + " strand(s), landed on edge of dart " +
                  std::to_string(f));
}

}  // namespace

Attachment add_cutting_curve(StrandMap& theta, DartMask& g, const CuttingCurve& c) {
  if (!c.essential) throw InvalidInput("add_cutting_curve: curve is not essential");
  check_cutting_curve(theta, g, c);
  for (int d : c.darts) g[d] = g[theta.alpha(d)] = true;
  Attachment out;
  if (c.kind == CurveKind::I) return out;

  const int end = theta.alpha(c.darts.back());
  const int start = c.darts.front();
  for (int attach : {end, start}) {
    if (convex_at(theta, g, attach)) continue;
    split_end(theta, g, attach, out.notes);
    out.split_fired = true;
  }
  for (int d = 0; d < theta.dart_count(); ++d) {
    if (g[d] && !convex_at(theta, g, d)) {
      throw InvariantViolation("attachment left a non-convex vertex at dart " + std::to_string(d));
    }
  }
  return out;
}

FillingMap validate_input(const CombinatorialMap& map, int genus) {
  auto reject = [](const std::string& why) { throw InvalidInput("invalid filling map: " + why); };
  if (genus < 1) reject("genus must be positive");
  if (map.has_twist() || !map.orientable()) reject("surface is non-orientable");
  if (!map.connected()) reject("map is disconnected");
  for (const auto& orbit : map.vertex_orbits()) {
    if (orbit.size() % 2 != 0) reject("odd-valence vertex at dart " + std::to_string(orbit[0]));
    if (orbit.size() < 4) reject("vertex at dart " + std::to_string(orbit[0]) + " is not a crossing");
  }
  const auto report = surfmap::surface_report(map);
  if (report.genus < genus) {
    reject("not filling: the curves fill a genus-" + std::to_string(report.genus) +
           " surface, so some complementary region is not a disk");
  }
  if (report.genus > genus) {
    reject("genus mismatch: map has genus " + std::to_string(report.genus));
  }
  for (int deg : report.face_degrees) {
    if (deg == 1) reject("monogon face");
    if (deg == 2) reject("bigon face");
  }

  // Strands as edge classes under straight continuation.
  const StrandMap theta(map);
  const int n = map.dart_count();
  DisjointSets strands(n);
  for (int d = 0; d < n; ++d) {
    strands.unite(d, map.alpha(d));
    strands.unite(d, theta.opposite(d));
  }
  std::map<int, std::vector<int>> darts_of;
  for (int d = 0; d < n; ++d) darts_of[strands.find(d)].push_back(d);
  const auto vert = map.vertex_of();
  std::vector<std::vector<int>> simple;
  for (const auto& [root, ds] : darts_of) {
    std::map<int, int> per_vertex;
    for (int d : ds) ++per_vertex[vert[d]];
    const bool is_simple = std::all_of(per_vertex.begin(), per_vertex.end(),
                                       [](const auto& kv) { return kv.second == 2; });
    if (!is_simple) continue;
    DartMask m(n, false);
    for (int d : ds) m[d] = true;
    for (const auto& r : complement_regions(map, m).regions)
      if (r.disk()) reject("simple closed strand through dart " + std::to_string(ds[0]) + " is contractible");
    simple.push_back(ds);
  }
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      std::set<int> vi, vj;
      for (int d : simple[i]) vi.insert(vert[d]);
      for (int d : simple[j]) vj.insert(vert[d]);
      if (std::any_of(vi.begin(), vi.end(), [&](int v) { return vj.count(v); })) continue;
      DartMask m(n, false), in_i(n, false);
      for (int d : simple[i]) m[d] = in_i[d] = true;
      for (int d : simple[j]) m[d] = true;
      for (const auto& r : complement_regions(map, m).regions) {
        if (r.euler != 0 || r.boundaries.size() != 2) continue;
        if (in_i[r.boundaries[0][0]] != in_i[r.boundaries[1][0]]) {
          reject("strands through darts " + std::to_string(simple[i][0]) + " and " +
                 std::to_string(simple[j][0]) + " bound an annulus (parallel components)");
        }
      }
    }
  }
  return {map, genus};
}

bool ReductionCertificate::ok() const {
  return all_at_least_five && identity_holds && valence_law_holds && filling && convex;
}

ReductionCertificate certify(const CombinatorialMap& subgraph, int genus) {
  ReductionCertificate c;
  c.genus = genus;
  c.subgraph = subgraph;
  const auto report = surfmap::surface_report(subgraph);
  c.face_degrees = report.face_effective_degrees;
  c.k = static_cast<int>(c.face_degrees.size());
  int sum = 0;
  c.all_at_least_five = true;
  for (int m : c.face_degrees) {
    sum += m;
    c.excess_sum += m - 4;
    c.all_at_least_five = c.all_at_least_five && m >= 5;
  }
  c.convex = true;
  for (const auto& orbit : subgraph.vertex_orbits()) {
    const auto straight = std::count_if(orbit.begin(), orbit.end(),
                                        [&](int d) { return subgraph.straight(d); });
    switch (orbit.size()) {
      case 2:
        c.convex = c.convex && straight == 2;
        break;
      case 3:
        c.convex = c.convex && straight == 1;
        ++c.trivalent;
        break;
      case 4:
        c.convex = c.convex && straight == 0;
        ++c.quadrivalent;
        break;
      default:
        c.convex = false;
    }
  }
  c.identity_holds = c.excess_sum == 8 * genus - 8;
  c.valence_law_holds = 4 * c.quadrivalent + 2 * c.trivalent == sum;
  c.filling = report.orientable && report.genus == genus;
  return c;
}

namespace {

std::string step_log(const std::vector<StepRecord>& steps) {
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    s += "\n  step " + std::to_string(i + 1) + ": kind=" + to_string(steps[i].kind) +
         " darts=[" + join(steps[i].darts) + "] " + steps[i].witness;
  }
  return s;
}

struct Measure {
  int nondisk_excess = 0;  // sum of -chi over non-disk regions
  int disks = 0;
};

Measure measure(const RegionSplit& split) {
  Measure m;
  for (const auto& r : split.regions) {
    if (r.disk()) {
      ++m.disks;
    } else {
      m.nondisk_excess -= r.euler;
    }
  }
  return m;
}

}  // namespace

ReductionCertificate reduce(const FillingMap& input, const ReduceOptions& options) {
  const auto& map = input.map;
  if (options.accept_satisfying_input) {
    const auto report = surfmap::surface_report(map);
    const bool quartic = std::all_of(report.vertex_degrees.begin(), report.vertex_degrees.end(),
                                     [](int d) { return d == 4; });
    const bool wide = std::all_of(report.face_effective_degrees.begin(),
                                  report.face_effective_degrees.end(), [](int m) { return m >= 5; });
    if (quartic && wide) {
      auto c = certify(CombinatorialMap(map.alpha_array(), map.sigma_array()), input.genus);
      c.provenance.resize(map.dart_count());
      for (int d = 0; d < map.dart_count(); ++d) c.provenance[d] = d;
      c.input_unchanged = true;
      if (!c.ok()) throw InvariantViolation("input accepted unchanged but certificate fails");
      return c;
    }
  }

  StrandMap theta(map);
  DartMask g(theta.dart_count(), false);
  std::vector<StepRecord> steps;
  bool split_fired = false;
  auto fail = [&](const std::string& why) {
    throw InvariantViolation("reduce: " + why + "; step log:" + step_log(steps));
  };

  const int cap = map.edge_count() + 1;
  Measure last{};
  for (int iter = 0;; ++iter) {
    if (iter > cap) fail("no termination within " + std::to_string(cap) + " iterations");
    const auto curve = find_cutting_curve(theta, g);
    if (!curve) fail("no essential cutting curve although the subgraph does not fill");
    StepRecord rec;
    rec.kind = curve->kind;
    rec.darts = curve->darts;
    for (int d : curve->darts) rec.input_darts.push_back(theta.provenance(d));
    rec.witness = curve->witness;
    const auto attached = add_cutting_curve(theta, g, *curve);
    rec.split_fired = attached.split_fired;
    split_fired = split_fired || attached.split_fired;
    for (const auto& n : attached.notes) rec.witness += "; " + n;
    steps.push_back(rec);

    const auto split = complement_regions(theta.to_map(), g);
    const Measure now = measure(split);
    if (iter > 0 && !(now.nondisk_excess < last.nondisk_excess || now.disks > last.disks)) {
      fail("cutting curve made no progress");
    }
    last = now;
    if (all_disks(split)) break;
  }

  // Compact the subgraph: rotation restricted to g, straight where the next
  // subgraph dart is the opposite one.
  std::vector<int> index(theta.dart_count(), -1), back;
  for (int d = 0; d < theta.dart_count(); ++d) {
    if (g[d]) {
      index[d] = static_cast<int>(back.size());
      back.push_back(d);
    }
  }
  const int m = static_cast<int>(back.size());
  std::vector<int> alpha(m), sigma(m), provenance(m);
  std::vector<bool> straight(m);
  for (int i = 0; i < m; ++i) {
    const int d = back[i];
    int s = theta.sigma(d);
    while (!g[s]) s = theta.sigma(s);
    alpha[i] = index[theta.alpha(d)];
    sigma[i] = index[s];
    straight[i] = theta.opposite(d) == s;
    provenance[i] = theta.provenance(d);
  }
  auto cert = certify(CombinatorialMap(alpha, sigma, straight), input.genus);
  cert.provenance = std::move(provenance);
  cert.steps = std::move(steps);
  cert.split_fired = split_fired;
  if (!cert.ok()) fail("certificate checks fail");
  return cert;
}

nlohmann::json to_json(const ReductionCertificate& c) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"kind", to_string(s.kind)},
                     {"darts", s.darts},
                     {"input_darts", s.input_darts},
                     {"witness", s.witness},
                     {"split_fired", s.split_fired}});
  }
  return {{"genus", c.genus},
          {"k", c.k},
          {"face_degrees", c.face_degrees},
          {"excess_sum", c.excess_sum},
          {"expected_excess", 8 * c.genus - 8},
          {"trivalent", c.trivalent},
          {"quadrivalent", c.quadrivalent},
          {"checks",
           {{"all_at_least_five", c.all_at_least_five},
            {"identity", c.identity_holds},
            {"valence_law", c.valence_law_holds},
            {"filling", c.filling},
            {"convex", c.convex}}},
          {"ok", c.ok()},
          {"split_fired", c.split_fired},
          {"input_unchanged", c.input_unchanged},
          {"subgraph", map_to_json(c.subgraph, c.genus)},
          {"provenance", c.provenance},
          {"steps", steps}};
}

std::string to_text(const ReductionCertificate& c) {
  std::ostringstream out;
  out << "genus=" << c.genus << "\n";
  out << "k=" << c.k << "\n";
  out << "m=[" << join(c.face_degrees) << "]\n";
  out << "sum(m_i-4)=" << c.excess_sum << " expected=" << 8 * c.genus - 8 << "\n";
  out << "vertices: trivalent=" << c.trivalent << " quadrivalent=" << c.quadrivalent << "\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "check.all_at_least_five=" << flag(c.all_at_least_five) << "\n";
  out << "check.identity=" << flag(c.identity_holds) << "\n";
  out << "check.valence_law=" << flag(c.valence_law_holds) << "\n";
  out << "check.filling=" << flag(c.filling) << "\n";
  out << "check.convex=" << flag(c.convex) << "\n";
  out << "split_fired=" << flag(c.split_fired) << "\n";
  out << "input_unchanged=" << flag(c.input_unchanged) << "\n";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    out << "step " << i + 1 << ": kind=" << to_string(s.kind) << " darts=[" << join(s.darts)
        << "] " << s.witness << "\n";
  }
  out << "ok=" << flag(c.ok()) << "\n";
  return out.str();
}

}  // namespace filling::reducer
