#include "qpkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qpkit/koszul.hpp"
#include "qpkit/monomials.hpp"
#include "qpkit/projection.hpp"

namespace qpkit {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<Rational> parse_point(const json& coords, int expected) {
  if (!coords.is_array() || static_cast<int>(coords.size()) != expected)
    throw std::invalid_argument("'coords' entries must be arrays of n+1 rational strings");
  std::vector<Rational> p;
  for (const auto& c : coords) {
    if (c.is_string())
      p.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      p.push_back(Rational(static_cast<long>(c.get<long long>())));
    else
      throw std::invalid_argument("'coords' entries must be strings or integers");
  }
  return p;
}

}  // namespace

ParsedInput model_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("input must be a JSON object");
  const std::string type = field(j, "type").get<std::string>();
  ParsedInput out;
  if (auto it = j.find("acm"); it != j.end()) out.acm = it->get<bool>();

  if (type == "toric") {
    const auto& pts = field(j, "lattice_points");
    if (!pts.is_array() || pts.empty())
      throw std::invalid_argument("'lattice_points' must be a nonempty array");
    std::vector<std::vector<long long>> points;
    for (const auto& p : pts) points.push_back(p.get<std::vector<long long>>());
    const int d = static_cast<int>(points.front().size());
    out.model = toric_model(LatticeConfig::make(d, std::move(points)));
  } else if (type == "graph") {
    const int vertices = field(j, "vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : field(j, "edges")) {
      auto v = e.get<std::vector<int>>();
      if (v.size() != 2) throw std::invalid_argument("'edges' entries must be pairs");
      edges.emplace_back(v[0], v[1]);
    }
    out.model = graph_model(GraphSpec::make(vertices, std::move(edges)));
  } else if (type == "points") {
    const int n = field(j, "n").get<int>();
    std::vector<std::vector<Rational>> points;
    for (const auto& p : field(j, "coords")) points.push_back(parse_point(p, n + 1));
    out.model = pointset_model(PointConfig::make(n, std::move(points)));
  } else {
    throw std::invalid_argument("'type' must be toric, graph, or points");
  }
  return out;
}

ParsedInput parse_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return model_from_json(j);
}

namespace {

json canonical_model_json(const VarietyModel& m) {
  json j;
  switch (m.kind) {
    case ModelKind::toric: {
      j["type"] = "toric";
      auto pts = m.lattice.points;
      std::sort(pts.begin(), pts.end());
      j["lattice_points"] = pts;
      break;
    }
    case ModelKind::graph: {
      j["type"] = "graph";
      j["vertices"] = m.graph.vertex_count;
      j["edges"] = m.graph.edges;  // normalized and sorted by construction
      break;
    }
    case ModelKind::pointset: {
      j["type"] = "points";
      j["n"] = m.pointset.n;
      std::vector<std::vector<std::string>> coords;
      for (const auto& p : m.pointset.points) {
        // Projective normalization so scalings hash identically.
        Rational scale = 0;
        for (const auto& x : p)
          if (x != 0) {
            scale = x;
            break;
          }
        std::vector<std::string> row;
        for (const auto& x : p) row.push_back(rational_string(x / scale));
        coords.push_back(std::move(row));
      }
      std::sort(coords.begin(), coords.end());
      j["coords"] = coords;
      break;
    }
  }
  return j;
}

}  // namespace

std::string model_digest(const VarietyModel& m) {
  const std::string dump = canonical_model_json(m).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json json_int(const Int& v) {
  static const Int kMax = (Int(1) << 53) - 1;
  if (v <= kMax && v >= -kMax) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json report_to_json(const PyBoundsReport& r) {
  json j;
  j["n"] = r.n;
  j["dim_X"] = r.dim_x;
  j["codim"] = r.codim;
  j["dim_I2"] = r.dim_i2;
  j["dim_R2"] = r.dim_r2;
  j["eps"] = r.eps;
  if (r.qp_value) {
    j["qp"] = *r.qp_value;
    j["qp_certified"] = true;
  } else if (r.qp_upper) {
    j["qp_upper"] = *r.qp_upper;
    j["qp_certified"] = false;
  }
  if (!r.kappa.empty()) {
    j["kappa"] = r.kappa;
    j["kappa_agreement"] = r.kappa_agreement;
  }
  if (r.ell) {
    j["ell"] = *r.ell;
    j["ell_exact"] = r.ell_exact;
  }
  if (r.gl_known) {
    if (r.gl_infinite)
      j["gl_index"] = "infinity";
    else
      j["gl_index"] = *r.gl_index;
    j["gl_exact"] = r.gl_exact;
  }
  if (r.degree) j["degree"] = *r.degree;
  if (r.lower) {
    j["lower"] = *r.lower;
    j["lower_provenance"] = r.lower_provenance;
    j["lower_certified"] = r.lower_certified;
  }
  json uppers = json::array();
  for (const auto& u : r.uppers) uppers.push_back({{"value", u.value}, {"provenance", u.provenance}});
  j["uppers"] = uppers;
  j["certificates"] = r.certificates;
  if (r.py_exact) j["py"] = *r.py_exact;
  json interval = json::array();
  interval.push_back(r.interval_lo ? json(*r.interval_lo) : json());
  interval.push_back(r.interval_hi ? json(*r.interval_hi) : json());
  j["interval"] = interval;
  return j;
}

namespace {

void print_table(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      out << pad << it.key() << ":\n";
      print_table(it.value(), out, indent + 2);
    } else {
      out << pad << std::left << std::setw(std::max<int>(0, 18 - indent)) << it.key()
          << " " << it.value().dump() << "\n";
    }
  }
}

void emit(const json& payload, const RunOptions& opts, std::ostream& out) {
  if (opts.format == "table") {
    print_table(payload, out);
  } else {
    out << payload.dump(2) << "\n";
  }
}

json output_frame(const RunOptions& opts, const VarietyModel& m) {
  json j;
  j["command"] = opts.command;
  j["input_digest"] = model_digest(m);
  j["seed"] = opts.seed;
  j["trials"] = opts.trials;
  j["warnings"] = json::array();
  j["assumptions"] = json::array();
  return j;
}

int run_selftest(const RunOptions& opts, std::ostream& out);

}  // namespace

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.command == "selftest") return run_selftest(opts, out);

    auto parsed = parse_input(opts.input_path);
    const VarietyModel& m = parsed.model;
    json frame = output_frame(opts, m);
    const bool acm = opts.acm || parsed.acm;
    int exit_code = 0;

    if (opts.command == "quadrics") {
      json result;
      result["n"] = m.n;
      result["dim_X"] = m.dim_x;
      result["codim"] = m.codim();
      result["dim_I2"] = m.quadrics.dim();
      result["dim_R2"] = hilbert_dim(m, 2);
      json basis = json::array();
      for (const auto& q : m.quadrics.basis) {
        json row = json::array();
        for (const auto& c : q) row.push_back(rational_string(c));
        basis.push_back(row);
      }
      result["basis"] = basis;
      frame["result"] = result;
    } else if (opts.command == "kappa" || opts.command == "qp") {
      json result;
      if (m.irreducible) {
        auto seq = kappa_sequence(m, opts.trials, opts.seed);
        result["kappa"] = seq.values;
        result["qp"] = seq.qp();
        result["agreement"] = seq.agreement;
        if (!seq.agreement)
          frame["warnings"].push_back("kappa trials disagreed; entrywise minimum reported");
      } else if (opts.command == "kappa") {
        throw std::invalid_argument(
            "kappa_sequence requires an irreducible model; run 'qp' (witness search) instead");
      } else {
        int cap = opts.max_gamma > 0 ? opts.max_gamma : m.n + 1;
        auto search = qp_upper_search(m, cap, opts.trials, opts.seed);
        if (!search.found) {
          result["status"] = "inconclusive";
          result["max_gamma"] = cap;
          exit_code = 2;
        } else {
          result["qp"] = search.k;
          result["exact"] = m.kind == ModelKind::pointset;
          if (m.kind != ModelKind::pointset) result["status"] = "upper-bound";
          json witness = json::array();
          for (const auto& p : search.witness) {
            json pt = json::array();
            for (const auto& c : p) pt.push_back(rational_string(c));
            witness.push_back(pt);
          }
          result["witness"] = witness;
        }
      }
      frame["result"] = result;
    } else if (opts.command == "strand") {
      const int p_max = opts.p_max > 0 ? std::min(opts.p_max, m.n) : m.n;
      auto strand = linear_strand(m, p_max, opts.budget);
      json result;
      result["k_p1"] = strand.k_p1;
      result["k_p2"] = strand.k_p2;
      result["ell"] = strand.ell;
      result["ell_exact"] = strand.ell_exact;
      if (strand.gl_index)
        result["gl_index"] = *strand.gl_index;
      else
        result["gl_index"] = "infinity";
      result["gl_exact"] = strand.gl_exact;
      result["truncated"] = strand.truncated;
      result["p_max"] = p_max;
      frame["result"] = result;
    } else if (opts.command == "bounds" || opts.command == "report") {
      ReportConfig config;
      config.trials = opts.trials;
      config.seed = opts.seed;
      config.acm = acm;
      config.max_gamma = opts.max_gamma;
      config.budget = opts.budget;
      config.p_max = opts.p_max;
      auto report = full_report(m, config);
      frame["result"] = report_to_json(report);
      for (const auto& w : report.warnings) frame["warnings"].push_back(w);
      for (const auto& a : report.assumptions) frame["assumptions"].push_back(a);
    } else {
      throw std::invalid_argument("unknown command: " + opts.command);
    }

    emit(frame, opts, out);
    return exit_code;
  } catch (const std::exception& e) {
    json j;
    j["command"] = opts.command;
    j["error"] = e.what();
    err << j.dump(2) << "\n";
    return 1;
  }
}

namespace {

struct SelfTest {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, bool ok) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  }
};

int run_selftest(const RunOptions& opts, std::ostream& out) {
  SelfTest t{out};

  // Twisted cubic.
  auto cubic = toric_model(LatticeConfig::make(1, {{0}, {1}, {2}, {3}}));
  t.check("twisted cubic: dim (I_X)_2 = 3", cubic.quadrics.dim() == 3);
  auto seq = kappa_sequence(cubic, opts.trials, opts.seed);
  t.check("twisted cubic: kappa = (3,1,0)", seq.values == std::vector<long long>({3, 1, 0}));
  auto strand = linear_strand(cubic, 3);
  t.check("twisted cubic: ell = 2", strand.ell == 2 && strand.ell_exact);

  // Veronese surface.
  auto t2 = lattice_points({{0, 0}, {2, 0}, {0, 2}});
  auto ver2 = toric_model(t2);
  t.check("veronese_2: qp = 3",
          kappa_sequence(ver2, opts.trials, opts.seed).qp() == 3);

  // Reducible example.
  auto red = graph_model(GraphSpec::make(3, {{1, 2}}));
  auto search = qp_upper_search(red, 3, opts.trials, opts.seed);
  t.check("reducible V(x0x1,x0x2): qp witness of size 1", search.found && search.k == 1);
  auto red_strand = linear_strand(red, 2);
  t.check("reducible V(x0x1,x0x2): ell = 2", red_strand.ell == 2);

  // Graph invariants and bounds.
  GraphSpec petersen = GraphSpec::make(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  t.check("petersen: treewidth 4", treewidth(petersen) == 4);
  {
    ReportConfig config;
    config.trials = opts.trials;
    config.seed = opts.seed;
    config.max_gamma = 0;
    auto rep = full_report(graph_model(petersen), config);
    std::vector<long long> uppers;
    for (const auto& u : rep.uppers) uppers.push_back(u.value);
    t.check("petersen: uppers (6, 8, 5)", uppers == std::vector<long long>({6, 8, 5}));
  }

  // Property smoke test on random toric configurations.
  Rng rng(Rng::derive(opts.seed, 0x7e57ull));
  bool props_ok = true;
  for (int i = 0; i < 8 && props_ok; ++i) {
    const int d = 1 + static_cast<int>(rng.uniform(0, 1));
    const int count = std::min(3 + static_cast<int>(rng.uniform(0, 4)), d == 1 ? 4 : 7);
    std::vector<std::vector<long long>> pts;
    while (static_cast<int>(pts.size()) < count) {
      std::vector<long long> p(d);
      for (auto& x : p) x = rng.uniform(0, 3);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    auto model = toric_model(LatticeConfig::make(d, pts));
    auto s = kappa_sequence(model, opts.trials, opts.seed + i);
    props_ok = s.strictly_decreasing() && s.strictly_convex() && s.qp() <= model.codim();
    const long long eps = binomial(model.codim() + 1, 2) - model.quadrics.dim();
    if (eps == 0) props_ok = props_ok && s.qp() == model.codim();
    if (eps == 1 || eps == 2) props_ok = props_ok && s.qp() == model.codim() - 1;
  }
  t.check("random toric: kappa decreasing, convex, qp <= codim, extremal cases", props_ok);

  // Shipped corpus files, when present.
  for (const char* name : {"twisted_cubic", "veronese2", "veronese3", "petersen", "c6",
                           "reducible", "segre_square", "rnc5_8points"}) {
    const std::string path = opts.data_dir + "/" + std::string(name) + ".json";
    std::ifstream probe(path);
    if (!probe) continue;
    try {
      auto parsed = parse_input(path);
      t.check(std::string("corpus ") + name + ": parses and constructs",
              parsed.model.n >= 1);
    } catch (const std::exception&) {
      t.check(std::string("corpus ") + name + ": parses and constructs", false);
    }
  }

  out << (t.failures == 0 ? "selftest: all checks passed\n"
                          : "selftest: " + std::to_string(t.failures) + " failure(s)\n");
  return t.failures == 0 ? 0 : 1;
}

}  // namespace

}  // namespace qpkit
