#include "ibcq/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ibcq/errors.hpp"
#include "ibcq/format.hpp"

namespace ibcq {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename F>
auto guarded(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("not a number: \"" + std::string(s) + "\"");
  }
  return v;
}

std::uint64_t parse_index(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("not an outcome index: \"" + std::string(s) + "\"");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "X";
    case GateKind::H:
      return "H";
    case GateKind::Phase:
      return "phase";
    case GateKind::ControlledPhase:
      return "cphase";
    case GateKind::Swap:
      return "swap";
    case GateKind::Unitary:
      return "unitary";
  }
  return "?";
}

GateKind gate_kind(const std::string& name) {
  if (name == "X") return GateKind::X;
  if (name == "H") return GateKind::H;
  if (name == "phase") return GateKind::Phase;
  if (name == "cphase") return GateKind::ControlledPhase;
  if (name == "swap") return GateKind::Swap;
  if (name == "unitary") return GateKind::Unitary;
  throw ValidationError("unknown gate \"" + name + "\"");
}

}  // namespace

Json to_json(const Promise& p) { return Json{{"L", p.lipschitz}, {"range", {p.range_lo, p.range_hi}}}; }

Promise promise_from_json(const Json& j) {
  const auto range = field<std::vector<double>>(j, "range");
  if (range.size() != 2) {
    throw ValidationError("promise range must have two entries");
  }
  return Promise(field<double>(j, "L"), range[0], range[1]);
}

Json to_json(const FunctionSpec& f) {
  Json j;
  j["family"] = std::string(f.family_name());
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          Json pts = Json::array();
          for (const Point& p : fam.points) pts.push_back({p.x, p.y});
          j["points"] = std::move(pts);
        } else if constexpr (std::is_same_v<T, Constant>) {
          j["value"] = fam.value;
        } else {
          j["coefficients"] = fam.coefficients;
        }
      },
      f.family());
  if (f.promise()) {
    j["promise"] = to_json(*f.promise());
  }
  return j;
}

FunctionSpec function_from_json(const Json& j) {
  return guarded("function", [&] {
    const auto family = field<std::string>(j, "family");
    FunctionSpec f = [&] {
      if (family == "pwl") {
        std::vector<Point> pts;
        for (const auto& pair : field<std::vector<std::vector<double>>>(j, "points")) {
          if (pair.size() != 2) throw ValidationError("breakpoints must be [x, y] pairs");
          pts.push_back({pair[0], pair[1]});
        }
        return FunctionSpec::piecewise_linear(std::move(pts));
      }
      if (family == "constant") return FunctionSpec::constant(field<double>(j, "value"));
      if (family == "trig") return FunctionSpec::trigonometric(field<std::vector<double>>(j, "coefficients"));
      throw ValidationError("unknown function family \"" + family + "\"");
    }();
    if (j.contains("promise")) {
      f = f.with_promise(promise_from_json(j.at("promise")));
    }
    return f;
  });
}

Json to_json(const Design& d) { return Json(std::vector<double>(d.points().begin(), d.points().end())); }

Design design_from_json(const Json& j) {
  return guarded("design", [&] { return Design(j.get<std::vector<double>>()); });
}

Json to_json(const Quadrature& q) { return Json{{"design", to_json(q.design)}, {"weights", q.weights}}; }

Quadrature quadrature_from_json(const Json& j) {
  return guarded("quadrature", [&] {
    if (!j.contains("design")) throw ValidationError("missing field \"design\"");
    return Quadrature(design_from_json(j.at("design")), field<std::vector<double>>(j, "weights"));
  });
}

Json to_json(const FoolingPair& pair) {
  return Json{{"f_plus", to_json(pair.plus)}, {"f_minus", to_json(pair.minus)}, {"gap", pair.gap}};
}

Json to_json(const RadiusReport& r) {
  return Json{{"h_lo", r.h_lo}, {"h_hi", r.h_hi}, {"radius", r.radius}, {"center", r.center}};
}

Json to_json(const GateOp& g) {
  Json j{{"gate", gate_name(g.kind)}, {"targets", g.targets}};
  if (!g.controls.empty()) j["controls"] = g.controls;
  if (g.kind == GateKind::Phase || g.kind == GateKind::ControlledPhase) j["theta"] = g.theta;
  if (g.kind == GateKind::Unitary) {
    Json m = Json::array();
    for (const Amplitude& a : g.matrix) m.push_back({a.real(), a.imag()});
    j["matrix"] = std::move(m);
  }
  return j;
}

GateOp gate_from_json(const Json& j) {
  return guarded("gate", [&] {
    GateOp g;
    g.kind = gate_kind(field<std::string>(j, "gate"));
    g.targets = field<std::vector<int>>(j, "targets");
    if (j.contains("controls")) g.controls = field<std::vector<int>>(j, "controls");
    if (g.kind == GateKind::Phase || g.kind == GateKind::ControlledPhase) g.theta = field<double>(j, "theta");
    if (g.kind == GateKind::Unitary) {
      for (const auto& pair : field<std::vector<std::vector<double>>>(j, "matrix")) {
        if (pair.size() != 2) throw ValidationError("matrix entries must be [re, im] pairs");
        g.matrix.emplace_back(pair[0], pair[1]);
      }
    }
    return g;
  });
}

Json to_json(const QuerySpec& q) {
  return Json{{"m_prime", q.m_prime},
              {"m_double_prime", q.m_double_prime},
              {"range_lo", q.range_lo},
              {"range_hi", q.range_hi},
              {"tau", q.tau_rule == TauRule::Midpoint ? "midpoint" : "left-endpoint"}};
}

QuerySpec query_from_json(const Json& j) {
  return guarded("query", [&] {
    QuerySpec q;
    q.m_prime = field<int>(j, "m_prime");
    q.m_double_prime = field<int>(j, "m_double_prime");
    q.range_lo = field<double>(j, "range_lo");
    q.range_hi = field<double>(j, "range_hi");
    const std::string rule = j.contains("tau") ? field<std::string>(j, "tau") : "midpoint";
    if (rule == "midpoint") {
      q.tau_rule = TauRule::Midpoint;
    } else if (rule == "left-endpoint") {
      q.tau_rule = TauRule::LeftEndpoint;
    } else {
      throw ValidationError("unknown tau rule \"" + rule + "\"");
    }
    return q;
  });
}

Json to_json(const Decode& d) {
  if (d.kind == Decode::Kind::SineSquared) return Json{{"kind", "sin2"}, {"bits", d.bits}};
  return Json{{"kind", "affine"}, {"scale", d.scale}, {"offset", d.offset}};
}

Decode decode_from_json(const Json& j) {
  return guarded("decode", [&] {
    const std::string kind = j.contains("kind") ? field<std::string>(j, "kind") : "affine";
    if (kind == "affine") return Decode::affine(field<double>(j, "scale"), field<double>(j, "offset"));
    if (kind == "sin2") return Decode::sine_squared(field<int>(j, "bits"));
    throw ValidationError("unknown decode kind \"" + kind + "\"");
  });
}

Json to_json(const AlgorithmSpec& a) {
  Json layers = Json::array();
  for (const Layer& layer : a.layers) {
    Json l = Json::array();
    for (const GateOp& g : layer) l.push_back(to_json(g));
    layers.push_back(std::move(l));
  }
  return Json{{"nu", a.nu},
              {"query", to_json(a.query)},
              {"layers", std::move(layers)},
              {"measure", a.measured},
              {"decode", to_json(a.decode)}};
}

AlgorithmSpec algorithm_from_json(const Json& j) {
  return guarded("algorithm", [&] {
    AlgorithmSpec a;
    a.nu = field<int>(j, "nu");
    if (!j.contains("query")) throw ValidationError("missing field \"query\"");
    a.query = query_from_json(j.at("query"));
    if (!j.contains("layers") || !j.at("layers").is_array()) {
      throw ValidationError("field \"layers\" must be an array of gate lists");
    }
    for (const Json& layer : j.at("layers")) {
      if (!layer.is_array()) throw ValidationError("each layer must be an array of gates");
      Layer l;
      for (const Json& g : layer) l.push_back(gate_from_json(g));
      a.layers.push_back(std::move(l));
    }
    a.measured = field<std::vector<int>>(j, "measure");
    if (!j.contains("decode")) throw ValidationError("missing field \"decode\"");
    a.decode = decode_from_json(j.at("decode"));
    return a;
  });
}

Json to_json(const BoundReport& r) {
  return Json{{"status", r.status == BoundStatus::Ok ? "ok" : "not-applicable"},
              {"nu", r.nu},
              {"n_eps", r.n_eps},
              {"classical_evals", r.classical_evals},
              {"rhs", r.rhs},
              {"worst_prob_error", r.worst_prob_error},
              {"eps", r.eps},
              {"L", r.lipschitz},
              {"c", r.cost},
              {"m_3eps", r.m_3eps},
              {"two_n_eps", 2 * r.n_eps},
              {"evals_cover_3eps", r.evals_cover_3eps},
              {"satisfied", r.satisfied}};
}

Json to_json(const Extraction& e) {
  return Json{{"value", e.value},
              {"representative", e.representative},
              {"cluster",
               {{"members", e.cluster.members},
                {"mass", e.cluster.mass},
                {"phi_lo", e.cluster.phi_lo},
                {"phi_hi", e.cluster.phi_hi}}}};
}

std::vector<double> parse_real_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    return guarded("list", [&] { return Json::parse(text).get<std::vector<double>>(); });
  }
  std::vector<double> out;
  if (text.empty()) return out;
  for (std::string_view item : split(text, ',')) {
    out.push_back(parse_real(item));
  }
  return out;
}

std::string distribution_to_csv(const OutcomeDistribution& d) {
  std::string out = "j,p,phi\n";
  for (const Outcome& o : d.entries) {
    out += std::to_string(o.j);
    out += ',';
    out += format_real(o.p);
    out += ',';
    out += format_real(o.phi);
    out += '\n';
  }
  return out;
}

OutcomeDistribution distribution_from_csv(std::string_view text) {
  OutcomeDistribution d;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (header) {
      if (cols.size() != 3 || trim(cols[0]) != "j" || trim(cols[1]) != "p" || trim(cols[2]) != "phi") {
        throw ValidationError("distribution CSV must start with header j,p,phi");
      }
      header = false;
      continue;
    }
    if (cols.size() != 3) {
      throw ValidationError("distribution row needs three columns: \"" + std::string(line) + "\"");
    }
    d.entries.push_back({parse_index(cols[0]), parse_real(cols[1]), parse_real(cols[2])});
  }
  if (header) {
    throw ValidationError("distribution CSV is empty");
  }
  validate_distribution(d);
  return d;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ValidationError("cannot write " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::vector<FamilyMember> load_family(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ValidationError("family directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw ValidationError("family directory " + dir.string() + " has no .json files");
  }
  std::vector<FamilyMember> family;
  for (const auto& file : files) {
    FunctionSpec f = function_from_json(read_json_file(file));
    const double truth = exact_integral(f);
    family.push_back({file.stem().string(), std::move(f), truth});
  }
  return family;
}

void save_family(const std::filesystem::path& dir, std::span<const NamedFunction> family) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::ostringstream name;
    name << std::setw(2) << std::setfill('0') << i << '_' << family[i].name << ".json";
    write_text_file(dir / name.str(), dump_json(to_json(family[i].f)));
  }
}

}  // namespace ibcq
