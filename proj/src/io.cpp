#include "ndiv/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ndiv {

namespace {

json endpoint_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

double endpoint_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw spec_error("interval endpoints must be numbers or \"inf\"/\"-inf\"");
  }
  if (!j.is_number()) throw spec_error("interval endpoints must be numbers or \"inf\"/\"-inf\"");
  return j.get<double>();
}

json interval_to_json(const Interval& e) {
  return json::array({endpoint_to_json(e.lo), endpoint_to_json(e.hi)});
}

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw spec_error("intervals must be [lo, hi] pairs");
  return Interval(endpoint_from_json(j[0]), endpoint_from_json(j[1]));
}

void expect_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw spec_error(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw spec_error("unknown field \"" + key + "\" in " + what);
  }
}

json terms_to_json(const std::vector<Term>& terms) {
  json arr = json::array();
  for (const Term& t : terms) arr.push_back(json::array({t.coeff, t.shift}));
  return arr;
}

std::vector<Term> terms_from_json(const json& j) {
  if (!j.is_array()) throw spec_error("translate terms must be an array");
  std::vector<Term> terms;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) throw spec_error("each term must be [coeff, shift]");
    terms.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return terms;
}

json tail_to_json(const std::optional<GeometricTail>& tail) {
  if (!tail) return nullptr;
  return json{{"base", tail->base}, {"spacing", tail->spacing}, {"ratio", tail->ratio}};
}

std::optional<GeometricTail> tail_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  expect_keys(j, {"base", "spacing", "ratio"}, "tail");
  return GeometricTail{j.at("base").get<double>(), j.at("spacing").get<double>(),
                       j.at("ratio").get<double>()};
}

json phase_to_json(const BranchPhase& phase) {
  if (const auto* angle = std::get_if<PhaseAngle>(&phase))
    return json{{"angle", json::array({angle->num(), angle->den()})}};
  const auto& prof = std::get<PhaseProfile>(phase);
  return json{{"profile",
               json{{"component", prof.component}, {"xs", prof.xs}, {"angles", prof.angles}}}};
}

BranchPhase phase_from_json(const json& j) {
  expect_keys(j, {"angle", "profile"}, "phase");
  if (j.contains("angle")) {
    const json& a = j.at("angle");
    if (!a.is_array() || a.size() != 2) throw spec_error("phase angle must be [num, den]");
    return PhaseAngle(a[0].get<std::int64_t>(), a[1].get<std::int64_t>());
  }
  if (!j.contains("profile")) throw spec_error("phase must carry \"angle\" or \"profile\"");
  const json& p = j.at("profile");
  expect_keys(p, {"component", "xs", "angles"}, "phase profile");
  return PhaseProfile{p.at("component").get<int>(), p.at("xs").get<std::vector<double>>(),
                      p.at("angles").get<std::vector<double>>()};
}

}  // namespace

json support_to_json(const SupportSpec& spec) {
  json j;
  j["center"] = interval_to_json(spec.center());
  json pos = json::array();
  if (!spec.infinite())
    for (const Interval& e : spec.positives()) pos.push_back(interval_to_json(e));
  j["positives"] = pos;
  if (spec.generator())
    j["generator"] = json{{"period", spec.generator()->period}, {"width", spec.generator()->width}};
  else
    j["generator"] = nullptr;
  return j;
}

SupportSpec support_from_json(const json& j) {
  expect_keys(j, {"center", "positives", "generator"}, "support spec");
  if (j.contains("generator") && !j.at("generator").is_null()) {
    const json& g = j.at("generator");
    expect_keys(g, {"period", "width"}, "generator rule");
    if (j.contains("positives") && !j.at("positives").empty())
      throw spec_error("periodic specs cannot also list positive components");
    SupportSpec spec =
        SupportSpec::periodic(g.at("period").get<double>(), g.at("width").get<double>());
    if (j.contains("center") && !(interval_from_json(j.at("center")) == spec.center()))
      throw spec_error("periodic center must be (-width/2, width/2)");
    return spec;
  }
  if (!j.contains("center")) throw spec_error("support spec needs a center component");
  Interval center = interval_from_json(j.at("center"));
  std::vector<Interval> positives;
  if (j.contains("positives"))
    for (const json& e : j.at("positives")) positives.push_back(interval_from_json(e));
  return SupportSpec::from_center_and_positives(center, std::move(positives));
}

json function_to_json(const BranchFunction& f) {
  json j;
  j["power"] = f.power();
  j["spec"] = support_to_json(f.spec());
  j["atom"] = json{{"alpha", f.atom().alpha}, {"half_width", f.atom().half_width}};
  j["center"] = terms_to_json(f.center().terms());
  if (f.periodic()) {
    j["branches"] = nullptr;
    json phases = json::object();
    for (const auto& [idx, angle] : f.sparse_phases())
      phases[std::to_string(idx)] = json::array({angle.num(), angle.den()});
    j["phases"] = phases;
  } else {
    json branches = json::array();
    for (const Branch& b : f.branches()) {
      branches.push_back(json{{"scale", b.scale},
                              {"terms", terms_to_json(b.shape.terms())},
                              {"tail", tail_to_json(b.shape.tail())},
                              {"phase", phase_to_json(b.phase)}});
    }
    j["branches"] = branches;
    j["phases"] = nullptr;
  }
  return j;
}

BranchFunction function_from_json(const json& j) {
  expect_keys(j, {"power", "spec", "atom", "center", "branches", "phases"}, "function");
  const SupportSpec spec = support_from_json(j.at("spec"));
  const json& ja = j.at("atom");
  expect_keys(ja, {"alpha", "half_width"}, "atom");
  const Atom atom(ja.at("alpha").get<double>(), ja.at("half_width").get<double>());
  TranslateSum center(atom, terms_from_json(j.at("center")));
  const int power = j.at("power").get<int>();
  if (spec.infinite()) {
    std::map<int, PhaseAngle> phases;
    if (j.contains("phases") && !j.at("phases").is_null()) {
      for (const auto& [key, value] : j.at("phases").items()) {
        if (!value.is_array() || value.size() != 2)
          throw spec_error("phase angles must be [num, den]");
        phases.emplace(std::stoi(key),
                       PhaseAngle(value[0].get<std::int64_t>(), value[1].get<std::int64_t>()));
      }
    }
    return BranchFunction::with_periodic_branches(spec, std::move(center), std::move(phases),
                                                  power);
  }
  std::vector<Branch> branches;
  if (j.contains("branches") && !j.at("branches").is_null()) {
    for (const json& b : j.at("branches")) {
      expect_keys(b, {"scale", "terms", "tail", "phase"}, "branch");
      TranslateSum shape(atom, terms_from_json(b.at("terms")),
                         b.contains("tail") ? tail_from_json(b.at("tail")) : std::nullopt);
      branches.push_back(
          {b.at("scale").get<double>(), std::move(shape), phase_from_json(b.at("phase"))});
    }
  }
  return BranchFunction(spec, std::move(center), std::move(branches), power);
}

json params_to_json(const ConstructionParams& p) {
  json j;
  j["atom_alpha"] = p.atom_alpha;
  j["knot_margin"] = p.knot_margin;
  j["omega0_margin"] = p.omega0_margin;
  j["tail_ratio"] = p.tail_ratio;
  j["scale_rule"] = p.scale_rule == ScaleRule::dyadic ? "dyadic" : "length_normalized";
  j["scales"] = p.scales.empty() ? json(nullptr) : json(p.scales);
  j["center_weights"] = p.center_weights.empty() ? json(nullptr) : json(p.center_weights);
  return j;
}

ConstructionParams params_from_json(const json& j) {
  expect_keys(j,
              {"atom_alpha", "knot_margin", "omega0_margin", "tail_ratio", "scale_rule", "scales",
               "center_weights"},
              "construction params");
  ConstructionParams p;
  if (j.contains("atom_alpha")) p.atom_alpha = j.at("atom_alpha").get<double>();
  if (j.contains("knot_margin")) p.knot_margin = j.at("knot_margin").get<double>();
  if (j.contains("omega0_margin")) p.omega0_margin = j.at("omega0_margin").get<double>();
  if (j.contains("tail_ratio")) p.tail_ratio = j.at("tail_ratio").get<double>();
  if (j.contains("scale_rule")) {
    const auto rule = j.at("scale_rule").get<std::string>();
    if (rule == "dyadic")
      p.scale_rule = ScaleRule::dyadic;
    else if (rule == "length_normalized")
      p.scale_rule = ScaleRule::length_normalized;
    else
      throw spec_error("scale_rule must be \"dyadic\" or \"length_normalized\"");
  }
  if (j.contains("scales") && !j.at("scales").is_null())
    p.scales = j.at("scales").get<std::vector<double>>();
  if (j.contains("center_weights") && !j.at("center_weights").is_null())
    p.center_weights = j.at("center_weights").get<std::vector<double>>();
  return p;
}

json verdict_to_json(const PsdVerdict& v) {
  json j;
  j["passed"] = v.passed;
  switch (v.path) {
    case PsdPath::analytic: j["path"] = "analytic"; break;
    case PsdPath::grid: j["path"] = "grid"; break;
    case PsdPath::eigen: j["path"] = "eigen"; break;
  }
  if (v.witness)
    j["witness"] = json{{"points", v.witness->points}, {"value", v.witness->value}};
  else
    j["witness"] = nullptr;
  return j;
}

json rootset_to_json(const RootSet& rs) {
  json j;
  j["n"] = rs.n;
  j["k"] = rs.k ? json(*rs.k) : json(nullptr);
  j["bound"] = rs.bound < 0 ? json("inf") : json(rs.bound);
  j["verified"] = rs.roots.size();
  json roots = json::array();
  for (const RootEntry& e : rs.roots) {
    json r;
    r["pv"] = e.pv.entries;
    switch (e.verdict.path) {
      case PsdPath::analytic: r["pd_path"] = "analytic"; break;
      case PsdPath::grid: r["pd_path"] = "grid"; break;
      case PsdPath::eigen: r["pd_path"] = "eigen"; break;
    }
    roots.push_back(r);
  }
  j["roots"] = roots;
  return j;
}

void write_spectrum_csv(std::ostream& out, const CosineSpectrum& s, double t0, double t1,
                        double step) {
  if (!(step > 0.0) || !(t1 >= t0)) throw spec_error("bad spectrum sampling range");
  out << "t,bracket,atom_factor,value\n";
  out << std::setprecision(17);
  const auto count = static_cast<std::int64_t>(std::floor((t1 - t0) / step + 1e-9)) + 1;
  for (std::int64_t i = 0; i < count; ++i) {
    const double t = t0 + static_cast<double>(i) * step;
    const double bracket = s.bracket(t);
    const double atom_factor = atom_inverse_transform(s.atom(), t);
    out << t << ',' << bracket << ',' << atom_factor << ',' << 2.0 * atom_factor * bracket
        << '\n';
  }
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw spec_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw spec_error("cannot write file: " + path);
  out << text;
  if (!out.good()) throw spec_error("write failed: " + path);
}

}  // namespace ndiv
