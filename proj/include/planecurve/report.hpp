#pragma once

// JSON and text rendering of criterion reports and curve summaries.

#include "planecurve/hilbert.hpp"

namespace planecurve {

using nlohmann::json;

inline json to_json(const IsodEntry& e) {
  return json{{"point", e.point},
              {"conj", e.conj},
              {"value", e.isod.value},
              {"exactness", to_string(e.isod.exactness)},
              {"source", e.isod.source}};
}

inline json to_json(const TermEntry& t) {
  return json{{"point", t.point}, {"conj", t.conj}, {"term", t.term}, {"value", t.value}};
}

inline json to_json(const ComponentCheck& c) {
  json terms = json::array(), isod = json::array();
  for (auto& t : c.terms) terms.push_back(to_json(t));
  for (auto& i : c.isodSources) isod.push_back(to_json(i));
  return json{{"component", c.component}, {"lhs", c.lhs},     {"rhs", c.rhs},         {"fixed", c.fixed},
              {"satisfied", c.satisfied}, {"terms", terms}, {"isodSources", isod}};
}

inline json to_json(const CriterionReport& r) {
  json comps = json::array();
  for (auto& c : r.perComponent) comps.push_back(to_json(c));
  return json{{"criterion", r.criterion},
              {"scheme", r.scheme},
              {"verdict", to_string(r.verdict)},
              {"dimension", r.dimension ? json(*r.dimension) : json(nullptr)},
              {"expectedDimension", r.expectedDimension},
              {"evaluable", r.evaluable},
              {"perComponent", comps},
              {"caveats", r.caveats},
              {"diagnostics", r.diagnostics},
              {"consequences", r.consequences}};
}

inline Exactness exactness_from_string(const std::string& s) {
  if (s == "exact") return Exactness::Exact;
  if (s == "lowerBound") return Exactness::LowerBound;
  throw std::invalid_argument("unknown exactness '" + s + "'");
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "smoothCertified") return Verdict::SmoothCertified;
  if (s == "notDecided") return Verdict::NotDecided;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

inline CriterionReport report_from_json(const json& j) {
  CriterionReport r;
  r.criterion = j.at("criterion").get<std::string>();
  r.scheme = j.at("scheme").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (!j.at("dimension").is_null()) r.dimension = j.at("dimension").get<long>();
  r.expectedDimension = j.at("expectedDimension").get<long>();
  r.evaluable = j.at("evaluable").get<bool>();
  for (auto& c : j.at("perComponent")) {
    ComponentCheck cc;
    cc.component = c.at("component").get<int>();
    cc.lhs = c.at("lhs").get<long>();
    cc.rhs = c.at("rhs").get<long>();
    cc.fixed = c.at("fixed").get<long>();
    cc.satisfied = c.at("satisfied").get<bool>();
    for (auto& t : c.at("terms"))
      cc.terms.push_back({t.at("point").get<std::string>(), t.at("conj").get<long>(), t.at("value").get<long>(),
                          t.at("term").get<std::string>()});
    for (auto& i : c.at("isodSources"))
      cc.isodSources.push_back({i.at("point").get<std::string>(), i.at("conj").get<long>(),
                                IsodValue{i.at("value").get<long>(), exactness_from_string(i.at("exactness").get<std::string>()),
                                          i.at("source").get<std::string>()}});
    r.perComponent.push_back(std::move(cc));
  }
  r.caveats = j.at("caveats").get<std::vector<std::string>>();
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  r.consequences = j.at("consequences").get<std::vector<std::string>>();
  return r;
}

inline std::string isod_text(const IsodValue& v) {
  return (v.exact() ? "" : "≥ ") + std::to_string(v.value) + " (" + to_string(v.exactness) + ")";
}

inline std::string render_text(const CriterionReport& r) {
  std::ostringstream o;
  o << r.criterion << " [" << r.scheme << "]: " << to_string(r.verdict);
  if (r.dimension) o << ", " << r.scheme << " smooth at C of dimension " << *r.dimension;
  o << "\n";
  for (auto& c : r.perComponent) {
    o << "  " << (c.component < 0 ? std::string("whole curve") : "component " + std::to_string(c.component)) << ": " << c.lhs
      << (c.lhs > c.rhs ? " > " : c.lhs == c.rhs ? " = " : " < ") << c.rhs;
    if (c.fixed) o << "  (fixed part " << c.fixed << ")";
    o << "\n";
    for (auto& t : c.terms) {
      o << "    " << t.term << " at " << t.point << ": " << t.value;
      if (t.conj > 1) o << " (x" << t.conj << " conjugates)";
      o << "\n";
    }
    for (auto& i : c.isodSources) {
      o << "    isod at " << i.point << ": " << isod_text(i.isod);
      if (i.conj > 1) o << " (x" << i.conj << " conjugates)";
      o << "  [" << i.isod.source << "]\n";
    }
  }
  for (auto& s : r.diagnostics) o << "  note: " << s << "\n";
  for (auto& s : r.caveats) o << "  caveat: " << s << "\n";
  for (auto& s : r.consequences) o << "  consequence: " << s << "\n";
  return o.str();
}

inline json to_json(const SingularPoint& sp, bool with_resolution = false) {
  const SingularityRecord& s = sp.record;
  json j{{"point", sp.label},
         {"conjugates", sp.conj},
         {"germ", s.germ.equation().to_string()},
         {"components", sp.components},
         {"multiplicity", s.m},
         {"mu", s.mu},
         {"tau", s.tau},
         {"tauEs", s.tauEs ? json(*s.tauEs) : json(nullptr)},
         {"tauEsSource", s.tauEsSource},
         {"delta", s.delta},
         {"branches", s.r},
         {"class", s.tag.to_string()},
         {"quasihomogeneous", s.tag.quasihomogeneous},
         {"modality", s.modality ? json(*s.modality) : json(nullptr)},
         {"topType", json{{"encoding", s.topType.encoding}, {"sequence", s.topType.sequence}}}};
  if (sp.point) j["chart"] = std::string(1, "XYZ"[sp.point->chart()]) + " = 1";
  if (with_resolution) j["resolution"] = sp.resolution;
  return j;
}

inline json to_json(const ProjectiveCurve& C, bool with_resolution = false) {
  json comps = json::array(), pts = json::array();
  for (size_t i = 0; i < C.components.size(); ++i)
    comps.push_back(json{{"index", i}, {"equation", C.components[i].F.to_string()}, {"degree", C.components[i].degree}});
  for (auto& sp : C.singularPoints) pts.push_back(to_json(sp, with_resolution));
  return json{{"equation", C.F.to_string()}, {"degree", C.degree}, {"components", comps}, {"singularPoints", pts}};
}

inline std::string render_text(const SingularPoint& sp) {
  const SingularityRecord& s = sp.record;
  std::ostringstream o;
  o << "  " << sp.label;
  if (sp.conj > 1) o << " (x" << sp.conj << " conjugates)";
  o << ": " << s.tag.to_string() << ", m=" << s.m << " mu=" << s.mu << " tau=" << s.tau
    << " tau^es=" << (s.tauEs ? std::to_string(*s.tauEs) : std::string("unknown")) << " delta=" << s.delta << " r=" << s.r
    << " modality=" << (s.modality ? std::to_string(*s.modality) : std::string("unknown")) << "\n";
  o << "    germ " << s.germ.equation().to_string() << "; components {";
  for (size_t i = 0; i < sp.components.size(); ++i) o << (i ? "," : "") << sp.components[i];
  o << "}; topological type " << s.topType.encoding << "\n";
  return o.str();
}

inline std::string render_text(const ProjectiveCurve& C) {
  std::ostringstream o;
  o << "curve of degree " << C.degree << ": " << C.F.to_string() << "\n";
  for (size_t i = 0; i < C.components.size(); ++i)
    o << "  component " << i << " (degree " << C.components[i].degree << "): " << C.components[i].F.to_string() << "\n";
  o << "singular points: " << C.singularPoints.size() << "\n";
  for (auto& sp : C.singularPoints) o << render_text(sp);
  return o.str();
}

}  // namespace planecurve
