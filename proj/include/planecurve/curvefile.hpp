#pragma once

// Curve files:
//   field: Q | <minimal polynomial in t>
//   vars: x, y, z
//   curve: <homogeneous polynomial>
//   auxiliary: polar | <homogeneous polynomial>
//   points:                       indented lines, one point each
//     (a:b:c)                     with a curve: bypasses the singular point search
//     p1 x2: [0] u^2-v^3, [1] u   without a curve: local data, component index and local equation
//   partition:                    indented lines "<point> analytic|topological|free", or "default <role>"
//   surface:                      indented lines K.C, C.C (rows separated by ';'), C^2, pa, pa_i
// Lines starting with '#' are comments.

#include "planecurve/hilbert.hpp"

#include <fstream>

namespace planecurve {

struct PartitionEntry {
  std::string key;
  PointRole role = PointRole::Analytic;
  int line = 0;
};

struct Partition {
  std::vector<PartitionEntry> entries;
  std::optional<PointRole> fallback;
};

struct CurveFile {
  Field field;
  std::vector<std::string> vars{"x", "y", "z"};
  std::optional<Poly> curve;
  std::optional<std::vector<ProjPoint>> points;
  std::vector<SingularPoint> localPoints;
  bool auxiliaryPolar = false;
  std::optional<Poly> auxiliary;
  std::optional<Partition> partition;
  std::optional<SurfaceData> surface;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline int lead_col(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  return a == std::string::npos ? 1 : static_cast<int>(a) + 1;
}

struct Line {
  int no = 0;
  std::string text;
};

inline long parse_long(const std::string& s, int line, int col) {
  std::string t = trim(s);
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, col, "expected an integer, got '" + t + "'");
  }
  if (pos != t.size()) throw ParseError(line, col, "expected an integer, got '" + t + "'");
  return v;
}

inline std::vector<long> parse_long_list(const std::string& s, int line, int col) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_long(item, line, col));
  return out;
}

inline PointRole parse_role(const std::string& s, int line, int col) {
  if (s == "analytic") return PointRole::Analytic;
  if (s == "topological") return PointRole::Topological;
  if (s == "free") return PointRole::Free;
  throw ParseError(line, col, "unknown role '" + s + "' (expected analytic, topological or free)");
}

inline void parse_partition_line(const Line& l, Partition& P) {
  std::string t = trim(l.text);
  size_t sp = t.find_last_of(" \t");
  if (sp == std::string::npos) throw ParseError(l.no, lead_col(l.text), "expected '<point> <role>'");
  std::string key = trim(t.substr(0, sp)), role = t.substr(sp + 1);
  int col = lead_col(l.text) + static_cast<int>(sp) + 1;
  PointRole r = parse_role(role, l.no, col);
  if (key == "default") P.fallback = r;
  else P.entries.push_back({key, r, l.no});
}

// "(a:b:c)" with coordinates in K.
inline ProjPoint parse_point(const Line& l, const Field& K) {
  std::string t = trim(l.text);
  int col = lead_col(l.text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError(l.no, col, "expected a point '(a:b:c)'");
  std::string body = t.substr(1, t.size() - 2);
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw ParseError(l.no, col, "a point needs three coordinates");
  Ring R(K, {"t"});
  std::array<Scalar, 3> c;
  bool rational = true;
  int off = col + 1;
  for (int i = 0; i < 3; ++i) {
    Poly p = parse_poly(parts[i], R, l.no, off);
    if (!p.is_constant()) throw ParseError(l.no, off, "coordinates must be constants");
    c[i] = p.constant_term();
    rational = rational && c[i].is_rational();
    off += static_cast<int>(parts[i].size()) + 1;
  }
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw ParseError(l.no, col, "(0:0:0) is not a point");
  return make_point(rational ? Field() : K, c[0], c[1], c[2]);
}

// "label [xN]: [i] eq, [j] eq"
inline SingularPoint parse_local_point(const Line& l, const Field& K) {
  std::string t = l.text;
  size_t colon = t.find(':');
  int col = lead_col(t);
  if (colon == std::string::npos) throw ParseError(l.no, col, "expected '<label>: [i] <equation>, ...'");
  std::string head = trim(t.substr(0, colon));
  long conj = 1;
  std::string label = head;
  size_t sp = head.find_last_of(" \t");
  if (sp != std::string::npos && head.size() > sp + 1 && head[sp + 1] == 'x') {
    conj = parse_long(head.substr(sp + 2), l.no, col + static_cast<int>(sp) + 2);
    label = trim(head.substr(0, sp));
  }
  if (label.empty()) throw ParseError(l.no, col, "point label is empty");
  Ring L = detail::local_ring(K);
  std::vector<std::pair<int, Poly>> comps;
  size_t pos = colon + 1;
  while (pos <= t.size()) {
    size_t next = t.find(',', pos);
    std::string piece = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    int pcol = static_cast<int>(pos) + 1;
    std::string p = trim(piece);
    int inner = pcol + lead_col(piece) - 1;
    if (p.empty() || p[0] != '[') throw ParseError(l.no, inner, "expected '[component] <equation>'");
    size_t close = p.find(']');
    if (close == std::string::npos) throw ParseError(l.no, inner, "missing ']'");
    int idx = static_cast<int>(parse_long(p.substr(1, close - 1), l.no, inner + 1));
    Poly eq = parse_poly(p.substr(close + 1), L, l.no, inner + static_cast<int>(close) + 1);
    if (!eq.constant_term().is_zero()) throw ParseError(l.no, inner, "local equation does not vanish at the point");
    comps.emplace_back(idx, eq);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  try {
    return make_local_point(label, conj, comps);
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.no, col, e.what());
  }
}

inline void parse_surface_line(const Line& l, SurfaceData& S, bool& haveKC, bool& haveCC, bool& havePa) {
  std::string t = l.text;
  size_t colon = t.find(':');
  int col = lead_col(t);
  if (colon == std::string::npos) throw ParseError(l.no, col, "expected '<key>: <values>'");
  std::string key = trim(t.substr(0, colon)), val = t.substr(colon + 1);
  int vcol = static_cast<int>(colon) + 2;
  if (key == "K.C") {
    S.KC = parse_long_list(val, l.no, vcol);
    haveKC = true;
  } else if (key == "C.C") {
    S.CC.clear();
    std::stringstream ss(val);
    std::string row;
    while (std::getline(ss, row, ';')) S.CC.push_back(parse_long_list(row, l.no, vcol));
    haveCC = true;
  } else if (key == "C^2") {
    S.C2 = parse_long(val, l.no, vcol);
  } else if (key == "pa") {
    S.pa = parse_long(val, l.no, vcol);
    havePa = true;
  } else if (key == "pa_i") {
    S.paComponents.clear();
    for (long v : parse_long_list(val, l.no, vcol)) S.paComponents.push_back(v);
  } else {
    throw ParseError(l.no, col, "unknown surface key '" + key + "'");
  }
}

}  // namespace detail

inline Partition parse_partition(const std::string& text) {
  Partition P;
  std::stringstream ss(text);
  std::string s;
  int no = 0;
  while (std::getline(ss, s)) {
    ++no;
    std::string t = detail::trim(s);
    if (t.empty() || t[0] == '#') continue;
    detail::parse_partition_line({no, s}, P);
  }
  return P;
}

inline CurveFile parse_curve_file(const std::string& text) {
  CurveFile cf;
  std::vector<detail::Line> lines;
  {
    std::stringstream ss(text);
    std::string s;
    int no = 0;
    while (std::getline(ss, s)) {
      ++no;
      std::string t = detail::trim(s);
      if (t.empty() || t[0] == '#') continue;
      lines.push_back({no, s});
    }
  }
  struct Pending {
    detail::Line line;
    std::string value;
    int vcol;
    int ecol;  // first non-blank character of the value
  };
  std::optional<Pending> curveText, auxText;
  std::vector<detail::Line> pointLines, surfaceLines;
  std::optional<int> pointsHeader, surfaceHeader;
  Partition partition;
  bool havePartition = false;
  for (size_t k = 0; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (std::isspace(static_cast<unsigned char>(l.text[0])))
      throw ParseError(l.no, 1, "indented line outside a block");
    size_t colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError(l.no, 1, "expected '<header>:'");
    std::string key = detail::trim(l.text.substr(0, colon)), value = l.text.substr(colon + 1);
    int vcol = static_cast<int>(colon) + 2;
    int ecol = static_cast<int>(colon) + 1 + detail::lead_col(value);
    auto block = [&]() {
      std::vector<detail::Line> out;
      while (k + 1 < lines.size() && std::isspace(static_cast<unsigned char>(lines[k + 1].text[0]))) out.push_back(lines[++k]);
      if (!detail::trim(value).empty()) throw ParseError(l.no, ecol, "'" + key + ":' starts a block; put entries on indented lines");
      return out;
    };
    if (key == "field") {
      std::string v = detail::trim(value);
      cf.field = (v == "Q") ? Field() : parse_field(value, l.no, vcol);
    } else if (key == "vars") {
      cf.vars.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::string v = detail::trim(item);
        if (!is_grammar_var(v)) throw ParseError(l.no, ecol, "variable '" + v + "' is not allowed");
        cf.vars.push_back(v);
      }
      if (cf.vars.size() != 3) throw ParseError(l.no, ecol, "vars: needs exactly three variables");
    } else if (key == "curve") {
      curveText = Pending{l, value, vcol, ecol};
    } else if (key == "auxiliary") {
      auxText = Pending{l, value, vcol, ecol};
    } else if (key == "points") {
      pointsHeader = l.no;
      pointLines = block();
    } else if (key == "partition") {
      for (auto& pl : block()) detail::parse_partition_line(pl, partition);
      havePartition = true;
    } else if (key == "surface") {
      surfaceHeader = l.no;
      surfaceLines = block();
    } else {
      throw ParseError(l.no, 1, "unknown header '" + key + "'");
    }
  }
  Ring R(cf.field, cf.vars);
  if (curveText) {
    Poly F = parse_poly(curveText->value, R, curveText->line.no, curveText->vcol);
    if (!cf.field.is_rational()) {
      if (!F.has_rational_coeffs()) throw ParseError(curveText->line.no, curveText->ecol, "curve coefficients must be rational");
    }
    Ring Rq(Field(), cf.vars);
    F = F.in_ring(Rq);
    if (!F.is_homogeneous()) throw ParseError(curveText->line.no, curveText->ecol, "curve equation is not homogeneous");
    cf.curve = F;
  }
  if (auxText) {
    std::string v = detail::trim(auxText->value);
    if (v == "polar") {
      cf.auxiliaryPolar = true;
    } else if (v == "self") {
      if (!cf.curve) throw ParseError(auxText->line.no, auxText->ecol, "'auxiliary: self' needs a curve");
      cf.auxiliary = cf.curve;
    } else {
      Poly A = parse_poly(auxText->value, Ring(Field(), cf.vars), auxText->line.no, auxText->vcol);
      if (!A.is_homogeneous()) throw ParseError(auxText->line.no, auxText->ecol, "auxiliary curve is not homogeneous");
      cf.auxiliary = A;
    }
  }
  if (pointsHeader) {
    if (cf.curve) {
      std::vector<ProjPoint> pts;
      for (auto& pl : pointLines) pts.push_back(detail::parse_point(pl, cf.field));
      cf.points = pts;
    } else {
      for (auto& pl : pointLines) cf.localPoints.push_back(detail::parse_local_point(pl, cf.field));
    }
  }
  if (havePartition) cf.partition = partition;
  if (surfaceHeader) {
    SurfaceData S;
    bool haveKC = false, haveCC = false, havePa = false;
    for (auto& sl : surfaceLines) detail::parse_surface_line(sl, S, haveKC, haveCC, havePa);
    if (!haveKC || !haveCC || !havePa) throw ParseError(*surfaceHeader, 1, "surface block needs K.C, C.C and pa");
    cf.surface = S;
  }
  if (!cf.curve && cf.localPoints.empty() && !cf.surface) throw ParseError(1, 1, "no 'curve:' header");
  return cf;
}

inline CurveFile read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_file(ss.str());
}

// Roles aligned with the singular points of C; keys are point labels or "[k]" for the k-th point.
inline std::vector<PointRole> resolve_partition(const Partition& P, const ProjectiveCurve& C) {
  std::vector<std::optional<PointRole>> roles(C.singularPoints.size());
  for (auto& e : P.entries) {
    bool hit = false;
    for (size_t k = 0; k < C.singularPoints.size(); ++k) {
      bool match = e.key == C.singularPoints[k].label || e.key == "[" + std::to_string(k) + "]";
      if (match) {
        roles[k] = e.role;
        hit = true;
      }
    }
    if (!hit) throw CurveError("partition line " + std::to_string(e.line) + ": '" + e.key + "' is not a singular point");
  }
  std::vector<PointRole> out;
  for (size_t k = 0; k < roles.size(); ++k) {
    if (roles[k]) out.push_back(*roles[k]);
    else if (P.fallback) out.push_back(*P.fallback);
    else throw CurveError("partition assigns no role to " + C.singularPoints[k].label);
  }
  return out;
}

}  // namespace planecurve
