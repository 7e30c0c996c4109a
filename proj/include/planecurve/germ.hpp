#pragma once

// Plane curve germs and their minimal embedded resolution by point blow-ups.

#include "planecurve/kpoly.hpp"
#include "planecurve/localstd.hpp"

#include "json.hpp"

#include <deque>

namespace planecurve {

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CurveGerm {
 public:
  CurveGerm() = default;
  // equation in two variables vanishing at the origin; checks reducedness unless told otherwise
  explicit CurveGerm(Poly eq, std::string label = {}, bool check = true) : eq_(std::move(eq)), label_(std::move(label)) {
    if (eq_.ring().nvars() != 2) throw std::invalid_argument("germ equation must have two variables");
    if (eq_.is_zero()) throw std::invalid_argument("germ equation is zero");
    if (!eq_.constant_term().is_zero()) throw std::invalid_argument("germ equation does not vanish at the origin");
    if (check) {
      if (!is_squarefree(eq_)) throw std::invalid_argument("germ equation is not reduced" + where());
      std::vector<Poly> j{eq_.derivative(0), eq_.derivative(1)};
      if (!colength(j)) throw std::invalid_argument("non-isolated singularity" + where());
    }
  }

  const Poly& equation() const { return eq_; }
  const Field& field() const { return eq_.field(); }
  const Ring& ring() const { return eq_.ring(); }
  const std::string& label() const { return label_; }
  std::string where() const { return label_.empty() ? std::string() : " at " + label_; }

 private:
  Poly eq_;
  std::string label_;
};

inline int multiplicity(const CurveGerm& g) { return g.equation().ord(); }

inline std::vector<Poly> jacobian_generators(const CurveGerm& g) {
  return {g.equation().derivative(0), g.equation().derivative(1)};
}

struct ResolutionNode {
  int id = 0;
  int parent = -1;
  int multiplicity = 0;
  int conjugacyDegree = 1;
  bool stop = false;
  int branches = 0;              // branches ending here (per representative point)
  int divisorU = -1;             // node whose exceptional curve is u = 0 here
  int divisorV = -1;             // node whose exceptional curve is v = 0 here
  std::string chart;             // how the point was reached from its parent
  std::vector<int> children;
  Poly equation;                 // strict transform in local coordinates
};

class ResolutionTree {
 public:
  const std::vector<ResolutionNode>& nodes() const { return nodes_; }
  const ResolutionNode& root() const { return nodes_.front(); }
  const ResolutionNode& node(int id) const { return nodes_.at(id); }
  size_t size() const { return nodes_.size(); }

  int depth(int id) const {
    int d = 0;
    while (nodes_[id].parent >= 0) {
      id = nodes_[id].parent;
      ++d;
    }
    return d;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& n : nodes_) {
      nlohmann::json j;
      j["id"] = n.id;
      j["parent"] = n.parent < 0 ? nlohmann::json(nullptr) : nlohmann::json(n.parent);
      j["multiplicity"] = n.multiplicity;
      j["conjugacyDegree"] = n.conjugacyDegree;
      j["stop"] = n.stop;
      j["chart"] = n.chart;
      arr.push_back(j);
    }
    return arr;
  }

 private:
  friend ResolutionTree resolve(const CurveGerm&);
  std::vector<ResolutionNode> nodes_;
};

namespace detail {

inline Ring local_ring(const Field& f) { return Ring(f, {"u", "v"}); }

struct TangentDirection {
  bool vertical = false;  // the direction u = 0
  Scalar slope;           // v = slope * u otherwise
  Field field;            // field containing slope
  int degree = 1;         // number of conjugate directions represented
};

// Directions of the tangent cone of g (order m).
inline std::vector<TangentDirection> tangent_directions(const Poly& g, int m, const std::string& where) {
  const Field& K = g.field();
  std::vector<Scalar> phi(m + 1, Scalar(K, 0));
  for (auto& [mono, c] : g.terms())
    if (mono.deg() == m) phi[mono[1]] = c;
  std::vector<TangentDirection> out;
  if (phi[m].is_zero()) out.push_back({true, Scalar(K, 0), K, 1});
  KPoly p(K, phi);
  if (p.degree() <= 0) return out;
  KPoly s = squarefree_part(p);
  if (s.degree() == 1) {
    out.push_back({false, -(s.coeff(0) / s.coeff(1)), K, 1});
    return out;
  }
  if (!s.has_rational_coeffs()) {
    throw ResolutionError("tangent directions need a field tower" + where + ": " +
                          s.to_poly(Ring(K, {"c"}), 0).to_string());
  }
  for (auto& [fac, mult] : factor_univariate(s.to_rational())) {
    if (fac.degree() == 1) {
      out.push_back({false, Scalar(K, -fac.coeff(0) / fac.coeff(1)), K, 1});
    } else if (K.is_rational()) {
      Field L = Field::extension(fac);
      out.push_back({false, Scalar::generator(L), L, fac.degree()});
    } else {
      throw ResolutionError("tangent directions need a field tower" + where + ": " + fac.to_string("c"));
    }
  }
  return out;
}

// Strict transform in chart (u, u*v) shifted to v = slope, or in chart (u*v, v) with coordinates swapped.
inline Poly strict_transform(const Poly& g, int m, const TangentDirection& d) {
  Ring R = local_ring(d.field);
  Poly out(R);
  for (auto& [mono, c] : g.terms()) {
    Mono n;
    if (d.vertical) {
      n[0] = mono[0] + mono[1] - m;
      n[1] = mono[0];
    } else {
      n[0] = mono[0] + mono[1] - m;
      n[1] = mono[1];
    }
    out.add_term(n, c.in_field(d.field));
  }
  if (!d.vertical && !d.slope.is_zero()) {
    Poly u = Poly::var(R, 0), v = Poly::var(R, 1);
    out = out.substitute({u, v + Poly(R, d.slope)}, R);
  }
  return out;
}

}  // namespace detail

// Strict transforms at the points of the first exceptional curve, with conjugacy degrees.
inline std::vector<std::pair<CurveGerm, int>> blow_up(const CurveGerm& g) {
  int m = multiplicity(g);
  if (m < 1) throw std::invalid_argument("blow_up needs a germ through the origin");
  std::vector<std::pair<CurveGerm, int>> out;
  for (auto& d : detail::tangent_directions(g.equation(), m, g.where()))
    out.emplace_back(CurveGerm(detail::strict_transform(g.equation(), m, d), g.label(), false), d.degree);
  return out;
}

inline ResolutionTree resolve(const CurveGerm& g) {
  ResolutionTree t;
  auto& nodes = t.nodes_;
  ResolutionNode root;
  root.equation = g.equation();
  root.multiplicity = multiplicity(g);
  root.chart = "root";
  nodes.push_back(root);
  long delta_known = static_cast<long>(root.multiplicity) * (root.multiplicity - 1) / 2;
  std::deque<int> work{0};
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    ResolutionNode n = nodes[id];
    int m = n.multiplicity;
    int e = (n.divisorU >= 0) + (n.divisorV >= 0);
    const Poly& f = n.equation;
    bool stop = false;
    int branches = 0;
    if (m + e <= 1) {
      stop = true;
      branches = m;
    } else if (m == 1 && e == 1) {
      Mono v1;
      v1[1] = 1;
      stop = !f.coeff(v1).is_zero();
      branches = 1;
    } else if (m == 2 && e == 0) {
      Mono a, b, c;
      a[0] = 2;
      b[0] = 1;
      b[1] = 1;
      c[1] = 2;
      Scalar disc = f.coeff(b) * f.coeff(b) - Scalar(4) * f.coeff(a) * f.coeff(c);
      stop = !disc.is_zero();
      branches = 2;
    }
    if (stop) {
      nodes[id].stop = true;
      nodes[id].branches = branches;
      continue;
    }
    for (auto& d : detail::tangent_directions(f, m, g.where())) {
      ResolutionNode c;
      c.id = static_cast<int>(nodes.size());
      c.parent = id;
      c.equation = detail::strict_transform(f, m, d);
      c.multiplicity = c.equation.ord();
      c.conjugacyDegree = n.conjugacyDegree * d.degree;
      c.divisorU = id;
      if (d.vertical) {
        c.divisorV = n.divisorU;
        c.chart = "chart2";
      } else if (d.slope.is_zero()) {
        c.divisorV = n.divisorV;
        c.chart = "chart1 v=0";
      } else {
        c.chart = "chart1 v=" + d.slope.to_string();
      }
      if (c.multiplicity < 1) throw std::logic_error("strict transform misses a tangent direction");
      delta_known += static_cast<long>(c.conjugacyDegree) * c.multiplicity * (c.multiplicity - 1) / 2;
      nodes[id].children.push_back(c.id);
      nodes.push_back(std::move(c));
      work.push_back(static_cast<int>(nodes.size()) - 1);
      if (static_cast<long>(nodes.size()) > 4 * delta_known + 16)
        throw ResolutionError("resolution exceeds its node budget" + g.where());
    }
  }
  return t;
}

struct DeltaBranches {
  long delta = 0;
  long r = 0;
};

inline DeltaBranches delta_branches(const ResolutionTree& t) {
  DeltaBranches out;
  for (auto& n : t.nodes()) {
    out.delta += static_cast<long>(n.conjugacyDegree) * n.multiplicity * (n.multiplicity - 1) / 2;
    if (n.stop) out.r += static_cast<long>(n.conjugacyDegree) * n.branches;
  }
  return out;
}

// Canonical encoding of the resolution tree: multiplicities, proximity to earlier exceptional curves,
// conjugate clusters expanded.
struct TopType {
  std::string encoding;
  long branches = 0;
  long delta = 0;
  // multiplicities at blown-up points; the multiplicity sequence when the germ is irreducible
  std::vector<int> sequence;

  friend bool operator==(const TopType& a, const TopType& b) { return a.encoding == b.encoding; }
  friend bool operator!=(const TopType& a, const TopType& b) { return !(a == b); }
};

namespace detail {

inline std::string encode_node(const ResolutionTree& t, int id) {
  const auto& n = t.node(id);
  std::vector<int> prox;
  for (int dv : {n.divisorU, n.divisorV})
    if (dv >= 0) prox.push_back(t.depth(id) - t.depth(dv));
  std::sort(prox.begin(), prox.end());
  std::string s = "(" + std::to_string(n.multiplicity);
  for (int p : prox) s += "p" + std::to_string(p);
  if (n.stop) s += "s" + std::to_string(n.branches);
  std::vector<std::string> kids;
  for (int c : n.children) {
    std::string ce = encode_node(t, c);
    int copies = t.node(c).conjugacyDegree / n.conjugacyDegree;
    for (int k = 0; k < copies; ++k) kids.push_back(ce);
  }
  std::sort(kids.begin(), kids.end());
  for (auto& k : kids) s += k;
  return s + ")";
}

}  // namespace detail

inline TopType top_type(const ResolutionTree& t) {
  TopType tt;
  tt.encoding = detail::encode_node(t, 0);
  auto db = delta_branches(t);
  tt.branches = db.r;
  tt.delta = db.delta;
  int id = 0;
  while (!t.node(id).stop) {
    tt.sequence.push_back(t.node(id).multiplicity);
    if (t.node(id).children.size() != 1) break;
    id = t.node(id).children.front();
  }
  return tt;
}

// Local intersection number at the origin; nullopt when the germs share a component.
inline std::optional<long> intersection_multiplicity(const CurveGerm& a, const CurveGerm& b) {
  Ring R = a.field().is_rational() ? b.ring() : a.ring();
  Poly fa = a.equation().in_ring(R), fb = b.equation().in_ring(R);
  return colength(std::vector<Poly>{fa, fb});
}

}  // namespace planecurve
