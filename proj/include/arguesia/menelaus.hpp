#pragma once

// Signed ratios, sector figures, and replayed Menelaus proofs.
//
// Ratio(O; A, B) is the signed scalar t with OA = t * OB (vectors). With this
// common-origin convention the Menelaus product
//   Ratio(N1; b, c) * Ratio(N2; c, a) * Ratio(N3; a, b)
// equals +1 (the classical oriented form N1b/N1c * ... equals -1 with the
// cyclic segment convention; see menelaus_classical).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arguesia/quadrangle.hpp"

namespace arguesia {

/// t with (n - o) = t (d - o); the three points must be collinear.
template <class S>
S signed_ratio(const Pt2<S>& o, const Pt2<S>& n, const Pt2<S>& d) {
  const Pt2<S> u = n - o;
  const Pt2<S> v = d - o;
  if (v.x.is_zero() && v.y.is_zero()) throw DegenerateError("ratio with zero denominator segment");
  if (!cross2(u, v).is_zero()) throw DegenerateError("ratio of non-collinear points");
  return v.x.is_zero() ? u.y / v.y : u.x / v.x;
}

/// t with (a2 - a1) = t (b2 - b1) for parallel vectors.
template <class S>
S vector_ratio(const Pt2<S>& a1, const Pt2<S>& a2, const Pt2<S>& b1, const Pt2<S>& b2) {
  const Pt2<S> u = a2 - a1;
  const Pt2<S> v = b2 - b1;
  if (v.x.is_zero() && v.y.is_zero()) throw DegenerateError("vector ratio with zero denominator");
  if (!cross2(u, v).is_zero()) throw DegenerateError("vector ratio of non-parallel segments");
  return v.x.is_zero() ? u.y / v.y : u.x / v.x;
}

/// Product of two segments from a shared point: (A - X).(B - X). For A, B, X
/// collinear this is the signed product XA * XB.
template <class S>
S rect(const Pt2<S>& x, const Pt2<S>& a, const Pt2<S>& b) {
  return dot2(a - x, b - x);
}

template <class S>
S sq_dist(const Pt2<S>& a, const Pt2<S>& b) {
  return dot2(a - b, a - b);
}

/// Named signed ratio between three collinear finite points.
struct Ratio {
  std::string origin_name, num_name, den_name;
  PPoint origin, num, den;

  Rat value() const {
    for (const auto* p : {&origin, &num, &den})
      if (p->is_infinite())
        throw DegenerateError("ratio " + str() + " involves a point at infinity");
    if (origin == den) throw DegenerateError("ratio " + str() + ": " + origin_name + " = " + den_name);
    return signed_ratio(origin.to_affine(), num.to_affine(), den.to_affine());
  }
  /// (O;B,A) for (O;A,B).
  Ratio inverted() const { return {origin_name, den_name, num_name, origin, den, num}; }
  std::string str() const { return origin_name + num_name + "/" + origin_name + den_name; }
};

struct RatioChain {
  std::vector<Ratio> factors;

  Rat value() const {
    Rat v(1);
    for (const auto& f : factors) v *= f.value();
    return v;
  }
  RatioChain inverse() const {
    RatioChain r;
    for (const auto& f : factors) r.factors.push_back(f.inverted());
    return r;
  }
  /// Rewrites (O;A,B)(O;B,C) into (O;A,C) wherever two adjacent factors share
  /// their origin and a middle point.
  RatioChain cancel_adjacent() const {
    RatioChain r;
    for (const auto& f : factors) {
      if (!r.factors.empty()) {
        Ratio& last = r.factors.back();
        if (last.origin == f.origin && last.den == f.num) {
          last.den = f.den;
          last.den_name = f.den_name;
          if (last.num == last.den) r.factors.pop_back();
          continue;
        }
      }
      r.factors.push_back(f);
    }
    return r;
  }
  std::string str() const {
    std::string s;
    for (const auto& f : factors) s += "(" + f.str() + ")";
    return s.empty() ? "1" : s;
  }
};

struct ProofStep {
  std::string label;
  std::string claim;
  std::string citation;
  std::string kind;  // menelaus, aggregation, apollonius, euclid, thales, pappus, composition, ...
  QuadExt lhs;
  QuadExt rhs;
  bool holds() const { return lhs == rhs; }
};

struct ProofTrace {
  std::string name;
  std::vector<ProofStep> steps;
  std::optional<ProofStep> conclusion;
  std::vector<std::pair<std::string, std::string>> quantities;
  std::vector<std::pair<std::string, PPoint>> points;

  bool verdict() const {
    for (const auto& s : steps)
      if (!s.holds()) return false;
    return !conclusion || conclusion->holds();
  }
  std::size_t count(const std::string& kind) const {
    std::size_t n = 0;
    for (const auto& s : steps) n += s.kind == kind;
    return n;
  }
};

/// Triangle a, b, c cut by a tronc; node Ni is where ray ri meets the tronc,
/// with r1 = bc, r2 = ca, r3 = ab.
class SectorFigure {
 public:
  SectorFigure(const PLine& tronc, const std::array<PLine, 3>& rays) : tronc_(tronc), rays_(rays) {
    for (int i = 0; i < 3; ++i) {
      if (rays[i] == tronc) throw DegenerateError("ray r" + std::to_string(i + 1) + " equals the tronc");
      for (int j = i + 1; j < 3; ++j)
        if (rays[i] == rays[j])
          throw DegenerateError("rays r" + std::to_string(i + 1) + " and r" + std::to_string(j + 1) + " coincide");
      nodes_[i] = meet(rays[i], tronc);
    }
    a_ = meet(rays[1], rays[2]);
    b_ = meet(rays[0], rays[2]);
    c_ = meet(rays[0], rays[1]);
    if (a_ == b_ || b_ == c_ || a_ == c_) throw DegenerateError("rays are concurrent");
    for (const auto& [name, v] : {std::pair{"a", a_}, std::pair{"b", b_}, std::pair{"c", c_}})
      if (tronc.contains(v)) throw DegenerateError(std::string("vertex ") + name + " lies on the tronc");
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (nodes_[i] == nodes_[j]) throw DegenerateError("nodes coincide");
  }
  static SectorFigure from_triangle(const PPoint& a, const PPoint& b, const PPoint& c, const PLine& tronc) {
    return SectorFigure(tronc, {join(b, c), join(c, a), join(a, b)});
  }

  const PLine& tronc() const { return tronc_; }
  const std::array<PLine, 3>& rays() const { return rays_; }
  const std::array<PPoint, 3>& nodes() const { return nodes_; }
  /// Vertices a, b, c by index 0, 1, 2.
  const PPoint& vertex(int i) const { return i == 0 ? a_ : (i == 1 ? b_ : c_); }
  const PPoint& node(int i) const { return nodes_[i]; }

  /// Ratio anchored at node i with named vertex endpoints.
  Ratio ratio(int node_index, int num_vertex, int den_vertex) const {
    static const char* vn[] = {"a", "b", "c"};
    return {"N" + std::to_string(node_index + 1), vn[num_vertex], vn[den_vertex], nodes_[node_index],
            vertex(num_vertex), vertex(den_vertex)};
  }

 private:
  PLine tronc_;
  std::array<PLine, 3> rays_;
  std::array<PPoint, 3> nodes_;
  PPoint a_, b_, c_;
};

inline RatioChain menelaus_chain(const SectorFigure& sf) {
  return {{sf.ratio(0, 1, 2), sf.ratio(1, 2, 0), sf.ratio(2, 0, 1)}};
}

/// Ratio(N1;b,c) * Ratio(N2;c,a) * Ratio(N3;a,b); equal to 1 by the theorem.
inline Rat menelaus_product(const SectorFigure& sf) { return menelaus_chain(sf).value(); }

/// The same product with the classical cyclic segment convention
/// (b->N1)/(N1->c) * (c->N2)/(N2->a) * (a->N3)/(N3->b), which equals -1.
inline Rat menelaus_classical(const SectorFigure& sf) {
  Rat v(1);
  for (const Ratio& r : menelaus_chain(sf).factors) {
    const auto o = r.origin.to_affine();
    v *= vector_ratio(r.num.to_affine(), o, o, r.den.to_affine());
  }
  return v;
}

struct Decomposition {
  Ratio lhs;
  RatioChain rhs;
  Rat lhs_value;
  Rat rhs_value;
  bool holds() const { return lhs_value == rhs_value; }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

/// Writes the ratio at node i as a product of ratios at the two other nodes,
/// inserting the missing vertex: for i = 1, N1b/N1c = (N3b/N3a)(N2a/N2c).
/// With inverted = true the ratio N1c/N1b is decomposed instead.
inline Decomposition decompose_ratio(const SectorFigure& sf, int node_index, bool inverted = false) {
  if (node_index < 0 || node_index > 2) throw DomainError("node index must be 0, 1 or 2");
  const int i = node_index;
  const int j = (i + 1) % 3;
  const int k = (i + 2) % 3;
  // node i's ray carries vertices j and k (a=0, b=1, c=2)
  Ratio lhs = sf.ratio(i, j, k);
  RatioChain rhs{{sf.ratio(k, j, i), sf.ratio(j, i, k)}};
  if (inverted) {
    lhs = lhs.inverted();
    rhs = RatioChain{{sf.ratio(j, k, i), sf.ratio(k, i, j)}};
  }
  return {lhs, rhs, lhs.value(), rhs.value()};
}

namespace detail {

struct Figure {
  std::map<std::string, PPoint> pts;
  std::vector<std::pair<std::string, PPoint>> order;

  void add(const std::string& name, const PPoint& p) {
    pts[name] = p;
    order.emplace_back(name, p);
  }
  const PPoint& at(const std::string& name) const { return pts.at(name); }
  Ratio r(const std::string& o, const std::string& n, const std::string& d) const {
    return {o, n, d, at(o), at(n), at(d)};
  }
  Rat v(const std::string& o, const std::string& n, const std::string& d) const { return r(o, n, d).value(); }
  void require_finite(const std::string& name) const {
    if (at(name).is_infinite()) throw DegenerateError("point " + name + " is at infinity");
  }
};

/// meet that names the failing incidence.
inline PPoint meet_named(const PLine& l, const PLine& m, const std::string& what) {
  if (l == m) throw DegenerateError(what + " is undefined (lines coincide)");
  const PPoint p = meet(l, m);
  if (p.is_infinite()) throw DegenerateError(what + " is at infinity");
  return p;
}

inline std::string step_text(const Ratio& lhs, const RatioChain& rhs) {
  return lhs.str() + " = " + rhs.str();
}

}  // namespace detail

/// Replays the ramee proof: two series of four Menelaus applications through
/// the intermediate line Df, then the aggregated identities with the factor
/// alpha = (Kd/KD)^2 (KF/Kf)^2 and the involution conclusion on delta.
/// When delta passes through D the intermediate line is delta itself and the
/// trace has one series of four plus the aggregations.
inline ProofTrace replay_ramee_proof(const NodeCouples& nc, const PPoint& K, const AffineChart& delta) {
  if (K.is_infinite()) throw DegenerateError("center K is at infinity (parallel rameaux): no Menelaus replay");
  if (nc.chart.contains(K)) throw DegenerateError("center K lies on the tronc");
  if (delta.contains(K)) throw DegenerateError("center K lies on the image line");
  for (const auto& [x, y] : nc.pairs)
    if (x.is_infinite() || y.is_infinite()) throw DegenerateError("a node of the arbre is at infinity");
  detail::Figure f;
  const char* big[] = {"B", "H", "C", "G", "D", "F"};
  const char* small[] = {"b", "h", "c", "g", "d", "f"};
  f.add("K", K);
  for (int i = 0; i < 6; ++i) {
    const Param& t = i % 2 == 0 ? nc.pairs[i / 2].first : nc.pairs[i / 2].second;
    f.add(big[i], nc.chart.point_at(t));
  }
  for (int i = 0; i < 6; ++i)
    f.add(small[i], detail::meet_named(join(K, f.at(big[i])), delta.line(), std::string("image ") + small[i]));

  ProofTrace tr;
  const bool shortcut = f.at("d") == f.at("D");
  auto menelaus = [&](const std::string& label, const Ratio& lhs, const RatioChain& rhs, const std::string& cite) {
    tr.steps.push_back({label, detail::step_text(lhs, rhs), cite, "menelaus", lhs.value(), rhs.value()});
  };

  if (!shortcut) {
    tr.name = "ramee";
    if (f.at("D") == f.at("f")) throw DegenerateError("intermediate line Df is undefined (D = f)");
    const PLine Df = join(f.at("D"), f.at("f"));
    const char* via[] = {"B", "C", "G", "H"};
    const char* num[] = {"2", "3", "4", "5"};
    for (int i = 0; i < 4; ++i)
      f.add(num[i], detail::meet_named(join(K, f.at(via[i])), Df, std::string("point ") + num[i] + " on Df"));
    const std::pair<const char*, const char*> series1[] = {{"g", "4"}, {"c", "3"}, {"b", "2"}, {"h", "5"}};
    int n = 1;
    for (const auto& [x, m] : series1)
      menelaus("series 1." + std::to_string(n++), f.r(x, "d", "f"), RatioChain{{f.r("K", "d", "D"), f.r(m, "D", "f")}},
               "p.11 l.38");
    const std::pair<const char*, const char*> series2[] = {{"4", "G"}, {"3", "C"}, {"2", "B"}, {"5", "H"}};
    n = 1;
    for (const auto& [m, X] : series2)
      menelaus("series 2." + std::to_string(n++), f.r(m, "D", "f"), RatioChain{{f.r(X, "D", "F"), f.r("K", "F", "f")}},
               "p.11 l.45");
    const Rat alpha = pow2(f.v("K", "d", "D")) * pow2(f.v("K", "F", "f"));
    tr.quantities.emplace_back("alpha", alpha.str());
    const Rat dgc = f.v("g", "d", "f") * f.v("c", "d", "f");
    const Rat dbh = f.v("b", "d", "f") * f.v("h", "d", "f");
    tr.steps.push_back({"aggregate g,c", "dg.dc/(fg.fc) = alpha DG.DC/(FG.FC)", "p.12 l.7", "aggregation", dgc,
                        alpha * f.v("G", "D", "F") * f.v("C", "D", "F")});
    tr.steps.push_back({"aggregate b,h", "db.dh/(fb.fh) = alpha DB.DH/(FB.FH)", "p.12 l.11", "aggregation", dbh,
                        alpha * f.v("B", "D", "F") * f.v("H", "D", "F")});
    tr.steps.push_back({"conclusion", "db.dh/(fb.fh) = dg.dc/(fg.fc): df, cg, bh in involution", "p.12 l.26",
                        "aggregation", dbh, dgc});
  } else {
    tr.name = "ramee-shortcut";
    // delta through D: the images of B, C, G, H are the points 2, 3, 4, 5
    const std::pair<const char*, const char*> renames[] = {{"2", "b"}, {"3", "c"}, {"4", "g"}, {"5", "h"}};
    for (const auto& [m, x] : renames) f.add(m, f.at(x));
    const std::pair<const char*, const char*> series2[] = {{"4", "G"}, {"3", "C"}, {"2", "B"}, {"5", "H"}};
    int n = 1;
    for (const auto& [m, X] : series2)
      menelaus("series 2." + std::to_string(n++), f.r(m, "D", "f"), RatioChain{{f.r(X, "D", "F"), f.r("K", "F", "f")}},
               "p.11 l.45");
    const Rat k2 = pow2(f.v("K", "F", "f"));
    tr.quantities.emplace_back("(KF/Kf)^2", k2.str());
    const Rat p25 = f.v("2", "D", "f") * f.v("5", "D", "f");
    const Rat p34 = f.v("3", "D", "f") * f.v("4", "D", "f");
    tr.steps.push_back({"aggregate 2,5", "D2.D5/(f2.f5) = (KF/Kf)^2 DB.DH/(FB.FH)", "p.12 l.11", "aggregation", p25,
                        k2 * f.v("B", "D", "F") * f.v("H", "D", "F")});
    tr.steps.push_back({"aggregate 3,4", "D3.D4/(f3.f4) = (KF/Kf)^2 DC.DG/(FC.FG)", "p.12 l.11", "aggregation", p34,
                        k2 * f.v("C", "D", "F") * f.v("G", "D", "F")});
    tr.steps.push_back({"conclusion", "D2.D5/(f2.f5) = D3.D4/(f3.f4): (D,f), (2,5), (3,4) in involution", "p.12 l.26",
                        "aggregation", p25, p34});
  }
  tr.points = f.order;
  return tr;
}

/// Replays the quadrangle proof with pivot F: four Menelaus applications
/// XQ/XP = (aQ/aF)(bF/bP) for (X; a, b) in (I; C, B), (K; D, E), (G; D, B),
/// (H; C, E), then the two aggregated products.
inline ProofTrace replay_quadrangle_proof(const QuadrangleConfig& q) {
  detail::Figure f;
  for (const auto& [name, p] : q.named_points()) f.add(name, p);
  for (const char* name : {"B", "C", "D", "E", "F", "I", "K", "P", "Q", "G", "H"}) f.require_finite(name);
  ProofTrace tr;
  tr.name = "quadrangle";
  const std::array<std::array<const char*, 3>, 4> uses{
      {{"I", "C", "B"}, {"K", "D", "E"}, {"G", "D", "B"}, {"H", "C", "E"}}};
  const char* cites[] = {"p.17 l.7", "p.17 l.9", "p.17 l.16", "p.17 l.18"};
  int n = 0;
  for (const auto& [X, a, b] : uses) {
    const Ratio lhs = f.r(X, "Q", "P");
    const RatioChain rhs{{f.r(a, "Q", "F"), f.r(b, "F", "P")}};
    tr.steps.push_back({std::string("Menelaus at ") + X, detail::step_text(lhs, rhs), cites[n++], "menelaus",
                        lhs.value(), rhs.value()});
  }
  const Rat cqf = f.v("C", "Q", "F"), bfp = f.v("B", "F", "P"), dqf = f.v("D", "Q", "F"), efp = f.v("E", "F", "P");
  tr.steps.push_back({"aggregate I,K", "(IQ/IP)(KQ/KP) = (CQ/CF)(BF/BP)(DQ/DF)(EF/EP)", "p.17 l.11", "aggregation",
                      f.v("I", "Q", "P") * f.v("K", "Q", "P"), cqf * bfp * dqf * efp});
  tr.steps.push_back({"aggregate G,H", "(GQ/GP)(HQ/HP) = (DQ/DF)(BF/BP)(CQ/CF)(EF/EP)", "p.17 l.20", "aggregation",
                      f.v("G", "Q", "P") * f.v("H", "Q", "P"), dqf * bfp * cqf * efp});
  tr.conclusion = ProofStep{"conclusion", "QI.QK/(PI.PK) = QG.QH/(PG.PH)", "p.17 l.24", "aggregation",
                            f.v("I", "Q", "P") * f.v("K", "Q", "P"), f.v("G", "Q", "P") * f.v("H", "Q", "P")};
  tr.points = f.order;
  return tr;
}

}  // namespace arguesia
