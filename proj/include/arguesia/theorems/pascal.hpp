#pragma once

// Pascal's hexagram lemma for a hexagon P, K, V, O, N, Q on a conic, with the
// Menelaus/Euclid replay in the circle case.

#include <string>

#include "arguesia/conics.hpp"
#include "arguesia/report.hpp"

namespace arguesia {

struct PascalResult {
  TheoremReport report;
  PPoint M, S, X;
  PLine pascal_line;
};

/// M = PK meet VO, S = NK meet VQ, X = NO meet PQ are collinear.
inline PascalResult pascal_collinear(const Conic& conic, const std::array<PPoint, 6>& hexagon) {
  static const char* names[] = {"P", "K", "V", "O", "N", "Q"};
  TheoremReport rep;
  rep.name = "pascal";
  detail::Figure fig;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < i; ++j)
      if (hexagon[i] == hexagon[j])
        throw DegenerateError(std::string("hexagon vertices ") + names[j] + " and " + names[i] + " coincide");
    if (!conic.contains(hexagon[i])) throw DegenerateError(std::string("vertex ") + names[i] + " is not on the conic");
    fig.add(names[i], hexagon[i]);
    rep.input(names[i], hexagon[i]);
  }
  if (conic.is_degenerate()) throw DegenerateError("Pascal needs a nondegenerate conic");
  const PPoint &P = hexagon[0], &K = hexagon[1], &V = hexagon[2], &O = hexagon[3], &N = hexagon[4], &Q = hexagon[5];
  const PPoint M = meet(join(P, K), join(V, O));
  const PPoint S = meet(join(N, K), join(V, Q));
  const PPoint X = meet(join(N, O), join(P, Q));
  rep.input("M", M);
  rep.input("S", S);
  rep.input("X", X);
  rep.claim("det(M, S, X) = 0", det3<Rat>({M.coords(), S.coords(), X.coords()}), Rat(0));
  if (M == S) throw DegenerateError("M = S: the Pascal line is undefined");
  const PLine line = join(M, S);

  if (!conic.is_circle()) {
    rep.note("not a circle: only the projective statement is checked");
    return {rep, M, S, X, line};
  }
  try {
    fig.add("M", M);
    fig.add("S", S);
    fig.add("X", X);
    fig.add("alpha", detail::meet_named(join(N, O), join(P, K), "alpha = NO meet PK"));
    fig.add("beta", detail::meet_named(join(N, O), join(Q, V), "beta = NO meet QV"));
    fig.add("A", detail::meet_named(join(P, K), join(Q, V), "A = PK meet QV"));
    for (const char* n : {"M", "S"}) fig.require_finite(n);
    auto pt = [&](const std::string& n) { return fig.at(n).to_affine(); };
    const auto p = pt("P"), k = pt("K"), v = pt("V"), o = pt("O"), n = pt("N"), q = pt("Q"), m = pt("M"), s = pt("S"),
               al = pt("alpha"), be = pt("beta"), a = pt("A");
    ProofTrace tr;
    tr.name = "pascal";
    auto step = [&](const std::string& label, const std::string& claim, const std::string& cite,
                    const std::string& kind, const Rat& l, const Rat& r) {
      tr.steps.push_back({label, claim, cite, kind, l, r});
    };
    step("Menelaus at M", "MA/Malpha = (VA/Vbeta)(Obeta/Oalpha)", "Lemme I", "menelaus", signed_ratio(m, a, al),
         signed_ratio(v, a, be) * signed_ratio(o, be, al));
    step("Menelaus at S", "SA/Sbeta = (KA/Kalpha)(Nalpha/Nbeta)", "Lemme I", "menelaus", signed_ratio(s, a, be),
         signed_ratio(k, a, al) * signed_ratio(n, al, be));
    step("power of alpha", "Kalpha.Palpha = Nalpha.Oalpha", "Euclid III.35-36", "euclid", rect(al, k, p),
         rect(al, n, o));
    step("power of beta", "Nbeta.Obeta = Vbeta.Qbeta", "Euclid III.35-36", "euclid", rect(be, n, o), rect(be, v, q));
    step("power of A", "AP.AK = AQ.AV", "Euclid III.35-36", "euclid", rect(a, p, k), rect(a, q, v));
    step("substitution at alpha", "(Palpha/PA)(Kalpha/KA) = Nalpha.Oalpha/(AQ.AV)", "Lemme I", "euclid",
         signed_ratio(p, al, a) * signed_ratio(k, al, a), rect(al, n, o) / rect(a, q, v));
    step("substitution at beta", "(Qbeta/QA)(Vbeta/VA) = Nbeta.Obeta/(AP.AK)", "Lemme I", "euclid",
         signed_ratio(q, be, a) * signed_ratio(v, be, a), rect(be, n, o) / rect(a, p, k));
    // unsigned magnitudes, compared through squared lengths
    const Rat common = sq_dist(o, be) * sq_dist(n, al) / (sq_dist(k, al) * sq_dist(v, be));
    step("magnitudes at M (squared)", "(AM/alphaM)(alphaP/AP) = (KA/QA)(Obeta.Nalpha)/(Kalpha.Vbeta)", "Lemme I",
         "euclid", sq_dist(a, m) / sq_dist(al, m) * sq_dist(al, p) / sq_dist(a, p),
         sq_dist(k, a) / sq_dist(q, a) * common);
    step("magnitudes at S (squared)", "(AS/betaS)(betaQ/AQ) = (VA/PA)(Obeta.Nalpha)/(Kalpha.Vbeta)", "Lemme I",
         "euclid", sq_dist(a, s) / sq_dist(be, s) * sq_dist(be, q) / sq_dist(a, q),
         sq_dist(v, a) / sq_dist(p, a) * common);
    const Param cr1 = cross_ratio(fig.at("A"), fig.at("alpha"), M, P);
    const Param cr2 = cross_ratio(fig.at("A"), fig.at("beta"), S, Q);
    if (cr1.is_infinite() || cr2.is_infinite()) throw DegenerateError("cross ratio at infinity");
    step("Pappus criterion", "[A,alpha,M,P] = [A,beta,S,Q]", "Pappus, Collection", "pappus", cr1.value(), cr2.value());
    tr.conclusion = ProofStep{"collinear", "X, M, S aligned", "Lemme I", "pappus",
                              det3<Rat>({M.coords(), S.coords(), X.coords()}), Rat(0)};
    tr.points = fig.order;
    rep.trace = tr;
  } catch (const DegenerateError& e) {
    rep.note(std::string("circle replay not applicable: ") + e.what());
  }
  return {rep, M, S, X, line};
}

/// Pascal on the image of the figure under the collineation p -> h p.
inline PascalResult pascal_under_collineation(const Conic& conic, const std::array<PPoint, 6>& hexagon,
                                              const Mat3& h) {
  if (det3(h).is_zero()) throw DegenerateError("singular collineation");
  std::array<PPoint, 6> image = hexagon;
  for (auto& p : image) p = PPoint(mat_vec(h, p.coords()));
  PascalResult r = pascal_collinear(conic.transformed(h), image);
  r.report.name = "pascal-collineation";
  return r;
}

}  // namespace arguesia
