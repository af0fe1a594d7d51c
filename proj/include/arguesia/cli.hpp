#pragma once

// Command-line surface: verify, replay, construct, figure.
// Exit codes: 0 all verdicts true, 1 some verdict false, 2 usage or config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arguesia/json_io.hpp"
#include "arguesia/svg.hpp"

namespace arguesia {

namespace detail {

inline std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(what + " must be an unsigned 64-bit integer, got '" + s + "'");
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (errno == ERANGE) throw ParseError(what + " is out of range: " + s);
  return v;
}

inline std::uint64_t default_seed() {
  const char* env = std::getenv("ARGUESIA_SEED");
  return env ? parse_u64(env, "ARGUESIA_SEED") : 1;
}

inline std::string step_line(const ProofStep& s) {
  return std::string(s.holds() ? "✓ " : "✗ ") + s.label + ": " + s.claim + " [" + s.citation + "] " +
         s.lhs.str() + (s.holds() ? " = " : " != ") + s.rhs.str();
}

inline std::string report_text(const TheoremReport& r) {
  std::ostringstream os;
  os << r.name << " seed " << r.seed << ": " << (r.verdict() ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.inputs) os << "  input " << k << " = " << v << "\n";
  for (const auto& c : r.claims)
    os << "  " << (c.equal ? "✓ " : "✗ ") << c.label << ": " << c.lhs << (c.equal ? " = " : " != ")
       << c.rhs << (c.metric ? " (metric)" : "") << "\n";
  if (r.trace)
    for (const auto& s : r.trace->steps) os << "  " << step_line(s) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

inline void emit(const std::string& text, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file, std::ios::binary);
  if (!f) throw DomainError("cannot write " + file);
  f << text;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Desargues' involution theorems", "arguesia"};
  app.require_subcommand(1);

  std::string kind, seed_text, out_file, b_text, c_text, d_text;
  std::uint64_t trials = 1;
  std::int64_t bounds = 16;
  bool json = false;

  auto* verify = app.add_subcommand("verify", "run a verifier on seeded random instances");
  verify->add_option("kind", kind, "theorem kind")->required();
  verify->add_option("--seed", seed_text, "first seed (default: ARGUESIA_SEED or 1)");
  verify->add_option("--trials", trials, "number of consecutive seeds")->check(CLI::PositiveNumber);
  verify->add_option("--bounds", bounds, "max numerator/denominator magnitude");
  verify->add_flag("--json", json, "JSON output");
  verify->add_option("-o", out_file, "write the report to FILE");

  auto* replay = app.add_subcommand("replay", "print the replayed proof trace of one instance");
  replay->add_option("kind", kind, "ramee, quadrangle, beaugrand or pascal")->required();
  replay->add_option("--seed", seed_text, "seed (default: ARGUESIA_SEED or 1)");
  replay->add_flag("--json", json, "JSON output");

  auto* construct = app.add_subcommand("construct", "harmonic conjugate on the x axis");
  std::string what;
  construct->add_option("what", what, "harmonic")->required();
  construct->add_option("--b", b_text)->required();
  construct->add_option("--c", c_text)->required();
  construct->add_option("--d", d_text)->required();

  auto* figure = app.add_subcommand("figure", "render an instance as SVG");
  figure->add_option("kind", kind, "theorem kind")->required();
  figure->add_option("--seed", seed_text, "seed (default: ARGUESIA_SEED or 1)");
  figure->add_option("-o", out_file, "SVG file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t seed = seed_text.empty() ? detail::default_seed() : detail::parse_u64(seed_text, "--seed");

    if (verify->parsed()) {
      bool all = true;
      std::string text;
      Json reports = Json::array();
      std::uint64_t passed = 0;
      const std::string k = canonical_kind(kind);
      for (std::uint64_t i = 0; i < trials; ++i) {
        const Instance in = generate_instance({k, seed + i, bounds, 1});
        const bool ok = in.report.verdict();
        all = all && ok;
        passed += ok;
        if (json) {
          reports.push_back(to_json(in.report));
        } else if (trials == 1) {
          text += detail::report_text(in.report);
        } else {
          text += k + " seed " + std::to_string(seed + i) + ": " + (ok ? "PASS" : "FAIL") + " (" +
                  std::to_string(in.report.claims.size()) + " claims" +
                  (in.report.trace ? ", " + std::to_string(in.report.trace->steps.size()) + " steps" : "") + ")\n";
        }
      }
      if (json) {
        const Json j{{"kind", k},         {"seed", seed},   {"trials", trials}, {"bounds", bounds},
                     {"passed", passed}, {"verdict", all}, {"reports", reports}};
        text = j.dump(2) + "\n";
      } else {
        text += k + ": " + std::to_string(passed) + "/" + std::to_string(trials) + " verdict " +
                (all ? "true" : "false") + "\n";
      }
      detail::emit(text, out_file, out);
      return all ? 0 : 1;
    }

    if (replay->parsed()) {
      const std::string k = canonical_kind(kind);
      if (k != "ramee" && k != "quadrangle" && k != "beaugrand" && k != "pascal")
        throw DomainError("replay supports ramee, quadrangle, beaugrand, pascal; got '" + kind + "'");
      const Instance in = generate_instance({k, seed, bounds, 0});
      const ProofTrace& tr = *in.report.trace;
      if (json) {
        out << to_json(tr).dump(2) << "\n";
      } else {
        out << tr.name << " seed " << seed << "\n";
        for (const auto& s : tr.steps) out << detail::step_line(s) << "\n";
        if (tr.conclusion) out << detail::step_line(*tr.conclusion) << "\n";
        out << "verdict " << (tr.verdict() ? "true" : "false") << "\n";
      }
      return tr.verdict() ? 0 : 1;
    }

    if (construct->parsed()) {
      if (what != "harmonic") throw DomainError("construct supports only 'harmonic', got '" + what + "'");
      const PPoint B = PPoint::affine(rat_parse(b_text), 0);
      const PPoint C = PPoint::affine(rat_parse(c_text), 0);
      const PPoint D = PPoint::affine(rat_parse(d_text), 0);
      const PPoint F = harmonic_conjugate(B, C, D);
      out << (F.is_infinite() ? std::string("inf") : F.to_affine().x.str()) << "\n";
      return 0;
    }

    if (figure->parsed()) {
      const Instance in = generate_instance({canonical_kind(kind), seed, bounds, 1});
      detail::emit(render_svg(in.drawing), out_file, out);
      return in.report.verdict() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace arguesia
