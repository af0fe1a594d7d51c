#pragma once

// Structured results of the theorem verifiers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arguesia/menelaus.hpp"

namespace arguesia {

struct Claim {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  bool metric = false;  // depends on the Euclidean structure, not only on incidence
};

struct TheoremReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Claim> claims;
  std::vector<std::string> notes;
  std::optional<ProofTrace> trace;

  bool verdict() const {
    for (const auto& c : claims)
      if (!c.equal) return false;
    return !trace || trace->verdict();
  }

  void claim(const std::string& label, const Rat& lhs, const Rat& rhs, bool metric = false) {
    claims.push_back({label, lhs.str(), rhs.str(), lhs == rhs, metric});
  }
  void claim(const std::string& label, const QuadExt& lhs, const QuadExt& rhs, bool metric = false) {
    claims.push_back({label, lhs.str(), rhs.str(), lhs == rhs, metric});
  }
  void claim(const std::string& label, const Param& lhs, const Param& rhs, bool metric = false) {
    claims.push_back({label, lhs.str(), rhs.str(), lhs == rhs, metric});
  }
  void claim(const std::string& label, const QParam& lhs, const QParam& rhs, bool metric = false) {
    claims.push_back({label, lhs.str(), rhs.str(), lhs == rhs, metric});
  }
  void claim(const std::string& label, const PPoint& lhs, const PPoint& rhs, bool metric = false) {
    claims.push_back({label, lhs.str(), rhs.str(), lhs == rhs, metric});
  }
  void claim_true(const std::string& label, bool value, bool metric = false) {
    claims.push_back({label, value ? "true" : "false", "true", value, metric});
  }
  void input(const std::string& key, const std::string& value) { inputs.emplace_back(key, value); }
  void input(const std::string& key, const PPoint& p) { inputs.emplace_back(key, p.str()); }
  void note(const std::string& n) { notes.push_back(n); }
};

}  // namespace arguesia
