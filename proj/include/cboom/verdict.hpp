#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace cboom {

/// Pass/fail report for one theorem instance. Failing cells go into
/// witnesses; passing instances may also carry confirming witnesses.
struct TheoremVerdict {
  explicit TheoremVerdict(std::string id) : theorem(std::move(id)) {}

  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  nlohmann::json witnesses = nlohmann::json::array();
  std::string notes;

  // Keeps the report bounded on large tables.
  static constexpr std::size_t kMaxWitnesses = 16;

  void fail(nlohmann::json witness) {
    pass = false;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }

  void witness(nlohmann::json w) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }

  void note(const std::string& s) {
    if (!notes.empty()) notes += "; ";
    notes += s;
  }
};

inline nlohmann::json to_json(const TheoremVerdict& v) {
  return {{"theorem", v.theorem}, {"params", v.params}, {"pass", v.pass}, {"witnesses", v.witnesses}, {"notes", v.notes}};
}

}  // namespace cboom
