#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "covlie/basis.hpp"

namespace covlie {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string name;
  Json params = Json::object();
  bool pass = true;
  Json witness;  // null unless the check failed

  Json to_json() const;
};

/// Result of one verification suite. Record order is deterministic and
/// independent of how many workers produced the records.
struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  std::size_t fail_count() const;
  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void add(const std::string& name, bool pass, Json params = Json::object(),
           Json witness = Json());
  void append(const Report& other);  // absorbs records, keeps this suite name

  Json to_json() const;
};

Json element_json(const Element& e);
Json pair_json(const BasisId& a, const BasisId& b);

}  // namespace covlie
