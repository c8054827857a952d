#include "covlie/report.hpp"

namespace covlie {

Json CheckRecord::to_json() const {
  Json j;
  j["name"] = name;
  j["params"] = params;
  j["status"] = pass ? "pass" : "fail";
  j["witness"] = witness.is_null() ? Json() : witness;
  return j;
}

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::size_t Report::fail_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void Report::add(const std::string& name, bool pass, Json params, Json witness) {
  checks.push_back(CheckRecord{name, std::move(params), pass, std::move(witness)});
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  j["checks"] = std::move(arr);
  return j;
}

Json element_json(const Element& e) {
  Json arr = Json::array();
  for (const auto& [id, c] : e.terms()) {
    Json t = Json::array();
    t.push_back(id.str());
    t.push_back(c.str());
    arr.push_back(std::move(t));
  }
  return arr;
}

Json pair_json(const BasisId& a, const BasisId& b) {
  Json j = Json::array();
  j.push_back(a.str());
  j.push_back(b.str());
  return j;
}

}  // namespace covlie
