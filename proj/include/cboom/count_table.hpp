#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cboom/field.hpp"
#include "cboom/field_spec.hpp"
#include "cboom/text.hpp"

namespace cboom {

enum class TableKind { ddt, bct };

inline const char* to_string(TableKind k) { return k == TableKind::ddt ? "DDT" : "BCT"; }

/// p^n x p^n table of counts, rows indexed by a and columns by b.
class CountTable {
 public:
  CountTable(TableKind kind, std::shared_ptr<const Field> field, Element c, std::string label)
      : kind_(kind), field_(std::move(field)), c_(c), label_(std::move(label)),
        q_(field_->order()), entries_(std::size_t{q_} * q_, 0) {}

  TableKind kind() const { return kind_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  Element c() const { return c_; }
  const std::string& label() const { return label_; }
  std::uint32_t size() const { return q_; }

  std::uint32_t at(Element a, Element b) const { return entries_[std::size_t{a.index} * q_ + b.index]; }
  std::uint32_t& at(Element a, Element b) { return entries_[std::size_t{a.index} * q_ + b.index]; }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return entries_[std::size_t{a} * q_ + b]; }
  std::uint32_t& at(std::uint32_t a, std::uint32_t b) { return entries_[std::size_t{a} * q_ + b]; }

  const std::vector<std::uint32_t>& entries() const { return entries_; }
  std::vector<std::uint32_t>& entries() { return entries_; }

  std::uint64_t row_sum(std::uint32_t a) const {
    std::uint64_t s = 0;
    for (std::uint32_t b = 0; b < q_; ++b) s += at(a, b);
    return s;
  }

  friend bool operator==(const CountTable& x, const CountTable& y) {
    return x.kind_ == y.kind_ && *x.field_ == *y.field_ && x.c_ == y.c_ && x.entries_ == y.entries_;
  }

 private:
  TableKind kind_;
  std::shared_ptr<const Field> field_;
  Element c_;
  std::string label_;
  std::uint32_t q_;
  std::vector<std::uint32_t> entries_;
};

inline nlohmann::json to_json(const CountTable& t) {
  nlohmann::json j;
  j["kind"] = to_string(t.kind());
  j["c"] = format_element(t.field(), t.c());
  j["function"] = t.label();
  j["field"] = to_json(t.field().spec());
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t b = 0; b < t.size(); ++b) row.push_back(t.at(a, b));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

/// One line per row a; columns are b in index order.
inline std::string to_csv(const CountTable& t) {
  std::ostringstream out;
  out << "a";
  for (std::uint32_t b = 0; b < t.size(); ++b) out << "," << b;
  out << "\n";
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    out << a;
    for (std::uint32_t b = 0; b < t.size(); ++b) out << "," << t.at(a, b);
    out << "\n";
  }
  return out.str();
}

}  // namespace cboom
