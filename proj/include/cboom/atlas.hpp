#pragma once

// Value sets and (c, b) witness lists of the c-BCT over every c != 0, 1, and
// the comparison against the recorded reference data.

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "cboom/boom_tables.hpp"
#include "cboom/diff_tables.hpp"
#include "cboom/fixture_data.hpp"
#include "cboom/function.hpp"
#include "cboom/parallel.hpp"
#include "cboom/text.hpp"

namespace cboom {

using CbPair = std::pair<Element, Element>;

struct AtlasRecord {
  std::string family;
  std::string label;
  std::shared_ptr<const Field> field;
  std::optional<std::uint32_t> k;
  std::optional<std::string> u;
  bool include_zero_ab = false;

  std::vector<std::uint32_t> value_set;       // positive entries, a, b != 0
  std::vector<std::uint32_t> value_set_all;   // positive entries over all (a, b); only with include_zero_ab
  std::uint32_t global_max = 0;
  std::vector<CbPair> witnesses;       // max_{a != 0} cB(a, b) = global_max
  std::vector<CbPair> witnesses_ddt;   // some a != 0 with cDelta(a, b) = global_max

  // Same quantities restricted to the row a = 1.
  std::vector<std::uint32_t> row_one_value_set;
  std::uint32_t row_one_max = 0;
  std::vector<CbPair> row_one_witnesses;
  double seconds = 0;
};

using AtlasProgress = std::function<void(std::size_t done, std::size_t total)>;

/// Named family over a field: inverse, square, gold (k), half_gold (k), dob (u).
inline FunctionTable family_function(const std::shared_ptr<const Field>& field, const std::string& name,
                                     std::optional<std::uint32_t> k = {}, std::optional<std::string> u = {}) {
  auto need_k = [&] {
    if (!k) throw std::invalid_argument(name + " needs k");
    return *k;
  };
  if (name == "inverse") return family::inverse(field);
  if (name == "square") return family::square(field);
  if (name == "identity") return family::identity(field);
  if (name == "gold") return family::gold(field, need_k());
  if (name == "half_gold") return family::half_gold(field, need_k());
  if (name == "dob") {
    if (!u) throw std::invalid_argument("dob needs u");
    return family::dob(field, parse_element(*field, *u));
  }
  throw std::invalid_argument("unknown family: " + name);
}

namespace detail {

struct AtlasSlice {
  std::set<std::uint32_t> values, values_all;
  std::uint32_t max = 0;
  std::vector<std::uint32_t> row_max;       // max_{a != 0} cB(a, b), per b
  std::vector<std::uint32_t> ddt_row_max;   // max_{a != 0} cDelta(a, b), per b
  std::vector<std::uint32_t> row_one;       // cB(1, b)
};

}  // namespace detail

inline AtlasRecord compute_atlas(const FunctionTable& fn, const std::string& family, std::optional<std::uint32_t> k,
                                 std::optional<std::string> u, bool include_zero_ab = false,
                                 unsigned workers = default_workers(), const AtlasProgress& progress = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field& f = fn.field();
  const std::uint32_t q = f.order();
  AtlasRecord rec;
  rec.family = family;
  rec.label = fn.label();
  rec.field = fn.field_ptr();
  rec.k = k;
  rec.u = u;
  rec.include_zero_ab = include_zero_ab;
  if (q <= 2) return rec;

  // Slot i holds c = i + 2.
  std::vector<detail::AtlasSlice> slices(q - 2);
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  parallel_for(slices.size(), workers, [&](std::size_t i) {
    const Element c{static_cast<std::uint32_t>(i + 2)};
    auto& s = slices[i];
    const auto bct = c_bct_system(fn, c);
    const auto ddt = c_ddt(fn, c);
    s.row_max.assign(q, 0);
    s.ddt_row_max.assign(q, 0);
    s.row_one.assign(q, 0);
    for (std::uint32_t b = 0; b < q; ++b) s.row_one[b] = bct.at(1, b);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::uint32_t v = bct.at(a, b);
        if (v > 0 && include_zero_ab) s.values_all.insert(v);
        if (a == 0 || b == 0) continue;
        if (v > 0) s.values.insert(v);
        s.max = std::max(s.max, v);
        s.row_max[b] = std::max(s.row_max[b], v);
        s.ddt_row_max[b] = std::max(s.ddt_row_max[b], ddt.at(a, b));
      }
    }
    if (progress) {
      const std::size_t d = ++done;
      std::lock_guard lock(progress_mutex);
      progress(d, slices.size());
    }
  });

  std::set<std::uint32_t> values, values_all, values_one;
  for (const auto& s : slices) {
    values.insert(s.values.begin(), s.values.end());
    values_all.insert(s.values_all.begin(), s.values_all.end());
    rec.global_max = std::max(rec.global_max, s.max);
    for (std::uint32_t b = 1; b < q; ++b) {
      if (s.row_one[b] > 0) values_one.insert(s.row_one[b]);
      rec.row_one_max = std::max(rec.row_one_max, s.row_one[b]);
    }
  }
  rec.value_set.assign(values.begin(), values.end());
  rec.value_set_all.assign(values_all.begin(), values_all.end());
  rec.row_one_value_set.assign(values_one.begin(), values_one.end());
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Element c{static_cast<std::uint32_t>(i + 2)};
    for (std::uint32_t b = 1; b < q; ++b) {
      if (slices[i].row_max[b] == rec.global_max) rec.witnesses.emplace_back(c, Element{b});
      if (slices[i].ddt_row_max[b] == rec.global_max) rec.witnesses_ddt.emplace_back(c, Element{b});
      if (slices[i].row_one[b] == rec.row_one_max) rec.row_one_witnesses.emplace_back(c, Element{b});
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline AtlasRecord compute_atlas(const std::shared_ptr<const Field>& field, const std::string& family,
                                 std::optional<std::uint32_t> k = {}, std::optional<std::string> u = {},
                                 bool include_zero_ab = false, unsigned workers = default_workers(),
                                 const AtlasProgress& progress = {}) {
  return compute_atlas(family_function(field, family, k, u), family, k, u, include_zero_ab, workers, progress);
}

// ---------------------------------------------------------------- fixtures

struct ReferenceFixture {
  std::string family;
  std::uint32_t p = 0, n = 0;
  std::optional<std::uint32_t> k;
  std::optional<std::string> u;
  std::string tier = "fast";
  std::vector<std::uint32_t> value_set;
  std::optional<std::uint32_t> beta;
  // (c, b) literals; a missing b matches any b for that c.
  std::optional<std::vector<std::pair<std::string, std::optional<std::string>>>> witnesses;
  std::optional<std::vector<std::string>> witness_c;
  std::optional<std::size_t> witness_pair_count;

  std::string key() const {
    std::string s = family + " p=" + std::to_string(p) + " n=" + std::to_string(n);
    if (k) s += " k=" + std::to_string(*k);
    if (u) s += " u=" + *u;
    return s;
  }
};

inline std::vector<ReferenceFixture> parse_fixtures(const nlohmann::json& doc) {
  std::vector<ReferenceFixture> out;
  for (const auto& r : doc.at("records")) {
    ReferenceFixture fx;
    fx.family = r.at("family").get<std::string>();
    fx.p = r.at("p").get<std::uint32_t>();
    fx.n = r.at("n").get<std::uint32_t>();
    if (r.contains("k")) fx.k = r.at("k").get<std::uint32_t>();
    if (r.contains("u")) fx.u = r.at("u").get<std::string>();
    if (r.contains("tier")) fx.tier = r.at("tier").get<std::string>();
    fx.value_set = r.at("value_set").get<std::vector<std::uint32_t>>();
    if (r.contains("beta")) fx.beta = r.at("beta").get<std::uint32_t>();
    if (r.contains("witnesses")) {
      fx.witnesses.emplace();
      for (const auto& w : r.at("witnesses")) {
        std::optional<std::string> b;
        if (!w.at(1).is_null()) b = w.at(1).get<std::string>();
        fx.witnesses->emplace_back(w.at(0).get<std::string>(), b);
      }
    }
    if (r.contains("witness_c")) fx.witness_c = r.at("witness_c").get<std::vector<std::string>>();
    if (r.contains("witness_pair_count")) fx.witness_pair_count = r.at("witness_pair_count").get<std::size_t>();
    out.push_back(std::move(fx));
  }
  return out;
}

inline const std::vector<ReferenceFixture>& reference_fixtures() {
  static const std::vector<ReferenceFixture> all = parse_fixtures(nlohmann::json::parse(fixtures::kReferenceJson));
  return all;
}

class FixtureNotFound : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const ReferenceFixture& find_fixture(const std::string& family, std::uint32_t p, std::uint32_t n,
                                        std::optional<std::uint32_t> k = {}, std::optional<std::string> u = {}) {
  for (const auto& fx : reference_fixtures()) {
    if (fx.family == family && fx.p == p && fx.n == n && fx.k == k && fx.u == u) return fx;
  }
  ReferenceFixture probe;
  probe.family = family;
  probe.p = p;
  probe.n = n;
  probe.k = k;
  probe.u = u;
  throw FixtureNotFound("no fixture for " + probe.key());
}

struct WitnessDiff {
  bool match = false;
  std::vector<std::string> missing;  // in the fixture, not computed
  std::vector<std::string> extra;    // computed, not in the fixture
};

// Readings compared against a fixture:
//   full      value set and beta over a, b != 0; witnesses by max_a c-BCT entry
//   full_ddt  as full, witnesses by some c-DDT entry equal to beta
//   row_one   everything restricted to a = 1
struct ReadingDiff {
  std::string reading;
  bool value_set_match = false;
  std::vector<std::uint32_t> values_missing, values_extra;
  bool beta_match = true;
  std::uint32_t beta = 0;
  std::optional<WitnessDiff> witnesses;

  bool match() const { return value_set_match && beta_match && (!witnesses || witnesses->match); }
};

struct FixtureDiff {
  std::string key;
  std::vector<ReadingDiff> readings;
  std::optional<bool> value_set_all_match;  // when zero rows were included

  const ReadingDiff& reading(const std::string& name) const {
    for (const auto& r : readings)
      if (r.reading == name) return r;
    throw std::invalid_argument("unknown reading: " + name);
  }
  std::vector<std::string> matching() const {
    std::vector<std::string> out;
    for (const auto& r : readings)
      if (r.match()) out.push_back(r.reading);
    return out;
  }
  bool pass(const std::string& name = "full") const { return reading(name).match(); }
};

inline const std::vector<std::string>& atlas_readings() {
  static const std::vector<std::string> names{"full", "full_ddt", "row_one"};
  return names;
}

namespace detail {

inline std::string pair_text(const Field& f, const CbPair& w) {
  return "(" + format_element(f, w.first) + ", " + format_element(f, w.second) + ")";
}

inline WitnessDiff diff_witnesses(const Field& f, const std::vector<CbPair>& computed, const ReferenceFixture& fx) {
  WitnessDiff d;
  const std::set<CbPair> have(computed.begin(), computed.end());
  if (fx.witness_c) {
    std::set<Element> want_c, have_c;
    for (const auto& s : *fx.witness_c) want_c.insert(parse_element(f, s));
    for (const auto& w : have) have_c.insert(w.first);
    for (Element c : want_c)
      if (!have_c.count(c)) d.missing.push_back(format_element(f, c));
    for (Element c : have_c)
      if (!want_c.count(c)) d.extra.push_back(format_element(f, c));
    const bool count_ok = !fx.witness_pair_count || *fx.witness_pair_count == have.size();
    if (!count_ok) d.extra.push_back("pair count " + std::to_string(have.size()) + " != " + std::to_string(*fx.witness_pair_count));
    d.match = d.missing.empty() && d.extra.empty();
    return d;
  }
  std::set<CbPair> exact;
  std::multiset<Element> wildcard;
  for (const auto& [cs, bs] : *fx.witnesses) {
    const Element c = parse_element(f, cs);
    if (bs) exact.emplace(c, parse_element(f, *bs));
    else wildcard.insert(c);
  }
  for (const auto& w : exact)
    if (!have.count(w)) d.missing.push_back(pair_text(f, w));
  std::map<Element, std::size_t> spare;  // computed pairs not matched exactly, per c
  for (const auto& w : have) {
    if (exact.count(w)) continue;
    if (wildcard.count(w.first)) ++spare[w.first];
    else d.extra.push_back(pair_text(f, w));
  }
  for (Element c : std::set<Element>(wildcard.begin(), wildcard.end())) {
    const std::size_t want = wildcard.count(c), got = spare[c];
    if (got < want) d.missing.push_back("(" + format_element(f, c) + ", *)");
    if (got > want) d.extra.push_back("(" + format_element(f, c) + ", *) x" + std::to_string(got - want));
  }
  d.match = d.missing.empty() && d.extra.empty();
  return d;
}

}  // namespace detail

inline FixtureDiff diff_fixture(const AtlasRecord& rec, const ReferenceFixture& fx) {
  const Field& f = *rec.field;
  if (fx.p != f.p() || fx.n != f.n()) throw std::invalid_argument("fixture " + fx.key() + " does not match the record's field");
  FixtureDiff d;
  d.key = fx.key();
  if (rec.include_zero_ab) d.value_set_all_match = fx.value_set == rec.value_set_all;
  auto one = [&](const std::string& name, const std::vector<std::uint32_t>& values, std::uint32_t beta,
                 const std::vector<CbPair>& witnesses) {
    ReadingDiff r;
    r.reading = name;
    r.beta = beta;
    const std::set<std::uint32_t> want(fx.value_set.begin(), fx.value_set.end());
    const std::set<std::uint32_t> have(values.begin(), values.end());
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(r.values_missing));
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(r.values_extra));
    r.value_set_match = r.values_missing.empty() && r.values_extra.empty();
    if (fx.beta) r.beta_match = *fx.beta == beta;
    if (fx.witnesses || fx.witness_c) r.witnesses = detail::diff_witnesses(f, witnesses, fx);
    d.readings.push_back(std::move(r));
  };
  one("full", rec.value_set, rec.global_max, rec.witnesses);
  one("full_ddt", rec.value_set, rec.global_max, rec.witnesses_ddt);
  one("row_one", rec.row_one_value_set, rec.row_one_max, rec.row_one_witnesses);
  return d;
}

// ---------------------------------------------------------------- export

inline nlohmann::json to_json(const AtlasRecord& rec, bool with_timing = false) {
  const Field& f = *rec.field;
  auto pairs = [&](const std::vector<CbPair>& ws) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [c, b] : ws) out.push_back({format_element(f, c), format_element(f, b)});
    return out;
  };
  nlohmann::json j = {{"family", rec.family},
                      {"function", rec.label},
                      {"field", to_json(f.spec())},
                      {"value_set", rec.value_set},
                      {"global_max", rec.global_max},
                      {"witnesses", pairs(rec.witnesses)},
                      {"witnesses_ddt", pairs(rec.witnesses_ddt)},
                      {"include_zero_ab", rec.include_zero_ab}};
  if (rec.k) j["k"] = *rec.k;
  if (rec.u) j["u"] = *rec.u;
  if (rec.include_zero_ab) j["value_set_all"] = rec.value_set_all;
  j["row_one"] = {{"value_set", rec.row_one_value_set}, {"max", rec.row_one_max}, {"witnesses", pairs(rec.row_one_witnesses)}};
  if (with_timing) j["seconds"] = rec.seconds;
  return j;
}

inline nlohmann::json to_json(const FixtureDiff& d) {
  nlohmann::json j = {{"fixture", d.key}, {"matching", d.matching()}, {"pass", d.pass()}};
  if (d.value_set_all_match) j["value_set_all_match"] = *d.value_set_all_match;
  nlohmann::json rs = nlohmann::json::object();
  for (const auto& r : d.readings) {
    nlohmann::json x = {{"match", r.match()},
                        {"value_set_match", r.value_set_match},
                        {"values_missing", r.values_missing},
                        {"values_extra", r.values_extra},
                        {"beta", r.beta},
                        {"beta_match", r.beta_match}};
    if (r.witnesses)
      x["witnesses"] = {{"match", r.witnesses->match}, {"missing", r.witnesses->missing}, {"extra", r.witnesses->extra}};
    rs[r.reading] = std::move(x);
  }
  j["readings"] = std::move(rs);
  return j;
}

/// One line per witness: c,b. Value set and maximum go in a header comment.
inline std::string to_csv(const AtlasRecord& rec) {
  const Field& f = *rec.field;
  std::ostringstream out;
  out << "# " << rec.label << " p=" << f.p() << " n=" << f.n() << " global_max=" << rec.global_max << " value_set=";
  for (std::size_t i = 0; i < rec.value_set.size(); ++i) out << (i ? ";" : "") << rec.value_set[i];
  out << "\nc,b\n";
  for (const auto& [c, b] : rec.witnesses) out << '"' << format_element(f, c) << "\",\"" << format_element(f, b) << "\"\n";
  return out.str();
}

inline std::string to_pretty(const AtlasRecord& rec) {
  const Field& f = *rec.field;
  std::ostringstream out;
  out << rec.label << " over F_" << f.p() << "^" << f.n() << "\n";
  out << "  values: [";
  for (std::size_t i = 0; i < rec.value_set.size(); ++i) out << (i ? ", " : "") << rec.value_set[i];
  out << "]\n  beta:   " << rec.global_max << "\n  witnesses (" << rec.witnesses.size() << "):";
  for (std::size_t i = 0; i < rec.witnesses.size(); ++i) out << (i % 4 == 0 ? "\n    " : " ") << detail::pair_text(f, rec.witnesses[i]);
  out << "\n";
  return out.str();
}

}  // namespace cboom
