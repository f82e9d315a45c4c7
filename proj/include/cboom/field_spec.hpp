#pragma once

// Field configuration in two forms:
//   key-value:  "p=3,n=2"  or  "p=3,n=2,modulus=[2,2,1],generator=3"
//   document:   {"p": 3, "n": 2, "modulus": [2, 2, 1], "generator": 3}
// When the modulus is omitted, default_modulus() must know (p, n).

#include <cctype>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cboom/field.hpp"

namespace cboom {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::uint32_t parse_uint(std::string_view key, const std::string& v) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw FieldError("field spec key '" + std::string(key) + "' expects a nonnegative integer, got '" + v + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(v));
}

inline FieldSpec complete_spec(std::optional<std::uint32_t> p, std::optional<std::uint32_t> n,
                               std::optional<std::vector<std::uint32_t>> modulus,
                               std::optional<std::uint32_t> generator) {
  if (!p || !n) throw FieldError("field spec must name both p and n");
  if (!is_prime(*p)) throw FieldError("p = " + std::to_string(*p) + " is not prime");
  FieldSpec spec{*p, *n, {}, generator};
  if (modulus) {
    spec.modulus = std::move(*modulus);
  } else if (auto m = default_modulus(*p, *n)) {
    spec.modulus = *m;
  } else {
    throw FieldError("no default modulus for p=" + std::to_string(*p) + ", n=" + std::to_string(*n) +
                     "; pass one explicitly");
  }
  return spec;
}

}  // namespace detail

inline FieldSpec parse_field_spec_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FieldError("field spec document must be an object");
  std::optional<std::uint32_t> p, n, gen;
  std::optional<std::vector<std::uint32_t>> modulus;
  try {
    if (doc.contains("p")) p = doc.at("p").get<std::uint32_t>();
    if (doc.contains("n")) n = doc.at("n").get<std::uint32_t>();
    if (doc.contains("modulus") && !doc.at("modulus").is_null()) {
      modulus = doc.at("modulus").get<std::vector<std::uint32_t>>();
    }
    if (doc.contains("generator") && !doc.at("generator").is_null()) gen = doc.at("generator").get<std::uint32_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FieldError(std::string("malformed field spec document: ") + e.what());
  }
  return detail::complete_spec(p, n, std::move(modulus), gen);
}

inline FieldSpec parse_field_spec(std::string_view text) {
  const std::string t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw FieldError(std::string("malformed field spec document: ") + e.what());
    }
    return parse_field_spec_json(doc);
  }

  std::optional<std::uint32_t> p, n, gen;
  std::optional<std::vector<std::uint32_t>> modulus;
  // Split on commas outside brackets.
  std::size_t depth = 0;
  std::size_t start = 0;
  auto handle = [&](std::string_view item) {
    const std::string kv = detail::trim(item);
    if (kv.empty()) return;
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw FieldError("field spec item '" + kv + "' is not key=value");
    const std::string key = detail::trim(std::string_view(kv).substr(0, eq));
    std::string val = detail::trim(std::string_view(kv).substr(eq + 1));
    if (key == "p") {
      p = detail::parse_uint(key, val);
    } else if (key == "n") {
      n = detail::parse_uint(key, val);
    } else if (key == "generator") {
      gen = detail::parse_uint(key, val);
    } else if (key == "modulus") {
      if (val.size() >= 2 && val.front() == '[' && val.back() == ']') val = val.substr(1, val.size() - 2);
      std::vector<std::uint32_t> coeffs;
      std::size_t s = 0;
      for (std::size_t i = 0; i <= val.size(); ++i) {
        if (i == val.size() || val[i] == ',' || val[i] == ' ' || val[i] == ':') {
          const std::string tok = detail::trim(std::string_view(val).substr(s, i - s));
          if (!tok.empty()) coeffs.push_back(detail::parse_uint(key, tok));
          s = i + 1;
        }
      }
      modulus = std::move(coeffs);
    } else {
      throw FieldError("unknown field spec key '" + key + "'");
    }
  };
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i < t.size() && t[i] == '[') ++depth;
    if (i < t.size() && t[i] == ']' && depth > 0) --depth;
    if (i == t.size() || (t[i] == ',' && depth == 0)) {
      handle(std::string_view(t).substr(start, i - start));
      start = i + 1;
    }
  }
  return detail::complete_spec(p, n, std::move(modulus), gen);
}

inline nlohmann::json to_json(const FieldSpec& spec) {
  nlohmann::json j;
  j["p"] = spec.p;
  j["n"] = spec.n;
  j["modulus"] = spec.modulus;
  if (spec.generator) j["generator"] = *spec.generator;
  return j;
}

inline std::shared_ptr<const Field> make_field(std::string_view text) {
  return std::make_shared<const Field>(parse_field_spec(text));
}

inline std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t n) {
  return std::make_shared<const Field>(detail::complete_spec(p, n, std::nullopt, std::nullopt));
}

}  // namespace cboom
