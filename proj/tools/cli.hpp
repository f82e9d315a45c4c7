#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cboom/cboom.hpp"

namespace cboom::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string field, modulus;
  std::optional<std::uint32_t> p, n, k, generator;
  std::optional<std::uint64_t> d;
  std::optional<std::string> u;
  std::string func, family;
  std::string c = "all";
  std::vector<std::string> exclude;
  std::string format = "json";
  std::string tier = "fast";
  bool oracle = false;
  std::optional<unsigned> workers;

  std::string theorem, mu_form = "as_stated", reading3 = "as_stated";
  std::string expect, reading = "full";
  bool include_zero_ab = false, progress = false, no_table = false;
  std::optional<unsigned> j_max;
};

// Jobs above this need --tier slow.
inline constexpr double kFastTierOps = 1e9;

namespace detail {

inline std::shared_ptr<const Field> resolve_field(const Options& o) {
  if (!o.field.empty()) return make_field(o.field);
  if (!o.p || !o.n) throw UsageError("give --p and --n, or --field");
  std::string spec = "p=" + std::to_string(*o.p) + ",n=" + std::to_string(*o.n);
  if (!o.modulus.empty()) spec += ",modulus=[" + o.modulus + "]";
  if (o.generator) spec += ",generator=" + std::to_string(*o.generator);
  return make_field(spec);
}

inline FunctionTable resolve_function(const std::shared_ptr<const Field>& field, const Options& o) {
  if (!o.func.empty() && !o.family.empty()) throw UsageError("give either --func or --family, not both");
  if (!o.func.empty()) return tabulate(o.func, field);
  if (!o.family.empty()) return family_function(field, o.family, o.k, o.u);
  throw UsageError("give --func or --family");
}

/// c values in index order. "all" covers every nonzero c (minus `exclude`);
/// otherwise a single literal.
inline std::vector<Element> resolve_c(const Field& f, const Options& o, bool allow_zero, bool allow_one = true) {
  std::vector<Element> out;
  if (o.c == "all") {
    std::set<Element> skip;
    for (const auto& e : o.exclude) skip.insert(parse_element(f, e));
    for (std::uint32_t i = 1; i < f.order(); ++i)
      if (!skip.count(Element{i}) && (allow_one || i != 1)) out.push_back(Element{i});
    return out;
  }
  if (!o.exclude.empty()) throw UsageError("--exclude only applies to --c all");
  const Element c = parse_element(f, o.c);
  if (c.index == 0 && !allow_zero) throw UsageError("c = 0 is not allowed here");
  if (c == f.one() && !allow_one) throw UsageError("c = 1 is not allowed here");
  out.push_back(c);
  return out;
}

inline void check_tier(const Options& o, double ops) {
  if (ops > kFastTierOps && o.tier != "slow") {
    std::ostringstream s;
    s.precision(3);
    s << "estimated " << ops << " operations exceeds the fast tier; pass --tier slow";
    throw UsageError(s.str());
  }
}

inline double cube(double q) { return q * q * q; }

inline nlohmann::json field_doc(const Field& f) {
  const std::uint64_t m = f.order() - 1;
  nlohmann::json proof = nlohmann::json::array();
  for (auto r : cboom::detail::distinct_prime_factors(m)) {
    const Element g = f.pow(f.generator(), static_cast<std::int64_t>(m / r));
    proof.push_back({{"r", r}, {"g^((q-1)/r)", format_element(f, g)}, {"is_one", g == f.one()}});
  }
  return {{"spec", to_json(f.spec())},
          {"order", f.order()},
          {"alpha", format_element(f, f.alpha())},
          {"generator", format_element(f, f.generator())},
          {"generator_order", multiplicative_order(f, f.generator())},
          {"order_proof", {{"q_minus_1", m}, {"checks", proof}}}};
}

inline int cmd_field(const Options& o, std::ostream& out) {
  const auto f = resolve_field(o);
  const auto doc = field_doc(*f);
  if (o.format == "pretty") {
    out << "F_" << f->p() << "^" << f->n() << "  modulus " << doc["spec"]["modulus"].dump() << "\n";
    out << "generator " << doc["generator"].get<std::string>() << " of order " << doc["generator_order"] << "\n";
    for (const auto& c : doc["order_proof"]["checks"])
      out << "  g^(" << doc["order_proof"]["q_minus_1"] << "/" << c["r"] << ") = " << c["g^((q-1)/r)"].get<std::string>() << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return 0;
}

inline int cmd_table(const Options& o, std::ostream& out, TableKind kind) {
  const auto field = resolve_field(o);
  const auto fn = resolve_function(field, o);
  const Field& f = *field;
  const auto cs = resolve_c(f, o, kind == TableKind::ddt);
  const double q = f.order();
  const double per_c = kind == TableKind::ddt ? q * q : o.oracle ? q * cube(q) : cube(q);
  check_tier(o, per_c * static_cast<double>(cs.size()));

  const unsigned workers = o.workers.value_or(default_workers());
  std::vector<std::optional<CountTable>> tables(cs.size());
  parallel_for(cs.size(), kind == TableKind::ddt ? workers : 1, [&](std::size_t i) {
    if (kind == TableKind::ddt) tables[i] = c_ddt(fn, cs[i]);
    else tables[i] = o.oracle ? c_bct_naive(fn, cs[i]) : c_bct_system(fn, cs[i], workers);
  });

  nlohmann::json docs = nlohmann::json::array();
  for (const auto& t : tables) {
    nlohmann::json j = to_json(*t);
    if (kind == TableKind::ddt) j["uniformity"] = c_diff_uniformity(*t);
    else j["uniformity"] = to_json(boomerang_uniformity(*t), f);
    docs.push_back(std::move(j));
  }
  if (o.format == "json") {
    out << nlohmann::json{{"function", fn.label()}, {"field", to_json(f.spec())}, {"tables", docs}}.dump() << "\n";
  } else if (o.format == "csv") {
    for (std::size_t i = 0; i < tables.size(); ++i)
      out << "# c=" << format_element(f, cs[i]) << "\n" << to_csv(*tables[i]);
  } else {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto& u = docs[i]["uniformity"];
      out << to_string(kind) << " " << fn.label() << " c=" << format_element(f, cs[i]) << "  "
          << (kind == TableKind::ddt ? "delta" : "beta") << " = " << (u.is_object() ? u["beta"] : u) << "\n";
    }
  }
  return 0;
}

inline int cmd_walsh(const Options& o, std::ostream& out) {
  const auto field = resolve_field(o);
  const auto fn = resolve_function(field, o);
  const Field& f = *field;
  const auto cs = resolve_c(f, o, false);
  const unsigned j_max = o.j_max.value_or(f.order() <= 27 ? 2 : 1);
  if (j_max < 1 || j_max > 2) throw UsageError("--j-max must be 1 or 2");
  if (j_max == 2 && f.order() > 27) throw UsageError("--j-max 2 needs q <= 27");
  const double q = f.order();
  check_tier(o, cube(q) + static_cast<double>(cs.size()) * (cube(q) + (j_max == 2 ? q * cube(q) : 0)));

  const WalshTable t(fn);
  bool pass = true;
  const auto parseval = parseval_check(t);
  pass = pass && parseval.pass;
  nlohmann::json pivots = nlohmann::json::array(), one_uniform = nlohmann::json::array(),
                 charact = nlohmann::json::array();
  for (Element c : cs) {
    for (unsigned j = 1; j <= j_max; ++j) {
      const auto pc = pivot_check(fn, t, c, j);
      pass = pass && pc.holds();
      pivots.push_back({{"c", format_element(f, c)}, {"j", j}, {"normalized", pc.normalized.str()},
                        {"direct", pc.direct.str()}, {"holds", pc.holds()}});
    }
    if (c == f.one()) continue;
    const auto r = one_uniform_sum(fn, c);
    pass = pass && r.consistent();
    one_uniform.push_back(to_json(r, f, c));
    // The truncated sum is the whole characterization only when deg phi <= j_max.
    if (r.beta >= 1 && r.beta <= j_max) {
      const auto phi = build_phi(r.beta, std::uint64_t{f.order()} * f.order());
      const auto cr = charact_lhs(fn, c, phi, r.beta);
      charact.push_back(to_json(cr, f, c, phi));
    }
  }
  nlohmann::json doc = {{"function", fn.label()},
                        {"field", to_json(f.spec())},
                        {"parseval", to_json(parseval)},
                        {"pivots", pivots},
                        {"one_uniform", one_uniform},
                        {"characterization", charact},
                        {"pass", pass}};
  if (!o.no_table) doc["walsh"] = to_json(t);
  if (o.format == "pretty") {
    out << "walsh " << fn.label() << " over F_" << f.p() << "^" << f.n() << ": parseval "
        << (parseval.pass ? "pass" : "FAIL") << "\n";
    for (const auto& p : pivots)
      out << "  pivot c=" << p["c"].get<std::string>() << " j=" << p["j"] << " " << (p["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
    for (const auto& r : one_uniform)
      out << "  one-uniform c=" << r["c"].get<std::string>() << " sum=" << r["sum"].get<std::string>() << " beta=" << r["beta"]
          << (r["consistent"].get<bool>() ? "" : "  inconsistent") << "\n";
  } else {
    out << doc.dump() << "\n";
  }
  return pass ? 0 : 1;
}

inline MuForm parse_mu_form(const std::string& s) {
  if (s == "as_stated") return MuForm::as_stated;
  if (s == "corrected") return MuForm::corrected;
  if (s == "minus_one") return MuForm::minus_one;
  throw UsageError("unknown --mu-form: " + s);
}

inline Cond3Reading parse_reading3(const std::string& s) {
  if (s == "as_stated") return Cond3Reading::as_stated;
  if (s == "case4") return Cond3Reading::case4;
  if (s == "either") return Cond3Reading::either;
  throw UsageError("unknown --cond3: " + s);
}

inline std::uint32_t need_k(const Options& o) {
  if (!o.k) throw UsageError(o.theorem + " needs --k");
  return *o.k;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto field = resolve_field(o);
  const Field& f = *field;
  const double q = f.order();
  std::vector<TheoremVerdict> verdicts;
  const std::string& th = o.theorem;
  auto each_c = [&](bool allow_one, double per_c, auto&& body) {
    const auto cs = resolve_c(f, o, false, allow_one);
    check_tier(o, per_c * static_cast<double>(cs.size()));
    for (Element c : cs) verdicts.push_back(body(c));
  };
  if (th == "square-bound") {
    each_c(false, q * q, [&](Element c) { return square_bound_check(field, c); });
  } else if (th == "gold-bound") {
    const auto k = need_k(o);
    each_c(false, cube(q), [&](Element c) { return gold_bound_check(field, k, c); });
  } else if (th == "mu-c") {
    const auto k = need_k(o);
    const auto form = parse_mu_form(o.mu_form);
    each_c(false, q * q * 2, [&](Element c) { return mu_c_bound_check(field, k, c, form); });
  } else if (th == "inverse-binary") {
    const auto r = parse_reading3(o.reading3);
    each_c(false, cube(q), [&](Element c) { return inverse_binary_verify(field, c, r); });
  } else if (th == "inverse-odd") {
    each_c(false, cube(q), [&](Element c) { return inverse_odd_verify(field, c); });
  } else if (th == "monomial-shift") {
    if (!o.d) throw UsageError("monomial-shift needs --d");
    each_c(true, cube(q), [&](Element c) { return monomial_shift_check(field, *o.d, c); });
  } else if (th == "inverse-ddt") {
    if (!o.d) throw UsageError("inverse-ddt needs --d");
    each_c(true, cube(q), [&](Element c) { return monomial_inverse_ddt_check(field, *o.d, c); });
  } else if (th == "zero-row") {
    const auto fn = resolve_function(field, o);
    each_c(false, cube(q), [&](Element c) { return zero_row_check(fn, c); });
  } else if (th == "beta-vs-delta") {
    const auto fn = resolve_function(field, o);
    check_tier(o, cube(q));
    verdicts.push_back(beta_minus1_vs_delta(fn));
  } else if (th == "parseval") {
    const auto fn = resolve_function(field, o);
    check_tier(o, cube(q));
    verdicts.push_back(parseval_check(WalshTable(fn)));
  } else if (th == "quadratic-census") {
    check_tier(o, cube(q));
    verdicts.push_back(lemma_quadratic_census(f));
  } else {
    throw UsageError("unknown theorem: " + th);
  }
  bool pass = true;
  for (const auto& v : verdicts) {
    pass = pass && v.pass;
    if (o.format == "pretty") out << (v.pass ? "pass " : "FAIL ") << v.theorem << " " << v.params.dump() << "\n";
    else out << to_json(v).dump() << "\n";
  }
  return pass ? 0 : 1;
}

inline int cmd_atlas(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.family.empty()) throw UsageError("atlas needs --family");
  if (!o.expect.empty() && o.expect != "paper" && o.expect != "appendix")
    throw UsageError("--expect takes paper or appendix");
  const auto& names = atlas_readings();
  if (std::find(names.begin(), names.end(), o.reading) == names.end()) throw UsageError("unknown --reading: " + o.reading);
  const auto field = resolve_field(o);
  const Field& f = *field;
  const auto fn = family_function(field, o.family, o.k, o.u);
  const double q = f.order();
  check_tier(o, (q - 2) * cube(q));
  // Look the fixture up before the long computation.
  const ReferenceFixture* fx = nullptr;
  if (!o.expect.empty()) {
    try {
      fx = &find_fixture(o.family, f.p(), f.n(), o.k, o.u);
    } catch (const FixtureNotFound& e) {
      throw UsageError(e.what());
    }
  }
  AtlasProgress progress;
  if (o.progress) progress = [&err](std::size_t done, std::size_t total) { err << "progress " << done << "/" << total << "\n"; };
  const auto rec = compute_atlas(fn, o.family, o.k, o.u, o.include_zero_ab, o.workers.value_or(default_workers()), progress);

  std::optional<FixtureDiff> diff;
  if (fx) diff = diff_fixture(rec, *fx);
  if (o.format == "json") {
    auto doc = to_json(rec);
    if (diff) {
      doc["diff"] = to_json(*diff);
      doc["diff"]["reading"] = o.reading;
      doc["diff"]["pass"] = diff->pass(o.reading);
    }
    out << doc.dump() << "\n";
  } else if (o.format == "csv") {
    out << to_csv(rec);
  } else {
    out << to_pretty(rec);
  }
  if (diff && o.format != "json") {
    out << "# fixture " << diff->key << " reading " << o.reading << ": " << (diff->pass(o.reading) ? "match" : "MISMATCH")
        << "; matching readings:";
    for (const auto& m : diff->matching()) out << " " << m;
    out << "\n";
  }
  return diff && !diff->pass(o.reading) ? 1 : 0;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Documents go to `out`
/// only once a command has finished; errors are a single line on `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"c-differential and c-boomerang tables over small finite fields", "cboom"};
  app.require_subcommand(1);

  auto add_field = [&](CLI::App* s) {
    s->add_option("--p", o.p, "characteristic");
    s->add_option("--n", o.n, "extension degree");
    s->add_option("--modulus", o.modulus, "modulus coefficients, constant term first, comma separated");
    s->add_option("--generator", o.generator, "primitive element index");
    s->add_option("--field", o.field, "field spec, e.g. \"p=3,n=2\"");
    s->add_option("--format", o.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto add_function = [&](CLI::App* s) {
    s->add_option("--func", o.func, "polynomial expression in x");
    s->add_option("--family", o.family, "inverse, square, gold, half_gold, dob");
    s->add_option("--k", o.k, "family parameter k");
    s->add_option("--u", o.u, "dob parameter u (element literal)");
  };
  auto add_c = [&](CLI::App* s) {
    s->add_option("--c", o.c, "element literal or all");
    s->add_option("--exclude", o.exclude, "literals removed from --c all");
  };
  auto add_run = [&](CLI::App* s) {
    s->add_option("--tier", o.tier, "fast or slow")->check(CLI::IsMember({"fast", "slow"}));
    s->add_option("--workers", o.workers, "worker threads (default CBOOM_WORKERS or all cores)")->check(CLI::PositiveNumber);
  };

  auto* field_cmd = app.add_subcommand("field", "field spec and generator order proof");
  add_field(field_cmd);

  auto* ddt_cmd = app.add_subcommand("ddt", "c-differential tables");
  auto* bct_cmd = app.add_subcommand("bct", "c-boomerang tables");
  for (auto* s : {ddt_cmd, bct_cmd}) {
    add_field(s);
    add_function(s);
    add_c(s);
    add_run(s);
  }
  bct_cmd->add_flag("--oracle", o.oracle, "use the quadruple loop");

  auto* walsh_cmd = app.add_subcommand("walsh", "Walsh transforms and characterization sums");
  add_field(walsh_cmd);
  add_function(walsh_cmd);
  add_c(walsh_cmd);
  add_run(walsh_cmd);
  walsh_cmd->add_option("--j-max", o.j_max, "highest power in the pivot sums (1 or 2)");
  walsh_cmd->add_flag("--no-table", o.no_table, "omit the transform table");

  auto* verify_cmd = app.add_subcommand("verify", "run a theorem verifier");
  verify_cmd->add_option("theorem", o.theorem,
                         "square-bound, gold-bound, mu-c, inverse-binary, inverse-odd, monomial-shift, inverse-ddt, "
                         "zero-row, beta-vs-delta, parseval, quadratic-census")
      ->required();
  add_field(verify_cmd);
  add_function(verify_cmd);
  add_c(verify_cmd);
  add_run(verify_cmd);
  verify_cmd->add_option("--d", o.d, "monomial exponent");
  verify_cmd->add_option("--mu-form", o.mu_form, "as_stated, corrected or minus_one");
  verify_cmd->add_option("--cond3", o.reading3, "as_stated, case4 or either");

  auto* atlas_cmd = app.add_subcommand("atlas", "value sets and witnesses over every c != 0, 1");
  add_field(atlas_cmd);
  add_function(atlas_cmd);
  add_run(atlas_cmd);
  atlas_cmd->add_option("--expect", o.expect, "compare with the embedded fixtures (paper or appendix)");
  atlas_cmd->add_option("--reading", o.reading, "fixture reading that must match: full, full_ddt or row_one");
  atlas_cmd->add_flag("--include-zero-ab", o.include_zero_ab, "also record values over a = 0 or b = 0");
  atlas_cmd->add_flag("--progress", o.progress, "report finished c values on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << "\n";
    return 2;
  }

  std::ostringstream doc;
  int code = 0;
  try {
    if (field_cmd->parsed()) code = detail::cmd_field(o, doc);
    else if (ddt_cmd->parsed()) code = detail::cmd_table(o, doc, TableKind::ddt);
    else if (bct_cmd->parsed()) code = detail::cmd_table(o, doc, TableKind::bct);
    else if (walsh_cmd->parsed()) code = detail::cmd_walsh(o, doc);
    else if (verify_cmd->parsed()) code = detail::cmd_verify(o, doc);
    else code = detail::cmd_atlas(o, doc, err);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << "\n";
    return 2;
  }
  out << doc.str();
  return code;
}

}  // namespace cboom::cli
