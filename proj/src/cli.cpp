#include "montop/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "montop/catalog.hpp"
#include "montop/matrix2.hpp"
#include "montop/msets.hpp"
#include "montop/ore.hpp"
#include "montop/points.hpp"
#include "montop/prime_ideals.hpp"
#include "montop/subtoposes.hpp"
#include "montop/supernatural.hpp"
#include "montop/torus_knot.hpp"

namespace montop::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands{"primes", "ore",    "localize", "subtoposes", "flat-check",
                                         "tensor", "points", "snf",      "tk",         "sn"};

json presentation_json(const MonoidPresentation& p) {
  json rels = json::array();
  for (const auto& r : p.relations()) rels.push_back(p.format(r.lhs) + "=" + p.format(r.rhs));
  return {{"generators", p.generators()}, {"relations", rels}};
}

std::string names_of(const MonoidPresentation& p, const std::vector<Letter>& gens) {
  if (gens.empty()) return "-";
  std::string out;
  for (Letter g : gens) out += (out.empty() ? "" : ",") + p.name(g);
  return out;
}

json names_json(const MonoidPresentation& p, const std::vector<Letter>& gens) {
  json out = json::array();
  for (Letter g : gens) out.push_back(p.name(g));
  return out;
}

std::vector<Letter> zeros_of(const Character& c) {
  std::vector<Letter> out;
  for (Letter g = 0; g < c.rank(); ++g)
    if (!c.value(g)) out.push_back(g);
  return out;
}

std::string bits_or_empty(const Character& c) {
  const std::string s = c.to_string();
  return s.empty() ? "(empty)" : s;
}

std::size_t guard_of(const Invocation& inv) {
  return inv.max_generators.value_or(kDefaultGeneratorGuard);
}

OreBounds ore_bounds(const Invocation& inv) {
  OreBounds b;
  if (inv.pair_len) b.pair_len = *inv.pair_len;
  if (inv.wit_len) b.witness_len = *inv.wit_len;
  return b;
}

json ore_bounds_json(const OreBounds& b) {
  return {{"pair_len", b.pair_len}, {"witness_len", b.witness_len}};
}

void check_rank(const MonoidPresentation& p, const Invocation& inv) {
  if (p.rank() > guard_of(inv))
    throw GuardError("presentation has " + std::to_string(p.rank()) +
                     " generators, above the guard of " + std::to_string(guard_of(inv)));
}

Character character_option(const Invocation& inv, const MonoidPresentation& p, bool required) {
  if (!inv.character) {
    if (required) throw InputError("--char is required");
    return Character::constant(p.rank(), false);
  }
  const Character c = Character::parse(*inv.character, p.rank());
  if (!respects_relations(p, c))
    throw InputError("character " + c.to_string() + " does not respect the relations");
  return c;
}

json witness_json(const MonoidPresentation& p, const OreWitness& w) {
  return {{"m", p.format(w.m)}, {"s", p.format(w.s)}, {"t", p.format(w.t)}, {"n", p.format(w.n)}};
}

json verdict_json(const MonoidPresentation& p, const OreVerdict& v) {
  json out{{"outcome", to_string(v.outcome)},
           {"method", v.method},
           {"certificate", v.certificate},
           {"pairs_checked", v.pairs_checked},
           {"oracle", v.oracle}};
  out["m"] = v.m ? json(p.format(*v.m)) : json(nullptr);
  out["s"] = v.s ? json(p.format(*v.s)) : json(nullptr);
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_json(p, w));
  out["witnesses"] = ws;
  return out;
}

json criterion_json(const CriterionReport& c, const std::function<std::string(std::size_t)>& name,
                    const MonoidPresentation& p) {
  json out{{"status", to_string(c.status)}, {"at_bound", c.at_bound}, {"checked", c.checked},
           {"note", c.note}};
  out["a"] = c.a ? json(name(*c.a)) : json(nullptr);
  out["b"] = c.b ? json(name(*c.b)) : json(nullptr);
  out["m"] = c.m ? json(p.format(*c.m)) : json(nullptr);
  out["n"] = c.n ? json(p.format(*c.n)) : json(nullptr);
  return out;
}

json flatness_json(const FlatnessReport& r, const std::function<std::string(std::size_t)>& name,
                   const MonoidPresentation& p) {
  return {{"f1", criterion_json(r.f1, name, p)},
          {"f2", criterion_json(r.f2, name, p)},
          {"f3", criterion_json(r.f3, name, p)},
          {"flat", to_string(r.flat())}};
}

std::string criterion_line(const char* label, const json& c) {
  std::string s = std::string(label) + ": " + c["status"].get<std::string>();
  if (c["at_bound"].get<bool>()) s += " (up to bound)";
  if (!c["a"].is_null()) {
    s += "  witness " + c["a"].get<std::string>();
    if (!c["b"].is_null()) s += ", " + c["b"].get<std::string>();
  }
  if (!c["m"].is_null()) s += "  m=" + c["m"].get<std::string>() + " n=" + c["n"].get<std::string>();
  return s;
}

std::string flatness_text(const json& f) {
  return "  " + criterion_line("F1", f["f1"]) + "\n  " + criterion_line("F2", f["f2"]) + "\n  " +
         criterion_line("F3", f["f3"]) + "\n  flat: " + f["flat"].get<std::string>() + "\n";
}

// ---------------------------------------------------------------------------

struct Built {
  json input = json::object();
  json parameters = json::object();
  json results = json::object();
  json bounds = json::object();
  std::vector<std::string> operations;
  std::string text;
};

void with_target(Built& b, const Invocation& inv, const MonoidPresentation& p) {
  b.input = {{"target", inv.target}, {"presentation", presentation_json(p)}};
}

MonoidPresentation target_presentation(const Invocation& inv) {
  if (inv.target.empty()) throw InputError(inv.command + " needs a presentation file or builtin name");
  return load_target(inv.target);
}

Built cmd_primes(const Invocation& inv) {
  const auto p = target_presentation(inv);
  Built b;
  with_target(b, inv, p);
  const auto chars = enumerate_prime_ideals(p, guard_of(inv));
  json list = json::array();
  std::ostringstream t;
  t << "prime ideals of " << inv.target << ": " << chars.size() << "\n";
  t << std::left << std::setw(12) << "character" << std::setw(24) << "ideal generators"
    << "complement generators\n";
  for (const auto& c : chars) {
    list.push_back({{"character", c.to_string()},
                    {"ideal_generators", names_json(p, zeros_of(c))},
                    {"complement_generators", names_json(p, c.ones())}});
    t << std::setw(12) << bits_or_empty(c) << std::setw(24) << names_of(p, zeros_of(c))
      << names_of(p, c.ones()) << "\n";
  }
  b.results = {{"count", chars.size()}, {"characters", list}};
  b.bounds = {{"max_generators", guard_of(inv)}};
  b.operations = {"enumerate_prime_ideals"};
  b.text = t.str();
  return b;
}

Built cmd_ore(const Invocation& inv) {
  const auto p = target_presentation(inv);
  check_rank(p, inv);
  Built b;
  with_target(b, inv, p);
  const std::string subset_text = inv.subset.value_or("ALL");
  OreSubset subset = OreSubset::all();
  if (subset_text != "ALL") subset = OreSubset::of(Character::parse(subset_text, p.rank()));
  const OreQuery q{p, subset, ore_bounds(inv)};
  OreVerdict v = is_right_ore(q);
  b.operations = {"is_right_ore"};
  if (v.outcome == OreOutcome::holds && v.witnesses.empty()) {
    v.witnesses = ore_witness_table(q);
    b.operations.push_back("ore_witness_table");
  }
  b.parameters = {{"subset", subset.to_string()}};
  b.results = verdict_json(p, v);
  b.bounds = ore_bounds_json(v.bounds);

  std::ostringstream t;
  t << "right Ore for S generated by " << subset.to_string() << " in " << inv.target << ": "
    << to_string(v.outcome) << " [" << v.method << "]\n";
  if (!v.certificate.empty()) t << "  certificate: " << v.certificate << "\n";
  if (v.m && v.s) t << "  m=" << p.format(*v.m) << " s=" << p.format(*v.s) << "\n";
  t << "  pairs checked: " << v.pairs_checked << "  oracle: " << v.oracle << "\n";
  t << "  bounds: pair_len=" << v.bounds.pair_len << " witness_len=" << v.bounds.witness_len << "\n";
  if (!v.witnesses.empty()) {
    t << "  witnesses (m t = s n): " << v.witnesses.size() << "\n";
    for (const auto& w : v.witnesses)
      t << "    m=" << p.format(w.m) << " s=" << p.format(w.s) << " t=" << p.format(w.t)
        << " n=" << p.format(w.n) << "\n";
  }
  b.text = t.str();
  return b;
}

json units_json(const MonoidPresentation& result, const MonoidPresentation& base,
                const UnitsAudit& u) {
  json gens = json::array();
  for (const auto& g : u.generators)
    gens.push_back({{"generator", base.name(g.generator)},
                    {"inverted", g.inverted},
                    {"inverse", g.inverse ? json(result.format(*g.inverse)) : json(nullptr)}});
  return {{"bound", u.bound},
          {"holds_at_bound", u.holds_at_bound},
          {"exact_oracle", u.exact_oracle},
          {"generators", gens}};
}

Built cmd_localize(const Invocation& inv) {
  const auto p = target_presentation(inv);
  check_rank(p, inv);
  Built b;
  with_target(b, inv, p);
  const Character c = character_option(inv, p, true);
  const auto lp = localization_presentation(p, c);
  const std::size_t bound = inv.bound.value_or(6);
  const auto audit = audit_units(lp, c, bound);
  b.parameters = {{"character", c.to_string()}};
  b.results = {{"inverted", names_json(p, lp.inverted)},
               {"presentation", presentation_json(lp.result)},
               {"units", units_json(lp.result, p, audit)}};
  b.bounds = {{"unit_bound", bound}};
  b.operations = {"localization_presentation", "audit_units"};
  std::ostringstream t;
  t << "localization of " << inv.target << " at character " << bits_or_empty(c) << "\n";
  t << lp.result.to_text();
  t << "units audit (words <= " << bound << "): "
    << (audit.holds_at_bound ? "exactly the inverted generators are units"
                             : "unexpected units found")
    << (audit.exact_oracle ? "" : " [inexact oracle]") << "\n";
  b.text = t.str();
  return b;
}

Built cmd_subtoposes(const Invocation& inv) {
  const auto p = target_presentation(inv);
  Built b;
  with_target(b, inv, p);
  SubtoposBounds sb;
  sb.ore = ore_bounds(inv);
  sb.max_generators = guard_of(inv);
  const auto records = enumerate_monoid_subtoposes(p, sb);
  b.operations = {"enumerate_monoid_subtoposes"};
  json list = json::array();
  std::size_t counts[3] = {0, 0, 0};
  std::ostringstream t;
  t << "subtoposes of monoid type for " << inv.target << "\n";
  t << std::left << std::setw(12) << "character" << std::setw(11) << "status" << std::setw(24)
    << "method" << "localization\n";
  for (const auto& r : records) {
    ++counts[static_cast<int>(r.status)];
    list.push_back({{"character", r.character.to_string()},
                    {"status", to_string(r.status)},
                    {"ore", verdict_json(p, r.ore)},
                    {"localization", presentation_json(r.localization.result)},
                    {"units", units_json(r.localization.result, p, r.units)}});
    t << std::setw(12) << bits_or_empty(r.character) << std::setw(11) << to_string(r.status)
      << std::setw(24) << r.ore.method << "invert " << names_of(p, r.localization.inverted)
      << "\n";
  }
  b.results = {{"records", list},
               {"confirmed", counts[0]},
               {"excluded", counts[1]},
               {"undecided", counts[2]}};
  t << "confirmed " << counts[0] << ", excluded " << counts[1] << ", undecided " << counts[2]
    << "\n";
  b.bounds = {{"ore", ore_bounds_json(sb.ore)},
              {"max_generators", sb.max_generators},
              {"unit_bound", records.empty() ? sb.unit_bound : records.front().units.bound}};

  if (inv.validate) {
    const std::size_t trunc = inv.trunc.value_or(2);
    const auto cv = cross_validate_flatness(records, trunc, inv.search.value_or(0));
    b.operations.push_back("cross_validate_flatness");
    json checks = json::array();
    t << "flatness cross-check (trunc " << cv.trunc_len << ", search " << cv.search_len << ")\n";
    for (const auto& c : cv.checks) {
      const auto& r = records[c.record];
      json entry{{"character", r.character.to_string()}, {"agreement", to_string(c.agreement)}};
      if (c.report) {
        const SymbolicMSet m(r.localization, trunc);
        entry["flatness"] =
            flatness_json(*c.report, [&m](std::size_t e) { return m.name(e); }, p);
      } else {
        entry["flatness"] = nullptr;
      }
      entry["f2_pair"] = c.f2_pair ? json{c.f2_pair->first, c.f2_pair->second} : json(nullptr);
      checks.push_back(entry);
      t << "  " << std::setw(10) << bits_or_empty(r.character) << to_string(c.agreement);
      if (c.report) t << "  flat=" << to_string(c.report->flat());
      if (c.f2_pair) t << "  F2 pair (" << c.f2_pair->first << ", " << c.f2_pair->second << ")";
      t << "\n";
    }
    b.results["flatness"] = {{"checks", checks},
                             {"agreements", cv.agreements},
                             {"disagreements", cv.disagreements},
                             {"undecided", cv.undecided}};
    b.bounds["trunc_len"] = cv.trunc_len;
    b.bounds["search_len"] = cv.search_len;
    t << "agreements " << cv.agreements << ", disagreements " << cv.disagreements
      << ", undecided " << cv.undecided << "\n";
  }
  b.text = t.str();
  return b;
}

Built cmd_flat_check(const Invocation& inv) {
  const auto p = target_presentation(inv);
  check_rank(p, inv);
  Built b;
  with_target(b, inv, p);
  std::ostringstream t;
  if (inv.mset) {
    const auto any = load_mset(p, *inv.mset);
    const auto* left = std::get_if<FiniteLeftMSet>(&any);
    if (!left) throw InputError("flat-check needs a left M-set");
    const std::size_t search = inv.search.value_or(4);
    const auto rep = check_flat(*left, search);
    b.input["mset"] = mset_to_text(*left, false);
    b.results = flatness_json(rep, [left](std::size_t e) { return left->name(e); }, p);
    b.bounds = {{"search_len", rep.search_len}};
    t << "flatness of " << *inv.mset << " over " << inv.target << "\n";
  } else {
    const Character c = character_option(inv, p, false);
    const auto lp = localization_presentation(p, c);
    const std::size_t trunc = inv.trunc.value_or(2);
    const SymbolicMSet m(lp, trunc);
    const auto rep = check_flat(m, inv.search.value_or(2 * trunc));
    b.parameters = {{"character", c.to_string()}};
    b.input["carrier"] = presentation_json(lp.result);
    b.results = flatness_json(rep, [&m](std::size_t e) { return m.name(e); }, p);
    b.results["exact_oracle"] = m.exact();
    b.bounds = {{"trunc_len", rep.trunc_len}, {"search_len", rep.search_len}};
    t << "flatness of the localization at " << bits_or_empty(c) << " as a left M-set (trunc "
      << rep.trunc_len << ", search " << rep.search_len << ")\n";
    b.operations = {"localization_presentation"};
  }
  b.operations.push_back("check_flat");
  b.text = t.str() + flatness_text(b.results);
  return b;
}

Built cmd_tensor(const Invocation& inv) {
  const auto p = target_presentation(inv);
  check_rank(p, inv);
  if (inv.args.size() != 2)
    throw InputError("tensor needs a right M-set file and a left M-set file (or M)");
  Built b;
  with_target(b, inv, p);
  const auto xa = load_mset(p, inv.args[0]);
  const auto* x = std::get_if<FiniteRightMSet>(&xa);
  if (!x) throw InputError(inv.args[0] + " is not a right M-set");
  Partition part;
  std::function<std::string(std::size_t)> aname;
  std::optional<SymbolicMSet> sym;
  std::optional<AnyFiniteMSet> aa;
  if (inv.args[1] == "M") {
    const std::size_t trunc = inv.trunc.value_or(3);
    sym.emplace(p, trunc);
    part = tensor(*x, *sym);
    aname = [&sym](std::size_t e) { return sym->name(e); };
    b.bounds = {{"trunc_len", trunc}};
  } else {
    aa = load_mset(p, inv.args[1]);
    const auto* a = std::get_if<FiniteLeftMSet>(&*aa);
    if (!a) throw InputError(inv.args[1] + " is not a left M-set");
    part = tensor(*x, *a);
    aname = [a](std::size_t e) { return a->name(e); };
  }
  b.input["right"] = inv.args[0];
  b.input["left"] = inv.args[1];
  json classes = json::array();
  std::ostringstream t;
  t << "X (x) A has " << part.class_count << " classes\n";
  for (const auto& cls : part.classes()) {
    json members = json::array();
    std::string line;
    for (auto [xi, ai] : cls) {
      const std::string s = "(" + x->name(xi) + "," + aname(ai) + ")";
      members.push_back(s);
      line += (line.empty() ? "" : " ") + s;
    }
    classes.push_back(members);
    t << "  {" << line << "}\n";
  }
  b.results = {{"class_count", part.class_count}, {"classes", classes}};
  b.operations = {"tensor"};
  b.text = t.str();
  return b;
}

Built cmd_points(const Invocation& inv) {
  Built b;
  std::ostringstream t;
  if (inv.divisors) {
    const auto y = DivisibilityPoset::of_divisors(*inv.divisors);
    const auto ideals = ideal_enumerate(y);
    json list = json::array();
    t << "ideals of the divisors of " << *inv.divisors << ": " << ideals.size() << "\n";
    for (const auto& f : ideals) {
      json names = json::array();
      std::string line;
      for (auto i : f) names.push_back(y.name(i)), line += (line.empty() ? "" : " ") + y.name(i);
      list.push_back(names);
      t << "  {" << line << "}\n";
    }
    b.input = {{"divisors_of", *inv.divisors}};
    b.results = {{"ideal_count", ideals.size()}, {"ideals", list}};
    b.bounds = {{"poset_guard", kIdealGuard}};
    b.operations = {"ideal_enumerate"};
    b.text = t.str();
    return b;
  }
  const auto p = target_presentation(inv);
  check_rank(p, inv);
  with_target(b, inv, p);
  if (!inv.point) {
    const std::size_t len = inv.ideals.value_or(2);
    const auto y = DivisibilityPoset::of_presentation(p, len);
    const auto ideals = ideal_enumerate(y);
    json list = json::array();
    t << "ideals of " << inv.target << " truncated at length " << len << ": " << ideals.size()
      << "\n";
    for (const auto& f : ideals) {
      json names = json::array();
      std::string line;
      for (auto i : f) names.push_back(y.name(i)), line += (line.empty() ? "" : " ") + y.name(i);
      list.push_back(names);
      t << "  {" << line << "}\n";
    }
    b.parameters = {{"truncation", len}};
    b.results = {{"poset_size", y.size()}, {"ideal_count", ideals.size()}, {"ideals", list}};
    b.bounds = {{"max_len", len}, {"poset_guard", kIdealGuard}};
    b.operations = {"ideal_enumerate"};
    b.text = t.str();
    return b;
  }
  if (!p.relations().empty())
    throw InputError("points with --point are computed for free monoids only");
  const auto pt = parse_point(p, *inv.point);
  const std::size_t bound = inv.bound.value_or(4);
  const auto endo = endo_monoid_free(pt, p.rank());
  const auto cmp = check_My_equals_Ay(pt, p.rank(), bound);
  b.parameters = {{"point", format_point(p, pt)}};
  json e{{"kind", to_string(endo.kind)}};
  e["conjugator"] = endo.kind == EndoKind::conjugate_of_monoid ? json(p.format(endo.conjugator))
                                                              : json(nullptr);
  e["generator"] = endo.kind == EndoKind::infinite_cyclic
                       ? json(format_group_word(p, endo.generator))
                       : json(nullptr);
  b.results = {{"endomorphisms", e},
               {"My_equals_Ay",
                {{"value", to_string(cmp.equal)},
                 {"witness", cmp.witness ? json(format_group_word(p, *cmp.witness))
                                         : json(nullptr)}}}};
  t << "point " << format_point(p, pt) << " of " << inv.target << "\n";
  t << "  endomorphisms: " << to_string(endo.kind);
  if (!e["conjugator"].is_null()) t << ", M_y = w M w^-1 with w = " << e["conjugator"].get<std::string>();
  if (!e["generator"].is_null()) t << ", generated by " << e["generator"].get<std::string>();
  t << "\n  M_y = A_y: " << to_string(cmp.equal);
  if (cmp.witness) t << " (witness " << format_group_word(p, *cmp.witness) << ")";
  t << "\n";
  json members = json::array();
  for (const auto& s : inv.args) {
    const GroupWord g = parse_group_word(p, s);
    const auto a = point_membership(g, pt, PointSet::A, 30);
    const auto m = point_membership(g, pt, PointSet::M, 30);
    members.push_back({{"g", format_group_word(p, g)}, {"in_A", to_string(a)}, {"in_M", to_string(m)}});
    t << "  " << format_group_word(p, g) << ": in A_y " << to_string(a) << ", in M_y "
      << to_string(m) << "\n";
  }
  b.results["membership"] = members;
  b.bounds = {{"comparison_len", bound}};
  b.operations = {"parse_point", "endo_monoid_free", "check_My_equals_Ay", "point_membership"};
  b.text = t.str();
  return b;
}

Built cmd_snf(const Invocation& inv) {
  if (!inv.matrix) throw InputError("snf needs --matrix \"a b; c d\"");
  const auto m = IntMatrix2::parse(*inv.matrix);
  const auto s = smith_normal_form(m);
  Built b;
  b.input = {{"matrix", m.to_string()}};
  b.results = {{"u", s.u.to_string()},
               {"d", s.d.to_string()},
               {"v", s.v.to_string()},
               {"det", m.det().str()},
               {"adjugate", m.adjugate().to_string()},
               {"adjugate_check", adjugate_check(m)}};
  b.operations = {"smith_normal_form", "adjugate_check"};
  std::ostringstream t;
  t << "m = " << m.to_string() << "  det " << m.det() << "\n";
  t << "  u = " << s.u.to_string() << "\n  d = " << s.d.to_string() << "\n  v = "
    << s.v.to_string() << "\n";
  if (inv.primes) {
    const auto sigma = parse_prime_list(*inv.primes);
    const bool in = mat_prime_membership(m, sigma);
    b.parameters = {{"primes", sigma}};
    b.results["in_prime_ideal"] = in;
    b.operations.push_back("mat_prime_membership");
    t << "  some prime of {" << *inv.primes << "} divides det: " << (in ? "true" : "false")
      << "\n";
  }
  b.text = t.str();
  return b;
}

Word tk_word(const std::string& s) {
  Word w;
  if (s == "1") return w;
  for (char ch : s) {
    if (ch == 'a') w.push_back(0);
    else if (ch == 'b') w.push_back(1);
    else throw InputError("torus knot words use the letters a and b, got '" + s + "'");
  }
  return w;
}

std::string tk_format(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter g : w) s += g == 0 ? 'a' : 'b';
  return s;
}

Built cmd_tk(const Invocation& inv) {
  if (inv.k < 2 || inv.l < 2) throw InputError("tk needs --k and --l, both at least 2");
  if (inv.args.empty()) throw InputError("tk needs an operation: normal-form, degree or equal");
  const std::string& op = inv.args[0];
  Built b;
  b.parameters = {{"k", inv.k}, {"l", inv.l}, {"operation", op}};
  std::ostringstream t;
  auto need = [&](std::size_t n) {
    if (inv.args.size() != n + 1)
      throw InputError("tk " + op + " takes " + std::to_string(n) + " word(s)");
  };
  if (op == "normal-form") {
    need(1);
    const Word w = tk_word(inv.args[1]);
    const auto nf = tk_normal_form(w, inv.k, inv.l);
    const auto deg = tk_degree(w, inv.k, inv.l);
    const auto delta = tk_delta(tk_class(w, inv.k, inv.l), inv.k, inv.l);
    b.input = {{"word", tk_format(w)}};
    b.results = {{"level", nf.level}, {"reduced", tk_format(nf.reduced)}, {"degree", deg},
                 {"delta", delta}};
    b.operations = {"tk_normal_form", "tk_degree", "tk_delta"};
    t << tk_format(w) << " = c^" << nf.level << " " << tk_format(nf.reduced) << "  (degree "
      << deg << ", delta " << delta << ")\n";
  } else if (op == "degree") {
    need(1);
    const Word w = tk_word(inv.args[1]);
    b.input = {{"word", tk_format(w)}};
    b.results = {{"degree", tk_degree(w, inv.k, inv.l)}};
    b.operations = {"tk_degree"};
    t << "deg " << tk_format(w) << " = " << tk_degree(w, inv.k, inv.l) << "\n";
  } else if (op == "equal") {
    need(2);
    const Word u = tk_word(inv.args[1]), v = tk_word(inv.args[2]);
    const bool eq = tk_words_equal(u, v, inv.k, inv.l);
    b.input = {{"words", {tk_format(u), tk_format(v)}}};
    b.results = {{"equal", eq},
                 {"degrees", {tk_degree(u, inv.k, inv.l), tk_degree(v, inv.k, inv.l)}}};
    b.operations = {"tk_words_equal", "tk_degree"};
    t << tk_format(u) << (eq ? " = " : " != ") << tk_format(v) << "\n";
  } else {
    throw InputError("unknown tk operation " + op);
  }
  b.text = t.str();
  return b;
}

Built cmd_sn(const Invocation& inv) {
  if (!inv.primes) throw InputError("sn needs --primes");
  if (inv.args.size() != 2) throw InputError("sn needs an operation (in-A, in-M, divides) and a value");
  const auto primes = parse_prime_list(*inv.primes);
  const auto y = SupernaturalNumber::parse(primes, inv.y.value_or(""));
  const std::string& op = inv.args[0];
  Built b;
  b.parameters = {{"primes", primes}, {"y", y.to_string()}, {"operation", op}};
  json sigma = json::array();
  for (auto p : primes)
    if (y.in_sigma(p)) sigma.push_back(p);
  b.bounds = {{"declared_primes", primes}};
  bool value = false;
  std::string what;
  if (op == "in-A" || op == "in-M") {
    const auto q = PositiveRational::parse(inv.args[1]);
    value = op == "in-A" ? sn_in_A_y(q, y) : sn_in_M_y(q, y);
    b.input = {{"rational", q.to_string()}};
    b.operations = {op == "in-A" ? "sn_in_A_y" : "sn_in_M_y"};
    what = q.to_string() + (op == "in-A" ? " in A_y" : " in M_y");
  } else if (op == "divides") {
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(inv.args[1], &used);
      if (used != inv.args[1].size() || n == 0) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("divides needs a positive integer, got '" + inv.args[1] + "'");
    }
    value = sn_divides(n, y);
    b.input = {{"n", n}};
    b.results["outside_declared"] = outside_declared(n, y);
    b.operations = {"sn_divides", "outside_declared"};
    what = std::to_string(n) + " divides y";
  } else {
    throw InputError("unknown sn operation " + op);
  }
  b.results["value"] = value;
  b.results["sigma_declared"] = sigma;
  b.text = "y = " + y.to_string() + "\n  " + what + ": " + (value ? "true" : "false") + "\n";
  return b;
}

Built dispatch(const Invocation& inv) {
  const std::string& c = inv.command;
  if (c == "primes") return cmd_primes(inv);
  if (c == "ore") return cmd_ore(inv);
  if (c == "localize") return cmd_localize(inv);
  if (c == "subtoposes") return cmd_subtoposes(inv);
  if (c == "flat-check") return cmd_flat_check(inv);
  if (c == "tensor") return cmd_tensor(inv);
  if (c == "points") return cmd_points(inv);
  if (c == "snf") return cmd_snf(inv);
  if (c == "tk") return cmd_tk(inv);
  if (c == "sn") return cmd_sn(inv);
  throw InputError("unknown command '" + c + "'");
}

json envelope(const Invocation& inv) {
  return {{"schema", kSchema}, {"command", inv.command}};
}

}  // namespace

Outcome run(const Invocation& inv) {
  Outcome out;
  json doc = envelope(inv);
  try {
    Built b = dispatch(inv);
    doc["input"] = std::move(b.input);
    doc["parameters"] = std::move(b.parameters);
    doc["results"] = std::move(b.results);
    doc["bounds"] = std::move(b.bounds);
    doc["provenance"] = {{"tool", "montop"}, {"version", kVersion}, {"operations", b.operations}};
    out.report = {std::move(doc), std::move(b.text)};
    return out;
  } catch (const GuardError& e) {
    out.exit_code = 2;
    doc["error"] = {{"kind", "guard"}, {"message", e.what()}};
    out.report = {std::move(doc), std::string("guard exceeded: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    out.exit_code = 1;
    doc["error"] = {{"kind", "input"}, {"message", e.what()}};
    out.report = {std::move(doc), std::string("input error: ") + e.what() + "\n"};
  }
  return out;
}

std::string to_json(const Report& r) { return r.doc.dump(2) + "\n"; }

std::string render(const Report& r, Format f) {
  return f == Format::json ? to_json(r) : r.text;
}

std::optional<Invocation> parse_command_line(int argc, const char* const* argv) {
  Invocation inv;
  CLI::App app{"Subtoposes of monoid type: prime ideals, Ore localizations, flatness and points"};
  app.require_subcommand(1);
  std::string format = "text";

  auto common = [&](CLI::App* sub, bool target) {
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (target) sub->add_option("target", inv.target, "presentation file or builtin name");
  };
  auto* primes = app.add_subcommand("primes", "enumerate prime ideals");
  common(primes, true);

  auto* ore = app.add_subcommand("ore", "decide the right Ore condition");
  common(ore, true);
  ore->add_option("--subset", inv.subset, "character bit string or ALL");
  ore->add_option("--pair-len", inv.pair_len);
  ore->add_option("--wit-len", inv.wit_len);

  auto* loc = app.add_subcommand("localize", "localization at a prime ideal");
  common(loc, true);
  loc->add_option("--char", inv.character)->required();
  loc->add_option("--bound", inv.bound, "units audit word length");

  auto* sub = app.add_subcommand("subtoposes", "classify subtoposes of monoid type");
  common(sub, true);
  sub->add_option("--pair-len", inv.pair_len);
  sub->add_option("--wit-len", inv.wit_len);
  sub->add_option("--trunc", inv.trunc);
  sub->add_option("--search", inv.search);
  sub->add_flag("--validate", inv.validate, "cross-check against flatness");

  auto* flat = app.add_subcommand("flat-check", "flatness criteria for a left M-set");
  common(flat, true);
  flat->add_option("--mset", inv.mset, "finite left M-set file");
  flat->add_option("--char", inv.character, "use the truncated localization at this character");
  flat->add_option("--trunc", inv.trunc);
  flat->add_option("--search", inv.search);

  auto* ten = app.add_subcommand("tensor", "tensor product of a right and a left M-set");
  common(ten, true);
  ten->add_option("sets", inv.args, "right M-set file, then left M-set file or M")->expected(2);
  ten->add_option("--trunc", inv.trunc);

  auto* pts = app.add_subcommand("points", "ideals and free-monoid point data");
  common(pts, true);
  pts->add_option("--point", inv.point);
  pts->add_option("--ideals", inv.ideals, "truncation length for ideal enumeration");
  pts->add_option("--divisors", inv.divisors, "enumerate ideals of the divisors of n");
  pts->add_option("--bound", inv.bound, "group word length for M_y = A_y");
  pts->add_option("words", inv.args, "group words to test for membership");

  auto* snf = app.add_subcommand("snf", "Smith normal form of a 2x2 integer matrix");
  common(snf, false);
  snf->add_option("--matrix", inv.matrix)->required();
  snf->add_option("--primes", inv.primes, "also test det against these primes");

  auto* tk = app.add_subcommand("tk", "torus knot monoid word operations");
  common(tk, false);
  tk->add_option("--k", inv.k)->required();
  tk->add_option("--l", inv.l)->required();
  tk->add_option("op", inv.args, "normal-form W | degree W | equal W1 W2")->required();

  auto* sn = app.add_subcommand("sn", "supernatural number membership");
  common(sn, false);
  sn->add_option("--primes", inv.primes)->required();
  sn->add_option("--y", inv.y, "exponents, e.g. 2:inf,3:1");
  sn->add_option("op", inv.args, "in-A Q | in-M Q | divides N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }
  for (const auto& name : kCommands)
    if (app.got_subcommand(name)) inv.command = name;
  inv.format = format == "json" ? Format::json : Format::text;
  if (const char* env = std::getenv("MONOID_TOPOS_MAX_GENERATORS")) {
    try {
      inv.max_generators = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("MONOID_TOPOS_MAX_GENERATORS must be a number");
    }
  }
  return inv;
}

int main_entry(int argc, const char* const* argv) {
  std::optional<Invocation> inv;
  try {
    inv = parse_command_line(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
  if (!inv) return 0;
  const Outcome out = run(*inv);
  if (out.exit_code == 0 || inv->format == Format::json)
    std::cout << render(out.report, inv->format);
  if (out.exit_code != 0) std::cerr << out.report.text;
  return out.exit_code;
}

}  // namespace montop::cli
