#include "montop/catalog.hpp"

#include <charconv>

#include "montop/error.hpp"
#include "montop/supernatural.hpp"

namespace montop {

std::vector<std::string> default_generator_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i + 1));
  return out;
}

MonoidPresentation free_monoid(std::size_t k) { return {default_generator_names(k), {}}; }

MonoidPresentation free_commutative_monoid(std::vector<std::string> gens) {
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto g = static_cast<Letter>(i), h = static_cast<Letter>(j);
      rels.push_back({Word{g, h}, Word{h, g}});
    }
  return {std::move(gens), std::move(rels)};
}

MonoidPresentation torus_knot_monoid(unsigned k, unsigned l) {
  if (k < 2 || l < 2) throw InputError("torus knot monoid needs k, l >= 2");
  return {{"a", "b"}, {{Word::power(0, k), Word::power(1, l)}}};
}

namespace {

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string_view strip_prefix(std::string_view name) {
  constexpr std::string_view prefix = "builtin:";
  if (name.substr(0, prefix.size()) == prefix) name.remove_prefix(prefix.size());
  return name;
}

std::vector<std::string> prime_names(const std::vector<std::uint64_t>& primes, char tag) {
  std::vector<std::string> out;
  for (auto p : primes) out.push_back(std::string(1, tag) + std::to_string(p));
  return out;
}

}  // namespace

bool is_builtin(std::string_view name) {
  name = strip_prefix(name);
  if (name == "trivial" || name == "matrices") return true;
  for (std::string_view family : {"free:", "comm:", "torus:", "arith:", "matrices:"})
    if (name.substr(0, family.size()) == family) return true;
  return false;
}

MonoidPresentation builtin_presentation(std::string_view full) {
  const std::string_view name = strip_prefix(full);
  auto arg = [&](std::string_view family) { return name.substr(family.size()); };
  constexpr std::size_t max_rank = 1024;
  if (name == "trivial") return MonoidPresentation();
  if (name.substr(0, 5) == "free:") {
    const auto k = parse_count(arg("free:"), "generator count");
    if (k > max_rank) throw GuardError("too many generators");
    return free_monoid(k);
  }
  if (name.substr(0, 5) == "comm:") {
    const auto k = parse_count(arg("comm:"), "generator count");
    if (k > max_rank) throw GuardError("too many generators");
    return free_commutative_monoid(default_generator_names(k));
  }
  if (name.substr(0, 6) == "torus:") {
    const auto rest = arg("torus:");
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw InputError("torus builtin needs k,l");
    const auto k = parse_count(rest.substr(0, comma), "k");
    const auto l = parse_count(rest.substr(comma + 1), "l");
    if (k > 10000 || l > 10000) throw GuardError("torus exponents too large");
    return torus_knot_monoid(static_cast<unsigned>(k), static_cast<unsigned>(l));
  }
  if (name.substr(0, 6) == "arith:")
    return free_commutative_monoid(prime_names(parse_prime_list(arg("arith:")), 'p'));
  if (name == "matrices") return free_commutative_monoid(prime_names({2, 3}, 'd'));
  if (name.substr(0, 9) == "matrices:")
    return free_commutative_monoid(prime_names(parse_prime_list(arg("matrices:")), 'd'));
  throw InputError("unknown builtin '" + std::string(full) + "'");
}

MonoidPresentation load_target(const std::string& target) {
  if (is_builtin(target)) return builtin_presentation(target);
  return load_presentation(target);
}

std::vector<std::string> builtin_suite() {
  return {"trivial", "free:1",    "free:2",    "free:3",     "comm:2",  "comm:3",
          "torus:2,2", "torus:2,3", "torus:3,5", "arith:2,3", "matrices"};
}

}  // namespace montop
