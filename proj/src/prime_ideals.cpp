#include "montop/prime_ideals.hpp"

#include <algorithm>

#include "montop/word_oracle.hpp"

namespace montop {

Character Character::parse(std::string_view bits, std::size_t rank) {
  if (bits.size() != rank)
    throw InputError("character '" + std::string(bits) + "' needs " +
                     std::to_string(rank) + " bits");
  std::vector<bool> v;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw InputError("character bits must be 0 or 1, got '" + std::string(1, ch) + "'");
    v.push_back(ch == '1');
  }
  return Character(std::move(v));
}

bool Character::value(const Word& w) const {
  for (Letter g : w) {
    if (g >= values_.size()) throw InputError("letter outside the character's alphabet");
    if (!values_[g]) return false;
  }
  return true;
}

std::vector<Letter> Character::ones() const {
  std::vector<Letter> out;
  for (std::size_t g = 0; g < values_.size(); ++g)
    if (values_[g]) out.push_back(static_cast<Letter>(g));
  return out;
}

bool Character::all_zero() const {
  for (bool b : values_)
    if (b) return false;
  return true;
}

bool Character::all_one() const {
  for (bool b : values_)
    if (!b) return false;
  return true;
}

std::string Character::to_string() const {
  std::string s;
  for (bool b : values_) s += b ? '1' : '0';
  return s;
}

bool respects_relations(const MonoidPresentation& p, const Character& c) {
  if (c.rank() != p.rank()) throw InputError("character rank differs from presentation");
  for (const auto& r : p.relations())
    if (c.value(r.lhs) != c.value(r.rhs)) return false;
  return true;
}

std::vector<Character> enumerate_prime_ideals(const MonoidPresentation& p,
                                              std::size_t max_generators) {
  const std::size_t k = p.rank();
  if (k > max_generators || k > 63)
    throw GuardError("prime ideal enumeration over " + std::to_string(k) +
                     " generators exceeds the guard of " +
                     std::to_string(std::min<std::size_t>(max_generators, 63)));
  // Bit (k - 1 - g) of a mask is the value of generator g, so increasing
  // masks are increasing bit strings.
  auto letter_mask = [k](const Word& w) {
    std::uint64_t m = 0;
    for (Letter g : w) m |= std::uint64_t{1} << (k - 1 - g);
    return m;
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rels;
  for (const auto& r : p.relations()) rels.emplace_back(letter_mask(r.lhs), letter_mask(r.rhs));

  std::vector<Character> out;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t ones = 0; ones < total; ++ones) {
    bool ok = true;
    for (const auto& [l, r] : rels) {
      if (((l & ~ones) == 0) != ((r & ~ones) == 0)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<bool> v(k);
    for (std::size_t g = 0; g < k; ++g) v[g] = (ones >> (k - 1 - g)) & 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

bool in_prime_ideal(const Character& c, const Word& w) { return !c.value(w); }

LocalizedPresentation localization_presentation(const MonoidPresentation& p,
                                                const Character& c) {
  if (!respects_relations(p, c))
    throw InputError("character " + c.to_string() + " does not respect the relations");
  LocalizedPresentation lp{p, c.ones(), p, std::vector<std::optional<Letter>>(p.rank())};
  if (lp.inverted.empty()) return lp;

  std::vector<std::string> gens = p.generators();
  std::vector<Relation> rels = p.relations();
  auto taken = [&gens](const std::string& s) {
    return std::find(gens.begin(), gens.end(), s) != gens.end();
  };
  for (Letter g : lp.inverted) {
    std::string name = p.name(g) + "'";
    while (taken(name)) name += "'";
    const auto inv = static_cast<Letter>(gens.size());
    gens.push_back(name);
    lp.inverse_letter[g] = inv;
    rels.push_back({Word{g, inv}, Word{}});
    rels.push_back({Word{inv, g}, Word{}});
  }
  lp.result = MonoidPresentation(std::move(gens), std::move(rels));
  return lp;
}

UnitsAudit audit_units(const LocalizedPresentation& lp, const Character& c,
                       std::size_t bound) {
  UnitsAudit audit;
  audit.bound = bound;
  const auto oracle = make_oracle(lp.result);
  audit.exact_oracle = oracle->exact();
  const Word one = oracle->canonical(Word{});

  // Candidate inverses: one representative per element reachable within the
  // bound.
  std::vector<Word> candidates;
  bool computed = false;
  audit.holds_at_bound = true;
  for (Letter g = 0; g < lp.base.rank(); ++g) {
    UnitSearch s{g, c.value(g), std::nullopt};
    if (s.inverted) {
      const Word inv{*lp.inverse_letter[g]};
      // The defining relations g g' = 1 = g' g witness the inverse directly.
      if (oracle->canonical(Word{g, inv[0]}) == one &&
          oracle->canonical(Word{inv[0], g}) == one)
        s.inverse = inv;
      if (!s.inverse) audit.holds_at_bound = false;
    } else {
      if (!computed) {
        candidates = elements_within(*oracle, bound);
        computed = true;
      }
      for (const Word& w : candidates) {
        if (oracle->canonical(concat(Word{g}, w)) == one &&
            oracle->canonical(concat(w, Word{g})) == one) {
          s.inverse = w;
          break;
        }
      }
      if (s.inverse) audit.holds_at_bound = false;
    }
    audit.generators.push_back(std::move(s));
  }
  return audit;
}

}  // namespace montop
