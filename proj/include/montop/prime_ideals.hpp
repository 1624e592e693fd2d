#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "montop/error.hpp"
#include "montop/presentation.hpp"

namespace montop {

/// A map generators -> {0,1}. When it respects the relations it is a monoid
/// homomorphism to ({0,1}, *) and its zero set is a prime ideal.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<bool> values) : values_(std::move(values)) {}
  /// From a bit string in generator order ("01": first -> 0, second -> 1).
  static Character parse(std::string_view bits, std::size_t rank);
  static Character constant(std::size_t rank, bool value) {
    return Character(std::vector<bool>(rank, value));
  }

  std::size_t rank() const noexcept { return values_.size(); }
  bool value(Letter g) const { return values_.at(g); }
  /// 1 iff every letter maps to 1. Throws InputError on a foreign letter.
  bool value(const Word& w) const;
  /// Generators with value 1, ascending. They generate S = M - p.
  std::vector<Letter> ones() const;
  bool all_zero() const;
  bool all_one() const;
  std::string to_string() const;

  friend bool operator==(const Character&, const Character&) = default;
  /// Ordered by bit string.
  friend auto operator<=>(const Character& a, const Character& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<bool> values_;
};

/// value(u) == value(v) for every relation u = v.
bool respects_relations(const MonoidPresentation& p, const Character& c);

inline constexpr std::size_t kDefaultGeneratorGuard = 24;

/// All characters respecting the relations, sorted by bit string. Throws
/// GuardError when the rank exceeds `max_generators`.
std::vector<Character> enumerate_prime_ideals(
    const MonoidPresentation& p,
    std::size_t max_generators = kDefaultGeneratorGuard);

/// Whether w lies in the prime ideal of c (some letter maps to 0).
bool in_prime_ideal(const Character& c, const Word& w);

/// M with a two-sided inverse g' adjoined for each generator g where c = 1.
struct LocalizedPresentation {
  MonoidPresentation base;
  std::vector<Letter> inverted;
  MonoidPresentation result;
  /// inverse_letter[g] is the letter of g' in `result`, when g is inverted.
  std::vector<std::optional<Letter>> inverse_letter;
};

/// Base generators keep their indices; new letters follow in the order of
/// `inverted`. Names are g' (more primes if g' is taken).
LocalizedPresentation localization_presentation(const MonoidPresentation& p,
                                                const Character& c);

struct UnitSearch {
  Letter generator = 0;
  bool inverted = false;
  /// A word w with g w = w g = 1 in the localization, if one was found.
  std::optional<Word> inverse;
};

/// Bounded check that exactly the S-generators become units: each inverted
/// generator has its adjoined inverse, and no word of length <= bound
/// inverts an ideal generator.
struct UnitsAudit {
  std::size_t bound = 6;
  std::vector<UnitSearch> generators;
  /// Inverted generators all have inverses, others have none within bound.
  bool holds_at_bound = false;
  /// Whether the equality oracle was exact.
  bool exact_oracle = false;
};

UnitsAudit audit_units(const LocalizedPresentation& lp, const Character& c,
                       std::size_t bound = 6);

}  // namespace montop
