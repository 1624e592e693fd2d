#pragma once

#include <optional>
#include <string>
#include <vector>

#include "montop/prime_ideals.hpp"
#include "montop/presentation.hpp"
#include "montop/word_oracle.hpp"

namespace montop {

struct OreBounds {
  std::size_t pair_len = 4;
  std::size_t witness_len = 8;
};

/// S = M (ALL) or the submonoid generated by the 1-generators of a character.
class OreSubset {
 public:
  static OreSubset all() { return OreSubset(); }
  static OreSubset of(Character c) {
    OreSubset s;
    s.character_ = std::move(c);
    return s;
  }
  bool is_all() const noexcept { return !character_.has_value(); }
  const std::optional<Character>& character() const noexcept { return character_; }
  /// Generators of S for a presentation of the given rank.
  std::vector<Letter> generators(std::size_t rank) const;
  std::string to_string() const { return is_all() ? "ALL" : character_->to_string(); }

 private:
  std::optional<Character> character_;
};

struct OreQuery {
  MonoidPresentation presentation;
  OreSubset subset = OreSubset::all();
  OreBounds bounds;
};

enum class OreOutcome { holds, fails, unknown };
const char* to_string(OreOutcome o);

/// For the pair (m, s): m t = s n with t in S.
struct OreWitness {
  Word m, s, t, n;
};

struct OreVerdict {
  OreOutcome outcome = OreOutcome::unknown;
  /// holds: "commutative", "prefix-free-criterion", "trivial-subset" or
  /// "exhaustive"; fails: "prefix-criterion"; unknown: "bounded-search".
  std::string method;
  OreBounds bounds;
  /// Fails: the pair with mM and sM disjoint. Unknown: first unwitnessed pair.
  std::optional<Word> m, s;
  /// Fails only: the exactness argument.
  std::string certificate;
  /// Exhaustive search only.
  std::size_t pairs_checked = 0;
  std::string oracle;
  std::vector<OreWitness> witnesses;
};

OreVerdict is_right_ore(const OreQuery& q);

/// One shortlex-least witness (t first, then n) per pair checked. Requires a
/// Holds verdict (InputError otherwise).
std::vector<OreWitness> ore_witness_table(const OreQuery& q);

/// Re-check a Fails certificate: the presentation is free and neither of m, s
/// is a prefix of the other, so mM and sM are disjoint.
bool verify_prefix_certificate(const MonoidPresentation& p, const Word& m,
                               const Word& s);

/// Re-check a witness: m t = s n according to `oracle`, and t uses only
/// generators of S.
bool verify_witness(const WordOracle& oracle, const OreSubset& subset,
                    const OreWitness& w);

}  // namespace montop
