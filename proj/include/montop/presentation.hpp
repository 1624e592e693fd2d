#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "montop/word.hpp"

namespace montop {

struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct PresentationFlags {
  /// Set only when gh = hg has been proved for every generator pair.
  bool commutative = false;
  /// Every relation is trivial (u = u), so the monoid is free.
  bool relation_free = false;
};

/// A finitely presented monoid <generators | relations>.
///
/// Generators are ordered; that order is the tie-break of the shortlex term
/// order used by completion. The monoid is assumed to embed in a group; this
/// is a caller contract and is never checked.
class MonoidPresentation {
 public:
  /// The trivial monoid (no generators).
  MonoidPresentation();
  MonoidPresentation(std::vector<std::string> generators,
                     std::vector<Relation> relations);

  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept {
    return generators_;
  }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const PresentationFlags& flags() const noexcept { return flags_; }

  const std::string& name(Letter g) const { return generators_.at(g); }
  std::optional<Letter> find(std::string_view name) const;

  /// Throws InputError if some letter is outside the alphabet.
  void check_word(const Word& w) const;
  /// Concatenation with both operands checked against the alphabet.
  Word concat(const Word& a, const Word& b) const;

  /// Parse a word written with generator names ("aab", "a a' b", "a^3", "1").
  Word parse_word(std::string_view text) const;
  /// Inverse of parse_word. The empty word is written "1".
  std::string format(const Word& w) const;
  /// Serialize in the `gens:` / `rel:` text format.
  std::string to_text() const;

  friend bool operator==(const MonoidPresentation& a,
                         const MonoidPresentation& b) {
    return a.generators_ == b.generators_ && a.relations_ == b.relations_;
  }

 private:
  bool juxtapose() const;

  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
  PresentationFlags flags_;
};

/// Parse the presentation text format:
///
///   # comment
///   gens: a b c
///   rel: aab = ba
///
/// Unknown symbols are reported as ParseError with line and column.
MonoidPresentation parse_presentation(std::string_view text);
MonoidPresentation load_presentation(const std::string& path);

}  // namespace montop
