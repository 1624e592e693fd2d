#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "montop/error.hpp"
#include "montop/presentation.hpp"
#include "montop/rewriting.hpp"
#include "montop/word.hpp"

namespace montop {

/// Decides (or semi-decides) equality of words in a presented monoid by
/// mapping each word to a representative.
class WordOracle {
 public:
  virtual ~WordOracle() = default;

  virtual std::size_t rank() const = 0;
  /// A word equal to `w` in the monoid. If exact(), equal elements always get
  /// the same representative.
  virtual Word canonical(const Word& w) const = 0;
  virtual bool exact() const = 0;
  /// Short tag recorded in reports ("rewriting:confluent", ...).
  virtual std::string method() const = 0;

  Decision equal(const Word& a, const Word& b) const;
};

/// Normal forms of a completed system. The system may be built over a
/// relabelled alphabet (`to_internal[g]` is the internal letter of g), which
/// changes the term order but not the monoid.
class RewritingOracle final : public WordOracle {
 public:
  explicit RewritingOracle(RewritingSystem rs, std::vector<Letter> to_internal = {});

  std::size_t rank() const override { return rs_.rank(); }
  Word canonical(const Word& w) const override;
  bool exact() const override { return rs_.confluent(); }
  std::string method() const override;
  /// Over the internal alphabet.
  const RewritingSystem& system() const noexcept { return rs_; }

 private:
  RewritingSystem rs_;
  std::vector<Letter> to_internal_, to_external_;
};

/// inverse_of[y] = x when x y = 1 and y x = 1 are both relations and y is
/// declared after x, as in a localization.
std::vector<std::optional<Letter>> adjoined_inverses(const MonoidPresentation& p);

/// Exact oracle for <a, b | a^k = b^l> and its localizations, through the
/// injective map to Z x (Z/k * Z/l). Each presentation letter is a, b, or the
/// inverse of one of them.
class TorusKnotOracle final : public WordOracle {
 public:
  struct LetterImage {
    Letter base = 0;  // 0 = a, 1 = b
    bool inverse = false;
  };

  TorusKnotOracle(unsigned k, unsigned l, std::vector<LetterImage> letters);

  std::size_t rank() const override { return letters_.size(); }
  /// c^lambda (as a^(k lambda), or its inverse) followed by the alternating
  /// word of the class.
  Word canonical(const Word& w) const override;
  bool exact() const override { return true; }
  std::string method() const override { return "torus-embedding"; }

  unsigned k() const noexcept { return k_; }
  unsigned l() const noexcept { return l_; }

 private:
  unsigned k_, l_;
  std::vector<LetterImage> letters_;
  Letter a_ = 0, b_ = 1;
  std::optional<Letter> a_inverse_;
};

struct TorusShape {
  unsigned k = 0;
  unsigned l = 0;
  std::vector<TorusKnotOracle::LetterImage> letters;
};

/// Recognize <a, b | a^k = b^l> (either generator order), optionally with
/// adjoined two-sided inverses x x' = x' x = 1.
std::optional<TorusShape> recognize_torus_knot(const MonoidPresentation& p);

/// The torus embedding when the presentation has that shape, bounded
/// completion otherwise.
std::shared_ptr<const WordOracle> make_oracle(const MonoidPresentation& p,
                                              CompletionBounds bounds = {});

/// Representatives of every element expressible by a word of length
/// <= max_len, in shortlex order. Words over `letters` only when given.
std::vector<Word> elements_within(const WordOracle& oracle, std::size_t max_len,
                                  const std::vector<Letter>* letters = nullptr);

}  // namespace montop
