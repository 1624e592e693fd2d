#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "montop/word.hpp"

namespace montop {

// Torus knot monoid <a, b | a^k = b^l>, with a = letter 0 and b = letter 1.
// Its elements embed into N x H, H = Z/k * Z/l, via m -> (deg m, [m]) where
// deg a = l and deg b = k. c = a^k = b^l is central.

/// A syllable a^power (gen 0) or b^power (gen 1), power in [1, order - 1].
struct Syllable {
  Letter gen = 0;
  unsigned power = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// An element of Z/k * Z/l in alternating syllable normal form.
class HClass {
 public:
  HClass() = default;
  HClass(unsigned k, unsigned l) : k_(k), l_(l) {}

  /// Right-multiply by g^exponent (exponent may be negative).
  void push(Letter gen, long exponent);
  HClass inverse() const;

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }
  unsigned order(Letter gen) const { return gen == 0 ? k_ : l_; }

  friend bool operator==(const HClass& a, const HClass& b) {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.syl_ == b.syl_;
  }

 private:
  unsigned k_ = 2;
  unsigned l_ = 2;
  std::vector<Syllable> syl_;
};

struct TorusKnotElement {
  unsigned k = 2;
  unsigned l = 2;
  std::int64_t degree = 0;
  HClass h_class;
  friend bool operator==(const TorusKnotElement&, const TorusKnotElement&) = default;
};

/// l per a, k per b.
std::uint64_t tk_degree(const Word& w, unsigned k, unsigned l);
HClass tk_class(const Word& w, unsigned k, unsigned l);
/// Minimal degree of a monoid element with class h: the degree of the
/// alternating word itself.
std::uint64_t tk_delta(const HClass& h, unsigned k, unsigned l);
/// The alternating {a,b}-word of h (avoids a^k and b^l).
Word tk_alternating_word(const HClass& h);
TorusKnotElement tk_embed(const Word& w, unsigned k, unsigned l);

struct TkNormalForm {
  std::uint64_t level = 0;  ///< lambda, with w = c^lambda * reduced
  Word reduced;
  friend bool operator==(const TkNormalForm&, const TkNormalForm&) = default;
};

TkNormalForm tk_normal_form(const Word& w, unsigned k, unsigned l);
/// Exact word problem: equal degree and equal class.
bool tk_words_equal(const Word& a, const Word& b, unsigned k, unsigned l);

}  // namespace montop
