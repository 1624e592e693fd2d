#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "montop/error.hpp"
#include "montop/group_word.hpp"
#include "montop/presentation.hpp"

namespace montop {

// ---------------------------------------------------------------------------
// Divisibility posets and their ideals

/// A finite poset given by its elements and order matrix.
class DivisibilityPoset {
 public:
  /// Elements of M expressible by words of length <= max_len, ordered by
  /// x <= y iff y = x m for some m within the same truncation. Throws
  /// GuardError if a generator is a unit within `unit_bound` (then Y != M).
  static DivisibilityPoset of_presentation(const MonoidPresentation& p, std::size_t max_len,
                                           std::size_t unit_bound = 4);
  /// Divisors of n ordered by divisibility.
  static DivisibilityPoset of_divisors(std::uint64_t n);
  /// Explicit order; leq must be reflexive, transitive and antisymmetric.
  static DivisibilityPoset from_order(std::vector<std::string> names,
                                      std::vector<std::vector<bool>> leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_.at(x).at(y); }

 private:
  DivisibilityPoset(std::vector<std::string> names, std::vector<std::vector<bool>> leq);

  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
};

/// Sorted member indices.
using PosetIdeal = std::vector<std::size_t>;

/// Nonempty, downward closed and upward directed.
bool is_ideal(const DivisibilityPoset& p, const PosetIdeal& f);

inline constexpr std::size_t kIdealGuard = 2000;

/// Every ideal, sorted by size then lexicographically. A finite directed set
/// has a largest element, so the candidates are the principal downsets; each
/// is re-verified. Throws GuardError above `guard` elements.
std::vector<PosetIdeal> ideal_enumerate(const DivisibilityPoset& p,
                                        std::size_t guard = kIdealGuard);

// ---------------------------------------------------------------------------
// Points of the free monoid

/// u v v v ..., stored canonically: v primitive and u as short as possible.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(Word preperiod, Word period);
  const Word& preperiod() const noexcept { return u_; }
  const Word& period() const noexcept { return v_; }
  Letter at(std::size_t i) const;
  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  Word u_, v_;
};

/// The Fibonacci word (a -> ab, b -> a) on the first two generators.
struct FibonacciStream {
  Letter at(std::size_t i) const;
  friend bool operator==(const FibonacciStream&, const FibonacciStream&) = default;
};

/// A point of PSh(M) for M free: the ideal of prefixes of a finite or
/// infinite word.
struct PointDescriptor {
  std::variant<Word, EventuallyPeriodicWord, FibonacciStream> kind;

  bool finite() const { return std::holds_alternative<Word>(kind); }
  /// Letter i of the underlying word; finite words must have i < size.
  Letter at(std::size_t i) const;
  /// Letters [0, n) (fewer for a short finite word).
  Word prefix(std::size_t n) const;
};

/// "abba" or "abba*" (finite), "1" (empty), "ab(ba)^w" (eventually
/// periodic), "fib" (Fibonacci stream).
PointDescriptor parse_point(const MonoidPresentation& p, std::string_view text);
std::string format_point(const MonoidPresentation& p, const PointDescriptor& pt);

enum class EndoKind { conjugate_of_monoid, infinite_cyclic, trivial };
const char* to_string(EndoKind k);

/// M_y up to isomorphism, with the data that pins it down inside G.
struct EndoClassification {
  EndoKind kind = EndoKind::trivial;
  /// conjugate_of_monoid: M_y = w M w^-1.
  Word conjugator;
  /// infinite_cyclic: M_y is generated by u v u^-1.
  GroupWord generator;
};

EndoClassification endo_monoid_free(const PointDescriptor& pt, std::size_t k);

enum class PointSet { A, M };

/// Membership of a reduced group word in A_y or M_y, by closed forms. For
/// the Fibonacci stream M_y is trivial because the stream is aperiodic;
/// fixes_prefix gives the matching bounded alignment check.
Decision point_membership(const GroupWord& g, const PointDescriptor& pt, PointSet which,
                          std::size_t bound = 30);

/// Whether g y = y holds on the first n letters: g must be P N^-1 with N a
/// prefix of y, and then P y[|N|..] must agree with y.
bool fixes_prefix(const GroupWord& g, const PointDescriptor& pt, std::size_t n);

struct MyAyComparison {
  Decision equal = Decision::unknown;
  /// A group word lying in exactly one of A_y, M_y.
  std::optional<GroupWord> witness;
  std::size_t bound = 0;
};

/// Compares memberships on all group words of length <= bound, then settles
/// the answer with the closed forms.
MyAyComparison check_My_equals_Ay(const PointDescriptor& pt, std::size_t k, std::size_t bound);

}  // namespace montop
