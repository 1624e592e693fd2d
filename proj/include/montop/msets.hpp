#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "montop/group_word.hpp"
#include "montop/prime_ideals.hpp"
#include "montop/presentation.hpp"
#include "montop/word_oracle.hpp"

namespace montop {

/// A relation u = v that acts differently on `element`.
struct ActionViolation {
  std::size_t relation = 0;
  std::size_t element = 0;
  std::size_t lhs_image = 0;
  std::size_t rhs_image = 0;
};

class InvalidAction : public InputError {
 public:
  explicit InvalidAction(const ActionViolation& v);
  const ActionViolation& violation() const noexcept { return v_; }

 private:
  ActionViolation v_;
};

/// table[g][e] is the image of element e under generator g.
using ActionTable = std::vector<std::vector<std::size_t>>;

/// Carrier {0, ..., n-1} with display names and one action map per generator.
class FiniteMSetBase {
 public:
  const MonoidPresentation& presentation() const noexcept { return p_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t e) const { return names_.at(e); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const ActionTable& table() const noexcept { return table_; }
  std::size_t act_letter(Letter g, std::size_t e) const { return table_.at(g).at(e); }
  std::optional<std::size_t> find(std::string_view name) const;

 protected:
  FiniteMSetBase(MonoidPresentation p, std::vector<std::string> names, ActionTable table);

  MonoidPresentation p_;
  std::vector<std::string> names_;
  ActionTable table_;
};

class FiniteLeftMSet : public FiniteMSetBase {
 public:
  /// Throws InvalidAction if some relation acts inconsistently.
  FiniteLeftMSet(MonoidPresentation p, std::vector<std::string> names, ActionTable table);
  /// w . e: the last letter of w acts first.
  std::size_t act(const Word& w, std::size_t e) const;
  static std::optional<ActionViolation> find_violation(const MonoidPresentation& p,
                                                       const ActionTable& table);
};

class FiniteRightMSet : public FiniteMSetBase {
 public:
  FiniteRightMSet(MonoidPresentation p, std::vector<std::string> names, ActionTable table);
  /// e . w: the first letter of w acts first.
  std::size_t act(std::size_t e, const Word& w) const;
  static std::optional<ActionViolation> find_violation(const MonoidPresentation& p,
                                                       const ActionTable& table);
};

using AnyFiniteMSet = std::variant<FiniteLeftMSet, FiniteRightMSet>;

/// Text format:
///
///   side: right          # optional, default left
///   elems: p q
///   act a: p->q q->q     # unlisted elements and generators act trivially
AnyFiniteMSet parse_mset(const MonoidPresentation& p, std::string_view text);
AnyFiniteMSet load_mset(const MonoidPresentation& p, const std::string& path);
std::string mset_to_text(const FiniteMSetBase& m, bool right);

/// Truncated model of a localization M_p (or M itself) as a left M-set: the
/// elements expressible by words of length <= trunc_len, acted on by left
/// multiplication with base generators. Products that leave the truncation
/// are reported as missing, never clamped.
class SymbolicMSet {
 public:
  SymbolicMSet(const LocalizedPresentation& lp, std::size_t trunc_len);
  SymbolicMSet(const MonoidPresentation& p, std::size_t trunc_len);

  const MonoidPresentation& base() const noexcept { return base_; }
  const MonoidPresentation& carrier_presentation() const noexcept { return full_; }
  const WordOracle& oracle() const noexcept { return *oracle_; }
  std::size_t trunc_len() const noexcept { return trunc_len_; }
  /// Whether carrier elements are pairwise distinct for certain.
  bool exact() const { return oracle_->exact(); }

  std::size_t size() const noexcept { return elements_.size(); }
  const Word& element(std::size_t e) const { return elements_.at(e); }
  const std::vector<Word>& elements() const noexcept { return elements_; }
  std::string name(std::size_t e) const { return full_.format(elements_.at(e)); }
  std::optional<std::size_t> index_of(const Word& w) const;
  /// g . e for a base generator g, or nullopt outside the truncation.
  std::optional<std::size_t> act_letter(Letter g, std::size_t e) const;
  /// Image of each carrier letter in the free group on the base generators.
  const std::vector<GroupLetter>& letter_images() const noexcept { return images_; }
  GroupWord to_group_word(const Word& w) const;

 private:
  void build();

  MonoidPresentation base_;
  MonoidPresentation full_;
  std::shared_ptr<const WordOracle> oracle_;
  std::size_t trunc_len_;
  std::vector<GroupLetter> images_;
  std::vector<Word> elements_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::vector<std::optional<std::size_t>>> action_;
};

/// Classes of X x A under (x g, a) ~ (x, g a), numbered by first appearance
/// in row-major order.
struct Partition {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;

  std::size_t of(std::size_t x, std::size_t a) const { return class_of.at(x * cols + a); }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> classes() const;
};

Partition tensor(const FiniteRightMSet& x, const FiniteLeftMSet& a);
/// Moves leaving the truncation of `a` are skipped.
Partition tensor(const FiniteRightMSet& x, const SymbolicMSet& a);

enum class FlatStatus { holds, fails, unknown };
const char* to_string(FlatStatus s);

struct CriterionReport {
  FlatStatus status = FlatStatus::unknown;
  /// Holds only up to the search bound.
  bool at_bound = false;
  /// F2: the pair (a, b) without a common c. F3: the element a (in `a`).
  std::optional<std::size_t> a, b;
  /// F3: distinct m, n with m a = n a.
  std::optional<Word> m, n;
  std::size_t checked = 0;
  std::string note;
};

struct FlatnessReport {
  CriterionReport f1, f2, f3;
  std::size_t search_len = 0;
  std::size_t trunc_len = 0;
  /// no if a criterion fails; yes if all hold (possibly at bound).
  Decision flat() const;
};

FlatnessReport check_flat(const FiniteLeftMSet& a, std::size_t search_len);
/// Candidates c range over the elements within trunc_len + search_len.
FlatnessReport check_flat(const SymbolicMSet& a, std::size_t search_len);

}  // namespace montop
