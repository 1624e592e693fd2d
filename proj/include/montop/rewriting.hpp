#pragma once

#include <span>
#include <string>
#include <vector>

#include "montop/error.hpp"
#include "montop/presentation.hpp"
#include "montop/word.hpp"

namespace montop {

/// One rewrite applied at `offset` of the current word.
///
/// When `axiom` is set, `index` names a relation of the presentation and a
/// forward step replaces its lhs by its rhs. Otherwise `index` names an entry
/// of RewritingSystem::history(). An inverse step goes rhs -> lhs.
struct RewriteStep {
  std::size_t offset = 0;
  std::size_t index = 0;
  bool axiom = false;
  bool inverse = false;
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewritePath = std::vector<RewriteStep>;

/// lhs -> rhs with lhs strictly greater in shortlex order. `derivation`
/// rewrites lhs into rhs using relations and earlier rules only.
struct Rule {
  Word lhs;
  Word rhs;
  RewritePath derivation;
};

enum class CompletionStatus { confluent, partial };

struct CompletionBounds {
  std::size_t max_rules = 200;
  std::size_t max_len = 16;
};

/// A terminating string rewriting system produced by bounded completion.
///
/// Rewriting uses leftmost-innermost reduction, which is deterministic. When
/// status() is partial, normal forms are still equal to their inputs in the
/// monoid, but two normal forms of one element may differ.
class RewritingSystem {
 public:
  std::size_t rank() const noexcept { return rank_; }
  CompletionStatus status() const noexcept { return status_; }
  bool confluent() const noexcept {
    return status_ == CompletionStatus::confluent;
  }
  const CompletionBounds& bounds() const noexcept { return bounds_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  /// Active rules, in order of creation.
  std::vector<Rule> rules() const;
  /// Every rule ever created, including ones later retired by
  /// interreduction. Derivations refer to these indices.
  const std::vector<Rule>& history() const noexcept { return history_; }

  /// Irreducible form of `w`; if `path` is given, the rule steps taken are
  /// appended to it.
  Word normal_form(const Word& w, RewritePath* path = nullptr) const;
  bool is_irreducible(const Word& w) const;

  /// Rewrite `path` so that it uses relation steps only.
  RewritePath expand(const RewritePath& path) const;

  /// Apply one step to `w`; throws InputError if the step does not match.
  Word apply(const Word& w, const RewriteStep& step) const;

 private:
  friend RewritingSystem complete(std::size_t, std::span<const Relation>,
                                  CompletionBounds);
  friend class Completion;

  void index_rules();
  void expand_into(const RewriteStep& step, std::size_t shift, bool invert,
                   RewritePath& out) const;

  std::size_t rank_ = 0;
  std::vector<Relation> relations_;
  std::vector<Rule> history_;
  std::vector<std::size_t> active_;
  // active rule ids keyed by the last letter of their lhs
  std::vector<std::vector<std::size_t>> by_last_;
  CompletionStatus status_ = CompletionStatus::confluent;
  CompletionBounds bounds_;
};

/// Bounded Knuth-Bendix completion under shortlex order on `rank` letters.
RewritingSystem complete(std::size_t rank, std::span<const Relation> relations,
                         CompletionBounds bounds);

/// Completion of a presentation. Requires max_rules >= |relations| and
/// max_len >= the longest relation side (InputError otherwise). Exhausting
/// either bound yields a usable system with status partial.
RewritingSystem knuth_bendix(const MonoidPresentation& p,
                             std::size_t max_rules = 200,
                             std::size_t max_len = 16);

Word normal_form(const RewritingSystem& rs, const Word& w);

/// yes/no when the system is confluent; yes or unknown otherwise.
Decision words_equal(const RewritingSystem& rs, const Word& a, const Word& b);

/// Irreducible words of length <= max_len in shortlex order.
std::vector<Word> enumerate_elements(const RewritingSystem& rs,
                                     std::size_t max_len);

/// Replays a relation-only path from `from`; returns the final word.
Word replay(const MonoidPresentation& p, const Word& from,
            const RewritePath& path);

/// Every critical pair of the active rules joins. Used to audit confluence.
bool critical_pairs_resolve(const RewritingSystem& rs);

}  // namespace montop
