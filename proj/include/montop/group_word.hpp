#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "montop/presentation.hpp"
#include "montop/word.hpp"

namespace montop {

struct GroupLetter {
  Letter gen = 0;
  bool inverse = false;
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
  friend auto operator<=>(const GroupLetter&, const GroupLetter&) = default;
};

/// A freely reduced word in the free group on a monoid's generators.
class GroupWord {
 public:
  GroupWord() = default;
  /// Freely reduces its input.
  explicit GroupWord(const std::vector<GroupLetter>& letters);
  /// The image of a monoid word.
  static GroupWord positive(const Word& w);

  const std::vector<GroupLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_positive() const;

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);

  /// Split as P * N^-1 with P, N positive, if the reduced word has that shape.
  std::optional<std::pair<Word, Word>> split_positive_negative() const;
  /// The positive word, if there are no inverse letters.
  std::optional<Word> as_positive() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<GroupLetter> letters_;
};

/// All reduced words of length <= max_len over `rank` generators, ordered by
/// length, then lexicographically with g < g^-1 < next generator.
std::vector<GroupWord> all_group_words(std::size_t rank, std::size_t max_len);

/// Group words are written with generator names, a trailing ' marking an
/// inverse ("ba'b'"); "1" is the identity.
GroupWord parse_group_word(const MonoidPresentation& p, std::string_view text);
std::string format_group_word(const MonoidPresentation& p, const GroupWord& g);

}  // namespace montop
