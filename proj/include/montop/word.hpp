#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace montop {

/// Index of a generator in its presentation's declared order.
using Letter = std::uint16_t;

/// A finite word over generator indices; the empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  template <class It>
  Word(It first, It last) : letters_(first, last) {}

  static Word power(Letter g, std::size_t n) {
    return Word(std::vector<Letter>(n, g));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter g) { letters_.push_back(g); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  Word substr(std::size_t pos, std::size_t len = npos) const;
  /// Replace `len` letters at `pos` by `with`.
  Word replaced(std::size_t pos, std::size_t len, const Word& with) const;
  /// Offset of the first occurrence of `pattern` at or after `from`, or npos.
  std::size_t find(const Word& pattern, std::size_t from = 0) const;
  bool matches_at(std::size_t pos, const Word& pattern) const;
  bool starts_with(const Word& prefix) const { return matches_at(0, prefix); }

  /// Largest letter plus one (0 for the empty word).
  std::size_t alphabet_extent() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Plain lexicographic order on the letter sequence (used for containers).
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Letter> letters_;
};

/// Letters of `a` followed by letters of `b`.
Word concat(const Word& a, const Word& b);

/// Shortlex order: shorter words first, ties broken lexicographically by
/// generator index.
std::strong_ordering shortlex_compare(const Word& a, const Word& b);
inline bool shortlex_less(const Word& a, const Word& b) {
  return shortlex_compare(a, b) < 0;
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
};

/// Every word of length <= max_len over `rank` letters, in shortlex order.
std::vector<Word> all_words(std::size_t rank, std::size_t max_len);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace montop
