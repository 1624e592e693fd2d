#include "montop/word.hpp"

#include <algorithm>

namespace montop {

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  const std::size_t n = std::min(len, letters_.size() - pos);
  return Word(letters_.begin() + pos, letters_.begin() + pos + n);
}

Word Word::replaced(std::size_t pos, std::size_t len, const Word& with) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() - len + with.size());
  out.insert(out.end(), letters_.begin(), letters_.begin() + pos);
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), letters_.begin() + pos + len, letters_.end());
  return Word(std::move(out));
}

bool Word::matches_at(std::size_t pos, const Word& pattern) const {
  if (pos + pattern.size() > letters_.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters_.begin() + pos);
}

std::size_t Word::find(const Word& pattern, std::size_t from) const {
  if (pattern.size() > letters_.size()) return npos;
  for (std::size_t i = from; i + pattern.size() <= letters_.size(); ++i) {
    if (matches_at(i, pattern)) return i;
  }
  return npos;
}

std::size_t Word::alphabet_extent() const {
  std::size_t m = 0;
  for (Letter g : letters_) m = std::max<std::size_t>(m, g + 1u);
  return m;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

std::strong_ordering shortlex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a <=> b;
}

std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && rank > 0; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < rank; ++g) {
        Word w = out[i];
        w.push_back(static_cast<Letter>(g));
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Letter g : w) {
    h ^= g + 1u;
    h *= 0x100000001b3ull;
  }
  return h ^ w.size();
}

}  // namespace montop
