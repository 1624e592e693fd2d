#include "montop/group_word.hpp"

#include <cctype>

#include "montop/error.hpp"

namespace montop {

GroupWord::GroupWord(const std::vector<GroupLetter>& letters) {
  for (const auto& x : letters) {
    if (!letters_.empty() && letters_.back().gen == x.gen &&
        letters_.back().inverse != x.inverse) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

GroupWord GroupWord::positive(const Word& w) {
  std::vector<GroupLetter> out;
  for (Letter g : w) out.push_back({g, false});
  return GroupWord(out);
}

bool GroupWord::is_positive() const {
  for (const auto& x : letters_)
    if (x.inverse) return false;
  return true;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->gen, !it->inverse});
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<GroupLetter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(all);
}

std::optional<std::pair<Word, Word>> GroupWord::split_positive_negative() const {
  Word pos, neg;
  std::size_t i = 0;
  while (i < letters_.size() && !letters_[i].inverse) pos.push_back(letters_[i++].gen);
  std::vector<Letter> tail;
  while (i < letters_.size() && letters_[i].inverse) tail.push_back(letters_[i++].gen);
  if (i != letters_.size()) return std::nullopt;
  // N^-1 = tail, so N is tail reversed.
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) neg.push_back(*it);
  return std::make_pair(pos, neg);
}

std::optional<Word> GroupWord::as_positive() const {
  if (!is_positive()) return std::nullopt;
  Word w;
  for (const auto& x : letters_) w.push_back(x.gen);
  return w;
}

std::vector<GroupWord> all_group_words(std::size_t rank, std::size_t max_len) {
  std::vector<GroupWord> out{GroupWord{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len && rank > 0; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t g = 0; g < rank; ++g) {
        for (bool inv : {false, true}) {
          const GroupLetter x{static_cast<Letter>(g), inv};
          const auto& ls = out[i].letters();
          if (!ls.empty() && ls.back().gen == x.gen && ls.back().inverse != inv)
            continue;
          std::vector<GroupLetter> next = ls;
          next.push_back(x);
          out.emplace_back(next);
        }
      }
    }
    begin = end;
  }
  return out;
}

GroupWord parse_group_word(const MonoidPresentation& p, std::string_view text) {
  std::vector<GroupLetter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t best = 0;
    Letter best_g = 0;
    for (std::size_t g = 0; g < p.rank(); ++g) {
      const std::string& n = p.generators()[g];
      if (n.size() > best && text.substr(i, n.size()) == n) {
        best = n.size();
        best_g = static_cast<Letter>(g);
      }
    }
    if (best == 0) {
      if (text[i] == '1') {
        ++i;
        continue;
      }
      throw ParseError(1, i + 1, std::string("unknown symbol '") + text[i] + "'");
    }
    i += best;
    bool inv = false;
    while (i < text.size() && text[i] == '\'') {
      inv = !inv;
      ++i;
    }
    out.push_back({best_g, inv});
  }
  return GroupWord(out);
}

std::string format_group_word(const MonoidPresentation& p, const GroupWord& g) {
  if (g.empty()) return "1";
  std::string out;
  bool spaced = false;
  for (const auto& n : p.generators())
    if (n.size() != 1) spaced = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0 && spaced) out += ' ';
    out += p.name(g.letters()[i].gen);
    if (g.letters()[i].inverse) out += '\'';
  }
  return out;
}

}  // namespace montop
