#include "montop/rewriting.hpp"

#include <algorithm>
#include <deque>

namespace montop {

namespace {

RewriteStep inverted(RewriteStep s) {
  s.inverse = !s.inverse;
  return s;
}

RewritePath inverted(const RewritePath& p) {
  RewritePath out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(inverted(*it));
  return out;
}

void append(RewritePath& to, const RewritePath& from) {
  to.insert(to.end(), from.begin(), from.end());
}

constexpr std::size_t kMaxExpandedSteps = 1u << 22;

}  // namespace

std::vector<Rule> RewritingSystem::rules() const {
  std::vector<Rule> out;
  out.reserve(active_.size());
  for (std::size_t id : active_) out.push_back(history_[id]);
  return out;
}

void RewritingSystem::index_rules() {
  by_last_.assign(rank_, {});
  for (std::size_t id : active_) by_last_[history_[id].lhs.back()].push_back(id);
}

Word RewritingSystem::normal_form(const Word& w, RewritePath* path) const {
  // Stack-based leftmost-innermost rewriting: `done` is always irreducible,
  // so a redex can only appear as a suffix right after a push.
  std::vector<Letter> done;
  std::vector<Letter> todo(w.begin(), w.end());
  std::reverse(todo.begin(), todo.end());
  done.reserve(w.size());
  while (!todo.empty()) {
    const Letter g = todo.back();
    todo.pop_back();
    done.push_back(g);
    for (std::size_t id : by_last_[g]) {
      const Rule& r = history_[id];
      const std::size_t n = r.lhs.size();
      if (n > done.size()) continue;
      if (!std::equal(r.lhs.begin(), r.lhs.end(), done.end() - n)) continue;
      const std::size_t at = done.size() - n;
      if (path) path->push_back({at, id, false, false});
      done.resize(at);
      for (auto it = r.rhs.end(); it != r.rhs.begin();) todo.push_back(*--it);
      break;
    }
  }
  return Word(std::move(done));
}

bool RewritingSystem::is_irreducible(const Word& w) const {
  for (std::size_t id : active_)
    if (w.find(history_[id].lhs) != Word::npos) return false;
  return true;
}

Word RewritingSystem::apply(const Word& w, const RewriteStep& s) const {
  const Word* from;
  const Word* to;
  if (s.axiom) {
    const Relation& r = relations_.at(s.index);
    from = s.inverse ? &r.rhs : &r.lhs;
    to = s.inverse ? &r.lhs : &r.rhs;
  } else {
    const Rule& r = history_.at(s.index);
    from = s.inverse ? &r.rhs : &r.lhs;
    to = s.inverse ? &r.lhs : &r.rhs;
  }
  if (!w.matches_at(s.offset, *from))
    throw InputError("rewrite step does not match the word");
  return w.replaced(s.offset, from->size(), *to);
}

void RewritingSystem::expand_into(const RewriteStep& step, std::size_t shift,
                                  bool invert, RewritePath& out) const {
  if (out.size() > kMaxExpandedSteps)
    throw GuardError("derivation too long to expand");
  RewriteStep s = step;
  s.offset += shift;
  if (invert) s.inverse = !s.inverse;
  if (s.axiom) {
    out.push_back(s);
    return;
  }
  const RewritePath& d = history_.at(s.index).derivation;
  if (!s.inverse) {
    for (const auto& inner : d) expand_into(inner, s.offset, false, out);
  } else {
    for (auto it = d.rbegin(); it != d.rend(); ++it)
      expand_into(*it, s.offset, true, out);
  }
}

RewritePath RewritingSystem::expand(const RewritePath& path) const {
  RewritePath out;
  for (const auto& s : path) expand_into(s, 0, false, out);
  return out;
}

// Completion state. Equations waiting to be oriented carry a path from their
// first word to their second.
class Completion {
 public:
  Completion(std::size_t rank, std::span<const Relation> relations,
             CompletionBounds bounds) {
    rs_.rank_ = rank;
    rs_.relations_.assign(relations.begin(), relations.end());
    rs_.bounds_ = bounds;
    rs_.by_last_.assign(rank, {});
    for (std::size_t i = 0; i < relations.size(); ++i)
      pending_.push_back({relations[i].lhs, relations[i].rhs,
                          {RewriteStep{0, i, true, false}}});
  }

  RewritingSystem run() {
    drain();
    while (!stopped_) {
      if (!next_pair()) break;
      drain();
    }
    rs_.status_ = partial_ ? CompletionStatus::partial
                           : CompletionStatus::confluent;
    rs_.index_rules();
    return std::move(rs_);
  }

 private:
  struct Equation {
    Word u;
    Word v;
    RewritePath path;  // u -> v
  };

  void drain() {
    while (!pending_.empty() && !stopped_) {
      Equation e = std::move(pending_.front());
      pending_.pop_front();
      add(std::move(e));
    }
  }

  void add(Equation e) {
    RewritePath pu, pv;
    Word u = rs_.normal_form(e.u, &pu);
    Word v = rs_.normal_form(e.v, &pv);
    if (u == v) return;
    RewritePath path = inverted(pu);
    append(path, e.path);
    append(path, pv);
    if (shortlex_less(u, v)) {
      std::swap(u, v);
      path = inverted(path);
    }
    if (u.size() > rs_.bounds_.max_len) {
      partial_ = true;
      return;
    }
    if (rs_.active_.size() >= rs_.bounds_.max_rules) {
      partial_ = true;
      stopped_ = true;
      return;
    }
    const std::size_t id = rs_.history_.size();
    rs_.history_.push_back({u, v, std::move(path)});

    // Retire rules that the new one makes reducible and queue them again.
    std::vector<std::size_t> keep;
    for (std::size_t old : rs_.active_) {
      const Rule& r = rs_.history_[old];
      if (r.lhs.find(u) != Word::npos || r.rhs.find(u) != Word::npos) {
        pending_.push_back({r.lhs, r.rhs, {RewriteStep{0, old, false, false}}});
      } else {
        keep.push_back(old);
      }
    }
    keep.push_back(id);
    rs_.active_ = std::move(keep);
    rs_.index_rules();
  }

  // Critical pairs of one ordered pair of rules: overlaps of a suffix of
  // lhs(i) with a prefix of lhs(j), and occurrences of lhs(j) inside lhs(i).
  void overlaps(std::size_t i, std::size_t j) {
    const Rule& a = rs_.history_[i];
    const Rule& b = rs_.history_[j];
    const std::size_t na = a.lhs.size(), nb = b.lhs.size();
    for (std::size_t len = 1; len < std::min(na, nb); ++len) {
      if (!std::equal(a.lhs.end() - len, a.lhs.end(), b.lhs.begin())) continue;
      const Word w = concat(a.lhs, b.lhs.substr(len));
      const std::size_t at = na - len;
      pending_.push_back({concat(a.rhs, b.lhs.substr(len)),
                          w.replaced(at, nb, b.rhs),
                          {RewriteStep{0, i, false, true},
                           RewriteStep{at, j, false, false}}});
    }
    if (i != j && nb <= na) {
      for (std::size_t at = a.lhs.find(b.lhs); at != Word::npos;
           at = a.lhs.find(b.lhs, at + 1)) {
        pending_.push_back({a.rhs, a.lhs.replaced(at, nb, b.rhs),
                            {RewriteStep{0, i, false, true},
                             RewriteStep{at, j, false, false}}});
      }
    }
  }

  // Rules are processed in creation order; each is overlapped with every
  // active rule created no later than itself.
  bool next_pair() {
    while (cursor_ < rs_.history_.size()) {
      const std::size_t i = cursor_++;
      if (std::find(rs_.active_.begin(), rs_.active_.end(), i) == rs_.active_.end())
        continue;
      for (std::size_t j : rs_.active_) {
        if (j > i) continue;
        overlaps(i, j);
        if (i != j) overlaps(j, i);
      }
      return true;
    }
    return false;
  }

  RewritingSystem rs_;
  std::deque<Equation> pending_;
  std::size_t cursor_ = 0;
  bool partial_ = false;
  bool stopped_ = false;
};

RewritingSystem complete(std::size_t rank, std::span<const Relation> relations,
                         CompletionBounds bounds) {
  return Completion(rank, relations, bounds).run();
}

RewritingSystem knuth_bendix(const MonoidPresentation& p, std::size_t max_rules,
                             std::size_t max_len) {
  std::size_t longest = 0;
  for (const auto& r : p.relations())
    longest = std::max({longest, r.lhs.size(), r.rhs.size()});
  if (max_rules < p.relations().size())
    throw InputError("max_rules is smaller than the number of relations");
  if (max_len < longest)
    throw InputError("max_len is shorter than the longest relation side");
  return complete(p.rank(), p.relations(), {max_rules, max_len});
}

Word normal_form(const RewritingSystem& rs, const Word& w) {
  return rs.normal_form(w);
}

Decision words_equal(const RewritingSystem& rs, const Word& a, const Word& b) {
  if (rs.normal_form(a) == rs.normal_form(b)) return Decision::yes;
  return rs.confluent() ? Decision::no : Decision::unknown;
}

std::vector<Word> enumerate_elements(const RewritingSystem& rs,
                                     std::size_t max_len) {
  // Every prefix of an irreducible word is irreducible, so extending the
  // previous level letter by letter in generator order yields shortlex order.
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < rs.rank(); ++g) {
        Word w = out[i];
        w.push_back(static_cast<Letter>(g));
        if (rs.normal_form(w) == w) out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
    if (level_begin == out.size()) break;
  }
  return out;
}

Word replay(const MonoidPresentation& p, const Word& from,
            const RewritePath& path) {
  Word w = from;
  for (const auto& s : path) {
    if (!s.axiom) throw InputError("replay expects relation steps only");
    const Relation& r = p.relations().at(s.index);
    const Word& a = s.inverse ? r.rhs : r.lhs;
    const Word& b = s.inverse ? r.lhs : r.rhs;
    if (!w.matches_at(s.offset, a))
      throw InputError("certificate step does not apply");
    w = w.replaced(s.offset, a.size(), b);
  }
  return w;
}

bool critical_pairs_resolve(const RewritingSystem& rs) {
  const auto rules = rs.rules();
  for (const auto& a : rules) {
    for (const auto& b : rules) {
      const std::size_t na = a.lhs.size(), nb = b.lhs.size();
      for (std::size_t len = 1; len < std::min(na, nb); ++len) {
        if (!std::equal(a.lhs.end() - len, a.lhs.end(), b.lhs.begin())) continue;
        const Word x = concat(a.rhs, b.lhs.substr(len));
        const Word y = concat(a.lhs.substr(0, na - len), b.rhs);
        if (rs.normal_form(x) != rs.normal_form(y)) return false;
      }
      if (&a != &b) {
        for (std::size_t at = a.lhs.find(b.lhs); at != Word::npos;
             at = a.lhs.find(b.lhs, at + 1)) {
          if (rs.normal_form(a.rhs) !=
              rs.normal_form(a.lhs.replaced(at, nb, b.rhs)))
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace montop
