#include "montop/word_oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "montop/torus_knot.hpp"

namespace montop {

Decision WordOracle::equal(const Word& a, const Word& b) const {
  if (canonical(a) == canonical(b)) return Decision::yes;
  return exact() ? Decision::no : Decision::unknown;
}

RewritingOracle::RewritingOracle(RewritingSystem rs, std::vector<Letter> to_internal)
    : rs_(std::move(rs)), to_internal_(std::move(to_internal)) {
  if (to_internal_.empty()) return;
  to_external_.resize(to_internal_.size());
  for (std::size_t g = 0; g < to_internal_.size(); ++g)
    to_external_[to_internal_[g]] = static_cast<Letter>(g);
}

Word RewritingOracle::canonical(const Word& w) const {
  if (to_internal_.empty()) return rs_.normal_form(w);
  Word x;
  for (Letter g : w) x.push_back(to_internal_.at(g));
  Word y;
  for (Letter g : rs_.normal_form(x)) y.push_back(to_external_[g]);
  return y;
}

std::string RewritingOracle::method() const {
  return rs_.confluent() ? "rewriting:confluent" : "rewriting:partial";
}

std::vector<std::optional<Letter>> adjoined_inverses(const MonoidPresentation& p) {
  const std::size_t n = p.rank();
  std::vector<std::optional<Letter>> inverse_of(n);
  auto is_unit_rel = [&](Letter x, Letter y) {
    for (const auto& r : p.relations())
      if ((r.lhs == Word{x, y} && r.rhs.empty()) || (r.rhs == Word{x, y} && r.lhs.empty()))
        return true;
    return false;
  };
  std::vector<bool> taken(n, false);
  for (Letter y = 0; y < n; ++y)
    for (Letter x = 0; x < y; ++x)
      if (!taken[x] && !taken[y] && !inverse_of[x] && is_unit_rel(x, y) && is_unit_rel(y, x)) {
        inverse_of[y] = x;
        taken[x] = taken[y] = true;
        break;
      }
  return inverse_of;
}

TorusKnotOracle::TorusKnotOracle(unsigned k, unsigned l,
                                 std::vector<LetterImage> letters)
    : k_(k), l_(l), letters_(std::move(letters)) {
  if (k < 2 || l < 2) throw InputError("torus knot parameters need k, l >= 2");
  bool have_a = false, have_b = false;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& x = letters_[i];
    if (x.base > 1) throw InputError("torus letter image must be a or b");
    const auto g = static_cast<Letter>(i);
    if (!x.inverse && x.base == 0 && !have_a) a_ = g, have_a = true;
    if (!x.inverse && x.base == 1 && !have_b) b_ = g, have_b = true;
    if (x.inverse && x.base == 0 && !a_inverse_) a_inverse_ = g;
  }
  if (!have_a || !have_b) throw InputError("torus oracle needs letters a and b");
}

Word TorusKnotOracle::canonical(const Word& w) const {
  std::int64_t deg = 0;
  HClass h(k_, l_);
  for (Letter g : w) {
    const auto& x = letters_.at(g);
    const std::int64_t d = x.base == 0 ? l_ : k_;
    deg += x.inverse ? -d : d;
    h.push(x.base, x.inverse ? -1 : 1);
  }
  const std::int64_t kl = static_cast<std::int64_t>(k_) * l_;
  const std::int64_t rest = deg - static_cast<std::int64_t>(tk_delta(h, k_, l_));
  if (rest % kl != 0) throw std::logic_error("torus degree not congruent to delta");
  const std::int64_t level = rest / kl;

  Word out;
  if (level >= 0) {
    for (std::int64_t i = 0; i < level * k_; ++i) out.push_back(a_);
  } else {
    if (!a_inverse_) throw std::logic_error("negative level without a^-1");
    for (std::int64_t i = 0; i < -level * k_; ++i) out.push_back(*a_inverse_);
  }
  for (const auto& s : h.syllables())
    for (unsigned i = 0; i < s.power; ++i) out.push_back(s.gen == 0 ? a_ : b_);
  return out;
}

std::optional<TorusShape> recognize_torus_knot(const MonoidPresentation& p) {
  const std::size_t n = p.rank();
  const auto inverse_of = adjoined_inverses(p);
  std::vector<bool> used(p.relations().size(), false);
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    const auto& r = p.relations()[i];
    const Word& w = r.lhs.empty() ? r.rhs : r.lhs;
    if (!(r.lhs.empty() || r.rhs.empty()) || w.size() != 2) continue;
    const Letter x = w[0], y = w[1];
    if ((inverse_of[y] && *inverse_of[y] == x) || (inverse_of[x] && *inverse_of[x] == y))
      used[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) rest.push_back(i);
  if (rest.size() != 1) return std::nullopt;
  const Relation& r = p.relations()[rest.front()];
  auto single_power = [](const Word& w) -> std::optional<std::pair<Letter, unsigned>> {
    if (w.size() < 2) return std::nullopt;
    for (Letter g : w)
      if (g != w[0]) return std::nullopt;
    return std::make_pair(w[0], static_cast<unsigned>(w.size()));
  };
  const auto lhs = single_power(r.lhs), rhs = single_power(r.rhs);
  if (!lhs || !rhs || lhs->first == rhs->first) return std::nullopt;

  std::vector<Letter> base;
  for (Letter g = 0; g < n; ++g)
    if (!inverse_of[g]) base.push_back(g);
  if (base.size() != 2) return std::nullopt;
  const Letter ga = lhs->first, gb = rhs->first;
  if (std::find(base.begin(), base.end(), ga) == base.end() ||
      std::find(base.begin(), base.end(), gb) == base.end())
    return std::nullopt;

  TorusShape shape;
  shape.k = lhs->second;
  shape.l = rhs->second;
  shape.letters.resize(n);
  for (Letter g = 0; g < n; ++g) {
    const Letter root = inverse_of[g] ? *inverse_of[g] : g;
    shape.letters[g] = {static_cast<Letter>(root == ga ? 0 : 1),
                        inverse_of[g].has_value()};
  }
  return shape;
}

std::shared_ptr<const WordOracle> make_oracle(const MonoidPresentation& p,
                                              CompletionBounds bounds) {
  if (auto shape = recognize_torus_knot(p))
    return std::make_shared<TorusKnotOracle>(shape->k, shape->l,
                                             std::move(shape->letters));
  std::size_t longest = 0;
  for (const auto& r : p.relations())
    longest = std::max({longest, r.lhs.size(), r.rhs.size()});
  bounds.max_len = std::max(bounds.max_len, longest);
  bounds.max_rules = std::max(bounds.max_rules, p.relations().size());

  // Adjoined inverses complete far better when each g' sits right after g in
  // the term order: then g ... g' can always be brought together.
  const auto inverse_of = adjoined_inverses(p);
  std::vector<Letter> order;
  for (Letter g = 0; g < p.rank(); ++g) {
    if (inverse_of[g]) continue;
    order.push_back(g);
    for (Letter h = g + 1; h < p.rank(); ++h)
      if (inverse_of[h] && *inverse_of[h] == g) order.push_back(h);
  }
  std::vector<Letter> to_internal(p.rank());
  bool identity = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    to_internal[order[i]] = static_cast<Letter>(i);
    identity = identity && order[i] == i;
  }
  if (identity)
    return std::make_shared<RewritingOracle>(complete(p.rank(), p.relations(), bounds));
  std::vector<Relation> rels;
  auto relabel = [&](const Word& w) {
    Word x;
    for (Letter g : w) x.push_back(to_internal[g]);
    return x;
  };
  for (const auto& r : p.relations()) rels.push_back({relabel(r.lhs), relabel(r.rhs)});
  return std::make_shared<RewritingOracle>(complete(p.rank(), rels, bounds),
                                           std::move(to_internal));
}

std::vector<Word> elements_within(const WordOracle& oracle, std::size_t max_len,
                                  const std::vector<Letter>* letters) {
  std::vector<Letter> alphabet;
  if (letters) {
    alphabet = *letters;
  } else {
    for (std::size_t g = 0; g < oracle.rank(); ++g)
      alphabet.push_back(static_cast<Letter>(g));
  }
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier{oracle.canonical(Word{})};
  seen.insert(frontier.front());
  std::vector<Word> out = frontier;
  for (std::size_t d = 0; d < max_len && !frontier.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& x : frontier) {
      for (Letter g : alphabet) {
        Word y = x;
        y.push_back(g);
        y = oracle.canonical(y);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

}  // namespace montop
