#include "montop/points.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "montop/word_oracle.hpp"

namespace montop {

// ---------------------------------------------------------------------------
// Posets

DivisibilityPoset::DivisibilityPoset(std::vector<std::string> names,
                                     std::vector<std::vector<bool>> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  const std::size_t n = names_.size();
  if (leq_.size() != n) throw InputError("order matrix size differs from element count");
  for (const auto& row : leq_)
    if (row.size() != n) throw InputError("order matrix is not square");
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq_[x][x]) throw InputError("order is not reflexive at " + names_[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq_[x][y] && leq_[y][x])
        throw InputError("order is not antisymmetric: " + names_[x] + ", " + names_[y]);
      if (!leq_[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (leq_[y][z] && !leq_[x][z])
          throw InputError("order is not transitive at " + names_[x] + " <= " + names_[y] +
                           " <= " + names_[z]);
    }
  }
}

DivisibilityPoset DivisibilityPoset::from_order(std::vector<std::string> names,
                                                std::vector<std::vector<bool>> leq) {
  return DivisibilityPoset(std::move(names), std::move(leq));
}

DivisibilityPoset DivisibilityPoset::of_presentation(const MonoidPresentation& p,
                                                     std::size_t max_len,
                                                     std::size_t unit_bound) {
  const auto oracle = make_oracle(p);
  const Word one = oracle->canonical(Word{});
  const auto short_words = elements_within(*oracle, unit_bound);
  for (Letter g = 0; g < p.rank(); ++g)
    for (const Word& w : short_words)
      if (oracle->canonical(concat(Word{g}, w)) == one)
        throw GuardError("generator " + p.name(g) + " is a unit, so Y differs from M");

  const auto elems = elements_within(*oracle, max_len);
  if (elems.size() > kIdealGuard)
    throw GuardError("truncated poset has " + std::to_string(elems.size()) +
                     " elements, above the guard of " + std::to_string(kIdealGuard));
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::size_t n = elems.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (const Word& m : elems)
      if (auto it = index.find(oracle->canonical(concat(elems[x], m))); it != index.end())
        leq[x][it->second] = true;
  std::vector<std::string> names;
  for (const Word& w : elems) names.push_back(p.format(w));
  return DivisibilityPoset(std::move(names), std::move(leq));
}

DivisibilityPoset DivisibilityPoset::of_divisors(std::uint64_t n) {
  if (n == 0) throw InputError("divisor poset needs n >= 1");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divs.push_back(d);
    if (d * d != n) divs.push_back(n / d);
  }
  std::sort(divs.begin(), divs.end());
  if (divs.size() > kIdealGuard) throw GuardError("too many divisors");
  std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    names.push_back(std::to_string(divs[i]));
    for (std::size_t j = 0; j < divs.size(); ++j) leq[i][j] = divs[j] % divs[i] == 0;
  }
  return DivisibilityPoset(std::move(names), std::move(leq));
}

bool is_ideal(const DivisibilityPoset& p, const PosetIdeal& f) {
  if (f.empty()) return false;
  std::vector<bool> in(p.size(), false);
  for (std::size_t x : f) {
    if (x >= p.size()) return false;
    in[x] = true;
  }
  for (std::size_t y : f)
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.leq(x, y) && !in[x]) return false;
  for (std::size_t x : f)
    for (std::size_t y : f) {
      bool bounded = false;
      for (std::size_t z : f) bounded = bounded || (p.leq(x, z) && p.leq(y, z));
      if (!bounded) return false;
    }
  return true;
}

std::vector<PosetIdeal> ideal_enumerate(const DivisibilityPoset& p, std::size_t guard) {
  if (p.size() > guard)
    throw GuardError("poset has " + std::to_string(p.size()) + " elements, above the guard of " +
                     std::to_string(guard));
  std::vector<PosetIdeal> out;
  for (std::size_t top = 0; top < p.size(); ++top) {
    PosetIdeal f;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.leq(x, top)) f.push_back(x);
    if (!is_ideal(p, f)) throw std::logic_error("principal downset failed the ideal axioms");
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const PosetIdeal& a, const PosetIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Infinite words

namespace {

Word primitive_root(const Word& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && v[i] != v[k]) k = fail[k];
    if (v[i] == v[k]) ++k;
    fail[i + 1] = k;
  }
  const std::size_t p = n - fail[n];
  return n % p == 0 ? v.substr(0, p) : v;
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// floor(m * golden ratio)
std::uint64_t floor_phi(std::uint64_t m) { return (m + isqrt(5 * m * m)) / 2; }

}  // namespace

EventuallyPeriodicWord::EventuallyPeriodicWord(Word preperiod, Word period)
    : u_(std::move(preperiod)), v_(std::move(period)) {
  if (v_.empty()) throw InputError("period must be nonempty");
  v_ = primitive_root(v_);
  // u x (y x)^w = u (x y)^w: absorb trailing letters of u into the period.
  while (!u_.empty() && u_.back() == v_.back()) {
    std::vector<Letter> rot{v_.back()};
    rot.insert(rot.end(), v_.begin(), v_.end() - 1);
    v_ = Word(std::move(rot));
    u_.pop_back();
  }
}

Letter EventuallyPeriodicWord::at(std::size_t i) const {
  if (i < u_.size()) return u_[i];
  return v_[(i - u_.size()) % v_.size()];
}

Letter FibonacciStream::at(std::size_t i) const {
  if (i > 1'000'000'000) throw GuardError("Fibonacci stream index too large");
  const std::uint64_t n = i;
  return 2 + floor_phi(n + 1) - floor_phi(n + 2) == 1 ? 1 : 0;
}

Letter PointDescriptor::at(std::size_t i) const {
  return std::visit(
      [i](const auto& k) -> Letter {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Word>) {
          if (i >= k.size()) throw InputError("index beyond a finite point");
          return k[i];
        } else {
          return k.at(i);
        }
      },
      kind);
}

Word PointDescriptor::prefix(std::size_t n) const {
  if (const auto* w = std::get_if<Word>(&kind)) return w->substr(0, std::min(n, w->size()));
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

PointDescriptor parse_point(const MonoidPresentation& p, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "fib") {
    if (p.rank() < 2) throw InputError("the Fibonacci point needs two generators");
    return {FibonacciStream{}};
  }
  if (auto open = text.find('('); open != std::string_view::npos) {
    const auto close = text.find(")^w", open);
    if (close == std::string_view::npos || close + 3 != text.size())
      throw InputError("periodic point must look like u(v)^w");
    const auto pre = text.substr(0, open);
    const Word u = pre.empty() ? Word{} : p.parse_word(pre);
    const Word v = p.parse_word(text.substr(open + 1, close - open - 1));
    if (v.empty()) throw InputError("period must be nonempty");
    return {EventuallyPeriodicWord(u, v)};
  }
  if (!text.empty() && text.back() == '*') text.remove_suffix(1);
  if (text.empty()) return {Word{}};
  return {p.parse_word(text)};
}

std::string format_point(const MonoidPresentation& p, const PointDescriptor& pt) {
  if (const auto* w = std::get_if<Word>(&pt.kind)) return p.format(*w);
  if (const auto* e = std::get_if<EventuallyPeriodicWord>(&pt.kind))
    return (e->preperiod().empty() ? std::string() : p.format(e->preperiod())) + "(" +
           p.format(e->period()) + ")^w";
  return "fib";
}

const char* to_string(EndoKind k) {
  switch (k) {
    case EndoKind::conjugate_of_monoid:
      return "conjugate-of-M";
    case EndoKind::infinite_cyclic:
      return "infinite-cyclic";
    case EndoKind::trivial:
      return "trivial";
  }
  return "trivial";
}

namespace {

void check_letters(const PointDescriptor& pt, std::size_t k) {
  auto check = [k](const Word& w) {
    if (w.alphabet_extent() > k) throw InputError("point uses a letter outside the alphabet");
  };
  if (const auto* w = std::get_if<Word>(&pt.kind)) check(*w);
  if (const auto* e = std::get_if<EventuallyPeriodicWord>(&pt.kind)) {
    check(e->preperiod());
    check(e->period());
  }
  if (std::holds_alternative<FibonacciStream>(pt.kind) && k < 2)
    throw InputError("the Fibonacci point needs two generators");
}

bool is_power_of(const Word& h, const Word& v) {
  if (h.size() % v.size() != 0) return false;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != v[i % v.size()]) return false;
  return true;
}

}  // namespace

EndoClassification endo_monoid_free(const PointDescriptor& pt, std::size_t k) {
  check_letters(pt, k);
  EndoClassification out;
  if (const auto* w = std::get_if<Word>(&pt.kind)) {
    out.kind = EndoKind::conjugate_of_monoid;
    out.conjugator = *w;
  } else if (const auto* e = std::get_if<EventuallyPeriodicWord>(&pt.kind)) {
    out.kind = EndoKind::infinite_cyclic;
    const GroupWord u = GroupWord::positive(e->preperiod());
    out.generator = u * GroupWord::positive(e->period()) * u.inverse();
  } else {
    out.kind = EndoKind::trivial;
  }
  return out;
}

bool fixes_prefix(const GroupWord& g, const PointDescriptor& pt, std::size_t n) {
  const auto split = g.split_positive_negative();
  if (!split) return false;
  const auto& [pos, neg] = *split;
  if (const auto* w = std::get_if<Word>(&pt.kind)) {
    if (!w->starts_with(neg)) return false;
    return concat(pos, w->substr(neg.size())) == *w;
  }
  for (std::size_t i = 0; i < neg.size(); ++i)
    if (pt.at(i) != neg[i]) return false;
  // g y = pos . y[|neg|..]
  for (std::size_t i = 0; i < n; ++i) {
    const Letter lhs = i < pos.size() ? pos[i] : pt.at(neg.size() + i - pos.size());
    if (lhs != pt.at(i)) return false;
  }
  return true;
}

Decision point_membership(const GroupWord& g, const PointDescriptor& pt, PointSet which,
                          std::size_t bound) {
  if (which == PointSet::A) {
    const auto split = g.split_positive_negative();
    if (!split) return Decision::no;
    const Word& neg = split->second;
    if (const auto* w = std::get_if<Word>(&pt.kind)) return decided(w->starts_with(neg));
    for (std::size_t i = 0; i < neg.size(); ++i)
      if (pt.at(i) != neg[i]) return Decision::no;
    return Decision::yes;
  }
  if (const auto* w = std::get_if<Word>(&pt.kind)) {
    const GroupWord c = GroupWord::positive(*w);
    return decided((c.inverse() * g * c).is_positive());
  }
  if (const auto* e = std::get_if<EventuallyPeriodicWord>(&pt.kind)) {
    const GroupWord u = GroupWord::positive(e->preperiod());
    const GroupWord h = u.inverse() * g * u;
    if (auto pos = h.as_positive()) return decided(is_power_of(*pos, e->period()));
    if (auto neg = h.inverse().as_positive()) return decided(is_power_of(*neg, e->period()));
    return Decision::no;
  }
  // g y = y with g != 1 would make y eventually periodic.
  (void)bound;
  return decided(g.empty());
}

MyAyComparison check_My_equals_Ay(const PointDescriptor& pt, std::size_t k, std::size_t bound) {
  check_letters(pt, k);
  MyAyComparison out;
  out.bound = bound;
  for (const GroupWord& g : all_group_words(k, bound)) {
    if (point_membership(g, pt, PointSet::A, bound) != point_membership(g, pt, PointSet::M, bound)) {
      out.equal = Decision::no;
      out.witness = g;
      return out;
    }
  }
  // Closed forms: A_y contains M; M_y = w M w^-1, a cyclic group, or trivial.
  if (const auto* w = std::get_if<Word>(&pt.kind)) {
    out.equal = decided(w->empty());
  } else if (std::holds_alternative<EventuallyPeriodicWord>(pt.kind)) {
    out.equal = decided(k == 1);
  } else {
    out.equal = Decision::no;
  }
  return out;
}

}  // namespace montop
