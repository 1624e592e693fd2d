#include <random>
#include <set>

#include "doctest.h"
#include "montop/catalog.hpp"
#include "montop/points.hpp"
#include "montop/prime_ideals.hpp"
#include "montop/supernatural.hpp"
#include "oracles.hpp"

using namespace montop;

namespace {

// Every subset of the poset satisfying the three axioms, by exhaustion.
std::vector<std::set<std::size_t>> brute_ideals(const DivisibilityPoset& p) {
  const std::size_t n = p.size();
  REQUIRE(n <= 16);
  std::vector<std::set<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1u; };
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y)
      for (std::size_t x = 0; x < n && ok; ++x)
        if (in(y) && p.leq(x, y) && !in(x)) ok = false;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!in(x) || !in(y)) continue;
        bool bound = false;
        for (std::size_t z = 0; z < n && !bound; ++z) bound = in(z) && p.leq(x, z) && p.leq(y, z);
        ok = bound;
      }
    if (!ok) continue;
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) s.insert(i);
    out.push_back(std::move(s));
  }
  return out;
}

std::set<std::set<std::size_t>> as_sets(const std::vector<PosetIdeal>& v) {
  std::set<std::set<std::size_t>> out;
  for (const auto& f : v) out.emplace(f.begin(), f.end());
  return out;
}

std::set<std::set<std::size_t>> brute_set(const DivisibilityPoset& p) {
  const auto v = brute_ideals(p);
  return {v.begin(), v.end()};
}

// The Fibonacci word by iterating a -> ab, b -> a.
std::vector<Letter> fibonacci_by_morphism(std::size_t n) {
  std::vector<Letter> w{0};
  while (w.size() < n) {
    std::vector<Letter> next;
    for (Letter x : w) {
      next.push_back(0);
      if (x == 0) next.push_back(1);
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

// g y >= 1: some g * prefix is a positive word.
bool in_A_oracle(const GroupWord& g, const PointDescriptor& pt, std::size_t reach) {
  for (std::size_t r = 0; r <= reach; ++r) {
    const Word pre = pt.prefix(r);
    if (pre.size() < r) break;
    if ((g * GroupWord::positive(pre)).is_positive()) return true;
  }
  return false;
}

// g w lies in w M, computed by reducing g w and checking the prefix.
bool in_M_finite_oracle(const GroupWord& g, const Word& w) {
  const auto gw = (g * GroupWord::positive(w)).as_positive();
  return gw && gw->starts_with(w);
}

// g y = y on the first n letters, for infinite points.
bool fixes_oracle(const GroupWord& g, const PointDescriptor& pt, std::size_t n) {
  std::vector<GroupLetter> acc = g.letters();
  // Apply g to a long prefix; stray inverses must cancel into the prefix.
  const std::size_t reach = n + g.size();
  std::vector<GroupLetter> y;
  for (std::size_t i = 0; i < reach; ++i) y.push_back({pt.at(i), false});
  acc.insert(acc.end(), y.begin(), y.end());
  const GroupWord r(acc);
  if (!r.is_positive() || r.size() < n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (r.letters()[i].gen != pt.at(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("ideals of truncated free monoids match brute force") {
  const auto free2 = builtin_presentation("free:2");
  const auto y2 = DivisibilityPoset::of_presentation(free2, 2);
  CHECK(y2.size() == 7);
  const auto ideals = ideal_enumerate(y2);
  CHECK(ideals.size() == 7);
  CHECK(as_sets(ideals) == brute_set(y2));

  const auto chain = DivisibilityPoset::of_presentation(builtin_presentation("free:1"), 2);
  CHECK(ideal_enumerate(chain).size() == 3);
  CHECK(brute_ideals(chain).size() == 3);

  const auto y3 = DivisibilityPoset::of_presentation(free2, 3);
  const auto ideals3 = ideal_enumerate(y3);
  CHECK(ideals3.size() == 15);
  for (const auto& f : ideals3) CHECK(is_ideal(y3, f));
  for (std::size_t i = 1; i < ideals3.size(); ++i) {
    const auto& a = ideals3[i - 1];
    const auto& b = ideals3[i];
    CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
  }
}

TEST_CASE("divisor poset of 36 matches supernatural patterns") {
  const auto y = DivisibilityPoset::of_divisors(36);
  CHECK(y.size() == 9);
  const auto ideals = ideal_enumerate(y);
  CHECK(as_sets(ideals) == brute_set(y));
  // Each ideal is {n | 36 : n divides s} for a supernatural s truncated to
  // exponents at most 2 on 2 and 3.
  std::set<std::set<std::size_t>> from_sn;
  for (std::uint64_t e2 = 0; e2 <= 2; ++e2)
    for (std::uint64_t e3 = 0; e3 <= 2; ++e3) {
      const SupernaturalNumber s({2, 3}, {{false, e2}, {false, e3}});
      std::set<std::size_t> f;
      for (std::size_t i = 0; i < y.size(); ++i)
        if (sn_divides(std::stoull(y.name(i)), s)) f.insert(i);
      from_sn.insert(f);
    }
  CHECK(from_sn.size() == 9);
  CHECK(as_sets(ideals) == from_sn);
}

TEST_CASE("divisibility poset construction guards") {
  CHECK_NOTHROW(DivisibilityPoset::of_presentation(builtin_presentation("torus:2,3"), 3));
  const auto p = builtin_presentation("free:1");
  const auto lp = localization_presentation(p, Character::parse("1", 1));
  CHECK_THROWS_AS(DivisibilityPoset::of_presentation(lp.result, 2), GuardError);
  CHECK_THROWS_AS(DivisibilityPoset::from_order({"x", "y"}, {{true, true}, {true, true}}),
                  InputError);
  const auto torus = DivisibilityPoset::of_presentation(builtin_presentation("torus:2,3"), 4);
  for (const auto& f : ideal_enumerate(torus)) CHECK(is_ideal(torus, f));
}

TEST_CASE("eventually periodic words are canonical") {
  const auto p = builtin_presentation("free:2");
  auto epw = [&](const char* u, const char* v) {
    return EventuallyPeriodicWord(*u ? p.parse_word(u) : Word{}, p.parse_word(v));
  };
  const auto e = epw("b", "aa");
  CHECK(e.preperiod() == p.parse_word("b"));
  CHECK(e.period() == p.parse_word("a"));
  CHECK(epw("a", "ba") == epw("", "ab"));
  CHECK(epw("ab", "ba").preperiod() == p.parse_word("ab"));
  CHECK(epw("", "abab").period() == p.parse_word("ab"));
  CHECK(format_point(p, parse_point(p, "b(aa)^w")) == "b(a)^w");

  std::mt19937 rng(7);
  auto rand_word = [&](std::size_t lo, std::size_t hi) {
    std::vector<Letter> w(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
    for (auto& x : w) x = static_cast<Letter>(rng() % 2);
    return Word(std::move(w));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = rand_word(0, 5), v = rand_word(1, 6);
    const EventuallyPeriodicWord c(u, v);
    for (std::size_t i = 0; i < 60; ++i) {
      const Letter expect = i < u.size() ? u[i] : v[(i - u.size()) % v.size()];
      CHECK(c.at(i) == expect);
    }
    CHECK(EventuallyPeriodicWord(c.preperiod(), c.period()) == c);
    if (!c.preperiod().empty()) CHECK(c.preperiod().back() != c.period().back());
    // primitive: no proper rotation equals the period
    for (std::size_t s = 1; s < c.period().size(); ++s) {
      bool same = true;
      for (std::size_t i = 0; i < c.period().size() && same; ++i)
        same = c.period()[i] == c.period()[(i + s) % c.period().size()];
      CHECK_FALSE(same);
    }
  }
}

TEST_CASE("point syntax round-trips") {
  const auto p = builtin_presentation("free:2");
  for (const char* s : {"abba", "1", "ab(ba)^w", "(abba)^w", "fib"})
    CHECK(format_point(p, parse_point(p, s)) == s);
  CHECK(parse_point(p, "abba*").finite());
  CHECK(std::get<Word>(parse_point(p, "1").kind).empty());
  CHECK_THROWS_AS(parse_point(p, "ab(ba"), InputError);
  CHECK_THROWS_AS(parse_point(p, "()^w"), InputError);
  CHECK_THROWS_AS(parse_point(builtin_presentation("free:1"), "fib"), InputError);
}

TEST_CASE("Fibonacci stream agrees with the substitution") {
  const auto expect = fibonacci_by_morphism(500);
  const FibonacciStream f;
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(f.at(i) == expect[i]);
}

TEST_CASE("endomorphism trichotomy") {
  const auto p = builtin_presentation("free:2");
  auto gen_of = [&](const char* pt) {
    return format_group_word(p, endo_monoid_free(parse_point(p, pt), 2).generator);
  };
  CHECK(gen_of("(abba)^w") == "abba");
  CHECK(gen_of("(a)^w") == "a");
  CHECK(gen_of("b(aa)^w") == "bab'");
  CHECK(endo_monoid_free(parse_point(p, "fib"), 2).kind == EndoKind::trivial);
  const auto fin = endo_monoid_free(parse_point(p, "ab"), 2);
  CHECK(fin.kind == EndoKind::conjugate_of_monoid);
  CHECK(fin.conjugator == p.parse_word("ab"));

  for (const char* s : {"(abba)^w", "(a)^w", "b(aa)^w", "ab(ba)^w", "ba(abb)^w"}) {
    const auto pt = parse_point(p, s);
    const GroupWord g = endo_monoid_free(pt, 2).generator;
    GroupWord gn;
    for (int n = 1; n <= 3; ++n) {
      gn = gn * g;
      CHECK(fixes_oracle(gn, pt, 30));
      CHECK(fixes_prefix(gn, pt, 30));
      CHECK(fixes_oracle(gn.inverse(), pt, 30));
    }
  }
}

TEST_CASE("Fibonacci point has no nontrivial fixing word") {
  const auto p = builtin_presentation("free:2");
  const auto pt = parse_point(p, "fib");
  for (const GroupWord& g : all_group_words(2, 8)) {
    if (g.empty()) continue;
    CHECK_FALSE(fixes_oracle(g, pt, 30));
    CHECK_FALSE(fixes_prefix(g, pt, 30));
    CHECK(point_membership(g, pt, PointSet::M) == Decision::no);
  }
}

TEST_CASE("membership examples") {
  const auto p = builtin_presentation("free:2");
  const auto a_inf = parse_point(p, "(a)^w");
  CHECK(point_membership(parse_group_word(p, "a'"), a_inf, PointSet::A) == Decision::yes);
  CHECK(point_membership(parse_group_word(p, "b"), a_inf, PointSet::M) == Decision::no);
  CHECK(point_membership(parse_group_word(p, "b"), a_inf, PointSet::A) == Decision::yes);
  for (const char* s : {"1", "ab", "(a)^w", "fib"})
    CHECK(point_membership(GroupWord{}, parse_point(p, s), PointSet::M) == Decision::yes);
}

TEST_CASE("membership agrees with independent oracles") {
  const auto p = builtin_presentation("free:2");
  const auto words = all_group_words(2, 5);
  for (const char* s : {"1", "a", "ab", "bba"}) {
    const auto pt = parse_point(p, s);
    const Word w = std::get<Word>(pt.kind);
    for (const auto& g : words) {
      CHECK((point_membership(g, pt, PointSet::A) == Decision::yes) ==
            in_A_oracle(g, pt, w.size()));
      CHECK((point_membership(g, pt, PointSet::M) == Decision::yes) == in_M_finite_oracle(g, w));
    }
  }
  for (const char* s : {"(a)^w", "(abba)^w", "b(a)^w", "fib"}) {
    const auto pt = parse_point(p, s);
    for (const auto& g : words) {
      CHECK((point_membership(g, pt, PointSet::A) == Decision::yes) == in_A_oracle(g, pt, 12));
      CHECK((point_membership(g, pt, PointSet::M) == Decision::yes) == fixes_oracle(g, pt, 30));
    }
  }
}

TEST_CASE("base change conjugates the endomorphism group") {
  const auto p = builtin_presentation("free:2");
  const auto words = all_group_words(2, 6);
  for (const char* m : {"1", "a", "ab", "ba"}) {
    const Word w = *m == '1' ? Word{} : p.parse_word(m);
    for (Letter h = 0; h < 2; ++h) {
      const PointDescriptor base{w};
      const PointDescriptor moved{concat(Word{h}, w)};
      const GroupWord hg = GroupWord::positive(Word{h});
      for (const auto& g : words)
        CHECK(point_membership(g, moved, PointSet::M) ==
              point_membership(hg.inverse() * g * hg, base, PointSet::M));
    }
  }
}

TEST_CASE("M_y equals A_y only at the unit point") {
  const auto p = builtin_presentation("free:2");
  for (const Word& w : oracle::words_upto(2, 3)) {
    const auto r = check_My_equals_Ay(PointDescriptor{w}, 2, 4);
    CHECK(r.equal == (w.empty() ? Decision::yes : Decision::no));
    if (!w.empty()) {
      REQUIRE(r.witness);
      CHECK(point_membership(*r.witness, PointDescriptor{w}, PointSet::A) !=
            point_membership(*r.witness, PointDescriptor{w}, PointSet::M));
    }
  }
  const auto a = check_My_equals_Ay(parse_point(p, "a"), 2, 4);
  CHECK(a.equal == Decision::no);
  CHECK(format_group_word(p, *a.witness) == "a'");
  for (const char* s : {"(a)^w", "(abba)^w", "fib"})
    CHECK(check_My_equals_Ay(parse_point(p, s), 2, 4).equal == Decision::no);
  CHECK(check_My_equals_Ay(parse_point(builtin_presentation("free:1"), "(a)^w"), 1, 4).equal ==
        Decision::yes);
}
