#include <set>

#include "doctest.h"
#include "montop/presentation.hpp"
#include "montop/rewriting.hpp"
#include "montop/torus_knot.hpp"
#include "montop/word_oracle.hpp"
#include "oracles.hpp"

using namespace montop;

namespace {

MonoidPresentation free2() { return parse_presentation("gens: a b\n"); }
MonoidPresentation idem() { return parse_presentation("gens: a\nrel: aa = a\n"); }
MonoidPresentation torus23() { return parse_presentation("gens: a b\nrel: bbb = aa\n"); }
MonoidPresentation comm2() { return parse_presentation("gens: a b\nrel: ab = ba\n"); }

std::vector<MonoidPresentation> samples() {
  return {free2(), idem(), torus23(), comm2(),
          parse_presentation("gens: a b c\nrel: ab = ba\nrel: ac = ca\nrel: bc = cb\n"),
          parse_presentation("gens: x y\nrel: xyx = yxy\n")};
}

}  // namespace

TEST_CASE("concat") {
  const auto p = free2();
  CHECK(p.concat(Word{}, p.parse_word("ab")) == p.parse_word("ab"));
  CHECK(p.concat(p.parse_word("a"), p.parse_word("b")) == p.parse_word("ab"));
  CHECK(p.format(p.concat(p.parse_word("ab"), p.parse_word("ba"))) == "abba");
  CHECK_THROWS_AS(p.concat(Word{0}, Word{2}), InputError);
}

TEST_CASE("parser") {
  const auto p = parse_presentation("# torus\ngens: a b\nrel: a^2 = b b b\n");
  REQUIRE(p.rank() == 2);
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].lhs == Word{0, 0});
  CHECK(p.relations()[0].rhs == Word{1, 1, 1});
  CHECK(p.format(Word{}) == "1");
  CHECK(p.parse_word("1") == Word{});

  try {
    parse_presentation("gens: a b\nrel: ac = b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_presentation("rel: a = b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a a\n"), InputError);
  CHECK(parse_presentation(p.to_text()) == p);
}

TEST_CASE("flags") {
  CHECK(free2().flags().relation_free);
  CHECK_FALSE(free2().flags().commutative);
  CHECK(comm2().flags().commutative);
  CHECK_FALSE(torus23().flags().commutative);
  CHECK(MonoidPresentation().flags().commutative);
  CHECK(parse_presentation("gens: a\n").flags().commutative);
  // ca = (ab)a = a(ba) = ac is only visible after completion.
  const auto derived =
      parse_presentation("gens: a b c\nrel: ab = c\nrel: ba = c\n");
  CHECK(derived.flags().commutative);
  CHECK_FALSE(parse_presentation("gens: a b c\nrel: ab = ba\n").flags().commutative);
  const auto derived2 = parse_presentation("gens: a b\nrel: aba = b\nrel: ab = ba\n");
  CHECK(derived2.flags().commutative);
}

TEST_CASE("knuth_bendix examples") {
  const auto rs_free = knuth_bendix(free2());
  CHECK(rs_free.rules().empty());
  CHECK(rs_free.confluent());

  const auto rs_idem = knuth_bendix(idem());
  REQUIRE(rs_idem.rules().size() == 1);
  CHECK(rs_idem.rules()[0].lhs == Word{0, 0});
  CHECK(rs_idem.rules()[0].rhs == Word{0});
  CHECK(rs_idem.confluent());

  const auto rs_t = knuth_bendix(torus23());
  bool has = false;
  for (const auto& r : rs_t.rules())
    has = has || (r.lhs == Word{1, 1, 1} && r.rhs == Word{0, 0});
  CHECK(has);

  CHECK_THROWS_AS(knuth_bendix(torus23(), 0, 16), InputError);
  CHECK_THROWS_AS(knuth_bendix(torus23(), 200, 2), InputError);
}

TEST_CASE("normal_form examples") {
  const auto p = torus23();
  CHECK(normal_form(knuth_bendix(free2()), p.parse_word("abba")) == p.parse_word("abba"));
  CHECK(normal_form(knuth_bendix(idem()), Word{0, 0, 0}) == Word{0});
  const auto rs = knuth_bendix(p);
  CHECK(p.format(normal_form(rs, p.parse_word("bbbb"))) == "aab");
  // The embedding agrees: bbbb = c * b.
  const auto nf = tk_normal_form(Word{1, 1, 1, 1}, 2, 3);
  CHECK(nf.level == 1);
  CHECK(nf.reduced == Word{1});
}

TEST_CASE("words_equal examples") {
  const auto p = free2();
  const auto rs = knuth_bendix(p);
  CHECK(words_equal(rs, p.parse_word("ab"), p.parse_word("ab")) == Decision::yes);
  CHECK(words_equal(rs, p.parse_word("ab"), p.parse_word("ba")) == Decision::no);
  const auto t = torus23();
  CHECK(words_equal(knuth_bendix(t), t.parse_word("aa"), t.parse_word("bbb")) ==
        Decision::yes);
}

TEST_CASE("enumerate_elements examples") {
  const auto p = free2();
  const auto e = enumerate_elements(knuth_bendix(p), 2);
  CHECK(e == oracle::words_upto(2, 2));
  CHECK(enumerate_elements(knuth_bendix(idem()), 3) == std::vector<Word>{Word{}, Word{0}});

  // Torus (2,3): every word of length <= 2 is a distinct element (the
  // embedding separates them), so all seven are irreducible.
  const auto t = torus23();
  const auto rs = knuth_bendix(t);
  const auto words = oracle::words_upto(2, 2);
  std::set<std::pair<std::int64_t, std::vector<Syllable>>> images;
  for (const auto& w : words) {
    const auto el = tk_embed(w, 2, 3);
    images.insert({el.degree, el.h_class.syllables()});
  }
  CHECK(images.size() == 7);
  CHECK(enumerate_elements(rs, 2) == words);
}

TEST_CASE("rules decrease shortlex and derivations replay") {
  for (const auto& p : samples()) {
    const auto rs = knuth_bendix(p);
    for (const auto& r : rs.rules()) {
      CHECK(shortlex_less(r.rhs, r.lhs));
      const auto path = rs.expand(r.derivation);
      CHECK(replay(p, r.lhs, path) == r.rhs);
    }
  }
}

TEST_CASE("normal forms are idempotent and certified") {
  for (const auto& p : samples()) {
    const auto rs = knuth_bendix(p);
    for (const auto& w : oracle::words_upto(p.rank(), p.rank() > 2 ? 5 : 8)) {
      RewritePath path;
      const Word nf = rs.normal_form(w, &path);
      CHECK(rs.normal_form(nf) == nf);
      CHECK(rs.is_irreducible(nf));
      CHECK(replay(p, w, rs.expand(path)) == nf);
    }
  }
}

TEST_CASE("confluent systems give a congruence") {
  for (const auto& p : samples()) {
    const auto rs = knuth_bendix(p);
    if (!rs.confluent()) continue;
    CHECK(critical_pairs_resolve(rs));
    const auto words = oracle::words_upto(p.rank(), p.rank() > 2 ? 3 : 4);
    for (const auto& u : words) {
      for (const auto& v : words) {
        if (words_equal(rs, u, v) != Decision::yes) continue;
        for (Letter g = 0; g < p.rank(); ++g) {
          CHECK(words_equal(rs, concat(Word{g}, u), concat(Word{g}, v)) == Decision::yes);
          CHECK(words_equal(rs, concat(u, Word{g}), concat(v, Word{g})) == Decision::yes);
        }
      }
    }
  }
}

TEST_CASE("completion agrees with relation closure") {
  for (const auto& p : samples()) {
    const auto rs = knuth_bendix(p);
    const auto words = oracle::words_upto(p.rank(), p.rank() > 2 ? 3 : 4);
    for (const auto& u : words) {
      const auto cls = oracle::relation_closure(p, u, 6, 8);
      for (const auto& v : words) {
        if (cls.count(v)) {
          CHECK(words_equal(rs, u, v) == Decision::yes);
        } else if (rs.confluent() && words_equal(rs, u, v) == Decision::yes) {
          // Equal by completion; the bounded closure must reach it deeper.
          CHECK(oracle::relation_closure(p, u, 12, 12).count(v) == 1);
        }
      }
    }
  }
}

TEST_CASE("bounded completion degrades to partial") {
  const auto p = parse_presentation("gens: x y\nrel: xyx = yxy\n");
  const auto rs = knuth_bendix(p, 1, 3);
  CHECK(rs.status() == CompletionStatus::partial);
  // Normal forms remain sound.
  for (const auto& w : oracle::words_upto(2, 6)) {
    RewritePath path;
    const Word nf = rs.normal_form(w, &path);
    CHECK(replay(p, w, rs.expand(path)) == nf);
  }
}

TEST_CASE("localizations complete with inverses placed next to their generators") {
  const auto p = parse_presentation(
      "gens: a b c a'\nrel: ab = ba\nrel: ac = ca\nrel: bc = cb\nrel: aa' = 1\nrel: a'a = 1\n");
  const auto inv = adjoined_inverses(p);
  REQUIRE(inv[3]);
  CHECK(*inv[3] == 0);
  const auto oracle = make_oracle(p);
  CHECK(oracle->exact());
  // a b^n a' = b^n needs rules of unbounded length in the declared order.
  Word w{0};
  for (int i = 0; i < 6; ++i) w.push_back(1);
  w.push_back(3);
  CHECK(oracle->canonical(w) == Word::power(1, 6));
  for (const Word& u : oracle::words_upto(4, 3))
    for (const Word& v : oracle::relation_closure(p, u, 3, 5))
      CHECK(oracle->canonical(u) == oracle->canonical(v));
}
