#include <map>
#include <random>

#include <boost/integer/common_factor.hpp>

#include "doctest.h"
#include "montop/catalog.hpp"
#include "montop/matrix2.hpp"
#include "montop/supernatural.hpp"
#include "montop/torus_knot.hpp"
#include "oracles.hpp"

using namespace montop;

namespace {

IntMatrix2 random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  while (true) {
    IntMatrix2 m{d(rng), d(rng), d(rng), d(rng)};
    if (m.det() != 0) return m;
  }
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer gcd_entries(const IntMatrix2& m) {
  Integer g = 0;
  for (const Integer* x : {&m.a, &m.b, &m.c, &m.d}) g = boost::multiprecision::gcd(g, abs_int(*x));
  return g;
}

// p-adic valuation by repeated division.
unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Exponent map standing in for y: absent primes have exponent 0, -1 is infinity.
using Exps = std::map<std::uint64_t, long>;

bool oracle_divides(std::uint64_t b, const Exps& y) {
  for (auto p : prime_divisors(b)) {
    const auto it = y.find(p);
    const long e = it == y.end() ? 0 : it->second;
    if (e >= 0 && valuation(b, p) > static_cast<unsigned long>(e)) return false;
  }
  return true;
}

bool oracle_in_M(std::uint64_t b, const Exps& y) {
  for (auto p : prime_divisors(b)) {
    const auto it = y.find(p);
    if (it == y.end() || it->second >= 0) return false;
  }
  return true;
}

SupernaturalNumber to_sn(const Exps& y) {
  std::vector<std::uint64_t> primes;
  std::vector<Exponent> exps;
  for (auto [p, e] : y) {
    primes.push_back(p);
    exps.push_back(e < 0 ? Exponent{true, 0} : Exponent{false, static_cast<std::uint64_t>(e)});
  }
  return SupernaturalNumber(primes, exps);
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix2::diag(2, 3)).d == IntMatrix2::diag(1, 6));
  CHECK(smith_normal_form(IntMatrix2::identity()).d == IntMatrix2::identity());
  CHECK(smith_normal_form(IntMatrix2::parse("0 2; 3 0")).d == IntMatrix2::diag(1, 6));
  CHECK(smith_normal_form(IntMatrix2::parse("2 4; 6 8")).d == IntMatrix2::diag(2, 4));
  CHECK_THROWS_AS(smith_normal_form(IntMatrix2::parse("1 2; 2 4")), InputError);
  CHECK_THROWS_AS(IntMatrix2::parse("1 2 3"), InputError);
}

TEST_CASE("Smith normal form postconditions on random matrices") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const IntMatrix2 m = random_matrix(rng);
    const SmithForm s = smith_normal_form(m);
    CHECK(abs_int(s.u.det()) == 1);
    CHECK(abs_int(s.v.det()) == 1);
    CHECK(s.d.is_diagonal());
    CHECK(s.d.a >= 1);
    CHECK(s.d.d % s.d.a == 0);
    CHECK(s.d.a * s.d.d == abs_int(m.det()));
    CHECK(s.d.a == gcd_entries(m));
    CHECK(s.u * s.d * s.v == m);
    CHECK(adjugate_check(m));
    CHECK(m * m.adjugate() == IntMatrix2::diag(m.det(), m.det()));
  }
}

TEST_CASE("adjugate and determinant predicates") {
  CHECK(adjugate_check(IntMatrix2::identity()));
  const auto m = IntMatrix2::parse("1 2; 3 4");
  CHECK(m.adjugate() == IntMatrix2::parse("4 -2; -3 1"));
  CHECK(m * m.adjugate() == IntMatrix2::diag(-2, -2));
  CHECK(adjugate_check(IntMatrix2::diag(2, 3)));

  CHECK(mat_prime_membership(IntMatrix2::diag(1, 2), {2}));
  CHECK_FALSE(mat_prime_membership(IntMatrix2::diag(1, 3), {2}));
  CHECK_FALSE(mat_prime_membership(IntMatrix2::parse("2 1; 1 1"), {2, 3, 5}));
  CHECK_THROWS_AS(mat_prime_membership(IntMatrix2::parse("0 0; 0 1"), {2}), InputError);

  std::mt19937 rng(5);
  const std::vector<std::vector<std::uint64_t>> sigmas{{2}, {3}, {2, 5}, {7, 11}};
  for (int i = 0; i < 500; ++i) {
    const auto a = random_matrix(rng), b = random_matrix(rng);
    for (const auto& s : sigmas)
      CHECK(mat_prime_membership(a * b, s) ==
            (mat_prime_membership(a, s) || mat_prime_membership(b, s)));
  }
}

TEST_CASE("matrix point predicates") {
  CHECK(mat_in_M_y_e11(RatMatrix2::parse("2 1/2; 0 1/3")));
  CHECK_FALSE(mat_in_M_y_e11(RatMatrix2::parse("1/2 0; 0 1")));
  CHECK_FALSE(mat_in_M_y_e11(RatMatrix2::parse("1 0; 1 1")));
  CHECK(mat_in_M_y_zero(RatMatrix2::parse("1/2 0; 3 1")));
  CHECK_THROWS_AS(mat_in_M_y_e11(RatMatrix2::parse("1 1; 1 1")), InputError);
}

TEST_CASE("torus knot degree, delta and normal form examples") {
  const Word a{0}, b{1}, ab{0, 1};
  CHECK(tk_degree(Word{}, 2, 3) == 0);
  CHECK(tk_degree(ab, 2, 3) == 5);
  CHECK(tk_degree(Word::power(0, 2), 2, 3) == 6);
  CHECK(tk_delta(HClass(2, 3), 2, 3) == 0);
  CHECK(tk_delta(tk_class(a, 2, 3), 2, 3) == 3);
  CHECK(tk_delta(tk_class(ab, 2, 3), 2, 3) == 5);
  for (unsigned k = 2; k <= 4; ++k)
    CHECK(tk_normal_form(Word::power(0, k), k, 3) == TkNormalForm{1, Word{}});
  CHECK(tk_normal_form(ab, 2, 3) == TkNormalForm{0, ab});
  CHECK(tk_normal_form(Word{1, 1, 1, 0}, 2, 3) == TkNormalForm{1, a});
  CHECK(tk_normal_form(Word{1, 1, 1, 1}, 2, 3) == TkNormalForm{1, b});
  CHECK(tk_words_equal(Word::power(0, 2), Word::power(1, 3), 2, 3));
  CHECK_FALSE(tk_words_equal(ab, Word{1, 0}, 2, 3));
  CHECK(tk_words_equal(Word{0, 0, 0}, Word{0, 1, 1, 1}, 2, 3));
  CHECK_THROWS_AS(tk_degree(Word{2}, 2, 3), InputError);
  CHECK_THROWS_AS(tk_class(a, 1, 3), InputError);
}

TEST_CASE("delta is the least degree over each class") {
  for (auto [k, l] : {std::pair{2u, 3u}, {3u, 4u}, {2u, 2u}}) {
    std::map<std::vector<Syllable>, std::uint64_t> least;
    for (const Word& w : oracle::words_upto(2, 9)) {
      const auto h = tk_class(w, k, l);
      const auto d = tk_degree(w, k, l);
      auto [it, fresh] = least.emplace(h.syllables(), d);
      if (!fresh) it->second = std::min(it->second, d);
    }
    for (const auto& [syl, d] : least) {
      HClass h(k, l);
      for (const auto& s : syl) h.push(s.gen, s.power);
      // only classes whose alternating word fits inside the search are settled
      if (tk_alternating_word(h).size() <= 9) CHECK(tk_delta(h, k, l) == d);
    }
  }
}

TEST_CASE("torus knot word problem agrees with relation closure") {
  const auto p = torus_knot_monoid(2, 3);
  const auto words = oracle::words_upto(2, 8);
  std::map<Word, std::size_t> cls;
  std::size_t next = 0;
  // Relations preserve degree, so every word equal to one of length <= 8 has
  // length <= 12 and an unbounded-depth closure at that length is exact.
  for (const Word& w : words) {
    if (cls.count(w)) continue;
    for (const Word& x : oracle::relation_closure(p, w, 1000, 12)) cls.emplace(x, next);
    ++next;
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j)
      if (tk_words_equal(words[i], words[j], 2, 3) != (cls[words[i]] == cls[words[j]]))
        ++mismatches;
  CHECK(mismatches == 0);

  for (const Word& w : words) {
    const auto nf = tk_normal_form(w, 2, 3);
    CHECK(tk_degree(w, 2, 3) == tk_delta(tk_class(w, 2, 3), 2, 3) + nf.level * 6);
    Word rebuilt = Word::power(0, 2 * nf.level);
    rebuilt.append(nf.reduced);
    CHECK(tk_words_equal(rebuilt, w, 2, 3));
    CHECK(nf.reduced.find(Word::power(0, 2)) == Word::npos);
    CHECK(nf.reduced.find(Word::power(1, 3)) == Word::npos);
  }
}

TEST_CASE("the central element commutes with every word") {
  for (auto [k, l] : {std::pair{2u, 3u}, {3u, 5u}}) {
    const Word c = Word::power(0, k);
    for (const Word& w : oracle::words_upto(2, 6)) {
      CHECK(tk_words_equal(concat(c, w), concat(w, c), k, l));
      CHECK(tk_words_equal(concat(Word::power(1, l), w), concat(w, c), k, l));
    }
  }
}

TEST_CASE("supernatural divisibility examples") {
  const std::vector<std::uint64_t> primes{2, 3};
  CHECK(sn_divides(8, SupernaturalNumber::parse(primes, "2:inf")));
  CHECK_FALSE(sn_divides(6, SupernaturalNumber::parse(primes, "2:1,3:0")));
  CHECK(sn_divides(1, SupernaturalNumber::parse(primes, "")));
  CHECK_FALSE(sn_divides(5, SupernaturalNumber::parse(primes, "2:inf,3:inf")));
  CHECK(outside_declared(10, SupernaturalNumber::parse(primes, "2:inf")));

  const auto y2 = SupernaturalNumber::parse({2}, "2:inf");
  CHECK(sn_in_A_y(PositiveRational::parse("5/4"), y2));
  CHECK_FALSE(sn_in_A_y(PositiveRational::parse("1/3"), y2));
  CHECK(sn_in_A_y(PositiveRational::parse("7"), y2));
  const auto y23 = SupernaturalNumber::parse(primes, "2:inf,3:1");
  CHECK(sn_in_M_y(PositiveRational::parse("1/2"), y23));
  CHECK_FALSE(sn_in_M_y(PositiveRational::parse("1/3"), y23));
  CHECK(sn_in_M_y(PositiveRational::parse("6/1"), y23));
  CHECK(y23.to_string() == "2^inf*3^1");
  CHECK(SupernaturalNumber::parse(primes, "").to_string() == "1");
  CHECK(PositiveRational(6, 4).to_string() == "3/2");

  CHECK(parse_prime_list("2,3,5") == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS_AS(parse_prime_list("5,2"), InputError);
  CHECK_THROWS_AS(parse_prime_list("2,4"), InputError);
  CHECK_THROWS_AS(SupernaturalNumber::parse(primes, "5:1"), InputError);
  CHECK_THROWS_AS(PositiveRational::parse("0/3"), InputError);
}

TEST_CASE("supernatural membership tables match a valuation oracle") {
  const std::vector<Exps> ys{{{2, -1}}, {{2, -1}, {3, 1}}, {{3, -1}, {5, 2}}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> qs;
  for (std::uint64_t a : {1, 2, 3, 5, 7})
    for (std::uint64_t b : {1, 2, 3, 4, 5, 6, 9, 12, 25, 50})
      if (boost::integer::gcd(a, b) == 1) qs.push_back({a, b});
  REQUIRE(qs.size() >= 20);
  for (const auto& y : ys) {
    const auto s = to_sn(y);
    for (auto [a, b] : qs) {
      const PositiveRational q(a, b);
      CHECK(sn_in_A_y(q, s) == oracle_divides(b, y));
      CHECK(sn_in_M_y(q, s) == oracle_in_M(b, y));
    }
  }
}

TEST_CASE("supernatural membership is monotone") {
  std::mt19937 rng(11);
  const std::vector<std::uint64_t> primes{2, 3, 5};
  auto random_exps = [&] {
    Exps y;
    for (auto p : primes) y[p] = static_cast<long>(rng() % 5) - 1;
    return y;
  };
  for (int t = 0; t < 200; ++t) {
    const Exps small = random_exps();
    Exps big = small;
    for (auto& [p, e] : big)
      if (e >= 0 && rng() % 2) e = (rng() % 3 == 0) ? -1 : e + 1;
    for (std::uint64_t b = 1; b <= 60; ++b) {
      const PositiveRational q(1, b);
      if (sn_in_A_y(q, to_sn(small))) CHECK(sn_in_A_y(q, to_sn(big)));
      // big has fewer finite exponents, so a smaller Sigma
      if (sn_in_M_y(q, to_sn(small))) CHECK(sn_in_M_y(q, to_sn(big)));
    }
  }
}

TEST_CASE("factorization") {
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("builtin catalog") {
  CHECK(builtin_presentation("free:3").rank() == 3);
  CHECK(builtin_presentation("free:3").relations().empty());
  CHECK(builtin_presentation("comm:3").relations().size() == 3);
  CHECK(builtin_presentation("builtin:trivial").rank() == 0);
  CHECK(builtin_presentation("arith:2,3,5").generators() ==
        std::vector<std::string>{"p2", "p3", "p5"});
  CHECK(builtin_presentation("matrices").generators() == std::vector<std::string>{"d2", "d3"});
  const auto t = builtin_presentation("torus:2,3");
  CHECK(t.rank() == 2);
  CHECK(t.relations().size() == 1);
  CHECK(default_generator_names(28).back() == "g28");
  CHECK(is_builtin("free:2"));
  CHECK_FALSE(is_builtin("trivial.txt"));
  CHECK_THROWS_AS(builtin_presentation("torus:1,3"), InputError);
  CHECK_THROWS_AS(builtin_presentation("nope"), InputError);
  for (const auto& name : builtin_suite()) CHECK_NOTHROW(builtin_presentation(name));
}
