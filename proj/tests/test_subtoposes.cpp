#include <algorithm>

#include "doctest.h"
#include "montop/catalog.hpp"
#include "montop/subtoposes.hpp"
#include "oracles.hpp"

using namespace montop;

namespace {

std::size_t count_status(const std::vector<SubtoposRecord>& rs, SubtoposStatus s) {
  return static_cast<std::size_t>(
      std::count_if(rs.begin(), rs.end(), [s](const auto& r) { return r.status == s; }));
}

}  // namespace

TEST_CASE("classification of the headline families") {
  const auto free2 = enumerate_monoid_subtoposes(builtin_presentation("free:2"));
  CHECK(free2.size() == 4);
  CHECK(count_status(free2, SubtoposStatus::confirmed) == 1);
  CHECK(free2.front().character.all_zero());
  CHECK(free2.front().status == SubtoposStatus::confirmed);

  const auto torus = enumerate_monoid_subtoposes(builtin_presentation("torus:2,3"));
  CHECK(torus.size() == 2);
  CHECK(count_status(torus, SubtoposStatus::confirmed) == 2);
  CHECK(torus.back().ore.method == "exhaustive");

  const auto comm = enumerate_monoid_subtoposes(builtin_presentation("comm:3"));
  CHECK(comm.size() == 8);
  for (const auto& r : comm) {
    CHECK(r.status == SubtoposStatus::confirmed);
    CHECK(r.ore.method == "commutative");
  }
}

TEST_CASE("record invariants across the builtin suite") {
  for (const auto& name : builtin_suite()) {
    CAPTURE(name);
    const auto p = builtin_presentation(name);
    const auto records = enumerate_monoid_subtoposes(p);
    CHECK(records.size() == enumerate_prime_ideals(p).size());
    REQUIRE_FALSE(records.empty());
    CHECK(records.front().character.all_zero());
    CHECK(records.front().status == SubtoposStatus::confirmed);
    CHECK(records.front().localization.result == p);
    for (std::size_t i = 1; i < records.size(); ++i)
      CHECK(records[i - 1].character < records[i].character);

    for (const auto& r : records) {
      const auto expected = r.ore.outcome == OreOutcome::holds  ? SubtoposStatus::confirmed
                            : r.ore.outcome == OreOutcome::fails ? SubtoposStatus::excluded
                                                                 : SubtoposStatus::undecided;
      CHECK(r.status == expected);
      if (r.status == SubtoposStatus::excluded) {
        REQUIRE(r.ore.m);
        REQUIRE(r.ore.s);
        CHECK(verify_prefix_certificate(p, *r.ore.m, *r.ore.s));
      }
      if (r.status != SubtoposStatus::confirmed) continue;
      CHECK(r.units.holds_at_bound);
      const auto& lp = r.localization;
      for (const auto& u : r.units.generators) {
        if (!u.inverted) {
          CHECK_FALSE(u.inverse);
          continue;
        }
        REQUIRE(u.inverse);
        const Word g{u.generator};
        const auto left = oracle::relation_closure(lp.result, concat(g, *u.inverse), 4, 8);
        const auto right = oracle::relation_closure(lp.result, concat(*u.inverse, g), 4, 8);
        CHECK(left.count(Word{}) == 1);
        CHECK(right.count(Word{}) == 1);
      }
    }
  }
}

TEST_CASE("torus knot (3,5) stays undecided at default bounds") {
  const auto records = enumerate_monoid_subtoposes(builtin_presentation("torus:3,5"));
  REQUIRE(records.size() == 2);
  CHECK(records[0].status == SubtoposStatus::confirmed);
  CHECK(records[1].status == SubtoposStatus::undecided);
  CHECK(records[1].ore.method == "bounded-search");
}

TEST_CASE("flatness agrees with the Ore verdicts") {
  for (const auto& name : builtin_suite()) {
    CAPTURE(name);
    const auto records = enumerate_monoid_subtoposes(builtin_presentation(name));
    const auto cv = cross_validate_flatness(records);
    CHECK(cv.disagreements == 0);
    CHECK(cv.checks.size() == records.size());
    CHECK(cv.agreements + cv.undecided == records.size());
    CHECK(cv.checks.front().agreement == Agreement::agree);
  }

  const auto free2 = enumerate_monoid_subtoposes(builtin_presentation("free:2"));
  const auto cv = cross_validate_flatness(free2);
  const auto& all_one = cv.checks.back();
  CHECK(free2[all_one.record].character.all_one());
  CHECK(all_one.agreement == Agreement::agree);
  REQUIRE(all_one.f2_pair);
  CHECK(all_one.f2_pair->first == "a'");
  CHECK(all_one.f2_pair->second == "b'");

  const auto comm2 = enumerate_monoid_subtoposes(builtin_presentation("comm:2"));
  const auto cv2 = cross_validate_flatness(comm2);
  REQUIRE(cv2.checks.back().report);
  CHECK(cv2.checks.back().report->f2.status == FlatStatus::holds);
  CHECK(cv2.checks.back().agreement == Agreement::agree);
}

TEST_CASE("enumeration is deterministic") {
  const auto p = builtin_presentation("torus:2,3");
  const auto a = enumerate_monoid_subtoposes(p);
  const auto b = enumerate_monoid_subtoposes(p);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].character == b[i].character);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].ore.certificate == b[i].ore.certificate);
    CHECK(a[i].ore.pairs_checked == b[i].ore.pairs_checked);
  }
}

TEST_CASE("generator guard") {
  SubtoposBounds bounds;
  bounds.max_generators = 2;
  CHECK_THROWS_AS(enumerate_monoid_subtoposes(builtin_presentation("free:3"), bounds), GuardError);
}
