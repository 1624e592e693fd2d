#include "montop/ore.hpp"

#include <algorithm>
#include <unordered_map>

namespace montop {

const char* to_string(OreOutcome o) {
  switch (o) {
    case OreOutcome::holds:
      return "holds";
    case OreOutcome::fails:
      return "fails";
    case OreOutcome::unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<Letter> OreSubset::generators(std::size_t rank) const {
  if (!is_all()) {
    if (character_->rank() != rank) throw InputError("subset rank differs from presentation");
    return character_->ones();
  }
  std::vector<Letter> out;
  for (std::size_t g = 0; g < rank; ++g) out.push_back(static_cast<Letter>(g));
  return out;
}

namespace {

struct Search {
  std::vector<OreWitness> witnesses;
  std::optional<std::pair<Word, Word>> unresolved;
  std::size_t pairs = 0;
};

Search search(const std::vector<Letter>& s_gens,
              const OreBounds& b, const WordOracle& oracle) {
  Search out;
  const auto ms = elements_within(oracle, b.pair_len);
  const auto ss = elements_within(oracle, b.pair_len, &s_gens);
  const auto ts = elements_within(oracle, b.witness_len, &s_gens);
  const auto ns = elements_within(oracle, b.witness_len);
  for (const Word& s : ss) {
    // canonical(s n) -> least n
    std::unordered_map<Word, Word, WordHash> right;
    for (const Word& n : ns) right.try_emplace(oracle.canonical(concat(s, n)), n);
    for (const Word& m : ms) {
      ++out.pairs;
      bool found = false;
      for (const Word& t : ts) {
        auto it = right.find(oracle.canonical(concat(m, t)));
        if (it != right.end()) {
          out.witnesses.push_back({m, s, t, it->second});
          found = true;
          break;
        }
      }
      if (!found && !out.unresolved) out.unresolved = {m, s};
    }
  }
  // Report pairs in (m, s) order.
  std::stable_sort(out.witnesses.begin(), out.witnesses.end(),
                   [](const OreWitness& x, const OreWitness& y) {
                     if (x.m != y.m) return shortlex_less(x.m, y.m);
                     return shortlex_less(x.s, y.s);
                   });
  return out;
}

}  // namespace

OreVerdict is_right_ore(const OreQuery& q) {
  const auto& p = q.presentation;
  const auto s_gens = q.subset.generators(p.rank());
  if (!q.subset.is_all() && !respects_relations(p, *q.subset.character()))
    throw InputError("subset character does not respect the relations");
  OreVerdict v;
  v.bounds = q.bounds;

  if (p.flags().commutative) {
    v.outcome = OreOutcome::holds;
    v.method = "commutative";
    return v;
  }
  if (p.flags().relation_free) {
    if (s_gens.empty()) {
      v.outcome = OreOutcome::holds;
      v.method = "prefix-free-criterion";
      return v;
    }
    // Non-commutative and free, so rank >= 2.
    const Letter s = s_gens.front();
    const Letter m = s == 0 ? 1 : 0;
    v.outcome = OreOutcome::fails;
    v.method = "prefix-criterion";
    v.m = Word{m};
    v.s = Word{s};
    v.certificate =
        "free monoid: mM and sM meet iff one of m, s is a prefix of the other";
    return v;
  }
  if (s_gens.empty()) {
    v.outcome = OreOutcome::holds;
    v.method = "trivial-subset";
    return v;
  }

  const auto oracle = make_oracle(p);
  v.oracle = oracle->method();
  Search r = search(s_gens, q.bounds, *oracle);
  v.pairs_checked = r.pairs;
  if (r.unresolved) {
    v.outcome = OreOutcome::unknown;
    v.method = "bounded-search";
    v.m = r.unresolved->first;
    v.s = r.unresolved->second;
    return v;
  }
  v.outcome = OreOutcome::holds;
  v.method = "exhaustive";
  v.witnesses = std::move(r.witnesses);
  return v;
}

std::vector<OreWitness> ore_witness_table(const OreQuery& q) {
  const OreVerdict v = is_right_ore(q);
  if (v.outcome != OreOutcome::holds)
    throw InputError(std::string("witness table needs a holds verdict, got ") +
                     to_string(v.outcome));
  if (!v.witnesses.empty()) return v.witnesses;
  const auto oracle = make_oracle(q.presentation);
  Search r = search(q.subset.generators(q.presentation.rank()),
                    q.bounds, *oracle);
  if (r.unresolved)
    throw InputError("witness search incomplete within the bounds");
  return r.witnesses;
}

bool verify_prefix_certificate(const MonoidPresentation& p, const Word& m,
                               const Word& s) {
  p.check_word(m);
  p.check_word(s);
  return p.flags().relation_free && !m.starts_with(s) && !s.starts_with(m);
}

bool verify_witness(const WordOracle& oracle, const OreSubset& subset,
                    const OreWitness& w) {
  const auto gens = subset.generators(oracle.rank());
  for (Letter g : w.t)
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) return false;
  return oracle.equal(concat(w.m, w.t), concat(w.s, w.n)) == Decision::yes;
}

}  // namespace montop
