#include "montop/subtoposes.hpp"

namespace montop {

const char* to_string(SubtoposStatus s) {
  switch (s) {
    case SubtoposStatus::confirmed:
      return "confirmed";
    case SubtoposStatus::excluded:
      return "excluded";
    case SubtoposStatus::undecided:
      return "undecided";
  }
  return "undecided";
}

const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::agree:
      return "agree";
    case Agreement::disagree:
      return "disagree";
    case Agreement::undecided:
      return "undecided";
  }
  return "undecided";
}

namespace {

// Largest bound <= requested whose word count over `rank` letters stays
// below a fixed budget.
std::size_t affordable_bound(std::size_t rank, std::size_t requested) {
  constexpr double budget = 2e5;
  std::size_t b = 0;
  double words = 1, layer = 1;
  while (b < requested) {
    layer *= static_cast<double>(rank);
    if (words + layer > budget) break;
    words += layer;
    ++b;
  }
  return b;
}

}  // namespace

std::vector<SubtoposRecord> enumerate_monoid_subtoposes(const MonoidPresentation& p,
                                                        const SubtoposBounds& bounds) {
  std::vector<SubtoposRecord> out;
  for (const Character& c : enumerate_prime_ideals(p, bounds.max_generators)) {
    SubtoposRecord r;
    r.character = c;
    r.ore = is_right_ore({p, OreSubset::of(c), bounds.ore});
    r.localization = localization_presentation(p, c);
    switch (r.ore.outcome) {
      case OreOutcome::holds:
        r.status = SubtoposStatus::confirmed;
        break;
      case OreOutcome::fails:
        r.status = SubtoposStatus::excluded;
        break;
      case OreOutcome::unknown:
        r.status = SubtoposStatus::undecided;
        break;
    }
    r.units = audit_units(r.localization, c,
                          affordable_bound(r.localization.result.rank(), bounds.unit_bound));
    out.push_back(std::move(r));
  }
  return out;
}

CrossValidation cross_validate_flatness(const std::vector<SubtoposRecord>& records,
                                        std::size_t trunc_len, std::size_t search_len) {
  CrossValidation cv;
  cv.trunc_len = trunc_len;
  cv.search_len = search_len == 0 ? 2 * trunc_len : search_len;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    FlatnessCheck check;
    check.record = i;
    if (r.status != SubtoposStatus::undecided) {
      const SymbolicMSet m(r.localization, trunc_len);
      FlatnessReport rep = check_flat(m, cv.search_len);
      if (rep.f2.status == FlatStatus::fails)
        check.f2_pair = {{m.name(*rep.f2.a), m.name(*rep.f2.b)}};
      const Decision flat = rep.flat();
      const bool ore_holds = r.status == SubtoposStatus::confirmed;
      if (flat == Decision::unknown) {
        check.agreement = Agreement::undecided;
      } else {
        check.agreement = (flat == Decision::yes) == ore_holds ? Agreement::agree : Agreement::disagree;
      }
      check.report = std::move(rep);
    }
    switch (check.agreement) {
      case Agreement::agree:
        ++cv.agreements;
        break;
      case Agreement::disagree:
        ++cv.disagreements;
        break;
      case Agreement::undecided:
        ++cv.undecided;
        break;
    }
    cv.checks.push_back(std::move(check));
  }
  return cv;
}

}  // namespace montop
