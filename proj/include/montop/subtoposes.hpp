#pragma once

#include <optional>
#include <string>
#include <vector>

#include "montop/msets.hpp"
#include "montop/ore.hpp"
#include "montop/prime_ideals.hpp"

namespace montop {

struct SubtoposBounds {
  OreBounds ore;
  std::size_t max_generators = kDefaultGeneratorGuard;
  /// Upper bound for the units audit; lowered automatically for large ranks.
  std::size_t unit_bound = 6;
};

enum class SubtoposStatus { confirmed, excluded, undecided };
const char* to_string(SubtoposStatus s);

/// One prime ideal p with the Ore verdict for S = M - p and the
/// localization M_p. confirmed, excluded and undecided mirror holds, fails
/// and unknown.
struct SubtoposRecord {
  Character character;
  OreVerdict ore;
  LocalizedPresentation localization;
  SubtoposStatus status = SubtoposStatus::undecided;
  UnitsAudit units;
};

/// One record per prime ideal, sorted by bit string.
std::vector<SubtoposRecord> enumerate_monoid_subtoposes(const MonoidPresentation& p,
                                                        const SubtoposBounds& bounds = {});

enum class Agreement { agree, disagree, undecided };
const char* to_string(Agreement a);

struct FlatnessCheck {
  std::size_t record = 0;
  /// Absent for undecided records, which are not checked.
  std::optional<FlatnessReport> report;
  Agreement agreement = Agreement::undecided;
  /// Names of the F2 failure pair, when there is one.
  std::optional<std::pair<std::string, std::string>> f2_pair;
};

struct CrossValidation {
  std::size_t trunc_len = 0;
  std::size_t search_len = 0;
  std::vector<FlatnessCheck> checks;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t undecided = 0;
};

/// Flatness of each decided record's localization, truncated at trunc_len,
/// against its Ore verdict. search_len = 0 means 2 * trunc_len.
CrossValidation cross_validate_flatness(const std::vector<SubtoposRecord>& records,
                                        std::size_t trunc_len = 2, std::size_t search_len = 0);

}  // namespace montop
