#include "montop/msets.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "montop/union_find.hpp"

namespace montop {

InvalidAction::InvalidAction(const ActionViolation& v)
    : InputError("action violates relation " + std::to_string(v.relation) +
                 " at element " + std::to_string(v.element)),
      v_(v) {}

FiniteMSetBase::FiniteMSetBase(MonoidPresentation p, std::vector<std::string> names,
                               ActionTable table)
    : p_(std::move(p)), names_(std::move(names)), table_(std::move(table)) {
  if (table_.size() != p_.rank())
    throw InputError("action table needs one row per generator");
  for (const auto& row : table_) {
    if (row.size() != names_.size()) throw InputError("action row size differs from carrier");
    for (std::size_t e : row)
      if (e >= names_.size()) throw InputError("action image outside the carrier");
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate element name '" + names_[i] + "'");
}

std::optional<std::size_t> FiniteMSetBase::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

std::size_t act_left(const ActionTable& t, const Word& w, std::size_t e) {
  for (auto it = w.end(); it != w.begin();) e = t[*--it][e];
  return e;
}

std::size_t act_right(const ActionTable& t, std::size_t e, const Word& w) {
  for (Letter g : w) e = t[g][e];
  return e;
}

template <class Act>
std::optional<ActionViolation> violation(const MonoidPresentation& p, const ActionTable& t,
                                         Act act) {
  const std::size_t n = t.empty() ? 0 : t.front().size();
  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    const auto& rel = p.relations()[r];
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t l = act(t, rel.lhs, e), rr = act(t, rel.rhs, e);
      if (l != rr) return ActionViolation{r, e, l, rr};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ActionViolation> FiniteLeftMSet::find_violation(const MonoidPresentation& p,
                                                              const ActionTable& table) {
  return violation(p, table, [](const ActionTable& t, const Word& w, std::size_t e) {
    return act_left(t, w, e);
  });
}

std::optional<ActionViolation> FiniteRightMSet::find_violation(const MonoidPresentation& p,
                                                               const ActionTable& table) {
  return violation(p, table, [](const ActionTable& t, const Word& w, std::size_t e) {
    return act_right(t, e, w);
  });
}

FiniteLeftMSet::FiniteLeftMSet(MonoidPresentation p, std::vector<std::string> names,
                               ActionTable table)
    : FiniteMSetBase(std::move(p), std::move(names), std::move(table)) {
  if (auto v = find_violation(p_, table_)) throw InvalidAction(*v);
}

std::size_t FiniteLeftMSet::act(const Word& w, std::size_t e) const {
  p_.check_word(w);
  return act_left(table_, w, e);
}

FiniteRightMSet::FiniteRightMSet(MonoidPresentation p, std::vector<std::string> names,
                                 ActionTable table)
    : FiniteMSetBase(std::move(p), std::move(names), std::move(table)) {
  if (auto v = find_violation(p_, table_)) throw InvalidAction(*v);
}

std::size_t FiniteRightMSet::act(std::size_t e, const Word& w) const {
  p_.check_word(w);
  return act_right(table_, e, w);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::pair<std::string, std::size_t>> tokens(std::string_view s, std::size_t col0) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.emplace_back(std::string(s.substr(i, j - i)), col0 + i);
    i = j;
  }
  return out;
}

}  // namespace

AnyFiniteMSet parse_mset(const MonoidPresentation& p, std::string_view text) {
  bool right = false;
  std::optional<std::vector<std::string>> names;
  ActionTable table;
  std::vector<bool> seen_gen(p.rank(), false);
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, 1, "expected 'key:'");
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view body = line.substr(colon + 1);
    const std::size_t body_col = colon + 2;

    if (key == "side") {
      const auto v = trim(body);
      if (v == "left") {
        right = false;
      } else if (v == "right") {
        right = true;
      } else {
        throw ParseError(line_no, body_col, "side must be left or right");
      }
    } else if (key == "elems") {
      if (names) throw ParseError(line_no, 1, "elems declared twice");
      names.emplace();
      for (auto& [tok, col] : tokens(body, body_col)) {
        if (std::find(names->begin(), names->end(), tok) != names->end())
          throw ParseError(line_no, col, "duplicate element '" + tok + "'");
        names->push_back(tok);
      }
      if (names->empty()) throw ParseError(line_no, body_col, "empty carrier");
      table.assign(p.rank(), {});
      for (auto& row : table) {
        row.resize(names->size());
        for (std::size_t e = 0; e < row.size(); ++e) row[e] = e;
      }
    } else if (key.rfind("act", 0) == 0 && key.size() > 3 &&
               std::isspace(static_cast<unsigned char>(key[3]))) {
      if (!names) throw ParseError(line_no, 1, "act before elems");
      const std::string gname(trim(std::string_view(key).substr(3)));
      const auto g = p.find(gname);
      if (!g) throw ParseError(line_no, 5, "unknown generator '" + gname + "'");
      if (seen_gen[*g]) throw ParseError(line_no, 5, "generator '" + gname + "' acted twice");
      seen_gen[*g] = true;
      auto lookup = [&](const std::string& s, std::size_t col) {
        auto it = std::find(names->begin(), names->end(), s);
        if (it == names->end()) throw ParseError(line_no, col, "unknown element '" + s + "'");
        return static_cast<std::size_t>(it - names->begin());
      };
      std::vector<bool> mapped(names->size(), false);
      for (auto& [tok, col] : tokens(body, body_col)) {
        const auto arrow = tok.find("->");
        if (arrow == std::string::npos) throw ParseError(line_no, col, "expected p->q");
        const std::size_t from = lookup(tok.substr(0, arrow), col);
        const std::size_t to = lookup(tok.substr(arrow + 2), col + arrow + 2);
        if (mapped[from]) throw ParseError(line_no, col, "element mapped twice");
        mapped[from] = true;
        table[*g][from] = to;
      }
    } else {
      throw ParseError(line_no, 1, "unknown key '" + key + "'");
    }
  }
  if (!names) throw ParseError(line_no + 1, 1, "missing elems line");
  if (right) return FiniteRightMSet(p, std::move(*names), std::move(table));
  return FiniteLeftMSet(p, std::move(*names), std::move(table));
}

AnyFiniteMSet load_mset(const MonoidPresentation& p, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_mset(p, ss.str());
}

std::string mset_to_text(const FiniteMSetBase& m, bool right) {
  std::string out = right ? "side: right\n" : "side: left\n";
  out += "elems:";
  for (const auto& n : m.names()) out += " " + n;
  out += "\n";
  for (Letter g = 0; g < m.presentation().rank(); ++g) {
    out += "act " + m.presentation().name(g) + ":";
    for (std::size_t e = 0; e < m.size(); ++e)
      out += " " + m.name(e) + "->" + m.name(m.act_letter(g, e));
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic truncations

SymbolicMSet::SymbolicMSet(const LocalizedPresentation& lp, std::size_t trunc_len)
    : base_(lp.base), full_(lp.result), oracle_(make_oracle(lp.result)), trunc_len_(trunc_len) {
  images_.resize(full_.rank());
  for (Letter g = 0; g < base_.rank(); ++g) {
    images_[g] = {g, false};
    if (lp.inverse_letter[g]) images_[*lp.inverse_letter[g]] = {g, true};
  }
  build();
}

SymbolicMSet::SymbolicMSet(const MonoidPresentation& p, std::size_t trunc_len)
    : base_(p), full_(p), oracle_(make_oracle(p)), trunc_len_(trunc_len) {
  for (Letter g = 0; g < p.rank(); ++g) images_.push_back({g, false});
  build();
}

void SymbolicMSet::build() {
  elements_ = elements_within(*oracle_, trunc_len_);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  action_.assign(base_.rank(), std::vector<std::optional<std::size_t>>(elements_.size()));
  for (Letter g = 0; g < base_.rank(); ++g)
    for (std::size_t e = 0; e < elements_.size(); ++e)
      action_[g][e] = index_of(oracle_->canonical(concat(Word{g}, elements_[e])));
}

std::optional<std::size_t> SymbolicMSet::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SymbolicMSet::act_letter(Letter g, std::size_t e) const {
  return action_.at(g).at(e);
}

GroupWord SymbolicMSet::to_group_word(const Word& w) const {
  std::vector<GroupLetter> out;
  for (Letter x : w) out.push_back(images_.at(x));
  return GroupWord(out);
}

// ---------------------------------------------------------------------------
// Tensor products

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> Partition::classes() const {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(class_count);
  for (std::size_t x = 0; x < rows; ++x)
    for (std::size_t a = 0; a < cols; ++a) out[of(x, a)].emplace_back(x, a);
  return out;
}

namespace {

template <class LeftAct>
Partition tensor_impl(const FiniteRightMSet& x, std::size_t cols, std::size_t rank,
                      LeftAct left) {
  Partition part;
  part.rows = x.size();
  part.cols = cols;
  UnionFind uf(part.rows * cols);
  for (Letter g = 0; g < rank; ++g) {
    for (std::size_t i = 0; i < part.rows; ++i) {
      const std::size_t xg = x.act_letter(g, i);
      for (std::size_t a = 0; a < cols; ++a) {
        if (auto ga = left(g, a)) uf.unite(xg * cols + a, i * cols + *ga);
      }
    }
  }
  std::vector<std::size_t> label(uf.size(), static_cast<std::size_t>(-1));
  part.class_of.resize(uf.size());
  for (std::size_t k = 0; k < uf.size(); ++k) {
    const std::size_t r = uf.find(k);
    if (label[r] == static_cast<std::size_t>(-1)) label[r] = part.class_count++;
    part.class_of[k] = label[r];
  }
  return part;
}

}  // namespace

Partition tensor(const FiniteRightMSet& x, const FiniteLeftMSet& a) {
  if (!(x.presentation() == a.presentation()))
    throw InputError("tensor factors use different presentations");
  return tensor_impl(x, a.size(), x.presentation().rank(),
                     [&a](Letter g, std::size_t e) -> std::optional<std::size_t> {
                       return a.act_letter(g, e);
                     });
}

Partition tensor(const FiniteRightMSet& x, const SymbolicMSet& a) {
  if (!(x.presentation() == a.base()))
    throw InputError("tensor factors use different presentations");
  return tensor_impl(x, a.size(), x.presentation().rank(),
                     [&a](Letter g, std::size_t e) { return a.act_letter(g, e); });
}

// ---------------------------------------------------------------------------
// Flatness

const char* to_string(FlatStatus s) {
  switch (s) {
    case FlatStatus::holds:
      return "holds";
    case FlatStatus::fails:
      return "fails";
    case FlatStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

Decision FlatnessReport::flat() const {
  const FlatStatus all[] = {f1.status, f2.status, f3.status};
  for (auto s : all)
    if (s == FlatStatus::fails) return Decision::no;
  for (auto s : all)
    if (s != FlatStatus::holds) return Decision::unknown;
  return Decision::yes;
}

namespace {

/// covered[i][j]: some c has both i and j in its reach.
using PairTable = std::vector<std::vector<bool>>;

void cover(PairTable& t, const std::vector<std::size_t>& reach) {
  for (std::size_t i : reach)
    for (std::size_t j : reach) t[i][j] = true;
}

CriterionReport f1_report(std::size_t n) {
  CriterionReport r;
  r.status = n > 0 ? FlatStatus::holds : FlatStatus::fails;
  r.checked = 1;
  return r;
}

/// F3 given act[m][e] for M-element representatives ms. Premises are pairs of
/// distinct representatives that agree on some e.
template <class Act, class Solve>
CriterionReport f3_report(const std::vector<Word>& ms, std::size_t n, Act act, Solve solve,
                          bool exact_failure, std::size_t search_len) {
  CriterionReport r;
  r.status = FlatStatus::holds;
  r.at_bound = true;
  r.note = "premises m a = n a with |m|, |n| <= " + std::to_string(search_len);
  for (std::size_t e = 0; e < n; ++e) {
    std::map<std::size_t, std::vector<std::size_t>> by_image;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (auto img = act(i, e)) by_image[*img].push_back(i);
    for (const auto& [img, group] : by_image) {
      for (std::size_t x = 0; x < group.size(); ++x) {
        for (std::size_t y = x + 1; y < group.size(); ++y) {
          ++r.checked;
          if (solve(group[x], group[y], e)) continue;
          if (r.status == FlatStatus::holds ||
              (exact_failure && r.status == FlatStatus::unknown)) {
            r.status = exact_failure ? FlatStatus::fails : FlatStatus::unknown;
            r.at_bound = false;
            r.a = e;
            r.m = ms[group[x]];
            r.n = ms[group[y]];
            if (exact_failure) r.note = "free monoid: m s = n s forces m = n";
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

FlatnessReport check_flat(const FiniteLeftMSet& a, std::size_t search_len) {
  FlatnessReport rep;
  rep.search_len = search_len;
  const std::size_t n = a.size();
  const std::size_t rank = a.presentation().rank();
  rep.f1 = f1_report(n);

  // F2 is decided exactly by the finite orbits M c.
  PairTable covered(n, std::vector<bool>(n, false));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> reach{c};
    seen[c] = true;
    for (std::size_t k = 0; k < reach.size(); ++k)
      for (Letter g = 0; g < rank; ++g) {
        const std::size_t y = a.act_letter(g, reach[k]);
        if (!seen[y]) seen[y] = true, reach.push_back(y);
      }
    cover(covered, reach);
  }
  rep.f2.status = FlatStatus::holds;
  rep.f2.note = "exact: orbits of the finite carrier";
  for (std::size_t j = 0; j < n && rep.f2.status == FlatStatus::holds; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ++rep.f2.checked;
      if (!covered[i][j]) {
        rep.f2.status = FlatStatus::fails;
        rep.f2.a = i;
        rep.f2.b = j;
        break;
      }
    }

  const auto& p = a.presentation();
  const auto oracle = make_oracle(p);
  const auto ms = elements_within(*oracle, search_len);
  std::vector<std::vector<std::size_t>> act(ms.size(), std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t e = 0; e < n; ++e) act[i][e] = a.act(ms[i], e);
  auto solve = [&](std::size_t mi, std::size_t ni, std::size_t e) {
    for (std::size_t s = 0; s < ms.size(); ++s) {
      if (oracle->equal(concat(ms[mi], ms[s]), concat(ms[ni], ms[s])) != Decision::yes) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (act[s][b] == e) return true;
    }
    return false;
  };
  rep.f3 = f3_report(
      ms, n, [&](std::size_t i, std::size_t e) -> std::optional<std::size_t> { return act[i][e]; },
      solve, p.flags().relation_free && oracle->exact(), search_len);
  return rep;
}

FlatnessReport check_flat(const SymbolicMSet& a, std::size_t search_len) {
  FlatnessReport rep;
  rep.search_len = search_len;
  rep.trunc_len = a.trunc_len();
  const std::size_t n = a.size();
  const WordOracle& full = a.oracle();
  rep.f1 = f1_report(n);

  const auto base_oracle = make_oracle(a.base());
  const auto ms = elements_within(*base_oracle, search_len);
  const auto candidates = elements_within(full, a.trunc_len() + search_len);

  PairTable covered(n, std::vector<bool>(n, false));
  for (std::size_t e = 0; e < n; ++e) covered[e][e] = true;
  for (const Word& c : candidates) {
    std::vector<std::size_t> reach;
    for (const Word& m : ms)
      if (auto e = a.index_of(full.canonical(concat(m, c)))) reach.push_back(*e);
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    if (reach.size() > 1) cover(covered, reach);
  }
  const bool free_base = a.base().flags().relation_free;
  rep.f2.status = FlatStatus::holds;
  rep.f2.at_bound = true;
  rep.f2.note = "c within length " + std::to_string(a.trunc_len() + search_len) +
                ", multipliers within " + std::to_string(search_len);
  std::optional<std::pair<std::size_t, std::size_t>> first_open;
  for (std::size_t j = 0; j < n && rep.f2.status != FlatStatus::fails; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ++rep.f2.checked;
      if (covered[i][j]) continue;
      if (!first_open) first_open = {i, j};
      if (free_base) {
        // In the free group, a = m c and b = n c force a b^-1 = m n^-1.
        const GroupWord q = a.to_group_word(a.element(i)) * a.to_group_word(a.element(j)).inverse();
        if (!q.split_positive_negative()) {
          rep.f2.status = FlatStatus::fails;
          rep.f2.at_bound = false;
          rep.f2.a = i;
          rep.f2.b = j;
          rep.f2.note = "exact: a b^-1 is not of the form m n^-1 in the free group";
          break;
        }
      }
    }
  }
  if (rep.f2.status == FlatStatus::holds && first_open) {
    rep.f2.status = FlatStatus::unknown;
    rep.f2.at_bound = false;
    rep.f2.a = first_open->first;
    rep.f2.b = first_open->second;
  }

  // F3 premises and resolutions use canonical forms in the localization.
  std::vector<std::vector<std::optional<std::size_t>>> act(ms.size(),
                                                           std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t e = 0; e < n; ++e) act[i][e] = a.index_of(full.canonical(concat(ms[i], a.element(e))));
  auto solve = [&](std::size_t mi, std::size_t ni, std::size_t e) {
    for (const Word& s : ms) {
      if (base_oracle->equal(concat(ms[mi], s), concat(ms[ni], s)) != Decision::yes) continue;
      for (const Word& b : candidates)
        if (full.canonical(concat(s, b)) == a.element(e)) return true;
    }
    return false;
  };
  rep.f3 = f3_report(
      ms, n, [&](std::size_t i, std::size_t e) { return act[i][e]; }, solve, false, search_len);
  return rep;
}

}  // namespace montop
