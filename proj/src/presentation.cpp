#include "montop/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "montop/error.hpp"
#include "montop/rewriting.hpp"

namespace montop {
namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || s == "1") return false;
  std::size_t i = 0;
  if (!(std::isalnum(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  while (i < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
    ++i;
  while (i < s.size() && s[i] == '\'') ++i;
  return i == s.size();
}

// Tokenize one side of a relation or a standalone word. `column0` is the
// 1-based column of text[0] in the source line, for diagnostics.
Word parse_word_at(const MonoidPresentation& p, std::string_view text,
                   std::size_t line, std::size_t column0) {
  Word out;
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& msg) -> ParseError {
    return ParseError(line, column0 + at, msg);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    // Longest generator name starting here.
    std::size_t best = 0;
    Letter best_g = 0;
    for (std::size_t g = 0; g < p.rank(); ++g) {
      const std::string& n = p.generators()[g];
      if (n.size() > best && text.substr(i, n.size()) == n) {
        best = n.size();
        best_g = static_cast<Letter>(g);
      }
    }
    if (best == 0) {
      if (ch == '1') {
        ++i;
        continue;
      }
      std::string sym(1, ch);
      throw fail(i, "unknown symbol '" + sym + "'");
    }
    i += best;
    std::size_t count = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = i + 1;
      if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j])))
        throw fail(i, "expected exponent after '^'");
      count = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        count = count * 10 + static_cast<std::size_t>(text[j] - '0');
        if (count > 4096) throw fail(i, "exponent too large");
        ++j;
      }
      i = j;
    }
    for (std::size_t c = 0; c < count; ++c) out.push_back(best_g);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

MonoidPresentation::MonoidPresentation() { flags_ = {true, true}; }

MonoidPresentation::MonoidPresentation(std::vector<std::string> generators,
                                       std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!valid_name(g))
      throw InputError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second)
      throw InputError("duplicate generator '" + g + "'");
  }
  if (generators_.size() > 0xFFFF) throw GuardError("too many generators");
  for (const auto& r : relations_) {
    check_word(r.lhs);
    check_word(r.rhs);
  }

  flags_.relation_free = std::all_of(
      relations_.begin(), relations_.end(),
      [](const Relation& r) { return r.lhs == r.rhs; });

  // Commutativity: a direct scan of the relation list first, then the
  // (possibly partial) rewriting system for whatever pairs remain.
  const std::size_t k = rank();
  std::vector<std::pair<Letter, Letter>> open;
  for (Letter g = 0; g < k; ++g) {
    for (Letter h = g + 1; h < k; ++h) {
      const Word gh{g, h}, hg{h, g};
      const bool listed = std::any_of(
          relations_.begin(), relations_.end(), [&](const Relation& r) {
            return (r.lhs == gh && r.rhs == hg) || (r.lhs == hg && r.rhs == gh);
          });
      if (!listed) open.emplace_back(g, h);
    }
  }
  if (open.empty() || flags_.relation_free) {
    flags_.commutative = open.empty();
  } else {
    const RewritingSystem rs = complete(k, relations_, CompletionBounds{});
    flags_.commutative = std::all_of(open.begin(), open.end(), [&](auto gh) {
      return words_equal(rs, Word{gh.first, gh.second},
                         Word{gh.second, gh.first}) == Decision::yes;
    });
  }
}

std::optional<Letter> MonoidPresentation::find(std::string_view name) const {
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (generators_[g] == name) return static_cast<Letter>(g);
  return std::nullopt;
}

void MonoidPresentation::check_word(const Word& w) const {
  if (w.alphabet_extent() > rank())
    throw InputError("word uses a letter outside the alphabet of size " +
                     std::to_string(rank()));
}

Word MonoidPresentation::concat(const Word& a, const Word& b) const {
  check_word(a);
  check_word(b);
  return montop::concat(a, b);
}

Word MonoidPresentation::parse_word(std::string_view text) const {
  return parse_word_at(*this, text, 1, 1);
}

bool MonoidPresentation::juxtapose() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const std::string& n) {
                       return n.find_first_not_of('\'', 1) == std::string::npos &&
                              std::isalpha(static_cast<unsigned char>(n[0]));
                     });
}

std::string MonoidPresentation::format(const Word& w) const {
  if (w.empty()) return "1";
  const bool tight = juxtapose();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !tight) out += ' ';
    out += generators_.at(w[i]);
  }
  return out;
}

std::string MonoidPresentation::to_text() const {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : generators_) os << ' ' << g;
  os << '\n';
  for (const auto& r : relations_)
    os << "rel: " << format(r.lhs) << " = " << format(r.rhs) << '\n';
  return os.str();
}

MonoidPresentation parse_presentation(std::string_view text) {
  std::vector<std::string> gens;
  bool have_gens = false;
  struct PendingRel {
    std::string_view lhs, rhs;
    std::size_t line, lhs_col, rhs_col;
  };
  std::vector<PendingRel> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;

    const std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, 1, "expected 'gens:' or 'rel:'");
    const std::string_view key = trim(raw.substr(0, colon));
    const std::string_view body = raw.substr(colon + 1);
    const std::size_t body_col = colon + 2;

    if (key == "gens") {
      if (have_gens) throw ParseError(line_no, 1, "duplicate 'gens:' line");
      if (!pending.empty())
        throw ParseError(line_no, 1, "'gens:' must precede relations");
      have_gens = true;
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
          ++i;
        if (i >= body.size()) break;
        std::size_t j = i;
        while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])))
          ++j;
        std::string name(body.substr(i, j - i));
        if (!valid_name(name))
          throw ParseError(line_no, body_col + i,
                           "invalid generator name '" + name + "'");
        if (std::find(gens.begin(), gens.end(), name) != gens.end())
          throw ParseError(line_no, body_col + i,
                           "duplicate generator '" + name + "'");
        gens.push_back(std::move(name));
        i = j;
      }
    } else if (key == "rel") {
      if (!have_gens)
        throw ParseError(line_no, 1, "'gens:' must come first");
      const std::size_t eq = body.find('=');
      if (eq == std::string_view::npos)
        throw ParseError(line_no, body_col, "relation needs '='");
      if (body.find('=', eq + 1) != std::string_view::npos)
        throw ParseError(line_no, body_col + body.find('=', eq + 1),
                         "relation has more than one '='");
      pending.push_back({body.substr(0, eq), body.substr(eq + 1), line_no,
                         body_col, body_col + eq + 1});
    } else {
      throw ParseError(line_no, 1,
                       "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_gens) throw ParseError(line_no, 1, "missing 'gens:' line");

  // Parse relation sides against a relation-free presentation on the same
  // alphabet, so symbol lookup is available before the real one exists.
  const MonoidPresentation alphabet(gens, {});
  std::vector<Relation> rels;
  for (const auto& r : pending) {
    rels.push_back({parse_word_at(alphabet, r.lhs, r.line, r.lhs_col),
                    parse_word_at(alphabet, r.rhs, r.line, r.rhs_col)});
  }
  return MonoidPresentation(std::move(gens), std::move(rels));
}

MonoidPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace montop
