#include "montop/torus_knot.hpp"

#include "montop/error.hpp"

namespace montop {
namespace {

void check_params(unsigned k, unsigned l) {
  if (k < 2 || l < 2) throw InputError("torus knot parameters need k, l >= 2");
}

void check_ab(const Word& w) {
  if (w.alphabet_extent() > 2)
    throw InputError("torus knot words use the letters a and b only");
}

}  // namespace

void HClass::push(Letter gen, long exponent) {
  const long ord = order(gen);
  long e = ((exponent % ord) + ord) % ord;
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().gen == gen) {
    e = (e + syl_.back().power) % ord;
    if (e == 0) {
      syl_.pop_back();
    } else {
      syl_.back().power = static_cast<unsigned>(e);
    }
    return;
  }
  syl_.push_back({gen, static_cast<unsigned>(e)});
}

HClass HClass::inverse() const {
  HClass out(k_, l_);
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    out.push(it->gen, -static_cast<long>(it->power));
  return out;
}

std::uint64_t tk_degree(const Word& w, unsigned k, unsigned l) {
  check_params(k, l);
  check_ab(w);
  std::uint64_t d = 0;
  for (Letter g : w) d += g == 0 ? l : k;
  return d;
}

HClass tk_class(const Word& w, unsigned k, unsigned l) {
  check_params(k, l);
  check_ab(w);
  HClass h(k, l);
  for (Letter g : w) h.push(g, 1);
  return h;
}

std::uint64_t tk_delta(const HClass& h, unsigned k, unsigned l) {
  check_params(k, l);
  std::uint64_t d = 0;
  for (const auto& s : h.syllables()) d += s.power * (s.gen == 0 ? l : k);
  return d;
}

Word tk_alternating_word(const HClass& h) {
  Word w;
  for (const auto& s : h.syllables())
    for (unsigned i = 0; i < s.power; ++i) w.push_back(s.gen);
  return w;
}

TorusKnotElement tk_embed(const Word& w, unsigned k, unsigned l) {
  return {k, l, static_cast<std::int64_t>(tk_degree(w, k, l)), tk_class(w, k, l)};
}

TkNormalForm tk_normal_form(const Word& w, unsigned k, unsigned l) {
  const HClass h = tk_class(w, k, l);
  const std::uint64_t deg = tk_degree(w, k, l);
  const std::uint64_t delta = tk_delta(h, k, l);
  const std::uint64_t kl = static_cast<std::uint64_t>(k) * l;
  // deg >= delta and deg == delta mod kl for every monoid element.
  if (deg < delta || (deg - delta) % kl != 0)
    throw std::logic_error("torus knot degree bookkeeping violated");
  return {(deg - delta) / kl, tk_alternating_word(h)};
}

bool tk_words_equal(const Word& a, const Word& b, unsigned k, unsigned l) {
  return tk_embed(a, k, l) == tk_embed(b, k, l);
}

}  // namespace montop
