#include "montop/supernatural.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "montop/error.hpp"

namespace montop {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) n /= d, ++e;
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

std::uint64_t parse_uint(std::string_view s, const char* what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> parse_prime_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) {
    const auto p = parse_uint(part, "prime");
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (!out.empty() && out.back() >= p) throw InputError("primes must be listed in increasing order");
    out.push_back(p);
  }
  return out;
}

SupernaturalNumber::SupernaturalNumber(std::vector<std::uint64_t> primes,
                                       std::vector<Exponent> exponents)
    : primes_(std::move(primes)), exps_(std::move(exponents)) {
  if (primes_.size() != exps_.size()) throw InputError("one exponent per declared prime");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) throw InputError(std::to_string(primes_[i]) + " is not prime");
    if (i > 0 && primes_[i - 1] >= primes_[i]) throw InputError("primes must be increasing");
  }
}

SupernaturalNumber SupernaturalNumber::parse(const std::vector<std::uint64_t>& primes,
                                             std::string_view text) {
  std::vector<Exponent> exps(primes.size());
  std::vector<bool> seen(primes.size(), false);
  if (!text.empty()) {
    for (auto part : split(text, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string_view::npos) throw InputError("expected prime:exponent in '" + std::string(part) + "'");
      const auto p = parse_uint(part.substr(0, colon), "prime");
      auto it = std::find(primes.begin(), primes.end(), p);
      if (it == primes.end()) throw InputError(std::to_string(p) + " is not a declared prime");
      const auto i = static_cast<std::size_t>(it - primes.begin());
      if (seen[i]) throw InputError(std::to_string(p) + " given twice");
      seen[i] = true;
      auto e = part.substr(colon + 1);
      while (!e.empty() && e.front() == ' ') e.remove_prefix(1);
      if (e == "inf") {
        exps[i] = {true, 0};
      } else {
        exps[i] = {false, parse_uint(e, "exponent")};
      }
    }
  }
  return SupernaturalNumber(primes, std::move(exps));
}

bool SupernaturalNumber::declared(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

Exponent SupernaturalNumber::exponent(std::uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return {};
  return exps_[static_cast<std::size_t>(it - primes_.begin())];
}

std::string SupernaturalNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!exps_[i].infinite && exps_[i].value == 0) continue;
    if (!out.empty()) out += "*";
    out += std::to_string(primes_[i]) + "^" +
           (exps_[i].infinite ? std::string("inf") : std::to_string(exps_[i].value));
  }
  return out.empty() ? "1" : out;
}

PositiveRational::PositiveRational(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw InputError("rational must be positive");
  const auto g = std::gcd(a, b);
  num = a / g;
  den = b / g;
}

PositiveRational PositiveRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_uint(text, "numerator"), 1};
  return {parse_uint(text.substr(0, slash), "numerator"),
          parse_uint(text.substr(slash + 1), "denominator")};
}

std::string PositiveRational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool sn_divides(std::uint64_t n, const SupernaturalNumber& s) {
  if (n == 0) throw InputError("divisibility needs n >= 1");
  for (const auto& [p, e] : factorize(n)) {
    const Exponent x = s.exponent(p);
    if (!x.infinite && e > x.value) return false;
  }
  return true;
}

bool outside_declared(std::uint64_t n, const SupernaturalNumber& s) {
  for (const auto& [p, e] : factorize(n))
    if (!s.declared(p)) return true;
  return false;
}

bool sn_in_A_y(const PositiveRational& q, const SupernaturalNumber& y) {
  return sn_divides(q.den, y);
}

bool sn_in_M_y(const PositiveRational& q, const SupernaturalNumber& y) {
  for (const auto& [p, e] : factorize(q.den))
    if (y.in_sigma(p)) return false;
  return true;
}

}  // namespace montop
