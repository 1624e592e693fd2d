#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "montop/error.hpp"

namespace montop {

bool is_prime(std::uint64_t n);
/// Prime factorization as (prime, exponent), ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

struct Exponent {
  bool infinite = false;
  std::uint64_t value = 0;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// prod p^e_p over a declared prime list; undeclared primes have e_p = 0.
class SupernaturalNumber {
 public:
  SupernaturalNumber(std::vector<std::uint64_t> primes, std::vector<Exponent> exponents);
  /// "2:inf,3:1" over the declared primes; unmentioned declared primes get 0.
  static SupernaturalNumber parse(const std::vector<std::uint64_t>& primes, std::string_view text);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  Exponent exponent(std::uint64_t p) const;
  bool declared(std::uint64_t p) const;
  /// Sigma_y: primes with finite exponent, undeclared ones included.
  bool in_sigma(std::uint64_t p) const { return !exponent(p).infinite; }
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<Exponent> exps_;
};

/// Parse "2,3,5": sorted distinct primes.
std::vector<std::uint64_t> parse_prime_list(std::string_view text);

/// a/b in lowest terms, a, b >= 1.
struct PositiveRational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  /// Reduces; throws InputError on zero.
  PositiveRational(std::uint64_t a, std::uint64_t b);
  static PositiveRational parse(std::string_view text);
  std::string to_string() const;
};

/// v_p(n) <= e_p for every p.
bool sn_divides(std::uint64_t n, const SupernaturalNumber& s);
/// Whether n has a prime factor outside the declared list.
bool outside_declared(std::uint64_t n, const SupernaturalNumber& s);
/// a/b in A_y iff b | y.
bool sn_in_A_y(const PositiveRational& q, const SupernaturalNumber& y);
/// a/b in M_y iff no prime factor of b lies in Sigma_y.
bool sn_in_M_y(const PositiveRational& q, const SupernaturalNumber& y);

}  // namespace montop
