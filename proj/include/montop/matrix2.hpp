#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "montop/error.hpp"

namespace montop {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// [[a, b], [c, d]] over Z.
struct IntMatrix2 {
  Integer a = 1, b = 0, c = 0, d = 1;

  static IntMatrix2 identity() { return {}; }
  static IntMatrix2 diag(Integer x, Integer y) { return {std::move(x), 0, 0, std::move(y)}; }
  /// "a b; c d"
  static IntMatrix2 parse(std::string_view text);

  Integer det() const { return a * d - b * c; }
  IntMatrix2 adjugate() const { return {d, -b, -c, a}; }
  bool is_diagonal() const { return b == 0 && c == 0; }
  std::string to_string() const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// [[a, b], [c, d]] over Q.
struct RatMatrix2 {
  Rational a = 1, b = 0, c = 0, d = 1;

  /// "2 1/2; 0 1/3"
  static RatMatrix2 parse(std::string_view text);
  Rational det() const { return a * d - b * c; }
  std::string to_string() const;
};

/// m = u d v with u, v unimodular and d = diag(d1, d2), d1 >= 1, d1 | d2.
struct SmithForm {
  IntMatrix2 u, d, v;
};

/// Throws InputError when det(m) = 0.
SmithForm smith_normal_form(const IntMatrix2& m);

/// m adj(m) = det(m) I.
bool adjugate_check(const IntMatrix2& m);

/// Some p in sigma divides det(m). Throws InputError when det(m) = 0.
bool mat_prime_membership(const IntMatrix2& m, const std::vector<std::uint64_t>& sigma);

/// M_y for the point of e11: lower-left entry 0 and upper-left entry in Z.
bool mat_in_M_y_e11(const RatMatrix2& g);
/// The zero-matrix point has A_y = M_y = GL2(Q); recorded, not derived.
bool mat_in_M_y_zero(const RatMatrix2& g);

}  // namespace montop
