#include "montop/matrix2.hpp"

#include <sstream>

#include "montop/error.hpp"

namespace montop {

namespace {

template <class T>
std::vector<T> parse_entries(std::string_view text, T (*conv)(const std::string&)) {
  std::vector<T> out;
  std::string cleaned(text);
  for (char& ch : cleaned)
    if (ch == ';' || ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) out.push_back(conv(tok));
  if (out.size() != 4) throw InputError("a 2x2 matrix needs four entries, got " + std::to_string(out.size()));
  return out;
}

Integer to_integer(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw InputError("bad integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw InputError("bad integer '" + s + "'");
  return Integer(s);
}

Rational to_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(to_integer(s));
  const Integer den = to_integer(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  return Rational(to_integer(s.substr(0, slash)), den);
}

std::string str(const Integer& x) { return x.str(); }

std::string str(const Rational& x) {
  const Integer n = numerator(x), d = denominator(x);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

}  // namespace

IntMatrix2 IntMatrix2::parse(std::string_view text) {
  auto e = parse_entries<Integer>(text, &to_integer);
  return {e[0], e[1], e[2], e[3]};
}

std::string IntMatrix2::to_string() const {
  return "[[" + str(a) + "," + str(b) + "],[" + str(c) + "," + str(d) + "]]";
}

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

RatMatrix2 RatMatrix2::parse(std::string_view text) {
  auto e = parse_entries<Rational>(text, &to_rational);
  return {e[0], e[1], e[2], e[3]};
}

std::string RatMatrix2::to_string() const {
  return "[[" + str(a) + "," + str(b) + "],[" + str(c) + "," + str(d) + "]]";
}

namespace {

// Working state with the invariant m = u * w * v.
struct Reduction {
  IntMatrix2 u, w, v;

  Integer& at(int i, int j) { return i == 0 ? (j == 0 ? w.a : w.b) : (j == 0 ? w.c : w.d); }

  void swap_rows() {
    std::swap(w.a, w.c), std::swap(w.b, w.d);
    std::swap(u.a, u.b), std::swap(u.c, u.d);
  }
  void swap_cols() {
    std::swap(w.a, w.b), std::swap(w.c, w.d);
    std::swap(v.a, v.c), std::swap(v.b, v.d);
  }
  // row_to += k * row_from; u absorbs the inverse on the right.
  void add_row(int to, int from, const Integer& k) {
    at(to, 0) += k * at(from, 0);
    at(to, 1) += k * at(from, 1);
    if (to == 1) {
      u.a -= k * u.b, u.c -= k * u.d;  // u <- u * E^-1, E = I + k e10
    } else {
      u.b -= k * u.a, u.d -= k * u.c;  // E = I + k e01
    }
  }
  // col_to += k * col_from; v absorbs the inverse on the left.
  void add_col(int to, int from, const Integer& k) {
    at(0, to) += k * at(0, from);
    at(1, to) += k * at(1, from);
    if (to == 1) {
      v.a -= k * v.c, v.b -= k * v.d;  // v <- F^-1 * v, F = I + k e01
    } else {
      v.c -= k * v.a, v.d -= k * v.b;  // F = I + k e10
    }
  }
  void negate_row(int i) {
    at(i, 0) = -at(i, 0), at(i, 1) = -at(i, 1);
    if (i == 0) {
      u.a = -u.a, u.c = -u.c;
    } else {
      u.b = -u.b, u.d = -u.d;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix2& m) {
  if (m.det() == 0) throw InputError("Smith normal form needs a nonzero determinant");
  Reduction r{IntMatrix2::identity(), m, IntMatrix2::identity()};
  while (true) {
    // Smallest nonzero entry to the pivot position.
    int bi = -1, bj = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (r.at(i, j) != 0 && (bi < 0 || abs(r.at(i, j)) < abs(r.at(bi, bj)))) bi = i, bj = j;
    if (bi == 1) r.swap_rows();
    if (bj == 1) r.swap_cols();
    const Integer p = r.at(0, 0);
    r.add_row(1, 0, -(r.at(1, 0) / p));
    r.add_col(1, 0, -(r.at(0, 1) / p));
    if (r.at(1, 0) != 0 || r.at(0, 1) != 0) continue;
    if (r.at(1, 1) % p != 0) {
      r.add_row(0, 1, 1);
      continue;
    }
    break;
  }
  if (r.at(0, 0) < 0) r.negate_row(0);
  if (r.at(1, 1) < 0) r.negate_row(1);
  return {r.u, r.w, r.v};
}

bool adjugate_check(const IntMatrix2& m) {
  const Integer det = m.det();
  return m * m.adjugate() == IntMatrix2::diag(det, det);
}

bool mat_prime_membership(const IntMatrix2& m, const std::vector<std::uint64_t>& sigma) {
  const Integer det = m.det();
  if (det == 0) throw InputError("matrix must have nonzero determinant");
  for (auto p : sigma)
    if (det % Integer(p) == 0) return true;
  return false;
}

bool mat_in_M_y_e11(const RatMatrix2& g) {
  if (g.det() == 0) throw InputError("matrix must be invertible");
  return g.c == 0 && denominator(g.a) == 1;
}

bool mat_in_M_y_zero(const RatMatrix2& g) {
  if (g.det() == 0) throw InputError("matrix must be invertible");
  return true;
}

}  // namespace montop
