#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "montop/presentation.hpp"

namespace montop {

/// Builtin presentations (an optional "builtin:" prefix is accepted):
///
///   trivial          no generators
///   free:k           free monoid on a, b, c, ...
///   comm:k           free commutative monoid on a, b, c, ...
///   torus:k,l        <a, b | a^k = b^l>
///   arith:2,3,5      free commutative monoid on p2, p3, p5 (a truncation of
///                    the positive integers under multiplication)
///   matrices[:2,3]   prime-ideal shadow of 2x2 integer matrices: the free
///                    commutative monoid on d2, d3 (determinant primes)
bool is_builtin(std::string_view name);
MonoidPresentation builtin_presentation(std::string_view name);

/// A builtin name or a presentation file path.
MonoidPresentation load_target(const std::string& target);

/// Generator names a, b, ..., z, then g27, g28, ...
std::vector<std::string> default_generator_names(std::size_t k);

MonoidPresentation free_monoid(std::size_t k);
MonoidPresentation free_commutative_monoid(std::vector<std::string> gens);
MonoidPresentation torus_knot_monoid(unsigned k, unsigned l);

/// Canonical names of the builtin suite used by cross-checks.
std::vector<std::string> builtin_suite();

}  // namespace montop
