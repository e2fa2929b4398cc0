#ifndef EXPMAT_ORACLE_HPP
#define EXPMAT_ORACLE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "expmat/families.hpp"
#include "expmat/matrix.hpp"
#include "expmat/ppoly.hpp"

namespace expmat {

/// Ceiling on brute-force candidate counts.  EXPMAT_MAX_CANDIDATES overrides,
/// capped at 1e8; enumeration additionally respects the tighter default below.
std::uint64_t search_candidate_ceiling();
constexpr std::uint64_t kEnumerationCeiling = 10'000'000;

struct EnumSpec {
  FieldCtxPtr field;                  // finite, q <= 9
  std::size_t n = 3;                  // 2 or 3
  std::optional<Family> family;       // absent = all families for this size
  std::size_t degree_bound = 1;       // max exponent i of T^{p^i}, <= 3
};

/// Streams every family matrix for the spec in a fixed lexicographic order
/// over coefficient tuples.  Every emitted matrix passes the exponential
/// verifier; emission order is deterministic.
void enumerate_family(const EnumSpec& spec,
                      const std::function<void(const ExpMatrix&, const FamilyForm&)>& sink);

std::vector<ExpMatrix> enumerate_family_vec(const EnumSpec& spec);

/// Exhaustive search for P in GL(n, F_q) with P A P^-1 = B; lexicographically
/// first witness or nullopt.
std::optional<ScalarMatrix> brute_linear_equiv(const ExpMatrix& a, const ExpMatrix& b);

/// Exhaustive search for Q in GL(2, F_q) with (a1 a2) = (b1 b2) Q.
std::optional<ScalarMatrix> brute_gl2_tuple_equiv(const std::pair<PPoly, PPoly>& alpha,
                                                  const std::pair<PPoly, PPoly>& beta);

struct FamilyConjugation {
  ScalarMatrix p;
  FamilyForm form;
};

/// Exhaustive search for P in GL(3, F_q) putting A into one of the family
/// shapes; NotFound error when the search is exhausted.
FamilyConjugation brute_conjugate_to_family(const ExpMatrix& a);

}  // namespace expmat

#endif
