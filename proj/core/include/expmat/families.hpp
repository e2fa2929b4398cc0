#ifndef EXPMAT_FAMILIES_HPP
#define EXPMAT_FAMILIES_HPP

#include <optional>
#include <string>

#include "expmat/matrix.hpp"
#include "expmat/ppoly.hpp"

namespace expmat {

/// The canonical unipotent shapes: 3x3 families parametrized by additive
/// polynomials, the 2x2 upper-unipotent shape, and General for anything that
/// matches none of them.
enum class Family { A12, A21, J3, Upper2, General };

const char* family_name(Family f);

struct FamilyForm {
  Family family;
  std::optional<PPoly> alpha1;
  std::optional<PPoly> alpha2;
};

// [ 1 a1 a2 ; 0 1 0 ; 0 0 1 ]
ExpMatrix make_a12(const PPoly& alpha1, const PPoly& alpha2);
// [ 1 0 a2 ; 0 1 a1 ; 0 0 1 ]
ExpMatrix make_a21(const PPoly& alpha1, const PPoly& alpha2);
// [ 1 0 a ; 0 1 0 ; 0 0 1 ]
ExpMatrix make_a11(const PPoly& alpha);
// [ 1 a1 a1^2/2 + a2 ; 0 1 a1 ; 0 0 1 ], p >= 3, a1 != 0
ExpMatrix make_j3(const PPoly& alpha1, const PPoly& alpha2);
// [ 1 a ; 0 1 ]
ExpMatrix make_upper2(const PPoly& alpha);
// [ 1 T ; 0 1 ] (+) I_{n-2}
ExpMatrix char0_standard(const FieldCtxPtr& ctx, std::size_t n);
// [ 1 0 ; T 1 ] (+) I_{n-2}, the target of the Lemma 3.1 square
ExpMatrix char0_lower_standard(const FieldCtxPtr& ctx, std::size_t n);

/// Pattern-match a validated exponential matrix against the family shapes.
/// Returns General when none fits; the oracle fallback lives in classify.
FamilyForm recognize_family_shape(const ExpMatrix& a);

}  // namespace expmat

#endif
