#ifndef EXPMAT_CLASSIFY_HPP
#define EXPMAT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>

#include "expmat/families.hpp"
#include "expmat/matrix.hpp"
#include "expmat/ppoly.hpp"
#include "expmat/projmap.hpp"

namespace expmat {

/// Birational invariant of an exponential matrix.  Line carries the monic
/// GL(1) representative, Plane the reduced-echelon GL(2) pair; equality is
/// structural.
class BirClass {
 public:
  enum class Kind { Identity, Char0Standard, Line, Plane };

  static BirClass identity() { return BirClass(Kind::Identity); }
  static BirClass char0_standard() { return BirClass(Kind::Char0Standard); }
  static BirClass line(PPoly gamma);
  static BirClass plane(PPoly gamma1, PPoly gamma2);

  Kind kind() const { return kind_; }
  const PPoly& line_poly() const;
  const std::pair<PPoly, PPoly>& plane_pair() const;

  bool operator==(const BirClass& o) const;
  bool operator!=(const BirClass& o) const { return !(*this == o); }

  std::string str() const;

 private:
  explicit BirClass(Kind k) : kind_(k) {}
  Kind kind_;
  std::optional<PPoly> line_;
  std::optional<std::pair<PPoly, PPoly>> plane_;
};

struct RecognizedFamily {
  FamilyForm form;
  /// P with P A P^-1 in the family shape; identity for a direct match,
  /// absent when normalization failed (form.family == General).
  std::optional<ScalarMatrix> conjugator;
};

/// Family recognition with the desk-scale brute-force fallback replacing the
/// cited external normal-form results.
RecognizedFamily recognize_family(const ExpMatrix& a);

struct ClassifyResult {
  BirClass cls;
  ExpMatrix canonical;
  Witness witness;
  bool verified = false;  // set when the witness chain was re-checked
};

struct ClassifyOptions {
  bool verify_witness = true;
};

ClassifyResult classify_char0(const ExpMatrix& a, const ClassifyOptions& opts = {});
ClassifyResult classify_2x2(const ExpMatrix& a, const ClassifyOptions& opts = {});
ClassifyResult classify_3x3(const ExpMatrix& a, const ClassifyOptions& opts = {});
/// Dispatch on (characteristic, n).
ClassifyResult classify(const ExpMatrix& a, const ClassifyOptions& opts = {});

struct EquivResult {
  bool equivalent = false;
  BirClass class_a;
  BirClass class_b;
  std::optional<Witness> witness;  // verified A -> B chain when equivalent
};

EquivResult equiv_bir(const ExpMatrix& a, const ExpMatrix& b, const ClassifyOptions& opts = {});

}  // namespace expmat

#endif
