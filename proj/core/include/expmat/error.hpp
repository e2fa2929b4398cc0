#ifndef EXPMAT_ERROR_HPP
#define EXPMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace expmat {

enum class errc {
  mixed_fields,
  division_by_zero,
  not_finite_field,
  not_additive,
  zero_input,
  dimension_mismatch,
  not_nilpotent,
  wrong_characteristic,
  nonconstant_determinant,
  internal_inconsistency,
  zero_scalar,
  singular_matrix,
  bad_derivation_shape,
  too_large,
  triangularization_failed,
  not_found,
  not_normalized,
  bad_input,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace expmat

#endif
