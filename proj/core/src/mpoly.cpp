#include "expmat/mpoly.hpp"

namespace expmat {

TMPoly to_tpoly(const MPoly& f) {
  TMPoly out(f.ctx(), f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, Poly::constant(c));
  return out;
}

LocElem::LocElem(MPoly numerator, std::uint32_t pow) : num_(std::move(numerator)), pow_(pow) {
  reduce();
}

void LocElem::reduce() {
  if (num_.is_zero()) {
    pow_ = 0;
    return;
  }
  while (pow_ > 0 && num_.divisible_by_var(0)) {
    num_ = num_.divided_by_var_power(0, 1);
    --pow_;
  }
}

LocElem LocElem::operator+(const LocElem& o) const {
  std::uint32_t p = std::max(pow_, o.pow_);
  MPoly a = num_.multiplied_by_var_power(0, p - pow_);
  MPoly b = o.num_.multiplied_by_var_power(0, p - o.pow_);
  return LocElem(a + b, p);
}

LocElem LocElem::operator*(const LocElem& o) const {
  return LocElem(num_ * o.num_, pow_ + o.pow_);
}

std::string LocElem::str() const {
  if (pow_ == 0) return num_.str();
  return "(" + num_.str() + ")/x0^" + std::to_string(pow_);
}

}  // namespace expmat
