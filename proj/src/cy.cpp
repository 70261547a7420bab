#include "hecke/cy.hpp"

namespace hecke {

namespace {

Scalar sign_power(std::size_t e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

Mat phi_automorphism(const Braiding& b, const HomologicalData& hd) {
  const std::size_t n = b.dim();
  const Scalar factor = -hd.quantum_label / hd.q;
  Mat phi(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) acc += hd.matrix(l, k) * b.coeff(j, k, j, i);
      phi(l, i) = factor * acc;
    }
  return phi;
}

bool cy_verdict(const Mat& phi, std::size_t d) { return phi == Mat::scalar(phi.rows(), sign_power(d + 1)); }

bool cy_condition_entrywise(const Braiding& b, const HomologicalData& hd) {
  const std::size_t n = b.dim();
  const Scalar target = sign_power(hd.d + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      Scalar sum;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(hd.matrix(l, k)) != 0) sum += hd.matrix(l, k) * b.coeff(j, k, j, i);
      const Scalar value = -hd.quantum_label * sum / hd.q;
      if (value != (l == i ? target : Scalar(0))) return false;
    }
  return true;
}

DualizingDescriptor dualizing_descriptor(const Mat& phi, std::size_t d) {
  DualizingDescriptor desc;
  desc.twist = sign_power(d + 1) * phi;
  desc.shift = d;
  desc.internal_shift = -static_cast<long>(d);
  desc.twist_is_identity = desc.twist.is_identity();
  const std::string shifts = "R[" + std::to_string(d) + "](−" + std::to_string(d) + ")";
  desc.text = desc.twist_is_identity ? shifts : "_{φε^" + std::to_string(d + 1) + "}" + shifts;
  return desc;
}

}  // namespace hecke
