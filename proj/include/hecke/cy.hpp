#pragma once

#include <cstddef>
#include <string>

#include "hecke/frt.hpp"

namespace hecke {

// phi(v_i) = -q^{-1} Q sum_{l,j,k} d_{lk} c^{jk}_{ji} v_l, as the matrix
// Phi(l, i).
Mat phi_automorphism(const Braiding& b, const HomologicalData& hd);

// phi == (-1)^{d+1} id
bool cy_verdict(const Mat& phi, std::size_t d);

// Entrywise form of the criterion: for all l, i the scalar
// -q^{-1} Q sum_{j,k} d_{lk} c^{jk}_{ji} equals (-1)^{d+1} when l = i and 0
// otherwise. Evaluated directly from (b, hd), not from a Phi matrix.
bool cy_condition_entrywise(const Braiding& b, const HomologicalData& hd);

// Rigid dualizing complex _{sigma} R[d](-d) with sigma = phi o eps^{d+1}.
struct DualizingDescriptor {
  Mat twist;  // sigma restricted to V
  std::size_t shift = 0;
  long internal_shift = 0;
  bool twist_is_identity = false;
  std::string text;
};

DualizingDescriptor dualizing_descriptor(const Mat& phi, std::size_t d);

}  // namespace hecke
