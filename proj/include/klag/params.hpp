#pragma once

#include <vector>

#include "klag/types.hpp"

namespace klag {

/// The triple (N, a, k) for the Coxeter group ℤ₂ᴺ, with one multiplicity per
/// coordinate sign flip.
struct DeformParams {
  int N = 1;
  double a = 2.0;
  std::vector<double> k{0.0};

  /// Validates and builds; a single k value is broadcast to all coordinates.
  static DeformParams make(int N, double a, std::vector<double> k);

  double index() const;  ///< ⟨k⟩ = Σ k_i
  double mu() const;     ///< 2⟨k⟩ + N + a − 2
  bool k_zero() const;
  double lambda(int m) const;  ///< (2m + 2⟨k⟩ + N − 2) / a
};

/// One summand of the spherical-harmonic decomposition.
struct RadialSector {
  int m = 0;
  double lambda = 0.0;
  DeformParams params;

  static RadialSector make(const DeformParams& params, int m);
};

}  // namespace klag
