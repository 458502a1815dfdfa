#pragma once

// Dense double-precision cross-check of the reduced formalism: two-site
// projectors from the Casimir polynomial, three-site embeddings, and the
// unreduced Yang–Baxter residual.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sl2ybe/exact.hpp"
#include "sl2ybe/spectral.hpp"
#include "sl2ybe/ybe.hpp"

namespace sl2ybe {

using DenseOperator = Eigen::MatrixXd;

inline constexpr double kProjectorTol = 1e-10;
inline constexpr double kIdentityTol = 1e-9;
inline constexpr double kYbeTol = 1e-10;

/// Largest 2s the dense routines accept (three-site dimension (2s+1)^3).
inline constexpr int kDenseTwoSMax = 4;

/// P^0 .. P^2s on V_s ⊗ V_s, P^j = Π_{i≠j} (J² - x_i)/(x_j - x_i), x_j = j(j+1).
/// Throws std::domain_error beyond the dimension cap.
std::vector<DenseOperator> dense_projectors(HalfInt s);

/// Σ_j (-1)^(2s-j) P^j.
DenseOperator dense_permutation_from_projectors(HalfInt s);
/// The permutation of basis indices a ⊗ b -> b ⊗ a.
DenseOperator dense_swap(HalfInt s);

double max_abs(const DenseOperator& x);

struct NamedResidual {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool ok = false;
};

/// Completeness, orthogonality, idempotence, symmetry and the P reconstruction.
std::vector<NamedResidual> dense_projector_checks(HalfInt s);

/// The E/P/P^0 algebra on V_s^⊗3 for both orderings (12,23) and (23,12),
/// with ξ = (-1)^(2s), η = 1/(2s+1), and P^0_12 P^j_23 P^0_12 = (2j+1)/(2s+1)^2 P^0_12.
std::vector<NamedResidual> dense_lemma1_check(HalfInt s);

/// max |R12(λ) R23(λ+μ) R12(μ) - R23(μ) R12(λ+μ) R23(λ)|.
double dense_ybe_residual(const SpectralFamily& fam, const Scalar& lambda, const Scalar& mu);

struct ConsistencyRecord {
  Scalar lambda;
  Scalar mu;
  double dense_residual = 0;
  bool dense_zero = false;
  bool exact_zero = false;  // every reduced level vanishes
  bool consistent = false;
};

std::vector<ConsistencyRecord> reduction_consistency(const SpectralFamily& fam,
                                                     const std::vector<Sample>& samples);

/// Numerical rank of {F, G, H, H̃} restricted to the highest-weight space W_n
/// (kernel of S+ in the S^z = 3s - n sector of V_s^⊗3).
int dense_level_rank(HalfInt s, int m, int n);

}  // namespace sl2ybe
