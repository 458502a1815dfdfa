#pragma once

// The reduced Yang–Baxter equation
//   D(λ) Â(λ+μ) D(μ) = Â(μ) D(λ+μ) Â(λ),   Â = A D A,
// at each level n, checked exactly on rational sample grids, together with
// the scalar coefficients of the E + fP + gP^(2s-m) ansatz.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2ybe/amatrix.hpp"
#include "sl2ybe/spectral.hpp"

namespace sl2ybe {

struct Sample {
  Scalar lambda;
  Scalar mu;
};

/// Two disjoint six-pair grids of positive rationals and their 6x6 product.
/// All catalog poles sit at negative λ or at irrational t, so no grid point
/// hits one.
enum class Grid { A, B, Dense };

std::vector<Sample> sample_grid(Grid grid);
std::string grid_name(Grid grid);
/// "a" (alias "default"), "b" or "dense".
Grid parse_grid(const std::string& name);

struct ReducedResidual {
  int n = 0;
  Scalar lambda;
  Scalar mu;
  GaugedMatrix<Scalar> residual;  // LHS - RHS in the gauge of level n
  bool is_zero = false;
};

ReducedResidual reduced_ybe_check(const SpectralFamily& fam, int n, const Scalar& lambda,
                                  const Scalar& mu);

struct SampleVerdict {
  Scalar lambda;
  Scalar mu;
  bool zero = false;
};

struct LevelReport {
  int n = 0;
  std::vector<SampleVerdict> samples;
  bool pass = true;
};

struct FullReport {
  std::string family;
  HalfInt s;
  std::string grid;
  std::vector<LevelReport> levels;
  bool pass = true;
};

/// 0..floor(3s).
std::vector<int> all_levels(HalfInt s);

/// Per-level, per-sample verdicts. A coefficient the family does not define
/// raises std::domain_error naming it; poles raise EvaluationError.
FullReport full_check(const SpectralFamily& fam, const std::vector<int>& levels,
                      const std::vector<Sample>& samples, const std::string& grid_label = "custom");

nlohmann::json to_json(const FullReport& report);

/// f and g of the ansatz E + fP + gP^(2s-m), as functions of the spectral
/// parameter; `multiplicative` selects t*u composition.
struct AnsatzFunctions {
  std::function<Scalar(const Scalar&)> f;
  std::function<Scalar(const Scalar&)> g;
  bool multiplicative = false;

  Scalar compose(const Scalar& a, const Scalar& b) const { return multiplicative ? a * b : a + b; }
};

/// Wraps a rational function as an ansatz function.
std::function<Scalar(const Scalar&)> as_function(const CoeffFn& fn);

struct CoeffTriple {
  Scalar F;
  Scalar G;
  Scalar H;
  Scalar H_swapped;
  int xi = 1;           // (-1)^m
  Rational eta;         // η_{m,n}; unused (0) when θ = 0
  bool eta_continued = false;
  int theta = 0;        // 1 iff n >= m
};

CoeffTriple coeff_functions(HalfInt s, int m, int n, const AnsatzFunctions& fns, const Scalar& lambda,
                            const Scalar& mu);

struct CrosscheckResult {
  bool equal = false;          // combination == cleared residual, and prefactor*combination == direct residual
  bool residual_zero = false;  // the direct residual vanishes
  Scalar prefactor;            // 1/((1+f(λ))(1+f(μ))(1+f(λ+μ)))
};

/// Compares F_{λμ}F + G_{λμ}G + H_{λμ}H + H_{μλ}H̃ against the level-n residual
/// of R = (E + fP + gP^(2s-m))/(1+f).
CrosscheckResult ansatz_residual_crosscheck(HalfInt s, int m, int n, const AnsatzFunctions& fns,
                                            const Scalar& lambda, const Scalar& mu);

struct ConstantCheckReport {
  std::vector<std::pair<int, bool>> levels;
  bool pass = true;
};

/// D D̂ D = D̂ D D̂ per level for a λ-independent family.
ConstantCheckReport constant_check(const SpectralFamily& fam, const std::vector<int>& levels);

}  // namespace sl2ybe
