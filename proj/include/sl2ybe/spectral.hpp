#pragma once

// Catalog of sl2-invariant R-matrix families R(λ) = Σ_j r_j(λ) P^j and the
// level-n diagonals D^(n)(λ) = diag(r_{2s-k}(λ)).
//
// Coefficients are rational functions over Q or Q(sqrt d). The Baxter-type
// family is written in the multiplicative variable t = exp(λ): its samples
// compose as t*u, invert as 1/t and its regular point is t = 1.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2ybe/amatrix.hpp"
#include "sl2ybe/exact.hpp"
#include "sl2ybe/poly.hpp"

namespace sl2ybe {

using Scalar = QuadExt;
using CoeffFn = RationalFunction<Scalar>;

enum class FamilyTag {
  Yang,
  BaxterTL,
  Zamolodchikov,
  KRSPrefix,
  ExceptionalS3,
  ConstantBaxter,
  Permutation,
  Identity,
  Custom,
};

/// "yang", "baxter-tl", "zamolodchikov", "krs-prefix", "exceptional-s3",
/// "constant-baxter", "permutation", "identity", "custom".
std::string tag_name(FamilyTag tag);
/// Inverse of tag_name; throws std::invalid_argument for unknown names.
FamilyTag parse_tag(const std::string& name);

class SpectralFamily {
 public:
  /// r_j = (1 + (-1)^(2s-j) λ)/(1 + λ).
  static SpectralFamily yang(HalfInt s);
  /// E + g(t) P^(2s-m), g(t) = η^-1 b (1-t)/(t-b^2) with b + 1/b = 1/η_{m,m}.
  static SpectralFamily baxter_tl(HalfInt s, int m);
  /// Yang plus g(λ) = λ/(η_{m,m} - ξ_m/2 - ξ_m η_{m,m} λ) on P^(2s-m); for
  /// m < 2s the lower coefficients keep their Yang values (truncated ansatz).
  static SpectralFamily zamolodchikov(HalfInt s, int m);
  /// The three highest coefficients r_{2s}, r_{2s-1}, r_{2s-2} of the KRS R-matrix.
  static SpectralFamily krs_prefix(HalfInt s);
  /// The spin-3 solution with an isolated P^3 deformation.
  static SpectralFamily exceptional_s3();
  /// Constant E + g P^(2s-m), g the root of 1 + g + η_{m,m}^2 g^2 = 0 picked by root_sign = ±1.
  static SpectralFamily constant_baxter(HalfInt s, int m, int root_sign);
  static SpectralFamily permutation(HalfInt s);
  static SpectralFamily identity(HalfInt s);
  /// Coefficients indexed by j = 0..2s; std::nullopt marks an undefined coefficient.
  static SpectralFamily custom(HalfInt s, std::vector<std::optional<CoeffFn>> coeffs,
                               bool multiplicative = false, bool constant = false);
  /// Yang with r_{2s-1} multiplied by (1 + λ^2); a non-solution used as a negative control.
  static SpectralFamily perturbed_yang(HalfInt s);

  /// Description file: {"tag", "s": "p/2", "m"?, "root"?, "coeffs"?: [{"num": [...], "den": [...]} | null]}.
  static SpectralFamily from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  FamilyTag tag() const { return tag_; }
  HalfInt s() const { return s_; }
  std::optional<int> m() const { return m_; }
  /// Square-free d of the coefficient field Q(sqrt d); 1 for Q.
  const BigInt& field() const { return field_; }
  bool multiplicative() const { return multiplicative_; }
  bool constant() const { return constant_; }
  std::string name() const;

  bool defines(int j) const;
  /// Throws std::domain_error when j is outside 0..2s or undefined.
  const CoeffFn& coeff(int j) const;

  /// Regular point (0, or 1 for multiplicative families).
  Scalar zero_point() const;
  /// λ+μ, or t*u for multiplicative families.
  Scalar compose(const Scalar& a, const Scalar& b) const;
  /// -λ, or 1/t for multiplicative families.
  Scalar reflect(const Scalar& a) const;

 private:
  SpectralFamily(FamilyTag tag, HalfInt s, std::vector<std::optional<CoeffFn>> coeffs);
  void check_catalog_invariants() const;

  FamilyTag tag_ = FamilyTag::Identity;
  HalfInt s_;
  std::optional<int> m_;
  int root_sign_ = 0;
  BigInt field_ = 1;
  bool multiplicative_ = false;
  bool constant_ = false;
  std::vector<std::optional<CoeffFn>> coeffs_;
};

/// r_j(λ). Pole → EvaluationError; undefined coefficient → std::domain_error.
Scalar eval_coeff(const SpectralFamily& fam, int j, const Scalar& lambda);

struct ReducedDiagonal {
  LevelRange range;
  std::vector<Scalar> entries;  // r_{2s-k}(λ), ordered by k
};

ReducedDiagonal reduced_d(const SpectralFamily& fam, int n, const Scalar& lambda);

/// b = (1 + sqrt(1 - 4η^2))/(2η); the other root of b + 1/b = 1/η is 1/b.
Scalar baxter_b(const Rational& eta);

/// g(t) = η^-1 b (1 - t)/(t - b^2).
CoeffFn baxter_g(const Rational& eta);
/// The printed weight b (1 - t)/(t - b^2), kept for the record; it does not
/// satisfy the level equation for g.
CoeffFn baxter_g_printed(const Rational& eta);
/// g(λ) = λ/(η - ξ/2 - ξ η λ).
CoeffFn zamolodchikov_g(int xi, const Rational& eta);

struct CoeffCheck {
  int j = 0;
  std::string condition;  // "regular", "unitary" or "normalized"
  Scalar lambda;
  bool ok = false;
};

struct RegularityReport {
  std::vector<CoeffCheck> checks;
  bool pass = true;
};

/// r_j(0) = 1, r_j(λ) r_j(-λ) = 1 and r_{2s}(λ) = 1 at every sample. Constant
/// families are only checked for normalization.
RegularityReport check_regularity_unitarity(const SpectralFamily& fam,
                                            const std::vector<Scalar>& samples);

}  // namespace sl2ybe
