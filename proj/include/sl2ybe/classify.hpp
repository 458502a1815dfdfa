#pragma once

// Classification scans over the reduced matrix system {F, G, H, H̃}:
// rank computations, the (m, n) degeneracy scan, the η recursions that bound
// m', constant R-matrices and the rigidity of the permutation.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2ybe/amatrix.hpp"
#include "sl2ybe/spectral.hpp"

namespace sl2ybe {

/// F = D0 - D̂0, G = π - π̂, H = π D̂0 - D0 π̂, H̃ = D̂0 π - π̂ D0 at level n.
/// `vacuous` marks levels the projector π^(m,n) does not reach (π = 0).
struct FghSystem {
  HalfInt s;
  int m = 0;
  int n = 0;
  bool vacuous = false;
  GaugedMatrix<Rational> F, G, H, H_tilde;
};

FghSystem fgh_matrices(HalfInt s, int m, int n);

/// Entrywise comparison of H, H̃, G with the closed forms
///   H_kk' = (-1)^(n+m+k') δ_km A_kk' - (-1)^k A_km A_mk',
///   H̃_kk' = (-1)^(n+m+k) δ_k'm A_kk' - (-1)^k' A_km A_mk',
///   G_kk' = δ_km δ_k'm - A_km A_mk',
/// in raw (square-root) form.
bool fgh_closed_form_check(const FghSystem& sys);
/// The same comparison with the H formula exactly as printed (no (-1)^n on the
/// δ term, δ_km in H̃ too); true only on some levels.
bool fgh_printed_form_check(const FghSystem& sys);

/// Rank of span{F, G, H, H̃}.
int rank_lemma2(HalfInt s, int m, int n);

enum class CellKind { Generic, Exceptional, Vacuous, Shifted };
std::string cell_kind_name(CellKind kind);

struct DegeneracyRecord {
  HalfInt s;
  int m = 0;
  int n = 0;
  CellKind kind = CellKind::Generic;
  bool holds_51 = false;              // H̃ = H
  bool holds_52 = false;              // H + H̃ = β G for some β
  std::optional<Rational> beta;       // unset when G = 0 (any β works) or no β exists
  bool beta_tilde_fit = false;        // H + H̃ = β G + β̃ F solvable
  std::optional<Rational> beta_g;     // β and β̃ of that fit
  std::optional<Rational> beta_tilde;
  int rank = 0;
  bool predicate_91 = false;          // 2m²-2m+n²-n = 8ms-6ns
  bool predicate_92 = false;          // m²-m = 4ms-ns
};

DegeneracyRecord degeneracy_record(HalfInt s, int m, int n);

/// All cells 2 <= m <= 2s, m <= n <= floor(3s), 2 <= 2s <= two_s_max, in
/// (2s, m, n) order. Throws std::logic_error if H̃ = H and H + H̃ ∝ G ever
/// disagree on a cell with n <= 2s.
std::vector<DegeneracyRecord> degeneracy_scan(int two_s_max);

nlohmann::json to_json(const DegeneracyRecord& r);

struct EtaIncompatibility {
  HalfInt s;
  int m = 0;
  Rational eta_mm;                 // η_{m,m}
  Rational a_mm_m;                 // A_mm^(s,m)
  Rational a_mm_m1;                // A_mm^(s,m+1), continued when m is out of range
  bool a_mm_m1_continued = false;
  bool eq49_holds = false;         // |A^(m)| = |A^(m+1)|
  Rational eq50_ratio;             // (m²-m-3ms+s)/(2s)
  bool eq50_holds = false;
  bool eq50_numerator_negative = false;  // m²-m-3ms+s < 0
  bool inline_predicate = false;         // m²-m-3ms+3s < 0, as printed in the text
  // m = 3 only
  std::optional<Rational> a33_5;
  bool a33_5_continued = false;
  std::optional<Rational> eq62_ratio;    // (10s²-32s+21)/(s(4s-7))
  bool eq62_holds = false;
  bool eq61_holds = false;               // A_33^(s,3) = A_33^(s,5)
  bool factorization_holds = false;      // 6s²-25s+21 = (s-3)(6s-7)
  std::optional<bool> a33_6_differs;     // s = 3: A_33^(3,6) != A_33^(3,3)
};

EtaIncompatibility eta_incompatibility(HalfInt s, int m);
nlohmann::json to_json(const EtaIncompatibility& r);

struct ConstantRoots {
  HalfInt s;
  int m = 0;
  Rational eta;
  Scalar plus, minus;       // (-1 ± sqrt(1-4η²))/(2η²)
  bool plus_ok = false;     // 1 + g + η² g² = 0
  bool minus_ok = false;
  bool printed_formula_ok = false;  // whether ½(1 ± sqrt(1-4η²)) would satisfy the quadratic
};

ConstantRoots constant_roots(HalfInt s, int m);

struct MPrime {
  int m_prime = 0;           // m + 1 when verified, else a lower bound m + 2
  bool verified = false;     // both roots fail the level-(m+1) quadratic
  Rational eta_next;         // η_{m,m+1}
  bool eta_next_continued = false;
  // Level m+1 contains index m only for m < 2s. For m = 2s the quadratic
  // mismatch is formal: E + g P^0 then solves every level (a braid-group
  // representation through the Temperley–Lieb projector).
  bool level_reached = false;
  bool fails_at_next_level = false;  // constant_check at n = m+1, both roots
  bool solves_all_levels = false;    // both roots pass every level
};

MPrime constant_m_prime(HalfInt s, int m);

struct RigidityReport {
  int rank_g_hsum = 0;             // rank{G, H+H̃} at n = m
  bool eq73_matches = false;       // residual of P + gπ equals η[g²(1+ηg)G + ξg²(H+H̃)] at sample g
  bool deformations_fail = false;  // the residual is nonzero at every sample g ≠ 0
  bool rigid = false;
};

RigidityReport permutation_rigidity(HalfInt s, int m);
bool lemma6_check(HalfInt s, int m);

/// G + H(λ,μ) + H(μ,λ) at (m, n) = (3, 4) with f(λ) = λ and g(λ) = λ/(η33 + 1/2 + η33 λ).
Scalar exceptional_level_equation(HalfInt s, const Scalar& lambda, const Scalar& mu);

struct Prop1Record {
  std::string family;
  bool top_minus_one_is_one = false;  // r_{2s-1} = 1
  bool is_permutation = false;
  bool solves = false;                // constant check passes at every level
  bool consistent = false;            // solves => (r_{2s-1} = 1 or permutation)
};

/// Constant catalog families for 2 <= 2s <= two_s_max.
std::vector<Prop1Record> proposition1_check(int two_s_max);

struct Prop2Record {
  HalfInt s;
  int m = 0;
  std::optional<int> first_failing_level;  // of the truncated f = λ ansatz
  std::string claim;
  bool consistent = false;
};

/// For each 2 <= m <= 2s <= two_s_max: the first level at which the truncated
/// E + λP + g P^(2s-m) ansatz fails, compared with m' = m+1 (m != 3),
/// m' <= 5 (m = 3, s != 3) and m' = 6 (m = 3, s = 3).
std::vector<Prop2Record> proposition2_check(int two_s_max);

}  // namespace sl2ybe
