#include "sl2ybe/classify.hpp"

#include <stdexcept>

#include "sl2ybe/parallel.hpp"
#include "sl2ybe/poly.hpp"
#include "sl2ybe/ybe.hpp"

namespace sl2ybe {

namespace {

using GR = GaugedMatrix<Rational>;

std::vector<Rational> flat(const GR& x) { return x.core().flat(); }

struct DiagEntry {
  Rational value;
  bool continued = false;
};

// A_kk^(s,n), continued in s when (n, k) lies outside the level range.
DiagEntry diag_entry(HalfInt s, int n, int k) {
  if (n <= LevelRange::max_level(s) && LevelRange::of(s, n).contains(k))
    return {a_matrix(s, n).entry(k, k).to_rational(), false};
  return {continued_diagonal(s, n, k), true};
}

void require_m(HalfInt s, int m, int lo) {
  if (m < lo || m > s.twice)
    throw std::domain_error("m = " + std::to_string(m) + " outside [" + std::to_string(lo) +
                            ", 2s] for s = " + s.str());
}

// Compares sys.H, sys.H_tilde, sys.G entrywise with closed forms. `printed`
// selects the transcription without the (-1)^n factor and with δ_km in H̃.
bool closed_form_check(const FghSystem& sys, bool printed) {
  if (sys.vacuous) return sys.G.is_zero() && sys.H.is_zero() && sys.H_tilde.is_zero();
  const GR a = a_matrix(sys.s, sys.n);
  const int m = sys.m;
  const int nsign = printed ? 1 : parity_sign(sys.n);
  for (int k : a.range().indices())
    for (int kp : a.range().indices()) {
      const SqrtRational prod = a.entry(k, m) * a.entry(m, kp);
      const SqrtRational akk = a.entry(k, kp);
      const SqrtRational zero;
      const SqrtRational h = (k == m ? SqrtRational(Rational(nsign * parity_sign(m + kp))) * akk : zero) -
                             SqrtRational(Rational(parity_sign(k))) * prod;
      const bool delta_t = printed ? k == m : kp == m;
      const SqrtRational ht =
          (delta_t ? SqrtRational(Rational(nsign * parity_sign(m + k))) * akk : zero) -
          SqrtRational(Rational(parity_sign(kp))) * prod;
      const SqrtRational g = SqrtRational(Rational(k == m && kp == m ? 1 : 0)) - prod;
      if (!(sys.H.entry(k, kp) == h) || !(sys.H_tilde.entry(k, kp) == ht) || !(sys.G.entry(k, kp) == g))
        return false;
    }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- F, G, H

FghSystem fgh_matrices(HalfInt s, int m, int n) {
  if (m < 0) throw std::domain_error("negative m");
  const GR a = a_matrix(s, n);
  const Weights& w = a.weights();
  const LevelRange& range = a.range();
  const GR d0 = SignDiagonal::of(range).gauged<Rational>(w);
  const RankOneProjector proj{range, m};
  const GR pi = proj.gauged<Rational>(w);
  const GR d0h = a * d0 * a;
  const GR pih = a * pi * a;
  FghSystem sys{s, m, n, proj.vacuous(), d0 - d0h, pi - pih, pi * d0h - d0 * pih, d0h * pi - pih * d0};
  return sys;
}

bool fgh_closed_form_check(const FghSystem& sys) { return closed_form_check(sys, false); }
bool fgh_printed_form_check(const FghSystem& sys) { return closed_form_check(sys, true); }

int rank_lemma2(HalfInt s, int m, int n) {
  const FghSystem sys = fgh_matrices(s, m, n);
  return static_cast<int>(rank_of<Rational>({flat(sys.F), flat(sys.G), flat(sys.H), flat(sys.H_tilde)}));
}

std::string cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::Generic:
      return "generic";
    case CellKind::Exceptional:
      return "exceptional";
    case CellKind::Vacuous:
      return "vacuous";
    case CellKind::Shifted:
      return "shifted";
  }
  return "?";
}

DegeneracyRecord degeneracy_record(HalfInt s, int m, int n) {
  const FghSystem sys = fgh_matrices(s, m, n);
  DegeneracyRecord r;
  r.s = s;
  r.m = m;
  r.n = n;
  r.holds_51 = sys.H == sys.H_tilde;
  const GR sum = sys.H + sys.H_tilde;
  if (sys.G.is_zero()) {
    r.holds_52 = sum.is_zero();
  } else if (auto c = solve_combination<Rational>({flat(sys.G)}, flat(sum))) {
    r.holds_52 = true;
    r.beta = (*c)[0];
  }
  if (auto c = solve_combination<Rational>({flat(sys.G), flat(sys.F)}, flat(sum))) {
    r.beta_tilde_fit = true;
    r.beta_g = (*c)[0];
    r.beta_tilde = (*c)[1];
  }
  r.rank = static_cast<int>(
      rank_of<Rational>({flat(sys.F), flat(sys.G), flat(sys.H), flat(sys.H_tilde)}));
  const Rational sv = s.value();
  const Rational mm(m), nn(n);
  r.predicate_91 = Rational(2) * mm * mm - Rational(2) * mm + nn * nn - nn ==
                   Rational(8) * mm * sv - Rational(6) * nn * sv;
  r.predicate_92 = mm * mm - mm == Rational(4) * mm * sv - nn * sv;
  if (sys.vacuous)
    r.kind = CellKind::Vacuous;
  else if (n > s.twice)
    r.kind = CellKind::Shifted;
  else if (r.holds_51 || r.holds_52)
    r.kind = CellKind::Exceptional;
  else
    r.kind = CellKind::Generic;
  return r;
}

std::vector<DegeneracyRecord> degeneracy_scan(int two_s_max) {
  if (two_s_max < 2) throw std::domain_error("degeneracy_scan needs max 2s >= 2");
  struct Cell {
    HalfInt s;
    int m, n;
  };
  std::vector<Cell> cells;
  for (int tw = 2; tw <= two_s_max; ++tw) {
    const HalfInt s = HalfInt::from_twice(tw);
    for (int m = 2; m <= tw; ++m)
      for (int n = m; n <= LevelRange::max_level(s); ++n) cells.push_back({s, m, n});
  }
  auto records = parallel_map<DegeneracyRecord>(cells.size(), [&](std::size_t i) {
    return degeneracy_record(cells[i].s, cells[i].m, cells[i].n);
  });
  for (const auto& r : records)
    if (r.n <= r.s.twice && r.holds_51 != r.holds_52)
      throw std::logic_error("simultaneity violated at (s, m, n) = (" + r.s.str() + ", " +
                             std::to_string(r.m) + ", " + std::to_string(r.n) + ")");
  return records;
}

nlohmann::json to_json(const DegeneracyRecord& r) {
  auto opt = [](const std::optional<Rational>& x) -> nlohmann::json {
    return x ? nlohmann::json(x->str()) : nlohmann::json(nullptr);
  };
  return {{"anchor", "Eq.51-52/m=" + std::to_string(r.m) + ",n=" + std::to_string(r.n)},
          {"s", r.s.str()},
          {"m", r.m},
          {"n", r.n},
          {"kind", cell_kind_name(r.kind)},
          {"holds_51", r.holds_51},
          {"holds_52", r.holds_52},
          {"beta", opt(r.beta)},
          {"beta_tilde_fit", r.beta_tilde_fit},
          {"beta_g", opt(r.beta_g)},
          {"beta_tilde", opt(r.beta_tilde)},
          {"rank", r.rank},
          {"predicate_91", r.predicate_91},
          {"predicate_92", r.predicate_92}};
}

// ---------------------------------------------------------------- η recursions

EtaIncompatibility eta_incompatibility(HalfInt s, int m) {
  require_m(s, m, 2);
  EtaIncompatibility r;
  r.s = s;
  r.m = m;
  const Rational sv = s.value();
  const Rational mm(m);
  r.eta_mm = eta(s, m, m);
  r.a_mm_m = diag_entry(s, m, m).value;
  const DiagEntry next = diag_entry(s, m + 1, m);
  r.a_mm_m1 = next.value;
  r.a_mm_m1_continued = next.continued;
  r.eq49_holds = r.a_mm_m.abs() == r.a_mm_m1.abs();
  const Rational num50 = mm * mm - mm - Rational(3) * mm * sv + sv;
  r.eq50_ratio = num50 / (Rational(2) * sv);
  r.eq50_holds = r.a_mm_m1 == r.eq50_ratio * r.a_mm_m;
  r.eq50_numerator_negative = num50.sign() < 0;
  r.inline_predicate = (mm * mm - mm - Rational(3) * mm * sv + Rational(3) * sv).sign() < 0;
  if (m == 3) {
    const DiagEntry a5 = diag_entry(s, 5, 3);
    r.a33_5 = a5.value;
    r.a33_5_continued = a5.continued;
    const Rational den = sv * (Rational(4) * sv - Rational(7));
    if (!den.is_zero()) {
      r.eq62_ratio = (Rational(10) * sv * sv - Rational(32) * sv + Rational(21)) / den;
      r.eq62_holds = *r.a33_5 == *r.eq62_ratio * r.a_mm_m;
    }
    r.eq61_holds = r.a_mm_m == *r.a33_5;
    using RP = Polynomial<Rational>;
    const RP lhs(std::vector<Rational>{Rational(21), Rational(-25), Rational(6)});
    r.factorization_holds = lhs == RP::linear(Rational(-3), Rational(1)) * RP::linear(Rational(-7), Rational(6));
    if (s == HalfInt::from_int(3)) r.a33_6_differs = diag_entry(s, 6, 3).value != r.a_mm_m;
  }
  return r;
}

nlohmann::json to_json(const EtaIncompatibility& r) {
  nlohmann::json j{{"anchor", "Eq.49-50/m=" + std::to_string(r.m)},
                   {"s", r.s.str()},
                   {"m", r.m},
                   {"eta_mm", r.eta_mm.str()},
                   {"A_mm_level_m", r.a_mm_m.str()},
                   {"A_mm_level_m+1", r.a_mm_m1.str()},
                   {"A_mm_level_m+1_continued", r.a_mm_m1_continued},
                   {"eq49_holds", r.eq49_holds},
                   {"eq50_ratio", r.eq50_ratio.str()},
                   {"eq50_holds", r.eq50_holds},
                   {"eq50_numerator_negative", r.eq50_numerator_negative},
                   {"inline_predicate_m2-m-3ms+3s<0", r.inline_predicate}};
  if (r.m == 3) {
    j["A_33_level5"] = r.a33_5->str();
    j["A_33_level5_continued"] = r.a33_5_continued;
    j["eq62_ratio"] = r.eq62_ratio ? nlohmann::json(r.eq62_ratio->str()) : nlohmann::json(nullptr);
    j["eq62_holds"] = r.eq62_holds;
    j["eq61_holds"] = r.eq61_holds;
    j["factorization_holds"] = r.factorization_holds;
    if (r.a33_6_differs) j["A_33_level6_differs"] = *r.a33_6_differs;
  }
  return j;
}

// ---------------------------------------------------------------- constant R

namespace {

bool solves_quadratic(const Rational& eta, const Scalar& g) {
  return (Scalar(1) + g + Scalar(eta * eta) * g * g).is_zero();
}

}  // namespace

ConstantRoots constant_roots(HalfInt s, int m) {
  require_m(s, m, 2);
  ConstantRoots r;
  r.s = s;
  r.m = m;
  r.eta = eta(s, m, m);
  const Rational disc = Rational(1) - Rational(4) * r.eta * r.eta;
  if (disc.sign() < 0) throw std::domain_error("constant_roots: negative discriminant");
  const Rational scale = (Rational(2) * r.eta * r.eta).inverse();
  r.plus = Scalar(-scale, scale, disc);
  r.minus = Scalar(-scale, -scale, disc);
  r.plus_ok = solves_quadratic(r.eta, r.plus);
  r.minus_ok = solves_quadratic(r.eta, r.minus);
  const Rational half(1, 2);
  r.printed_formula_ok = solves_quadratic(r.eta, Scalar(half, half, disc)) ||
                         solves_quadratic(r.eta, Scalar(half, -half, disc));
  return r;
}

MPrime constant_m_prime(HalfInt s, int m) {
  const ConstantRoots roots = constant_roots(s, m);
  const EtaValue next = eta_continued(s, m, m + 1);
  MPrime r;
  r.eta_next = next.value;
  r.eta_next_continued = next.continued;
  r.verified = !solves_quadratic(next.value, roots.plus) && !solves_quadratic(next.value, roots.minus);
  r.m_prime = r.verified ? m + 1 : m + 2;
  r.level_reached = m + 1 <= LevelRange::max_level(s) && LevelRange::of(s, m + 1).contains(m);
  r.fails_at_next_level = r.level_reached;
  r.solves_all_levels = true;
  for (int sign : {1, -1}) {
    const SpectralFamily fam = SpectralFamily::constant_baxter(s, m, sign);
    if (r.level_reached) r.fails_at_next_level = r.fails_at_next_level && !constant_check(fam, {m + 1}).pass;
    r.solves_all_levels = r.solves_all_levels && constant_check(fam, all_levels(s)).pass;
  }
  return r;
}

RigidityReport permutation_rigidity(HalfInt s, int m) {
  require_m(s, m, 2);
  const FghSystem sys = fgh_matrices(s, m, m);
  const GR hsum = sys.H + sys.H_tilde;
  RigidityReport r;
  r.rank_g_hsum = static_cast<int>(rank_of<Rational>({flat(sys.G), flat(hsum)}));
  const GR a = a_matrix(s, m);
  const Weights& w = a.weights();
  const GR d0 = SignDiagonal::of(a.range()).gauged<Rational>(w);
  const GR pi = RankOneProjector{a.range(), m}.gauged<Rational>(w);
  const Rational et = eta(s, m, m);
  const Rational xi(parity_sign(m));
  r.eq73_matches = true;
  r.deformations_fail = true;
  for (const Rational& g : {Rational(1), Rational(-2), Rational(1, 3), Rational(5)}) {
    const GR d = d0 + g * pi;
    const GR dh = a * d * a;
    const GR residual = d * dh * d - dh * d * dh;
    const GR expected = et * ((g * g * (Rational(1) + et * g)) * sys.G + (xi * g * g) * hsum);
    r.eq73_matches = r.eq73_matches && residual == expected;
    r.deformations_fail = r.deformations_fail && !residual.is_zero();
  }
  r.rigid = r.rank_g_hsum == 2 && r.eq73_matches && r.deformations_fail;
  return r;
}

bool lemma6_check(HalfInt s, int m) {
  require_m(s, m, 1);
  const GR a = a_matrix(s, m);
  for (int k : a.range().indices())
    if (a.core_at(k, m).is_zero()) return false;
  const GR pi = RankOneProjector{a.range(), m}.gauged<Rational>(a.weights());
  return !(a * pi - pi * a).is_zero();
}

Scalar exceptional_level_equation(HalfInt s, const Scalar& lambda, const Scalar& mu) {
  if (s.twice < 3) throw std::domain_error("exceptional level equation needs s >= 3/2");
  AnsatzFunctions fns;
  fns.f = [](const Scalar& x) { return x; };
  fns.g = as_function(zamolodchikov_g(parity_sign(3), eta(s, 3, 3)));
  const CoeffTriple c = coeff_functions(s, 3, 4, fns, lambda, mu);
  return c.G + c.H + c.H_swapped;
}

// ---------------------------------------------------------------- propositions

std::vector<Prop1Record> proposition1_check(int two_s_max) {
  std::vector<SpectralFamily> fams;
  for (int tw = 2; tw <= two_s_max; ++tw) {
    const HalfInt s = HalfInt::from_twice(tw);
    fams.push_back(SpectralFamily::permutation(s));
    fams.push_back(SpectralFamily::identity(s));
    for (int m = 2; m <= tw; ++m)
      for (int sign : {1, -1}) fams.push_back(SpectralFamily::constant_baxter(s, m, sign));
  }
  return parallel_map<Prop1Record>(fams.size(), [&](std::size_t i) {
    const SpectralFamily& f = fams[i];
    Prop1Record r;
    r.family = f.name();
    const int tw = f.s().twice;
    r.top_minus_one_is_one = eval_coeff(f, tw - 1, f.zero_point()) == Scalar(1);
    r.is_permutation = true;
    for (int j = 0; j <= tw; ++j)
      r.is_permutation = r.is_permutation && eval_coeff(f, j, f.zero_point()) == Scalar(parity_sign(tw - j));
    r.solves = constant_check(f, all_levels(f.s())).pass;
    r.consistent = !r.solves || r.top_minus_one_is_one || r.is_permutation;
    return r;
  });
}

std::vector<Prop2Record> proposition2_check(int two_s_max) {
  struct Cell {
    HalfInt s;
    int m;
  };
  std::vector<Cell> cells;
  for (int tw = 2; tw <= two_s_max; ++tw)
    for (int m = 2; m <= tw; ++m) cells.push_back({HalfInt::from_twice(tw), m});
  const auto samples = sample_grid(Grid::A);
  return parallel_map<Prop2Record>(cells.size(), [&](std::size_t i) {
    const auto [s, m] = cells[i];
    const SpectralFamily fam = SpectralFamily::zamolodchikov(s, m);
    Prop2Record r;
    r.s = s;
    r.m = m;
    for (int n = 0; n <= LevelRange::max_level(s) && !r.first_failing_level; ++n)
      if (!full_check(fam, {n}, samples).pass) r.first_failing_level = n;
    const auto& first = r.first_failing_level;
    if (m == s.twice) {
      r.claim = "complete ansatz (no lower coefficients): solution at every level";
      r.consistent = !first.has_value();
    } else if (m != 3) {
      r.claim = "m' = m+1";
      r.consistent = first == m + 1;
    } else if (s != HalfInt::from_int(3)) {
      r.claim = "m' <= 5";
      r.consistent = first.has_value() ? (*first == 4 || *first == 5) : LevelRange::max_level(s) < 5;
    } else {
      r.claim = "m' = 6";
      r.consistent = first == 6;
    }
    return r;
  });
}

}  // namespace sl2ybe
