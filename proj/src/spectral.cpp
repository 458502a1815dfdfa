#include "sl2ybe/spectral.hpp"

#include <array>
#include <stdexcept>

namespace sl2ybe {

namespace {

using SPoly = Polynomial<Scalar>;

constexpr std::array<std::pair<FamilyTag, const char*>, 9> kTagNames{{
    {FamilyTag::Yang, "yang"},
    {FamilyTag::BaxterTL, "baxter-tl"},
    {FamilyTag::Zamolodchikov, "zamolodchikov"},
    {FamilyTag::KRSPrefix, "krs-prefix"},
    {FamilyTag::ExceptionalS3, "exceptional-s3"},
    {FamilyTag::ConstantBaxter, "constant-baxter"},
    {FamilyTag::Permutation, "permutation"},
    {FamilyTag::Identity, "identity"},
    {FamilyTag::Custom, "custom"},
}};

// (1 + sign*λ)/(1 + λ)
CoeffFn yang_ratio(int sign) {
  return {SPoly::linear(Scalar(1), Scalar(sign)), SPoly::linear(Scalar(1), Scalar(1))};
}

// (a - λ)/(a + λ)
CoeffFn cayley(const Rational& a) {
  return {SPoly::linear(Scalar(a), Scalar(-1)), SPoly::linear(Scalar(a), Scalar(1))};
}

void require_m(HalfInt s, int m) {
  if (m < 2 || m > s.twice)
    throw std::domain_error("family parameter m = " + std::to_string(m) + " outside [2, 2s] for s = " +
                            s.str());
}

Scalar roots_of_level_quadratic(const Rational& eta, int root_sign) {
  // 1 + g + η^2 g^2 = 0  =>  g = (-1 ± sqrt(1 - 4η^2)) / (2η^2)
  const Rational disc = Rational(1) - Rational(4) * eta * eta;
  if (disc.sign() < 0) throw std::domain_error("level quadratic has no real root");
  const Rational scale = (Rational(2) * eta * eta).inverse();
  return Scalar(-scale, Rational(root_sign) * scale, disc);
}

nlohmann::json poly_json(const SPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  if (arr.empty()) arr.push_back("0");
  return arr;
}

SPoly poly_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("coefficient list must be an array");
  std::vector<Scalar> c;
  for (const auto& x : arr) {
    if (x.is_number_integer()) {
      c.emplace_back(Rational(x.get<long>()));
    } else if (x.is_string()) {
      c.emplace_back(Rational::parse(x.get<std::string>()));
    } else {
      throw std::invalid_argument("coefficients must be integers or \"p/q\" strings");
    }
  }
  return SPoly(std::move(c));
}

}  // namespace

std::string tag_name(FamilyTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  throw std::invalid_argument("unknown family tag");
}

FamilyTag parse_tag(const std::string& name) {
  for (const auto& [t, n] : kTagNames)
    if (name == n) return t;
  throw std::invalid_argument("unknown family '" + name + "'");
}

// ---------------------------------------------------------------- construction

SpectralFamily::SpectralFamily(FamilyTag tag, HalfInt s, std::vector<std::optional<CoeffFn>> coeffs)
    : tag_(tag), s_(s), coeffs_(std::move(coeffs)) {
  if (s.twice < 1) throw std::domain_error("spin must be positive, got " + s.str());
  if (coeffs_.size() != static_cast<std::size_t>(s.twice + 1))
    throw std::invalid_argument("a spin-" + s.str() + " family needs " + std::to_string(s.twice + 1) +
                                " coefficients");
}

void SpectralFamily::check_catalog_invariants() const {
  // Normalization r_{2s} = 1 at a few points; regularity r_j(0) = 1.
  for (const Scalar x : {Scalar(Rational(2, 7)), Scalar(3), Scalar(Rational(5, 3))})
    if (!(eval_coeff(*this, s_.twice, x) == Scalar(1)))
      throw std::logic_error(name() + ": r_2s is not identically 1");
  if (constant_) return;
  for (int j = 0; j <= s_.twice; ++j)
    if (defines(j) && !(eval_coeff(*this, j, zero_point()) == Scalar(1)))
      throw std::logic_error(name() + ": r_" + std::to_string(j) + " is not regular");
}

SpectralFamily SpectralFamily::yang(HalfInt s) {
  std::vector<std::optional<CoeffFn>> c;
  for (int j = 0; j <= s.twice; ++j) c.emplace_back(yang_ratio(parity_sign(s.twice - j)));
  SpectralFamily f(FamilyTag::Yang, s, std::move(c));
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::baxter_tl(HalfInt s, int m) {
  require_m(s, m);
  const Rational et = eta(s, m, m);
  const CoeffFn g = baxter_g(et);
  std::vector<std::optional<CoeffFn>> c(s.twice + 1, CoeffFn(Scalar(1)));
  c[s.twice - m] = CoeffFn(Scalar(1)) + g;
  SpectralFamily f(FamilyTag::BaxterTL, s, std::move(c));
  f.m_ = m;
  f.multiplicative_ = true;
  f.field_ = baxter_b(et).d();
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::zamolodchikov(HalfInt s, int m) {
  require_m(s, m);
  const CoeffFn g = zamolodchikov_g(parity_sign(m), eta(s, m, m));
  std::vector<std::optional<CoeffFn>> c;
  for (int j = 0; j <= s.twice; ++j) {
    CoeffFn r = yang_ratio(parity_sign(s.twice - j));
    if (j == s.twice - m) r = r + g * CoeffFn(SPoly(Scalar(1)), SPoly::linear(Scalar(1), Scalar(1)));
    c.emplace_back(r);
  }
  SpectralFamily f(FamilyTag::Zamolodchikov, s, std::move(c));
  f.m_ = m;
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::krs_prefix(HalfInt s) {
  if (s.twice < 2) throw std::domain_error("krs-prefix needs s >= 1");
  std::vector<std::optional<CoeffFn>> c(s.twice + 1);
  const Rational k(s.twice, s.twice - 1);
  c[s.twice] = CoeffFn(Scalar(1));
  c[s.twice - 1] = cayley(Rational(1));
  // (1 - kλ)/(1 + kλ) = (1/k - λ)/(1/k + λ)
  c[s.twice - 2] = cayley(Rational(1)) * cayley(k.inverse());
  SpectralFamily f(FamilyTag::KRSPrefix, s, std::move(c));
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::exceptional_s3() {
  const CoeffFn one(Scalar(1));
  std::vector<std::optional<CoeffFn>> c{cayley(Rational(1)) * cayley(Rational(6)),
                                        cayley(Rational(1)),
                                        one,
                                        cayley(Rational(4)),
                                        one,
                                        cayley(Rational(1)),
                                        one};
  SpectralFamily f(FamilyTag::ExceptionalS3, HalfInt::from_int(3), std::move(c));
  f.m_ = 3;
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::constant_baxter(HalfInt s, int m, int root_sign) {
  require_m(s, m);
  if (root_sign != 1 && root_sign != -1) throw std::invalid_argument("root sign must be +1 or -1");
  const Scalar g = roots_of_level_quadratic(eta(s, m, m), root_sign);
  std::vector<std::optional<CoeffFn>> c(s.twice + 1, CoeffFn(Scalar(1)));
  c[s.twice - m] = CoeffFn(Scalar(1) + g);
  SpectralFamily f(FamilyTag::ConstantBaxter, s, std::move(c));
  f.m_ = m;
  f.root_sign_ = root_sign;
  f.constant_ = true;
  f.field_ = g.d();
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::permutation(HalfInt s) {
  std::vector<std::optional<CoeffFn>> c;
  for (int j = 0; j <= s.twice; ++j) c.emplace_back(CoeffFn(Scalar(parity_sign(s.twice - j))));
  SpectralFamily f(FamilyTag::Permutation, s, std::move(c));
  f.constant_ = true;
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::identity(HalfInt s) {
  std::vector<std::optional<CoeffFn>> c(s.twice + 1, CoeffFn(Scalar(1)));
  SpectralFamily f(FamilyTag::Identity, s, std::move(c));
  f.constant_ = true;
  f.check_catalog_invariants();
  return f;
}

SpectralFamily SpectralFamily::custom(HalfInt s, std::vector<std::optional<CoeffFn>> coeffs,
                                      bool multiplicative, bool constant) {
  SpectralFamily f(FamilyTag::Custom, s, std::move(coeffs));
  f.multiplicative_ = multiplicative;
  f.constant_ = constant;
  for (const auto& c : f.coeffs_) {
    if (!c) continue;
    for (const auto* p : {&c->numerator(), &c->denominator()})
      for (const auto& x : p->coefficients())
        if (!x.is_rational()) f.field_ = x.d();
  }
  return f;
}

SpectralFamily SpectralFamily::perturbed_yang(HalfInt s) {
  std::vector<std::optional<CoeffFn>> c;
  for (int j = 0; j <= s.twice; ++j) c.emplace_back(yang_ratio(parity_sign(s.twice - j)));
  const SPoly bump(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)});
  c[s.twice - 1] = *c[s.twice - 1] * CoeffFn(bump, SPoly(Scalar(1)));
  return custom(s, std::move(c));
}

SpectralFamily SpectralFamily::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tag") || !j.contains("s"))
    throw std::invalid_argument("family description needs \"tag\" and \"s\"");
  const FamilyTag tag = parse_tag(j.at("tag").get<std::string>());
  const auto& sj = j.at("s");
  const HalfInt s = sj.is_string() ? HalfInt::parse(sj.get<std::string>())
                                   : HalfInt::from_int(sj.get<int>());
  auto need_m = [&]() {
    if (!j.contains("m")) throw std::invalid_argument("family '" + tag_name(tag) + "' needs \"m\"");
    return j.at("m").get<int>();
  };
  switch (tag) {
    case FamilyTag::Yang:
      return yang(s);
    case FamilyTag::BaxterTL:
      return baxter_tl(s, need_m());
    case FamilyTag::Zamolodchikov:
      return zamolodchikov(s, need_m());
    case FamilyTag::KRSPrefix:
      return krs_prefix(s);
    case FamilyTag::ExceptionalS3:
      if (s != HalfInt::from_int(3)) throw std::domain_error("exceptional-s3 exists only for s = 3");
      return exceptional_s3();
    case FamilyTag::ConstantBaxter:
      return constant_baxter(s, need_m(), j.value("root", 1));
    case FamilyTag::Permutation:
      return permutation(s);
    case FamilyTag::Identity:
      return identity(s);
    case FamilyTag::Custom: {
      if (!j.contains("coeffs")) throw std::invalid_argument("custom family needs \"coeffs\"");
      std::vector<std::optional<CoeffFn>> c;
      for (const auto& entry : j.at("coeffs")) {
        if (entry.is_null()) {
          c.emplace_back(std::nullopt);
          continue;
        }
        const SPoly den = entry.contains("den") ? poly_from_json(entry.at("den")) : SPoly(Scalar(1));
        c.emplace_back(CoeffFn(poly_from_json(entry.at("num")), den));
      }
      return custom(s, std::move(c), j.value("multiplicative", false), j.value("constant", false));
    }
  }
  throw std::invalid_argument("unhandled family tag");
}

nlohmann::json SpectralFamily::to_json() const {
  nlohmann::json j{{"tag", tag_name(tag_)}, {"s", s_.str()}};
  if (m_) j["m"] = *m_;
  if (root_sign_ != 0) j["root"] = root_sign_;
  j["field_d"] = field_.get_str();
  j["multiplicative"] = multiplicative_;
  j["constant"] = constant_;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) {
    if (!c) {
      coeffs.push_back(nullptr);
      continue;
    }
    coeffs.push_back({{"num", poly_json(c->numerator())}, {"den", poly_json(c->denominator())}});
  }
  j["coeffs"] = coeffs;
  return j;
}

std::string SpectralFamily::name() const {
  std::string n = tag_name(tag_) + "(s=" + s_.str();
  if (m_ && tag_ != FamilyTag::ExceptionalS3) n += ", m=" + std::to_string(*m_);
  if (root_sign_ != 0) n += root_sign_ > 0 ? ", root=+" : ", root=-";
  return n + ")";
}

bool SpectralFamily::defines(int j) const {
  return j >= 0 && j <= s_.twice && coeffs_[static_cast<std::size_t>(j)].has_value();
}

const CoeffFn& SpectralFamily::coeff(int j) const {
  if (j < 0 || j > s_.twice)
    throw std::domain_error("coefficient index j = " + std::to_string(j) + " outside [0, 2s]");
  const auto& c = coeffs_[static_cast<std::size_t>(j)];
  if (!c) throw std::domain_error(name() + " does not define r_" + std::to_string(j));
  return *c;
}

Scalar SpectralFamily::zero_point() const { return multiplicative_ ? Scalar(1) : Scalar(0); }

Scalar SpectralFamily::compose(const Scalar& a, const Scalar& b) const {
  return multiplicative_ ? a * b : a + b;
}

Scalar SpectralFamily::reflect(const Scalar& a) const { return multiplicative_ ? a.inverse() : -a; }

// ---------------------------------------------------------------- evaluation

Scalar eval_coeff(const SpectralFamily& fam, int j, const Scalar& lambda) {
  return fam.coeff(j)(lambda);
}

ReducedDiagonal reduced_d(const SpectralFamily& fam, int n, const Scalar& lambda) {
  ReducedDiagonal d{LevelRange::of(fam.s(), n), {}};
  for (int k : d.range.indices()) d.entries.push_back(eval_coeff(fam, fam.s().twice - k, lambda));
  return d;
}

Scalar baxter_b(const Rational& eta) {
  if (eta.is_zero()) throw std::domain_error("baxter_b: eta = 0");
  const Rational disc = Rational(1) - Rational(4) * eta * eta;
  if (disc.sign() < 0)
    throw std::domain_error("baxter_b: 1 - 4 eta^2 = " + disc.str() + " < 0 (complex b)");
  const Rational half_inv = (Rational(2) * eta).inverse();
  return Scalar(half_inv, half_inv, disc);
}

CoeffFn baxter_g(const Rational& eta) {
  const Scalar b = baxter_b(eta);
  const Scalar c = Scalar(eta.inverse()) * b;
  return {SPoly::linear(c, -c), SPoly::linear(-(b * b), Scalar(1))};
}

CoeffFn baxter_g_printed(const Rational& eta) {
  const Scalar b = baxter_b(eta);
  return {SPoly::linear(b, -b), SPoly::linear(-(b * b), Scalar(1))};
}

CoeffFn zamolodchikov_g(int xi, const Rational& eta) {
  const Rational x(xi);
  return {SPoly::linear(Scalar(0), Scalar(1)),
          SPoly::linear(Scalar(eta - x / Rational(2)), Scalar(-x * eta))};
}

RegularityReport check_regularity_unitarity(const SpectralFamily& fam,
                                            const std::vector<Scalar>& samples) {
  RegularityReport rep;
  auto add = [&](int j, const char* what, const Scalar& x, bool ok) {
    rep.checks.push_back({j, what, x, ok});
    rep.pass = rep.pass && ok;
  };
  // Compared in cross-multiplied form, N(x) N(x') = D(x) D(x'), so that a
  // pole of r_j at the reflected point does not abort the check.
  const int top = fam.s().twice;
  for (int j = 0; j <= top; ++j) {
    if (!fam.defines(j)) continue;
    const auto& num = fam.coeff(j).numerator();
    const auto& den = fam.coeff(j).denominator();
    if (!fam.constant()) {
      const Scalar z = fam.zero_point();
      add(j, "regular", z, !den(z).is_zero() && num(z) == den(z));
    }
    for (const auto& x : samples) {
      if (!fam.constant()) {
        const Scalar xr = fam.reflect(x);
        add(j, "unitary", x, num(x) * num(xr) == den(x) * den(xr));
      }
      if (j == top) add(j, "normalized", x, num(x) == den(x));
    }
  }
  return rep;
}

}  // namespace sl2ybe
