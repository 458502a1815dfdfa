#include <doctest.h>

#include "sl2ybe/spectral.hpp"

using namespace sl2ybe;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }
Scalar sq(long a, long b = 1) { return Scalar(q(a, b)); }
}  // namespace

TEST_CASE("tags round-trip") {
  for (auto tag : {FamilyTag::Yang, FamilyTag::BaxterTL, FamilyTag::Zamolodchikov, FamilyTag::KRSPrefix,
                   FamilyTag::ExceptionalS3, FamilyTag::ConstantBaxter, FamilyTag::Permutation,
                   FamilyTag::Identity, FamilyTag::Custom})
    CHECK(parse_tag(tag_name(tag)) == tag);
  CHECK_THROWS_AS(parse_tag("xxz"), std::invalid_argument);
}

TEST_CASE("coefficient evaluation") {
  CHECK(eval_coeff(SpectralFamily::yang(h(2)), 1, sq(2)) == sq(-1, 3));
  CHECK(eval_coeff(SpectralFamily::yang(h(2)), 2, sq(2)) == sq(1));
  CHECK(eval_coeff(SpectralFamily::exceptional_s3(), 3, sq(1)) == sq(3, 5));
  CHECK(eval_coeff(SpectralFamily::exceptional_s3(), 0, sq(2)) == sq(-1, 3) * sq(4, 8));
  const auto z = SpectralFamily::zamolodchikov(h(2), 2);
  CHECK(eval_coeff(z, 0, sq(1)).is_zero());
  // r_0 = (1-λ)(1-2λ)/((1+λ)(1+2λ)) for s = 1
  for (long a : {2, 3, 7}) {
    const Scalar l = sq(a, 5);
    CHECK(eval_coeff(z, 0, l) == (sq(1) - l) * (sq(1) - sq(2) * l) / ((sq(1) + l) * (sq(1) + sq(2) * l)));
  }
  CHECK_THROWS_AS(eval_coeff(SpectralFamily::yang(h(2)), 1, sq(-1)), EvaluationError);
}

TEST_CASE("truncated catalog entries report undefined coefficients") {
  const auto krs = SpectralFamily::krs_prefix(h(4));
  CHECK(krs.defines(4));
  CHECK(krs.defines(2));
  CHECK_FALSE(krs.defines(1));
  CHECK_THROWS_AS(eval_coeff(krs, 1, sq(1)), std::domain_error);
  // r_{2s-2} = (1-λ)/(1+λ) * (k-λ)... with k = 2s/(2s-1)
  const Scalar l = sq(1, 3);
  const Scalar kk = sq(4, 3);
  CHECK(eval_coeff(krs, 2, l) == ((sq(1) - l) / (sq(1) + l)) * ((sq(1) - kk * l) / (sq(1) + kk * l)));
}

TEST_CASE("reduced diagonals") {
  const auto d = reduced_d(SpectralFamily::yang(h(1)), 1, sq(1));
  REQUIRE(d.entries.size() == 2);
  CHECK(d.entries[0] == sq(1));
  CHECK(d.entries[1] == sq(0));
  for (int n = 0; n <= 4; ++n)
    for (const auto& x : reduced_d(SpectralFamily::identity(h(3)), n, sq(5)).entries) CHECK(x == sq(1));
  // The top level n = 3s is the spin-0 sector: the (12) pair must couple to
  // j = s, i.e. k = s, so the single entry is r_s (here r_3(1) = 3/5).
  const auto top = reduced_d(SpectralFamily::exceptional_s3(), 9, sq(1));
  REQUIRE(top.entries.size() == 1);
  CHECK(top.range.k_min == 3);
  CHECK(top.entries[0] == sq(3, 5));
}

TEST_CASE("Baxter constants") {
  const Scalar b = baxter_b(q(1, 3));
  CHECK(b == Scalar(q(3, 2), q(1, 2), q(5)));
  CHECK(b * b - sq(3) * b + sq(1) == sq(0));
  CHECK(baxter_b(q(1, 2)) == sq(1));
  CHECK(baxter_b(q(2, 5)) == sq(2));
  CHECK_THROWS_AS(baxter_b(q(3, 5)), std::domain_error);
}

TEST_CASE("Baxter weight differs from the printed one by 1/eta") {
  // whether each weight solves the YBE is checked in the ybe tests
  const Rational eta = q(1, 3);
  const CoeffFn good = baxter_g(eta), printed = baxter_g_printed(eta);
  const Scalar t = sq(2);
  CHECK(good(t) == printed(t) / Scalar(eta));
  CHECK_FALSE(good(t) == printed(t));
  CHECK(good(sq(1)).is_zero());
}

TEST_CASE("regularity, unitarity and normalization") {
  const std::vector<Scalar> samples{sq(1, 2), sq(2), sq(7, 3)};
  CHECK(check_regularity_unitarity(SpectralFamily::yang(h(2)), samples).pass);
  CHECK(check_regularity_unitarity(SpectralFamily::exceptional_s3(), {sq(1), sq(3, 2)}).pass);
  const auto bax = SpectralFamily::baxter_tl(h(2), 2);
  CHECK(eval_coeff(bax, 0, bax.zero_point()) == sq(1));
  CHECK(check_regularity_unitarity(bax, {sq(2), sq(3, 7)}).pass);
  CHECK(check_regularity_unitarity(SpectralFamily::zamolodchikov(h(4), 4), {sq(3, 17), sq(11, 13)}).pass);
  // unitarity fails for the perturbed control
  CHECK_FALSE(check_regularity_unitarity(SpectralFamily::perturbed_yang(h(2)), {sq(2)}).pass);
  CHECK(check_regularity_unitarity(SpectralFamily::permutation(h(3)), {sq(2)}).pass);
}

TEST_CASE("multiplicative parameter") {
  const auto bax = SpectralFamily::baxter_tl(h(3), 3);
  CHECK(bax.multiplicative());
  CHECK(bax.zero_point() == sq(1));
  CHECK(bax.compose(sq(2), sq(3)) == sq(6));
  CHECK(bax.reflect(sq(4)) == sq(1, 4));
  const auto y = SpectralFamily::yang(h(3));
  CHECK(y.compose(sq(2), sq(3)) == sq(5));
  CHECK(y.reflect(sq(4)) == sq(-4));
}

TEST_CASE("constant families") {
  const auto c = SpectralFamily::constant_baxter(h(2), 2, 1);
  CHECK(c.constant());
  const Scalar g = eval_coeff(c, 0, sq(0)) - sq(1);
  CHECK(g == Scalar(q(-9, 2), q(3, 2), q(5)));
  CHECK(sq(1) + g + sq(1, 9) * g * g == sq(0));
  const auto p = SpectralFamily::permutation(h(3));
  for (int j = 0; j <= 3; ++j) CHECK(eval_coeff(p, j, sq(0)) == sq(j % 2 == 1 ? 1 : -1));
}

TEST_CASE("m is validated") {
  CHECK_THROWS_AS(SpectralFamily::zamolodchikov(h(2), 3), std::domain_error);
  CHECK_THROWS_AS(SpectralFamily::baxter_tl(h(4), 1), std::domain_error);
  CHECK_NOTHROW(SpectralFamily::zamolodchikov(h(6), 3));
}

TEST_CASE("JSON descriptions") {
  const auto z = SpectralFamily::zamolodchikov(h(3), 3);
  const auto back = SpectralFamily::from_json(z.to_json());
  CHECK(back.name() == z.name());
  CHECK(eval_coeff(back, 0, sq(2, 3)) == eval_coeff(z, 0, sq(2, 3)));

  const auto j = nlohmann::json::parse(R"({"tag": "custom", "s": "1/2",
      "coeffs": [{"num": [1, -1, 1, -1], "den": [1, 1]}, {"num": [1]}]})");
  const auto custom = SpectralFamily::from_json(j);
  CHECK(eval_coeff(custom, 0, sq(1)).is_zero());
  CHECK(eval_coeff(custom, 0, sq(2)) == sq(-5, 3));
  CHECK(eval_coeff(custom, 1, sq(2)) == sq(1));
  const auto round = SpectralFamily::from_json(custom.to_json());
  CHECK(eval_coeff(round, 0, sq(3)) == eval_coeff(custom, 0, sq(3)));

  CHECK_THROWS_AS(SpectralFamily::from_json(nlohmann::json::parse(R"({"tag": "zamolodchikov", "s": "1"})")),
                  std::invalid_argument);
  CHECK_THROWS(SpectralFamily::from_json(nlohmann::json::parse(R"({"tag": "custom", "s": "1",
      "coeffs": [{"num": [1]}, {"num": ["0.5"]}, {"num": [1]}]})")));
  CHECK_THROWS(SpectralFamily::from_json(nlohmann::json::parse(R"({"tag": "exceptional-s3", "s": "2"})")));
}
