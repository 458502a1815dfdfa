#include <doctest.h>

#include <set>

#include "sl2ybe/parallel.hpp"
#include "sl2ybe/ybe.hpp"

using namespace sl2ybe;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }
Scalar sq(long a, long b = 1) { return Scalar(q(a, b)); }

CoeffFn identity_fn() { return CoeffFn(Polynomial<Scalar>::linear(sq(0), sq(1)), Polynomial<Scalar>(sq(1))); }
CoeffFn constant_fn(const Scalar& c) { return CoeffFn(c); }

// E + g(t) P^(2s-m) with all other coefficients 1, in the multiplicative variable.
SpectralFamily baxter_like(HalfInt s, int m, const CoeffFn& g) {
  std::vector<std::optional<CoeffFn>> c(static_cast<std::size_t>(s.twice + 1), CoeffFn(sq(1)));
  c[static_cast<std::size_t>(s.twice - m)] = CoeffFn(sq(1)) + g;
  return SpectralFamily::custom(s, std::move(c), /*multiplicative=*/true);
}
}  // namespace

TEST_CASE("sample grids") {
  const auto a = sample_grid(Grid::A), b = sample_grid(Grid::B);
  CHECK(a.size() == 6);
  CHECK(b.size() == 6);
  std::set<std::string> la, lb;
  for (const auto& x : a) la.insert(x.lambda.str() + "," + x.mu.str());
  for (const auto& x : b) lb.insert(x.lambda.str() + "," + x.mu.str());
  for (const auto& x : la) CHECK(lb.count(x) == 0);
  CHECK(sample_grid(Grid::Dense).size() == 36);
  CHECK(parse_grid("default") == Grid::A);
  CHECK(parse_grid("b") == Grid::B);
  CHECK_THROWS_AS(parse_grid("c"), std::invalid_argument);
  CHECK(all_levels(h(6)).size() == 10);
}

TEST_CASE("reduced YBE at single levels") {
  CHECK(reduced_ybe_check(SpectralFamily::yang(h(1)), 1, sq(1, 2), sq(1, 3)).is_zero);
  CHECK(reduced_ybe_check(SpectralFamily::exceptional_s3(), 4, sq(1), sq(2)).is_zero);
  const auto bad = reduced_ybe_check(SpectralFamily::perturbed_yang(h(1)), 1, sq(1), sq(1));
  CHECK_FALSE(bad.is_zero);
  CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("full checks") {
  const auto grid = sample_grid(Grid::A);
  CHECK(full_check(SpectralFamily::exceptional_s3(), all_levels(h(6)), grid).pass);
  CHECK(full_check(SpectralFamily::krs_prefix(h(4)), {0, 1, 2}, grid).pass);
  CHECK_THROWS_AS(full_check(SpectralFamily::krs_prefix(h(4)), {3}, grid), std::domain_error);
  for (int tw = 1; tw <= 4; ++tw) CHECK(full_check(SpectralFamily::yang(h(tw)), all_levels(h(tw)), grid).pass);
  for (int tw = 2; tw <= 4; ++tw) {
    CHECK(full_check(SpectralFamily::zamolodchikov(h(tw), tw), all_levels(h(tw)), grid).pass);
    CHECK(full_check(SpectralFamily::baxter_tl(h(tw), tw), all_levels(h(tw)), sample_grid(Grid::B)).pass);
  }
  CHECK_FALSE(full_check(SpectralFamily::perturbed_yang(h(2)), all_levels(h(2)), grid).pass);
}

TEST_CASE("the printed Baxter weight is not a solution, the corrected one is") {
  for (int tw = 2; tw <= 4; ++tw) {
    const Rational eta = q(1, tw + 1);  // eta_{2s,2s}
    const auto good = baxter_like(h(tw), tw, baxter_g(eta));
    const auto printed = baxter_like(h(tw), tw, baxter_g_printed(eta));
    CHECK(full_check(good, all_levels(h(tw)), sample_grid(Grid::A)).pass);
    CHECK_FALSE(full_check(printed, {tw}, sample_grid(Grid::A)).pass);
  }
}

TEST_CASE("truncated ansatz families only solve the lower levels") {
  // E + λP + g P^(2s-m) with m < 2s: levels below m are untouched by g.
  const auto z = SpectralFamily::zamolodchikov(h(4), 2);
  CHECK(full_check(z, {0, 1, 2}, sample_grid(Grid::A)).pass);
  CHECK_FALSE(full_check(z, {3}, sample_grid(Grid::A)).pass);
}

TEST_CASE("ansatz coefficient functions") {
  AnsatzFunctions lin{as_function(identity_fn()), as_function(constant_fn(sq(0))), false};
  for (int n = 0; n <= 3; ++n) {
    const auto t = coeff_functions(h(2), 2, n, lin, sq(2, 3), sq(5, 7));
    CHECK(t.F.is_zero());
    CHECK(t.G.is_zero());
    CHECK(t.H.is_zero());
  }
  AnsatzFunctions zam{as_function(identity_fn()), as_function(zamolodchikov_g(1, q(1, 3))), false};
  const auto z = coeff_functions(h(2), 2, 2, zam, sq(1, 2), sq(1, 3));
  CHECK(z.G.is_zero());
  CHECK(z.H.is_zero());
  CHECK(z.H_swapped.is_zero());
  CHECK(z.theta == 1);
  CHECK(z.eta == q(1, 3));

  AnsatzFunctions bax{as_function(constant_fn(sq(0))), as_function(baxter_g(q(1, 4))), true};
  const auto b = coeff_functions(h(3), 3, 3, bax, sq(2), sq(3));
  CHECK(b.G.is_zero());

  // theta = 0 below m
  const auto below = coeff_functions(h(2), 2, 1, zam, sq(1, 2), sq(1, 3));
  CHECK(below.theta == 0);
}

TEST_CASE("ansatz residual equals the direct level residual") {
  AnsatzFunctions yang{as_function(identity_fn()), as_function(constant_fn(sq(0))), false};
  auto r = ansatz_residual_crosscheck(h(2), 2, 1, yang, sq(1, 2), sq(1, 3));
  CHECK(r.equal);
  CHECK(r.residual_zero);

  AnsatzFunctions zam{as_function(identity_fn()), as_function(zamolodchikov_g(1, q(1, 3))), false};
  r = ansatz_residual_crosscheck(h(2), 2, 2, zam, sq(1, 2), sq(1, 3));
  CHECK(r.equal);
  CHECK(r.residual_zero);

  const CoeffFn square(Polynomial<Scalar>(std::vector<Scalar>{sq(0), sq(0), sq(1)}), Polynomial<Scalar>(sq(1)));
  AnsatzFunctions sqr{as_function(square), as_function(constant_fn(sq(0))), false};
  r = ansatz_residual_crosscheck(h(2), 2, 1, sqr, sq(1), sq(1));
  CHECK(r.equal);
  CHECK_FALSE(r.residual_zero);

  // a wrong g at a level that sees it
  AnsatzFunctions off{as_function(identity_fn()), as_function(zamolodchikov_g(1, q(1, 4))), false};
  for (int n = 2; n <= 3; ++n) {
    r = ansatz_residual_crosscheck(h(2), 2, n, off, sq(1, 2), sq(1, 3));
    CHECK(r.equal);
  }
  CHECK_FALSE(ansatz_residual_crosscheck(h(2), 2, 2, off, sq(1, 2), sq(1, 3)).residual_zero);

  // random-ish sweep of cells
  for (int tw = 2; tw <= 5; ++tw)
    for (int m = 2; m <= tw; ++m)
      for (int n = 0; n <= (3 * tw) / 2; ++n) {
        AnsatzFunctions any{as_function(identity_fn()), as_function(zamolodchikov_g(parity_sign(m), q(2, 9))), false};
        INFO("2s=" << tw << " m=" << m << " n=" << n);
        CHECK(ansatz_residual_crosscheck(h(tw), m, n, any, sq(2, 5), sq(3, 11)).equal);
      }
}

TEST_CASE("constant checks") {
  CHECK(constant_check(SpectralFamily::permutation(h(2)), all_levels(h(2))).pass);
  CHECK(constant_check(SpectralFamily::identity(h(5)), all_levels(h(5))).pass);
  const auto c = SpectralFamily::constant_baxter(h(2), 2, 1);
  CHECK(constant_check(c, {0, 1, 2}).pass);
  // m = 2s: level 3 does not contain index 2, so nothing obstructs the solution
  CHECK(constant_check(c, {3}).pass);
  for (int sign : {1, -1}) {
    const auto low = SpectralFamily::constant_baxter(h(4), 2, sign);
    CHECK(constant_check(low, {0, 1, 2}).pass);
    CHECK_FALSE(constant_check(low, {3}).pass);
  }
}

TEST_CASE("reports are deterministic regardless of thread count") {
  const auto fam = SpectralFamily::zamolodchikov(h(4), 4);
  const auto one = to_json(full_check(fam, all_levels(h(4)), sample_grid(Grid::B), "b")).dump();
  const auto two = to_json(full_check(fam, all_levels(h(4)), sample_grid(Grid::B), "b")).dump();
  CHECK(one == two);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["levels"][3]["anchor"] == "Eq.29/n=3");
  CHECK(j["pass"] == true);
}
