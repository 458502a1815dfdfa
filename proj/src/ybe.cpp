#include "sl2ybe/ybe.hpp"

#include <stdexcept>

#include "sl2ybe/classify.hpp"
#include "sl2ybe/parallel.hpp"

namespace sl2ybe {

namespace {

using GM = GaugedMatrix<Scalar>;

std::vector<Sample> pairs(std::initializer_list<std::pair<Rational, Rational>> xs) {
  std::vector<Sample> out;
  for (const auto& [l, m] : xs) out.push_back({Scalar(l), Scalar(m)});
  return out;
}

const std::vector<Sample>& grid_a() {
  static const auto g = pairs({{Rational(1, 2), Rational(1, 3)},
                               {Rational(1), Rational(2)},
                               {Rational(2, 3), Rational(1, 5)},
                               {Rational(3), Rational(1, 7)},
                               {Rational(5, 4), Rational(3, 2)},
                               {Rational(1, 9), Rational(4)}});
  return g;
}

const std::vector<Sample>& grid_b() {
  static const auto g = pairs({{Rational(1, 3), Rational(1, 4)},
                               {Rational(2), Rational(5, 3)},
                               {Rational(3, 5), Rational(2, 7)},
                               {Rational(4), Rational(1, 6)},
                               {Rational(7, 4), Rational(5, 2)},
                               {Rational(1, 8), Rational(3)}});
  return g;
}

GM diagonal_of(const SpectralFamily& fam, int n, const Scalar& x, const Weights& w) {
  const ReducedDiagonal d = reduced_d(fam, n, x);
  return GM::diagonal(d.range, w, d.entries);
}

}  // namespace

std::vector<Sample> sample_grid(Grid grid) {
  switch (grid) {
    case Grid::A:
      return grid_a();
    case Grid::B:
      return grid_b();
    case Grid::Dense: {
      std::vector<Sample> out;
      for (const auto& a : grid_a())
        for (const auto& b : grid_b()) out.push_back({a.lambda, b.mu});
      return out;
    }
  }
  throw std::invalid_argument("unknown grid");
}

std::string grid_name(Grid grid) {
  switch (grid) {
    case Grid::A:
      return "a";
    case Grid::B:
      return "b";
    case Grid::Dense:
      return "dense";
  }
  return "?";
}

Grid parse_grid(const std::string& name) {
  if (name == "a" || name == "default") return Grid::A;
  if (name == "b") return Grid::B;
  if (name == "dense") return Grid::Dense;
  throw std::invalid_argument("unknown grid '" + name + "' (expected default, a, b or dense)");
}

ReducedResidual reduced_ybe_check(const SpectralFamily& fam, int n, const Scalar& lambda,
                                  const Scalar& mu) {
  const GM a = a_matrix(fam.s(), n).embed<Scalar>();
  const Weights& w = a.weights();
  const Scalar lm = fam.compose(lambda, mu);
  const GM d_l = diagonal_of(fam, n, lambda, w);
  const GM d_m = diagonal_of(fam, n, mu, w);
  const GM d_lm = diagonal_of(fam, n, lm, w);
  const GM lhs = d_l * a * d_lm * a * d_m;
  const GM rhs = a * d_m * a * d_lm * a * d_l * a;
  ReducedResidual r{n, lambda, mu, lhs - rhs, false};
  r.is_zero = r.residual.is_zero();
  return r;
}

std::vector<int> all_levels(HalfInt s) {
  std::vector<int> levels;
  for (int n = 0; n <= LevelRange::max_level(s); ++n) levels.push_back(n);
  return levels;
}

FullReport full_check(const SpectralFamily& fam, const std::vector<int>& levels,
                      const std::vector<Sample>& samples, const std::string& grid_label) {
  FullReport rep{fam.name(), fam.s(), grid_label, {}, true};
  // Surface missing coefficients before any arithmetic.
  for (int n : levels)
    for (int k : LevelRange::of(fam.s(), n).indices()) (void)fam.coeff(fam.s().twice - k);
  rep.levels = parallel_map<LevelReport>(levels.size(), [&](std::size_t i) {
    LevelReport lr{levels[i], {}, true};
    for (const auto& smp : samples) {
      const bool zero = reduced_ybe_check(fam, levels[i], smp.lambda, smp.mu).is_zero;
      lr.samples.push_back({smp.lambda, smp.mu, zero});
      lr.pass = lr.pass && zero;
    }
    return lr;
  });
  for (const auto& lr : rep.levels) rep.pass = rep.pass && lr.pass;
  return rep;
}

nlohmann::json to_json(const FullReport& report) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lr : report.levels) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& v : lr.samples)
      samples.push_back({{"lambda", v.lambda.str()}, {"mu", v.mu.str()}, {"zero", v.zero}});
    levels.push_back({{"n", lr.n}, {"anchor", "Eq.29/n=" + std::to_string(lr.n)}, {"samples", samples},
                      {"pass", lr.pass}});
  }
  return {{"family", report.family}, {"s", report.s.str()}, {"grid", report.grid},
          {"levels", levels},        {"pass", report.pass}};
}

std::function<Scalar(const Scalar&)> as_function(const CoeffFn& fn) {
  return [fn](const Scalar& x) { return fn(x); };
}

CoeffTriple coeff_functions(HalfInt s, int m, int n, const AnsatzFunctions& fns, const Scalar& lambda,
                            const Scalar& mu) {
  CoeffTriple t;
  t.xi = parity_sign(m);
  t.theta = n >= m ? 1 : 0;
  const Scalar lm = fns.compose(lambda, mu);
  const Scalar fl = fns.f(lambda), fm = fns.f(mu), flm = fns.f(lm);
  t.F = fl + fm - flm;
  if (t.theta == 0) return t;  // G = H = 0

  const EtaValue ev = eta_continued(s, m, n);
  t.eta = ev.value;
  t.eta_continued = ev.continued;
  const Scalar xi(t.xi), et(t.eta);
  const Scalar gl = fns.g(lambda), gm = fns.g(mu), glm = fns.g(lm);
  t.G = gl + gm - glm + xi * fl * gm + xi * gl * fm + gl * gm + et * gl * gm * flm +
        et * et * gl * gm * glm;
  auto h = [&](const Scalar& ga, const Scalar& fa, const Scalar& fb) {
    return ga * flm - fa * glm + xi * et * ga * fb * glm;
  };
  t.H = h(gl, fl, fm);
  t.H_swapped = h(gm, fm, fl);
  return t;
}

CrosscheckResult ansatz_residual_crosscheck(HalfInt s, int m, int n, const AnsatzFunctions& fns,
                                            const Scalar& lambda, const Scalar& mu) {
  const FghSystem sys = fgh_matrices(s, m, n);
  const GM a = a_matrix(s, n).embed<Scalar>();
  const Weights& w = a.weights();
  const LevelRange& range = a.range();
  const GM e = GM::identity(range, w);
  const GM d0 = SignDiagonal::of(range).gauged<Scalar>(w);
  const GM pi = RankOneProjector{range, m}.gauged<Scalar>(w);
  const int theta = n >= m ? 1 : 0;
  const Scalar lm = fns.compose(lambda, mu);

  // Cleared diagonal E + f D0 + θ g π and its hatted form.
  auto cleared = [&](const Scalar& x) {
    const Scalar g = theta ? fns.g(x) : Scalar(0);
    return e + fns.f(x) * d0 + g * pi;
  };
  auto hat = [&](const GM& x) { return a * x * a; };
  const GM x_l = cleared(lambda), x_m = cleared(mu), x_lm = cleared(lm);
  const GM cleared_res = x_l * hat(x_lm) * x_m - hat(x_m) * x_lm * hat(x_l);

  const CoeffTriple c = coeff_functions(s, m, n, fns, lambda, mu);
  const GM combo = c.F * sys.F.embed<Scalar>() + c.G * sys.G.embed<Scalar>() +
                   c.H * sys.H.embed<Scalar>() + c.H_swapped * sys.H_tilde.embed<Scalar>();

  CrosscheckResult out;
  out.prefactor = ((Scalar(1) + fns.f(lambda)) * (Scalar(1) + fns.f(mu)) * (Scalar(1) + fns.f(lm))).inverse();
  auto normalized = [&](const Scalar& x, const GM& cx) { return (Scalar(1) + fns.f(x)).inverse() * cx; };
  const GM d_l = normalized(lambda, x_l), d_m = normalized(mu, x_m), d_lm = normalized(lm, x_lm);
  const GM direct = d_l * hat(d_lm) * d_m - hat(d_m) * d_lm * hat(d_l);
  out.equal = combo == cleared_res && out.prefactor * combo == direct;
  out.residual_zero = direct.is_zero();
  return out;
}

ConstantCheckReport constant_check(const SpectralFamily& fam, const std::vector<int>& levels) {
  if (!fam.constant()) throw std::invalid_argument("constant_check needs a constant family");
  ConstantCheckReport rep;
  for (int n : levels) {
    const GM a = a_matrix(fam.s(), n).embed<Scalar>();
    const GM d = diagonal_of(fam, n, fam.zero_point(), a.weights());
    const GM dh = a * d * a;
    const bool ok = d * dh * d == dh * d * dh;
    rep.levels.emplace_back(n, ok);
    rep.pass = rep.pass && ok;
  }
  return rep;
}

}  // namespace sl2ybe
