#include "sl2ybe/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "sl2ybe/amatrix.hpp"

namespace sl2ybe {

namespace {

using Eigen::MatrixXd;

void require_cap(HalfInt s) {
  if (s.twice < 1 || s.twice > kDenseTwoSMax)
    throw std::domain_error("dense oracle supports 1 <= 2s <= " + std::to_string(kDenseTwoSMax) +
                            ", got s = " + s.str());
}

// Spin operators in the basis |s, s>, |s, s-1>, ..., |s, -s>.
struct SpinOps {
  MatrixXd sz, sp, sm;
};

SpinOps spin_ops(HalfInt s) {
  const int d = s.twice + 1;
  const double sv = s.twice / 2.0;
  SpinOps o{MatrixXd::Zero(d, d), MatrixXd::Zero(d, d), MatrixXd::Zero(d, d)};
  for (int i = 0; i < d; ++i) {
    const double mz = sv - i;
    o.sz(i, i) = mz;
    if (i > 0) o.sp(i - 1, i) = std::sqrt(sv * (sv + 1) - mz * (mz + 1));
  }
  o.sm = o.sp.transpose();
  return o;
}

MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

MatrixXd casimir_two_site(HalfInt s) {
  const SpinOps o = spin_ops(s);
  const MatrixXd id = MatrixXd::Identity(o.sz.rows(), o.sz.cols());
  const MatrixXd jz = kron(o.sz, id) + kron(id, o.sz);
  const MatrixXd jp = kron(o.sp, id) + kron(id, o.sp);
  const MatrixXd jm = kron(o.sm, id) + kron(id, o.sm);
  return jz * jz + 0.5 * (jp * jm + jm * jp);
}

MatrixXd op12(const MatrixXd& x, int d) { return kron(x, MatrixXd::Identity(d, d)); }
MatrixXd op23(const MatrixXd& x, int d) { return kron(MatrixXd::Identity(d, d), x); }

MatrixXd dense_r(const SpectralFamily& fam, const std::vector<MatrixXd>& p, const Scalar& x) {
  MatrixXd r = MatrixXd::Zero(p[0].rows(), p[0].cols());
  for (int j = 0; j <= fam.s().twice; ++j) r += eval_coeff(fam, j, x).to_double() * p[j];
  return r;
}

NamedResidual named(std::string name, double residual, double tol) {
  return {std::move(name), residual, tol, residual < tol};
}

}  // namespace

std::vector<DenseOperator> dense_projectors(HalfInt s) {
  require_cap(s);
  const MatrixXd j2 = casimir_two_site(s);
  const auto dim = j2.rows();
  const MatrixXd id = MatrixXd::Identity(dim, dim);
  std::vector<DenseOperator> out;
  for (int j = 0; j <= s.twice; ++j) {
    MatrixXd p = id;
    const double xj = j * (j + 1.0);
    for (int i = 0; i <= s.twice; ++i) {
      if (i == j) continue;
      const double xi = i * (i + 1.0);
      p = p * (j2 - xi * id) / (xj - xi);
    }
    out.push_back(p);
  }
  return out;
}

DenseOperator dense_permutation_from_projectors(HalfInt s) {
  const auto p = dense_projectors(s);
  MatrixXd perm = MatrixXd::Zero(p[0].rows(), p[0].cols());
  for (int j = 0; j <= s.twice; ++j) perm += parity_sign(s.twice - j) * p[j];
  return perm;
}

DenseOperator dense_swap(HalfInt s) {
  const int d = s.twice + 1;
  MatrixXd sw = MatrixXd::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) sw(b * d + a, a * d + b) = 1.0;
  return sw;
}

double max_abs(const DenseOperator& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); }

std::vector<NamedResidual> dense_projector_checks(HalfInt s) {
  const auto p = dense_projectors(s);
  const auto dim = p[0].rows();
  std::vector<NamedResidual> out;
  MatrixXd sum = MatrixXd::Zero(dim, dim);
  for (int j = 0; j <= s.twice; ++j) {
    sum += p[j];
    const std::string tag = "P^" + std::to_string(j);
    out.push_back(named(tag + " idempotent", max_abs(p[j] * p[j] - p[j]), kProjectorTol));
    out.push_back(named(tag + " symmetric", max_abs(p[j] - p[j].transpose()), kProjectorTol));
    out.push_back(named(tag + " trace = 2j+1", std::abs(p[j].trace() - (2 * j + 1)), kProjectorTol));
    for (int i = 0; i < j; ++i)
      out.push_back(named("P^" + std::to_string(i) + " P^" + std::to_string(j) + " = 0",
                          max_abs(p[i] * p[j]), kProjectorTol));
  }
  out.push_back(named("sum_j P^j = E", max_abs(sum - MatrixXd::Identity(dim, dim)), kProjectorTol));
  out.push_back(named("sum_j (-1)^(2s-j) P^j = P",
                      max_abs(dense_permutation_from_projectors(s) - dense_swap(s)), 1e-12));
  return out;
}

std::vector<NamedResidual> dense_lemma1_check(HalfInt s) {
  require_cap(s);
  const int d = s.twice + 1;
  const auto p = dense_projectors(s);
  const MatrixXd perm = dense_swap(s);
  const double xi = parity_sign(s.twice);
  const double eta = 1.0 / (s.twice + 1);
  const MatrixXd e = MatrixXd::Identity(d * d * d, d * d * d);
  std::vector<NamedResidual> out;

  auto run = [&](const std::string& tag, const MatrixXd& pl, const MatrixXd& plp, const MatrixXd& p0l,
                 const MatrixXd& p0lp) {
    out.push_back(named(tag + " P0 P0 = P0", max_abs(p0l * p0l - p0l), kIdentityTol));
    out.push_back(named(tag + " P P = E", max_abs(pl * pl - e), kIdentityTol));
    out.push_back(named(tag + " P0 P = xi P0", max_abs(p0l * pl - xi * p0l), kIdentityTol));
    out.push_back(named(tag + " P P0 = xi P0", max_abs(pl * p0l - xi * p0l), kIdentityTol));
    out.push_back(named(tag + " braid", max_abs(pl * plp * pl - plp * pl * plp), kIdentityTol));
    out.push_back(named(tag + " P0 P' P = P' P P0'", max_abs(p0l * plp * pl - plp * pl * p0lp), kIdentityTol));
    out.push_back(named(tag + " P P0' P = P' P0 P'", max_abs(pl * p0lp * pl - plp * p0l * plp), kIdentityTol));
    out.push_back(named(tag + " P0 P' P0 = eta P0", max_abs(p0l * plp * p0l - eta * p0l), kIdentityTol));
    out.push_back(named(tag + " P0 P0' P0 = eta^2 P0", max_abs(p0l * p0lp * p0l - eta * eta * p0l), kIdentityTol));
    out.push_back(named(tag + " P0 P0' P = xi eta P0 P'", max_abs(p0l * p0lp * pl - xi * eta * p0l * plp),
                        kIdentityTol));
    out.push_back(named(tag + " P P0' P0 = xi eta P' P0", max_abs(pl * p0lp * p0l - xi * eta * plp * p0l),
                        kIdentityTol));
  };
  const MatrixXd p12 = op12(perm, d), p23 = op23(perm, d);
  const MatrixXd q12 = op12(p[0], d), q23 = op23(p[0], d);
  run("(12,23)", p12, p23, q12, q23);
  run("(23,12)", p23, p12, q23, q12);
  for (int j = 0; j <= s.twice; ++j) {
    const double c = (2 * j + 1.0) / ((s.twice + 1.0) * (s.twice + 1.0));
    out.push_back(named("P0_12 P^" + std::to_string(j) + "_23 P0_12 = (2j+1)/(2s+1)^2 P0_12",
                        max_abs(q12 * op23(p[j], d) * q12 - c * q12), kIdentityTol));
  }
  return out;
}

double dense_ybe_residual(const SpectralFamily& fam, const Scalar& lambda, const Scalar& mu) {
  const HalfInt s = fam.s();
  require_cap(s);
  const int d = s.twice + 1;
  const auto p = dense_projectors(s);
  const Scalar lm = fam.compose(lambda, mu);
  const MatrixXd rl = dense_r(fam, p, lambda), rm = dense_r(fam, p, mu), rlm = dense_r(fam, p, lm);
  const MatrixXd lhs = op12(rl, d) * op23(rlm, d) * op12(rm, d);
  const MatrixXd rhs = op23(rm, d) * op12(rlm, d) * op23(rl, d);
  return max_abs(lhs - rhs);
}

std::vector<ConsistencyRecord> reduction_consistency(const SpectralFamily& fam,
                                                     const std::vector<Sample>& samples) {
  std::vector<ConsistencyRecord> out;
  for (const auto& smp : samples) {
    ConsistencyRecord r;
    r.lambda = smp.lambda;
    r.mu = smp.mu;
    r.dense_residual = dense_ybe_residual(fam, smp.lambda, smp.mu);
    r.dense_zero = r.dense_residual < kIdentityTol;
    r.exact_zero = true;
    for (int n : all_levels(fam.s()))
      r.exact_zero = r.exact_zero && reduced_ybe_check(fam, n, smp.lambda, smp.mu).is_zero;
    r.consistent = r.dense_zero == r.exact_zero;
    out.push_back(r);
  }
  return out;
}

int dense_level_rank(HalfInt s, int m, int n) {
  require_cap(s);
  (void)LevelRange::of(s, n);
  const int d = s.twice + 1;
  const SpinOps o = spin_ops(s);
  const MatrixXd id = MatrixXd::Identity(d, d);
  const MatrixXd sp3 = kron(kron(o.sp, id), id) + kron(kron(id, o.sp), id) + kron(kron(id, id), o.sp);
  // Basis states with total S^z = 3s - n, i.e. total lowering count n.
  std::vector<Eigen::Index> sector;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (a + b + c == n) sector.push_back((a * d + b) * d + c);
  MatrixXd embed = MatrixXd::Zero(d * d * d, static_cast<Eigen::Index>(sector.size()));
  for (std::size_t i = 0; i < sector.size(); ++i) embed(sector[i], static_cast<Eigen::Index>(i)) = 1.0;
  const MatrixXd raise = sp3 * embed;
  const MatrixXd kernel = Eigen::FullPivLU<MatrixXd>(raise).kernel();
  const MatrixXd q = embed * Eigen::HouseholderQR<MatrixXd>(kernel).householderQ() *
                     MatrixXd::Identity(kernel.rows(), kernel.cols());

  const auto p = dense_projectors(s);
  const MatrixXd perm = dense_swap(s);
  const MatrixXd p12 = op12(perm, d), p23 = op23(perm, d);
  const MatrixXd q12 = op12(p[s.twice - m], d), q23 = op23(p[s.twice - m], d);
  auto restrict = [&](const MatrixXd& x) { return MatrixXd(q.transpose() * x * q); };
  const std::vector<MatrixXd> ops{restrict(p12 - p23), restrict(q12 - q23), restrict(q12 * p23 - p12 * q23),
                                  restrict(p23 * q12 - q23 * p12)};
  const auto k = ops[0].size();
  MatrixXd stacked(static_cast<Eigen::Index>(ops.size()), k);
  for (std::size_t i = 0; i < ops.size(); ++i)
    stacked.row(static_cast<Eigen::Index>(i)) = Eigen::Map<const Eigen::RowVectorXd>(ops[i].data(), k);
  // The LU threshold is relative to the largest pivot; an all-roundoff
  // stack must be caught separately.
  if (max_abs(stacked) < kIdentityTol) return 0;
  Eigen::FullPivLU<MatrixXd> lu(stacked);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

}  // namespace sl2ybe
