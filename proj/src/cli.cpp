#include "sl2ybe/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2ybe/amatrix.hpp"
#include "sl2ybe/classify.hpp"
#include "sl2ybe/oracle.hpp"
#include "sl2ybe/parallel.hpp"
#include "sl2ybe/sixj.hpp"
#include "sl2ybe/spectral.hpp"
#include "sl2ybe/suite.hpp"
#include "sl2ybe/ybe.hpp"

namespace sl2ybe {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Records go out as JSON lines or as text; nothing time-dependent in JSON.
class Emitter {
 public:
  Emitter(std::ostream& os, bool json_mode, std::string command)
      : os_(os), json_(json_mode), command_(std::move(command)) {}

  bool json_mode() const { return json_; }

  void record(json j) {
    if (!json_) return;
    j["version"] = kVersion;
    os_ << j.dump() << '\n';
  }
  void text(const std::string& line) {
    if (!json_) os_ << line << '\n';
  }
  void summary(bool pass, double seconds) {
    if (json_) {
      record({{"command", command_}, {"anchor", "summary"}, {"pass", pass}});
    } else {
      std::ostringstream ss;
      ss << (pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(2) << seconds << " s)";
      os_ << ss.str() << '\n';
    }
  }

 private:
  std::ostream& os_;
  bool json_;
  std::string command_;
};

struct FamilyOptions {
  std::string tag;
  std::string s;
  std::optional<int> m;
  int root = 1;
  std::string file;
};

void add_family_options(CLI::App* sub, FamilyOptions& f, const std::string& tag_flag) {
  sub->add_option(tag_flag, f.tag, "family tag (yang, baxter-tl, zamolodchikov, krs-prefix, exceptional-s3, "
                                   "constant-baxter, permutation, identity)");
  sub->add_option("--s", f.s, "spin, e.g. 1 or 3/2");
  sub->add_option("--m", f.m, "ansatz index m (defaults to 2s)");
  sub->add_option("--root", f.root, "root sign of constant-baxter")->check(CLI::IsMember({1, -1}));
  sub->add_option("--family-file", f.file, "JSON family description");
}

SpectralFamily make_family(const FamilyOptions& f) {
  if (!f.file.empty()) {
    std::ifstream in(f.file);
    if (!in) throw std::invalid_argument("cannot read family file '" + f.file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed family file: ") + e.what());
    }
    return SpectralFamily::from_json(j);
  }
  if (f.tag.empty()) throw std::invalid_argument("a family tag or --family-file is required");
  const FamilyTag tag = parse_tag(f.tag);
  if (tag == FamilyTag::ExceptionalS3) {
    if (!f.s.empty() && HalfInt::parse(f.s) != HalfInt::from_int(3))
      throw std::invalid_argument("exceptional-s3 exists only at s = 3");
    return SpectralFamily::exceptional_s3();
  }
  if (f.s.empty()) throw std::invalid_argument("--s is required for family '" + f.tag + "'");
  const HalfInt s = HalfInt::parse(f.s);
  const int m = f.m.value_or(s.twice);
  switch (tag) {
    case FamilyTag::Yang: return SpectralFamily::yang(s);
    case FamilyTag::BaxterTL: return SpectralFamily::baxter_tl(s, m);
    case FamilyTag::Zamolodchikov: return SpectralFamily::zamolodchikov(s, m);
    case FamilyTag::KRSPrefix: return SpectralFamily::krs_prefix(s);
    case FamilyTag::ConstantBaxter: return SpectralFamily::constant_baxter(s, m, f.root);
    case FamilyTag::Permutation: return SpectralFamily::permutation(s);
    case FamilyTag::Identity: return SpectralFamily::identity(s);
    default: throw std::invalid_argument("family '" + f.tag + "' needs --family-file");
  }
}

// "a..b" or a single level.
std::vector<int> parse_levels(const std::string& text, HalfInt s) {
  if (text.empty()) return all_levels(s);
  int lo = 0, hi = 0;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("levels must be 'a..b' or an integer, got '" + text + "'");
  }
  if (lo < 0 || hi < lo || hi > LevelRange::max_level(s))
    throw std::invalid_argument("levels " + text + " outside 0.." + std::to_string(LevelRange::max_level(s)));
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  if (text.find_first_of(".eE") != std::string::npos)
    throw std::invalid_argument(what + " must be exact (p/q), got '" + text + "'");
  return Rational::parse(text);
}

// ------------------------------------------------------------------ commands

int cmd_sixj(Emitter& out, const std::vector<std::string>& args) {
  std::vector<HalfInt> h;
  for (const auto& a : args) h.push_back(HalfInt::parse(a));
  const SixJArgs sa{h[0], h[1], h[2], h[3], h[4], h[5]};
  const SqrtRational v = sixj(sa);
  json labels = json::array();
  for (const auto& x : h) labels.push_back(x.str());
  out.record({{"anchor", "Eq.82"}, {"args", labels}, {"admissible", triangle_ok(h[0], h[1], h[2]) && triangle_ok(h[3], h[4], h[2]) &&
                                                        triangle_ok(h[0], h[4], h[5]) && triangle_ok(h[3], h[1], h[5])}, {"value", v.str()}});
  out.text(v.str());
  return kPass;
}

int cmd_amat(Emitter& out, const std::string& s_text, int n, bool gauge) {
  const HalfInt s = HalfInt::parse(s_text);
  if (n < 0 || n > LevelRange::max_level(s))
    throw std::invalid_argument("n outside 0.." + std::to_string(LevelRange::max_level(s)));
  const auto a = a_matrix(s, n);
  const auto idx = a.range().indices();
  json rows = json::array(), core = json::array(), u = json::array();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    json row = json::array(), crow = json::array();
    for (int kp : idx) {
      row.push_back(a.entry(idx[i], kp).str());
      crow.push_back(a.core_at(idx[i], kp).str());
    }
    rows.push_back(row);
    core.push_back(crow);
    u.push_back((*a.weights())[i].str());
  }
  json k = idx;
  json rec{{"anchor", "Eq.30/n=" + std::to_string(n)}, {"s", s.str()}, {"n", n}, {"k", k}};
  if (gauge) {
    rec["u"] = u;
    rec["core"] = core;
  } else {
    rec["entries"] = rows;
  }
  out.record(rec);
  out.text("A^(s=" + s.str() + ", n=" + std::to_string(n) + "), k = " + std::to_string(idx.front()) + ".." +
           std::to_string(idx.back()) + (gauge ? "  [A = U^1/2 C U^1/2]" : ""));
  if (gauge) out.text("u: " + u.dump());
  for (const auto& r : gauge ? core : rows) {
    std::string line;
    for (const auto& e : r) line += (line.empty() ? "  " : "  ") + e.get<std::string>();
    out.text(line);
  }
  return kPass;
}

int cmd_eta(Emitter& out, const std::string& s_text, int m, int n) {
  const HalfInt s = HalfInt::parse(s_text);
  if (m < 0 || n < m || n > LevelRange::max_level(s))
    throw std::invalid_argument("need 0 <= m <= n <= floor(3s)");
  const EtaValue v = eta_continued(s, m, n);
  json rec{{"anchor", "Eq.42/m=" + std::to_string(m) + ",n=" + std::to_string(n)},
           {"s", s.str()}, {"m", m}, {"n", n}, {"eta", v.value.str()}, {"continued", v.continued}};
  std::string line = "eta_{" + std::to_string(m) + "," + std::to_string(n) + "}(s=" + s.str() + ") = " +
                     v.value.str() + (v.continued ? "  (continued in s)" : "");
  bool pass = true;
  if (m == n && m >= 2 && m <= s.twice) {
    const Rational closed = eta_closed_form(s, m);
    pass = closed == v.value;
    rec["closed_form"] = closed.str();
    rec["closed_form_agrees"] = pass;
    line += pass ? "  [closed form agrees]" : "  [closed form " + closed.str() + " DISAGREES]";
  }
  out.record(rec);
  out.text(line);
  return pass ? kPass : kFail;
}

int cmd_verify(Emitter& out, const FamilyOptions& fo, const std::string& levels_text, const std::string& grid_text) {
  const SpectralFamily fam = make_family(fo);
  const auto levels = parse_levels(levels_text, fam.s());
  const Grid grid = parse_grid(grid_text);
  const FullReport rep = full_check(fam, levels, sample_grid(grid), grid_name(grid));
  json j = to_json(rep);
  if (!j.contains("anchor")) j["anchor"] = "Eq.29";
  out.record(j);
  out.text(fam.name() + " on grid " + rep.grid);
  for (const auto& lr : rep.levels) {
    int zeros = 0;
    for (const auto& sv : lr.samples) zeros += sv.zero ? 1 : 0;
    out.text("  n=" + std::to_string(lr.n) + "  " + (lr.pass ? "ok  " : "FAIL") + "  " + std::to_string(zeros) +
             "/" + std::to_string(lr.samples.size()) + " samples exactly zero");
  }
  return rep.pass ? kPass : kFail;
}

int cmd_scan(Emitter& out, int max_two_s) {
  if (max_two_s < 2) throw std::invalid_argument("--max-2s must be >= 2");
  std::vector<DegeneracyRecord> records;
  try {
    records = degeneracy_scan(max_two_s);
  } catch (const std::logic_error& e) {
    out.record({{"anchor", "Eq.51-52"}, {"error", e.what()}});
    out.text(std::string("scan aborted: ") + e.what());
    return kFail;
  }
  out.text("  s     m  n  kind         H=H~  H+H~=bG  beta    rank");
  for (const auto& r : records) {
    out.record(to_json(r));
    std::ostringstream ss;
    ss << "  " << std::left << std::setw(5) << r.s.str() << " " << std::setw(2) << r.m << " " << std::setw(2) << r.n
       << " " << std::setw(12) << cell_kind_name(r.kind) << " " << std::setw(5) << (r.holds_51 ? "yes" : "no")
       << " " << std::setw(8) << (r.holds_52 ? "yes" : "no") << " " << std::setw(7)
       << (r.beta ? r.beta->str() : "-") << " " << r.rank;
    out.text(ss.str());
  }
  return kPass;
}

int cmd_classify_constant(Emitter& out, const std::string& s_text, int m) {
  const HalfInt s = HalfInt::parse(s_text);
  if (m < 2 || m > s.twice) throw std::invalid_argument("need 2 <= m <= 2s");
  const ConstantRoots r = constant_roots(s, m);
  const MPrime mp = constant_m_prime(s, m);
  bool solves = true;
  std::vector<int> levels;
  for (int n = 0; n <= m; ++n) levels.push_back(n);
  for (int sign : {1, -1}) solves = solves && constant_check(SpectralFamily::constant_baxter(s, m, sign), levels).pass;
  const bool pass = r.plus_ok && r.minus_ok && mp.verified && solves;
  out.record({{"anchor", "Eq.71/m=" + std::to_string(m)},
              {"s", s.str()},
              {"m", m},
              {"eta", r.eta.str()},
              {"g_plus", r.plus.str()},
              {"g_minus", r.minus.str()},
              {"plus_ok", r.plus_ok},
              {"minus_ok", r.minus_ok},
              {"printed_formula_ok", r.printed_formula_ok},
              {"solves_levels_up_to_m", solves},
              {"m_prime", mp.m_prime},
              {"m_prime_verified", mp.verified},
              {"level_m1_reached", mp.level_reached},
              {"fails_at_level_m1", mp.fails_at_next_level},
              {"solves_all_levels", mp.solves_all_levels},
              {"eta_next", mp.eta_next.str()},
              {"eta_next_continued", mp.eta_next_continued},
              {"pass", pass}});
  out.text("E + g P^(2s-m) at s=" + s.str() + ", m=" + std::to_string(m) + ", eta_mm = " + r.eta.str());
  out.text("  roots of 1 + g + eta^2 g^2: " + r.plus.str() + ", " + r.minus.str() +
           ((r.plus_ok && r.minus_ok) ? "  [verified]" : "  [NOT roots]"));
  out.text(std::string("  levels 0..m solved: ") + (solves ? "yes" : "no"));
  out.text("  first failing level m' = " + std::to_string(mp.m_prime) + (mp.verified ? "" : " (lower bound)") +
           ", eta_{m,m+1} = " + mp.eta_next.str() + (mp.eta_next_continued ? " (continued)" : ""));
  out.text(mp.level_reached ? std::string("  level m+1 rejects both roots: ") + (mp.fails_at_next_level ? "yes" : "NO")
                            : std::string("  level m+1 does not contain m; solves every level: ") +
                                  (mp.solves_all_levels ? "yes" : "no"));
  return pass ? kPass : kFail;
}

int cmd_rigidity(Emitter& out, const std::string& s_text, int m) {
  const HalfInt s = HalfInt::parse(s_text);
  if (m < 2 || m > s.twice) throw std::invalid_argument("need 2 <= m <= 2s");
  const RigidityReport r = permutation_rigidity(s, m);
  out.record({{"anchor", "Eq.72-73/m=" + std::to_string(m)},
              {"s", s.str()},
              {"m", m},
              {"rank_g_hsum", r.rank_g_hsum},
              {"eq73_matches", r.eq73_matches},
              {"deformations_fail", r.deformations_fail},
              {"rigid", r.rigid}});
  out.text("P + g P^(2s-m) at s=" + s.str() + ", m=" + std::to_string(m) + ": rank{G, H+H~} = " +
           std::to_string(r.rank_g_hsum) + ", residual formula " + (r.eq73_matches ? "matches" : "MISMATCH") +
           ", every g != 0 " + (r.deformations_fail ? "fails" : "SOLVES"));
  return r.rigid ? kPass : kFail;
}

int cmd_oracle(Emitter& out, const FamilyOptions& fo, const std::string& lam_text, const std::string& mu_text) {
  const SpectralFamily fam = make_family(fo);
  if (fam.s().twice > kDenseTwoSMax)
    throw std::invalid_argument("dense oracle supports 2s <= " + std::to_string(kDenseTwoSMax));
  const Scalar lambda = parse_rational_arg(lam_text, "--lambda");
  const Scalar mu = parse_rational_arg(mu_text, "--mu");
  bool pass = true;
  for (const auto& r : dense_projector_checks(fam.s())) {
    pass = pass && r.ok;
    out.record({{"anchor", "Eq.2/Eq.5"}, {"check", r.name}, {"residual", r.residual}, {"tolerance", r.tolerance},
                {"ok", r.ok}});
    std::ostringstream ss;
    ss << "  " << r.name << ": " << std::scientific << std::setprecision(2) << r.residual << (r.ok ? "  ok" : "  FAIL");
    out.text(ss.str());
  }
  const auto rec = reduction_consistency(fam, {{lambda, mu}}).front();
  pass = pass && rec.consistent && rec.dense_zero;
  out.record({{"anchor", "Eq.1"},
              {"family", fam.name()},
              {"lambda", lambda.str()},
              {"mu", mu.str()},
              {"ybe_residual", rec.dense_residual},
              {"tolerance", kYbeTol},
              {"dense_zero", rec.dense_zero},
              {"exact_zero", rec.exact_zero},
              {"consistent", rec.consistent}});
  std::ostringstream ss;
  ss << fam.name() << " at (" << lambda.str() << ", " << mu.str() << "): max|YBE| = " << std::scientific
     << std::setprecision(3) << rec.dense_residual << (rec.dense_zero ? " (< tol)" : " (>= tol)")
     << "; exact reduced levels " << (rec.exact_zero ? "all zero" : "not all zero")
     << (rec.consistent ? "; consistent" : "; INCONSISTENT");
  out.text(ss.str());
  return pass ? kPass : kFail;
}

int cmd_suite(Emitter& out, int max_two_s, const std::vector<std::string>& only) {
  if (max_two_s < 2) throw std::invalid_argument("--max-2s must be >= 2");
  SuiteOptions opts;
  opts.two_s_max = max_two_s;
  const auto ids = only.empty() ? criterion_ids() : only;
  bool pass = true;
  for (const auto& id : ids) {
    const CriterionResult r = run_criterion(id, opts);
    pass = pass && r.pass;
    out.record(to_json(r));
    out.text(format_line(r));
  }
  return pass ? kPass : kFail;
}

int cmd_family_show(Emitter& out, const FamilyOptions& fo) {
  const SpectralFamily fam = make_family(fo);
  json j = fam.to_json();
  j["anchor"] = "Eq.2";
  j["name"] = fam.name();
  out.record(j);
  out.text(fam.name() + (fam.multiplicative() ? "  [multiplicative parameter t]" : "") +
           (fam.constant() ? "  [constant]" : ""));
  for (int jj = 0; jj <= fam.s().twice; ++jj) {
    if (!fam.defines(jj)) {
      out.text("  r_" + std::to_string(jj) + " = (undefined)");
      continue;
    }
    const auto& c = fam.coeff(jj);
    out.text("  r_" + std::to_string(jj) + " = (" + c.numerator().str() + ") / (" + c.denominator().str() + ")");
  }
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, const char* const* argv, std::ostream& os, std::ostream& err) {
  CLI::App app{"Exact verification of sl2-invariant R-matrices", "sl2ybe"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false;
  std::string out_path;
  app.add_flag("--json", json_mode, "emit JSON lines");
  app.add_option("--out", out_path, "write the report to a file");

  std::vector<std::string> sixj_args;
  auto* sixj_cmd = app.add_subcommand("sixj", "exact 6-j symbol {a b e; c d f}");
  sixj_cmd->add_option("args", sixj_args, "a b e c d f")->required()->expected(6);

  std::string s_text;
  int n = 0, m = 0;
  bool gauge = false;
  auto* amat_cmd = app.add_subcommand("amat", "level matrix A^(s,n)");
  amat_cmd->add_option("--s", s_text)->required();
  amat_cmd->add_option("--n", n)->required();
  amat_cmd->add_flag("--gauge", gauge, "print u and the rational core instead of entries");

  auto* eta_cmd = app.add_subcommand("eta", "eta_{m,n} = (-1)^n A_mm^(s,n)");
  eta_cmd->add_option("--s", s_text)->required();
  eta_cmd->add_option("--m", m)->required();
  eta_cmd->add_option("--n", n)->required();

  FamilyOptions fo;
  std::string levels_text, grid_text = "a";
  auto* verify_cmd = app.add_subcommand("verify", "exact reduced YBE check of a family");
  add_family_options(verify_cmd, fo, "--family");
  verify_cmd->add_option("--levels", levels_text, "a..b (default: all)");
  verify_cmd->add_option("--grid", grid_text, "a|default|b|dense");

  int max_two_s = 6;
  auto* scan_cmd = app.add_subcommand("scan-degeneracy", "classify (s, m, n) cells of the ansatz system");
  scan_cmd->add_option("--max-2s", max_two_s);

  auto* const_cmd = app.add_subcommand("classify-constant", "constant solutions E + g P^(2s-m)");
  const_cmd->add_option("--s", s_text)->required();
  const_cmd->add_option("--m", m)->required();

  auto* rig_cmd = app.add_subcommand("rigidity", "deformations P + g P^(2s-m)");
  rig_cmd->add_option("--s", s_text)->required();
  rig_cmd->add_option("--m", m)->required();

  std::string lam_text, mu_text;
  auto* oracle_cmd = app.add_subcommand("oracle", "dense floating-point cross-check");
  add_family_options(oracle_cmd, fo, "--family");
  oracle_cmd->add_option("--lambda", lam_text)->required();
  oracle_cmd->add_option("--mu", mu_text)->required();

  std::vector<std::string> only;
  auto* suite_cmd = app.add_subcommand("suite", "acceptance battery");
  suite_cmd->add_option("--max-2s", max_two_s);
  suite_cmd->add_option("--criterion", only, "run only these criteria");

  auto* family_cmd = app.add_subcommand("family", "family catalog");
  family_cmd->require_subcommand(1);
  auto* show_cmd = family_cmd->add_subcommand("show", "print coefficients r_j");
  add_family_options(show_cmd, fo, "--tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    os << o.str();
    err << e2.str();
    return code == 0 ? kPass : kUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open '" << out_path << "' for writing\n";
      return kUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? os : file;

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  Emitter out(sink, json_mode, command);

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (*sixj_cmd) code = cmd_sixj(out, sixj_args);
    else if (*amat_cmd) code = cmd_amat(out, s_text, n, gauge);
    else if (*eta_cmd) code = cmd_eta(out, s_text, m, n);
    else if (*verify_cmd) code = cmd_verify(out, fo, levels_text, grid_text);
    else if (*scan_cmd) code = cmd_scan(out, max_two_s);
    else if (*const_cmd) code = cmd_classify_constant(out, s_text, m);
    else if (*rig_cmd) code = cmd_rigidity(out, s_text, m);
    else if (*oracle_cmd) code = cmd_oracle(out, fo, lam_text, mu_text);
    else if (*suite_cmd) code = cmd_suite(out, max_two_s, only);
    else if (*show_cmd) code = cmd_family_show(out, fo);
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFail;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!*sixj_cmd && !*amat_cmd && !*eta_cmd && !*show_cmd) out.summary(code == kPass, seconds);
  return code;
}

}  // namespace sl2ybe
