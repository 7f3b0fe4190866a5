#include "jgap_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jgap/certificate.hpp"
#include "jgap/error.hpp"
#include "jgap/hard_body.hpp"
#include "jgap/hypergeometric.hpp"
#include "jgap/io.hpp"
#include "jgap/net_approx.hpp"
#include "jgap/parallel.hpp"
#include "jgap/simplex_frame.hpp"

namespace jgap::cli {
namespace {

using io::Json;

// Shortest decimal that round-trips.
std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kFamilyNotFound:
      return kConstructionFailure;
    case Errc::kOutOfRegime:
    case Errc::kDegenerateK:
      return kOutOfRegime;
    case Errc::kUnverifiedCertificate:
    case Errc::kNotInPolar:
    case Errc::kNotInHull:
    case Errc::kOracleRangeViolation:
    case Errc::kUnbounded:
    case Errc::kInfeasible:
    case Errc::kIterationLimit:
    case Errc::kOriginNotInterior:
      return kInvariantFailure;
    default:
      return kUsage;
  }
}

struct Common {
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string json_path;
};

void add_common(CLI::App* cmd, Common& c, bool with_seed) {
  if (with_seed) cmd->add_option("--seed", c.seed, "Master seed (falls back to JGAP_SEED, then 0)");
  cmd->add_option("--threads", c.threads, "Worker threads, 0 for all cores");
  cmd->add_option("--json", c.json_path, "Also write the report to this file");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  const char* env = std::getenv("JGAP_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, value);
  if (res.ec != std::errc() || res.ptr != end) throw UsageError("JGAP_SEED is not an unsigned integer");
  return value;
}

void emit(const Json& report, const Common& c, std::ostream& out) {
  const std::string text = io::dump(report);
  out << text;
  if (!c.json_path.empty()) io::write_file(c.json_path, text);
}

// simplex ------------------------------------------------------------------

struct SimplexArgs {
  Common common;
  std::int64_t n = 0;
  std::string frame_path;
};

int cmd_simplex(const SimplexArgs& a, std::ostream& out) {
  const SimplexFrame frame = build_simplex(a.n);
  const GramReport gram = gram_report(frame);
  const JohnReport john = john_check(frame.contacts, frame.weights);

  bool pass = gram.norm_error <= 1e-10 && gram.gram_error <= 1e-10 && gram.sum_error <= 1e-9 &&
              john.identity_error <= 1e-8 && john.barycenter_error <= 1e-9;

  Json report;
  report["command"] = "simplex";
  report["n"] = a.n;
  Json g;
  g["norm_error"] = gram.norm_error;
  g["gram_error"] = gram.gram_error;
  g["sum_error"] = gram.sum_error;
  report["gram"] = std::move(g);
  Json j;
  j["weight"] = frame.weights[0];
  j["identity_error"] = john.identity_error;
  j["barycenter_error"] = john.barycenter_error;
  report["john"] = std::move(j);
  if (a.n >= 3) {
    const EquatorFrame eq = equator_frame(frame);
    const double expected = std::sqrt(static_cast<double>(a.n - 1) / static_cast<double>(a.n + 1));
    const double c_err = std::abs(eq.c_n - expected);
    pass = pass && c_err <= 1e-10;
    Json e;
    e["c_n"] = eq.c_n;
    e["c_n_error"] = c_err;
    report["equator"] = std::move(e);
  }
  report["pass"] = pass;
  emit(report, a.common, out);
  if (!a.frame_path.empty()) io::write_file(a.frame_path, io::dump(io::frame_to_json(frame)));
  return pass ? kPass : kInvariantFailure;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  Common common;
  std::int64_t n = 0;
  std::optional<std::int64_t> k;
  std::optional<std::size_t> m;
  std::optional<double> R;
  std::size_t m_max = kDefaultMaxFacets;
  std::size_t max_attempts = 100000;
  std::string out_path = "body.json";
  bool inline_simplex = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.common);
  HardBodyParams params;
  if (a.k) {
    if (a.R) throw UsageError("give either --k or --R, not both");
    const std::size_t m = a.m ? *a.m : facet_count_for(a.n, *a.k, a.m_max).m;
    params = params_from_k(a.n, *a.k, m, seed);
    if (!a.m) params.m_capped = facet_count_for(a.n, *a.k, a.m_max).capped;
  } else if (a.R) {
    params = derive_params(a.n, *a.R, a.m_max, seed);
    if (a.m) {
      params.m = *a.m;
      params.m_capped = false;
    }
  } else {
    throw UsageError("construct needs --k or --R");
  }

  HardBodyInstance inst;
  try {
    inst = build_instance(params, a.max_attempts);
  } catch (const Error& e) {
    if (e.code() == Errc::kFamilyNotFound) {
      err << "hint: retry with a different --seed, a smaller --m, or a smaller --k\n";
    }
    throw;
  }
  io::write_file(a.out_path, io::dump(io::body_to_json(inst, a.inline_simplex)));

  Json report;
  report["command"] = "construct";
  report["out"] = a.out_path;
  report["rows"] = inst.frame->contacts.rows() + inst.facet_dirs.rows();
  report["params"] = io::params_to_json(params);
  emit(report, a.common, out);
  return kPass;
}

// certify ------------------------------------------------------------------

struct CertifyArgs {
  Common common;
  std::string body_path;
  std::size_t counting_trials = 1000;
  std::size_t lp_trials = 0;
};

struct CountingTally {
  std::size_t violations = 0;
  Eigen::Index max_o_size = 0;
  double min_lambda_in_o = 1.0;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(a.common);
  const io::BodyFile body = io::body_from_json(io::read_json_file(a.body_path));
  const Certificate cert = io::certificate_from_body(body);
  const HypothesisReport hyp = verify_hypotheses(cert, body.polytope);

  const std::size_t trials = a.counting_trials;
  std::optional<PolarDecomposer> decomposer;
  if (a.lp_trials > 0) decomposer.emplace(cert);
  std::vector<CountingTally> tallies(chunk_count(trials, a.common.threads));
  parallel_chunks(trials, a.common.threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    CountingTally& t = tallies[c];
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = make_stream(seed, i);
      PolarSample s = sample_polar_point(cert, rng);
      const ConvexCoefficients lambda = i < a.lp_trials ? (*decomposer)(s.w) : s.lambda;
      const CountingReport r = counting_check(cert, s.w, lambda);
      if (!r.ok || !r.lambda_floor_ok) ++t.violations;
      t.max_o_size = std::max(t.max_o_size, r.o_size);
      t.min_lambda_in_o = std::min(t.min_lambda_in_o, r.min_lambda_in_o);
    }
  });
  CountingTally total;
  for (const CountingTally& t : tallies) {
    total.violations += t.violations;
    total.max_o_size = std::max(total.max_o_size, t.max_o_size);
    total.min_lambda_in_o = std::min(total.min_lambda_in_o, t.min_lambda_in_o);
  }

  const bool pass = hyp.pass && total.violations == 0;
  Json report;
  report["pass"] = pass;
  report["failed_family"] = !hyp.pass ? hyp.failed_family() : (pass ? "" : "counting");
  report["threshold"] = hyp.threshold;
  Json fam;
  fam["diagonal"] = real(hyp.diagonal.worst);
  fam["cross"] = real(hyp.cross.worst);
  fam["polar"] = real(hyp.polar.worst);
  fam["membership"] = real(hyp.membership.worst);
  fam["boundary"] = real(hyp.boundary.worst);
  report["families"] = std::move(fam);
  report["facet_lower_bound"] = hyp.pass ? Json(facet_lower_bound(cert, hyp)) : Json(nullptr);
  report["counting_trials"] = trials;
  report["counting_lp_trials"] = std::min(trials, a.lp_trials);
  report["counting_violations"] = total.violations;
  report["max_o_size"] = total.max_o_size;
  report["min_lambda_in_o"] = total.min_lambda_in_o;
  emit(report, a.common, out);
  return pass ? kPass : kInvariantFailure;
}

// tail ---------------------------------------------------------------------

struct TailArgs {
  Common common;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::vector<std::int64_t> n_list;
  std::vector<std::int64_t> k_list;
  std::string csv_path;
};

Json tail_json(const TailReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["exact_tail_log"] = real(r.exact_tail_log);
  j["bound_log"] = real(r.bound_log);
  j["satisfied"] = r.satisfied;
  j["in_regime"] = tail_regime(r.n, r.k);
  return j;
}

int cmd_tail(const TailArgs& a, std::ostream& out) {
  const bool sweep = !a.n_list.empty() || !a.k_list.empty();
  if (!sweep) {
    if (!a.n || !a.k) throw UsageError("tail needs --n and --k, or --n-list and --k-list");
    const TailReport r = tail_bound_check(*a.n, *a.k);
    emit(tail_json(r), a.common, out);
    return r.satisfied ? kPass : kInvariantFailure;
  }
  if (a.n_list.empty() || a.k_list.empty()) throw UsageError("a sweep needs both --n-list and --k-list");

  std::ostringstream csv;
  csv << "n,k,t,exact_tail_log,bound_log,satisfied\n";
  bool ok = true;
  for (std::int64_t n : a.n_list) {
    for (std::int64_t k : a.k_list) {
      const TailReport r = tail_comparison(n, k);
      if (tail_regime(n, k) && !r.satisfied) ok = false;
      csv << r.n << ',' << r.k << ',' << r.t << ',' << num(r.exact_tail_log) << ','
          << num(r.bound_log) << ',' << (r.satisfied ? "true" : "false") << '\n';
    }
  }
  if (a.csv_path.empty()) {
    out << csv.str();
  } else {
    io::write_file(a.csv_path, csv.str());
  }
  return ok ? kPass : kInvariantFailure;
}

// approx -------------------------------------------------------------------

struct ApproxArgs {
  Common common;
  Eigen::Index n = 0;
  double R = 0.0;
  double delta = 0.0;
  std::vector<double> R_list;
  std::vector<double> delta_list;
  std::size_t bodies = 1;
  std::size_t rows = 12;
  std::string strategy;
  std::string csv_path;
};

struct ApproxRun {
  std::size_t net_size = 0;
  bool certified = false;
  double mesh = 0.0;
  double empirical_gap = 0.0;
  Eigen::Index body_facets = 0;
  SandwichReport sandwich;
};

ApproxRun approx_once(Eigen::Index n, double R, double delta, NetStrategy strategy,
                      std::size_t rows, std::uint64_t seed, std::uint64_t stream, unsigned threads) {
  if (!(R > 1.0)) throw UsageError("--R must exceed 1");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
  Rng body_rng = make_stream(seed, 2 * stream);
  Rng net_rng = make_stream(seed, 2 * stream + 1);
  const HPolytope K = random_body(n, R, rows, body_rng);
  const SphericalNet net = build_net(n, delta / (2.0 * R), strategy, &net_rng);
  const HPolytope P = approx_polytope(polytope_support_oracle(K, R), net);

  SandwichOptions opts;
  opts.threads = threads;
  ApproxRun run;
  run.net_size = static_cast<std::size_t>(net.points.rows());
  run.certified = net.certified;
  run.mesh = net.mesh;
  run.empirical_gap = net.empirical_gap;
  run.body_facets = K.num_facets();
  run.sandwich = sandwich_check(K, P, delta, opts);
  return run;
}

int cmd_approx(const ApproxArgs& a, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(a.common);
  NetStrategy strategy = a.n <= 3 ? NetStrategy::kGrid : NetStrategy::kRandom;
  if (a.strategy == "grid") {
    strategy = NetStrategy::kGrid;
  } else if (a.strategy == "random") {
    strategy = NetStrategy::kRandom;
  } else if (!a.strategy.empty()) {
    throw UsageError("--strategy must be grid or random");
  }

  const bool sweep = !a.R_list.empty() || !a.delta_list.empty();
  if (!sweep) {
    const ApproxRun run = approx_once(a.n, a.R, a.delta, strategy, a.rows, seed, 0, a.common.threads);
    Json report;
    report["n"] = a.n;
    report["R"] = a.R;
    report["delta"] = a.delta;
    report["net_size"] = run.net_size;
    report["outer_ok"] = run.sandwich.outer_ok;
    report["inner_ok"] = run.sandwich.inner_ok;
    report["bound_exponent_c"] = bound_exponent(run.net_size, a.n, a.R, a.delta);
    report["strategy"] = strategy_name(strategy);
    report["mesh"] = run.mesh;
    report["certified"] = run.certified;
    report["empirical_gap"] = real(run.empirical_gap);
    report["body_facets"] = run.body_facets;
    report["outer_margin"] = real(run.sandwich.outer_margin);
    report["inner_margin"] = real(run.sandwich.inner_margin);
    emit(report, a.common, out);
    return run.sandwich.outer_ok && run.sandwich.inner_ok ? kPass : kInvariantFailure;
  }

  const std::vector<double> Rs = a.R_list.empty() ? std::vector<double>{a.R} : a.R_list;
  const std::vector<double> deltas = a.delta_list.empty() ? std::vector<double>{a.delta} : a.delta_list;
  std::ostringstream csv;
  csv << "n,R,delta,body,net_size,outer_ok,inner_ok,outer_margin,inner_margin,bound_exponent_c\n";
  bool ok = true;
  std::uint64_t stream = 0;
  for (double R : Rs) {
    for (double delta : deltas) {
      for (std::size_t b = 0; b < a.bodies; ++b) {
        const ApproxRun run = approx_once(a.n, R, delta, strategy, a.rows, seed, stream++, a.common.threads);
        ok = ok && run.sandwich.outer_ok && run.sandwich.inner_ok;
        csv << a.n << ',' << num(R) << ',' << num(delta) << ',' << b << ',' << run.net_size << ','
            << (run.sandwich.outer_ok ? "true" : "false") << ','
            << (run.sandwich.inner_ok ? "true" : "false") << ',' << num(run.sandwich.outer_margin)
            << ',' << num(run.sandwich.inner_margin) << ','
            << num(bound_exponent(run.net_size, a.n, R, delta)) << '\n';
      }
    }
  }
  if (a.csv_path.empty()) {
    out << csv.str();
  } else {
    io::write_file(a.csv_path, csv.str());
  }
  return ok ? kPass : kInvariantFailure;
}

// audit --------------------------------------------------------------------

struct AuditArgs {
  Common common;
  std::string body_path;
  std::string candidate = "self";
};

HPolytope load_candidate(const std::string& spec, const io::BodyFile& body) {
  if (spec == "self") return body.polytope;
  if (spec == "simplex") return simplex_hrep(*body.frame);
  if (spec.rfind("drop:", 0) == 0) {
    const std::string idx = spec.substr(5);
    Eigen::Index row = -1;
    const auto res = std::from_chars(idx.data(), idx.data() + idx.size(), row);
    if (res.ec != std::errc() || res.ptr != idx.data() + idx.size() || row < 0 ||
        row >= body.polytope.num_facets()) {
      throw UsageError("drop:<row> needs a row index in [0, " +
                       std::to_string(body.polytope.num_facets()) + ")");
    }
    return body.polytope.without_facet(row);
  }
  return io::polytope_from_json(io::read_json_file(spec));
}

int cmd_audit(const AuditArgs& a, std::ostream& out) {
  const io::BodyFile body = io::body_from_json(io::read_json_file(a.body_path));
  const Certificate cert = io::certificate_from_body(body);
  const HPolytope P = load_candidate(a.candidate, body);

  AuditOptions opts;
  opts.threads = a.common.threads;
  const AuditReport r = adversarial_facet_audit(cert, body.polytope, P, opts);

  Json report;
  report["candidate"] = a.candidate;
  report["facets_p"] = r.facets_p;
  report["bound"] = r.bound;
  report["inner_ok"] = r.inner_ok;
  report["outer_ok"] = r.outer_ok;
  report["sandwich_ok"] = r.sandwich_ok;
  report["inner_margin"] = real(r.inner_margin);
  report["outer_margin"] = real(r.outer_margin);
  report["outer_note"] = r.outer_note;
  report["consistent"] = r.consistent;
  emit(report, a.common, out);
  return r.consistent ? kPass : kInvariantFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hard convex bodies for polytope approximation, with verifiable certificates"};
  app.name("jgap");
  app.require_subcommand(1);

  SimplexArgs simplex;
  auto* s = app.add_subcommand("simplex", "Build the regular simplex in John's position and check it");
  s->add_option("--n", simplex.n, "Dimension")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{20000}));
  s->add_option("--frame", simplex.frame_path, "Write the contact frame as JSON");
  add_common(s, simplex.common, false);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a hard body and write it as JSON");
  c->add_option("--n", construct.n, "Dimension")->required()->check(CLI::Range(std::int64_t{3}, std::int64_t{20000}));
  c->add_option("--k", construct.k, "Subset size");
  c->add_option("--m", construct.m, "Number of facets");
  c->add_option("--R", construct.R, "Target ratio; derives k (and m unless given)");
  c->add_option("--m-max", construct.m_max, "Cap on the derived facet count");
  c->add_option("--max-attempts", construct.max_attempts, "Consecutive rejections before giving up");
  c->add_option("--out", construct.out_path, "Output body file");
  c->add_flag("--inline-simplex", construct.inline_simplex, "Store the simplex rows in the body file");
  add_common(c, construct.common, true);

  CertifyArgs certify;
  auto* v = app.add_subcommand("certify", "Verify the certificate stored in a body file");
  v->add_option("body", certify.body_path, "Body file")->required();
  v->add_option("--counting-trials", certify.counting_trials, "Random polar points for the counting check");
  v->add_option("--lp-trials", certify.lp_trials, "How many of those are re-decomposed by LP");
  add_common(v, certify.common, true);

  TailArgs tail;
  auto* t = app.add_subcommand("tail", "Compare the exact overlap tail with its bound");
  t->add_option("--n", tail.n, "Ground set size");
  t->add_option("--k", tail.k, "Subset size");
  t->add_option("--n-list", tail.n_list, "Sweep values of n")->delimiter(',');
  t->add_option("--k-list", tail.k_list, "Sweep values of k")->delimiter(',');
  t->add_option("--csv", tail.csv_path, "Write the sweep to this file instead of stdout");
  add_common(t, tail.common, false);

  ApproxArgs approx;
  auto* x = app.add_subcommand("approx", "Approximate a random body by a net polytope and check the sandwich");
  x->add_option("--n", approx.n, "Dimension")->required()->check(CLI::Range(Eigen::Index{2}, Eigen::Index{64}));
  x->add_option("--R", approx.R, "Outer radius of the random body");
  x->add_option("--delta", approx.delta, "Approximation parameter in (0, 1)");
  x->add_option("--R-list", approx.R_list, "Sweep values of R")->delimiter(',');
  x->add_option("--delta-list", approx.delta_list, "Sweep values of delta")->delimiter(',');
  x->add_option("--bodies", approx.bodies, "Random bodies per sweep cell");
  x->add_option("--rows", approx.rows, "Random facets per body");
  x->add_option("--strategy", approx.strategy, "grid or random (grid when n <= 3)");
  x->add_option("--csv", approx.csv_path, "Write the sweep to this file instead of stdout");
  add_common(x, approx.common, true);

  AuditArgs audit;
  auto* d = app.add_subcommand("audit", "Audit a candidate polytope against the facet bound");
  d->add_option("body", audit.body_path, "Body file")->required();
  d->add_option("--candidate", audit.candidate, "self, simplex, drop:<row>, or a polytope JSON file");
  add_common(d, audit.common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (s->parsed()) return cmd_simplex(simplex, out);
    if (c->parsed()) return cmd_construct(construct, out, err);
    if (v->parsed()) return cmd_certify(certify, out);
    if (t->parsed()) return cmd_tail(tail, out);
    if (x->parsed()) {
      if (approx.R_list.empty() && approx.R == 0.0) throw UsageError("approx needs --R or --R-list");
      if (approx.delta_list.empty() && approx.delta == 0.0) {
        throw UsageError("approx needs --delta or --delta-list");
      }
      return cmd_approx(approx, out);
    }
    if (d->parsed()) return cmd_audit(audit, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace jgap::cli
