// Batch front-end: verification sweeps, bookkeeping-lemma checks, proof
// replays, and degeneration demos, with seeded reproducible jsonl/tsv output.
//
// Exit codes: 0 = every reported check passed, 1 = some check failed and
// stayed failed through its retries, 2 = the run could not be configured
// (bad flags, composite prime, out-of-range parameters, unreadable scheme
// file).  Identical configuration + seed gives a byte-identical stream when
// --stable normalizes the timing field.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sundial/castelnuovo.hpp"
#include "sundial/counting.hpp"
#include "sundial/errors.hpp"
#include "sundial/replay.hpp"
#include "sundial/scheme.hpp"
#include "sundial/sweep.hpp"

namespace {

using namespace sundial;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/* -------------------------------------------------------------- reporting */

// Serializes report lines to stdout.  jsonl prints one object per line in
// fixed key order; tsv prints a header (from the first line's keys) and then
// tab-separated values.  --stable zeroes elapsed_ms so identical runs are
// byte-identical.
class ReportWriter {
 public:
  ReportWriter(std::string format, bool stable)
      : format_(std::move(format)), stable_(stable) {}

  void emit(ordered_json line) {
    if (stable_ && line.contains("elapsed_ms")) line["elapsed_ms"] = 0;
    if (format_ == "tsv") {
      if (!header_done_) {
        bool first = true;
        for (auto& [key, value] : line.items()) {
          std::cout << (first ? "" : "\t") << key;
          first = false;
        }
        std::cout << '\n';
        header_done_ = true;
      }
      bool first = true;
      for (auto& [key, value] : line.items()) {
        std::cout << (first ? "" : "\t") << cell_text(value);
        first = false;
      }
      std::cout << '\n';
    } else {
      std::cout << line.dump() << '\n';
    }
  }

 private:
  static std::string cell_text(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::string format_;
  bool stable_;
  bool header_done_ = false;
};

// The shared report schema; commands append their own fields after it.
// Pass negative sentinels via std::optional to get JSON nulls.
ordered_json core_line(const char* cmd, std::optional<std::uint64_t> n,
                       std::optional<std::uint64_t> d, std::optional<std::uint64_t> s,
                       std::optional<std::uint64_t> l, std::uint32_t prime,
                       std::uint64_t seed, std::optional<unsigned> trial,
                       std::optional<std::uint64_t> computed,
                       std::optional<std::uint64_t> expected, std::optional<bool> match,
                       double elapsed_ms) {
  auto opt = [](const auto& v) -> ordered_json {
    if (v) return *v;
    return nullptr;
  };
  ordered_json line;
  line["cmd"] = cmd;
  line["n"] = opt(n);
  line["d"] = opt(d);
  line["s"] = opt(s);
  line["l"] = opt(l);
  line["prime"] = prime;
  line["seed"] = seed;
  line["trial"] = opt(trial);
  line["computed_dim"] = opt(computed);
  line["expected_dim"] = opt(expected);
  line["match"] = opt(match);
  line["elapsed_ms"] = elapsed_ms;
  return line;
}

/* ----------------------------------------------------------- config bits */

struct Range {
  unsigned lo = 0, hi = 0;
};

// "A" or "A..B" with A <= B.
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      unsigned v = static_cast<unsigned>(std::stoul(text));
      return {v, v};
    }
    unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (hi < lo) throw EmptyInput("range '" + text + "' is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw EmptyInput("cannot parse range '" + text + "'");
  }
}

// Builds the field, checking primality and the sample-spacing requirement.
PrimeField make_field(std::uint32_t prime, unsigned d_max) {
  PrimeField f{Prime(prime)};
  if (f.p() < d_max + 2) throw PrimeTooSmall("prime must be at least max degree + 2");
  return f;
}

unsigned env_threads() {
  const char* raw = std::getenv("HILBERT_SUNDIAL_THREADS");
  if (!raw) return 0;
  const long v = std::strtol(raw, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 0;
}

/* ------------------------------------------------------------ scheme file */

struct LoadedScheme {
  Scheme X;
  std::uint32_t prime = 0;
  std::optional<std::uint64_t> expected_dim;
  std::uint64_t sundials = 0, lines = 0;
  bool closed_form_applies = false;  // only sundial and line components
};

ProjectivePoint json_point(const ordered_json& arr, const PrimeField& f) {
  std::vector<FieldElement> coords;
  for (const auto& v : arr) {
    long long x = v.get<long long>();
    long long p = f.p();
    coords.push_back(static_cast<FieldElement>(((x % p) + p) % p));
  }
  return make_point(std::move(coords), f);
}

Line json_line(const ordered_json& arr, const PrimeField& f) {
  if (arr.size() != 2) throw ConstructionFailure("a line needs exactly two points");
  return line_through(json_point(arr[0], f), json_point(arr[1], f), f);
}

LinearSubspace json_span(const ordered_json& arr, unsigned n, const PrimeField& f) {
  std::vector<ProjectivePoint> pts;
  for (const auto& a : arr) pts.push_back(json_point(a, f));
  if (pts.empty()) throw EmptyInput("empty spanning set");
  if (pts[0].n() != n) throw DimensionMismatch("spanning point has wrong ambient");
  return span(pts, f);
}

// {"n": 3, "prime": 32003, "expected_dim": 0, "components": [
//    {"type": "point", "coords": [...]},
//    {"type": "double_point", "point": [...], "span": [[...], ...]},
//    {"type": "line", "points": [[...], [...]]},
//    {"type": "degenerate_conic", "L": [[...], [...]], "M": [[...], [...]]},
//    {"type": "sundial", "L": ..., "M": ..., "T": [[...] x 4]}]}
LoadedScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EmptyInput("cannot open scheme file '" + path + "'");
  ordered_json doc = ordered_json::parse(in);

  LoadedScheme out;
  out.prime = doc.at("prime").get<std::uint32_t>();
  PrimeField f{Prime(out.prime)};
  const unsigned n = doc.at("n").get<unsigned>();
  out.X.n = n;
  if (doc.contains("expected_dim"))
    out.expected_dim = doc["expected_dim"].get<std::uint64_t>();

  bool only_sundials_lines = true;
  for (const auto& c : doc.at("components")) {
    const std::string type = c.at("type").get<std::string>();
    if (type == "point") {
      out.X.components.push_back(SimplePoint{json_point(c.at("coords"), f)});
      only_sundials_lines = false;
    } else if (type == "double_point") {
      out.X.components.push_back(DoublePointRestricted{
          json_point(c.at("point"), f), json_span(c.at("span"), n, f)});
      only_sundials_lines = false;
    } else if (type == "line") {
      out.X.components.push_back(LineComponent{json_line(c.at("points"), f)});
      ++out.lines;
    } else if (type == "degenerate_conic") {
      out.X.components.push_back(
          make_degenerate_conic(json_line(c.at("L"), f), json_line(c.at("M"), f), f));
      only_sundials_lines = false;
    } else if (type == "sundial") {
      Line L = json_line(c.at("L"), f);
      Line M = json_line(c.at("M"), f);
      SundialData data{L, M, line_intersection(L, M, f), json_span(c.at("T"), n, f)};
      validate_sundial(data, f);
      out.X.components.push_back(SundialComponent{data});
      ++out.sundials;
    } else {
      throw UnrecognizedPosition("unknown component type '" + type + "'");
    }
  }
  out.closed_form_applies = only_sundials_lines;
  return out;
}

/* ------------------------------------------------------------ subcommands */

struct CommonOpts {
  std::uint32_t prime = 32003;
  std::uint64_t seed = 0;
  unsigned trials = 1;
  std::string format = "jsonl";
  bool stable = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_trials = true) {
  cmd->add_option("--prime,-p", o.prime, "field characteristic (prime)");
  cmd->add_option("--seed", o.seed, "base seed for all random draws");
  if (with_trials) cmd->add_option("--trials,-k", o.trials, "retry budget per check");
  cmd->add_option("--format", o.format, "jsonl or tsv")
      ->check(CLI::IsMember({"jsonl", "tsv"}));
  cmd->add_flag("--stable", o.stable, "zero the elapsed_ms field (byte-stable output)");
}

int run_verify(unsigned n, unsigned d, std::uint64_t s, std::uint64_t l,
               const std::string& scheme_path, const CommonOpts& o) {
  if (n < 3) throw InvalidDimension("verify requires ambient dimension >= 3");
  if (d < 1) throw InvalidDimension("verify requires degree >= 1");
  if (o.trials < 1) throw EmptyInput("at least one trial is required");
  ReportWriter w(o.format, o.stable);

  if (!scheme_path.empty()) {
    LoadedScheme loaded = load_scheme_file(scheme_path);
    PrimeField f = make_field(loaded.prime, d);
    std::optional<std::uint64_t> expected = loaded.expected_dim;
    if (!expected && loaded.closed_form_applies)
      expected = expected_ideal_dim(loaded.X.n, d, loaded.sundials, loaded.lines);
    if (!expected)
      throw EmptyInput(
          "scheme file mixes component kinds; give it an explicit expected_dim");
    const auto t0 = Clock::now();
    const std::uint64_t computed = ideal_dimension(loaded.X, d, f);
    const bool match = computed == *expected;
    w.emit(core_line("verify", loaded.X.n, d, loaded.sundials, loaded.lines, f.p(),
                     o.seed, 1, computed, expected, match, ms_since(t0)));
    return match ? 0 : 1;
  }

  PrimeField f = make_field(o.prime, d);
  const std::uint64_t expected = expected_ideal_dim(n, d, s, l);
  bool any_match = false;
  for (unsigned trial = 1; trial <= o.trials && !any_match; ++trial) {
    const auto t0 = Clock::now();
    Rng rng(derive_seed(o.seed, {n, d, s, l, trial}));
    Scheme X = random_configuration(n, static_cast<unsigned>(s),
                                    static_cast<unsigned>(l), f, rng);
    const std::uint64_t computed = ideal_dimension(X, d, f);
    any_match = computed == expected;
    w.emit(core_line("verify", n, d, s, l, f.p(), o.seed, trial, computed, expected,
                     any_match, ms_since(t0)));
  }
  return any_match ? 0 : 1;
}

int run_sweep(const std::string& n_range, const std::string& d_range,
              const CommonOpts& o) {
  const Range nr = parse_range(n_range);
  const Range dr = parse_range(d_range);
  PrimeField f = make_field(o.prime, dr.hi);
  SweepResult res = sweep_grid(nr.lo, nr.hi, dr.lo, dr.hi, f, o.seed, o.trials,
                               env_threads());
  ReportWriter w(o.format, o.stable);
  for (const SweepCell& c : res.cells)
    w.emit(core_line("sweep", c.n, c.d, c.s, c.l, f.p(), o.seed, c.trial,
                     c.computed_dim, c.expected_dim, c.match, c.elapsed_ms));
  return res.all_match() ? 0 : 1;
}

int run_appendix(const std::string& n_range, const std::string& d_range,
                 const CommonOpts& o) {
  const Range nr = parse_range(n_range);
  const Range dr = parse_range(d_range);
  if (nr.lo < 4) throw OutOfStatedRange("the bookkeeping lemmas assume n >= 4");
  if (dr.lo < 2) throw OutOfStatedRange("the bookkeeping lemmas assume d >= 2");
  ReportWriter w(o.format, o.stable);
  bool all_hold = true;
  for (unsigned n = nr.lo; n <= nr.hi; ++n) {
    for (unsigned d = dr.lo; d <= dr.hi; ++d) {
      const auto t0 = Clock::now();
      AppendixA1Report rep = verify_appendix_a1(n, d);
      std::optional<bool> a2;
      if (d > 5) a2 = verify_appendix_a2(n, d);
      const bool holds = rep.all_hold() && a2.value_or(true);
      all_hold = all_hold && holds;
      ordered_json line;
      line["cmd"] = "appendix";
      line["n"] = n;
      line["d"] = d;
      line["t"] = rep.counts.t;
      line["r"] = rep.counts.r;
      line["s"] = rep.counts.s;
      line["t_prime"] = rep.counts.t_p;
      line["r_prime"] = rep.counts.r_p;
      line["s_prime"] = rep.counts.s_p;
      line["special_parity"] = rep.special_parity;
      line["a_slack"] = rep.a_slack;
      line["b_slack"] = rep.b_slack;
      line["c_slack"] = rep.c_slack;
      line["a1_holds"] = rep.all_hold();
      line["a2_checked"] = a2.has_value();
      line["a2_holds"] = a2 ? ordered_json(*a2) : ordered_json(nullptr);
      line["holds"] = holds;
      line["elapsed_ms"] = ms_since(t0);
      w.emit(std::move(line));
    }
  }
  return all_hold ? 0 : 1;
}

int run_replay(const std::vector<unsigned>& p3, const std::vector<unsigned>& pn,
               const CommonOpts& o) {
  if (p3.empty() == pn.empty())
    throw EmptyInput("replay needs exactly one of --p3 H CASE or --pn N D");
  if (o.trials < 1) throw EmptyInput("at least one trial is required");
  ReportWriter w(o.format, o.stable);

  ReplayReport rep;
  unsigned trial = 0;
  double elapsed = 0;
  for (trial = 1; trial <= o.trials; ++trial) {
    const auto t0 = Clock::now();
    if (!p3.empty()) {
      PrimeField f = make_field(o.prime, 3 * p3[0] + 2);
      Rng rng(derive_seed(o.seed, {3, p3[0], p3[1], trial}));
      rep = replay_p3_case(p3[0], p3[1], f, rng);
    } else {
      PrimeField f = make_field(o.prime, pn[1]);
      Rng rng(derive_seed(o.seed, {pn[0], pn[1], trial}));
      rep = replay_pn_case(pn[0], pn[1], f, rng);
    }
    elapsed = ms_since(t0);
    if (rep.all_match()) break;
  }
  if (trial > o.trials) trial = o.trials;

  for (const ReplayClaim& claim : rep.claims) {
    ordered_json line =
        core_line("replay", rep.n, rep.d, std::nullopt, std::nullopt, o.prime, o.seed,
                  trial, claim.computed, claim.expected, claim.match, elapsed);
    line["h"] = p3.empty() ? ordered_json(nullptr) : ordered_json(p3[0]);
    line["case"] = rep.case_label;
    line["claim"] = claim.label;
    w.emit(std::move(line));
  }
  return rep.all_match() ? 0 : 1;
}

int run_castelnuovo(unsigned instances, const CommonOpts& o) {
  if (instances < 1) throw EmptyInput("need at least one instance");
  PrimeField f = make_field(o.prime, 6);
  ReportWriter w(o.format, o.stable);
  bool all_hold = true;
  for (unsigned i = 1; i <= instances; ++i) {
    const auto t0 = Clock::now();
    Rng rng(derive_seed(o.seed, {i}));
    const unsigned n = 3 + rng.below(3);
    const unsigned d = 1 + rng.below(6);
    const std::uint64_t t = compute_trs(n, d).t;
    const std::uint64_t s = rng.below(static_cast<std::uint32_t>((t + 1) / 2 + 1));
    const std::uint64_t l = rng.below(static_cast<std::uint32_t>(t + 2 - 2 * s));
    Scheme X = random_configuration(n, static_cast<unsigned>(s),
                                    static_cast<unsigned>(l), f, rng);
    std::vector<FieldElement> coeffs(n + 1);
    do {
      for (auto& c : coeffs) c = rng.below(f.p());
    } while (std::all_of(coeffs.begin(), coeffs.end(),
                         [](FieldElement c) { return c == 0; }));
    CastelnuovoReport rep = check_inequality(X, Hyperplane{coeffs}, d, f);
    all_hold = all_hold && rep.inequality_holds;
    ordered_json line = core_line("castelnuovo", n, d, s, l, f.p(), o.seed, i,
                                  rep.dim_X_d, std::nullopt, std::nullopt,
                                  ms_since(t0));
    line["dim_res"] = rep.dim_res;
    line["dim_trace"] = rep.dim_trace;
    line["holds"] = rep.inequality_holds;
    w.emit(std::move(line));
  }
  return all_hold ? 0 : 1;
}

int run_family(unsigned n, unsigned d, const CommonOpts& o) {
  if (n < 3) throw InvalidDimension("the family lives in ambient dimension >= 3");
  if (d < 1) throw InvalidDimension("family requires degree >= 1");
  PrimeField f = make_field(o.prime, d);
  Rng rng(derive_seed(o.seed, {n, d}));
  ReportWriter w(o.format, o.stable);

  Line L1 = make_generic_line(n, f, rng);
  Line M = make_generic_line(n, f, rng);
  for (unsigned tries = 0; tries < 16; ++tries) {
    try {
      degeneration_fiber(L1, M, 1, f);
      break;
    } catch (const NotSkew&) {
      M = make_generic_line(n, f, rng);
    }
  }

  const std::uint64_t expected = expected_ideal_dim(n, d, 0, 2);
  bool all_match = true;
  for (FieldElement lambda : {FieldElement{1}, FieldElement{0}}) {
    const auto t0 = Clock::now();
    Scheme fiber = degeneration_fiber(L1, M, lambda, f);
    const std::uint64_t computed = ideal_dimension(fiber, d, f);
    const bool match = computed == expected;
    all_match = all_match && match;
    const std::uint64_t s = lambda == 0 ? 1 : 0;
    const std::uint64_t l = lambda == 0 ? 0 : 2;
    ordered_json line = core_line("family", n, d, s, l, f.p(), o.seed, 1, computed,
                                  expected, match, ms_since(t0));
    line["lambda"] = lambda;
    w.emit(std::move(line));
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Hilbert-function verification for unions of lines and sundials over "
      "a prime field"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check one (n, d, s, l) configuration against the closed form");
  unsigned v_n = 3, v_d = 1;
  std::uint64_t v_s = 0, v_l = 0;
  std::string v_scheme;
  CommonOpts v_opts;
  verify->add_option("--n,-n", v_n, "ambient projective dimension (>= 3)");
  verify->add_option("--d,-d", v_d, "degree of the forms (>= 1)");
  verify->add_option("--sundials,-s", v_s, "number of generic sundials");
  verify->add_option("--lines,-l", v_l, "number of generic lines");
  verify->add_option("--scheme", v_scheme,
                     "JSON scheme description to verify instead of random draws");
  add_common(verify, v_opts);

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "verify every (s, l) cell over a grid of (n, d) blocks");
  std::string sw_n = "3..5", sw_d = "1..6";
  CommonOpts sw_opts;
  sw_opts.trials = 5;
  sweep->add_option("--n,-n", sw_n, "ambient range, e.g. 3..5");
  sweep->add_option("--d,-d", sw_d, "degree range, e.g. 1..6");
  add_common(sweep, sw_opts);

  // appendix
  auto* appendix = app.add_subcommand(
      "appendix", "exhaustively check the integer bookkeeping lemmas");
  std::string ap_n = "4..12", ap_d = "2..50";
  CommonOpts ap_opts;
  appendix->add_option("--n,-n", ap_n, "ambient range (n >= 4)");
  appendix->add_option("--d,-d", ap_d, "degree range (d >= 2)");
  add_common(appendix, ap_opts, /*with_trials=*/false);

  // replay
  auto* replay = app.add_subcommand(
      "replay", "re-run one induction step of the dimension argument");
  std::vector<unsigned> rp_p3, rp_pn;
  CommonOpts rp_opts;
  replay->add_option("--p3", rp_p3, "degree-class step in P^3: H CASE")
      ->expected(2);
  replay->add_option("--pn", rp_pn, "hyperplane step in P^n: N D")->expected(2);
  add_common(replay, rp_opts);

  // castelnuovo
  auto* cast = app.add_subcommand(
      "castelnuovo", "spot-check the residual/trace inequality on random schemes");
  unsigned ct_random = 100;
  CommonOpts ct_opts;
  cast->add_option("--random", ct_random, "number of random instances");
  add_common(cast, ct_opts, /*with_trials=*/false);

  // family
  auto* family = app.add_subcommand(
      "family", "compare a two-skew-lines fiber with its sundial limit");
  unsigned fm_n = 3, fm_d = 1;
  CommonOpts fm_opts;
  family->add_option("--n,-n", fm_n, "ambient projective dimension (>= 3)");
  family->add_option("--d,-d", fm_d, "degree of the forms (>= 1)");
  add_common(family, fm_opts, /*with_trials=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

#ifdef _OPENMP
  if (const unsigned t = env_threads()) omp_set_num_threads(static_cast<int>(t));
#endif

  try {
    if (verify->parsed()) return run_verify(v_n, v_d, v_s, v_l, v_scheme, v_opts);
    if (sweep->parsed()) return run_sweep(sw_n, sw_d, sw_opts);
    if (appendix->parsed()) return run_appendix(ap_n, ap_d, ap_opts);
    if (replay->parsed()) return run_replay(rp_p3, rp_pn, rp_opts);
    if (cast->parsed()) return run_castelnuovo(ct_random, ct_opts);
    if (family->parsed()) return run_family(fm_n, fm_d, fm_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed scheme file: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
