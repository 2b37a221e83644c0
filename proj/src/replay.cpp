#include "sundial/replay.hpp"

#include <algorithm>
#include <utility>

namespace sundial {

namespace {

constexpr int kDrawTries = 64;

/* --------------------------------------------------------- random drawing */

ProjectivePoint random_p1(const PrimeField& f, Rng& rng) {
  for (;;) {
    FieldElement c0 = static_cast<FieldElement>(rng.below(f.p()));
    FieldElement c1 = static_cast<FieldElement>(rng.below(f.p()));
    if (c0 != 0 || c1 != 0) return make_point({c0, c1}, f);
  }
}

ProjectivePoint random_point(unsigned n, const PrimeField& f, Rng& rng) {
  for (;;) {
    std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1);
    bool nonzero = false;
    for (FieldElement& x : c) {
      x = static_cast<FieldElement>(rng.below(f.p()));
      nonzero |= x != 0;
    }
    if (nonzero) return make_point(std::move(c), f);
  }
}

// Distinct ruling parameters: every A-line a replay places on the quadric
// must be a different line.
class ParamPool {
 public:
  ProjectivePoint fresh(const PrimeField& f, Rng& rng) {
    for (int t = 0; t < kDrawTries; ++t) {
      ProjectivePoint p = random_p1(f, rng);
      if (std::find(used_.begin(), used_.end(), p) == used_.end()) {
        used_.push_back(p);
        return p;
      }
    }
    throw ConstructionFailure("could not draw a fresh ruling parameter");
  }

 private:
  std::vector<ProjectivePoint> used_;
};

bool transverse(const Line& l, const PrimeField& f) {
  try {
    return !meet_quadric(l, f).contained;
  } catch (const UnrecognizedPosition&) {
    return false;  // tangent or irrational: reject and redraw
  }
}

/* -------------------------------------------------- P^3 scheme ingredients */

// A sundial whose first line is the A-ruling line with a fresh parameter and
// whose second line crosses the quadric at the embedded point.
SundialData ruling_sundial(const PrimeField& f, Rng& rng, ParamPool& pool) {
  for (int t = 0; t < kDrawTries; ++t) {
    Line L = ruling_line(Ruling::A, pool.fresh(f, rng), f);
    ProjectivePoint R = sample_point(line_span(L, f), f, rng);
    ProjectivePoint X = random_point(3, f, rng);
    if (line_contains(L, X, f)) continue;
    Line M = line_through(R, X, f);
    if (!transverse(M, f)) continue;
    return SundialData{L, M, R, whole_space(3, f)};
  }
  throw ConstructionFailure("ruling sundial draws kept degenerating");
}

// A sundial whose embedded point lies on the quadric (fresh A-parameter, so
// the later passage to the A-line through it stays disjoint from the rest)
// while both lines cross the quadric transversally.
SundialData crossing_sundial(const PrimeField& f, Rng& rng, ParamPool& pool) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint R = segre_point(pool.fresh(f, rng), random_p1(f, rng), f);
    ProjectivePoint X1 = random_point(3, f, rng);
    ProjectivePoint X2 = random_point(3, f, rng);
    if (X1 == R || X2 == R || X1 == X2) continue;
    Line L = line_through(R, X1, f);
    if (line_contains(L, X2, f)) continue;
    Line M = line_through(R, X2, f);
    if (!transverse(L, f) || !transverse(M, f)) continue;
    return SundialData{L, M, R, whole_space(3, f)};
  }
  throw ConstructionFailure("crossing sundial draws kept degenerating");
}

// A generic sundial whose lines are drawn through explicit quadric points,
// so both quadric intersections are rational by construction.
SundialData rational_sundial(const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint R = random_point(3, f, rng);
    if (on_quadric(R, f)) continue;
    ProjectivePoint S1 = segre_point(random_p1(f, rng), random_p1(f, rng), f);
    ProjectivePoint S2 = segre_point(random_p1(f, rng), random_p1(f, rng), f);
    if (S1 == S2) continue;
    Line L = line_through(R, S1, f);
    if (line_contains(L, S2, f)) continue;
    Line M = line_through(R, S2, f);
    if (!transverse(L, f) || !transverse(M, f)) continue;
    return SundialData{L, M, R, whole_space(3, f)};
  }
  throw ConstructionFailure("generic sundial draws kept degenerating");
}

// A line through two distinct quadric points, itself transverse.
Line chord_line(const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint S1 = segre_point(random_p1(f, rng), random_p1(f, rng), f);
    ProjectivePoint S2 = segre_point(random_p1(f, rng), random_p1(f, rng), f);
    if (S1 == S2) continue;
    Line l = line_through(S1, S2, f);
    if (transverse(l, f)) return l;
  }
  throw ConstructionFailure("chord draws kept degenerating");
}

std::vector<ProjectivePoint> distinct_quadric_points(unsigned count, const PrimeField& f,
                                                     Rng& rng) {
  std::vector<ProjectivePoint> out;
  while (out.size() < count) {
    ProjectivePoint p = segre_point(random_p1(f, rng), random_p1(f, rng), f);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

/* ---------------------------------------------------------- claim plumbing */

void add_claim(ReplayReport& rep, std::string label, std::uint64_t computed) {
  rep.claims.push_back({std::move(label), 0, computed, computed == 0});
}

void quadric_claims(ReplayReport& rep, const Scheme& spec, unsigned d, const std::string& tag,
                    const PrimeField& f) {
  add_claim(rep, "residual" + tag, ideal_dimension(quadric_residual(spec, f), d - 2, f));
  add_claim(rep, "trace" + tag, bidegree_dimension(quadric_trace(spec, d, d, f), f));
  add_claim(rep, "specialized" + tag, ideal_dimension(spec, d, f));
}

/* ----------------------------------------------------------- P^3 replays */

ReplayReport replay_p3_full(unsigned h, unsigned case_id, unsigned d, const PrimeField& f,
                            Rng& rng) {
  ReplayReport rep{3, d, std::to_string(case_id), {}};
  Trs c = compute_trs(3, d);
  unsigned s = static_cast<unsigned>(c.s), r = static_cast<unsigned>(c.r);
  bool t_odd = c.t % 2 != 0;

  if (case_id == 1 || case_id == 2) {
    unsigned on_ruling = case_id == 1 ? 2 * h + 1 : 2 * h + 2;
    ParamPool pool;
    Scheme spec{3, {}};
    if (case_id == 2)
      for (const ProjectivePoint& p : distinct_quadric_points(r, f, rng))
        spec.components.push_back(SimplePoint{p});
    for (unsigned i = 0; i < on_ruling; ++i)
      spec.components.push_back(SundialComponent{ruling_sundial(f, rng, pool)});
    for (unsigned i = on_ruling; i < s; ++i)
      spec.components.push_back(SundialComponent{rational_sundial(f, rng)});
    if (t_odd) spec.components.push_back(LineComponent{chord_line(f, rng)});
    quadric_claims(rep, spec, d, "", f);

    if (case_id == 2) {  // the companion scheme T, one more condition block
      unsigned on_ruling_t = 2 * h + 3;
      unsigned total_t = t_odd ? s + 1 : s;
      ParamPool pool_t;
      Scheme spec_t{3, {}};
      for (unsigned i = 0; i < on_ruling_t; ++i)
        spec_t.components.push_back(SundialComponent{ruling_sundial(f, rng, pool_t)});
      for (unsigned i = on_ruling_t; i < total_t; ++i)
        spec_t.components.push_back(SundialComponent{rational_sundial(f, rng)});
      if (!t_odd) spec_t.components.push_back(LineComponent{chord_line(f, rng)});
      quadric_claims(rep, spec_t, d, "_T", f);
    }
  } else {  // case 3, h >= 3: the double specialization
    unsigned on_ruling = 2 * h + 1, crossing = 2 * h;
    ParamPool pool;
    Scheme spec{3, {}};
    std::vector<SundialData> ruled, crossed;
    for (unsigned i = 0; i < on_ruling; ++i) ruled.push_back(ruling_sundial(f, rng, pool));
    for (unsigned i = 0; i < crossing; ++i) crossed.push_back(crossing_sundial(f, rng, pool));
    std::vector<SchemeComponent> rest;
    for (unsigned i = on_ruling + crossing; i < s; ++i)
      rest.push_back(SundialComponent{rational_sundial(f, rng)});
    if (t_odd) rest.push_back(LineComponent{chord_line(f, rng)});
    for (const SundialData& sd : ruled) spec.components.push_back(SundialComponent{sd});
    for (const SundialData& sd : crossed) spec.components.push_back(SundialComponent{sd});
    for (const SchemeComponent& comp : rest) spec.components.push_back(comp);

    // The residual's own specialization: the first crossing line of each
    // ruled sundial is already consumed; its partner M_1 moves to a free
    // A-line, and each crossing sundial's first line moves to the A-line
    // through its embedded quadric point.
    Scheme respec{3, {}};
    respec.components.push_back(LineComponent{ruling_line(Ruling::A, pool.fresh(f, rng), f)});
    for (std::size_t i = 1; i < ruled.size(); ++i)
      respec.components.push_back(LineComponent{ruled[i].M});
    for (const SundialData& sd : crossed) {
      Line A = ruling_line(Ruling::A, quadric_param_u(sd.P, f), f);
      respec.components.push_back(DegenerateConic{A, sd.M, sd.P});
    }
    for (const SchemeComponent& comp : rest) respec.components.push_back(comp);

    add_claim(rep, "residual_residual",
              ideal_dimension(quadric_residual(respec, f), d - 4, f));
    add_claim(rep, "residual_trace",
              bidegree_dimension(quadric_trace(respec, d - 2, d - 2, f), f));
    add_claim(rep, "specialized_residual", ideal_dimension(respec, d - 2, f));
    quadric_claims(rep, spec, d, "", f);
  }

  CriticalSchemes generic = build_W_T(3, d, f, rng);
  add_claim(rep, "generic", ideal_dimension(generic.W, d, f));
  if (case_id == 2) add_claim(rep, "generic_T", ideal_dimension(*generic.T, d, f));
  return rep;
}

/* --------------------------------------------- P^n hyperplane ingredients */

// Everything below specializes into H = {x_n = 0}.

FieldElement last_coord(const ProjectivePoint& p) { return p.coords.back(); }

ProjectivePoint random_h_point(unsigned n, const PrimeField& f, Rng& rng) {
  ProjectivePoint p = random_point(n - 1, f, rng);
  p.coords.push_back(0);
  return p;
}

ProjectivePoint random_off_point(unsigned n, const PrimeField& f, Rng& rng) {
  for (;;) {
    ProjectivePoint p = random_point(n, f, rng);
    if (last_coord(p) != 0) return p;
  }
}

// Common part: the two meeting lines through P toward X1, X2, with T spanned
// by the plane plus X3.
SundialData assemble(const ProjectivePoint& P, const ProjectivePoint& X1,
                     const ProjectivePoint& X2, const ProjectivePoint& X3,
                     const PrimeField& f) {
  Line L = line_through(P, X1, f);
  Line M = line_through(P, X2, f);
  LinearSubspace T = span({P, X1, X2, X3}, f);
  if (T.pdim() != 3) throw ConstructionFailure("sundial span is degenerate");
  return SundialData{L, M, P, T};
}

SundialData sundial_both_lines_in(unsigned n, const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint P = random_h_point(n, f, rng);
    ProjectivePoint X1 = random_h_point(n, f, rng);
    ProjectivePoint X2 = random_h_point(n, f, rng);
    if (X1 == P || X2 == P) continue;
    if (line_contains(line_through(P, X1, f), X2, f)) continue;
    ProjectivePoint X3 = random_off_point(n, f, rng);
    try {
      return assemble(P, X1, X2, X3, f);
    } catch (const ConstructionFailure&) {
      continue;
    }
  }
  throw ConstructionFailure("both-lines-in sundial draws kept degenerating");
}

SundialData sundial_fully_in(unsigned n, const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint P = random_h_point(n, f, rng);
    ProjectivePoint X1 = random_h_point(n, f, rng);
    ProjectivePoint X2 = random_h_point(n, f, rng);
    ProjectivePoint X3 = random_h_point(n, f, rng);
    if (X1 == P || X2 == P) continue;
    if (line_contains(line_through(P, X1, f), X2, f)) continue;
    try {
      return assemble(P, X1, X2, X3, f);
    } catch (const ConstructionFailure&) {
      continue;
    }
  }
  throw ConstructionFailure("fully-in sundial draws kept degenerating");
}

SundialData sundial_one_line_in(unsigned n, const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint P = random_h_point(n, f, rng);
    ProjectivePoint X1 = random_h_point(n, f, rng);
    if (X1 == P) continue;
    ProjectivePoint X2 = random_off_point(n, f, rng);
    ProjectivePoint X3 = random_point(n, f, rng);
    try {
      return assemble(P, X1, X2, X3, f);
    } catch (const ConstructionFailure&) {
      continue;
    }
  }
  throw ConstructionFailure("one-line-in sundial draws kept degenerating");
}

Line line_in_h(unsigned n, const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kDrawTries; ++t) {
    ProjectivePoint a = random_h_point(n, f, rng);
    ProjectivePoint b = random_h_point(n, f, rng);
    if (a == b) continue;
    return line_through(a, b, f);
  }
  throw ConstructionFailure("in-hyperplane line draws kept degenerating");
}

std::vector<ProjectivePoint> distinct_h_points(unsigned count, unsigned n, const PrimeField& f,
                                               Rng& rng) {
  std::vector<ProjectivePoint> out;
  while (out.size() < count) {
    ProjectivePoint p = random_h_point(n, f, rng);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// The final step of the t-even/t'-odd case: d of the trace's plain points
// move onto a line through the traced embedded point.
void realign_trace_points(Scheme& trace, unsigned d, const PrimeField& f, Rng& rng) {
  const ProjectivePoint* R = nullptr;
  for (const SchemeComponent& comp : trace.components)
    if (const auto* dp = std::get_if<DoublePointRestricted>(&comp)) R = &dp->P;
  if (R == nullptr)
    throw ConstructionFailure("trace has no embedded point to realign around");
  Line bar = [&] {
    for (int t = 0; t < kDrawTries; ++t) {
      ProjectivePoint X = random_point(trace.n, f, rng);
      if (X == *R) continue;
      return line_through(*R, X, f);
    }
    throw ConstructionFailure("auxiliary line draws kept degenerating");
  }();
  LinearSubspace bar_span = line_span(bar, f);
  std::vector<ProjectivePoint> placed{*R};
  unsigned moved = 0;
  for (SchemeComponent& comp : trace.components) {
    if (moved == d) break;
    if (auto* sp = std::get_if<SimplePoint>(&comp)) {
      for (;;) {
        ProjectivePoint q = sample_point(bar_span, f, rng);
        if (std::find(placed.begin(), placed.end(), q) == placed.end()) {
          placed.push_back(q);
          sp->P = q;
          break;
        }
      }
      ++moved;
    }
  }
  if (moved != d)
    throw ConstructionFailure("trace does not have enough plain points to realign");
}

}  // namespace

/* ------------------------------------------------------------- public API */

bool ReplayReport::all_match() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ReplayClaim& c) { return c.match; });
}

ReplayReport replay_p3_case(unsigned h, unsigned case_id, const PrimeField& f, Rng& rng) {
  if (case_id < 1 || case_id > 3) throw OutOfStatedRange("P^3 case id must be 1, 2, or 3");
  if (h < 1) throw OutOfStatedRange("P^3 replays need h >= 1");
  if (case_id == 3 && h < 2) throw OutOfStatedRange("the d = 3h+1 class starts at h = 2");
  unsigned d = 3 * h + (case_id == 1 ? 0u : case_id == 2 ? 2u : 1u);
  if (f.p() < d + 2) throw PrimeTooSmall("prime too small for the replayed degree");

  // Classes with too few sundials to reach the quadric construction are the
  // argument's base cases: one direct rank computation.
  bool direct = (case_id == 1 && h == 1) || (case_id == 3 && h == 2);
  if (direct) {
    ReplayReport rep{3, d, std::to_string(case_id), {}};
    CriticalSchemes generic = build_W_T(3, d, f, rng);
    add_claim(rep, "generic", ideal_dimension(generic.W, d, f));
    return rep;
  }
  return replay_p3_full(h, case_id, d, f, rng);
}

ReplayReport replay_pn_case(unsigned n, unsigned d, const PrimeField& f, Rng& rng) {
  if (n < 4) throw OutOfStatedRange("hyperplane replays need n >= 4");
  if (d < 2) throw OutOfStatedRange("hyperplane replays need d >= 2");
  if (f.p() < d + 2) throw PrimeTooSmall("prime too small for the replayed degree");

  CountingData cd = counting_data(n, d);
  unsigned s = static_cast<unsigned>(cd.s), r = static_cast<unsigned>(cd.r);
  unsigned sp = static_cast<unsigned>(cd.s_p), rp = static_cast<unsigned>(cd.r_p);
  bool t_odd = cd.t % 2 != 0, tp_odd = cd.t_p % 2 != 0;
  bool case_c = !t_odd && tp_odd;
  std::string case_label = tp_odd ? (t_odd ? "a" : "c") : "b";

  ReplayReport rep{n, d, case_label, {}};
  Hyperplane H = last_coordinate_hyperplane(n);

  // Sundial blocks of the specialized scheme, in the order the argument
  // lists them: both-lines-in, fully-in, (one-line-in), generic.
  auto build_blocks = [&](unsigned fully_in, bool one_line_in, bool m_generic, bool m_in_h,
                          unsigned points_in_h) {
    Scheme spec{n, {}};
    for (unsigned i = 0; i < rp; ++i)
      spec.components.push_back(SundialComponent{sundial_both_lines_in(n, f, rng)});
    for (unsigned i = 0; i < fully_in; ++i)
      spec.components.push_back(SundialComponent{sundial_fully_in(n, f, rng)});
    if (one_line_in)
      spec.components.push_back(SundialComponent{sundial_one_line_in(n, f, rng)});
    for (unsigned i = 0; i < sp; ++i)
      spec.components.push_back(SundialComponent{make_generic_sundial(n, f, rng)});
    if (m_generic) spec.components.push_back(LineComponent{make_generic_line(n, f, rng)});
    if (m_in_h) spec.components.push_back(LineComponent{line_in_h(n, f, rng)});
    for (const ProjectivePoint& p : distinct_h_points(points_in_h, n, f, rng))
      spec.components.push_back(SimplePoint{p});
    return spec;
  };

  Scheme spec_w =
      case_label == "a"
          ? build_blocks(s - sp - rp, false, /*m_generic=*/true, false, r)
          : case_label == "b"
                ? build_blocks(s - sp - rp, false, false, /*m_in_h=*/t_odd, r)
                : build_blocks(s - sp - rp - 1, /*one_line_in=*/true, false, false, r);

  add_claim(rep, "residual_W",
            ideal_dimension(hyperplane_residual(spec_w, H, f), d - 1, f));
  Scheme trace_w = hyperplane_trace(spec_w, H, f);
  if (case_c) realign_trace_points(trace_w, d, f, rng);
  add_claim(rep, "trace_W", ideal_dimension(trace_w, d, f));
  add_claim(rep, "specialized_W", ideal_dimension(spec_w, d, f));

  if (r > 0) {
    Scheme spec_t =
        case_label == "a"
            ? build_blocks(s - sp - rp, true, false, false, 0)
            : case_label == "b"
                  ? (t_odd ? build_blocks(s + 1 - sp - rp, false, false, false, 0)
                           : build_blocks(s - sp - rp, false, false, true, 0))
                  : build_blocks(s - sp - rp, false, true, false, 0);
    add_claim(rep, "residual_T",
              ideal_dimension(hyperplane_residual(spec_t, H, f), d - 1, f));
    add_claim(rep, "trace_T", ideal_dimension(hyperplane_trace(spec_t, H, f), d, f));
    add_claim(rep, "specialized_T", ideal_dimension(spec_t, d, f));
  }

  CriticalSchemes generic = build_W_T(n, d, f, rng);
  add_claim(rep, "generic_W", ideal_dimension(generic.W, d, f));
  if (r > 0) add_claim(rep, "generic_T", ideal_dimension(*generic.T, d, f));
  return rep;
}

}  // namespace sundial
