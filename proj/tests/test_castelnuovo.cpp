#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sundial/castelnuovo.hpp"
#include "sundial/counting.hpp"

using namespace sundial;

namespace {

const PrimeField F(Prime(32003));

ProjectivePoint pt(std::vector<FieldElement> c) { return make_point(std::move(c), F); }

ProjectivePoint p1(FieldElement a, FieldElement b) { return pt({a, b}); }

Scheme single(unsigned n, SchemeComponent c) { return Scheme{n, {std::move(c)}}; }

// Draws a P^1 parameter distinct from everything drawn before through `used`.
ProjectivePoint fresh_p1(std::vector<ProjectivePoint>& used, Rng& rng) {
  for (;;) {
    ProjectivePoint p = p1(1, static_cast<FieldElement>(rng.below(F.p())));
    if (std::find(used.begin(), used.end(), p) == used.end()) {
      used.push_back(p);
      return p;
    }
  }
}

ProjectivePoint random_point(unsigned n, Rng& rng) {
  for (;;) {
    std::vector<FieldElement> c(n + 1);
    bool nz = false;
    for (auto& x : c) {
      x = static_cast<FieldElement>(rng.below(F.p()));
      nz |= x != 0;
    }
    if (nz) return pt(std::move(c));
  }
}

// A sundial with its first line on the A-ruling and its second line crossing
// the quadric at the embedded point (used by the quadric-rule tests).
SundialData ruled_sundial(std::vector<ProjectivePoint>& used, Rng& rng) {
  for (;;) {
    Line L = ruling_line(Ruling::A, fresh_p1(used, rng), F);
    ProjectivePoint R = sample_point(line_span(L, F), F, rng);
    ProjectivePoint X = random_point(3, rng);
    if (line_contains(L, X, F)) continue;
    Line M = line_through(R, X, F);
    try {
      if (meet_quadric(M, F).contained) continue;
    } catch (const UnrecognizedPosition&) {
      continue;
    }
    return SundialData{L, M, R, whole_space(3, F)};
  }
}

// A generic sundial whose lines each pass through an explicit quadric point,
// so both quadric meetings are rational.
SundialData rational_sundial(Rng& rng) {
  for (;;) {
    ProjectivePoint R = random_point(3, rng);
    if (on_quadric(R, F)) continue;
    ProjectivePoint S1 = segre_point(p1(1, (FieldElement)rng.below(F.p())),
                                     p1(1, (FieldElement)rng.below(F.p())), F);
    ProjectivePoint S2 = segre_point(p1(1, (FieldElement)rng.below(F.p())),
                                     p1(1, (FieldElement)rng.below(F.p())), F);
    if (S1 == S2) continue;
    Line L = line_through(R, S1, F);
    if (line_contains(L, S2, F)) continue;
    Line M = line_through(R, S2, F);
    try {
      if (meet_quadric(L, F).contained || meet_quadric(M, F).contained) continue;
    } catch (const UnrecognizedPosition&) {
      continue;
    }
    return SundialData{L, M, R, whole_space(3, F)};
  }
}

}  // namespace

TEST_CASE("hyperplane helpers") {
  Hyperplane h4 = last_coordinate_hyperplane(4);
  CHECK(h4.coeffs == std::vector<FieldElement>{0, 0, 0, 0, 1});

  // the coordinate 2-plane {x3 = 0} in P^3 recovers its equation
  LinearSubspace S(3, [] {
    DenseMatrix m(3, 4);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    m.at(2, 2) = 1;
    return m;
  }(), F);
  CHECK(hyperplane_through(S, F).coeffs == std::vector<FieldElement>{0, 0, 0, 1});

  // random hyperplanes round-trip: every spanning point satisfies the form
  Rng rng(411);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned n = 3 + trial % 3;
    std::vector<ProjectivePoint> pts;
    for (unsigned i = 0; i < n; ++i) pts.push_back(random_point(n, rng));
    LinearSubspace span_s = span(pts, F);
    if (span_s.pdim() != n - 1) continue;  // degenerate draw
    Hyperplane h = hyperplane_through(span_s, F);
    for (const auto& p : pts) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i <= n; ++i)
        acc = (acc + std::uint64_t(h.coeffs[i]) * p.coords[i]) % F.p();
      CHECK(acc == 0);
    }
  }

  // a line is not a hyperplane of P^3
  LinearSubspace line_sub(3, [] {
    DenseMatrix m(2, 4);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    return m;
  }(), F);
  CHECK_THROWS_AS(hyperplane_through(line_sub, F), DimensionMismatch);

  Scheme empty{3, {}};
  CHECK_THROWS_AS(hyperplane_residual(empty, Hyperplane{{0, 0, 0}}, F), DimensionMismatch);
  CHECK_THROWS_AS(hyperplane_residual(empty, Hyperplane{{0, 0, 0, 0}}, F),
                  ConstructionFailure);
  CHECK_THROWS_AS(hyperplane_residual(empty, Hyperplane{{}}, F), EmptyInput);
}

TEST_CASE("hyperplane rules: points and lines") {
  Hyperplane H = last_coordinate_hyperplane(3);

  Scheme in_h = single(3, SimplePoint{pt({1, 2, 3, 0})});
  CHECK(hyperplane_residual(in_h, H, F).components.empty());
  Scheme tr = hyperplane_trace(in_h, H, F);
  CHECK(tr.n == 2);
  REQUIRE(tr.components.size() == 1);
  CHECK(std::get<SimplePoint>(tr.components[0]).P == pt({1, 2, 3}));

  Scheme off_h = single(3, SimplePoint{pt({1, 2, 3, 4})});
  CHECK(hyperplane_residual(off_h, H, F).components.size() == 1);
  CHECK(hyperplane_trace(off_h, H, F).components.empty());

  Line inside = line_through(pt({1, 0, 0, 0}), pt({0, 1, 5, 0}), F);
  Scheme line_in = single(3, LineComponent{inside});
  CHECK(hyperplane_residual(line_in, H, F).components.empty());
  Scheme line_in_tr = hyperplane_trace(line_in, H, F);
  REQUIRE(line_in_tr.components.size() == 1);
  CHECK(std::get<LineComponent>(line_in_tr.components[0]).line ==
        line_through(pt({1, 0, 0}), pt({0, 1, 5}), F));

  // transverse: kept in the residual, meets H in one traced point
  Line across = line_through(pt({1, 0, 0, 1}), pt({0, 1, 0, 0}), F);
  Scheme line_across = single(3, LineComponent{across});
  CHECK(hyperplane_residual(line_across, H, F).components.size() == 1);
  Scheme across_tr = hyperplane_trace(line_across, H, F);
  REQUIRE(across_tr.components.size() == 1);
  // the spanning point (0,1,0,0) already lies in H, so it is the meeting point
  CHECK(std::get<SimplePoint>(across_tr.components[0]).P == pt({0, 1, 0}));

  // a line meeting H away from its spanning points: (1,0,0,1)+(0,1,0,-1)
  Line oblique = line_through(pt({1, 0, 0, 1}), pt({0, 1, 0, F.neg(1)}), F);
  Scheme oblique_tr = hyperplane_trace(single(3, LineComponent{oblique}), H, F);
  REQUIRE(oblique_tr.components.size() == 1);
  CHECK(std::get<SimplePoint>(oblique_tr.components[0]).P == pt({1, 1, 0}));
}

TEST_CASE("hyperplane rules: restricted double points") {
  Hyperplane H = last_coordinate_hyperplane(4);
  LinearSubspace T_cross(4, [] {
    DenseMatrix m(4, 5);  // span{e0,e1,e2,e4}: crosses {x4 = 0}
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    m.at(2, 2) = 1;
    m.at(3, 4) = 1;
    return m;
  }(), F);
  ProjectivePoint P = pt({1, 2, 0, 0, 0});  // in H and in T

  Scheme dp = single(4, DoublePointRestricted{P, T_cross});
  Scheme res = hyperplane_residual(dp, H, F);
  REQUIRE(res.components.size() == 1);
  CHECK(std::get<SimplePoint>(res.components[0]).P == P);
  Scheme tr = hyperplane_trace(dp, H, F);
  REQUIRE(tr.components.size() == 1);
  const auto& tdp = std::get<DoublePointRestricted>(tr.components[0]);
  CHECK(tdp.P == pt({1, 2, 0, 0}));
  CHECK(tdp.T.pdim() == 2);  // T ∩ H is a plane
  CHECK(tdp.T.contains(tdp.P, F));

  // support off the hyperplane: untouched by both
  Scheme dp_off = single(4, DoublePointRestricted{pt({1, 0, 0, 0, 1}), whole_space(4, F)});
  CHECK(hyperplane_residual(dp_off, H, F).components.size() == 1);
  CHECK(hyperplane_trace(dp_off, H, F).components.empty());

  // T inside the hyperplane: removed from the residual, whole in the trace
  LinearSubspace T_in(4, [] {
    DenseMatrix m(4, 5);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    m.at(2, 2) = 1;
    m.at(3, 3) = 1;
    return m;
  }(), F);
  Scheme dp_in = single(4, DoublePointRestricted{P, T_in});
  CHECK(hyperplane_residual(dp_in, H, F).components.empty());
  Scheme tr_in = hyperplane_trace(dp_in, H, F);
  REQUIRE(tr_in.components.size() == 1);
  CHECK(std::get<DoublePointRestricted>(tr_in.components[0]).T.pdim() == 3);
}

TEST_CASE("hyperplane rules: sundials and degenerate conics") {
  Hyperplane H = last_coordinate_hyperplane(4);
  ProjectivePoint P = pt({1, 0, 0, 0, 0});
  ProjectivePoint X1 = pt({0, 1, 0, 0, 0});
  ProjectivePoint X2 = pt({0, 0, 1, 0, 0});
  auto sundial = [&](ProjectivePoint a, ProjectivePoint b, ProjectivePoint c,
                     ProjectivePoint x3) {
    return SundialData{line_through(a, b, F), line_through(a, c, F), a,
                       span({a, b, c, x3}, F)};
  };

  SUBCASE("both lines inside, double point sticking out") {
    SundialData s = sundial(P, X1, X2, pt({0, 0, 0, 1, 1}));
    Scheme res = hyperplane_residual(single(4, SundialComponent{s}), H, F);
    REQUIRE(res.components.size() == 1);
    CHECK(std::get<SimplePoint>(res.components[0]).P == P);
    Scheme tr = hyperplane_trace(single(4, SundialComponent{s}), H, F);
    REQUIRE(tr.components.size() == 1);
    const auto& conic = std::get<DegenerateConic>(tr.components[0]);
    CHECK(conic.P == pt({1, 0, 0, 0}));
    CHECK(conic.L == line_through(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), F));
    CHECK(conic.M == line_through(pt({1, 0, 0, 0}), pt({0, 0, 1, 0}), F));
  }

  SUBCASE("fully inside") {
    SundialData s = sundial(P, X1, X2, pt({0, 0, 0, 1, 0}));
    CHECK(hyperplane_residual(single(4, SundialComponent{s}), H, F).components.empty());
    Scheme tr = hyperplane_trace(single(4, SundialComponent{s}), H, F);
    REQUIRE(tr.components.size() == 1);
    const auto& ts = std::get<SundialComponent>(tr.components[0]).data;
    CHECK(ts.T.pdim() == 3);
    validate_sundial(ts, F);  // a genuine sundial of P^3
  }

  SUBCASE("one line inside") {
    SundialData s = sundial(P, X1, pt({0, 0, 1, 0, 1}), pt({0, 0, 0, 1, 0}));
    Scheme res = hyperplane_residual(single(4, SundialComponent{s}), H, F);
    REQUIRE(res.components.size() == 1);
    CHECK(std::get<LineComponent>(res.components[0]).line == s.M);
    Scheme tr = hyperplane_trace(single(4, SundialComponent{s}), H, F);
    REQUIRE(tr.components.size() == 2);
    CHECK(std::get<LineComponent>(tr.components[0]).line ==
          line_through(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), F));
    const auto& dp = std::get<DoublePointRestricted>(tr.components[1]);
    CHECK(dp.P == pt({1, 0, 0, 0}));
    CHECK(dp.T.pdim() == 2);
    CHECK(dp.T.contains(dp.P, F));
  }

  SUBCASE("generic position") {
    Rng rng(7);
    SundialData s = make_generic_sundial(4, F, rng);
    Scheme res = hyperplane_residual(single(4, SundialComponent{s}), H, F);
    REQUIRE(res.components.size() == 1);
    CHECK(std::holds_alternative<SundialComponent>(res.components[0]));
    Scheme tr = hyperplane_trace(single(4, SundialComponent{s}), H, F);
    REQUIRE(tr.components.size() == 2);
    for (const auto& comp : tr.components) CHECK(std::holds_alternative<SimplePoint>(comp));
  }

  SUBCASE("embedded point on H with transverse lines is not a recognized position") {
    SundialData s = sundial(P, pt({0, 1, 0, 0, 1}), pt({0, 0, 1, 0, 1}),
                            pt({0, 0, 0, 1, 0}));
    CHECK_THROWS_AS(hyperplane_residual(single(4, SundialComponent{s}), H, F),
                    UnrecognizedPosition);
    CHECK_THROWS_AS(hyperplane_trace(single(4, SundialComponent{s}), H, F),
                    UnrecognizedPosition);
  }

  SUBCASE("degenerate conics") {
    Hyperplane H3 = last_coordinate_hyperplane(3);
    // inside {x3 = 0}
    DegenerateConic inside = make_degenerate_conic(
        line_through(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), F),
        line_through(pt({1, 0, 0, 0}), pt({0, 0, 1, 0}), F), F);
    CHECK(hyperplane_residual(single(3, inside), H3, F).components.empty());
    Scheme tr = hyperplane_trace(single(3, inside), H3, F);
    REQUIRE(tr.components.size() == 1);
    CHECK(std::holds_alternative<DegenerateConic>(tr.components[0]));

    // generic: kept, and traced to the two meeting points
    DegenerateConic generic = make_degenerate_conic(
        line_through(pt({1, 0, 0, 1}), pt({0, 1, 0, 0}), F),
        line_through(pt({1, 0, 0, 1}), pt({0, 0, 1, 0}), F), F);
    CHECK(hyperplane_residual(single(3, generic), H3, F).components.size() == 1);
    CHECK(hyperplane_trace(single(3, generic), H3, F).components.size() == 2);

    // one line inside H is outside the recognized table for conics
    DegenerateConic half = make_degenerate_conic(
        line_through(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), F),
        line_through(pt({1, 0, 0, 0}), pt({0, 0, 1, 1}), F), F);
    CHECK_THROWS_AS(hyperplane_residual(single(3, half), H3, F), UnrecognizedPosition);
  }
}

TEST_CASE("residual and trace preserve condition mass") {
  // mass = imposed conditions (matrix rank), which redundant rows never
  // inflate: HF(X, d) = HF(Res X, d-1) + HF(Tr X, d) component-wise
  Hyperplane H = last_coordinate_hyperplane(4);
  unsigned d = 4;
  auto mass = [&](const Scheme& X) {
    return hilbert_function(hyperplane_residual(X, H, F), d - 1, F) +
           hilbert_function(hyperplane_trace(X, H, F), d, F);
  };

  Scheme line_across = single(4, LineComponent{line_through(pt({1, 0, 0, 0, 1}),
                                                            pt({0, 1, 0, 0, 0}), F)});
  CHECK(hilbert_function(line_across, d, F) == d + 1);
  CHECK(mass(line_across) == d + 1);

  Scheme pt_in = single(4, SimplePoint{pt({1, 2, 3, 4, 0})});
  Scheme pt_off = single(4, SimplePoint{pt({1, 2, 3, 4, 5})});
  CHECK(mass(pt_in) == 1);
  CHECK(mass(pt_off) == 1);

  ProjectivePoint P = pt({1, 0, 0, 0, 0});
  SundialData both{line_through(P, pt({0, 1, 0, 0, 0}), F),
                   line_through(P, pt({0, 0, 1, 0, 0}), F), P,
                   span({P, pt({0, 1, 0, 0, 0}), pt({0, 0, 1, 0, 0}), pt({0, 0, 0, 1, 1})},
                        F)};
  SundialData fully{both.L, both.M, P,
                    span({P, pt({0, 1, 0, 0, 0}), pt({0, 0, 1, 0, 0}), pt({0, 0, 0, 1, 0})},
                         F)};
  CHECK(hilbert_function(single(4, SundialComponent{both}), d, F) == 2 * (d + 1));
  CHECK(mass(single(4, SundialComponent{both})) == 2 * (d + 1));
  CHECK(mass(single(4, SundialComponent{fully})) == 2 * (d + 1));

  Rng rng(13);
  Scheme generic = single(4, SundialComponent{make_generic_sundial(4, F, rng)});
  CHECK(mass(generic) == 2 * (d + 1));

  Scheme dp = single(4, DoublePointRestricted{P, both.T});
  CHECK(hilbert_function(dp, d, F) == 4);
  CHECK(mass(dp) == 4);

  DegenerateConic generic_conic = make_degenerate_conic(
      line_through(pt({1, 0, 0, 0, 1}), pt({0, 1, 0, 0, 0}), F),
      line_through(pt({1, 0, 0, 0, 1}), pt({0, 0, 1, 0, 0}), F), F);
  CHECK(hilbert_function(single(4, generic_conic), d, F) == 2 * d + 1);
  CHECK(mass(single(4, generic_conic)) == 2 * d + 1);
}

TEST_CASE("quadric rules") {
  ProjectivePoint u = p1(1, 2), v = p1(1, 3);
  ProjectivePoint on_q = segre_point(u, v, F);

  SUBCASE("points") {
    Scheme on = single(3, SimplePoint{on_q});
    CHECK(quadric_residual(on, F).components.empty());
    BidegreeSystem tr = quadric_trace(on, 2, 2, F);
    REQUIRE(tr.components.size() == 1);
    const auto& sp = std::get<SimplePointP1P1>(tr.components[0]);
    CHECK(sp.u == u);
    CHECK(sp.v == v);

    Scheme off = single(3, SimplePoint{pt({1, 0, 0, 1})});
    CHECK(quadric_residual(off, F).components.size() == 1);
    CHECK(quadric_trace(off, 2, 2, F).components.empty());
  }

  SUBCASE("ruling and transverse lines") {
    Scheme a_line = single(3, LineComponent{ruling_line(Ruling::A, u, F)});
    CHECK(quadric_residual(a_line, F).components.empty());
    BidegreeSystem tr = quadric_trace(a_line, 3, 3, F);
    REQUIRE(tr.components.size() == 1);
    CHECK(std::get<RulingLineA>(tr.components[0]).u == u);

    Scheme b_line = single(3, LineComponent{ruling_line(Ruling::B, v, F)});
    CHECK(std::get<RulingLineB>(quadric_trace(b_line, 3, 3, F).components[0]).v == v);

    ProjectivePoint q2 = segre_point(p1(1, 5), p1(1, 7), F);
    Scheme chord = single(3, LineComponent{line_through(on_q, q2, F)});
    CHECK(quadric_residual(chord, F).components.size() == 1);
    BidegreeSystem chord_tr = quadric_trace(chord, 2, 2, F);
    REQUIRE(chord_tr.components.size() == 2);
    for (const auto& comp : chord_tr.components)
      CHECK(std::holds_alternative<SimplePointP1P1>(comp));

    Scheme tangent = single(3, LineComponent{line_through(pt({1, 0, 0, 0}),
                                                          pt({0, 1, 1, 0}), F)});
    CHECK_THROWS_AS(quadric_residual(tangent, F), UnrecognizedPosition);
  }

  SUBCASE("full double point on the quadric") {
    Scheme dp = single(3, DoublePointRestricted{on_q, whole_space(3, F)});
    Scheme res = quadric_residual(dp, F);
    REQUIRE(res.components.size() == 1);
    CHECK(std::get<SimplePoint>(res.components[0]).P == on_q);
    BidegreeSystem tr = quadric_trace(dp, 4, 4, F);
    REQUIRE(tr.components.size() == 1);
    const auto& tdp = std::get<DoublePointP1P1>(tr.components[0]);
    CHECK(tdp.u == u);
    CHECK(tdp.v == v);
  }

  SUBCASE("sundial with a line on the ruling") {
    Rng rng(99);
    std::vector<ProjectivePoint> used;
    SundialData s = ruled_sundial(used, rng);
    Scheme X = single(3, SundialComponent{s});
    Scheme res = quadric_residual(X, F);
    REQUIRE(res.components.size() == 1);
    CHECK(std::get<LineComponent>(res.components[0]).line == s.M);
    BidegreeSystem tr = quadric_trace(X, 3, 3, F);
    REQUIRE(tr.components.size() == 4);  // ruling line + two points + double point
    CHECK(std::holds_alternative<RulingLineA>(tr.components[0]));
    CHECK(std::holds_alternative<SimplePointP1P1>(tr.components[1]));
    CHECK(std::holds_alternative<SimplePointP1P1>(tr.components[2]));
    CHECK(std::holds_alternative<DoublePointP1P1>(tr.components[3]));
  }

  SUBCASE("sundial crossing at an embedded quadric point") {
    Rng rng(100);
    for (;;) {  // rejection-sample a crossing sundial through on_q
      ProjectivePoint X1 = random_point(3, rng), X2 = random_point(3, rng);
      if (X1 == on_q || X2 == on_q || X1 == X2) continue;
      Line L = line_through(on_q, X1, F);
      if (line_contains(L, X2, F)) continue;
      Line M = line_through(on_q, X2, F);
      try {
        if (meet_quadric(L, F).contained || meet_quadric(M, F).contained) continue;
      } catch (const UnrecognizedPosition&) {
        continue;
      }
      SundialData s{L, M, on_q, whole_space(3, F)};
      Scheme X = single(3, SundialComponent{s});
      Scheme res = quadric_residual(X, F);
      REQUIRE(res.components.size() == 1);
      const auto& conic = std::get<DegenerateConic>(res.components[0]);
      CHECK(conic.P == on_q);
      BidegreeSystem tr = quadric_trace(X, 3, 3, F);
      REQUIRE(tr.components.size() == 3);  // two far points + the double point
      CHECK(std::holds_alternative<SimplePointP1P1>(tr.components[0]));
      CHECK(std::holds_alternative<SimplePointP1P1>(tr.components[1]));
      CHECK(std::holds_alternative<DoublePointP1P1>(tr.components[2]));
      break;
    }
  }

  SUBCASE("generic sundial leaves four points") {
    Rng rng(101);
    SundialData s = rational_sundial(rng);
    Scheme X = single(3, SundialComponent{s});
    Scheme res = quadric_residual(X, F);
    REQUIRE(res.components.size() == 1);
    CHECK(std::holds_alternative<SundialComponent>(res.components[0]));
    BidegreeSystem tr = quadric_trace(X, 3, 3, F);
    CHECK(tr.components.size() == 4);
  }

  SUBCASE("sundial inside the quadric is not recognized") {
    Line A = ruling_line(Ruling::A, u, F);
    Line B = ruling_line(Ruling::B, v, F);
    SundialData s{A, B, on_q, whole_space(3, F)};
    CHECK_THROWS_AS(quadric_residual(single(3, SundialComponent{s}), F),
                    UnrecognizedPosition);
    CHECK_THROWS_AS(quadric_trace(single(3, SundialComponent{s}), 3, 3, F),
                    UnrecognizedPosition);
  }

  SUBCASE("wrong ambient space") {
    Scheme p4{4, {}};
    CHECK_THROWS_AS(quadric_residual(p4, F), DimensionMismatch);
    CHECK_THROWS_AS(quadric_trace(p4, 2, 2, F), DimensionMismatch);
  }
}

TEST_CASE("bidegree dimensions") {
  SUBCASE("pinned values") {
    CHECK(bidegree_dimension(BidegreeSystem{0, 0, {}}, F) == 1);
    CHECK(bidegree_dimension(BidegreeSystem{2, 3, {}}, F) == 12);

    BidegreeSystem one_pt{2, 2, {SimplePointP1P1{p1(1, 4), p1(1, 9)}}};
    CHECK(bidegree_dimension(one_pt, F) == 8);

    BidegreeSystem one_dbl{2, 2, {DoublePointP1P1{p1(1, 4), p1(1, 9)}}};
    CHECK(bidegree_dimension(one_dbl, F) == 6);

    // chart-boundary support still imposes all three conditions
    BidegreeSystem boundary{2, 2, {DoublePointP1P1{p1(0, 1), p1(1, 0)}}};
    CHECK(bidegree_dimension(boundary, F) == 6);

    BidegreeSystem a_line{2, 3, {RulingLineA{p1(1, 4)}}};
    CHECK(bidegree_dimension(a_line, F) == 8);  // 12 - (b+1)
    BidegreeSystem b_line{2, 3, {RulingLineB{p1(1, 4)}}};
    CHECK(bidegree_dimension(b_line, F) == 9);  // 12 - (a+1)

    // points on a ruling line already counted by it are absorbed by rank
    BidegreeSystem redundant{1, 1,
                             {RulingLineA{p1(1, 4)}, SimplePointP1P1{p1(1, 4), p1(1, 5)},
                              SimplePointP1P1{p1(1, 4), p1(1, 6)}}};
    CHECK(bidegree_dimension(redundant, F) == 2);
  }

  SUBCASE("the two trace systems the induction leans on") {
    Rng rng(2024);
    std::vector<ProjectivePoint> used;
    BidegreeSystem first{1, 6, {}};
    for (int i = 0; i < 14; ++i)
      first.components.push_back(SimplePointP1P1{fresh_p1(used, rng), p1(1, (FieldElement)i)});
    CHECK(bidegree_dimension(first, F) == 0);

    std::vector<ProjectivePoint> used2;
    BidegreeSystem second{3, 10, {}};
    for (int i = 0; i < 6; ++i)
      second.components.push_back(
          DoublePointP1P1{fresh_p1(used2, rng), p1(1, (FieldElement)(3 * i + 1))});
    for (int i = 0; i < 26; ++i)
      second.components.push_back(
          SimplePointP1P1{fresh_p1(used2, rng), p1(1, (FieldElement)(2 * i + 5))});
    CHECK(bidegree_dimension(second, F) == 0);
  }

  SUBCASE("errors") {
    PrimeField small(Prime(7));
    CHECK_THROWS_AS(bidegree_dimension(BidegreeSystem{6, 1, {}}, small), PrimeTooSmall);
    BidegreeSystem bad{2, 2, {SimplePointP1P1{pt({1, 0, 0}), p1(1, 1)}}};
    CHECK_THROWS_AS(bidegree_dimension(bad, F), DimensionMismatch);
  }

  SUBCASE("generic ruling lines split off as fixed components") {
    Rng rng(555);
    for (int trial = 0; trial < 50; ++trial) {
      unsigned k = 1 + trial % 3;
      unsigned a = k + 1 + trial % 2, b = 2 + trial % 4;
      std::vector<ProjectivePoint> used;
      BidegreeSystem rest{a - k, b, {}};
      BidegreeSystem with_lines{a, b, {}};
      for (unsigned i = 0; i < k; ++i)
        with_lines.components.push_back(RulingLineA{fresh_p1(used, rng)});
      unsigned pts = 1 + trial % 4;
      for (unsigned i = 0; i < pts; ++i) {
        ProjectivePoint pu = fresh_p1(used, rng);
        ProjectivePoint pv = p1(1, (FieldElement)rng.below(F.p()));
        if (trial % 5 == 0) {
          rest.components.push_back(DoublePointP1P1{pu, pv});
          with_lines.components.push_back(DoublePointP1P1{pu, pv});
        } else {
          rest.components.push_back(SimplePointP1P1{pu, pv});
          with_lines.components.push_back(SimplePointP1P1{pu, pv});
        }
      }
      CHECK(bidegree_dimension(with_lines, F) == bidegree_dimension(rest, F));
    }
  }
}

TEST_CASE("the inequality") {
  SUBCASE("empty scheme: equality for both hypersurface kinds") {
    Scheme empty3{3, {}}, empty4{4, {}};
    for (unsigned d = 2; d <= 5; ++d) {
      CastelnuovoReport hp = check_inequality(empty4, last_coordinate_hyperplane(4), d, F);
      CHECK(hp.inequality_holds);
      CHECK(hp.dim_X_d == hp.dim_res + hp.dim_trace);
      CHECK(hp.dim_X_d == binomial(d + 4, 4));

      CastelnuovoReport qd = check_inequality(empty3, FixedQuadric{}, d, F);
      CHECK(qd.inequality_holds);
      CHECK(qd.dim_X_d == qd.dim_res + qd.dim_trace);
      CHECK(qd.dim_trace == std::uint64_t(d + 1) * (d + 1));
    }
  }

  SUBCASE("a single transverse line gives equality against any hyperplane") {
    Rng rng(88);
    for (unsigned n = 3; n <= 4; ++n) {
      Scheme X{n, {LineComponent{make_generic_line(n, F, rng)}}};
      std::vector<FieldElement> coeffs(n + 1);
      for (auto& c : coeffs) c = (FieldElement)rng.below(F.p());
      coeffs[n] = 1;  // certainly nonzero
      CastelnuovoReport rep = check_inequality(X, Hyperplane{coeffs}, 3, F);
      CHECK(rep.inequality_holds);
      CHECK(rep.dim_X_d == rep.dim_res + rep.dim_trace);
    }
  }

  SUBCASE("100 random configurations against random hyperplanes") {
    Rng rng(20240818);
    int done = 0;
    while (done < 100) {
      unsigned n = 3 + done % 2;
      unsigned d = 1 + done % 5;
      Scheme X = random_configuration(n, done % 3, (done / 3) % 3, F, rng);
      std::vector<FieldElement> coeffs(n + 1);
      bool nz = false;
      for (auto& c : coeffs) {
        c = (FieldElement)rng.below(F.p());
        nz |= c != 0;
      }
      if (!nz) continue;
      CastelnuovoReport rep = check_inequality(X, Hyperplane{coeffs}, d, F);
      CHECK(rep.inequality_holds);
      ++done;
    }
  }

  SUBCASE("the degree-6 ruled configuration: residual dimension vanishes") {
    // five sundials on distinct A-lines plus one generic: the degree-6
    // specialization whose residual (degree 4) and trace (type (6,6)) both
    // empty out, forcing dim(I)_6 = 0.
    Rng rng(4242);
    std::vector<ProjectivePoint> used;
    Scheme X{3, {}};
    for (int i = 0; i < 5; ++i)
      X.components.push_back(SundialComponent{ruled_sundial(used, rng)});
    X.components.push_back(SundialComponent{rational_sundial(rng)});
    CastelnuovoReport rep = check_inequality(X, FixedQuadric{}, 6, F);
    CHECK(rep.dim_res == 0);
    CHECK(rep.dim_trace == 0);
    CHECK(rep.dim_X_d == 0);
    CHECK(rep.inequality_holds);
  }

  SUBCASE("degree preconditions") {
    Scheme empty3{3, {}};
    CHECK_THROWS_AS(check_inequality(empty3, last_coordinate_hyperplane(3), 0, F),
                    InvalidDimension);
    CHECK_THROWS_AS(check_inequality(empty3, FixedQuadric{}, 1, F), InvalidDimension);
  }
}
