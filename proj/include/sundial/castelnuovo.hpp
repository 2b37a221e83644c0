#pragma once

#include <variant>
#include <vector>

#include "sundial/scheme.hpp"

/*
  The residual/trace engine.  For a scheme X and a smooth hypersurface Y of
  degree delta, dim(I_X)_d <= dim(I_{Res_Y X})_{d-delta} + dim(I_{Tr_Y X})_d.
  Res and Tr are computed by a finite component-wise rule table covering the
  positions the induction actually uses; any other position is an explicit
  UnrecognizedPosition error, never a silent guess.

  Two hypersurfaces are supported: arbitrary hyperplanes (moved to {x_n = 0}
  by an explicit coordinate change; the trace lives in P^{n-1}) and the fixed
  quadric surface x0*x3 - x1*x2 in P^3 (the trace lives on P^1 x P^1 and is
  measured in bidegree (a,b)).
*/

namespace sundial {

/* ---------------------------------------------------------- hypersurfaces */

struct Hyperplane {
  std::vector<FieldElement> coeffs;  // nonzero; the hyperplane is coeffs . x = 0
};

struct FixedQuadric {};  // x0*x3 - x1*x2, ambient P^3 only

using Hypersurface = std::variant<Hyperplane, FixedQuadric>;

// {x_n = 0} in P^n.
Hyperplane last_coordinate_hyperplane(unsigned n);

// A hyperplane through a subspace of projective dimension n-1.
Hyperplane hyperplane_through(const LinearSubspace& S, const PrimeField& f);

/* -------------------------------------------- hyperplane residual / trace */

// Res_H X, in the same ambient space.  Rules:
//   SimplePoint       in H -> removed            off H -> kept
//   Line              in H -> removed            transverse -> kept
//   2P|_T             P off H -> kept; P in H, T not in H -> SimplePoint(P);
//                     T in H -> removed
//   Sundial           generic -> kept; both lines in H (T not) -> SimplePoint(P);
//                     fully in H (T in H) -> removed; one line in H -> the
//                     other line (the double point reduces into the trace)
//   DegenerateConic   generic -> kept; in H -> removed
Scheme hyperplane_residual(const Scheme& X, const Hyperplane& H, const PrimeField& f);

// Tr_H X = X ∩ H, re-expressed in H's intrinsic coordinates (ambient n-1).
//   SimplePoint in H -> the point          Line in H -> the line
//   Line transverse -> meeting point
//   2P|_T, P in H, T not in H -> 2P|_(T∩H);  T in H -> the whole double point
//   Sundial generic -> two meeting points; both lines in H -> DegenerateConic;
//   fully in H -> the sundial; one line in H -> that line + 2P|_(T∩H)
//   DegenerateConic generic -> two meeting points; in H -> the conic
Scheme hyperplane_trace(const Scheme& X, const Hyperplane& H, const PrimeField& f);

/* ------------------------------------------------ quadric residual / trace */

// Components of a linear system on P^1 x P^1 (the quadric's two rulings).
struct SimplePointP1P1 {
  ProjectivePoint u, v;
};
struct DoublePointP1P1 {
  ProjectivePoint u, v;
};
struct RulingLineA {
  ProjectivePoint u;
};
struct RulingLineB {
  ProjectivePoint v;
};
using BidegreeComponent =
    std::variant<SimplePointP1P1, DoublePointP1P1, RulingLineA, RulingLineB>;

struct BidegreeSystem {
  unsigned a = 0, b = 0;  // bidegree
  std::vector<BidegreeComponent> components;
};

// Res_Q X in P^3.  Rules mirror the hyperplane table with Q in place of H;
// lines on Q are ruling lines, a sundial with its first line on a ruling
// leaves only its second line, a sundial with just the embedded point on Q
// leaves the degenerate conic.
Scheme quadric_residual(const Scheme& X, const PrimeField& f);

// Tr_Q X as a bidegree-(a,b) system on P^1 x P^1: ruling lines stay lines,
// transverse lines leave their two (rational) meeting points, embedded
// points on Q leave double points of the surface.
BidegreeSystem quadric_trace(const Scheme& X, unsigned a, unsigned b, const PrimeField& f);

// Dimension of bidegree-(a,b) forms through the system: (a+1)(b+1) columns,
// 1 row per simple point, 3 per double point (value + one partial per
// factor), b+1 / a+1 evaluation rows per ruling line.  Needs p >= max(a,b)+2.
std::uint64_t bidegree_dimension(const BidegreeSystem& S, const PrimeField& f);

/* ------------------------------------------------------- the inequality */

struct CastelnuovoReport {
  std::uint64_t dim_X_d = 0, dim_res = 0, dim_trace = 0;
  bool inequality_holds = false;  // dim_X_d <= dim_res + dim_trace
};

// Computes all three dimensions (δ = 1 for a hyperplane, 2 for the quadric;
// requires d >= δ) and checks the inequality.
CastelnuovoReport check_inequality(const Scheme& X, const Hypersurface& Y, unsigned d,
                                   const PrimeField& f);

}  // namespace sundial
