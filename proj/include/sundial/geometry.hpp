#pragma once

#include <vector>

#include "sundial/field.hpp"
#include "sundial/rng.hpp"

/*
  Projective linear algebra over F_p and the random constructors for the
  geometric ingredients: points, linear subspaces, lines, sundials, and the
  fixed quadric surface in P^3 with its two rulings.

  Canonical forms keep everything reproducible: a point's first nonzero
  coordinate is scaled to 1, and a subspace's basis is the reduced row
  echelon form of any spanning set, so equal objects have equal coordinates.
*/

namespace sundial {

/* ----------------------------------------------------------------- types */

struct ProjectivePoint {
  std::vector<FieldElement> coords;  // canonical: first nonzero entry is 1

  unsigned n() const noexcept { return static_cast<unsigned>(coords.size()) - 1; }
  bool operator==(const ProjectivePoint&) const = default;
};

// Scales the first nonzero coordinate to 1.  Throws EmptyInput on an empty
// tuple and ConstructionFailure on the zero tuple.
ProjectivePoint make_point(std::vector<FieldElement> coords, const PrimeField& f);

// A projective linear subspace, stored as the RREF basis of its cone.
class LinearSubspace {
 public:
  // Reduces `rows` (spanning vectors, possibly dependent) to canonical form.
  LinearSubspace(unsigned ambient_n, DenseMatrix rows, const PrimeField& f);

  unsigned ambient_n() const noexcept { return ambient_n_; }
  const DenseMatrix& basis_rows() const noexcept { return basis_; }
  // projective dimension = rank - 1
  unsigned pdim() const noexcept { return static_cast<unsigned>(basis_.rows) - 1; }
  bool contains(const ProjectivePoint& p, const PrimeField& f) const;
  bool contains(const LinearSubspace& other, const PrimeField& f) const;
  bool operator==(const LinearSubspace& o) const {
    return ambient_n_ == o.ambient_n_ && basis_.entries == o.basis_.entries &&
           basis_.rows == o.basis_.rows;
  }

 private:
  unsigned ambient_n_;
  DenseMatrix basis_;
};

// A line, stored as its two canonical spanning points (the RREF rows).
struct Line {
  ProjectivePoint a, b;

  unsigned n() const noexcept { return a.n(); }
  bool operator==(const Line&) const = default;
};

// Sundial ingredients: two lines meeting at P, inside a 3-space T that
// contains their plane; P carries the restricted double point 2P|_T.
struct SundialData {
  Line L, M;
  ProjectivePoint P;
  LinearSubspace T;
};

/* ------------------------------------------------------------ operations */

// Smallest subspace containing all the points.
LinearSubspace span(const std::vector<ProjectivePoint>& points, const PrimeField& f);

// Joins and spans for lines (a line is re-expressed through its two points).
LinearSubspace line_span(const Line& l, const PrimeField& f);
LinearSubspace join(const LinearSubspace& s1, const LinearSubspace& s2, const PrimeField& f);

// The line through two distinct points (ConstructionFailure if equal).
Line line_through(const ProjectivePoint& p, const ProjectivePoint& q, const PrimeField& f);

bool line_contains(const Line& l, const ProjectivePoint& p, const PrimeField& f);

// Meeting point of two coplanar distinct lines (ConstructionFailure if the
// lines are skew or equal).
ProjectivePoint line_intersection(const Line& l1, const Line& l2, const PrimeField& f);

// Uniform random point of S (deterministic in the rng state).
ProjectivePoint sample_point(const LinearSubspace& S, const PrimeField& f, Rng& rng);

// The whole ambient space P^n as a subspace.
LinearSubspace whole_space(unsigned n, const PrimeField& f);

// Intersection with the coordinate hyperplane {x_coord = 0}.  If S lies
// inside the hyperplane this returns S itself.
LinearSubspace intersect_coordinate_hyperplane(const LinearSubspace& S, unsigned coord,
                                               const PrimeField& f);

// Random generic constructions.  Both retry internally (up to 5 draws) and
// throw ConstructionFailure if the samples stay degenerate.
Line make_generic_line(unsigned n, const PrimeField& f, Rng& rng);
SundialData make_generic_sundial(unsigned n, const PrimeField& f, Rng& rng);  // n >= 3

/* -------------------------------------------- the quadric in P^3 (fixed) */

// All quadric work uses the fixed Segre form q = x0*x3 - x1*x2, the image of
// P^1 x P^1 under (u, v) -> (u0*v0 : u0*v1 : u1*v0 : u1*v1).

enum class Ruling { A, B };  // A = fixed first factor u, B = fixed second factor v

FieldElement quadric_value(const ProjectivePoint& p, const PrimeField& f);
bool on_quadric(const ProjectivePoint& p, const PrimeField& f);

// Segre embedding of (u, v) in P^1 x P^1.
ProjectivePoint segre_point(const ProjectivePoint& u, const ProjectivePoint& v,
                            const PrimeField& f);

// Factor coordinates of a point on the quadric: u = (x0:x2) (or (x1:x3)),
// v = (x0:x1) (or (x2:x3)).  Throws UnrecognizedPosition off the quadric.
ProjectivePoint quadric_param_u(const ProjectivePoint& p, const PrimeField& f);
ProjectivePoint quadric_param_v(const ProjectivePoint& p, const PrimeField& f);

// The ruling line with the given P^1 parameter (family A: u fixed; family B:
// v fixed).  Every point of the result lies on the quadric.
Line ruling_line(Ruling family, const ProjectivePoint& param, const PrimeField& f);

// Scheme-theoretic meeting of a line with the quadric.
struct LineQuadricMeet {
  bool contained = false;  // line lies on the quadric
  // when contained: which ruling and which parameter
  Ruling family = Ruling::A;
  ProjectivePoint param;
  // otherwise: the two (distinct, rational) intersection points
  ProjectivePoint p1, p2;
};

// Throws UnrecognizedPosition when the meeting is tangent or the quadratic
// has no root in F_p (an irrational intersection).
LineQuadricMeet meet_quadric(const Line& l, const PrimeField& f);

}  // namespace sundial
