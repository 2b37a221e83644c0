#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sundial/geometry.hpp"
#include "sundial/monomials.hpp"

/*
  Schemes as unions of tagged components, and their degree-d condition
  matrices.  Every dimension count in the engine reduces to: build the rows
  each component imposes on degree-d forms, stack them, take the exact rank.

  Redundant rows (shared points, derivatives implied by line vanishing) are
  kept; rank absorbs them.  Line vanishing is encoded as d+1 point samples,
  which needs p >= d+2 so the samples are distinct.
*/

namespace sundial {

/* ------------------------------------------------------------ components */

struct SimplePoint {
  ProjectivePoint P;
};

// The double point at P restricted to the subspace T (P must lie in T):
// value at P plus derivatives along T's directions.
struct DoublePointRestricted {
  ProjectivePoint P;
  LinearSubspace T;
};

struct LineComponent {
  Line line;
};

// Two distinct lines meeting at P (no embedded point).
struct DegenerateConic {
  Line L, M;
  ProjectivePoint P;
};

struct SundialComponent {
  SundialData data;
};

using SchemeComponent = std::variant<SimplePoint, DoublePointRestricted, LineComponent,
                                     DegenerateConic, SundialComponent>;

struct Scheme {
  unsigned n = 0;  // ambient projective dimension
  std::vector<SchemeComponent> components;
};

unsigned component_ambient(const SchemeComponent& c);

// Validated constructor: computes P = L ∩ M (ConstructionFailure if the
// lines are skew or equal).
DegenerateConic make_degenerate_conic(const Line& L, const Line& M, const PrimeField& f);

// Checks every SundialData invariant; throws ConstructionFailure.
void validate_sundial(const SundialData& s, const PrimeField& f);

/* ------------------------------------------------------- condition rows */

struct ConditionMatrix {
  DenseMatrix matrix;                 // columns index MonomialBasis(n, d)
  std::vector<std::size_t> row_source;  // row -> index of producing component
};

// The rows one component imposes on degree-d forms (d, n from the basis):
//   SimplePoint -> 1 evaluation row
//   DoublePointRestricted(P,T) -> 1 evaluation + pdim(T) derivative rows
//   LineComponent -> d+1 evaluation rows at distinct points of the line
//   DegenerateConic -> both lines' rows
//   Sundial -> both lines' rows + the restricted double point's rows
std::vector<std::vector<FieldElement>> component_rows(const SchemeComponent& c,
                                                      const MonomialBasis& b,
                                                      const PrimeField& f);

ConditionMatrix condition_matrix(const Scheme& X, unsigned d, const PrimeField& f);

// HF(X,d) = rank of the condition matrix; dim(I_X)_d = C(d+n,n) - HF(X,d).
std::uint64_t hilbert_function(const Scheme& X, unsigned d, const PrimeField& f);
std::uint64_t ideal_dimension(const Scheme& X, unsigned d, const PrimeField& f);

/* ----------------------------------------------------------- generators */

// s generic sundials plus l generic lines.
Scheme random_configuration(unsigned n, unsigned s, unsigned l, const PrimeField& f,
                            Rng& rng);

// One-parameter degeneration of two skew lines: for lambda != 0 the fiber is
// two skew lines {L_lambda, M}; at lambda = 0 it is the sundial-shaped limit
// {L_0, M, 2P|_T} with P = L_0 ∩ M and T = span(L1 ∪ M).  L1, M must be
// skew (NotSkew otherwise); lambda = 1 returns {L1, M} itself.
Scheme degeneration_fiber(const Line& L1, const Line& M, FieldElement lambda,
                          const PrimeField& f);

}  // namespace sundial
