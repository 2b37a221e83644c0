#pragma once

#include <cstdint>
#include <optional>

#include "sundial/errors.hpp"
#include "sundial/scheme.hpp"

/*
  Integer bookkeeping for the dimension counts: exact binomials with overflow
  detection, the t/r/s splitting of the monomial count along d and d-1, the
  closed-form expected dimensions, construction of the critical schemes W and
  T, and the inequality verifiers that certify the induction bookkeeping over
  their stated parameter ranges.
*/

namespace sundial {

// C(top, bottom) computed exactly in unsigned 128-bit steps; throws
// ArithmeticOverflow if the value (or an intermediate) exceeds uint64.
std::uint64_t binomial(std::uint64_t top, std::uint64_t bottom);

// Euclidean division C(d+n,n) = t(d+1) + r with 0 <= r <= d, and s = t/2.
struct Trs {
  std::uint64_t t = 0, r = 0, s = 0;
};
Trs compute_trs(unsigned n, unsigned d);  // pre n >= 1, d >= 1

// The same split for both d (unprimed) and d-1 (primed, divisor d).
struct CountingData {
  unsigned n = 0, d = 0;
  std::uint64_t t = 0, r = 0, s = 0;
  std::uint64_t t_p = 0, r_p = 0, s_p = 0;
};
CountingData counting_data(unsigned n, unsigned d);  // pre n >= 1, d >= 2

// max{C(d+n,n) - (2s+l)(d+1), 0}: the dimension a generic union of s
// sundials and l lines is expected to leave in degree d.
std::uint64_t expected_ideal_dim(unsigned n, unsigned d, std::uint64_t sundials,
                                 std::uint64_t lines);

// The critical schemes: W = s sundials (+ line M if t odd) + r points;
// T (present only when r > 0) = s sundials + M if t even, s+1 sundials if
// t odd.  Components are generic, in that order.
struct CriticalSchemes {
  Trs counts;
  Scheme W;
  std::optional<Scheme> T;
};
CriticalSchemes build_W_T(unsigned n, unsigned d, const PrimeField& f, Rng& rng);

// First bookkeeping lemma (n >= 4, d >= 2), parts (a)-(c), with the parity
// case-split recomputed internally.  Slacks are the left-hand sides minus
// the right-hand sides, so "holds" means slack >= 0.
struct AppendixA1Report {
  unsigned n = 0, d = 0;
  CountingData counts;
  bool special_parity = false;  // t even and t' odd (the stricter case)
  std::int64_t a_slack = 0;     // s - s' - r'  (minus 1 in the special case)
  std::int64_t b_slack = 0;     // r + t' - r'  (minus 1+d in the special case)
  std::int64_t c_slack = 0;     // 2s' - r'
  bool a_holds = false, b_holds = false, c_holds = false;
  bool all_hold() const { return a_holds && b_holds && c_holds; }
};
AppendixA1Report verify_appendix_a1(unsigned n, unsigned d);  // OutOfStatedRange

// Second bookkeeping lemma (n >= 4, d > 5): C(d-2+n, n) <= t'(d-1).
bool verify_appendix_a2(unsigned n, unsigned d);  // OutOfStatedRange

}  // namespace sundial
