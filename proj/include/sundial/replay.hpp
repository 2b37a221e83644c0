#pragma once

#include <string>
#include <vector>

#include "sundial/castelnuovo.hpp"
#include "sundial/counting.hpp"

/*
  Numerical replays of the two induction arguments.  Each replay builds the
  specialized schemes exactly as the corresponding proof prescribes (ruling
  lines and embedded points on the quadric for P^3; blocks of sundials pushed
  into the hyperplane {x_n = 0} for P^n), computes every dimension the proof
  claims to vanish, and reports each claim with its computed value.

  A replay is randomized only through the rng it is handed; identical seeds
  give identical reports.
*/

namespace sundial {

struct ReplayClaim {
  std::string label;  // which claimed dimension, e.g. "residual_W"
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  bool match = false;
};

struct ReplayReport {
  unsigned n = 0, d = 0;
  std::string case_label;  // "1"/"2"/"3" in P^3, "a"/"b"/"c" in P^n
  std::vector<ReplayClaim> claims;

  bool all_match() const;
};

// P^3 induction step for the degree class `case_id`:
//   case 1: d = 3h  (h >= 1)   case 2: d = 3h+2  (h >= 1)   case 3: d = 3h+1  (h >= 2)
// Classes too small to specialize (case 1 h=1; case 3 h=2) are verified by a
// single direct rank computation, matching how the argument handles them.
ReplayReport replay_p3_case(unsigned h, unsigned case_id, const PrimeField& f, Rng& rng);

// One P^n -> P^{n-1} induction step (n >= 4, d >= 2); the case is selected by
// the parities of t and t': a = both odd, b = t' even, c = t even & t' odd.
ReplayReport replay_pn_case(unsigned n, unsigned d, const PrimeField& f, Rng& rng);

}  // namespace sundial
