#include "sundial/counting.hpp"

namespace sundial {

std::uint64_t binomial(std::uint64_t top, std::uint64_t bottom) {
  if (bottom > top) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= bottom; ++i) {
    acc = acc * (top - bottom + i);
    acc /= i;  // exact: C(top-bottom+i, i) is an integer
    if (acc > UINT64_MAX) throw ArithmeticOverflow("binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

Trs compute_trs(unsigned n, unsigned d) {
  if (n < 1 || d < 1) throw InvalidDimension("compute_trs needs n >= 1, d >= 1");
  const std::uint64_t c = binomial(d + n, n);
  Trs out;
  out.t = c / (d + 1);
  out.r = c - out.t * (d + 1);
  out.s = out.t / 2;
  return out;
}

CountingData counting_data(unsigned n, unsigned d) {
  if (n < 1 || d < 2) throw InvalidDimension("counting_data needs n >= 1, d >= 2");
  Trs a = compute_trs(n, d), b = compute_trs(n, d - 1);
  return CountingData{n, d, a.t, a.r, a.s, b.t, b.r, b.s};
}

std::uint64_t expected_ideal_dim(unsigned n, unsigned d, std::uint64_t sundials,
                                 std::uint64_t lines) {
  if (n < 3 || d < 1) throw InvalidDimension("expected_ideal_dim needs n >= 3, d >= 1");
  const unsigned __int128 c = binomial(d + n, n);
  const unsigned __int128 conditions =
      (2 * static_cast<unsigned __int128>(sundials) + lines) * (d + 1);
  return conditions >= c ? 0 : static_cast<std::uint64_t>(c - conditions);
}

CriticalSchemes build_W_T(unsigned n, unsigned d, const PrimeField& f, Rng& rng) {
  if (n < 3 || d < 1) throw InvalidDimension("critical schemes need n >= 3, d >= 1");
  CriticalSchemes out;
  out.counts = compute_trs(n, d);
  const bool t_odd = out.counts.t % 2 == 1;

  out.W.n = n;
  for (std::uint64_t i = 0; i < out.counts.s; ++i)
    out.W.components.push_back(SundialComponent{make_generic_sundial(n, f, rng)});
  if (t_odd) out.W.components.push_back(LineComponent{make_generic_line(n, f, rng)});
  LinearSubspace all = whole_space(n, f);
  for (std::uint64_t i = 0; i < out.counts.r; ++i)
    out.W.components.push_back(SimplePoint{sample_point(all, f, rng)});

  if (out.counts.r > 0) {
    Scheme T{n, {}};
    const std::uint64_t sundials = t_odd ? out.counts.s + 1 : out.counts.s;
    for (std::uint64_t i = 0; i < sundials; ++i)
      T.components.push_back(SundialComponent{make_generic_sundial(n, f, rng)});
    if (!t_odd) T.components.push_back(LineComponent{make_generic_line(n, f, rng)});
    out.T = std::move(T);
  }
  return out;
}

AppendixA1Report verify_appendix_a1(unsigned n, unsigned d) {
  if (n < 4 || d < 2) throw OutOfStatedRange("first lemma is stated for n >= 4, d >= 2");
  AppendixA1Report rep;
  rep.n = n;
  rep.d = d;
  rep.counts = counting_data(n, d);
  const auto& c = rep.counts;
  rep.special_parity = (c.t % 2 == 0) && (c.t_p % 2 == 1);

  const auto i64 = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  rep.a_slack = i64(c.s) - i64(c.s_p) - i64(c.r_p) - (rep.special_parity ? 1 : 0);
  rep.b_slack = i64(c.r) + i64(c.t_p) - i64(c.r_p) - (rep.special_parity ? 1 + i64(d) : 0);
  rep.c_slack = 2 * i64(c.s_p) - i64(c.r_p);
  rep.a_holds = rep.a_slack >= 0;
  rep.b_holds = rep.b_slack >= 0;
  rep.c_holds = rep.c_slack >= 0;
  return rep;
}

bool verify_appendix_a2(unsigned n, unsigned d) {
  if (n < 4 || d <= 5) throw OutOfStatedRange("second lemma is stated for n >= 4, d > 5");
  CountingData c = counting_data(n, d);
  return binomial(d - 2 + n, n) <= c.t_p * (d - 1);
}

}  // namespace sundial
