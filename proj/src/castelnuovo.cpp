#include "sundial/castelnuovo.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sundial {

namespace {

/* ------------------------------------------------ hyperplane classification */

void check_hyperplane(unsigned n, const Hyperplane& H) {
  if (H.coeffs.empty()) throw EmptyInput("hyperplane has no coefficients");
  if (H.coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw DimensionMismatch("hyperplane coefficient count does not match the ambient space");
  if (std::all_of(H.coeffs.begin(), H.coeffs.end(), [](FieldElement c) { return c == 0; }))
    throw ConstructionFailure("hyperplane coefficients are all zero");
}

FieldElement hyperplane_value(const Hyperplane& H, const std::vector<FieldElement>& x,
                              const PrimeField& f) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc = (acc + static_cast<std::uint64_t>(H.coeffs[i]) * x[i]) % f.p();
  return static_cast<FieldElement>(acc);
}

bool point_in(const Hyperplane& H, const ProjectivePoint& p, const PrimeField& f) {
  return hyperplane_value(H, p.coords, f) == 0;
}

bool line_in(const Hyperplane& H, const Line& l, const PrimeField& f) {
  return point_in(H, l.a, f) && point_in(H, l.b, f);
}

bool subspace_in(const Hyperplane& H, const LinearSubspace& S, const PrimeField& f) {
  const DenseMatrix& B = S.basis_rows();
  for (std::size_t r = 0; r < B.rows; ++r) {
    std::vector<FieldElement> row(B.row(r), B.row(r) + B.cols);
    if (hyperplane_value(H, row, f) != 0) return false;
  }
  return true;
}

// The single meeting point of a transverse line with H.
ProjectivePoint line_meet(const Hyperplane& H, const Line& l, const PrimeField& f) {
  FieldElement ha = hyperplane_value(H, l.a.coords, f);
  FieldElement hb = hyperplane_value(H, l.b.coords, f);
  if (ha == 0) return l.a;
  if (hb == 0) return l.b;
  // a + tau*b with h(a) + tau*h(b) = 0
  FieldElement tau = f.neg(f.mul(ha, f.inv(hb)));
  std::vector<FieldElement> coords(l.a.coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] = f.add(l.a.coords[i], f.mul(tau, l.b.coords[i]));
  return make_point(std::move(coords), f);
}

/* ------------------------------------------------- the intrinsic H-frame */

// Coordinate change y = C.x with C = (e_{sigma(0)}, ..., e_{sigma(n-1)}, h):
// H becomes {y_n = 0} and dropping y_n gives intrinsic P^{n-1} coordinates.
class HyperplaneFrame {
 public:
  HyperplaneFrame(unsigned n, const Hyperplane& H, const PrimeField& f)
      : n_(n), h_(&H), f_(&f) {
    unsigned pivot = 0;
    while (H.coeffs[pivot] == 0) ++pivot;
    for (unsigned i = 0; i <= n; ++i)
      if (i != pivot) keep_.push_back(i);
  }

  std::vector<FieldElement> to_frame(const std::vector<FieldElement>& x) const {
    std::vector<FieldElement> y(n_ + 1);
    for (unsigned i = 0; i < n_; ++i) y[i] = x[keep_[i]];
    y[n_] = hyperplane_value(*h_, x, *f_);
    return y;
  }

  // Intrinsic coordinates of a point of H.
  ProjectivePoint trace_point(const ProjectivePoint& p) const {
    std::vector<FieldElement> y = to_frame(p.coords);
    if (y[n_] != 0)
      throw UnrecognizedPosition("trace of a point that is not on the hyperplane");
    y.pop_back();
    return make_point(std::move(y), *f_);
  }

  Line trace_line(const Line& l) const {
    return line_through(trace_point(l.a), trace_point(l.b), *f_);
  }

  // Intrinsic coordinates of S ∩ H (S itself when S ⊆ H).
  LinearSubspace section(const LinearSubspace& S) const {
    const DenseMatrix& B = S.basis_rows();
    DenseMatrix framed(B.rows, n_ + 1);
    for (std::size_t r = 0; r < B.rows; ++r) {
      std::vector<FieldElement> row(B.row(r), B.row(r) + B.cols);
      std::vector<FieldElement> y = to_frame(row);
      std::copy(y.begin(), y.end(), framed.row(r));
    }
    LinearSubspace in_frame(n_, std::move(framed), *f_);
    LinearSubspace cut = intersect_coordinate_hyperplane(in_frame, n_, *f_);
    const DenseMatrix& C = cut.basis_rows();
    DenseMatrix dropped(C.rows, n_);
    for (std::size_t r = 0; r < C.rows; ++r) {
      if (C.at(r, n_) != 0)
        throw UnrecognizedPosition("hyperplane section retained the cut coordinate");
      std::copy(C.row(r), C.row(r) + n_, dropped.row(r));
    }
    return LinearSubspace(n_ - 1, std::move(dropped), *f_);
  }

 private:
  unsigned n_;
  const Hyperplane* h_;
  const PrimeField* f_;
  std::vector<unsigned> keep_;  // coordinate indices other than the pivot
};

/* --------------------------------------------------- quadric classification */

struct SundialQuadricPosition {
  LineQuadricMeet mL, mM;
  bool L_on = false, M_on = false, P_on = false;
};

SundialQuadricPosition classify_sundial(const SundialData& s, const PrimeField& f) {
  SundialQuadricPosition pos;
  pos.mL = meet_quadric(s.L, f);
  pos.mM = meet_quadric(s.M, f);
  pos.L_on = pos.mL.contained;
  pos.M_on = pos.mM.contained;
  pos.P_on = on_quadric(s.P, f);
  return pos;
}

// For a transverse line through a point R of the quadric, the other meeting
// point.
ProjectivePoint other_meet(const LineQuadricMeet& m, const ProjectivePoint& R) {
  if (m.p1 == R) return m.p2;
  if (m.p2 == R) return m.p1;
  throw UnrecognizedPosition("expected meeting point is not on the quadric section");
}

SimplePointP1P1 point_on_surface(const ProjectivePoint& p, const PrimeField& f) {
  return {quadric_param_u(p, f), quadric_param_v(p, f)};
}

BidegreeComponent ruling_trace(const LineQuadricMeet& m) {
  if (m.family == Ruling::A) return RulingLineA{m.param};
  return RulingLineB{m.param};
}

/* ------------------------------------------------------- bidegree rows */

void check_p1(const ProjectivePoint& p) {
  if (p.coords.size() != 2)
    throw DimensionMismatch("bidegree component coordinates must be points of P^1");
}

std::vector<FieldElement> powers(FieldElement x, unsigned e, const PrimeField& f) {
  std::vector<FieldElement> t(e + 1);
  t[0] = 1;
  for (unsigned i = 1; i <= e; ++i) t[i] = f.mul(t[i - 1], x);
  return t;
}

// One evaluation row of the (a,b) monomials u0^{a-i} u1^i v0^{b-j} v1^j.
std::vector<FieldElement> surface_eval_row(unsigned a, unsigned b, const ProjectivePoint& u,
                                           const ProjectivePoint& v, const PrimeField& f) {
  auto u0 = powers(u.coords[0], a, f), u1 = powers(u.coords[1], a, f);
  auto v0 = powers(v.coords[0], b, f), v1 = powers(v.coords[1], b, f);
  std::vector<FieldElement> row((a + 1) * (b + 1));
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b; ++j)
      row[i * (b + 1) + j] = f.mul(f.mul(u0[a - i], u1[i]), f.mul(v0[b - j], v1[j]));
  return row;
}

// Partial derivative row in the first factor along du (second factor fixed).
std::vector<FieldElement> surface_du_row(unsigned a, unsigned b, const ProjectivePoint& u,
                                         const ProjectivePoint& v,
                                         const std::pair<FieldElement, FieldElement>& du,
                                         const PrimeField& f) {
  auto u0 = powers(u.coords[0], a, f), u1 = powers(u.coords[1], a, f);
  auto v0 = powers(v.coords[0], b, f), v1 = powers(v.coords[1], b, f);
  std::vector<FieldElement> row((a + 1) * (b + 1));
  for (unsigned i = 0; i <= a; ++i) {
    // d/de (u0 + e du0)^{a-i} (u1 + e du1)^i at e = 0
    FieldElement dpart = 0;
    if (a - i > 0)
      dpart = f.add(dpart, f.mul(f.reduce(a - i), f.mul(f.mul(u0[a - i - 1], du.first), u1[i])));
    if (i > 0)
      dpart = f.add(dpart, f.mul(f.reduce(i), f.mul(f.mul(u1[i - 1], du.second), u0[a - i])));
    for (unsigned j = 0; j <= b; ++j)
      row[i * (b + 1) + j] = f.mul(dpart, f.mul(v0[b - j], v1[j]));
  }
  return row;
}

std::vector<FieldElement> surface_dv_row(unsigned a, unsigned b, const ProjectivePoint& u,
                                         const ProjectivePoint& v,
                                         const std::pair<FieldElement, FieldElement>& dv,
                                         const PrimeField& f) {
  auto u0 = powers(u.coords[0], a, f), u1 = powers(u.coords[1], a, f);
  auto v0 = powers(v.coords[0], b, f), v1 = powers(v.coords[1], b, f);
  std::vector<FieldElement> row((a + 1) * (b + 1));
  for (unsigned j = 0; j <= b; ++j) {
    FieldElement dpart = 0;
    if (b - j > 0)
      dpart = f.add(dpart, f.mul(f.reduce(b - j), f.mul(f.mul(v0[b - j - 1], dv.first), v1[j])));
    if (j > 0)
      dpart = f.add(dpart, f.mul(f.reduce(j), f.mul(f.mul(v1[j - 1], dv.second), v0[b - j])));
    for (unsigned i = 0; i <= a; ++i)
      row[i * (b + 1) + j] = f.mul(dpart, f.mul(u0[a - i], u1[i]));
  }
  return row;
}

// A direction in the affine chart containing x: vary the coordinate the chart
// normalizes away from.
std::pair<FieldElement, FieldElement> chart_direction(const ProjectivePoint& x) {
  if (x.coords[0] != 0) return {0, 1};
  return {1, 0};
}

// b+1 distinct parameters of P^1: (0:1), (1:0), (1:1), ..., (1:count-2).
std::vector<ProjectivePoint> p1_samples(unsigned count, const PrimeField& f) {
  std::vector<ProjectivePoint> out;
  out.reserve(count);
  out.push_back(make_point({0, 1}, f));
  for (unsigned k = 0; k + 1 < count; ++k) out.push_back(make_point({1, k}, f));
  return out;
}

}  // namespace

/* ------------------------------------------------------------ hyperplanes */

Hyperplane last_coordinate_hyperplane(unsigned n) {
  std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1, 0);
  c[n] = 1;
  return {std::move(c)};
}

Hyperplane hyperplane_through(const LinearSubspace& S, const PrimeField& f) {
  unsigned n = S.ambient_n();
  if (S.pdim() + 1 != n)
    throw DimensionMismatch("subspace is not a hyperplane of its ambient space");
  const DenseMatrix& B = S.basis_rows();
  // RREF basis has n pivot columns; the lone free column determines the form.
  std::vector<bool> is_pivot(n + 1, false);
  std::vector<unsigned> pivot_col(B.rows);
  for (std::size_t r = 0; r < B.rows; ++r) {
    unsigned c = 0;
    while (B.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  unsigned free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<FieldElement> h(n + 1, 0);
  h[free_col] = 1;
  for (std::size_t r = 0; r < B.rows; ++r) h[pivot_col[r]] = f.neg(B.at(r, free_col));
  return {make_point(std::move(h), f).coords};
}

/* ------------------------------------------- hyperplane residual and trace */

Scheme hyperplane_residual(const Scheme& X, const Hyperplane& H, const PrimeField& f) {
  check_hyperplane(X.n, H);
  Scheme out{X.n, {}};
  for (const SchemeComponent& comp : X.components) {
    if (component_ambient(comp) != X.n)
      throw DimensionMismatch("component ambient space does not match the scheme");
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, SimplePoint>) {
            if (!point_in(H, c.P, f)) out.components.push_back(c);
          } else if constexpr (std::is_same_v<T, LineComponent>) {
            if (!line_in(H, c.line, f)) out.components.push_back(c);
          } else if constexpr (std::is_same_v<T, DoublePointRestricted>) {
            if (subspace_in(H, c.T, f)) return;  // removed
            if (point_in(H, c.P, f))
              out.components.push_back(SimplePoint{c.P});
            else
              out.components.push_back(c);
          } else if constexpr (std::is_same_v<T, DegenerateConic>) {
            bool Lin = line_in(H, c.L, f), Min = line_in(H, c.M, f);
            if (Lin && Min) return;  // removed
            if (!Lin && !Min && !point_in(H, c.P, f)) {
              out.components.push_back(c);
              return;
            }
            throw UnrecognizedPosition("degenerate conic partially on the hyperplane");
          } else {  // SundialComponent
            const SundialData& s = c.data;
            if (subspace_in(H, s.T, f)) return;  // removed
            bool Lin = line_in(H, s.L, f), Min = line_in(H, s.M, f);
            if (Lin && Min) {
              out.components.push_back(SimplePoint{s.P});
            } else if (Lin || Min) {
              out.components.push_back(LineComponent{Lin ? s.M : s.L});
            } else if (!point_in(H, s.P, f)) {
              out.components.push_back(c);
            } else {
              throw UnrecognizedPosition(
                  "sundial with embedded point on the hyperplane but no line inside it");
            }
          }
        },
        comp);
  }
  return out;
}

Scheme hyperplane_trace(const Scheme& X, const Hyperplane& H, const PrimeField& f) {
  check_hyperplane(X.n, H);
  if (X.n < 2) throw DimensionTooSmall("trace needs an ambient space of dimension >= 2");
  HyperplaneFrame frame(X.n, H, f);
  Scheme out{X.n - 1, {}};
  for (const SchemeComponent& comp : X.components) {
    if (component_ambient(comp) != X.n)
      throw DimensionMismatch("component ambient space does not match the scheme");
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, SimplePoint>) {
            if (point_in(H, c.P, f)) out.components.push_back(SimplePoint{frame.trace_point(c.P)});
          } else if constexpr (std::is_same_v<T, LineComponent>) {
            if (line_in(H, c.line, f))
              out.components.push_back(LineComponent{frame.trace_line(c.line)});
            else
              out.components.push_back(SimplePoint{frame.trace_point(line_meet(H, c.line, f))});
          } else if constexpr (std::is_same_v<T, DoublePointRestricted>) {
            if (!point_in(H, c.P, f)) return;  // misses H
            out.components.push_back(
                DoublePointRestricted{frame.trace_point(c.P), frame.section(c.T)});
          } else if constexpr (std::is_same_v<T, DegenerateConic>) {
            bool Lin = line_in(H, c.L, f), Min = line_in(H, c.M, f);
            if (Lin && Min) {
              out.components.push_back(DegenerateConic{frame.trace_line(c.L),
                                                       frame.trace_line(c.M),
                                                       frame.trace_point(c.P)});
              return;
            }
            if (!Lin && !Min && !point_in(H, c.P, f)) {
              out.components.push_back(SimplePoint{frame.trace_point(line_meet(H, c.L, f))});
              out.components.push_back(SimplePoint{frame.trace_point(line_meet(H, c.M, f))});
              return;
            }
            throw UnrecognizedPosition("degenerate conic partially on the hyperplane");
          } else {  // SundialComponent
            const SundialData& s = c.data;
            if (subspace_in(H, s.T, f)) {
              out.components.push_back(SundialComponent{SundialData{
                  frame.trace_line(s.L), frame.trace_line(s.M), frame.trace_point(s.P),
                  frame.section(s.T)}});
              return;
            }
            bool Lin = line_in(H, s.L, f), Min = line_in(H, s.M, f);
            if (Lin && Min) {
              out.components.push_back(DegenerateConic{frame.trace_line(s.L),
                                                       frame.trace_line(s.M),
                                                       frame.trace_point(s.P)});
            } else if (Lin || Min) {
              out.components.push_back(LineComponent{frame.trace_line(Lin ? s.L : s.M)});
              out.components.push_back(
                  DoublePointRestricted{frame.trace_point(s.P), frame.section(s.T)});
            } else if (!point_in(H, s.P, f)) {
              out.components.push_back(SimplePoint{frame.trace_point(line_meet(H, s.L, f))});
              out.components.push_back(SimplePoint{frame.trace_point(line_meet(H, s.M, f))});
            } else {
              throw UnrecognizedPosition(
                  "sundial with embedded point on the hyperplane but no line inside it");
            }
          }
        },
        comp);
  }
  return out;
}

/* ---------------------------------------------- quadric residual and trace */

Scheme quadric_residual(const Scheme& X, const PrimeField& f) {
  if (X.n != 3) throw DimensionMismatch("the fixed quadric lives in P^3");
  Scheme out{3, {}};
  for (const SchemeComponent& comp : X.components) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, SimplePoint>) {
            if (!on_quadric(c.P, f)) out.components.push_back(c);
          } else if constexpr (std::is_same_v<T, LineComponent>) {
            if (!meet_quadric(c.line, f).contained) out.components.push_back(c);
          } else if constexpr (std::is_same_v<T, DoublePointRestricted>) {
            if (!on_quadric(c.P, f)) {
              out.components.push_back(c);
              return;
            }
            if (c.T.pdim() != 3)
              throw UnrecognizedPosition("restricted double point on the quadric");
            out.components.push_back(SimplePoint{c.P});
          } else if constexpr (std::is_same_v<T, DegenerateConic>) {
            bool Lon = meet_quadric(c.L, f).contained, Mon = meet_quadric(c.M, f).contained;
            if (Lon && Mon)
              throw UnrecognizedPosition("degenerate conic contained in the quadric");
            if (Lon)
              out.components.push_back(LineComponent{c.M});
            else if (Mon)
              out.components.push_back(LineComponent{c.L});
            else
              out.components.push_back(c);
          } else {  // SundialComponent
            const SundialData& s = c.data;
            SundialQuadricPosition pos = classify_sundial(s, f);
            if (pos.L_on && pos.M_on)
              throw UnrecognizedPosition("sundial contained in the quadric");
            if (pos.L_on || pos.M_on) {
              out.components.push_back(LineComponent{pos.L_on ? s.M : s.L});
            } else if (pos.P_on) {
              out.components.push_back(DegenerateConic{s.L, s.M, s.P});
            } else {
              out.components.push_back(c);
            }
          }
        },
        comp);
  }
  return out;
}

BidegreeSystem quadric_trace(const Scheme& X, unsigned a, unsigned b, const PrimeField& f) {
  if (X.n != 3) throw DimensionMismatch("the fixed quadric lives in P^3");
  BidegreeSystem out{a, b, {}};
  auto push_point = [&](const ProjectivePoint& p) {
    out.components.push_back(point_on_surface(p, f));
  };
  for (const SchemeComponent& comp : X.components) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, SimplePoint>) {
            if (on_quadric(c.P, f)) push_point(c.P);
          } else if constexpr (std::is_same_v<T, LineComponent>) {
            LineQuadricMeet m = meet_quadric(c.line, f);
            if (m.contained) {
              out.components.push_back(ruling_trace(m));
            } else {
              push_point(m.p1);
              push_point(m.p2);
            }
          } else if constexpr (std::is_same_v<T, DoublePointRestricted>) {
            if (!on_quadric(c.P, f)) return;
            if (c.T.pdim() != 3)
              throw UnrecognizedPosition("restricted double point on the quadric");
            SimplePointP1P1 s = point_on_surface(c.P, f);
            out.components.push_back(DoublePointP1P1{s.u, s.v});
          } else if constexpr (std::is_same_v<T, DegenerateConic>) {
            LineQuadricMeet mL = meet_quadric(c.L, f), mM = meet_quadric(c.M, f);
            if (mL.contained && mM.contained)
              throw UnrecognizedPosition("degenerate conic contained in the quadric");
            if (mL.contained || mM.contained) {
              const LineQuadricMeet& on = mL.contained ? mL : mM;
              const LineQuadricMeet& off = mL.contained ? mM : mL;
              out.components.push_back(ruling_trace(on));
              push_point(off.p1);
              push_point(off.p2);
            } else if (on_quadric(c.P, f)) {
              push_point(c.P);
              push_point(other_meet(mL, c.P));
              push_point(other_meet(mM, c.P));
            } else {
              push_point(mL.p1);
              push_point(mL.p2);
              push_point(mM.p1);
              push_point(mM.p2);
            }
          } else {  // SundialComponent
            const SundialData& s = c.data;
            SundialQuadricPosition pos = classify_sundial(s, f);
            if (pos.L_on && pos.M_on)
              throw UnrecognizedPosition("sundial contained in the quadric");
            if (pos.L_on || pos.M_on) {
              const LineQuadricMeet& on = pos.L_on ? pos.mL : pos.mM;
              const LineQuadricMeet& off = pos.L_on ? pos.mM : pos.mL;
              out.components.push_back(ruling_trace(on));
              push_point(off.p1);
              push_point(off.p2);
              SimplePointP1P1 r = point_on_surface(s.P, f);
              out.components.push_back(DoublePointP1P1{r.u, r.v});
            } else if (pos.P_on) {
              push_point(other_meet(pos.mL, s.P));
              push_point(other_meet(pos.mM, s.P));
              SimplePointP1P1 r = point_on_surface(s.P, f);
              out.components.push_back(DoublePointP1P1{r.u, r.v});
            } else {
              push_point(pos.mL.p1);
              push_point(pos.mL.p2);
              push_point(pos.mM.p1);
              push_point(pos.mM.p2);
            }
          }
        },
        comp);
  }
  return out;
}

/* ------------------------------------------------------ bidegree dimension */

std::uint64_t bidegree_dimension(const BidegreeSystem& S, const PrimeField& f) {
  unsigned a = S.a, b = S.b;
  if (f.p() < std::max(a, b) + 2)
    throw PrimeTooSmall("prime too small for the requested bidegree");
  std::size_t cols = static_cast<std::size_t>(a + 1) * (b + 1);
  std::vector<std::vector<FieldElement>> rows;
  for (const BidegreeComponent& comp : S.components) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, SimplePointP1P1>) {
            check_p1(c.u);
            check_p1(c.v);
            rows.push_back(surface_eval_row(a, b, c.u, c.v, f));
          } else if constexpr (std::is_same_v<T, DoublePointP1P1>) {
            check_p1(c.u);
            check_p1(c.v);
            rows.push_back(surface_eval_row(a, b, c.u, c.v, f));
            rows.push_back(surface_du_row(a, b, c.u, c.v, chart_direction(c.u), f));
            rows.push_back(surface_dv_row(a, b, c.u, c.v, chart_direction(c.v), f));
          } else if constexpr (std::is_same_v<T, RulingLineA>) {
            check_p1(c.u);
            for (const ProjectivePoint& v : p1_samples(b + 1, f))
              rows.push_back(surface_eval_row(a, b, c.u, v, f));
          } else {  // RulingLineB
            check_p1(c.v);
            for (const ProjectivePoint& u : p1_samples(a + 1, f))
              rows.push_back(surface_eval_row(a, b, u, c.v, f));
          }
        },
        comp);
  }
  DenseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    std::copy(rows[r].begin(), rows[r].end(), m.row(r));
  return cols - rank_auto(std::move(m), f);
}

/* --------------------------------------------------------- the inequality */

CastelnuovoReport check_inequality(const Scheme& X, const Hypersurface& Y, unsigned d,
                                   const PrimeField& f) {
  CastelnuovoReport rep;
  rep.dim_X_d = ideal_dimension(X, d, f);
  if (const auto* H = std::get_if<Hyperplane>(&Y)) {
    if (d < 1) throw InvalidDimension("the hyperplane inequality needs d >= 1");
    rep.dim_res = ideal_dimension(hyperplane_residual(X, *H, f), d - 1, f);
    rep.dim_trace = ideal_dimension(hyperplane_trace(X, *H, f), d, f);
  } else {
    if (d < 2) throw InvalidDimension("the quadric inequality needs d >= 2");
    rep.dim_res = ideal_dimension(quadric_residual(X, f), d - 2, f);
    rep.dim_trace = bidegree_dimension(quadric_trace(X, d, d, f), f);
  }
  rep.inequality_holds = rep.dim_X_d <= rep.dim_res + rep.dim_trace;
  return rep;
}

}  // namespace sundial
