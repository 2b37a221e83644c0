#include "sundial/geometry.hpp"

#include <algorithm>

namespace sundial {

namespace {

constexpr int kGenericRetries = 5;

// In-place reduced row echelon form; returns the rank.  Pivots are leading
// 1s with zeros above and below, rows ordered by pivot column, so the result
// is the canonical basis of the row space.
std::size_t rref(DenseMatrix& m, const PrimeField& f) {
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
    std::size_t pr = rk;
    while (pr < m.rows && m.at(pr, col) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != rk) std::swap_ranges(m.row(pr), m.row(pr) + m.cols, m.row(rk));
    f.scale(m.row(rk), m.cols, f.inv(m.at(rk, col)));
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rk) continue;
      FieldElement v = m.at(r, col);
      if (v) f.axpy(m.row(r), m.row(rk), m.cols, f.neg(v));
    }
    ++rk;
  }
  return rk;
}

// One nonzero kernel vector of m (empty if the kernel is trivial).
std::vector<FieldElement> kernel_vector(DenseMatrix m, const PrimeField& f) {
  std::size_t rk = rref(m, f);
  if (rk == m.cols) return {};
  std::vector<std::size_t> pivot_col(rk);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (m.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<FieldElement> x(m.cols, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < rk; ++r) x[pivot_col[r]] = f.neg(m.at(r, free_col));
  return x;
}

ProjectivePoint random_ambient_point(unsigned n, const PrimeField& f, Rng& rng) {
  for (;;) {
    std::vector<FieldElement> c(n + 1);
    bool nonzero = false;
    for (auto& x : c) {
      x = rng.below(f.p());
      nonzero |= (x != 0);
    }
    if (nonzero) return make_point(std::move(c), f);
  }
}

}  // namespace

/* ---------------------------------------------------------------- points */

ProjectivePoint make_point(std::vector<FieldElement> coords, const PrimeField& f) {
  if (coords.empty()) throw EmptyInput("point needs coordinates");
  std::size_t lead = 0;
  while (lead < coords.size() && coords[lead] % f.p() == 0) ++lead;
  if (lead == coords.size()) throw ConstructionFailure("zero tuple is not a projective point");
  FieldElement s = f.inv(coords[lead]);
  for (auto& c : coords) c = f.mul(c % f.p(), s);
  return ProjectivePoint{std::move(coords)};
}

/* ------------------------------------------------------------- subspaces */

LinearSubspace::LinearSubspace(unsigned ambient_n, DenseMatrix rows, const PrimeField& f)
    : ambient_n_(ambient_n) {
  if (rows.cols != ambient_n + 1) throw DimensionMismatch("basis width != ambient + 1");
  if (rows.rows == 0) throw EmptyInput("subspace needs at least one spanning vector");
  std::size_t rk = rref(rows, f);
  if (rk == 0) throw ConstructionFailure("spanning vectors are all zero");
  basis_ = DenseMatrix(rk, rows.cols);
  std::copy(rows.entries.begin(), rows.entries.begin() + rk * rows.cols,
            basis_.entries.begin());
}

bool LinearSubspace::contains(const ProjectivePoint& p, const PrimeField& f) const {
  if (p.coords.size() != basis_.cols) throw DimensionMismatch("point/subspace ambient differ");
  std::vector<FieldElement> v = p.coords;
  for (std::size_t r = 0; r < basis_.rows; ++r) {
    std::size_t c = 0;
    while (basis_.at(r, c) == 0) ++c;  // pivot (leading 1)
    if (v[c]) f.axpy(v.data(), basis_.row(r), basis_.cols, f.neg(v[c]));
  }
  return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x == 0; });
}

bool LinearSubspace::contains(const LinearSubspace& other, const PrimeField& f) const {
  for (std::size_t r = 0; r < other.basis_.rows; ++r) {
    std::vector<FieldElement> row(other.basis_.row(r), other.basis_.row(r) + other.basis_.cols);
    if (!contains(ProjectivePoint{std::move(row)}, f)) return false;
  }
  return true;
}

LinearSubspace span(const std::vector<ProjectivePoint>& points, const PrimeField& f) {
  if (points.empty()) throw EmptyInput("span of nothing");
  const std::size_t width = points[0].coords.size();
  DenseMatrix m(points.size(), width);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].coords.size() != width) throw DimensionMismatch("mixed ambient dimensions");
    std::copy(points[i].coords.begin(), points[i].coords.end(), m.row(i));
  }
  return LinearSubspace(static_cast<unsigned>(width) - 1, std::move(m), f);
}

LinearSubspace line_span(const Line& l, const PrimeField& f) { return span({l.a, l.b}, f); }

LinearSubspace join(const LinearSubspace& s1, const LinearSubspace& s2, const PrimeField& f) {
  if (s1.ambient_n() != s2.ambient_n()) throw DimensionMismatch("join across ambients");
  const DenseMatrix &a = s1.basis_rows(), &b = s2.basis_rows();
  DenseMatrix m(a.rows + b.rows, a.cols);
  std::copy(a.entries.begin(), a.entries.end(), m.entries.begin());
  std::copy(b.entries.begin(), b.entries.end(), m.entries.begin() + a.rows * a.cols);
  return LinearSubspace(s1.ambient_n(), std::move(m), f);
}

LinearSubspace whole_space(unsigned n, const PrimeField& f) {
  DenseMatrix id(n + 1, n + 1);
  for (unsigned i = 0; i <= n; ++i) id.at(i, i) = 1;
  return LinearSubspace(n, std::move(id), f);
}

LinearSubspace intersect_coordinate_hyperplane(const LinearSubspace& S, unsigned coord,
                                               const PrimeField& f) {
  const DenseMatrix& b = S.basis_rows();
  if (coord >= b.cols) throw DimensionMismatch("hyperplane coordinate out of range");
  std::size_t elim = b.rows;
  for (std::size_t r = 0; r < b.rows; ++r) {
    if (b.at(r, coord) != 0) { elim = r; break; }
  }
  if (elim == b.rows) return S;  // S already inside the hyperplane
  if (b.rows == 1) throw ConstructionFailure("point off the hyperplane: empty intersection");
  DenseMatrix m(b.rows - 1, b.cols);
  const FieldElement inv_e = f.inv(b.at(elim, coord));
  std::size_t out = 0;
  for (std::size_t r = 0; r < b.rows; ++r) {
    if (r == elim) continue;
    std::copy(b.row(r), b.row(r) + b.cols, m.row(out));
    FieldElement v = m.at(out, coord);
    if (v) f.axpy(m.row(out), b.row(elim), b.cols, f.neg(f.mul(v, inv_e)));
    ++out;
  }
  return LinearSubspace(S.ambient_n(), std::move(m), f);
}

/* ----------------------------------------------------------------- lines */

Line line_through(const ProjectivePoint& p, const ProjectivePoint& q, const PrimeField& f) {
  LinearSubspace s = span({p, q}, f);
  if (s.pdim() != 1) throw ConstructionFailure("coincident points span no line");
  const DenseMatrix& b = s.basis_rows();
  return Line{ProjectivePoint{{b.row(0), b.row(0) + b.cols}},
              ProjectivePoint{{b.row(1), b.row(1) + b.cols}}};
}

bool line_contains(const Line& l, const ProjectivePoint& p, const PrimeField& f) {
  return line_span(l, f).contains(p, f);
}

ProjectivePoint line_intersection(const Line& l1, const Line& l2, const PrimeField& f) {
  unsigned pd = join(line_span(l1, f), line_span(l2, f), f).pdim();
  if (pd == 1) throw ConstructionFailure("lines coincide");
  if (pd != 2) throw ConstructionFailure("lines are skew");
  // transpose of the stacked spanning rows: its kernel gives the dependency
  const ProjectivePoint* pts[4] = {&l1.a, &l1.b, &l2.a, &l2.b};
  const std::size_t width = l1.a.coords.size();
  DenseMatrix t(width, 4);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < width; ++r) t.at(r, c) = pts[c]->coords[r];
  std::vector<FieldElement> k = kernel_vector(std::move(t), f);
  std::vector<FieldElement> point(width, 0);
  for (std::size_t i = 0; i < width; ++i)
    point[i] = f.add(f.mul(k[0], l1.a.coords[i]), f.mul(k[1], l1.b.coords[i]));
  return make_point(std::move(point), f);
}

/* ------------------------------------------------------ random sampling */

ProjectivePoint sample_point(const LinearSubspace& S, const PrimeField& f, Rng& rng) {
  const DenseMatrix& b = S.basis_rows();
  for (;;) {
    std::vector<FieldElement> v(b.cols, 0);
    for (std::size_t r = 0; r < b.rows; ++r) {
      FieldElement c = rng.below(f.p());
      if (c) f.axpy(v.data(), b.row(r), b.cols, c);
    }
    if (std::any_of(v.begin(), v.end(), [](FieldElement x) { return x != 0; }))
      return make_point(std::move(v), f);
  }
}

Line make_generic_line(unsigned n, const PrimeField& f, Rng& rng) {
  for (int t = 0; t < kGenericRetries; ++t) {
    ProjectivePoint p = random_ambient_point(n, f, rng);
    ProjectivePoint q = random_ambient_point(n, f, rng);
    if (p == q) continue;
    return line_through(p, q, f);
  }
  throw ConstructionFailure("could not sample two distinct points");
}

SundialData make_generic_sundial(unsigned n, const PrimeField& f, Rng& rng) {
  if (n < 3) throw DimensionTooSmall("sundials need ambient dimension >= 3");
  for (int t = 0; t < kGenericRetries; ++t) {
    ProjectivePoint P = random_ambient_point(n, f, rng);
    ProjectivePoint X1 = random_ambient_point(n, f, rng);
    ProjectivePoint X2 = random_ambient_point(n, f, rng);
    LinearSubspace plane = span({P, X1, X2}, f);
    if (plane.pdim() != 2) continue;
    if (n == 3) {
      return SundialData{line_through(P, X1, f), line_through(P, X2, f), P, whole_space(3, f)};
    }
    ProjectivePoint X3 = random_ambient_point(n, f, rng);
    LinearSubspace T = span({P, X1, X2, X3}, f);
    if (T.pdim() != 3) continue;
    return SundialData{line_through(P, X1, f), line_through(P, X2, f), P, std::move(T)};
  }
  throw ConstructionFailure("generic sundial sampling kept degenerating");
}

/* --------------------------------------------------------------- quadric */

FieldElement quadric_value(const ProjectivePoint& p, const PrimeField& f) {
  if (p.coords.size() != 4) throw DimensionMismatch("quadric lives in P^3");
  const auto& x = p.coords;
  return f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2]));
}

bool on_quadric(const ProjectivePoint& p, const PrimeField& f) {
  return quadric_value(p, f) == 0;
}

ProjectivePoint segre_point(const ProjectivePoint& u, const ProjectivePoint& v,
                            const PrimeField& f) {
  if (u.coords.size() != 2 || v.coords.size() != 2)
    throw DimensionMismatch("factors live in P^1");
  return make_point({f.mul(u.coords[0], v.coords[0]), f.mul(u.coords[0], v.coords[1]),
                     f.mul(u.coords[1], v.coords[0]), f.mul(u.coords[1], v.coords[1])},
                    f);
}

ProjectivePoint quadric_param_u(const ProjectivePoint& p, const PrimeField& f) {
  if (!on_quadric(p, f)) throw UnrecognizedPosition("point is off the quadric");
  const auto& x = p.coords;
  if (x[0] || x[2]) return make_point({x[0], x[2]}, f);
  return make_point({x[1], x[3]}, f);
}

ProjectivePoint quadric_param_v(const ProjectivePoint& p, const PrimeField& f) {
  if (!on_quadric(p, f)) throw UnrecognizedPosition("point is off the quadric");
  const auto& x = p.coords;
  if (x[0] || x[1]) return make_point({x[0], x[1]}, f);
  return make_point({x[2], x[3]}, f);
}

Line ruling_line(Ruling family, const ProjectivePoint& param, const PrimeField& f) {
  if (param.coords.size() != 2) throw DimensionMismatch("ruling parameter lives in P^1");
  const FieldElement c0 = param.coords[0], c1 = param.coords[1];
  if (family == Ruling::A)
    return line_through(make_point({c0, 0, c1, 0}, f), make_point({0, c0, 0, c1}, f), f);
  return line_through(make_point({c0, c1, 0, 0}, f), make_point({0, 0, c0, c1}, f), f);
}

LineQuadricMeet meet_quadric(const Line& l, const PrimeField& f) {
  const ProjectivePoint &A = l.a, &B = l.b;
  const FieldElement qa = quadric_value(A, f), qb = quadric_value(B, f);
  // polar form of x0*x3 - x1*x2 at (A, B)
  const auto &a = A.coords, &b = B.coords;
  const FieldElement bil =
      f.sub(f.add(f.mul(a[0], b[3]), f.mul(a[3], b[0])),
            f.add(f.mul(a[1], b[2]), f.mul(a[2], b[1])));

  auto at = [&](FieldElement tau) {
    std::vector<FieldElement> c(4);
    for (int i = 0; i < 4; ++i) c[i] = f.add(a[i], f.mul(tau, b[i]));
    return make_point(std::move(c), f);
  };

  LineQuadricMeet out;
  if (qa == 0 && qb == 0 && bil == 0) {
    out.contained = true;
    ProjectivePoint ua = quadric_param_u(A, f), ub = quadric_param_u(B, f);
    if (ua == ub) {
      out.family = Ruling::A;
      out.param = ua;
    } else {
      out.family = Ruling::B;
      out.param = quadric_param_v(A, f);
    }
    return out;
  }
  if (qb == 0) {
    // B is one meeting point; the other comes from the linear term
    if (bil == 0) throw UnrecognizedPosition("line tangent to the quadric");
    out.p1 = at(f.neg(f.mul(qa, f.inv(bil))));
    out.p2 = B;
    return out;
  }
  // roots of qb*tau^2 + bil*tau + qa
  const FieldElement disc = f.sub(f.mul(bil, bil), f.mul(4 % f.p(), f.mul(qa, qb)));
  if (disc == 0) throw UnrecognizedPosition("line tangent to the quadric");
  auto root = f.sqrt(disc);
  if (!root) throw UnrecognizedPosition("line meets the quadric irrationally");
  FieldElement r = std::min(*root, f.neg(*root));  // deterministic root choice
  const FieldElement half = f.inv(f.mul(2 % f.p(), qb));
  out.p1 = at(f.mul(f.sub(r, bil), half));
  out.p2 = at(f.mul(f.sub(f.neg(r), bil), half));
  return out;
}

}  // namespace sundial
