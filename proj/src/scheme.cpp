#include "sundial/scheme.hpp"

#include "sundial/counting.hpp"

namespace sundial {

namespace {

// P plus pdim(T) rows of T's basis that complete it to a basis of T: the
// derivative directions of the restricted double point.
std::vector<std::vector<FieldElement>> tangent_directions(const ProjectivePoint& P,
                                                          const LinearSubspace& T,
                                                          const PrimeField& f) {
  EchelonForm ech(T.basis_rows().cols, f);
  ech.insert(P.coords);
  std::vector<std::vector<FieldElement>> dirs;
  const DenseMatrix& b = T.basis_rows();
  for (std::size_t r = 0; r < b.rows; ++r) {
    std::vector<FieldElement> row(b.row(r), b.row(r) + b.cols);
    if (ech.insert(row)) dirs.push_back({b.row(r), b.row(r) + b.cols});
  }
  return dirs;
}

void append_line_rows(std::vector<std::vector<FieldElement>>& rows, const Line& l,
                      const MonomialBasis& b, const PrimeField& f) {
  // d+1 distinct points: b, a, a+b, ..., a+(d-1)b  (distinct when p >= d+2)
  rows.push_back(evaluation_row(b, l.b.coords, f));
  std::vector<FieldElement> pt(l.a.coords.size());
  for (unsigned theta = 0; theta < b.d; ++theta) {
    for (std::size_t i = 0; i < pt.size(); ++i)
      pt[i] = f.add(l.a.coords[i], f.mul(f.reduce(theta), l.b.coords[i]));
    rows.push_back(evaluation_row(b, pt, f));
  }
}

void append_double_point_rows(std::vector<std::vector<FieldElement>>& rows,
                              const DoublePointRestricted& dp, const MonomialBasis& b,
                              const PrimeField& f) {
  if (!dp.T.contains(dp.P, f))
    throw ConstructionFailure("double point off its restriction space");
  rows.push_back(evaluation_row(b, dp.P.coords, f));
  for (const auto& v : tangent_directions(dp.P, dp.T, f))
    rows.push_back(derivative_row(b, dp.P.coords, v, f));
}

}  // namespace

unsigned component_ambient(const SchemeComponent& c) {
  return std::visit(
      [](const auto& x) -> unsigned {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SimplePoint>) return x.P.n();
        else if constexpr (std::is_same_v<T, DoublePointRestricted>) return x.P.n();
        else if constexpr (std::is_same_v<T, LineComponent>) return x.line.n();
        else if constexpr (std::is_same_v<T, DegenerateConic>) return x.P.n();
        else return x.data.P.n();
      },
      c);
}

DegenerateConic make_degenerate_conic(const Line& L, const Line& M, const PrimeField& f) {
  return DegenerateConic{L, M, line_intersection(L, M, f)};
}

void validate_sundial(const SundialData& s, const PrimeField& f) {
  if (s.L == s.M) throw ConstructionFailure("sundial lines coincide");
  if (!line_contains(s.L, s.P, f) || !line_contains(s.M, s.P, f))
    throw ConstructionFailure("embedded point off a sundial line");
  LinearSubspace plane = join(line_span(s.L, f), line_span(s.M, f), f);
  if (plane.pdim() != 2) throw ConstructionFailure("sundial lines not coplanar-distinct");
  if (s.T.pdim() != 3) throw ConstructionFailure("sundial 3-space has wrong dimension");
  if (!s.T.contains(plane, f))
    throw ConstructionFailure("sundial 3-space misses the lines' plane");
}

std::vector<std::vector<FieldElement>> component_rows(const SchemeComponent& c,
                                                      const MonomialBasis& b,
                                                      const PrimeField& f) {
  if (component_ambient(c) != b.n) throw DimensionMismatch("component/basis ambient differ");
  if (f.p() < b.d + 2) throw PrimeTooSmall("need p >= d+2 for distinct line samples");
  std::vector<std::vector<FieldElement>> rows;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SimplePoint>) {
          rows.push_back(evaluation_row(b, x.P.coords, f));
        } else if constexpr (std::is_same_v<T, DoublePointRestricted>) {
          append_double_point_rows(rows, x, b, f);
        } else if constexpr (std::is_same_v<T, LineComponent>) {
          append_line_rows(rows, x.line, b, f);
        } else if constexpr (std::is_same_v<T, DegenerateConic>) {
          if (!line_contains(x.L, x.P, f) || !line_contains(x.M, x.P, f) || x.L == x.M)
            throw ConstructionFailure("degenerate conic invariants violated");
          append_line_rows(rows, x.L, b, f);
          append_line_rows(rows, x.M, b, f);
        } else {
          validate_sundial(x.data, f);
          append_line_rows(rows, x.data.L, b, f);
          append_line_rows(rows, x.data.M, b, f);
          append_double_point_rows(rows, DoublePointRestricted{x.data.P, x.data.T}, b, f);
        }
      },
      c);
  return rows;
}

ConditionMatrix condition_matrix(const Scheme& X, unsigned d, const PrimeField& f) {
  MonomialBasis b = monomial_basis(X.n, d);
  std::vector<std::vector<FieldElement>> all;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < X.components.size(); ++i) {
    for (auto& r : component_rows(X.components[i], b, f)) {
      all.push_back(std::move(r));
      source.push_back(i);
    }
  }
  ConditionMatrix cm;
  cm.matrix = DenseMatrix(all.size(), b.size());
  for (std::size_t r = 0; r < all.size(); ++r)
    std::copy(all[r].begin(), all[r].end(), cm.matrix.row(r));
  cm.row_source = std::move(source);
  return cm;
}

std::uint64_t hilbert_function(const Scheme& X, unsigned d, const PrimeField& f) {
  if (f.p() < d + 2) throw PrimeTooSmall("need p >= d+2");
  return rank_auto(condition_matrix(X, d, f).matrix, f);
}

std::uint64_t ideal_dimension(const Scheme& X, unsigned d, const PrimeField& f) {
  return binomial(d + X.n, X.n) - hilbert_function(X, d, f);
}

Scheme random_configuration(unsigned n, unsigned s, unsigned l, const PrimeField& f,
                            Rng& rng) {
  Scheme X{n, {}};
  for (unsigned i = 0; i < s; ++i)
    X.components.push_back(SundialComponent{make_generic_sundial(n, f, rng)});
  for (unsigned i = 0; i < l; ++i)
    X.components.push_back(LineComponent{make_generic_line(n, f, rng)});
  return X;
}

Scheme degeneration_fiber(const Line& L1, const Line& M, FieldElement lambda,
                          const PrimeField& f) {
  LinearSubspace T = join(line_span(L1, f), line_span(M, f), f);
  if (T.pdim() != 3) throw NotSkew("degeneration needs skew input lines");
  const ProjectivePoint& P = M.a;   // the limit point, fixed on M
  const ProjectivePoint& Q1 = L1.a;
  const ProjectivePoint& B = L1.b;
  // moving point (1-lambda) P + lambda Q1 walks from Q1 (lambda=1) to P
  std::vector<FieldElement> mv(P.coords.size());
  const FieldElement om = f.sub(1, lambda % f.p());
  for (std::size_t i = 0; i < mv.size(); ++i)
    mv[i] = f.add(f.mul(om, P.coords[i]), f.mul(lambda % f.p(), Q1.coords[i]));
  Line Ll = line_through(make_point(std::move(mv), f), B, f);

  Scheme fiber{L1.n(), {}};
  if (lambda % f.p() == 0) {
    fiber.components = {LineComponent{Ll}, LineComponent{M},
                        DoublePointRestricted{P, T}};
    return fiber;
  }
  if (join(line_span(Ll, f), line_span(M, f), f).pdim() != 3)
    throw ConstructionFailure("fiber lines degenerated to a meeting pair");
  fiber.components = {LineComponent{Ll}, LineComponent{M}};
  return fiber;
}

}  // namespace sundial
