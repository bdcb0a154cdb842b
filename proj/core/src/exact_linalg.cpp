#include "tropdeg/exact_linalg.hpp"

#include <utility>

namespace tropdeg {

namespace {

// Fraction-free row echelon form restricted to the first `elim_cols` columns
// (the remaining columns are carried along, e.g. a right-hand side).  Every
// entry stays an integer minor of the input, so the divisions are exact.
struct Echelon {
  IntMatrix m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

Echelon fraction_free_echelon(IntMatrix m, std::size_t elim_cols) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Int prev = 1;
  Int t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(t1.get_mpz_t(), m(i, j).get_mpz_t(), m(r, c).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    // Rows above the pivot row keep their entries; only the trailing block
    // participates in later steps.
    prev = m(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

IntMatrix scaled_integer_rows(const ExactMatrix& a, Int& scale_product) {
  IntMatrix out(a.rows(), a.cols());
  scale_product = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rat scaled = a(r, c) * l;
      out(r, c) = scaled.get_num();
    }
    scale_product *= l;
  }
  return out;
}

// Back substitution on an echelon system whose last column is the scaled
// right-hand side.  Free variables are zero.
RatVec back_substitute(const Echelon& e, std::size_t unknowns, const Int& rhs_scale) {
  RatVec x(unknowns);
  const std::size_t rhs = e.m.cols() - 1;
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const std::size_t c = e.pivot_cols[k];
    Rat acc(e.m(k, rhs));
    for (std::size_t j = c + 1; j < unknowns; ++j)
      if (e.m(k, j) != 0 && x[j] != 0) acc -= Rat(e.m(k, j)) * x[j];
    x[c] = acc / Rat(e.m(k, c));
  }
  if (rhs_scale != 1)
    for (auto& xi : x) xi /= Rat(rhs_scale);
  return x;
}

IntMatrix augment(const IntMatrix& a, const RatVec& b, Int& rhs_scale) {
  if (b.size() != a.rows()) throw LinalgError("right-hand side length mismatch");
  rhs_scale = common_denominator(b);
  IntMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    const Rat scaled = b[r] * rhs_scale;
    aug(r, a.cols()) = scaled.get_num();
  }
  return aug;
}

Int abs_value(const Int& z) { return z < 0 ? Int(-z) : z; }

}  // namespace

IntVec multiply(const IntMatrix& a, const IntVec& x) {
  if (x.size() != a.cols()) throw LinalgError("matrix-vector shape mismatch");
  IntVec out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

RatVec multiply(const ExactMatrix& a, const RatVec& x) {
  if (x.size() != a.cols()) throw LinalgError("matrix-vector shape mismatch");
  RatVec out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

IntVec multiply(const IntVec& x, const IntMatrix& a) {
  if (x.size() != a.rows()) throw LinalgError("vector-matrix shape mismatch");
  IntVec out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += x[r] * a(r, c);
  }
  return out;
}

ExactMatrix to_rational(const IntMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

std::optional<RatVec> solve_unique(const IntMatrix& a, const RatVec& b) {
  if (!a.square()) throw LinalgError("solve_unique needs a square matrix");
  Int rhs_scale;
  const Echelon e = fraction_free_echelon(augment(a, b, rhs_scale), a.cols());
  if (e.pivot_cols.size() < a.cols()) return std::nullopt;
  return back_substitute(e, a.cols(), rhs_scale);
}

std::optional<RatVec> solve_unique(const ExactMatrix& a, const RatVec& b) {
  if (!a.square()) throw LinalgError("solve_unique needs a square matrix");
  if (b.size() != a.rows()) throw LinalgError("right-hand side length mismatch");
  // Scaling a row of [A | b] by a positive integer leaves the solution fixed.
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Int unused;
  const IntMatrix scaled = scaled_integer_rows(aug, unused);
  const Echelon e = fraction_free_echelon(scaled, a.cols());
  if (e.pivot_cols.size() < a.cols()) return std::nullopt;
  return back_substitute(e, a.cols(), Int(1));
}

LinearSolve solve_system(const IntMatrix& a, const RatVec& b) {
  Int rhs_scale;
  const Echelon e = fraction_free_echelon(augment(a, b, rhs_scale), a.cols());
  LinearSolve out;
  for (std::size_t r = e.pivot_cols.size(); r < a.rows(); ++r)
    if (e.m(r, a.cols()) != 0) return out;
  out.status = e.pivot_cols.size() == a.cols() ? LinearSolve::Status::Unique : LinearSolve::Status::Underdetermined;
  out.x = back_substitute(e, a.cols(), rhs_scale);
  return out;
}

std::optional<RatVec> solve_any(const IntMatrix& a, const RatVec& b) {
  LinearSolve s = solve_system(a, b);
  if (s.status == LinearSolve::Status::Inconsistent) return std::nullopt;
  return std::move(s.x);
}

Int determinant(const IntMatrix& a) {
  if (!a.square()) throw LinalgError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  const Echelon e = fraction_free_echelon(a, n);
  if (e.pivot_cols.size() < n) return 0;
  return e.sign * e.m(n - 1, n - 1);
}

Rat determinant(const ExactMatrix& a) {
  if (!a.square()) throw LinalgError("determinant of a non-square matrix");
  Int scale;
  const IntMatrix scaled = scaled_integer_rows(a, scale);
  return Rat(determinant(scaled)) / Rat(scale);
}

std::size_t rank(const IntMatrix& a) { return fraction_free_echelon(a, a.cols()).pivot_cols.size(); }

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Elementary operations on the Smith working state.  Column operations are
// mirrored on V (right multiplication) and inversely on V^-1 (left).
struct SmithState {
  IntMatrix d, u, v, vinv;

  void add_row(std::size_t target, std::size_t source, const Int& q) {  // row_t += q row_s
    for (std::size_t c = 0; c < d.cols(); ++c) d(target, c) += q * d(source, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(target, c) += q * u(source, c);
  }
  void add_col(std::size_t target, std::size_t source, const Int& q) {  // col_t += q col_s
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, target) += q * d(r, source);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, target) += q * v(r, source);
    for (std::size_t c = 0; c < vinv.cols(); ++c) vinv(source, c) -= q * vinv(target, c);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    vinv.swap_rows(a, b);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(r, c) = -d(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithState s{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  Int q;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool any = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s.d(i, j) != 0 && (pr == m || mpz_cmpabs(s.d(i, j).get_mpz_t(), s.d(pr, pc).get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == m) break;
      any = true;
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.d(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s.d(i, t).get_mpz_t(), s.d(t, t).get_mpz_t());
        s.add_row(i, t, -q);
        if (s.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.d(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s.d(t, j).get_mpz_t(), s.d(t, t).get_mpz_t());
        s.add_col(j, t, -q);
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s.d(i, j).get_mpz_t(), s.d(t, t).get_mpz_t())) {
            s.add_row(t, i, Int(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!any) break;
    if (s.d(t, t) < 0) s.negate_row(t);
  }

  SmithForm out;
  out.rank = t;
  out.d = std::move(s.d);
  out.u = std::move(s.u);
  out.v = std::move(s.v);
  out.v_inverse = std::move(s.vinv);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Int q;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m(i, c) != 0 && (p == rows || mpz_cmpabs(m(i, c).get_mpz_t(), m(p, c).get_mpz_t()) < 0)) p = i;
      if (p == rows) break;
      m.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix LatticeBasis::as_rows() const { return IntMatrix::from_rows(vectors, ambient_dim); }

LatticeBasis saturate(std::span<const IntVec> generators, std::size_t ambient_dim) {
  LatticeBasis out{ambient_dim, {}};
  if (generators.empty()) return out;
  const SmithForm snf = smith_normal_form(IntMatrix::from_rows(generators, ambient_dim));
  IntMatrix rows(snf.rank, ambient_dim);
  for (std::size_t i = 0; i < snf.rank; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) rows(i, j) = snf.v_inverse(i, j);
  const IntMatrix hnf = hermite_normal_form(rows);
  for (std::size_t i = 0; i < hnf.rows(); ++i) out.vectors.push_back(hnf.row(i));
  return out;
}

LatticeBasis saturate(const LatticeBasis& basis) { return saturate(basis.vectors, basis.ambient_dim); }

std::optional<IntVec> lattice_coordinates(const LatticeBasis& basis, const IntVec& point) {
  if (point.size() != basis.ambient_dim) throw LinalgError("point dimension mismatch");
  if (basis.vectors.empty()) {
    if (is_zero(point)) return IntVec{};
    return std::nullopt;
  }
  const IntMatrix cols = IntMatrix::from_columns(basis.vectors, basis.ambient_dim);
  const auto x = solve_any(cols, to_rat_vec(point));
  if (!x) return std::nullopt;
  IntVec coords;
  coords.reserve(x->size());
  for (const auto& xi : *x) {
    if (xi.get_den() != 1) return std::nullopt;
    coords.push_back(xi.get_num());
  }
  if (multiply(cols, coords) != point) return std::nullopt;
  return coords;
}

namespace {

IntMatrix stacked_saturated(const LatticeBasis& b1, const LatticeBasis& b2) {
  if (b1.ambient_dim != b2.ambient_dim) throw NotComplementary("lattices live in different ambient spaces");
  const LatticeBasis s1 = saturate(b1);
  const LatticeBasis s2 = saturate(b2);
  if (s1.rank() + s2.rank() != b1.ambient_dim)
    throw NotComplementary("lattice ranks do not add up to the ambient dimension");
  std::vector<IntVec> rows = s1.vectors;
  rows.insert(rows.end(), s2.vectors.begin(), s2.vectors.end());
  return IntMatrix::from_rows(rows, b1.ambient_dim);
}

}  // namespace

Int lattice_index(const LatticeBasis& b1, const LatticeBasis& b2) {
  const Int det = determinant(stacked_saturated(b1, b2));
  if (det == 0) throw NotComplementary("lattices intersect nontrivially");
  return abs_value(det);
}

Int lattice_index_snf(const LatticeBasis& b1, const LatticeBasis& b2) {
  const SmithForm snf = smith_normal_form(stacked_saturated(b1, b2));
  if (snf.rank < b1.ambient_dim) throw NotComplementary("lattices intersect nontrivially");
  Int product = 1;
  for (const auto& d : snf.diagonal()) product *= d;
  return product;
}

QuotientLattice::QuotientLattice(std::span<const IntVec> generators, std::size_t ambient_dim)
    : ambient_(ambient_dim) {
  if (generators.empty()) {
    to_coords_ = IntMatrix::identity(ambient_dim);
    basis_ = IntMatrix::identity(ambient_dim);
    return;
  }
  SmithForm snf = smith_normal_form(IntMatrix::from_rows(generators, ambient_dim));
  rank_ = snf.rank;
  to_coords_ = std::move(snf.v);
  basis_ = std::move(snf.v_inverse);
}

IntVec QuotientLattice::quotient_coordinates(const IntVec& x) const {
  if (x.size() != ambient_) throw LinalgError("vector dimension mismatch");
  const IntVec all = multiply(x, to_coords_);
  return IntVec(all.begin() + static_cast<std::ptrdiff_t>(rank_), all.end());
}

IntVec QuotientLattice::lift(const IntVec& quotient_coords) const {
  if (quotient_coords.size() != quotient_rank()) throw LinalgError("quotient coordinate length mismatch");
  IntVec out(ambient_);
  for (std::size_t i = 0; i < quotient_coords.size(); ++i) {
    if (quotient_coords[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] += quotient_coords[i] * basis_(rank_ + i, j);
  }
  return out;
}

bool QuotientLattice::contains(const IntVec& x) const { return is_zero(quotient_coordinates(x)); }

}  // namespace tropdeg
