#include "parablat/linalg.hpp"

#include <algorithm>

namespace parablat {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const Rat& x : m.data())
    if (!is_integer(x)) return false;
  return true;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw NotIntegral("matrix entry " + m(i, j).get_str() + " is not an integer");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Int common_denominator(const RatMatrix& m) { return common_denominator(m.data()); }

RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hcat row mismatch");
  RatMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

RatMatrix vcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vcat column mismatch");
  RatMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

bool is_symmetric(const RatMatrix& m) { return m.square() && m == m.transpose(); }
bool is_antisymmetric(const RatMatrix& m) { return m.square() && m == -m.transpose(); }

std::string to_string(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.at(i);
  return c;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.at(i);
  return c;
}

RatVector operator*(const Rat& s, const RatVector& v) {
  RatVector c(v);
  for (Rat& x : c) x *= s;
  return c;
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.at(i);
  return s;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = row; i < h.rows(); ++i)
        if (h(i, col) != 0 && (best == h.rows() || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q = floor_div(h(i, col), h(row, col));
        add_row_multiple(h, i, row, q);
        add_row_multiple(u, i, row, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      add_row_multiple(h, i, row, q);
      add_row_multiple(u, i, row, q);
    }
    res.pivots.push_back(col);
    ++row;
  }
  return res;
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const std::size_t rows = d.rows(), cols = d.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return res;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = floor_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, q);
        add_row_multiple(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = floor_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, q);
        add_col_multiple(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (mod(d(i, j), d(t, t)) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row_multiple(d, t, bad, Int(-1));
      add_row_multiple(u, t, bad, Int(-1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return res;
}

Int det(const IntMatrix& m) {
  if (!m.square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, RatMatrix* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    if (rhs) rhs->swap_rows(row, p);
    Rat inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    if (rhs)
      for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rat det(const RatMatrix& m) {
  if (!m.square()) throw InputError("determinant of non-square matrix");
  RatMatrix a = m;
  Rat result = 1;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a, nullptr).size();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw PreconditionError("inverse of non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(m.rows());
  if (rref(a, &inv).size() != m.rows()) throw PreconditionError("matrix is singular");
  return inv;
}

std::optional<RatMatrix> rat_solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("rat_solve shape mismatch");
  RatMatrix ea = a, eb = b;
  auto pivots = rref(ea, &eb);
  for (std::size_t i = pivots.size(); i < eb.rows(); ++i)
    for (std::size_t j = 0; j < eb.cols(); ++j)
      if (eb(i, j) != 0) return std::nullopt;
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = eb(r, j);
  return x;
}

RatMatrix rat_solve_or_throw(const RatMatrix& a, const RatMatrix& b) {
  auto x = rat_solve(a, b);
  if (!x) throw NoSolution("linear system is inconsistent");
  return *x;
}

std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b) {
  auto x = rat_solve(a, RatMatrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

RatMatrix nullspace(const RatMatrix& a) {
  RatMatrix e = a;
  auto pivots = rref(e, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(a.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -e(r, f);
    basis.push_back(x);
  }
  return RatMatrix::from_columns(a.cols(), basis);
}

IntMatrix clear_row_denominators(const RatMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int d = common_denominator(a.row(i));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rat x = a(i, j) * d;
      out(i, j) = x.get_num();
    }
  }
  return out;
}

IntMatrix kernel_int(const RatMatrix& a) {
  IntMatrix z = clear_row_denominators(a);
  HnfResult r = hnf(z.transpose());
  const std::size_t k = a.cols();
  IntMatrix basis(k, k - r.rank());
  for (std::size_t c = 0; c < k - r.rank(); ++c)
    for (std::size_t i = 0; i < k; ++i) basis(i, c) = r.u(r.rank() + c, i);
  return basis;
}

std::optional<IntVector> solve_int(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw InputError("solve_int shape mismatch");
  // Scale each equation so that both sides become integral.
  IntMatrix z(a.rows(), a.cols());
  IntVector rhs(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatVector row = a.row(i);
    row.push_back(b[i]);
    Int d = common_denominator(row);
    for (std::size_t j = 0; j < a.cols(); ++j) z(i, j) = Rat(a(i, j) * d).get_num();
    rhs[i] = Rat(b[i] * d).get_num();
  }
  // z·uᵀ = hᵀ is in column echelon form; solve hᵀ·y = rhs, then x = uᵀ·y.
  HnfResult r = hnf(z.transpose());
  IntVector y(a.cols());
  for (std::size_t j = 0; j < r.rank(); ++j) {
    std::size_t p = r.pivots[j];
    Int s = rhs[p];
    for (std::size_t l = 0; l < j; ++l) s -= r.h(l, p) * y[l];
    if (mod(s, r.h(j, p)) != 0) return std::nullopt;
    mpz_divexact(y[j].get_mpz_t(), s.get_mpz_t(), r.h(j, p).get_mpz_t());
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < r.rank(); ++j) s += r.h(j, i) * y[j];
    if (s != rhs[i]) return std::nullopt;
  }
  IntVector x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) x[i] += r.u(j, i) * y[j];
  return x;
}

IntMatrix saturation(const IntMatrix& m) {
  SnfResult s = snf(m);
  std::size_t k = m.cols();
  for (std::size_t i = 0; i < k; ++i)
    if (i >= m.rows() || s.d(i, i) == 0) throw PreconditionError("saturation requires full column rank");
  // m = u⁻¹·d·v⁻¹, so the first k columns of u⁻¹ span the saturation.
  RatMatrix uinv = inverse(to_rat(s.u));
  IntMatrix basis = to_int(uinv.block(0, 0, m.rows(), k));
  HnfResult h = hnf(basis.transpose());
  return h.h.block(0, 0, k, m.rows()).transpose();
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  return abs(det(m)) == 1;
}

}  // namespace parablat
