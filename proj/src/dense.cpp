#include "thmat/dense.hpp"

#include <string>

#include "thmat/echelon.hpp"
#include "thmat/error.hpp"

namespace thmat {

ColumnBasis column_basis(const PrimeField& f, std::span<const Vec> cols, OpCount* ops) {
  ColumnBasis out;
  Vec pivot_inv;
  for (const Vec& col : cols) {
    Vec cur = col;
    Vec coef(out.rank());
    for (std::size_t k = 0; k < out.rank(); ++k) {
      const Fe c = f.mul(cur[out.pivots[k]], pivot_inv[k]);
      coef[k] = c;
      if (c.v == 0) continue;
      const Vec& b = out.basis[k];
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = f.sub(cur[i], f.mul(c, b[i]));
      tally(ops, cur.size() + 1);
    }
    std::size_t piv = 0;
    while (piv < cur.size() && cur[piv].v == 0) ++piv;
    if (piv < cur.size()) {
      pivot_inv.push_back(f.inv(cur[piv]));
      out.pivots.push_back(piv);
      out.basis.push_back(std::move(cur));
      coef.push_back(f.one());
    }
    out.coeffs.push_back(std::move(coef));
  }
  for (auto& c : out.coeffs) c.resize(out.rank());
  return out;
}

DenseMatrix DenseMatrix::identity(const PrimeField& f, std::size_t n) {
  DenseMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

DenseMatrix DenseMatrix::exchange(const PrimeField& f, std::size_t n) {
  DenseMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = f.one();
  return m;
}

DenseMatrix DenseMatrix::down_shift(const PrimeField& f, std::size_t n) {
  DenseMatrix m(f, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = f.one();
  return m;
}

DenseMatrix DenseMatrix::diagonal(const PrimeField& f, std::span<const Fe> d) {
  DenseMatrix m(f, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec DenseMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool DenseMatrix::is_zero() const noexcept {
  for (Fe x : data_)
    if (x.v != 0) return false;
  return true;
}

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field() == b.field()))
    throw Error(Errc::FieldMismatch, "dense operands over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::DimensionMismatch, "shapes " + std::to_string(a.rows()) + "x" +
                                             std::to_string(a.cols()) + " and " +
                                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b, OpCount* ops) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "dense operands over different fields");
  if (a.cols() != b.rows())
    throw Error(Errc::DimensionMismatch, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                             std::to_string(b.rows()));
  const auto& f = a.field();
  DenseMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe x = a(i, k);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.mul_add(c(i, j), x, b(k, j));
    }
  tally(ops, a.rows() * a.cols() * b.cols());
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

DenseMatrix power(const DenseMatrix& a, std::size_t k, OpCount* ops) {
  DenseMatrix r = DenseMatrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a, ops);
  return r;
}

Vec matvec(const DenseMatrix& a, std::span<const Fe> v, OpCount* ops) {
  if (v.size() != a.cols())
    throw Error(Errc::LengthMismatch, "vector length " + std::to_string(v.size()) + " vs " +
                                          std::to_string(a.cols()) + " columns");
  const auto& f = a.field();
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Fe acc(0);
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.mul_add(acc, a(i, j), v[j]);
    out[i] = acc;
  }
  tally(ops, a.rows() * a.cols());
  return out;
}

std::size_t rank(const DenseMatrix& a) {
  const auto& f = a.field();
  DenseMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).v == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Fe inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Fe factor = f.mul(m(i, c), inv);
      if (factor.v == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

Fe determinant(DenseMatrix m, OpCount* ops) {
  if (!m.square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  Fe det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).v == 0) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Fe inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Fe factor = f.mul(m(i, c), inv);
      if (factor.v == 0) continue;
      for (std::size_t j = c + 1; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
      tally(ops, n - c);
    }
  }
  tally(ops, 2 * n);
  return det;
}

Fe trace(const DenseMatrix& a) {
  Fe t(0);
  for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) t = a.field().add(t, a(i, i));
  return t;
}

DenseMatrix block_diagonal(std::span<const DenseMatrix> blocks) {
  if (blocks.empty()) throw Error(Errc::DimensionMismatch, "no blocks");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  DenseMatrix m(blocks.front().field(), n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

DenseMatrix eval_at_matrix(const Poly& f, const DenseMatrix& a) {
  const auto& fld = a.field();
  DenseMatrix r(fld, a.rows());
  for (std::size_t k = f.size(); k-- > 0;) {
    r = mul(r, a);
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = fld.add(r(i, i), f[k]);
  }
  return r;
}

RankFactors rank_factorize(const DenseMatrix& a) {
  std::vector<Vec> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  const ColumnBasis cb = column_basis(a.field(), cols);
  const std::size_t r = cb.rank();
  DenseMatrix basis(a.field(), a.rows(), r), coeffs(a.field(), r, a.cols());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) basis(i, k) = cb.basis[k][i];
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t k = 0; k < r; ++k) coeffs(k, j) = cb.coeffs[j][k];
  return {std::move(basis), std::move(coeffs)};
}

}  // namespace thmat
