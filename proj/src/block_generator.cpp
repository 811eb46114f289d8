#include "thmat/annihilator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace thmat {

PolyMatrix::PolyMatrix(const PrimeField& f, std::size_t dim)
    : field_(f), dim_(dim), entries_(dim * dim, Poly(f)) {}

std::ptrdiff_t PolyMatrix::degree() const noexcept {
  std::ptrdiff_t d = kNegInfDegree;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

std::ptrdiff_t PolyMatrix::row_degree(std::size_t i) const noexcept {
  std::ptrdiff_t d = kNegInfDegree;
  for (std::size_t j = 0; j < dim_; ++j) d = std::max(d, (*this)(i, j).degree());
  return d;
}

DenseMatrix PolyMatrix::eval(Fe x) const {
  DenseMatrix m(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j).eval(x);
  return m;
}

namespace {

using PolyRow = std::vector<Vec>;  // entries of one row as raw coefficient arrays

std::ptrdiff_t raw_degree(const Vec& c) {
  for (std::size_t t = c.size(); t-- > 0;)
    if (c[t].v != 0) return static_cast<std::ptrdiff_t>(t);
  return kNegInfDegree;
}

}  // namespace

PolyMatrix minimal_matrix_generator(const BlockSequence& seq, std::size_t dbound, OpCount* ops) {
  const std::size_t beta = seq.beta;
  const std::size_t len = seq.length();
  if (beta == 0 || seq.terms.empty()) throw Error(Errc::InsufficientLength, "empty block sequence");
  const auto& f = seq.terms.front().field();
  const std::size_t need = 2 * ((dbound + beta - 1) / beta) + 1;
  if (len < need)
    throw Error(Errc::InsufficientLength, "length " + std::to_string(len) + " < " +
                                              std::to_string(need) + " needed for degree bound " +
                                              std::to_string(dbound));

  // Order basis of the 2beta x beta series [S(x); -I]: rows [P | Q] with
  // P S - Q = 0 mod x^order, shifted degree max(deg P, deg Q + 1).
  const std::size_t m = 2 * beta;
  std::vector<PolyRow> basis(m, PolyRow(m));
  std::vector<std::ptrdiff_t> rdeg(m);
  for (std::size_t k = 0; k < m; ++k) {
    basis[k][k] = Vec{f.one()};
    rdeg[k] = k < beta ? 0 : 1;
  }

  std::vector<std::size_t> order(m);
  DenseMatrix resid(f, m, beta);
  for (std::size_t ord = 0; ord < len; ++ord) {
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t b = 0; b < beta; ++b) {
        Fe acc(0);
        for (std::size_t a = 0; a < beta; ++a) {
          const Vec& p = basis[k][a];
          const std::size_t top = std::min(p.size(), ord + 1);
          for (std::size_t t = 0; t < top; ++t)
            if (p[t].v != 0) acc = f.mul_add(acc, p[t], seq.terms[ord - t](a, b));
          tally(ops, top);
        }
        const Vec& q = basis[k][beta + b];
        if (ord < q.size()) acc = f.sub(acc, q[ord]);
        resid(k, b) = acc;
      }

    // Eliminate in order of increasing shifted degree; rows that keep a
    // nonzero residual become pivots and are multiplied by x.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return rdeg[x] < rdeg[y]; });
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
    for (std::size_t k : order) {
      for (auto [pr, pc] : pivots) {
        const Fe x = resid(k, pc);
        if (x.v == 0) continue;
        const Fe factor = f.mul(x, f.inv(resid(pr, pc)));
        for (std::size_t b = 0; b < beta; ++b) resid(k, b) = f.sub(resid(k, b), f.mul(factor, resid(pr, b)));
        for (std::size_t j = 0; j < m; ++j) {
          const Vec& src = basis[pr][j];
          Vec& dst = basis[k][j];
          if (dst.size() < src.size()) dst.resize(src.size());
          for (std::size_t t = 0; t < src.size(); ++t) dst[t] = f.sub(dst[t], f.mul(factor, src[t]));
          tally(ops, src.size());
        }
      }
      std::size_t col = 0;
      while (col < beta && resid(k, col).v == 0) ++col;
      if (col < beta) pivots.emplace_back(k, col);
    }
    for (auto [pr, pc] : pivots) {
      for (Vec& e : basis[pr])
        if (!e.empty()) e.insert(e.begin(), Fe(0));
      ++rdeg[pr];
    }
  }

  // Row k satisfies P S = Q mod x^len; with d = max(deg P, deg Q + 1) the
  // reversal x^d P(1/x) annihilates the sequence. Rows with P = 0 carry no
  // relation. The beta rows of least d form the generator.
  std::vector<std::size_t> gen_rows;
  std::vector<std::ptrdiff_t> sd(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::ptrdiff_t deg_p = kNegInfDegree, deg_q = kNegInfDegree;
    for (std::size_t j = 0; j < beta; ++j) deg_p = std::max(deg_p, raw_degree(basis[k][j]));
    for (std::size_t j = beta; j < m; ++j) deg_q = std::max(deg_q, raw_degree(basis[k][j]));
    sd[k] = std::max(deg_p, deg_q == kNegInfDegree ? std::ptrdiff_t{0} : deg_q + 1);
    if (deg_p != kNegInfDegree && sd[k] < static_cast<std::ptrdiff_t>(len)) gen_rows.push_back(k);
  }
  if (gen_rows.size() < beta)
    throw Error(Errc::InsufficientLength, "only " + std::to_string(gen_rows.size()) + " of " +
                                              std::to_string(beta) + " generator rows found");
  std::stable_sort(gen_rows.begin(), gen_rows.end(),
                   [&](std::size_t x, std::size_t y) { return sd[x] < sd[y]; });
  gen_rows.resize(beta);
  std::sort(gen_rows.begin(), gen_rows.end());

  PolyMatrix out(f, beta);
  for (std::size_t r = 0; r < beta; ++r) {
    const std::size_t k = gen_rows[r];
    const auto d = static_cast<std::size_t>(sd[k]);
    for (std::size_t a = 0; a < beta; ++a) {
      const Vec& p = basis[k][a];
      Vec rev(d + 1);
      for (std::size_t t = 0; t <= d && t < p.size(); ++t) rev[d - t] = p[t];
      out(r, a) = Poly(f, std::move(rev));
    }
  }
  if (beta == 1) out(0, 0) = make_monic(out(0, 0));
  return out;
}

bool generator_annihilates(const PolyMatrix& fm, const BlockSequence& seq) {
  const auto& f = fm.field();
  const std::size_t beta = fm.dim();
  for (std::size_t r = 0; r < beta; ++r) {
    const std::ptrdiff_t d = fm.row_degree(r);
    if (d == kNegInfDegree) continue;
    for (std::size_t i = 0; i + static_cast<std::size_t>(d) < seq.length(); ++i)
      for (std::size_t b = 0; b < beta; ++b) {
        Fe acc(0);
        for (std::size_t a = 0; a < beta; ++a) {
          const Poly& e = fm(r, a);
          for (std::size_t t = 0; t < e.size(); ++t) acc = f.mul_add(acc, e[t], seq.terms[i + t](a, b));
        }
        if (acc.v != 0) return false;
      }
  }
  return true;
}

Poly polymat_det(const PolyMatrix& fm, OpCount* ops) {
  const auto& f = fm.field();
  const std::ptrdiff_t deg = fm.degree();
  if (deg == kNegInfDegree) throw Error(Errc::SingularEverywhere, "zero polynomial matrix");
  const std::size_t bound = fm.dim() * static_cast<std::size_t>(deg);
  if (f.modulus() <= bound + 1)
    throw Error(Errc::FieldTooSmall, "need more than " + std::to_string(bound + 1) +
                                         " field elements, p = " + std::to_string(f.modulus()));
  Vec points(bound + 1), values(bound + 1);
  for (std::size_t i = 0; i <= bound; ++i) {
    points[i] = Fe(i);
    values[i] = determinant(fm.eval(points[i]), ops);
    tally(ops, fm.dim() * fm.dim() * static_cast<std::size_t>(deg + 1));
  }
  Poly det = interpolate(f, points, values, ops);
  if (det.is_zero()) throw Error(Errc::SingularEverywhere, "determinant vanishes identically");
  return make_monic(det);
}

}  // namespace thmat
