#include "thmat/oracle.hpp"

#include <string>

#include "thmat/echelon.hpp"
#include "thmat/error.hpp"

namespace thmat::oracle {

namespace {

void guard(const DenseMatrix& a) {
  if (!a.square()) throw Error(Errc::DimensionMismatch, "oracle needs a square matrix");
  if (a.rows() > kMaxOracleDim)
    throw Error(Errc::TooLarge, "oracle limited to n <= " + std::to_string(kMaxOracleDim));
}

}  // namespace

Poly dense_charpoly(const DenseMatrix& a, OpCount* ops) {
  guard(a);
  const auto& f = a.field();
  const std::size_t n = a.rows();
  DenseMatrix h = a;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 0; m + 2 < n; ++m) {
    std::size_t piv = m + 1;
    while (piv < n && h(piv, m).v == 0) ++piv;
    if (piv == n) continue;
    if (piv != m + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m + 1));
    }
    const Fe inv = f.inv(h(m + 1, m));
    for (std::size_t i = m + 2; i < n; ++i) {
      const Fe u = f.mul(h(i, m), inv);
      if (u.v == 0) continue;
      // row_i -= u row_{m+1}; col_{m+1} += u col_i
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(m + 1, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, m + 1) = f.mul_add(h(r, m + 1), u, h(r, i));
      tally(ops, 2 * n + 1);
    }
  }

  // p_k = det(xI - H_k) for the leading k x k block:
  //   p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Vec> p(n + 1);
  p[0] = Vec{f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t c = k - 1;
    Vec next(k + 1);
    for (std::size_t t = 0; t < k; ++t) {
      next[t + 1] = f.add(next[t + 1], p[k - 1][t]);
      next[t] = f.sub(next[t], f.mul(h(c, c), p[k - 1][t]));
    }
    tally(ops, k);
    Fe prod = f.one();
    for (std::size_t i = c; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod.v == 0) break;
      const Fe coef = f.mul(h(i, c), prod);
      for (std::size_t t = 0; t < p[i].size(); ++t) next[t] = f.sub(next[t], f.mul(coef, p[i][t]));
      tally(ops, p[i].size() + 2);
    }
    p[k] = std::move(next);
  }
  return Poly(f, std::move(p[n]));
}

Poly dense_minpoly(const DenseMatrix& a, OpCount* ops) {
  guard(a);
  const auto& f = a.field();
  const std::size_t n = a.rows();
  Poly result(f, Vec{f.one()});
  for (std::size_t col = 0; col < n; ++col) {
    // Reduced Krylov vectors r_k = q_k(A) e_col kept in echelon form.
    std::vector<Vec> basis;
    std::vector<Vec> basis_poly;
    std::vector<std::size_t> pivots;
    Vec pivot_inv;
    Vec krylov(n);
    krylov[col] = f.one();
    for (std::size_t k = 0;; ++k) {
      Vec r = krylov;
      Vec q(k + 1);
      q[k] = f.one();
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Fe c = f.mul(r[pivots[b]], pivot_inv[b]);
        if (c.v == 0) continue;
        for (std::size_t i = 0; i < n; ++i) r[i] = f.sub(r[i], f.mul(c, basis[b][i]));
        for (std::size_t t = 0; t < basis_poly[b].size(); ++t)
          q[t] = f.sub(q[t], f.mul(c, basis_poly[b][t]));
        tally(ops, n + basis_poly[b].size() + 1);
      }
      std::size_t piv = 0;
      while (piv < n && r[piv].v == 0) ++piv;
      if (piv == n) {
        result = lcm(result, Poly(f, std::move(q)));
        break;
      }
      pivots.push_back(piv);
      pivot_inv.push_back(f.inv(r[piv]));
      basis.push_back(std::move(r));
      basis_poly.push_back(std::move(q));
      krylov = matvec(a, krylov, ops);
    }
  }
  return result;
}

DenseMatrix stein_displacement(const DenseMatrix& a, OperatorTag tag) {
  guard(a);
  const auto& f = a.field();
  const std::size_t n = a.rows();
  DenseMatrix d = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (tag == OperatorTag::Down) {
        if (i > 0 && j > 0) d(i, j) = f.sub(d(i, j), a(i - 1, j - 1));
      } else if (i + 1 < n && j + 1 < n) {
        d(i, j) = f.sub(d(i, j), a(i + 1, j + 1));
      }
    }
  return d;
}

std::size_t displacement_rank(const DenseMatrix& a, OperatorTag tag) {
  return rank(stein_displacement(a, tag));
}

THMatrix dense_to_structured(const DenseMatrix& a) {
  guard(a);
  const auto& f = a.field();
  const std::size_t n = a.rows();
  const RankFactors rf = rank_factorize(stein_displacement(a, OperatorTag::Down));
  std::vector<Vec> g, h;
  for (std::size_t k = 0; k < rf.basis.cols(); ++k) {
    g.push_back(rf.basis.column(k));
    Vec row(rf.coeffs.row(k).begin(), rf.coeffs.row(k).end());
    h.push_back(std::move(row));
  }
  return THMatrix(ToeplitzLikeCore(GeneratorPair(f, n, std::move(g), std::move(h))),
                  ToeplitzLikeCore::zero(f, n));
}

std::optional<Poly> exhaustive_lfsr(const PrimeField& f, std::span<const Fe> s,
                                    std::size_t max_degree) {
  const std::uint64_t p = f.modulus();
  std::uint64_t count = 1;
  for (std::size_t d = 0; d < max_degree; ++d) {
    count *= p;
    if (count > kLfsrSearchGuard)
      throw Error(Errc::GuardExceeded, std::to_string(p) + "^" + std::to_string(max_degree) +
                                           " exceeds the search guard");
  }
  for (std::size_t d = 0; d <= max_degree; ++d) {
    // Odometer over the d low coefficients of x^d + ...
    Vec low(d);
    while (true) {
      Vec c = low;
      c.push_back(f.one());
      Poly g(f, std::move(c));
      if (annihilates_sequence(g, s)) return g;
      std::size_t i = 0;
      while (i < d && low[i].v == p - 1) low[i++] = Fe(0);
      if (i == d) break;
      low[i] = Fe(low[i].v + 1);
    }
  }
  return std::nullopt;
}

}  // namespace thmat::oracle
