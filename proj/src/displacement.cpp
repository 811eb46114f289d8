#include "thmat/displacement.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "thmat/echelon.hpp"
#include "thmat/error.hpp"
#include "thmat/poly.hpp"
#include "thmat/random.hpp"

namespace thmat {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec e(n);
  e[i] = Fe(1);
  return e;
}

Vec reversed(std::span<const Fe> v) { return Vec(v.rbegin(), v.rend()); }

// Z x
Vec shift_down(std::span<const Fe> x) {
  Vec y(x.size());
  for (std::size_t i = 1; i < x.size(); ++i) y[i] = x[i - 1];
  return y;
}

// Z^T x
Vec shift_up(std::span<const Fe> x) {
  Vec y(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) y[i] = x[i + 1];
  return y;
}

void axpy(const PrimeField& f, Vec& y, Fe a, std::span<const Fe> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.mul_add(y[i], a, x[i]);
}

void add_into(const PrimeField& f, Vec& y, std::span<const Fe> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], x[i]);
}

void require_dim(std::size_t n, std::span<const Fe> v) {
  if (v.size() != n)
    throw Error(Errc::LengthMismatch,
                "vector length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

// sum_j L(a_j) U(b_j) v
Vec apply_lu_sum(const PrimeField& f, std::size_t n, const std::vector<Vec>& lower,
                 const std::vector<Vec>& upper, std::span<const Fe> v, OpCount* ops) {
  require_dim(n, v);
  Vec out(n);
  if (lower.empty()) return out;
  const Vec rv = reversed(v);
  Vec w(n);
  for (std::size_t j = 0; j < lower.size(); ++j) {
    // (U(b) v)[k] = sum_m b[m] v[k + m] = (b * rev v)[n - 1 - k]
    const Vec corr = convolve(f, upper[j], rv, MulAlgo::Auto, ops);
    for (std::size_t k = 0; k < n; ++k) w[k] = corr[n - 1 - k];
    const Vec prod = convolve(f, lower[j], w, MulAlgo::Auto, ops);
    for (std::size_t k = 0; k < n; ++k) out[k] = f.add(out[k], prod[k]);
  }
  return out;
}

std::uint64_t hash_core(const ToeplitzLikeCore& c) {
  std::uint64_t h = splitmix64(c.n() * 0x100000001b3ULL + c.width());
  for (const auto* cols : {&c.gen().g(), &c.gen().h()})
    for (const Vec& col : *cols)
      for (Fe x : col) h = splitmix64(h ^ x.v);
  return h;
}

}  // namespace

GeneratorPair::GeneratorPair(const PrimeField& f, std::size_t n, std::vector<Vec> g,
                             std::vector<Vec> h)
    : field_(f), n_(n), g_(std::move(g)), h_(std::move(h)) {
  if (g_.size() != h_.size())
    throw Error(Errc::DimensionMismatch, std::to_string(g_.size()) + " G columns vs " +
                                             std::to_string(h_.size()) + " H columns");
  for (const auto* cols : {&g_, &h_})
    for (const Vec& col : *cols)
      if (col.size() != n_)
        throw Error(Errc::LengthMismatch, "generator column of length " + std::to_string(col.size()) +
                                              ", expected " + std::to_string(n_));
}

DenseMatrix GeneratorPair::product() const {
  DenseMatrix d(field_, n_);
  for (std::size_t k = 0; k < width(); ++k)
    for (std::size_t i = 0; i < n_; ++i) {
      if (g_[k][i].v == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) d(i, j) = field_.mul_add(d(i, j), g_[k][i], h_[k][j]);
    }
  return d;
}

GeneratorPair concat(const GeneratorPair& a, const GeneratorPair& b) {
  if (!(a.field() == b.field()) || a.n() != b.n())
    throw Error(Errc::DimensionMismatch, "generator pairs of different shape");
  std::vector<Vec> g = a.g(), h = a.h();
  g.insert(g.end(), b.g().begin(), b.g().end());
  h.insert(h.end(), b.h().begin(), b.h().end());
  return GeneratorPair(a.field(), a.n(), std::move(g), std::move(h));
}

GeneratorPair compress(const GeneratorPair& gp, OpCount* ops) {
  const auto& f = gp.field();
  const std::size_t n = gp.n();
  // G = B1 M, so G H^T = B1 (H M^T)^T.
  const ColumnBasis left = column_basis(f, gp.g(), ops);
  std::vector<Vec> folded(left.rank(), Vec(n));
  for (std::size_t j = 0; j < gp.width(); ++j)
    for (std::size_t k = 0; k < left.rank(); ++k) {
      const Fe c = left.coeffs[j][k];
      if (c.v == 0) continue;
      axpy(f, folded[k], c, gp.h()[j]);
      tally(ops, n);
    }
  // H M^T = B2 N, so G H^T = (B1 N^T) B2^T.
  const ColumnBasis right = column_basis(f, folded, ops);
  std::vector<Vec> g(right.rank(), Vec(n));
  for (std::size_t k = 0; k < left.rank(); ++k)
    for (std::size_t l = 0; l < right.rank(); ++l) {
      const Fe c = right.coeffs[k][l];
      if (c.v == 0) continue;
      axpy(f, g[l], c, left.basis[k]);
      tally(ops, n);
    }
  return GeneratorPair(f, n, std::move(g), right.basis);
}

ToeplitzLikeCore ToeplitzLikeCore::zero(const PrimeField& f, std::size_t n) {
  return ToeplitzLikeCore(GeneratorPair(f, n));
}

ToeplitzLikeCore ToeplitzLikeCore::identity(const PrimeField& f, std::size_t n) {
  return ToeplitzLikeCore(GeneratorPair(f, n, {unit(n, 0)}, {unit(n, 0)}));
}

ToeplitzLikeCore ToeplitzLikeCore::down_shift(const PrimeField& f, std::size_t n) {
  if (n < 2) return zero(f, n);
  return ToeplitzLikeCore(GeneratorPair(f, n, {unit(n, 1)}, {unit(n, 0)}));
}

DenseMatrix reconstruct(const ToeplitzLikeCore& c) {
  if (c.n() > kMaxReconstructDim)
    throw Error(Errc::TooLarge, "refusing to materialize n = " + std::to_string(c.n()));
  DenseMatrix m = c.gen().product();
  const auto& f = c.field();
  for (std::size_t i = 1; i < c.n(); ++i)
    for (std::size_t j = 1; j < c.n(); ++j) m(i, j) = f.add(m(i, j), m(i - 1, j - 1));
  return m;
}

Vec matvec(const ToeplitzLikeCore& c, std::span<const Fe> v, OpCount* ops) {
  return apply_lu_sum(c.field(), c.n(), c.gen().g(), c.gen().h(), v, ops);
}

// (L(g) U(h))^T = L(h) U(g)
Vec matvec_transpose(const ToeplitzLikeCore& c, std::span<const Fe> v, OpCount* ops) {
  return apply_lu_sum(c.field(), c.n(), c.gen().h(), c.gen().g(), v, ops);
}

ToeplitzLikeCore add(const ToeplitzLikeCore& a, const ToeplitzLikeCore& b, OpCount* ops) {
  if (a.width() == 0) return b;
  if (b.width() == 0) return a;
  return ToeplitzLikeCore(compress(concat(a.gen(), b.gen()), ops));
}

ToeplitzLikeCore negate(const ToeplitzLikeCore& c) {
  const auto& f = c.field();
  std::vector<Vec> g = c.gen().g();
  for (auto& col : g)
    for (auto& x : col) x = f.neg(x);
  return ToeplitzLikeCore(GeneratorPair(f, c.n(), std::move(g), c.gen().h()));
}

ToeplitzLikeCore transpose(const ToeplitzLikeCore& c) {
  return ToeplitzLikeCore(GeneratorPair(c.field(), c.n(), c.gen().h(), c.gen().g()));
}

// tr(L(g) U(h)) = sum_m (n - m) g[m] h[m]
Fe trace(const ToeplitzLikeCore& c) {
  const auto& f = c.field();
  const std::size_t n = c.n();
  Fe t(0);
  for (std::size_t j = 0; j < c.width(); ++j) {
    const Vec& g = c.gen().g()[j];
    const Vec& h = c.gen().h()[j];
    for (std::size_t m = 0; m < n; ++m) t = f.mul_add(t, f.elem(n - m), f.mul(g[m], h[m]));
  }
  return t;
}

ToeplitzLikeCore core_multiply(const ToeplitzLikeCore& a, const ToeplitzLikeCore& b, OpCount* ops) {
  if (!(a.field() == b.field()) || a.n() != b.n())
    throw Error(Errc::DimensionMismatch, "cores of dimension " + std::to_string(a.n()) + " and " +
                                             std::to_string(b.n()));
  const auto& f = a.field();
  const std::size_t n = a.n();
  if (a.width() == 0 || b.width() == 0) return ToeplitzLikeCore::zero(f, n);

  std::vector<Vec> g, h;
  g.reserve(a.width() + b.width() + 1);
  h.reserve(a.width() + b.width() + 1);
  // D(A) B = G_A (B^T H_A)^T
  for (std::size_t j = 0; j < a.width(); ++j) {
    g.push_back(a.gen().g()[j]);
    h.push_back(matvec_transpose(b, a.gen().h()[j], ops));
  }
  // Z A Z^T D(B)
  for (std::size_t j = 0; j < b.width(); ++j) {
    g.push_back(shift_down(matvec(a, shift_up(b.gen().g()[j]), ops)));
    h.push_back(b.gen().h()[j]);
  }
  // -(Z A e_n)(Z B^T e_n)^T
  const Vec en = unit(n, n - 1);
  Vec corner = shift_down(matvec(a, en, ops));
  for (auto& x : corner) x = f.neg(x);
  g.push_back(std::move(corner));
  h.push_back(shift_down(matvec_transpose(b, en, ops)));
  return ToeplitzLikeCore(compress(GeneratorPair(f, n, std::move(g), std::move(h)), ops));
}

ToeplitzLikeCore flip_conjugate(const ToeplitzLikeCore& c, std::uint64_t salt, OpCount* ops) {
  const auto& f = c.field();
  const std::size_t n = c.n();
  if (c.width() == 0) return c;

  // D_up(C) x = C x - Z^T C Z x, and D_up(C)^T y = C^T y - Z^T C^T Z y.
  auto up = [&](std::span<const Fe> x) {
    Vec y = matvec(c, x, ops);
    const Vec z = shift_up(matvec(c, shift_down(x), ops));
    for (std::size_t i = 0; i < n; ++i) y[i] = f.sub(y[i], z[i]);
    return y;
  };
  auto up_t = [&](std::span<const Fe> x) {
    Vec y = matvec_transpose(c, x, ops);
    const Vec z = shift_up(matvec_transpose(c, shift_down(x), ops));
    for (std::size_t i = 0; i < n; ++i) y[i] = f.sub(y[i], z[i]);
    return y;
  };

  const std::uint64_t base = hash_core(c);
  const std::size_t samples = std::min(c.width() + 4, n);
  constexpr int kAttempts = 3;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(derive_seed(base, salt * kAttempts + static_cast<std::uint64_t>(attempt)));
    std::vector<Vec> images;
    images.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) images.push_back(up(rng.vector(f, n)));
    const ColumnBasis cb = column_basis(f, images, ops);
    const std::size_t r = cb.rank();

    // D_up(C) = X W with X the sampled basis; rows of W come from the
    // pivot rows of D_up(C) by forward substitution through the lower
    // triangular X[pivots].
    std::vector<Vec> w(r);
    for (std::size_t l = 0; l < r; ++l) {
      Vec row = up_t(unit(n, cb.pivots[l]));
      for (std::size_t k = 0; k < l; ++k) {
        const Fe x = cb.basis[k][cb.pivots[l]];
        if (x.v == 0) continue;
        axpy(f, row, f.neg(x), w[k]);
        tally(ops, n);
      }
      const Fe inv = f.inv(cb.basis[l][cb.pivots[l]]);
      for (auto& e : row) e = f.mul(e, inv);
      tally(ops, n);
      w[l] = std::move(row);
    }

    bool ok = true;
    for (int check = 0; check < 2 && ok; ++check) {
      const Vec z = rng.vector(f, n);
      const Vec expect = up(z);
      Vec got(n);
      for (std::size_t k = 0; k < r; ++k) {
        Fe dot(0);
        for (std::size_t i = 0; i < n; ++i) dot = f.mul_add(dot, w[k][i], z[i]);
        axpy(f, got, dot, cb.basis[k]);
      }
      tally(ops, 2 * r * n);
      ok = got == expect;
    }
    if (!ok) continue;

    // D_down(J C J) = J D_up(C) J
    std::vector<Vec> g, h;
    g.reserve(r);
    h.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      g.push_back(reversed(cb.basis[k]));
      h.push_back(reversed(w[k]));
    }
    return ToeplitzLikeCore(compress(GeneratorPair(f, n, std::move(g), std::move(h)), ops));
  }
  throw Error(Errc::CompressionFailed, "up-shift displacement factorization failed " +
                                           std::to_string(kAttempts) + " verifications");
}

const char* kind_name(StructureKind k) noexcept {
  switch (k) {
    case StructureKind::ToeplitzLike: return "toeplitz-like";
    case StructureKind::HankelLike: return "hankel-like";
    case StructureKind::ToeplitzPlusHankelLike: return "toeplitz+hankel-like";
  }
  return "unknown";
}

THMatrix::THMatrix(ToeplitzLikeCore p, ToeplitzLikeCore q) : p_(std::move(p)), q_(std::move(q)) {
  if (!(p_.field() == q_.field()) || p_.n() != q_.n())
    throw Error(Errc::DimensionMismatch, "P and Q cores of different shape");
}

THMatrix THMatrix::zero(const PrimeField& f, std::size_t n) {
  return THMatrix(ToeplitzLikeCore::zero(f, n), ToeplitzLikeCore::zero(f, n));
}

THMatrix THMatrix::identity(const PrimeField& f, std::size_t n) {
  return THMatrix(ToeplitzLikeCore::identity(f, n), ToeplitzLikeCore::zero(f, n));
}

THMatrix THMatrix::down_shift(const PrimeField& f, std::size_t n) {
  return THMatrix(ToeplitzLikeCore::down_shift(f, n), ToeplitzLikeCore::zero(f, n));
}

THMatrix THMatrix::exchange(const PrimeField& f, std::size_t n) {
  return THMatrix(ToeplitzLikeCore::zero(f, n), ToeplitzLikeCore::identity(f, n));
}

StructureKind THMatrix::kind() const noexcept {
  if (q_.width() == 0) return StructureKind::ToeplitzLike;
  if (p_.width() == 0) return StructureKind::HankelLike;
  return StructureKind::ToeplitzPlusHankelLike;
}

THMatrix from_toeplitz(const PrimeField& f, std::span<const Fe> col, std::span<const Fe> row) {
  const std::size_t n = col.size();
  if (row.size() != n || n == 0)
    throw Error(Errc::LengthMismatch, "column length " + std::to_string(n) + ", row length " +
                                          std::to_string(row.size()));
  if (col[0] != row[0])
    throw Error(Errc::CornerMismatch, "col[0] = " + std::to_string(col[0].v) +
                                          " but row[0] = " + std::to_string(row[0].v));
  Vec tail(col.begin(), col.end());
  tail[0] = Fe(0);
  GeneratorPair gp(f, n, {unit(n, 0), std::move(tail)}, {Vec(row.begin(), row.end()), unit(n, 0)});
  return THMatrix(ToeplitzLikeCore(compress(gp)), ToeplitzLikeCore::zero(f, n));
}

THMatrix from_hankel(const PrimeField& f, std::span<const Fe> antidiag) {
  if (antidiag.size() % 2 == 0)
    throw Error(Errc::BadLength, "anti-diagonal vector of length " + std::to_string(antidiag.size()) +
                                     " is not 2n - 1");
  const std::size_t n = (antidiag.size() + 1) / 2;
  // J H is Toeplitz with column v[n-1-i] and row v[n-1+j].
  Vec col(n), row(n);
  for (std::size_t i = 0; i < n; ++i) {
    col[i] = antidiag[n - 1 - i];
    row[i] = antidiag[n - 1 + i];
  }
  THMatrix t = from_toeplitz(f, col, row);
  return THMatrix(ToeplitzLikeCore::zero(f, n), t.p());
}

THMatrix random_structured(std::size_t n, std::size_t alpha_t, std::size_t alpha_h,
                           const PrimeField& f, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  Rng rng(seed);
  auto draw = [&](std::size_t alpha) {
    std::vector<Vec> g, h;
    for (std::size_t j = 0; j < alpha; ++j) g.push_back(rng.vector(f, n));
    for (std::size_t j = 0; j < alpha; ++j) h.push_back(rng.vector(f, n));
    return ToeplitzLikeCore(GeneratorPair(f, n, std::move(g), std::move(h)));
  };
  ToeplitzLikeCore p = draw(alpha_t);
  ToeplitzLikeCore q = draw(alpha_h);
  return THMatrix(std::move(p), std::move(q));
}

DenseMatrix reconstruct(const THMatrix& a) {
  DenseMatrix m = reconstruct(a.p());
  if (a.q().width() == 0) return m;
  const DenseMatrix q = reconstruct(a.q());
  const auto& f = a.field();
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.add(m(i, j), q(n - 1 - i, j));
  return m;
}

Vec matvec(const THMatrix& a, std::span<const Fe> v, OpCount* ops) {
  Vec out = matvec(a.p(), v, ops);
  if (a.q().width() != 0) {
    const Vec qv = matvec(a.q(), v, ops);
    add_into(a.field(), out, reversed(qv));
  }
  return out;
}

// (P + J Q)^T v = P^T v + Q^T J v
Vec matvec_transpose(const THMatrix& a, std::span<const Fe> v, OpCount* ops) {
  Vec out = matvec_transpose(a.p(), v, ops);
  if (a.q().width() != 0) add_into(a.field(), out, matvec_transpose(a.q(), reversed(v), ops));
  return out;
}

THMatrix add(const THMatrix& a, const THMatrix& b, OpCount* ops) {
  if (!(a.field() == b.field()) || a.n() != b.n())
    throw Error(Errc::DimensionMismatch, "matrices of dimension " + std::to_string(a.n()) + " and " +
                                             std::to_string(b.n()));
  return THMatrix(add(a.p(), b.p(), ops), add(a.q(), b.q(), ops));
}

THMatrix negate(const THMatrix& a) { return THMatrix(negate(a.p()), negate(a.q())); }

// (P_A + J Q_A)(P_B + J Q_B) = [P_A P_B + (J Q_A J) Q_B] + J [Q_A P_B + (J P_A J) Q_B]
THMatrix mul(const THMatrix& a, const THMatrix& b, OpCount* ops) {
  if (!(a.field() == b.field()) || a.n() != b.n())
    throw Error(Errc::DimensionMismatch, "matrices of dimension " + std::to_string(a.n()) + " and " +
                                             std::to_string(b.n()));
  ToeplitzLikeCore p = core_multiply(a.p(), b.p(), ops);
  ToeplitzLikeCore q = core_multiply(a.q(), b.p(), ops);
  if (b.q().width() != 0) {
    if (a.q().width() != 0) p = add(p, core_multiply(flip_conjugate(a.q(), 0, ops), b.q(), ops), ops);
    if (a.p().width() != 0) q = add(q, core_multiply(flip_conjugate(a.p(), 0, ops), b.q(), ops), ops);
  }
  return THMatrix(std::move(p), std::move(q));
}

THMatrix power(const THMatrix& a, std::size_t k, OpCount* ops) {
  if (k == 0) throw Error(Errc::InvalidArgument, "matrix power exponent must be positive");
  THMatrix base = a;
  std::optional<THMatrix> acc;
  while (true) {
    if (k & 1) acc = acc ? mul(*acc, base, ops) : base;
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base, ops);
  }
  return *acc;
}

// (P + J Q)^T = P^T + J (J Q^T J)
THMatrix transpose(const THMatrix& a, OpCount* ops) {
  ToeplitzLikeCore q = a.q().width() == 0 ? a.q() : flip_conjugate(transpose(a.q()), 0, ops);
  return THMatrix(transpose(a.p()), std::move(q));
}

// tr(J L(g) U(h)) = sum_{k >= 0} [x^(n-1-2k)] g(x) h(x)
Fe trace(const THMatrix& a, OpCount* ops) {
  const auto& f = a.field();
  const std::size_t n = a.n();
  Fe t = trace(a.p());
  tally(ops, 2 * n * a.p().width());
  for (std::size_t j = 0; j < a.q().width(); ++j) {
    const Vec gh = convolve(f, a.q().gen().g()[j], a.q().gen().h()[j], MulAlgo::Auto, ops);
    for (std::size_t m = n - 1;; m -= 2) {
      t = f.add(t, gh[m]);
      if (m < 2) break;
    }
  }
  return t;
}

}  // namespace thmat
