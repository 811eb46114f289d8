#include "thmat/annihilator.hpp"

#include <optional>
#include <string>

#include "thmat/random.hpp"

namespace thmat {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t ceil_sqrt(std::size_t x) {
  std::size_t r = 0;
  while (r * r < x) ++r;
  return r;
}

void check_block(const THMatrix& a, const Block& blk, const char* name) {
  for (const Vec& col : blk)
    if (col.size() != a.n())
      throw Error(Errc::ShapeMismatch, std::string(name) + " column of length " +
                                           std::to_string(col.size()) + " for n = " +
                                           std::to_string(a.n()));
}

void check_shapes(const THMatrix& a, const Block& u, const Block& v) {
  if (u.empty() || u.size() != v.size())
    throw Error(Errc::ShapeMismatch, "projector widths " + std::to_string(u.size()) + " and " +
                                         std::to_string(v.size()));
  check_block(a, u, "U");
  check_block(a, v, "V");
}

// W^T X for blocks of equal width.
DenseMatrix block_inner(const PrimeField& f, const Block& w, const Block& x, OpCount* ops) {
  DenseMatrix s(f, w.size());
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      Fe acc(0);
      for (std::size_t k = 0; k < w[a].size(); ++k) acc = f.mul_add(acc, w[a][k], x[b][k]);
      s(a, b) = acc;
    }
  tally(ops, w.size() * x.size() * (w.empty() ? 0 : w[0].size()));
  return s;
}

Block apply_block(const THMatrix& a, const Block& x, OpCount* ops) {
  Block y;
  y.reserve(x.size());
  for (const Vec& col : x) y.push_back(matvec(a, col, ops));
  return y;
}

Block apply_block_transpose(const THMatrix& a, const Block& x, OpCount* ops) {
  Block y;
  y.reserve(x.size());
  for (const Vec& col : x) y.push_back(matvec_transpose(a, col, ops));
  return y;
}

}  // namespace

BsgsPlan BsgsPlan::defaults(std::size_t n, std::size_t beta) {
  if (beta == 0) throw Error(Errc::BadBlockSize, "block size must be positive");
  BsgsPlan plan;
  plan.beta = beta;
  plan.length = 2 * ceil_div(n, beta) + 2;
  plan.stride = std::min(std::max<std::size_t>(ceil_sqrt(2 * n), 1), plan.length);
  return plan;
}

void BsgsPlan::validate() const {
  if (beta < 1 || stride < 1 || length < 2 || stride > length)
    throw Error(Errc::BadPlan, "plan beta=" + std::to_string(beta) + " stride=" +
                                   std::to_string(stride) + " length=" + std::to_string(length));
}

Projectors structured_projectors(std::size_t n, std::size_t beta, const PrimeField& f,
                                 std::uint64_t seed) {
  if (beta < 1 || beta > n)
    throw Error(Errc::BadBlockSize, "block size " + std::to_string(beta) + " outside [1, " +
                                        std::to_string(n) + "]");
  Rng rng(derive_seed(seed, 0x70726f6a));
  auto toeplitz_block = [&] {
    const Vec t = rng.vector(f, n);
    Block blk(beta, Vec(n));
    for (std::size_t j = 0; j < beta; ++j)
      for (std::size_t i = j; i < n; ++i) blk[j][i] = t[i - j];
    return blk;
  };
  Projectors pr;
  pr.u = toeplitz_block();
  pr.v = toeplitz_block();
  return pr;
}

BlockSequence krylov_sequence_naive(const THMatrix& a, const Block& u, const Block& v,
                                    std::size_t length, OpCount* ops) {
  check_shapes(a, u, v);
  BlockSequence seq{u.size(), {}};
  seq.terms.reserve(length);
  Block cur = v;
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) cur = apply_block(a, cur, ops);
    seq.terms.push_back(block_inner(a.field(), u, cur, ops));
  }
  return seq;
}

BlockSequence bsgs_sequence(const THMatrix& a, const Block& u, const Block& v, const BsgsPlan& plan,
                            OpCount* ops) {
  plan.validate();
  check_shapes(a, u, v);
  if (plan.beta != u.size())
    throw Error(Errc::ShapeMismatch, "plan block size " + std::to_string(plan.beta) +
                                         " vs projector width " + std::to_string(u.size()));
  const std::size_t s = plan.stride, len = plan.length;

  std::vector<Block> babies;
  babies.reserve(s);
  babies.push_back(v);
  for (std::size_t i = 1; i < s; ++i) babies.push_back(apply_block(a, babies.back(), ops));

  BlockSequence seq{plan.beta, std::vector<DenseMatrix>(len, DenseMatrix(a.field(), plan.beta))};
  const std::size_t giants = ceil_div(len, s);
  std::optional<THMatrix> giant;
  if (giants > 1) giant = power(a, s, ops);
  Block w = u;
  for (std::size_t j = 0; j < giants; ++j) {
    if (j > 0) w = apply_block_transpose(*giant, w, ops);
    for (std::size_t i = 0; i < s && j * s + i < len; ++i)
      seq.terms[j * s + i] = block_inner(a.field(), w, babies[i], ops);
  }
  return seq;
}

bool verify_annihilates(const THMatrix& a, const Poly& f, std::size_t trials, std::uint64_t seed,
                        OpCount* ops) {
  if (trials == 0) throw Error(Errc::InvalidArgument, "at least one verification trial");
  if (f.is_zero()) return true;
  const auto& fld = a.field();
  Rng rng(derive_seed(seed, 0x766572696679));
  for (std::size_t t = 0; t < trials; ++t) {
    const Vec b = rng.vector(fld, a.n());
    Vec r(a.n());
    for (std::size_t k = f.size(); k-- > 0;) {
      if (k + 1 < f.size()) r = matvec(a, r, ops);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = fld.mul_add(r[i], f[k], b[i]);
      tally(ops, r.size());
    }
    for (Fe x : r)
      if (x.v != 0) return false;
  }
  return true;
}

AnnihilatorReport minpoly(const THMatrix& a, std::uint64_t seed, SequenceMode mode,
                          std::size_t verify_trials) {
  OpCount ops;
  const std::size_t n = a.n();
  const Projectors pr = structured_projectors(n, 1, a.field(), seed);
  const BsgsPlan plan = BsgsPlan::defaults(n, 1);
  const BlockSequence seq = mode == SequenceMode::Bsgs
                                ? bsgs_sequence(a, pr.u, pr.v, plan, &ops)
                                : krylov_sequence_naive(a, pr.u, pr.v, plan.length, &ops);
  Vec scalars;
  scalars.reserve(seq.length());
  for (const auto& t : seq.terms) scalars.push_back(t(0, 0));
  Poly m = berlekamp_massey(a.field(), scalars, &ops);

  AnnihilatorReport rep{std::move(m), mode == SequenceMode::Bsgs ? "minpoly-bsgs" : "minpoly-naive",
                        seed, false, 0};
  rep.verified = verify_annihilates(a, rep.polynomial, verify_trials, derive_seed(seed, 1), &ops);
  rep.field_mult_count = ops.mults;
  return rep;
}

AnnihilatorReport charpoly_generic(const THMatrix& a, std::size_t beta, std::uint64_t seed) {
  const auto& f = a.field();
  const std::size_t n = a.n();
  if (f.modulus() <= n + 1)
    throw Error(Errc::FieldTooSmall, "p = " + std::to_string(f.modulus()) + " must exceed n + 1");
  OpCount ops;
  const Projectors pr = structured_projectors(n, beta, f, seed);
  const BsgsPlan plan = BsgsPlan::defaults(n, beta);
  const BlockSequence seq = bsgs_sequence(a, pr.u, pr.v, plan, &ops);

  Poly c(f);
  try {
    c = polymat_det(minimal_matrix_generator(seq, n, &ops), &ops);
  } catch (const Error& e) {
    if (e.code() != Errc::SingularEverywhere && e.code() != Errc::InsufficientLength) throw;
    throw NotGenericError(Poly(f), e.what());
  }
  if (c.degree() != static_cast<std::ptrdiff_t>(n))
    throw NotGenericError(c, "generator determinant has degree " + std::to_string(c.degree()) +
                                 ", expected " + std::to_string(n));
  const Fe tr = trace(a, &ops);
  if (c[n - 1] != f.neg(tr)) throw NotGenericError(c, "trace certificate failed");
  if (!verify_annihilates(a, c, 3, derive_seed(seed, 2), &ops))
    throw NotGenericError(c, "annihilation certificate failed");

  AnnihilatorReport rep{std::move(c), "charpoly-block", seed, true, 0};
  rep.field_mult_count = ops.mults;
  return rep;
}

}  // namespace thmat
