#include "thmat/poly.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "thmat/error.hpp"

namespace thmat {

Poly::Poly(const PrimeField& f, Vec coeffs) : field_(f), coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(const PrimeField& f, std::initializer_list<std::uint64_t> coeffs) : field_(f) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(f.elem(c));
  normalize();
}

Poly Poly::constant(const PrimeField& f, Fe c) { return Poly(f, Vec{c}); }

Poly Poly::monomial(const PrimeField& f, std::size_t k, Fe c) {
  Vec v(k + 1);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::linear_root(const PrimeField& f, Fe r) { return Poly(f, Vec{f.neg(r), f.one()}); }

void Poly::normalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

Fe Poly::eval(Fe x) const noexcept {
  Fe r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = field_.mul_add(*it, r, x);
  return r;
}

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw Error(Errc::FieldMismatch, "moduli " + std::to_string(a.field().modulus()) + " and " +
                                         std::to_string(b.field().modulus()));
}

constexpr std::size_t kSchoolbookCutoff = 32;

void schoolbook_into(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b,
                     std::span<Fe> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.mul_add(out[i + j], a[i], b[j]);
  }
}

// out must have room for 2n - 1 entries and be zero on entry; a, b length n.
void karatsuba_into(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b,
                    std::span<Fe> out, OpCount* ops) {
  const std::size_t n = a.size();
  if (n <= kSchoolbookCutoff) {
    schoolbook_into(f, a, b, out);
    tally(ops, n * n);
    return;
  }
  const std::size_t lo = n / 2, hi = n - lo;
  auto a0 = a.subspan(0, lo), a1 = a.subspan(lo);
  auto b0 = b.subspan(0, lo), b1 = b.subspan(lo);

  Vec z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba_into(f, a0, b0, z0, ops);
  karatsuba_into(f, a1, b1, z2, ops);

  Vec sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] = f.add(sa[i], a0[i]);
    sb[i] = f.add(sb[i], b0[i]);
  }
  karatsuba_into(f, sa, sb, z1, ops);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] = f.add(out[i + lo], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] = f.add(out[i + 2 * lo], z2[i]);
}

Vec karatsuba(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b, OpCount* ops) {
  const std::size_t n = std::max(a.size(), b.size());
  Vec pa(a.begin(), a.end()), pb(b.begin(), b.end());
  pa.resize(n);
  pb.resize(n);
  Vec out(2 * n - 1);
  karatsuba_into(f, pa, pb, out, ops);
  out.resize(a.size() + b.size() - 1);
  return out;
}

// In-place iterative radix-2 transform of length 2^log.
void ntt(const PrimeField& f, Vec& a, int log, bool inverse, OpCount* ops) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  Vec tw;
  for (int s = 1; s <= log; ++s) {
    const std::size_t len = std::size_t{1} << s, half = len >> 1;
    Fe w = f.root_of_unity(s);
    if (inverse) w = f.inv(w);
    tw.assign(half, f.one());
    for (std::size_t k = 1; k < half; ++k) tw[k] = f.mul(tw[k - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Fe u = a[i + k];
        Fe v = f.mul(a[i + k + half], tw[k]);
        a[i + k] = f.add(u, v);
        a[i + k + half] = f.sub(u, v);
      }
    }
    tally(ops, (half - 1) + n / 2);
  }
}

int ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

bool ntt_fits(const PrimeField& f, std::size_t out_len) {
  return f.ntt_capable() && ceil_log2(out_len) <= f.two_adicity();
}

Vec ntt_convolve(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b, OpCount* ops) {
  const std::size_t out_len = a.size() + b.size() - 1;
  const int log = ceil_log2(out_len);
  const std::size_t n = std::size_t{1} << log;
  Vec fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fa.resize(n);
  fb.resize(n);
  ntt(f, fa, log, false, ops);
  ntt(f, fb, log, false, ops);
  for (std::size_t i = 0; i < n; ++i) fa[i] = f.mul(fa[i], fb[i]);
  ntt(f, fa, log, true, ops);
  const Fe n_inv = f.inv(f.elem(n));
  fa.resize(out_len);
  for (auto& x : fa) x = f.mul(x, n_inv);
  tally(ops, n + out_len);
  return fa;
}

}  // namespace

Vec convolve(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b, MulAlgo algo,
             OpCount* ops) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  if (algo == MulAlgo::Auto) {
    if (std::min(a.size(), b.size()) <= kSchoolbookCutoff)
      algo = MulAlgo::Schoolbook;
    else if (ntt_fits(f, out_len))
      algo = MulAlgo::Ntt;
    else
      algo = MulAlgo::Karatsuba;
  }
  switch (algo) {
    case MulAlgo::Ntt:
      if (!ntt_fits(f, out_len))
        throw Error(Errc::TooLarge, "NTT unavailable for length " + std::to_string(out_len));
      return ntt_convolve(f, a, b, ops);
    case MulAlgo::Karatsuba:
      return karatsuba(f, a, b, ops);
    default: {
      Vec out(out_len);
      schoolbook_into(f, a, b, out);
      tally(ops, a.size() * b.size());
      return out;
    }
  }
}

Poly add(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  Vec c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  Vec c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly neg(const Poly& a) { return scale(a, a.field().neg(a.field().one())); }

Poly scale(const Poly& a, Fe c) {
  const auto& f = a.field();
  Vec v(a.coeffs());
  for (auto& x : v) x = f.mul(x, c);
  return Poly(f, std::move(v));
}

Poly mul(const Poly& a, const Poly& b, MulAlgo algo, OpCount* ops) {
  require_same_field(a, b);
  return Poly(a.field(), convolve(a.field(), a.coeffs(), b.coeffs(), algo, ops));
}

Poly make_monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.leading()));
}

DivRem divrem(const Poly& a, const Poly& b, OpCount* ops) {
  require_same_field(a, b);
  const auto& f = a.field();
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(f), a};
  const std::size_t db = b.size() - 1;
  Vec r(a.coeffs());
  Vec q(a.size() - db);
  const Fe lead_inv = f.inv(b.leading());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Fe c = f.mul(r[k + db], lead_inv);
    q[k] = c;
    if (c.v == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b.coeffs()[j]));
    tally(ops, db + 2);
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return make_monic(divrem(mul(a, b), gcd(a, b)).quotient);
}

Vec eval_many(const Poly& f, std::span<const Fe> points, OpCount* ops) {
  Vec out;
  out.reserve(points.size());
  for (Fe x : points) out.push_back(f.eval(x));
  tally(ops, points.size() * f.size());
  return out;
}

Poly interpolate(const PrimeField& f, std::span<const Fe> points, std::span<const Fe> values,
                 OpCount* ops) {
  const std::size_t n = points.size();
  if (values.size() != n)
    throw Error(Errc::LengthMismatch, std::to_string(n) + " points but " +
                                          std::to_string(values.size()) + " values");
  if (n == 0) return Poly(f);
  {
    Vec sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(Errc::DuplicatePoint, "point " + std::to_string(dup->v));
  }
  // Newton divided differences, one batched inversion per level.
  Vec d(values.begin(), values.end());
  Vec diffs;
  for (std::size_t j = 1; j < n; ++j) {
    diffs.clear();
    for (std::size_t i = j; i < n; ++i) diffs.push_back(f.sub(points[i], points[i - j]));
    const Vec inv = batch_inv(f, diffs, ops);
    for (std::size_t i = n - 1; i >= j; --i) d[i] = f.mul(f.sub(d[i], d[i - 1]), inv[i - j]);
    tally(ops, n - j);
  }
  Vec acc{d[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // acc = acc * (x - points[i]) + d[i]
    Vec next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], acc[k]);
      next[k] = f.sub(next[k], f.mul(acc[k], points[i]));
    }
    next[0] = f.add(next[0], d[i]);
    tally(ops, acc.size());
    acc = std::move(next);
  }
  return Poly(f, std::move(acc));
}

Poly berlekamp_massey(const PrimeField& f, std::span<const Fe> s, OpCount* ops) {
  if (s.empty()) throw Error(Errc::EmptySequence, "Berlekamp-Massey needs at least one term");
  // Connection polynomial C with s_k + sum_{i>=1} C_i s_{k-i} = 0.
  Vec c{f.one()}, b{f.one()};
  std::size_t len = 0, shift = 1;
  Fe last_disc = f.one();
  for (std::size_t k = 0; k < s.size(); ++k) {
    Fe disc = s[k];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) disc = f.mul_add(disc, c[i], s[k - i]);
    tally(ops, len);
    if (disc.v == 0) {
      ++shift;
      continue;
    }
    const Fe coef = f.mul(disc, f.inv(last_disc));
    Vec t = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] = f.sub(c[i + shift], f.mul(coef, b[i]));
    tally(ops, b.size() + 1);
    if (2 * len <= k) {
      len = k + 1 - len;
      b = std::move(t);
      last_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
  }
  // Monic generator of degree len is the reciprocal x^len C(1/x).
  c.resize(len + 1);
  Vec g(len + 1);
  for (std::size_t t = 0; t <= len; ++t) g[t] = c[len - t];
  return Poly(f, std::move(g));
}

bool annihilates_sequence(const Poly& g, std::span<const Fe> s) {
  if (g.is_zero()) return true;
  const auto& f = g.field();
  const auto d = static_cast<std::size_t>(g.degree());
  for (std::size_t i = 0; i + d < s.size(); ++i) {
    Fe acc(0);
    for (std::size_t t = 0; t <= d; ++t) acc = f.mul_add(acc, g[t], s[i + t]);
    if (acc.v != 0) return false;
  }
  return true;
}

}  // namespace thmat
