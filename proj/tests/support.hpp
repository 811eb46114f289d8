#pragma once

// Small independent references shared by the unit tests. Nothing here calls
// the routine being checked.

#include <cstdint>
#include <vector>

#include "thmat/dense.hpp"
#include "thmat/field.hpp"
#include "thmat/poly.hpp"
#include "thmat/random.hpp"

namespace thmat::testing {

inline Vec ints(const PrimeField& f, std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(f.elem_signed(x));
  return v;
}

inline Vec unit(const PrimeField& f, std::size_t n, std::size_t k) {
  Vec v(n, f.zero());
  v[k] = f.one();
  return v;
}

// Fermat inverse, independent of the extended-Euclid path.
inline Fe fermat_inv(const PrimeField& f, Fe a) {
  std::uint64_t r = 1, b = a.v, e = f.modulus() - 2;
  while (e) {
    if (e & 1) r = f.mul(Fe(r), Fe(b)).v;
    b = f.mul(Fe(b), Fe(b)).v;
    e >>= 1;
  }
  return Fe(r);
}

inline Vec schoolbook(const PrimeField& f, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return c;
}

inline DenseMatrix random_dense(const PrimeField& f, std::size_t n, Rng& rng) {
  DenseMatrix a(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(f);
  return a;
}

inline DenseMatrix dense_toeplitz(const PrimeField& f, const Vec& col, const Vec& row) {
  const std::size_t n = col.size();
  DenseMatrix t(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = i >= j ? col[i - j] : row[j - i];
  return t;
}

// Entrywise triple loop, no shortcuts.
inline DenseMatrix naive_mul(const DenseMatrix& a, const DenseMatrix& b) {
  const auto& f = a.field();
  DenseMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Fe s = f.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

inline DenseMatrix naive_eval(const Poly& p, const DenseMatrix& a) {
  const auto& f = a.field();
  const std::size_t n = a.rows();
  DenseMatrix acc(f, n), pw = DenseMatrix::identity(f, n);
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) = f.add(acc(i, j), f.mul(p[k], pw(i, j)));
    pw = naive_mul(pw, a);
  }
  return acc;
}

}  // namespace thmat::testing

#include "thmat/error.hpp"

// Evaluates expr and checks it throws thmat::Error with the given code.
#define CHECK_ERRC(expr, errc)                            \
  do {                                                    \
    bool thrown_ = false;                                 \
    try {                                                 \
      (void)(expr);                                       \
    } catch (const ::thmat::Error& e_) {                  \
      thrown_ = true;                                     \
      CHECK(e_.code() == (errc));                         \
    }                                                     \
    CHECK_MESSAGE(thrown_, "expected error: " #errc);     \
  } while (0)
