#pragma once

// Reference computations for the test suites. Plain rational vectors and
// brute force only; nothing here calls into the library.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;  // bivariate, [i][j], truncated at i + j <= N

inline QVec mul(const QVec& a, const QVec& b, int n) {
  QVec c(n + 1);
  for (int i = 0; i <= n && i < (int)a.size(); ++i)
    for (int j = 0; i + j <= n && j < (int)b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline QVec power(const QVec& a, int k, int n) {
  QVec r(n + 1);
  r[0] = 1;
  for (int i = 0; i < k; ++i) r = mul(r, a, n);
  return r;
}

// sum f_k g^k, g(0) = 0
inline QVec compose(const QVec& f, const QVec& g, int n) {
  QVec out(n + 1), gk(n + 1);
  gk[0] = 1;
  for (int k = 0; k <= n && k < (int)f.size(); ++k) {
    for (int i = 0; i <= n; ++i) out[i] += f[k] * gk[i];
    gk = mul(gk, g, n);
  }
  return out;
}

inline QVec reciprocal(const QVec& a, int n) {
  QVec r(n + 1);
  r[0] = 1 / a[0];
  for (int i = 1; i <= n; ++i) {
    mpq_class s = 0;
    for (int j = 1; j <= i && j < (int)a.size(); ++j) s += a[j] * r[i - j];
    r[i] = -s / a[0];
  }
  return r;
}

// Lagrange inversion: [x^n] f^{-1} = (1/n) [x^{n-1}] (x / f)^n.
inline QVec lagrange_revert(const QVec& f, int n) {
  QVec shifted(n + 1);
  for (int i = 0; i <= n && i + 1 < (int)f.size(); ++i) shifted[i] = f[i + 1];
  const QVec h = reciprocal(shifted, n);
  QVec g(n + 1);
  for (int k = 1; k <= n; ++k) g[k] = power(h, k, n)[k - 1] / k;
  return g;
}

inline QMat mul2(const QMat& a, const QMat& b, int n) {
  QMat c(n + 1, QVec(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (a[i][j] == 0) continue;
      for (int k = 0; i + j + k <= n; ++k)
        for (int l = 0; i + j + k + l <= n; ++l) c[i + k][j + l] += a[i][j] * b[k][l];
    }
  return c;
}

// f(S(x, y)) with S(0, 0) = 0
inline QMat compose2(const QVec& f, const QMat& s, int n) {
  QMat out(n + 1, QVec(n + 1)), sk(n + 1, QVec(n + 1));
  sk[0][0] = 1;
  for (int k = 0; k <= n && k < (int)f.size(); ++k) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) out[i][j] += f[k] * sk[i][j];
    sk = mul2(sk, s, n);
  }
  return out;
}

// l^{-1}(l(x) + l(y)) by brute force.
inline QMat law_from_log(const QVec& l, int n) {
  QMat sum(n + 1, QVec(n + 1));
  for (int i = 1; i <= n; ++i) {
    sum[i][0] = l[i];
    sum[0][i] = l[i];
  }
  return compose2(lagrange_revert(l, n), sum, n);
}

inline mpz_class binomial(long n, long k) {
  // generalized: n(n-1)...(n-k+1)/k! for any integer n
  mpq_class r = 1;
  for (long i = 0; i < k; ++i) r *= mpq_class(n - i, i + 1);
  r.canonicalize();
  return r.get_num();
}

inline mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int i = part; i <= n; ++i) p[i] += p[i - part];
  return p[n];
}

// some s in [1, m) with a s = 0 mod m
inline bool zero_divisor_mod(long a, long m) {
  for (long s = 1; s < m; ++s)
    if ((a % m) * s % m == 0) return true;
  return false;
}

inline bool unit_mod(long a, long m) {
  for (long s = 0; s < m; ++s)
    if (((a % m + m) % m) * s % m == 1 % m) return true;
  return false;
}

inline QVec random_rationals(std::mt19937& rng, int n, int num = 9, int den = 4) {
  std::uniform_int_distribution<int> a(-num, num), b(1, den);
  QVec v;
  for (int i = 0; i <= n; ++i) {
    mpq_class q(a(rng), b(rng));
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

}  // namespace oracle
