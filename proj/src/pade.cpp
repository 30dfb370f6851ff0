#include "golomb/pade.hpp"

#include <string>
#include <vector>

namespace golomb::pade {

not_normal_error::not_normal_error(std::int64_t failing_order)
    : std::runtime_error("pade: Hankel minor of order " + std::to_string(failing_order) +
                         " is singular"),
      j_(failing_order) {}

void pade_approximant::canonicalize() {
  if (q.is_zero()) throw malformed_approximant_error("pade: zero denominator");
  integer g;
  mpz_gcd(g.get_mpz_t(), p.content().get_mpz_t(), q.content().get_mpz_t());
  if (g > 1) {
    std::vector<integer> pc = p.coeffs(), qc = q.coeffs();
    for (auto& c : pc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : qc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    p = int_polynomial(std::move(pc));
    q = int_polynomial(std::move(qc));
  }
  integer ref = q.coeff(0);
  if (ref == 0) {
    for (std::int64_t i = 1; i <= q.degree() && ref == 0; ++i) ref = q.coeff(i);
  }
  if (ref < 0) {
    p = p.negated();
    q = q.negated();
  }
}

bool pade_approximant::is_canonical() const {
  pade_approximant copy = *this;
  copy.canonicalize();
  return copy.p == p && copy.q == q;
}

truncated_series golomb_series(int epsilon, std::int64_t order) {
  if (epsilon != -1 && epsilon != 1) throw std::domain_error("golomb_series: epsilon must be +-1");
  if (order < 1) throw std::domain_error("golomb_series: order must be >= 1");
  truncated_series s(order);
  for (std::int64_t t = 1; t <= order; t *= 2) {
    for (std::int64_t j = 1; j * t <= order; ++j) {
      const int term = (epsilon == -1) ? 1 : ((j % 2 == 1) ? 1 : -1);
      s.set_coeff(j * t, s.coeff(j * t) + term);
    }
  }
  return s;
}

namespace {

// Exact determinant of a dense rational matrix by Gaussian elimination.
rational det_rational(std::vector<rational> a, std::size_t n) {
  if (n == 0) return rational(1);
  rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return rational(0);
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    const rational inv = rational(1) / a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      const rational f = a[i * n + c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

rational hankel_minor(const truncated_series& c, std::int64_t j) {
  std::vector<rational> m(static_cast<std::size_t>(j) * static_cast<std::size_t>(j));
  for (std::int64_t r = 0; r < j; ++r)
    for (std::int64_t s = 0; s < j; ++s)
      m[static_cast<std::size_t>(r * j + s)] = c.coeff(r + s);
  return det_rational(std::move(m), static_cast<std::size_t>(j));
}

}  // namespace

pade_approximant pade_k(const truncated_series& c, std::int64_t k) {
  if (k < 1) throw std::domain_error("pade_k: k must be >= 1");
  if (c.order() < 2 * k + 1) throw std::domain_error("pade_k: series order must be >= 2k+1");
  for (std::int64_t j = 1; j <= k; ++j)
    if (hankel_minor(c, j) == 0) throw not_normal_error(j);

  // q_0 = 1; the k conditions are the vanishing of coefficients z^k..z^{2k-1} of c*q.
  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<rational> a(kk * (kk + 1));
  auto at = [&](std::size_t r, std::size_t s) -> rational& { return a[r * (kk + 1) + s]; };
  for (std::size_t r = 0; r < kk; ++r) {
    for (std::size_t s = 0; s < kk; ++s)
      at(r, s) = c.coeff(static_cast<std::int64_t>(kk + r - 1 - s));
    at(r, kk) = -c.coeff(static_cast<std::int64_t>(kk + r));
  }
  for (std::size_t col = 0; col < kk; ++col) {
    std::size_t piv = col;
    while (piv < kk && at(piv, col) == 0) ++piv;
    if (piv == kk) throw std::logic_error("pade_k: singular system despite nonzero minors");
    if (piv != col)
      for (std::size_t s = col; s <= kk; ++s) std::swap(at(col, s), at(piv, s));
    const rational inv = rational(1) / at(col, col);
    for (std::size_t i = 0; i < kk; ++i) {
      if (i == col || at(i, col) == 0) continue;
      const rational f = at(i, col) * inv;
      for (std::size_t s = col; s <= kk; ++s) at(i, s) -= f * at(col, s);
    }
  }
  std::vector<rational> qr(kk + 1);
  qr[0] = 1;
  for (std::size_t s = 0; s < kk; ++s) qr[s + 1] = at(s, kk) / at(s, s);

  std::vector<rational> pr(kk);
  for (std::size_t j = 0; j < kk; ++j) {
    rational s(0);
    for (std::size_t i = 0; i <= j && i <= kk; ++i)
      s += qr[i] * c.coeff(static_cast<std::int64_t>(j - i));
    pr[j] = s;
  }

  integer den(1);
  for (const auto& x : qr) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  for (const auto& x : pr) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  auto clear = [&den](const std::vector<rational>& v) {
    std::vector<integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      rational scaled = v[i] * rational(den);
      out[i] = scaled.get_num();
    }
    return out;
  };

  pade_approximant result;
  result.k = k;
  result.p = int_polynomial(clear(pr));
  result.q = int_polynomial(clear(qr));
  result.canonicalize();
  result.h_k = defect(c, result);
  return result;
}

rational defect(const truncated_series& c, const pade_approximant& a) {
  if (a.q.is_zero() || a.q.coeff(0) == 0)
    throw malformed_approximant_error("defect: denominator vanishes at 0");
  const std::int64_t n = c.order();
  if (n < 2 * a.k) throw std::domain_error("defect: series order must be >= 2k");
  const truncated_series approx = a.p.to_series(n) * a.q.to_series(n).inverse(n);
  return (c - approx).coeff(2 * a.k);
}

pade_approximant golomb_pade(int epsilon, std::int64_t k) {
  if (k < 1) throw std::domain_error("golomb_pade: k must be >= 1");
  const std::int64_t order = 2 * k + 4;  // one coefficient to spare past every contract
  const truncated_series h = golomb_series(epsilon, order);
  pade_approximant a = pade_k(h.shift_down(), k);
  a.p = a.p.shift_up(1);

  const truncated_series err = h - a.p.to_series(order) * a.q.to_series(order).inverse(order);
  const std::int64_t contact = err.first_nonzero();
  if (contact != 2 * k + 1)
    throw std::logic_error("golomb_pade: contact order " + std::to_string(contact) +
                           " instead of " + std::to_string(2 * k + 1));
  a.h_k = err.coeff(contact);
  return a;
}

}  // namespace golomb::pade
