#include "golomb/approx.hpp"

#include <mpfr.h>

#include <algorithm>
#include <string>

namespace golomb::approx {

degenerate_evaluation::degenerate_evaluation(std::int64_t k, std::int64_t m)
    : std::runtime_error("convergent: Q_{k,m}(1/b) = 0 for k=" + std::to_string(k) +
                         ", m=" + std::to_string(m)),
      k_(k),
      m_(m) {}

insufficient_records::insufficient_records(std::int64_t k)
    : std::runtime_error("exponent schedule: fewer than 3 usable records for k=" +
                         std::to_string(k)),
      k_(k) {}

rational_interval abs_distance(const rational_interval& x, const rational& r) {
  const rational lo_d = x.lo - r;
  const rational hi_d = x.hi - r;
  if (lo_d >= 0) return {lo_d, hi_d};
  if (hi_d <= 0) return {-hi_d, -lo_d};
  return {rational(0), std::max(hi_d, rational(-lo_d))};
}

namespace {

void make_joint_primitive(pade::int_polynomial& p, pade::int_polynomial& q) {
  integer g;
  mpz_gcd(g.get_mpz_t(), p.content().get_mpz_t(), q.content().get_mpz_t());
  if (g > 1) {
    auto divide = [&g](const pade::int_polynomial& poly) {
      std::vector<integer> c = poly.coeffs();
      for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      return pade::int_polynomial(std::move(c));
    };
    p = divide(p);
    q = divide(q);
  }
  if (q.coeff(0) < 0) {
    p = p.negated();
    q = q.negated();
  }
}

}  // namespace

lifted_approximant lift(const pade::pade_approximant& a, std::int64_t m, int epsilon) {
  if (m < 0) throw std::domain_error("lift: m must be >= 0");
  if (epsilon != -1 && epsilon != 1) throw std::domain_error("lift: epsilon must be +-1");

  // Partial-fraction sum of the first m terms over the common denominator
  // prod_{j<m} (1 + eps z^{2^j}).
  pade::int_polynomial den({1});
  pade::int_polynomial num;  // zero
  for (std::int64_t j = 0; j < m; ++j) {
    const std::int64_t t = std::int64_t(1) << j;
    std::vector<integer> f(static_cast<std::size_t>(t) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(t)] = epsilon;
    const pade::int_polynomial factor(std::move(f));
    num = num * factor + pade::int_polynomial({1}).shift_up(t) * den;
    den = den * factor;
  }

  const std::int64_t stretch = std::int64_t(1) << m;
  const pade::int_polynomial qs = a.q.stretch(stretch);
  const pade::int_polynomial ps = a.p.stretch(stretch);

  lifted_approximant l;
  l.k = a.k;
  l.m = m;
  l.epsilon = epsilon;
  l.q = den * qs;
  l.p = num * qs + den * ps;
  make_joint_primitive(l.p, l.q);

  if (l.p.degree() > l.degree_bound() || l.q.degree() > l.degree_bound())
    throw std::logic_error("lift: degree bound exceeded");
  return l;
}

rational_interval evaluate_reference(int epsilon, const integer& b, const rational& target_gap) {
  if (epsilon != -1 && epsilon != 1)
    throw std::domain_error("evaluate_reference: epsilon must be +-1");
  if (b < 2) throw std::domain_error("evaluate_reference: base must be >= 2");
  if (target_gap <= 0) throw std::domain_error("evaluate_reference: gap must be positive");

  // Smallest N with tail bound 4 b^{-2^{N+1}} < gap.
  std::int64_t n_top = 0;
  integer pw = b * b;  // b^{2^{N+1}}
  while (rational(4) >= target_gap * rational(pw)) {
    pw = pw * pw;
    ++n_top;
  }

  rational sum(0);
  integer p = b;  // b^{2^n}
  for (std::int64_t n = 0; n <= n_top; ++n) {
    sum += make_rational(1, p + epsilon);
    p = p * p;
  }
  const rational tail = make_rational(4, pw);
  return {sum, sum + tail};
}

convergent_record convergent(const lifted_approximant& l, const integer& b,
                             const rational_interval& alpha) {
  if (b < 2) throw std::domain_error("convergent: base must be >= 2");
  const std::int64_t d = l.degree_bound();
  integer q = l.q.eval_scaled(b, d);
  if (q == 0) throw degenerate_evaluation(l.k, l.m);
  integer p = l.p.eval_scaled(b, d);
  if (q < 0) {
    q = -q;
    p = -p;
  }

  if (alpha.width() * rational(q * q) >= 1)
    throw std::invalid_argument("convergent: alpha enclosure wider than 1/q^2; tighten it");

  convergent_record rec;
  rec.k = l.k;
  rec.m = l.m;
  rec.b = b;
  rec.epsilon = l.epsilon;
  rec.p = p;
  rec.q = q;
  rec.err = abs_distance(alpha, make_rational(p, q));
  if (rec.err.lo <= 0)
    throw std::invalid_argument("convergent: alpha enclosure touches p/q; tighten it");
  if (q >= 2) rec.mu_eff = effective_exponent(rec);
  return rec;
}

rational effective_exponent(const convergent_record& rec) {
  if (rec.q <= 1) throw std::domain_error("effective_exponent: q must be >= 2");
  if (rec.err.lo <= 0 || rec.err.hi <= 0)
    throw std::domain_error("effective_exponent: degenerate error interval");

  mpfr_t log_err, log_q, mu;
  mpfr_init2(log_err, 128);
  mpfr_init2(log_q, 128);
  mpfr_init2(mu, 128);

  // numerator -log(err.hi) rounded down: log rounded up, exact negation
  mpfr_set_q(log_err, rec.err.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_log(log_err, log_err, MPFR_RNDU);
  mpfr_neg(log_err, log_err, MPFR_RNDD);
  // denominator rounded away from the quotient's direction
  const bool num_nonneg = mpfr_sgn(log_err) >= 0;
  mpfr_set_z(log_q, rec.q.get_mpz_t(), num_nonneg ? MPFR_RNDU : MPFR_RNDD);
  mpfr_log(log_q, log_q, num_nonneg ? MPFR_RNDU : MPFR_RNDD);
  mpfr_div(mu, log_err, log_q, MPFR_RNDD);

  rational out;
  mpfr_get_q(out.get_mpq_t(), mu);
  mpfr_clear(log_err);
  mpfr_clear(log_q);
  mpfr_clear(mu);
  return out;
}

rational ar_bound(const rational& rho, const rational& delta, const rational& theta) {
  if (!(rho > 0)) throw std::domain_error("ar_bound: rho must be positive");
  if (!(delta > 0 && delta <= rho)) throw std::domain_error("ar_bound: need 0 < delta <= rho");
  if (!(theta >= 1)) throw std::domain_error("ar_bound: theta must be >= 1");
  return (rational(1) + rho) * theta / delta;
}

gap_result gap_sequence(std::int64_t big_k, std::int64_t n0, std::int64_t count) {
  if (big_k < 1) throw std::domain_error("gap_sequence: K must be >= 1");
  if (n0 < 0) throw std::domain_error("gap_sequence: n0 must be >= 0");
  if (count < 2) throw std::domain_error("gap_sequence: count must be >= 2");

  std::vector<std::int64_t> ks;
  const std::int64_t lo = (std::int64_t(1) << (big_k - 1)) + 1;
  const std::int64_t hi = (std::int64_t(1) << big_k) + 1;
  for (std::int64_t k = lo; k <= hi; ++k)
    if (k % 2 == 1) ks.push_back(k);

  // k-way merge over the doubling streams k*2^n.
  std::vector<integer> heads(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i)
    heads[i] = integer(ks[i]) * pow_int(2, static_cast<unsigned long>(n0));

  gap_result out;
  out.values.reserve(static_cast<std::size_t>(count));
  out.max_ratio = 0;
  while (static_cast<std::int64_t>(out.values.size()) < count) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < heads.size(); ++i)
      if (heads[i] < heads[best]) best = i;
    out.values.push_back(heads[best]);
    heads[best] *= 2;
    const std::size_t n = out.values.size();
    if (n >= 2) {
      const rational ratio = make_rational(out.values[n - 1], out.values[n - 2]);
      if (ratio > out.max_ratio) out.max_ratio = ratio;
    }
  }
  return out;
}

namespace {

rational log_ratio_estimate(const integer& q_next, const integer& q_prev) {
  mpfr_t a, b, r;
  mpfr_init2(a, 128);
  mpfr_init2(b, 128);
  mpfr_init2(r, 128);
  mpfr_set_z(a, q_next.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(b, q_prev.get_mpz_t(), MPFR_RNDN);
  mpfr_log(a, a, MPFR_RNDN);
  mpfr_log(b, b, MPFR_RNDN);
  mpfr_div(r, a, b, MPFR_RNDN);
  rational out;
  mpfr_get_q(out.get_mpq_t(), r);
  mpfr_clear(a);
  mpfr_clear(b);
  mpfr_clear(r);
  return out;
}

}  // namespace

exponent_schedule build_exponent_schedule(std::int64_t big_k, const integer& b, int epsilon,
                                          std::int64_t m_max) {
  if (big_k < 1) throw std::domain_error("exponent schedule: K must be >= 1");
  if (b < 2) throw std::domain_error("exponent schedule: base must be >= 2");
  if (m_max < 2) throw std::domain_error("exponent schedule: m_max must be >= 2");

  exponent_schedule sched;
  sched.big_k = big_k;
  sched.b = b;
  sched.epsilon = epsilon;
  const integer two_km1 = pow_int(2, static_cast<unsigned long>(big_k - 1));
  const integer two_k = pow_int(2, static_cast<unsigned long>(big_k));
  sched.theta = make_rational(two_km1 + 3, two_km1 + 1);
  sched.delta = make_rational(two_k, two_k + 1);
  sched.rho = 1;

  struct pending {
    lifted_approximant l;
    integer q;
    rational h_abs;
  };
  std::vector<pending> kept;

  for (integer kp1 = two_km1 + 1; kp1 <= two_k + 1; ++kp1) {
    if (!is_odd(kp1)) continue;
    const std::int64_t k = kp1.get_si() - 1;
    const pade::pade_approximant base = pade::golomb_pade(epsilon, k);
    const rational h_abs = abs(base.h_k);

    std::vector<std::optional<std::pair<lifted_approximant, integer>>> by_m(
        static_cast<std::size_t>(m_max) + 1);
    for (std::int64_t m = 0; m <= m_max; ++m) {
      lifted_approximant l = lift(base, m, epsilon);
      integer q = l.q.eval_scaled(b, l.degree_bound());
      if (q == 0) {
        sched.degenerate.emplace_back(k, m);
        continue;
      }
      if (q < 0) q = -q;
      by_m[static_cast<std::size_t>(m)] = {std::move(l), std::move(q)};
    }

    // m0(k): smallest m whose whole suffix up to m_max is non-degenerate with
    // strictly increasing q.
    std::optional<std::int64_t> m0;
    for (std::int64_t cand = 0; cand + 2 <= m_max; ++cand) {
      bool good = true;
      for (std::int64_t m = cand; m <= m_max && good; ++m) {
        const auto& cur = by_m[static_cast<std::size_t>(m)];
        if (!cur || (m > cand && !(by_m[static_cast<std::size_t>(m - 1)]->second < cur->second)))
          good = false;
      }
      if (good) {
        m0 = cand;
        break;
      }
    }
    if (!m0 || m_max - *m0 + 1 < 3) throw insufficient_records(k);
    sched.m0.emplace_back(k, *m0);

    for (std::int64_t m = *m0; m <= m_max; ++m)
      kept.push_back({std::move(by_m[static_cast<std::size_t>(m)]->first),
                      std::move(by_m[static_cast<std::size_t>(m)]->second), h_abs});
  }

  // One shared enclosure, tight enough for every record's 1/q^2 duty and far
  // below the smallest expected error magnitude.
  rational gap(-1);
  for (const auto& pend : kept) {
    const std::int64_t e = (std::int64_t(1) << pend.l.m) * (2 * pend.l.k + 1);
    const rational by_err =
        pend.h_abs / (rational(pow_int(2, 20)) * rational(pow_int(b, static_cast<unsigned long>(e))));
    const rational by_q = make_rational(1, 2 * pend.q * pend.q);
    const rational r = std::min(by_err, by_q);
    if (gap < 0 || r < gap) gap = r;
  }
  const rational_interval alpha = evaluate_reference(epsilon, b, gap);

  for (const auto& pend : kept) sched.records.push_back(convergent(pend.l, b, alpha));
  std::sort(sched.records.begin(), sched.records.end(),
            [](const convergent_record& x, const convergent_record& y) {
              if (x.q != y.q) return x.q < y.q;
              if (x.k != y.k) return x.k < y.k;
              return x.m < y.m;
            });
  for (std::size_t i = 1; i < sched.records.size(); ++i)
    if (!(sched.records[i - 1].q < sched.records[i].q))
      throw std::logic_error("exponent schedule: q values fail to increase strictly");

  const std::size_t n = sched.records.size();
  const std::size_t tail_begin = n / 2;
  sched.mu_eff_tail = sched.records.back().mu_eff.value();
  sched.mu_eff_tail_min = sched.mu_eff_tail;
  sched.mu_eff_tail_max = sched.mu_eff_tail;
  sched.max_log_q_ratio_tail = 0;
  for (std::size_t i = tail_begin; i < n; ++i) {
    const rational mu = sched.records[i].mu_eff.value();
    sched.mu_eff_tail_min = std::min(sched.mu_eff_tail_min, mu);
    sched.mu_eff_tail_max = std::max(sched.mu_eff_tail_max, mu);
    if (i + 1 < n) {
      const rational lr = log_ratio_estimate(sched.records[i + 1].q, sched.records[i].q);
      sched.max_log_q_ratio_tail = std::max(sched.max_log_q_ratio_tail, lr);
    }
  }
  return sched;
}

}  // namespace golomb::approx
