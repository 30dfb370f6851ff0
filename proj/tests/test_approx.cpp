#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golomb/approx.hpp"

using namespace golomb;
using approx::rational_interval;
using pade::int_polynomial;

TEST_CASE("lift at m = 0 is the identity") {
  const auto a = pade::golomb_pade(-1, 2);
  const auto l = approx::lift(a, 0, -1);
  CHECK(l.p == a.p);
  CHECK(l.q == a.q);
  CHECK(l.degree_bound() == 3);
}

TEST_CASE("lift of the first ruler approximant") {
  const auto a = pade::golomb_pade(-1, 1);
  const auto l = approx::lift(a, 1, -1);
  CHECK(l.p == int_polynomial{0, 1, 1, -3});
  CHECK(l.q == int_polynomial{1, -1, -2, 2});  // (1 - z)(1 - 2z^2)
  CHECK(l.degree_bound() == 4);
}

TEST_CASE("lifted contact sits at 2^m (2k+1) with the base defect") {
  for (int eps : {-1, 1})
    for (std::int64_t k = 1; k <= 3; ++k) {
      const auto a = pade::golomb_pade(eps, k);
      for (std::int64_t m = 0; m <= 3; ++m) {
        CAPTURE(eps);
        CAPTURE(k);
        CAPTURE(m);
        const auto l = approx::lift(a, m, eps);
        const std::int64_t bound = (std::int64_t(1) << m) * (k + 1);
        CHECK(l.p.degree() <= bound);
        CHECK(l.q.degree() <= bound);
        const std::int64_t order = (std::int64_t(1) << m) * (2 * k + 1) + 2;
        const auto h = pade::golomb_series(eps, order);
        const auto err = h - l.p.to_series(order) * l.q.to_series(order).inverse(order);
        CHECK(err.first_nonzero() == (std::int64_t(1) << m) * (2 * k + 1));
        CHECK(err.coeff(err.first_nonzero()) == a.h_k);
      }
    }
}

TEST_CASE("reference enclosures") {
  const rational gap = make_rational(1, 1000000);
  const auto fermat = approx::evaluate_reference(1, 2, gap);
  CHECK(fermat.width() < gap);
  CHECK(fermat.lo > make_rational(596063, 1000000));
  CHECK(fermat.hi < make_rational(596064, 1000000));

  const auto ruler = approx::evaluate_reference(-1, 2, gap);
  CHECK(ruler.width() < gap);
  CHECK(ruler.lo > make_rational(1403936, 1000000));
  CHECK(ruler.hi < make_rational(1403937, 1000000));

  CHECK_THROWS_AS(approx::evaluate_reference(1, 1, gap), std::domain_error);
  CHECK_THROWS_AS(approx::evaluate_reference(1, 2, rational(0)), std::domain_error);
}

TEST_CASE("reference enclosures are nested as the gap shrinks") {
  rational gap = make_rational(1, 100);
  auto outer = approx::evaluate_reference(1, 3, gap);
  for (int step = 0; step < 5; ++step) {
    gap /= 1000;
    const auto inner = approx::evaluate_reference(1, 3, gap);
    CHECK(outer.contains(inner));
    outer = inner;
  }
}

TEST_CASE("convergent of the degenerate pair is refused") {
  const auto a = pade::golomb_pade(-1, 1);
  const auto l0 = approx::lift(a, 0, -1);  // q(z) = 1 - 2z vanishes at 1/2
  const auto alpha = approx::evaluate_reference(-1, 2, make_rational(1, integer(1) << 40));
  CHECK_THROWS_AS(approx::convergent(l0, 2, alpha), approx::degenerate_evaluation);
}

TEST_CASE("first usable ruler convergent at base two") {
  const auto a = pade::golomb_pade(-1, 1);
  const auto l = approx::lift(a, 1, -1);
  const auto alpha = approx::evaluate_reference(-1, 2, make_rational(1, integer(1) << 40));
  const auto rec = approx::convergent(l, 2, alpha);
  CHECK(rec.p == 6);
  CHECK(rec.q == 4);
  CHECK(rec.err.lo > make_rational(960, 10000));
  CHECK(rec.err.hi < make_rational(961, 10000));
  REQUIRE(rec.mu_eff.has_value());
  CHECK(*rec.mu_eff > make_rational(168, 100));
  CHECK(*rec.mu_eff < make_rational(170, 100));
}

TEST_CASE("convergent integers reconstruct the lifted value at 1/b") {
  const auto alpha = approx::evaluate_reference(1, 2, make_rational(1, integer(1) << 200));
  for (std::int64_t k : {2, 3})
    for (std::int64_t m : {2, 3, 4}) {
      const auto base = pade::golomb_pade(1, k);
      const auto l = approx::lift(base, m, 1);
      const auto rec = approx::convergent(l, 2, alpha);
      const rational half = make_rational(1, 2);
      const rational scale(pow_int(2, static_cast<unsigned long>(l.degree_bound())));
      CHECK(rational(rec.p) == l.p.eval(half) * scale);
      CHECK(rational(rec.q) == l.q.eval(half) * scale);
    }
}

TEST_CASE("effective exponent approaches (2k+1)/(k+1)") {
  const auto base = pade::golomb_pade(-1, 3);
  const auto l = approx::lift(base, 5, -1);
  const auto alpha = approx::evaluate_reference(-1, 2, make_rational(1, integer(1) << 600));
  const auto rec = approx::convergent(l, 2, alpha);
  REQUIRE(rec.mu_eff.has_value());
  CHECK(*rec.mu_eff > make_rational(170, 100));
  CHECK(*rec.mu_eff < make_rational(178, 100));
}

TEST_CASE("too-wide enclosures are refused") {
  const auto a = pade::golomb_pade(-1, 1);
  const auto l = approx::lift(a, 2, -1);
  const rational_interval sloppy{rational(1), rational(2)};
  CHECK_THROWS_AS(approx::convergent(l, 2, sloppy), std::invalid_argument);
}

TEST_CASE("effective exponent from pinned error intervals") {
  approx::convergent_record rec;
  rec.q = 1000;
  const rational q2 = make_rational(1, 1000000);
  rec.err = {q2, q2};
  const rational mu2 = approx::effective_exponent(rec);
  CHECK(mu2 <= 2);
  CHECK(rational(2) - mu2 < make_rational(1, integer(1) << 50));

  rec.err = {make_rational(1, integer(1000) * 1000 * 1000), make_rational(1, integer(1000) * 1000 * 1000)};
  const rational mu3 = approx::effective_exponent(rec);
  CHECK(mu3 <= 3);
  CHECK(rational(3) - mu3 < make_rational(1, integer(1) << 50));

  rec.q = 1;
  CHECK_THROWS_AS(approx::effective_exponent(rec), std::domain_error);
}

TEST_CASE("exponent bound arithmetic") {
  CHECK(approx::ar_bound(1, 1, 1) == 2);
  CHECK(approx::ar_bound(1, make_rational(2, 3), 2) == 6);
  CHECK_THROWS_AS(approx::ar_bound(1, 2, 1), std::domain_error);       // delta > rho
  CHECK_THROWS_AS(approx::ar_bound(1, rational(0), 1), std::domain_error);
  CHECK_THROWS_AS(approx::ar_bound(1, 1, make_rational(1, 2)), std::domain_error);
}

TEST_CASE("window-family bound decreases toward 2") {
  rational prev;
  for (std::int64_t big_k = 1; big_k <= 30; ++big_k) {
    const integer two_km1 = pow_int(2, static_cast<unsigned long>(big_k - 1));
    const integer two_k = pow_int(2, static_cast<unsigned long>(big_k));
    const rational v = approx::ar_bound(1, make_rational(two_k, two_k + 1),
                                        make_rational(two_km1 + 3, two_km1 + 1));
    CHECK(v > 2);
    if (big_k > 1) CHECK(v < prev);
    prev = v;
  }
  CHECK(prev - 2 < make_rational(1, 100000));  // K = 30
}

TEST_CASE("gap sequences hit the dyadic-window bound") {
  const auto g1 = approx::gap_sequence(1, 0, 6);
  CHECK(g1.values == std::vector<integer>{3, 6, 12, 24, 48, 96});
  CHECK(g1.max_ratio == 2);

  const auto g2 = approx::gap_sequence(2, 2, 5);
  CHECK(g2.values == std::vector<integer>{12, 20, 24, 40, 48});
  CHECK(g2.max_ratio == make_rational(5, 3));

  for (std::int64_t big_k = 1; big_k <= 8; ++big_k) {
    const auto g = approx::gap_sequence(big_k, 0, 500);
    const rational bound =
        make_rational((integer(1) << (big_k - 1)) + 3, (integer(1) << (big_k - 1)) + 1);
    CHECK(g.max_ratio <= bound);
    if (big_k <= 2) CHECK(g.max_ratio == bound);
  }
  CHECK_THROWS_AS(approx::gap_sequence(1, 0, 1), std::domain_error);
}

TEST_CASE("small exponent schedule") {
  const auto sched = approx::build_exponent_schedule(1, 2, 1, 4);
  CHECK(sched.theta == 2);
  CHECK(sched.delta == make_rational(2, 3));
  // K = 1 admits only k = 2
  for (const auto& rec : sched.records) CHECK(rec.k == 2);
  CHECK(sched.records.size() >= 3);
  for (std::size_t i = 1; i < sched.records.size(); ++i)
    CHECK(sched.records[i - 1].q < sched.records[i].q);

  const auto sched2 = approx::build_exponent_schedule(2, 2, 1, 3);
  bool saw2 = false, saw4 = false;
  for (const auto& rec : sched2.records) {
    CHECK((rec.k == 2 || rec.k == 4));
    saw2 |= rec.k == 2;
    saw4 |= rec.k == 4;
  }
  CHECK(saw2);
  CHECK(saw4);
}
