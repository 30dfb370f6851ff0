// golomb: exact Hankel determinants, Padé rows and rational-approximation
// experiments for the ruler-function and Fermat-type series.

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golomb/approx.hpp"
#include "golomb/hankel.hpp"
#include "golomb/pade.hpp"

using json = nlohmann::ordered_json;
using namespace golomb;

namespace {

constexpr std::uint64_t k_default_seed = 20240601;

struct common_opts {
  std::string format = "json";
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App* cmd, common_opts& opts, bool with_jobs = true) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "write the report to FILE instead of stdout");
  if (with_jobs)
    cmd->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

void emit(const common_opts& opts, const std::string& doc) {
  if (opts.out.empty()) {
    std::cout << doc << "\n";
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + opts.out);
  f << doc << "\n";
}

// Index-parallel loop writing into preallocated slots; the document is
// assembled in index order, so output is identical for any worker count.
template <typename Fn>
void parallel_for(std::int64_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::int64_t>(jobs, count));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

json query_json(const hankel::hankel_query& q) {
  return json{{"variant", hankel::variant_name(q.v)}, {"p", q.p}, {"n", q.n}, {"barred", q.barred}};
}

json interval_json(const approx::rational_interval& iv) {
  return json{{"lo", rational_string(iv.lo)}, {"hi", rational_string(iv.hi)}};
}

json coeff_json(const pade::int_polynomial& p) {
  json arr = json::array();
  if (p.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (std::int64_t i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
  return arr;
}

json record_json(const approx::convergent_record& rec) {
  json j{{"k", rec.k},           {"m", rec.m},
         {"b", rec.b.get_str()}, {"epsilon", rec.epsilon},
         {"p", rec.p.get_str()}, {"q", rec.q.get_str()},
         {"err", interval_json(rec.err)}};
  if (rec.mu_eff) {
    j["mu_eff"] = rational_string(*rec.mu_eff);
    j["mu_eff_decimal"] = decimal_string(*rec.mu_eff, 6);
    j["mu_eff_rounding"] = "lower";
  }
  return j;
}

// ---- seq ----

int run_seq(const common_opts& opts, const std::string& kind, int seed_bit, std::int64_t from,
            std::int64_t len, const std::vector<std::string>& values, std::int64_t start_index) {
  seq::sequence_spec spec = [&] {
    if (kind == "ruler") return seq::sequence_spec::ruler_seeded(seed_bit);
    if (kind == "fermat") return seq::sequence_spec::fermat_f();
    std::vector<integer> vals;
    vals.reserve(values.size());
    for (const auto& v : values) vals.emplace_back(v);
    return seq::sequence_spec::explicit_values(std::move(vals), start_index);
  }();
  const auto window = spec.window(from, len);

  if (opts.format == "json") {
    json arr = json::array();
    for (const auto& v : window) arr.push_back(v.get_str());
    emit(opts, json{{"kind", kind}, {"from", from}, {"len", len}, {"values", arr}}.dump(2));
  } else {
    std::string line = "[";
    for (std::size_t i = 0; i < window.size(); ++i) line += (i ? "," : "") + window[i].get_str();
    line += "]";
    emit(opts, line);
  }
  return 0;
}

// ---- hankel ----

int run_hankel(const common_opts& opts, const std::string& variant, std::int64_t p, std::int64_t n,
               bool barred, const std::string& what) {
  hankel::hankel_query q;
  q.v = variant == "g0" ? hankel::variant::g0
                        : (variant == "g1" ? hankel::variant::g1 : hankel::variant::f);
  q.p = p;
  q.n = n;
  q.barred = barred;

  auto matrix = hankel::hankel_matrix(hankel::variant_sequence(q.v), p, n);
  if (barred) matrix = linalg::bordered(matrix);

  json j{{"query", query_json(q)}};
  if (what == "matrix" || what == "all") {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.order(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < matrix.order(); ++c) row.push_back(matrix.at(i, c).get_str());
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  if (what == "det" || what == "all") j["det"] = det_int(matrix).get_str();
  if (what == "parity" || what == "all") {
    j["parity"] = hankel::parity_direct(q);
    if (q.p <= 2) j["parity_closed_form"] = hankel::parity_closed_form(q);
  }

  if (opts.format == "json") {
    emit(opts, j.dump(2));
  } else {
    std::string doc;
    if (j.contains("matrix")) {
      for (std::size_t i = 0; i < matrix.order(); ++i) {
        for (std::size_t c = 0; c < matrix.order(); ++c)
          doc += matrix.at(i, c).get_str() + (c + 1 < matrix.order() ? " " : "");
        doc += "\n";
      }
    }
    if (j.contains("det")) doc += "det = " + j["det"].get<std::string>() + "\n";
    if (j.contains("parity")) doc += "parity = " + std::to_string(j["parity"].get<int>()) + "\n";
    while (!doc.empty() && doc.back() == '\n') doc.pop_back();
    emit(opts, doc);
  }
  return 0;
}

// ---- verify-theorem ----

int run_verify(const common_opts& opts, std::int64_t n_max, std::int64_t exact_n_max,
               std::int64_t rec_n_max, std::int64_t mainh_exact, std::int64_t mainh_parity) {
  struct family {
    hankel::variant v;
    std::int64_t p;
    bool barred;
  };
  const std::vector<family> families = {
      {hankel::variant::g0, 0, false}, {hankel::variant::g1, 0, false},
      {hankel::variant::g1, 1, false}, {hankel::variant::g1, 2, false},
      {hankel::variant::g0, 0, true},  {hankel::variant::g1, 0, true},
      {hankel::variant::g1, 1, true},  {hankel::variant::g1, 2, true}};

  std::vector<hankel::parity_report> table(static_cast<std::size_t>(n_max) * families.size());
  parallel_for(n_max, opts.jobs, [&](std::int64_t idx) {
    const std::int64_t n = idx + 1;
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
      hankel::hankel_query q{families[fi].v, families[fi].p, n, families[fi].barred};
      hankel::parity_report r;
      r.query = q;
      r.direct = hankel::parity_direct(q);
      r.closed_form = hankel::parity_closed_form(q);
      if (n <= exact_n_max) {
        auto m = hankel::hankel_matrix(hankel::variant_sequence(q.v), q.p, q.n);
        if (q.barred) m = linalg::bordered(m);
        r.exact = is_odd(det_int(m)) ? 1 : 0;
      }
      r.agree = r.direct == r.closed_form && (!r.exact || *r.exact == r.direct);
      table[static_cast<std::size_t>(idx) * families.size() + fi] = std::move(r);
    }
  });

  bool table_ok = true;
  json table_rows = json::array();
  for (const auto& r : table) {
    table_ok = table_ok && r.agree;
    json row{{"query", query_json(r.query)},
             {"expected", r.closed_form},
             {"direct", r.direct},
             {"agree", r.agree}};
    if (r.exact) row["exact"] = *r.exact;
    table_rows.push_back(std::move(row));
  }

  // A clause passes when its printed form holds or its documented consistent
  // variant does; counterexamples stay in the report either way.
  const auto summaries = hankel::recurrence_suite(rec_n_max);
  bool clauses_ok = true;
  json clause_rows = json::array();
  for (const auto& s : summaries) {
    const bool pass = s.literal_holds || (s.has_corrected && s.corrected_holds);
    clauses_ok = clauses_ok && pass;
    json row{{"clause", s.clause},
             {"items", s.items},
             {"printed_form_holds", s.literal_holds},
             {"pass", pass}};
    if (s.first_counterexample)
      row["first_counterexample"] =
          json{{"n", s.first_counterexample->first}, {"p", s.first_counterexample->second}};
    if (s.has_corrected) {
      row["consistent_form_holds"] = s.corrected_holds;
      row["note"] = s.note;
    }
    clause_rows.push_back(std::move(row));
  }

  const auto main_h = hankel::verify_main_h(mainh_exact, mainh_parity);
  json dets_g = json::array(), dets_f = json::array();
  for (const auto& d : main_h.det_g) dets_g.push_back(d.get_str());
  for (const auto& d : main_h.det_f) dets_f.push_back(d.get_str());

  const bool all_pass = table_ok && clauses_ok && main_h.all_odd_nonzero && main_h.all_parity_one;

  json doc{{"theorem_table", json{{"n_max", n_max},
                                  {"exact_n_max", exact_n_max},
                                  {"all_agree", table_ok},
                                  {"reports", std::move(table_rows)}}},
           {"recurrences", json{{"n_max", rec_n_max},
                                {"all_pass", clauses_ok},
                                {"clauses", std::move(clause_rows)}}},
           {"main_h", json{{"exact_n_max", mainh_exact},
                           {"parity_n_max", mainh_parity},
                           {"all_odd_nonzero", main_h.all_odd_nonzero},
                           {"all_parity_one", main_h.all_parity_one},
                           {"det_g", std::move(dets_g)},
                           {"det_f", std::move(dets_f)}}},
           {"all_pass", all_pass}};

  if (opts.format == "json") {
    emit(opts, doc.dump(2));
  } else {
    std::string text;
    text += std::string("theorem table: ") + (table_ok ? "ok" : "MISMATCH") + "\n";
    text += std::string("recurrences:   ") + (clauses_ok ? "ok" : "FAIL") + "\n";
    text += std::string("main theorem:  ") +
            (main_h.all_odd_nonzero && main_h.all_parity_one ? "ok" : "FAIL");
    emit(opts, text);
  }

  if (!all_pass) {
    for (const auto& r : table)
      if (!r.agree) {
        std::cerr << "first table mismatch: " << hankel::variant_name(r.query.v)
                  << " p=" << r.query.p << " n=" << r.query.n << " barred=" << r.query.barred
                  << " direct=" << r.direct << " expected=" << r.closed_form << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

// ---- identities ----

int run_identities(const common_opts& opts, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);

  auto random_matrix = [&](std::size_t order) {
    linalg::exact_matrix m(order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) m.at(i, j) = entry(rng);
    return m;
  };

  bool all_zero = true;

  json two;
  {
    int stated_ok = 0;
    bool fixed_zero = true;
    json first_cex;
    for (int t = 0; t < count; ++t) {
      const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
      const auto a_mat = random_matrix(m), b_mat = random_matrix(n);
      const integer a = entry(rng), b = entry(rng), x = entry(rng), y = entry(rng);
      const auto r = linalg::block_identity_2x2_residual(a_mat, b_mat, a, b, x, y);
      if (r.index_fixed != 0) fixed_zero = false;
      if (r.as_stated == 0)
        ++stated_ok;
      else if (first_cex.is_null())
        first_cex = json{{"order_a", m},     {"order_b", n},     {"a", a.get_str()},
                         {"b", b.get_str()}, {"x", x.get_str()}, {"y", y.get_str()},
                         {"residual", r.as_stated.get_str()}};
    }
    all_zero = all_zero && fixed_zero;
    two = json{{"instances", count},
               {"index_fixed_zero", fixed_zero},
               {"as_stated_zero_count", stated_ok}};
    if (!first_cex.is_null()) two["first_as_stated_counterexample"] = std::move(first_cex);
  }

  json three;
  {
    bool zero = true;
    for (int t = 0; t < count; ++t) {
      const auto a_mat = random_matrix(1 + rng() % 3);
      const auto b_mat = random_matrix(1 + rng() % 3);
      const auto c_mat = random_matrix(1 + rng() % 3);
      if (linalg::block_identity_3x3_residual(a_mat, b_mat, c_mat, entry(rng), entry(rng),
                                              entry(rng)) != 0)
        zero = false;
    }
    all_zero = all_zero && zero;
    three = json{{"instances", count}, {"zero", zero}};
  }

  json shift;
  {
    bool zero = true;
    for (int t = 0; t < count; ++t) {
      const auto r = linalg::shift_identity_residuals(random_matrix(1 + rng() % 5), entry(rng));
      if (r.sum_rule != 0 || r.border_rule != 0 || r.negation_rule != 0) zero = false;
    }
    all_zero = all_zero && zero;
    shift = json{{"instances", count}, {"zero", zero}};
  }

  json desnanot;
  {
    bool zero = true;
    for (int t = 0; t < count; ++t) {
      const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
      const std::int64_t p = static_cast<std::int64_t>(rng() % 3);
      std::vector<integer> vals;
      for (std::int64_t i = 0; i < p + 2 * n + 1; ++i) vals.emplace_back(entry(rng));
      if (linalg::desnanot_residual(seq::sequence_spec::explicit_values(vals, 0), n, p) != 0)
        zero = false;
    }
    all_zero = all_zero && zero;
    desnanot = json{{"instances", count}, {"zero", zero}};
  }

  json doc{{"seed", seed},
           {"two_block", std::move(two)},
           {"three_block", std::move(three)},
           {"shift", std::move(shift)},
           {"hankel_recurrence", std::move(desnanot)},
           {"all_contracts_zero", all_zero}};

  if (opts.format == "json")
    emit(opts, doc.dump(2));
  else
    emit(opts, std::string("identity residuals: ") + (all_zero ? "all zero" : "NONZERO FOUND"));
  return all_zero ? 0 : 1;
}

// ---- pade ----

int run_pade(const common_opts& opts, int epsilon, std::int64_t k) {
  const auto a = pade::golomb_pade(epsilon, k);
  json doc{{"epsilon", epsilon},
           {"k", k},
           {"P", coeff_json(a.p)},
           {"Q", coeff_json(a.q)},
           {"h_k", rational_string(a.h_k)}};
  if (opts.format == "json")
    emit(opts, doc.dump(2));
  else
    emit(opts, "P = " + doc["P"].dump() + "\nQ = " + doc["Q"].dump() +
                   "\nh_k = " + rational_string(a.h_k));
  return 0;
}

// ---- approximate ----

approx::rational_interval reference_for(int epsilon, const integer& b, const rational& h_abs,
                                        std::int64_t k, std::int64_t m, const integer& q) {
  const std::int64_t e = (std::int64_t(1) << m) * (2 * k + 1);
  const rational by_err =
      h_abs / (rational(pow_int(2, 20)) * rational(pow_int(b, static_cast<unsigned long>(e))));
  const rational by_q = make_rational(1, 2 * q * q);
  return approx::evaluate_reference(epsilon, b, std::min(by_err, by_q));
}

int run_approximate(const common_opts& opts, int epsilon, long b_raw, std::int64_t k,
                    std::int64_t m) {
  const integer b(b_raw);
  const auto base = pade::golomb_pade(epsilon, k);
  const auto l = approx::lift(base, m, epsilon);
  integer q = l.q.eval_scaled(b, l.degree_bound());
  if (q == 0) {
    json doc{{"outcome", "degenerate"},
             {"k", k},
             {"m", m},
             {"detail", "denominator vanishes at 1/b; retry with larger m"}};
    emit(opts, opts.format == "json" ? doc.dump(2) : std::string("degenerate evaluation"));
    return 0;
  }
  if (q < 0) q = -q;
  const auto alpha = reference_for(epsilon, b, abs(base.h_k), k, m, q);
  const auto rec = approx::convergent(l, b, alpha);
  json doc = record_json(rec);
  doc["outcome"] = "ok";
  if (opts.format == "json")
    emit(opts, doc.dump(2));
  else
    emit(opts, "p = " + rec.p.get_str() + "\nq = " + rec.q.get_str() + "\nerr in [" +
                   rational_string(rec.err.lo) + ", " + rational_string(rec.err.hi) + "]" +
                   (rec.mu_eff ? "\nmu_eff >= " + decimal_string(*rec.mu_eff, 6) : ""));
  return 0;
}

// ---- exponent ----

int run_exponent(const common_opts& opts, std::int64_t big_k, long b_raw, int epsilon,
                 std::int64_t m_max) {
  const auto sched = approx::build_exponent_schedule(big_k, b_raw, epsilon, m_max);

  std::string csv = "n,k,m,q_digits,mu_eff\n";
  for (std::size_t i = 0; i < sched.records.size(); ++i) {
    const auto& r = sched.records[i];
    csv += std::to_string(i + 1) + "," + std::to_string(r.k) + "," + std::to_string(r.m) + "," +
           std::to_string(r.q.get_str().size()) + "," +
           (r.mu_eff ? decimal_string(*r.mu_eff, 6) : "") + "\n";
  }
  csv.pop_back();

  if (opts.format == "csv") {
    emit(opts, csv);
    return 0;
  }

  json recs = json::array();
  for (const auto& r : sched.records) recs.push_back(record_json(r));
  json degen = json::array();
  for (const auto& [k, m] : sched.degenerate) degen.push_back(json{{"k", k}, {"m", m}});
  json m0 = json::array();
  for (const auto& [k, m] : sched.m0) m0.push_back(json{{"k", k}, {"m0", m}});
  json doc{{"K", sched.big_k},
           {"b", sched.b.get_str()},
           {"epsilon", sched.epsilon},
           {"theta", rational_string(sched.theta)},
           {"delta", rational_string(sched.delta)},
           {"rho", rational_string(sched.rho)},
           {"records", std::move(recs)},
           {"degenerate", std::move(degen)},
           {"m0", std::move(m0)},
           {"mu_eff_tail", decimal_string(sched.mu_eff_tail, 6)},
           {"mu_eff_tail_min", decimal_string(sched.mu_eff_tail_min, 6)},
           {"mu_eff_tail_max", decimal_string(sched.mu_eff_tail_max, 6)},
           {"max_log_q_ratio_tail", decimal_string(sched.max_log_q_ratio_tail, 6)},
           {"csv", csv}};
  if (opts.format == "json")
    emit(opts, doc.dump(2));
  else
    emit(opts, "records = " + std::to_string(sched.records.size()) +
                   "\nmu_eff tail = " + decimal_string(sched.mu_eff_tail, 6) +
                   "\nmax log-q ratio (tail) = " + decimal_string(sched.max_log_q_ratio_tail, 6));
  return 0;
}

// ---- bound ----

int run_bound(const common_opts& opts, std::int64_t big_k) {
  const integer two_km1 = pow_int(2, static_cast<unsigned long>(big_k - 1));
  const integer two_k = pow_int(2, static_cast<unsigned long>(big_k));
  const rational theta = make_rational(two_km1 + 3, two_km1 + 1);
  const rational delta = make_rational(two_k, two_k + 1);
  const rational v = approx::ar_bound(1, delta, theta);
  const std::string exact = v.get_num().get_str() + "/" + v.get_den().get_str();
  if (opts.format == "json")
    emit(opts, json{{"K", big_k}, {"bound", exact}, {"decimal", decimal_string(v, 12)}}.dump(2));
  else
    emit(opts, decimal_string(v, 12) + " (exact " + exact + ")");
  return 0;
}

// ---- gap ----

int run_gap(const common_opts& opts, std::int64_t big_k, std::int64_t n0, std::int64_t count) {
  const auto g = approx::gap_sequence(big_k, n0, count);
  const rational bound = make_rational(pow_int(2, static_cast<unsigned long>(big_k - 1)) + 3,
                                       pow_int(2, static_cast<unsigned long>(big_k - 1)) + 1);
  json vals = json::array();
  for (const auto& v : g.values) vals.push_back(v.get_str());
  json doc{{"K", big_k},
           {"n0", n0},
           {"count", count},
           {"values", std::move(vals)},
           {"max_ratio", rational_string(g.max_ratio)},
           {"bound", rational_string(bound)},
           {"within_bound", g.max_ratio <= bound},
           {"bound_attained", g.max_ratio == bound}};
  if (opts.format == "json") {
    emit(opts, doc.dump(2));
  } else {
    std::string line;
    for (std::size_t i = 0; i < g.values.size() && i < 24; ++i)
      line += (i ? "," : "") + g.values[i].get_str();
    if (g.values.size() > 24) line += ",...";
    emit(opts, line + "\nmax ratio " + rational_string(g.max_ratio) + " (bound " +
                   rational_string(bound) + ")");
  }
  return g.max_ratio <= bound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hankel determinants, Padé rows and rational-approximation experiments"};
  app.require_subcommand(1);

  common_opts seq_o, hank_o, ver_o, id_o, pade_o, appr_o, exp_o, bnd_o, gap_o;

  auto* c_seq = app.add_subcommand("seq", "print a window of a sequence");
  std::string seq_kind = "ruler";
  int seq_seed = 1;
  std::int64_t seq_from = 0, seq_len = 8, seq_start = 0;
  std::vector<std::string> seq_values;
  c_seq->add_option("--kind", seq_kind)
      ->check(CLI::IsMember({"ruler", "fermat", "explicit"}))
      ->capture_default_str();
  c_seq->add_option("--seed", seq_seed, "value at index 0 for the ruler variants")
      ->check(CLI::Range(0, 1));
  c_seq->add_option("--from", seq_from)->capture_default_str();
  c_seq->add_option("--len", seq_len)->check(CLI::PositiveNumber)->capture_default_str();
  c_seq->add_option("--values", seq_values, "entries for --kind explicit");
  c_seq->add_option("--start-index", seq_start, "first index for --kind explicit");
  add_common(c_seq, seq_o, false);
  c_seq->footer("Example: golomb seq --kind ruler --seed 1 --from 0 --len 5");

  auto* c_hank = app.add_subcommand("hankel", "matrix, determinant or parity of one query");
  std::string hank_variant = "g1", hank_what = "all";
  std::int64_t hank_p = 1, hank_n = 4;
  bool hank_barred = false;
  c_hank->add_option("--variant", hank_variant)
      ->check(CLI::IsMember({"g0", "g1", "f"}))
      ->capture_default_str();
  c_hank->add_option("--p", hank_p)->capture_default_str();
  c_hank->add_option("--n", hank_n)->check(CLI::PositiveNumber)->capture_default_str();
  c_hank->add_flag("--barred", hank_barred, "border with ones before taking the determinant");
  c_hank->add_option("--what", hank_what)
      ->check(CLI::IsMember({"matrix", "det", "parity", "all"}))
      ->capture_default_str();
  add_common(c_hank, hank_o, false);
  c_hank->footer("Example: golomb hankel --variant g1 --p 1 --n 6 --what parity");

  auto* c_ver = app.add_subcommand(
      "verify-theorem", "parity tables, recurrence clauses and the nonzero-determinant check");
  std::int64_t ver_nmax = 64, ver_exact = 12, ver_rec = 32, ver_mh_exact = 24, ver_mh_par = 256;
  c_ver->add_option("--n-max", ver_nmax)->check(CLI::PositiveNumber)->capture_default_str();
  c_ver->add_option("--exact-n-max", ver_exact)->capture_default_str();
  c_ver->add_option("--recurrence-n-max", ver_rec)->check(CLI::PositiveNumber)->capture_default_str();
  c_ver->add_option("--mainh-exact", ver_mh_exact)->check(CLI::PositiveNumber)->capture_default_str();
  c_ver->add_option("--mainh-parity", ver_mh_par)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(c_ver, ver_o);
  c_ver->footer("Example: golomb verify-theorem --n-max 64 --jobs 4");

  auto* c_id =
      app.add_subcommand("identities", "randomized residual suites for the determinant identities");
  std::uint64_t id_seed = k_default_seed;
  int id_count = 200;
  c_id->add_option("--seed", id_seed, "PRNG seed")->capture_default_str();
  c_id->add_option("--count", id_count)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(c_id, id_o, false);
  c_id->footer("Example: golomb identities --seed 7 --count 200");

  auto* c_pade =
      app.add_subcommand("pade", "canonical [k-1/k]-row approximant of the chosen series");
  int pade_eps = -1;
  std::int64_t pade_order = 1;
  c_pade->add_option("--epsilon", pade_eps)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  c_pade->add_option("--k", pade_order)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(c_pade, pade_o, false);
  c_pade->footer("Example: golomb pade --epsilon -1 --k 3");

  auto* c_appr =
      app.add_subcommand("approximate", "one integer convergent with a rigorous error interval");
  int appr_eps = 1;
  long appr_b = 2;
  std::int64_t appr_k = 2, appr_m = 3;
  c_appr->add_option("--epsilon", appr_eps)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  c_appr->add_option("--b", appr_b)->check(CLI::Range(2l, 1000000l))->capture_default_str();
  c_appr->add_option("--k", appr_k)->check(CLI::PositiveNumber)->capture_default_str();
  c_appr->add_option("--m", appr_m)->check(CLI::NonNegativeNumber)->capture_default_str();
  add_common(c_appr, appr_o, false);
  c_appr->footer("Example: golomb approximate --epsilon 1 --b 2 --k 2 --m 4");

  auto* c_exp = app.add_subcommand("exponent", "convergent schedule and effective exponents");
  std::int64_t exp_k = 2, exp_mmax = 6;
  long exp_b = 2;
  int exp_eps = 1;
  c_exp->add_option("--K", exp_k)->check(CLI::PositiveNumber)->capture_default_str();
  c_exp->add_option("--b", exp_b)->check(CLI::Range(2l, 1000000l))->capture_default_str();
  c_exp->add_option("--epsilon", exp_eps)->check(CLI::IsMember({-1, 1}))->capture_default_str();
  c_exp->add_option("--m-max", exp_mmax)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(c_exp, exp_o, false);
  c_exp->footer("Example: golomb exponent --K 2 --b 2 --epsilon 1 --m-max 6");

  auto* c_bnd = app.add_subcommand("bound", "exact exponent bound of the dyadic-window family");
  std::int64_t bnd_k = 1;
  c_bnd->add_option("--K", bnd_k)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(c_bnd, bnd_o, false);
  c_bnd->footer("Example: golomb bound --K 1");

  auto* c_gap =
      app.add_subcommand("gap", "dyadic-window gap sequence and its consecutive-ratio bound");
  std::int64_t gap_k = 2, gap_n0 = 0, gap_count = 20;
  c_gap->add_option("--K", gap_k)->check(CLI::PositiveNumber)->capture_default_str();
  c_gap->add_option("--n0", gap_n0)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_gap->add_option("--count", gap_count)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(c_gap, gap_o, false);
  c_gap->footer("Example: golomb gap --K 2 --n0 2 --count 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_seq->parsed())
      return run_seq(seq_o, seq_kind, seq_seed, seq_from, seq_len, seq_values, seq_start);
    if (c_hank->parsed())
      return run_hankel(hank_o, hank_variant, hank_p, hank_n, hank_barred, hank_what);
    if (c_ver->parsed())
      return run_verify(ver_o, ver_nmax, ver_exact, ver_rec, ver_mh_exact, ver_mh_par);
    if (c_id->parsed()) return run_identities(id_o, id_seed, id_count);
    if (c_pade->parsed()) return run_pade(pade_o, pade_eps, pade_order);
    if (c_appr->parsed()) return run_approximate(appr_o, appr_eps, appr_b, appr_k, appr_m);
    if (c_exp->parsed()) return run_exponent(exp_o, exp_k, exp_b, exp_eps, exp_mmax);
    if (c_bnd->parsed()) return run_bound(bnd_o, bnd_k);
    if (c_gap->parsed()) return run_gap(gap_o, gap_k, gap_n0, gap_count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
