#include "plumbcalc/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "plumbcalc/constructions.hpp"
#include "plumbcalc/contfrac.hpp"
#include "plumbcalc/graded_root.hpp"
#include "plumbcalc/invariants.hpp"
#include "plumbcalc/seifert.hpp"

namespace plumbcalc {

std::size_t configured_threads() {
  if (const char* env = std::getenv("PLUMBCALC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool SweepReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
}

std::int64_t mubar_formula(std::int64_t n) {
  return n % 2 ? (n * n + 4 * n + 3) / 8 : (n * n + 2 * n) / 8;
}

SpliceDiagram expected_splice_diagram(std::int64_t n) {
  SpliceDiagram d;
  d.node_ids = {"A", "B"};
  d.leaf_weights = {{n + 1, n + 2}, {n + 1, n + 2}};
  d.edges.push_back(SpliceEdge{0, 1, n * n + 3 * n + 1, n * n + 3 * n + 3});
  return d;
}

const std::vector<std::string>& sweep_checks() {
  static const std::vector<std::string> checks{"theorem2", "mubar", "dinv", "casson", "families", "cf"};
  return checks;
}

namespace {

std::string yes(bool b) { return b ? "ok" : "FAIL"; }

SweepRow splice_equivalence_row(std::int64_t n) {
  SweepRow row{n, false, {}};
  const auto z = family_Z(n);
  const auto s = splice(sigma1(n), "K(" + std::to_string(sigma1_triple(n).r) + ")", sigma2(n),
                        "K(" + std::to_string(sigma2_triple(n).r) + ")");
  const auto verdict = equivalent(z, s);
  const auto expected = expected_splice_diagram(n).canonical();
  const bool z_diagram = splice_diagram(z).canonical() == expected;
  const bool s_diagram = splice_diagram(s).canonical() == expected;
  row.fields = {{"det_Z", to_string(determinant(z))},
                {"det_splice", to_string(determinant(s))},
                {"verdict", to_string(verdict.tag)},
                {"diagram", expected},
                {"certificate", yes(z_diagram && s_diagram)}};
  row.pass = verdict.tag == Verdict::Equivalent && z_diagram && s_diagram;
  return row;
}

SweepRow mubar_row(std::int64_t n) {
  SweepRow row{n, false, {}};
  const auto m2 = mu_bar(sigma2(n));
  const auto m1 = mu_bar(sigma1(n));
  const auto s = splice(sigma1(n), "K(" + std::to_string(sigma1_triple(n).r) + ")", sigma2(n),
                        "K(" + std::to_string(sigma2_triple(n).r) + ")");
  const auto ms = mu_bar(s);
  row.fields = {{"mu_bar_sigma2", std::to_string(m2)},
                {"formula", std::to_string(mubar_formula(n))},
                {"mu_bar_sigma1", std::to_string(m1)},
                {"mu_bar_splice", std::to_string(ms)}};
  row.pass = m2 == mubar_formula(n) && m1 == -m2 && ms == 0;
  return row;
}

SweepRow dinv_row(std::int64_t n) {
  SweepRow row{n, false, {}};
  const auto g2 = sigma2(n), g1 = sigma1(n);
  const auto t2 = tau_sequence(g2), t1 = tau_sequence(g1);
  const auto r2 = graded_root(t2), r1 = graded_root(t1);
  const auto d2 = d_invariant(r2), d1 = d_invariant(r1);
  const auto ds2 = involutive_ds(r2), ds1 = involutive_ds(r1);
  const auto m2 = mu_bar(g2), m1 = mu_bar(g1);
  const bool trivial = monotone_subroot(r1).is_trivial();
  row.fields = {{"d_sigma2", std::to_string(d2)},
                {"dbar_sigma2", std::to_string(ds2.dbar)},
                {"dunder_sigma2", std::to_string(ds2.dunder)},
                {"mu_bar_sigma2", std::to_string(m2)},
                {"d_sigma1", std::to_string(d1)},
                {"dunder_sigma1", std::to_string(ds1.dunder)},
                {"sigma1_monotone", trivial ? "trivial" : "nontrivial"},
                {"certified", yes(t1.certified && t2.certified && t1.symmetric && t2.symmetric)}};
  row.pass = d2 == 0 && ds2.dbar == d2 && ds2.dunder == -2 * m2 && ds1.dbar == d1 && ds1.dunder == -2 * m1 &&
             trivial && t1.certified && t2.certified && t1.symmetric && t2.symmetric;
  return row;
}

SweepRow casson_row(std::int64_t n) {
  SweepRow row{n, false, {}};
  const auto l1 = casson_brieskorn(sigma1_triple(n));
  const auto l2 = casson_brieskorn(sigma2_triple(n));
  const BigInt dd = torus_second_derivative_closed_form(n + 1, n + 2);
  row.fields = {{"lambda_sigma1", std::to_string(l1)},
                {"lambda_sigma2", std::to_string(l2)},
                {"minus_delta2", to_string(BigInt(-dd))}};
  row.pass = BigInt(l1 + l2) == -dd;
  return row;
}

SweepRow families_row(std::int64_t n) {
  SweepRow row{n, true, {}};
  const std::pair<const char*, PlumbingGraph (*)(std::int64_t)> fams[] = {
      {"X", family_X}, {"Y", family_Y}, {"Z", family_Z}, {"W", family_W}};
  for (const auto& [name, build] : fams) {
    const auto g = build(n);
    const bool tree = g.is_tree();
    const bool zhs = tree && abs(determinant(g)) == 1;
    const bool minimal = is_absolutely_minimal(g);
    const auto m = zhs ? mu_bar(g) : std::int64_t(-999);
    const bool ok = tree && zhs && minimal && m == 0 && rokhlin(g) == 0;
    row.fields.emplace_back(name, std::to_string(g.size()) + "v det " + to_string(determinant(g)) +
                                      " mu " + std::to_string(m) + (minimal ? " min" : " nonmin"));
    row.pass = row.pass && ok;
  }
  return row;
}

SweepRow cf_row(std::int64_t n) {
  SweepRow row{n, false, {}};
  const HJExpansion unit_a{n + 1};
  const HJExpansion unit_b(static_cast<std::size_t>(n), 2);
  const HJExpansion mixed_a{3, 2, 2, n + 1};
  HJExpansion mixed_b{2, 5};
  mixed_b.insert(mixed_b.end(), static_cast<std::size_t>(n - 1), 2);
  const bool a = hj_expand(n + 1, 1) == unit_a && hj_expand(n + 1, n) == unit_b;
  const bool b = hj_expand(7 * n + 2, 3 * n + 1) == mixed_a && hj_expand(7 * n + 2, 4 * n + 1) == mixed_b;
  row.fields = {{"n+1 over 1, n", yes(a)}, {"7n+2 over 3n+1, 4n+1", yes(b)}};
  row.pass = a && b;
  return row;
}

}  // namespace

SweepRow sweep_row(const std::string& check, std::int64_t n) {
  if (check == "theorem2") return splice_equivalence_row(n);
  if (check == "mubar") return mubar_row(n);
  if (check == "dinv") return dinv_row(n);
  if (check == "casson") return casson_row(n);
  if (check == "families") return families_row(n);
  if (check == "cf") return cf_row(n);
  throw std::invalid_argument("unknown sweep check '" + check + "'");
}

SweepReport run_sweep(const std::string& check, std::int64_t from, std::int64_t to, std::size_t threads) {
  if (std::find(sweep_checks().begin(), sweep_checks().end(), check) == sweep_checks().end())
    throw std::invalid_argument("unknown sweep check '" + check + "'");
  if (from < 1 || to < from) throw std::invalid_argument("sweep range must satisfy 1 <= from <= to");
  SweepReport report{check, from, to, {}};
  report.rows.resize(static_cast<std::size_t>(to - from + 1));
  parallel_for(report.rows.size(), threads,
               [&](std::size_t i) { report.rows[i] = sweep_row(check, from + static_cast<std::int64_t>(i)); });
  return report;
}

std::string format_table(const SweepReport& r) {
  std::ostringstream os;
  os << "check " << r.check << " n=" << r.from << ".." << r.to << "\n";
  for (const auto& row : r.rows) {
    os << "n=" << row.n;
    for (const auto& [k, v] : row.fields) os << "  " << k << "=" << v;
    os << "  " << (row.pass ? "PASS" : "FAIL") << "\n";
  }
  os << (r.pass() ? "overall PASS" : "overall FAIL") << "\n";
  return os.str();
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [k, v] : row.fields) f[k] = v;
    rows.push_back({{"n", row.n}, {"pass", row.pass}, {"fields", f}});
  }
  return {{"check", r.check}, {"from", r.from}, {"to", r.to}, {"rows", rows}, {"pass", r.pass()}};
}

}  // namespace plumbcalc
