#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz_support.hpp"
#include "plumbcalc/calculus.hpp"
#include "plumbcalc/constructions.hpp"
#include "plumbcalc/contfrac.hpp"
#include "plumbcalc/graded_root.hpp"
#include "plumbcalc/invariants.hpp"
#include "plumbcalc/linalg.hpp"
#include "plumbcalc/seifert.hpp"
#include "plumbcalc/sweep.hpp"
#include "test_support.hpp"

using namespace plumbcalc;
using namespace testing_support;

namespace {

// Collects the first few failure descriptions; safe to share across workers.
class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard<std::mutex> lock(m_);
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    add(os.str());
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
  std::string summary() const {
    return count_ == 0 ? "" : std::to_string(count_) + " failure(s): " + first_;
  }

 private:
  std::mutex m_;
  std::size_t count_ = 0;
  std::string first_;
};

std::string arrow_label(std::int64_t r) { return "K(" + std::to_string(r) + ")"; }

PlumbingGraph splice_n(std::int64_t n) {
  return splice(sigma1(n), arrow_label(sigma1_triple(n).r), sigma2(n), arrow_label(sigma2_triple(n).r));
}

std::int64_t mubar_closed(std::int64_t n) { return n % 2 ? (n * n + 4 * n + 3) / 8 : (n * n + 2 * n) / 8; }

const std::size_t kThreads = configured_threads();

void c1_mubar_formula(Failures& f) {
  for (std::int64_t n = 1; n <= 30; ++n)
    f.expect_eq(mu_bar(sigma2(n)), mubar_closed(n), "mu_bar(sigma2(" + std::to_string(n) + "))");
}

void c2_mubar_additivity(Failures& f) {
  parallel_for(30, kThreads, [&](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    const auto tag = "n=" + std::to_string(n);
    f.expect_eq(mu_bar(sigma1(n)), -mu_bar(sigma2(n)), "antisymmetry " + tag);
    const auto s = splice_n(n);
    f.expect(!is_negative_definite(s), "splice graph definite " + tag);
    f.expect_eq(mu_bar(s), 0, "mu_bar(splice) " + tag);
  });
}

void c3_splice_equivalence(Failures& f) {
  parallel_for(10, kThreads, [&](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    const auto tag = "n=" + std::to_string(n);
    const auto z = family_Z(n);
    const auto s = splice_n(n);
    const auto v = equivalent(z, s);
    f.expect_eq(to_string(v.tag), std::string("Equivalent"), "verdict " + tag);
    const auto want = expected_splice_diagram(n).canonical();
    f.expect_eq(splice_diagram(z).canonical(), want, "Z diagram " + tag);
    f.expect_eq(splice_diagram(s).canonical(), want, "splice diagram " + tag);
  });
}

BigInt far_side(const PlumbingGraph& g, const std::string& center, const std::string& toward) {
  const std::size_t c = g.index_of(center);
  const auto adj = g.adjacency();
  std::vector<bool> keep(g.size(), false);
  std::vector<std::size_t> queue{g.index_of(toward)};
  keep[queue[0]] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto w : adj[queue[h]])
      if (w != c && !keep[w]) {
        keep[w] = true;
        queue.push_back(w);
      }
  return determinant(g.induced(keep));
}

void c4_worked_anchors(Failures& f) {
  f.expect_eq(splice_weight(sigma1(1), "K(5)"), determinant(e7()), "X weight vs det E7");
  f.expect_eq(splice_weight(sigma1(1), "K(5)"), -2, "X weight");
  f.expect_eq(splice_weight(sigma2(1), "K(7)"), determinant(chain({-2, -1, -3})), "Y weight vs det chain");
  f.expect_eq(splice_weight(sigma2(1), "K(7)"), -1, "Y weight");
  const auto g = splice_n(1);
  f.expect_eq(abs(determinant(g)), 1, "|det splice|");
  f.expect_eq(bareiss_determinant(intersection_matrix(g)), determinant(g), "det oracle");
  f.expect_eq(abs(far_side(g, "a.c", "X")), 5, "far-side determinant");
}

void c5_graded_roots(Failures& f) {
  parallel_for(30, kThreads, [&](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i / 2) + 1;
    const auto tag = "n=" + std::to_string(n);
    if (i % 2 == 0) {
      const auto tau = tau_sequence(sigma2_triple(n));
      f.expect(tau.symmetric && tau.certified, "tau certificate sigma2 " + tag);
      const auto r = graded_root(tau);
      const auto ds = involutive_ds(r);
      const auto d = d_invariant(r);
      f.expect_eq(d, 0, "d(sigma2) " + tag);
      f.expect_eq(ds.dbar, d, "dbar(sigma2) " + tag);
      f.expect_eq(ds.dunder, -2 * mu_bar(sigma2(n)), "dunder(sigma2) " + tag);
    } else {
      const auto tau = tau_sequence(sigma1_triple(n));
      f.expect(tau.symmetric && tau.certified, "tau certificate sigma1 " + tag);
      const auto r = graded_root(tau);
      const auto m = monotone_subroot(r);
      f.expect(m.is_trivial(), "monotone subroot sigma1 " + tag);
      f.expect(is_subroot(m, r), "subroot sigma1 " + tag);
      f.expect_eq(involutive_ds(r).dunder, -2 * mu_bar(sigma1(n)), "dunder(sigma1) " + tag);
    }
  });
}

void c6_casson(Failures& f) {
  for (std::int64_t n = 1; n <= 15; ++n) {
    const std::int64_t p = n + 1, q = n + 2;
    const BigInt lhs = casson_brieskorn(sigma1_triple(n)) + casson_brieskorn(sigma2_triple(n));
    const BigInt closed = BigInt((p * p - 1) * (q * q - 1)) / 12;
    f.expect_eq(lhs, -closed, "triangle n=" + std::to_string(n));
    f.expect_eq(alexander_torus(p, q).second_derivative_at_one(), closed, "Delta'' n=" + std::to_string(n));
  }
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto t = BrieskornTriple::make(p, q, p * q - 1);
      const auto tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const auto lambda = casson_brieskorn(t);
      f.expect_eq(Rational(lambda), casson_surgery(p, q, -1), "two routes " + tag);
      f.expect_eq(((lambda % 2) + 2) % 2, ((mu_bar(brieskorn_plumbing(t)) % 2) + 2) % 2, "parity " + tag);
    }
}

HJExpansion twos(std::int64_t k) { return HJExpansion(static_cast<std::size_t>(k), 2); }

void c7_contfrac(Failures& f) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const auto tag = " n=" + std::to_string(n);
    f.expect(hj_expand(n + 1, 1) == HJExpansion{n + 1}, "(n+1)/1" + tag);
    f.expect(hj_expand(n + 1, n) == twos(n), "(n+1)/n" + tag);
    f.expect(hj_expand(7 * n + 2, 3 * n + 1) == HJExpansion{3, 2, 2, n + 1}, "(7n+2)/(3n+1)" + tag);
    HJExpansion e{2, 5};
    const auto t = twos(n - 1);
    e.insert(e.end(), t.begin(), t.end());
    f.expect(hj_expand(7 * n + 2, 4 * n + 1) == e, "(7n+2)/(4n+1)" + tag);
    // (2n+1)/n carries n - 1 trailing 2s, not n.
    HJExpansion l3{3};
    const auto t3 = twos(n - 1);
    l3.insert(l3.end(), t3.begin(), t3.end());
    f.expect(hj_expand(2 * n + 1, n) == l3, "(2n+1)/n" + tag);
    l3.push_back(2);
    f.expect(cf_eval(l3) != Rational(2 * n + 1, n), "(2n+1)/n with n trailing 2s" + tag);
  }
}

void c8_families(Failures& f) {
  const std::vector<std::pair<std::string, std::function<PlumbingGraph(std::int64_t)>>> fams{
      {"X", family_X}, {"Y", family_Y}, {"Z", family_Z}, {"W", family_W}};
  parallel_for(40, kThreads, [&](std::size_t i) {
    const auto& [name, build] = fams[i % 4];
    const std::int64_t n = static_cast<std::int64_t>(i / 4) + 1;
    const auto tag = name + "(" + std::to_string(n) + ")";
    const auto g = build(n);
    f.expect(g.is_tree(), tag + " tree");
    f.expect_eq(abs(determinant(g)), 1, tag + " |det|");
    f.expect(is_absolutely_minimal(g), tag + " absolutely minimal");
    f.expect_eq(mu_bar(g), 0, tag + " mu_bar");
    f.expect_eq(rokhlin(g), 0, tag + " rokhlin");
  });
}

void c9_fuzz(Failures& f) {
  const auto seeds = fuzz_seeds();
  parallel_for(500, kThreads, [&](std::size_t seq) {
    std::mt19937_64 rng(1000 + seq);
    PlumbingGraph g = seeds[seq % seeds.size()];
    for (int warm = 0; warm < 3; ++warm) g = random_move(g, rng);
    const auto tag = "sequence " + std::to_string(seq);
    const auto det0 = abs(determinant(g));
    const auto mu0 = mu_bar(g);
    const auto diag0 = splice_diagram(g).canonical();
    const int steps = 5 + static_cast<int>(seq % 11);
    for (int s = 0; s < steps; ++s) {
      g = random_move(g, rng);
      if (!g.is_tree() || g.size() > 15) {
        f.add(tag + " left the corpus");
        return;
      }
      f.expect_eq(abs(determinant(g)), det0, tag + " |det|");
      f.expect_eq(mu_bar(g), mu0, tag + " mu_bar");
      f.expect_eq(splice_diagram(g).canonical(), diag0, tag + " splice diagram");
    }
    const auto r = reduce(g);
    f.expect_eq(canonical_form(reduce(r)), canonical_form(r), tag + " reduce idempotent");
  });
}

void c10_oracles(Failures& f) {
  parallel_for(1000, kThreads, [&](std::size_t i) {
    std::mt19937_64 rng(77 + i);
    const auto g = random_tree(rng, 1 + i % 12, -6, 4);
    f.expect_eq(leaf_elimination_determinant(g), bareiss_determinant(intersection_matrix(g)),
                "random tree " + std::to_string(i));
  });
  std::vector<BrieskornTriple> triples;
  for (std::int64_t p = 2; p * (p + 1) * (p + 2) <= 100000; ++p)
    for (std::int64_t q = p + 1; p * q * (q + 1) <= 100000; ++q)
      for (std::int64_t r = q + 1; p * q * r <= 100000; ++r)
        if (std::gcd(p, q) == 1 && std::gcd(p, r) == 1 && std::gcd(q, r) == 1)
          triples.push_back(BrieskornTriple{p, q, r});
  parallel_for(triples.size(), kThreads, [&](std::size_t i) {
    const auto g = brieskorn_plumbing(triples[i]);
    const auto tag = to_string(triples[i]);
    f.expect(is_negative_definite(g), tag + " negative definite");
    f.expect_eq(abs(determinant(g)), 1, tag + " |det|");
  });
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Failures&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "mu_bar closed formula on sigma2(n), n <= 30", 10, c1_mubar_formula},
      {2, "mu_bar antisymmetry and splice additivity, n <= 30", 30, c2_mubar_additivity},
      {3, "Z(n) equivalent to the splice with two-node certificate, n <= 10", 60, c3_splice_equivalence},
      {4, "worked n = 1 splice anchors", 1, c4_worked_anchors},
      {5, "d, dbar, dunder and monotone subroots, n <= 15", 300, c5_graded_roots},
      {6, "Casson triangle, two routes and parity", 60, c6_casson},
      {7, "continued-fraction families, n <= 200", 1, c7_contfrac},
      {8, "family gates X, Y, Z, W, n <= 10", 30, c8_families},
      {9, "move-invariance fuzzing, 500 sequences", 60, c9_fuzz},
      {10, "determinant oracles and Brieskorn definiteness, pqr <= 1e5", 120, c10_oracles},
  };
  std::printf("acceptance: %zu worker thread(s)\n", kThreads);
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = f.summary();
    if (secs > c.limit_seconds)
      detail += (detail.empty() ? "" : "; ") + std::string("over the runtime limit");
    const bool ok = detail.empty();
    failed += !ok;
    std::printf("%s [%2d] %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, ok ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
