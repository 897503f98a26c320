#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plumbcalc/calculus.hpp"

namespace plumbcalc {

// PLUMBCALC_THREADS if set and positive, else hardware concurrency.
std::size_t configured_threads();

// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
// exception is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

struct SweepRow {
  std::int64_t n = 0;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct SweepReport {
  std::string check;
  std::int64_t from = 0, to = 0;
  std::vector<SweepRow> rows;
  bool pass() const;
};

// Checks: theorem2, mubar, dinv, casson, families, cf.
const std::vector<std::string>& sweep_checks();
SweepRow sweep_row(const std::string& check, std::int64_t n);
SweepReport run_sweep(const std::string& check, std::int64_t from, std::int64_t to, std::size_t threads);

std::string format_table(const SweepReport& r);
nlohmann::json to_json(const SweepReport& r);

// Closed form for mu_bar of the second Brieskorn family.
std::int64_t mubar_formula(std::int64_t n);
// Two-node diagram {n+1, n+2; n^2+3n+1} -- {n^2+3n+3; n+1, n+2}.
SpliceDiagram expected_splice_diagram(std::int64_t n);

}  // namespace plumbcalc
