#include "delegation/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include <mpfr.h>

#include "delegation/error.hpp"

namespace delegation {

namespace {

SweepRow run_one(const SweepItem& item, const SweepOptions& options) {
  SweepRow row;
  row.instance_id = item.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance instance = item.make();
    row.n = instance.size();
    row.kind = instance.kind();
    row.result = solve(instance, options.solve);
    row.bounds = bound_report(instance, row.result);
  } catch (const CapExceeded& e) {
    row.skipped = true;
    row.skip_reason = e.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<SweepRow> run_sweep(const std::vector<SweepItem>& items,
                                const SweepOptions& options) {
  std::vector<SweepRow> rows(items.size());
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1 || items.size() < 2) {
    for (std::size_t k = 0; k < items.size(); ++k) rows[k] = run_one(items[k], options);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
            rows[k] = run_one(items[k], options);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string decimal12(const Rational& r) {
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_q(v, r.get_mpq_t(), MPFR_RNDN);
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.12Rg", v);
  mpfr_clear(v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     bool include_timing) {
  out << kSweepHeader << '\n';
  for (const auto& row : rows) {
    out << csv_escape(row.instance_id) << ',';
    if (row.n > 0) out << row.n << ',' << to_string(row.kind) << ',';
    else out << ",,";
    if (row.skipped) {
      out << csv_escape("skipped: " + row.skip_reason) << ",,,,,,,,,,";
    } else {
      const auto& r = row.result;
      const auto& b = row.bounds;
      out << "ok," << to_string(r.opt_value.std_part()) << ','
          << to_string(r.best_threshold_value.std_part()) << ','
          << (r.ratio ? to_string(*r.ratio) : "") << ','
          << (r.ratio ? decimal12(*r.ratio) : "") << ','
          << (b.rho ? to_string(*b.rho) : "") << ',' << to_string(b.p_min) << ','
          << flag(b.bound_3) << ',' << flag(b.bound_n) << ',' << flag(b.bound_log) << ',';
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", include_timing ? row.runtime_ms : 0.0);
    out << ms << '\n';
  }
}

bool sweep_bounds_hold(const std::vector<SweepRow>& rows) {
  for (const auto& row : rows) {
    if (!row.skipped && !row.bounds.all_hold()) return false;
  }
  return true;
}

}  // namespace delegation
