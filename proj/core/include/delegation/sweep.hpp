#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "delegation/solve.hpp"

namespace delegation {

struct SweepRow {
  std::string instance_id;
  std::size_t n = 0;
  Kind kind = Kind::Independent;
  bool skipped = false;
  std::string skip_reason;
  SolveResult result;
  BoundReport bounds;
  double runtime_ms = 0;
};

/// A named instance producer; sweeps call it lazily on a worker.
struct SweepItem {
  std::string id;
  std::function<Instance()> make;
};

struct SweepOptions {
  SolveOptions solve;
  unsigned jobs = 1;
};

/// Solves each item and checks the bounds. Rows come back in input order
/// regardless of `jobs`. Cap violations mark the row skipped.
std::vector<SweepRow> run_sweep(const std::vector<SweepItem>& items,
                                const SweepOptions& options);

/// Column order: instance_id,n,kind,status,opt_std,best_threshold_std,
/// ratio,ratio_decimal,rho,p_min,bound_3,bound_n,bound_log,runtime_ms.
inline constexpr const char* kSweepHeader =
    "instance_id,n,kind,status,opt_std,best_threshold_std,ratio,"
    "ratio_decimal,rho,p_min,bound_3,bound_n,bound_log,runtime_ms";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     bool include_timing = true);

/// True iff every non-skipped row satisfies all its bounds.
bool sweep_bounds_hold(const std::vector<SweepRow>& rows);

/// Rational rendered with 12 significant digits.
std::string decimal12(const Rational& r);

}  // namespace delegation
