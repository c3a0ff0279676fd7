#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eqtor/params.hpp"

namespace eqtor {

// One relation checked over a sample set. Residuals are |L - R| / (1 + |L|).
struct RelationReport {
  std::string relation_id;
  Params params;
  long samples = 0;
  long skipped = 0;
  double max_residual = 0.0;
  std::string worst_case;
  bool pass = false;
  // Free-form remark, e.g. a documented mismatch.
  std::string note;

  void record(double residual, const std::string& where) {
    record_with(residual, [&] { return where; });
  }
  // Builds the descriptor only when it becomes the worst case.
  template <class F>
  void record_with(double residual, F&& where) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    ++samples;
    if (samples == 1 || residual > max_residual) {
      max_residual = std::max(max_residual, residual);
      worst_case = where();
    }
  }
  void merge(const RelationReport& o) {
    if (o.samples > 0 && (samples == 0 || o.max_residual > max_residual)) {
      max_residual = std::max(max_residual, o.max_residual);
      worst_case = o.worst_case;
    }
    samples += o.samples;
    skipped += o.skipped;
  }
  double skipped_fraction() const {
    const long total = samples + skipped;
    return total == 0 ? 0.0 : double(skipped) / double(total);
  }
  // status = pass iff max_residual < tol.
  void finalize(double tol) { pass = max_residual < tol; }
};

}  // namespace eqtor
