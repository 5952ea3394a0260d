#ifndef MALCEV_REPORT_HPP
#define MALCEV_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malcev/linalg.hpp"

namespace malcev {

/// Outcome of an exhaustive scan over basis tuples.
///
/// `first_failure` is the lexicographically least failing index tuple, and
/// `tuples_checked` counts tuples in scan order up to and including it (all
/// tuples when the scan passes). Both are independent of worker count.
struct IdentityReport {
  std::string identity;
  bool passed = true;
  std::optional<std::vector<std::size_t>> first_failure;
  std::optional<Vector> failure_value;
  /// Basis names used to label `failure_value` coordinates.
  std::vector<std::string> value_basis;
  std::uint64_t tuples_checked = 0;
  /// Free-form diagnostic for text output only.
  std::string detail;

  static IdentityReport pass(std::string identity, std::uint64_t checked) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.tuples_checked = checked;
    return r;
  }

  static IdentityReport fail(std::string identity, std::vector<std::size_t> tuple, Vector value,
                             std::vector<std::string> names, std::uint64_t checked) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.passed = false;
    r.first_failure = std::move(tuple);
    r.failure_value = std::move(value);
    r.value_basis = std::move(names);
    r.tuples_checked = checked;
    return r;
  }

  explicit operator bool() const { return passed; }
};

} // namespace malcev

#endif
