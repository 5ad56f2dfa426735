#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "workbench/types.hpp"

namespace workbench {

using Tuple = std::vector<std::size_t>;

struct Check {
  std::string id;
  std::string law;  // the identity being checked, as a formula
  double max_residual = 0.0;
  std::optional<Tuple> witness;  // smallest failing tuple, if any
  bool pass = true;
};

class Report {
 public:
  void add(Check c);
  void merge(const Report& other);

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(std::string_view id) const;
  const Check& at(std::string_view id) const;
  // First failing check, or nullptr.
  const Check* first_failure() const;
  double max_residual() const;

 private:
  std::vector<Check> checks_;
};

// Carries the report of a failed verification.
struct VerificationError : std::runtime_error {
  VerificationError(const std::string& what, Report r)
      : std::runtime_error(what), report(std::move(r)) {}
  Report report;
};

// Throws VerificationError describing the first failure if r is not ok.
void require(const Report& r, std::string_view context);

using ResidualFn = std::function<double(std::span<const std::size_t>)>;

// Evaluates fn on every tuple of the mixed-radix space (first coordinate most
// significant). The result records the max residual and the lexicographically
// smallest tuple whose residual exceeds tol. NaN counts as a failure.
// Work is split across WORKBENCH_THREADS workers (default: hardware threads);
// the outcome does not depend on the split.
Check sweep(std::string id, std::string law, const std::vector<std::size_t>& radices,
            double tol, const ResidualFn& fn);

Check single(std::string id, std::string law, double res, double tol);

std::size_t worker_count();

}  // namespace workbench
