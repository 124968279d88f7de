#pragma once

#include <functional>
#include <string>
#include <vector>

namespace klag {

/// One executed identity check.
struct CaseResult {
  std::string name;
  std::string paper_ref;  ///< descriptive name of the identity
  int criterion = 0;      ///< acceptance criterion number, 1–18
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass() const;
};

/// specfun, sl2, kernels, weber, transform, master, heisenberg.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for unknown names.
SuiteReport run_suite(const std::string& name);

/// Runs the cases of a single acceptance criterion.
std::vector<CaseResult> run_criterion(int criterion);

/// Short title of an acceptance criterion.
std::string criterion_title(int criterion);

}  // namespace klag
