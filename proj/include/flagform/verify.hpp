#ifndef FLAGFORM_VERIFY_HPP
#define FLAGFORM_VERIFY_HPP

#include <string>
#include <vector>

#include "flagform/corpus.hpp"

namespace flagform {

// Outcome of one named identity check on one corpus entry. Checks that need
// structure an entry lacks (for example a zero weight sum) report
// applicable = false and pass vacuously.
struct CheckOutcome {
  std::string check;
  std::string arrangement;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckOutcome> outcomes;
  bool all_passed = true;
};

// Registered check names, in execution order.
const std::vector<std::string>& check_names();

// Runs the named checks (all of them when `checks` is empty) on each entry.
// Affine entries are checked directly where the identity is affine and
// through their cone everywhere else. Unknown check names throw; an Error
// escaping a check is recorded as a failed outcome.
VerifyReport run_checks(const std::vector<CorpusEntry>& entries,
                        const std::vector<std::string>& checks = {});

}  // namespace flagform

#endif
