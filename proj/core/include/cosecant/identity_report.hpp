#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cosecant {

/// Outcome of checking one identity instance. Rational identities pass
/// only on exact equality; float identities carry their bound in `note`.
struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, long>> params;
  std::string left;
  std::string right;
  bool pass = false;
  /// False for instances that are run and reported but not asserted, such
  /// as boundary cases outside a stated validity range.
  bool asserted = true;
  std::string note;
};

/// Orders by (id, params) so merged parallel output is deterministic.
bool report_less(const IdentityReport& a, const IdentityReport& b);

}  // namespace cosecant
