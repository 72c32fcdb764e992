#pragma once

// Verification campaigns. Each family runs a batch of exact checks and
// reports the failures it found.

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/coxeter.hpp"

namespace hecke {

struct CheckFailure {
  std::string id;
  std::string detail;
};

struct FamilyReport {
  std::string family;
  std::string description;
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;
  /// Set when the family does not apply to the system.
  std::string skipped;
  std::vector<std::string> notes;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  /// Random triples per system for the associativity check.
  int fuzz = 1000;
  /// Random paths per system for the rewriting check, and their maximal length.
  int walks = 500;
  int walk_length = 10;
};

struct VerifyReport {
  std::vector<FamilyReport> families;
  bool ok() const;
};

/// All family names, in report order.
const std::vector<std::string>& verify_families();
std::string family_description(const std::string& family);

/// Throws BadInput for an unknown family name.
FamilyReport verify_family(const SystemPtr& sys, const std::string& family,
                           const VerifyOptions& opts = {});
VerifyReport verify(const SystemPtr& sys, const std::vector<std::string>& families,
                    const VerifyOptions& opts = {});

}  // namespace hecke
