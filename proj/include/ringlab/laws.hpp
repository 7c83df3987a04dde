#pragma once

#include <string>
#include <vector>

#include "ringlab/classes.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct LawOptions {
  /// Ceiling for rings the laws construct on the side (corners, quotients,
  /// triangulars, group rings, ...). Keeps suite runs bounded; raise it to
  /// exercise larger instances.
  uint64_t max_build_order = 4096;
};

struct LawResult {
  std::string id;
  std::string statement;
  bool applicable = true;  // hypothesis met for this ring
  bool pass = true;
  std::string detail;      // counterexample: ring + element ids
};

struct LawReport {
  std::string ring;
  std::vector<LawResult> results;

  bool all_pass() const {
    for (const auto& lr : results)
      if (!lr.pass) return false;
    return true;
  }
};

/// Laws L1-L5, L6 (partnered with Z2/Z3), L7-L10, L12-L17 on one ring.
LawReport check_laws(const FiniteRing& r, const LawOptions& options = {});

/// Ring-independent laws: L6 over the canonical factor set
/// {Z2, Z3, Z4, T2(Z2)} and L11 (Z_n for n <= 64).
LawReport check_global_laws(const LawOptions& options = {});

}  // namespace ringlab
