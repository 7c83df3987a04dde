#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/ring.hpp"

namespace ringlab::kernels {

// Scan kernels come in two flavours. The *_serial functions are the
// straightforward reference implementations: plain loops, inverse search by
// full scan, nilpotence by power-orbit iteration. The *_parallel functions
// are the production path: OpenMP over elements plus a repeated-squaring
// nilpotence test. Tests assert both flavours agree on the whole corpus and
// the bench target times them against each other.

struct UnitScan {
  Bitset units;
  std::vector<elem> list;        // ascending ids
  std::vector<elem> inverse_of;  // kNoElem for non-units
};

struct NilScan {
  Bitset nilpotents;
  std::vector<elem> list;
  std::vector<uint32_t> nil_index;  // smallest k >= 1 with a^k = 0; 0 otherwise
};

UnitScan units_serial(const RingView& r);
UnitScan units_parallel(const RingView& r);

Bitset idempotents_scan(const RingView& r);

NilScan nilpotents_serial(const RingView& r);
NilScan nilpotents_parallel(const RingView& r);

Bitset center_serial(const RingView& r);
Bitset center_parallel(const RingView& r);

Bitset jacobson_serial(const RingView& r, const Bitset& units);
Bitset jacobson_parallel(const RingView& r, const Bitset& units);

/// Per-element witness counts against fixed idempotent/unit/nilpotent sets.
/// Counts are exact (no short-circuiting) so uniqueness checks can read them
/// directly.
struct ClassCounts {
  uint32_t clean = 0;                // e in Id with a - e a unit
  uint32_t commuting_clean = 0;      // ... and ea = ae
  uint32_t nil_clean = 0;            // e in Id with a - e nilpotent
  uint32_t commuting_nil_clean = 0;  // ... and ea = ae

  bool is_clean() const { return clean > 0; }
  bool is_strongly_clean() const { return commuting_clean > 0; }
  bool is_nil_clean() const { return nil_clean > 0; }
  bool is_strongly_nil_clean() const { return commuting_nil_clean > 0; }
};

std::vector<ClassCounts> class_sweep_serial(const RingView& r,
                                            const std::vector<elem>& idem_list,
                                            const Bitset& units,
                                            const Bitset& nilpotents);
std::vector<ClassCounts> class_sweep_parallel(const RingView& r,
                                              const std::vector<elem>& idem_list,
                                              const Bitset& units,
                                              const Bitset& nilpotents);

struct AxiomReport {
  bool ok = true;
  std::string axiom;            // empty when ok
  std::array<elem, 3> at{0, 0, 0};
};

/// Full O(n^3) associativity/distributivity check plus the O(n^2) abelian
/// group and identity checks. Requires materialized tables for large orders
/// to be bearable; parallelized over the outer loop.
AxiomReport check_axioms_full(const RingView& r);

/// Same predicates on `samples` pseudo-random triples (deterministic seed).
AxiomReport check_axioms_sampled(const RingView& r, uint64_t samples,
                                 uint64_t seed);

/// Smallest set containing `gens` and closed under add, neg and two-sided
/// multiplication by every ring element (fixed-point iteration). The empty
/// generator set closes to {0}.
Bitset ideal_closure_scan(const RingView& r, const std::vector<elem>& gens);

/// Whether some set power S, S·S, S·S·S, ... collapses to {0}. Stops on a
/// previously seen power (cycle => not nilpotent).
bool set_is_nilpotent(const RingView& r, const std::vector<elem>& s);

/// Process-wide worker count for the parallel kernels (1 = serial execution
/// of the parallel path). Returns the previous value.
int set_max_threads(int n);
int max_threads();

}  // namespace ringlab::kernels
