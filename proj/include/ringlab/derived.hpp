#pragma once

#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Memoized element sets of one ring. Components are computed lazily and
/// independently; accessors below force exactly what they need, so cheap
/// deciders on big rings never pay for the scans they skip.
struct DerivedSets {
  Bitset units;
  std::vector<elem> unit_list;
  std::vector<elem> inverse_of;  // kNoElem for non-units

  Bitset idempotents;
  std::vector<elem> idem_list;

  Bitset nilpotents;
  std::vector<elem> nil_list;
  std::vector<uint32_t> nil_index;  // 0 for non-nilpotents

  Bitset center;
  Bitset jacobson;
  std::vector<elem> jacobson_list;
};

const Bitset& units(const FiniteRing& r);
const std::vector<elem>& unit_list(const FiniteRing& r);
/// Two-sided inverse of a unit; kNoElem for non-units.
elem inverse_of(const FiniteRing& r, elem a);

const Bitset& idempotents(const FiniteRing& r);
const std::vector<elem>& idempotent_list(const FiniteRing& r);

const Bitset& nilpotents(const FiniteRing& r);
const std::vector<elem>& nilpotent_list(const FiniteRing& r);
/// Smallest k >= 1 with a^k = 0, or 0 if a is not nilpotent.
uint32_t nil_index(const FiniteRing& r, elem a);

const Bitset& center(const FiniteRing& r);

/// J(R) = { x : 1 - t*x is a unit for all t }; for finite rings this is the
/// Jacobson radical (and also the lower nilradical).
const Bitset& jacobson_radical(const FiniteRing& r);
const std::vector<elem>& jacobson_list(const FiniteRing& r);

/// Forces every component and returns the complete struct.
const DerivedSets& derived_sets(const FiniteRing& r);

/// Per-element clean/nil-clean witness counts (memoized sweep).
const std::vector<kernels::ClassCounts>& class_counts(const FiniteRing& r);

}  // namespace ringlab
