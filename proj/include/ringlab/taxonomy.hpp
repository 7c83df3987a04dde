#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

enum class DecompKind { clean, nil_clean };

/// One two-summand decomposition a = e + partner with e idempotent and the
/// partner a unit (clean) or a nilpotent (nil_clean). `commutes` records
/// whether e·a = a·e, which is equivalent to e commuting with the partner.
struct Decomposition {
  DecompKind kind;
  elem e;
  elem partner;
  bool commutes;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// All clean/nil-clean classification flags of one element. Uniqueness flags
/// count all witnesses of the relevant kind; the "strongly" variants count
/// only commuting witnesses (and do not ask other witnesses to be absent).
struct ElementProfile {
  bool clean = false;
  bool strongly_clean = false;
  bool uniquely_clean = false;
  bool uniquely_strongly_clean = false;
  bool nil_clean = false;
  bool strongly_nil_clean = false;
  bool uniquely_nil_clean = false;

  uint32_t clean_count = 0;
  uint32_t commuting_clean_count = 0;
  uint32_t nil_clean_count = 0;
  // Recorded alongside the plain count so either uniqueness convention can
  // be asserted.
  uint32_t commuting_nil_clean_count = 0;

  std::vector<Decomposition> clean_witnesses;
  std::vector<Decomposition> nil_clean_witnesses;
};

/// All pairs (e, a-e) with e idempotent and a-e a unit, ordered by e id.
std::vector<Decomposition> clean_witnesses(const FiniteRing& r, elem a);

/// All pairs (e, a-e) with e idempotent and a-e nilpotent, ordered by e id.
std::vector<Decomposition> nil_clean_witnesses(const FiniteRing& r, elem a);

ElementProfile classify_element(const FiniteRing& r, elem a);

/// For a with a - a^2 nilpotent: the idempotent
///   e = sum_{i=0}^{n} C(2n,i) a^(2n-i) (1-a)^i,   n = nil index of a - a^2,
/// which satisfies e^2 = e, a - e nilpotent and ea = ae. Retries with larger
/// n up to the ring order before reporting divergence (an engine-bug signal).
elem lift_idempotent(const FiniteRing& r, elem a);

}  // namespace ringlab
