#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Counterexample attached to a false class verdict: the smallest offending
/// element plus a short explanation in terms of its decompositions.
struct ClassWitness {
  std::string cls;
  elem element = 0;
  std::string label;
  std::string detail;
};

/// Ring-level verdicts. The acronym classes quantify over clean or nil-clean
/// elements; the rest are the usual structural predicates.
struct RingProfile {
  bool csnc = false;    // every clean element is strongly nil-clean
  bool ncuc = false;    // every nil-clean element is uniquely clean
  bool cunc = false;    // every clean element is uniquely nil-clean
  bool ncsuc = false;   // every nil-clean element is uniquely strongly clean
  bool ncc = false;     // every nil-clean element is clean
  bool ncunc = false;   // every nil-clean element is uniquely nil-clean
  bool uu = false;      // U(R) = 1 + Nil(R)
  bool abelian = false; // all idempotents central
  bool boolean_ring = false;
  bool reduced = false;
  bool local = false;
  bool clean_ring = false;
  bool nil_clean_ring = false;
  bool strongly_nil_clean_ring = false;
  bool uniquely_clean_ring = false;

  std::vector<ClassWitness> witnesses;  // one per false verdict

  /// Stable (name, value) view in rendering order.
  std::vector<std::pair<std::string, bool>> entries() const;
  bool value(const std::string& name) const;
  const ClassWitness* witness(const std::string& cls) const;
};

RingProfile class_profile(const FiniteRing& r);

/// CSNC decided through the almost-idempotent relation: every clean element
/// a has a - a^2 nilpotent.
bool is_csnc_criterion(const FiniteRing& r);
/// Smallest clean a with a - a^2 not nilpotent, if any.
std::optional<elem> csnc_criterion_witness(const FiniteRing& r);

/// CSNC decided as: every clean element is strongly clean, and the units are
/// exactly 1 + Nil(R).
bool is_csnc_uu_criterion(const FiniteRing& r);

/// CSNC decided through iterated squares: 2 is nilpotent and every clean a
/// has a^(2^k) - a^(2^(k+1)) nilpotent for some k <= ceil(log2(order)).
bool is_csnc_power_criterion(const FiniteRing& r);
/// Variant: 2 nilpotent and some a^(2^k) is strongly nil-clean.
bool is_csnc_power_snc_criterion(const FiniteRing& r);

/// NCUC decided through centrality: every idempotent is central.
bool is_ncuc_criterion(const FiniteRing& r);

/// Targeted checks reused by the law suite (cheaper than a full profile).
bool is_csnc_check(const FiniteRing& r);
bool is_ncsuc_check(const FiniteRing& r);

}  // namespace ringlab
