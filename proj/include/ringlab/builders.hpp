#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct BuildLimits {
  uint64_t order_cap = 65536;  // constructors exceeding this fail fast
};

/// Integers mod n with standard arithmetic (n = 1 gives the zero ring).
FiniteRing make_zn(uint64_t n, const BuildLimits& limits = {});

/// Componentwise arithmetic; element ids are mixed-radix encodings with the
/// most significant factor first.
FiniteRing direct_product(const std::vector<FiniteRing>& factors,
                          const BuildLimits& limits = {});

/// k x k matrices over r, cells encoded row-major, most significant first.
FiniteRing matrix_ring(const FiniteRing& r, uint32_t k,
                       const BuildLimits& limits = {});

/// Upper-triangular k x k matrices over r; cells (i,j) with i <= j encoded
/// row-major, most significant first.
FiniteRing triangular_ring(const FiniteRing& r, uint32_t k,
                           const BuildLimits& limits = {});

/// The corner e·R·e with identity e; arithmetic inherited from r.
FiniteRing corner_ring(const FiniteRing& r, elem e);

/// Smallest subset containing gens closed under add, neg and two-sided
/// multiplication by every ring element.
Bitset ideal_closure(const FiniteRing& r, const std::vector<elem>& gens);

/// Cosets of a (verified) ideal; canonical representative is the smallest id
/// in each coset.
FiniteRing quotient_ring(const FiniteRing& r, const Bitset& ideal);
FiniteRing quotient_ring(const FiniteRing& r, const std::vector<elem>& ideal);

/// Formal sums over g with coefficients in r; elements are coefficient
/// vectors indexed by group elements (group element 0 most significant),
/// multiplied by convolution.
FiniteRing group_ring(const FiniteRing& r, const FiniteGroup& g,
                      const BuildLimits& limits = {});

/// Elements of a group ring whose coefficients sum to zero (the kernel of
/// the coefficient-sum map). Throws NotAGroupRing for other rings.
std::vector<elem> augmentation_ideal(const FiniteRing& rg);

/// 2x2 generalized matrices (a, x; y, b) over r with the product twisted by
/// the central element s:
///   (a1a2 + s·x1y2,  a1x2 + x1b2,  y1a2 + b1y2,  s·y1x2 + b1b2).
FiniteRing ks_ring(const FiniteRing& r, elem s, const BuildLimits& limits = {});

/// Finite (R,S)-bimodule given by callables; all axioms are verified by full
/// scans when the formal triangular ring is constructed.
struct Bimodule {
  uint32_t order = 0;
  elem zero = 0;
  std::function<elem(elem, elem)> add;
  std::function<elem(elem, elem)> left;   // left(r_elem, m)
  std::function<elem(elem, elem)> right;  // right(m, s_elem)
  std::function<std::string(elem)> label; // optional
};

/// Block-triangular ring of triples (r, m, s) with product
/// (r1r2, r1·m2 + m1·s2, s1s2).
FiniteRing formal_triangular(const FiniteRing& rR, const FiniteRing& rS,
                             const Bimodule& m, const BuildLimits& limits = {});

/// View of r as an (r,r)-bimodule via ring multiplication (the M that makes
/// formal_triangular(r, r, ...) coincide with triangular_ring(r, 2)).
Bimodule ring_as_bimodule(const FiniteRing& r);

/// Group-ring metadata surfaced for augmentation_ideal and the group-ring
/// laws; rings built by group_ring carry these ops.
class GroupRingOps : public RingOps {
 public:
  virtual const FiniteRing& base() const = 0;
  virtual const FiniteGroup& group() const = 0;
  /// Coefficient of group element g inside ring element a.
  virtual elem coefficient(elem a, elem g) const = 0;
};

}  // namespace ringlab
