#pragma once

#include <atomic>
#include <cstdint>
#include <istream>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

/// Element id inside a ring carrier; ids always run 0..order-1.
using elem = uint32_t;
inline constexpr elem kNoElem = 0xFFFFFFFFu;

/// Exact arithmetic of one finite unital ring. Implementations either hold
/// explicit Cayley tables or compute structurally (residues, matrices,
/// products, convolutions, ...). All operations are total on 0..order-1.
class RingOps {
 public:
  virtual ~RingOps() = default;

  virtual uint32_t order() const = 0;
  virtual elem add(elem a, elem b) const = 0;
  virtual elem mul(elem a, elem b) const = 0;
  virtual elem neg(elem a) const = 0;
  virtual elem zero() const = 0;
  virtual elem one() const = 0;

  /// Human-readable element name; defaults to the decimal id.
  virtual std::string label(elem a) const { return std::to_string(a); }
};

namespace detail {

struct DerivedCache;  // defined in derived.hpp/derived.cpp

/// Shared per-ring lazy state: flat operation tables (materialized for small
/// orders so the hot scans avoid virtual dispatch) and memoized derived sets.
/// Fill-in is guarded by once_flags, so concurrent readers racing to compute
/// the same component is safe and idempotent.
struct RingCache {
  std::once_flag tables_once;
  std::vector<uint16_t> add_tab, mul_tab;
  std::atomic<bool> tables_ready{false};

  std::once_flag char_once;
  uint32_t characteristic = 0;

  std::shared_ptr<DerivedCache> derived;

  RingCache();
  ~RingCache();
};

}  // namespace detail

/// Non-owning accessor used inside kernels: resolves add/mul through the
/// cached tables when present and through the ops object otherwise.
struct RingView {
  const RingOps* ops;
  const uint16_t* add_tab;
  const uint16_t* mul_tab;
  uint32_t n;
  elem zero, one;

  elem add(elem a, elem b) const {
    return add_tab ? add_tab[size_t(a) * n + b] : ops->add(a, b);
  }
  elem mul(elem a, elem b) const {
    return mul_tab ? mul_tab[size_t(a) * n + b] : ops->mul(a, b);
  }
  elem neg(elem a) const { return ops->neg(a); }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
};

/// A finite unital ring: cheap to copy, immutable after construction.
/// Derived sets and operation tables are memoized in shared cache state.
class FiniteRing {
 public:
  FiniteRing(std::shared_ptr<const RingOps> ops, std::string source);

  uint32_t order() const { return order_; }
  elem zero() const { return zero_; }
  elem one() const { return one_; }

  elem add(elem a, elem b) const { return view().add(a, b); }
  elem mul(elem a, elem b) const { return view().mul(a, b); }
  elem neg(elem a) const { return ops_->neg(a); }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  std::string label(elem a) const { return ops_->label(a); }
  const std::string& source() const { return source_; }
  const RingOps& ops() const { return *ops_; }
  std::shared_ptr<const RingOps> ops_ptr() const { return ops_; }

  RingView view() const {
    const auto& c = *cache_;
    if (c.tables_ready.load(std::memory_order_acquire))
      return {ops_.get(), c.add_tab.data(), c.mul_tab.data(), order_, zero_, one_};
    return {ops_.get(), nullptr, nullptr, order_, zero_, one_};
  }

  /// Materializes flat add/mul tables (idempotent, thread-safe). Cheap for
  /// small rings; refuses orders whose tables would not fit the budget.
  void ensure_tables() const;
  bool has_tables() const {
    return cache_->tables_ready.load(std::memory_order_acquire);
  }

  /// Additive order of 1 (equals the ring characteristic; 1 for the zero ring).
  uint32_t characteristic() const;

  detail::RingCache& cache() const { return *cache_; }

  /// Largest order for which tables are materialized automatically.
  static constexpr uint32_t kAutoTableMaxOrder = 2048;
  /// Hard ceiling for explicit ensure_tables() requests.
  static constexpr uint32_t kTableMaxOrder = 8192;

 private:
  std::shared_ptr<const RingOps> ops_;
  std::shared_ptr<detail::RingCache> cache_;
  uint32_t order_;
  elem zero_, one_;
  std::string source_;

  friend FiniteRing share_structure(const FiniteRing&, std::string);
};

/// Returns a ring that shares ops and memoized state with `r` but carries a
/// different source string (used when a constructor provably returns the
/// same carrier, e.g. the corner at the identity).
FiniteRing share_structure(const FiniteRing& r, std::string source);

/// a^k by repeated squaring; a^0 is 1.
elem pow(const FiniteRing& r, elem a, uint64_t k);
elem pow(const RingView& v, elem a, uint64_t k);

/// k·a (integer multiple inside the ring) by double-and-add.
elem scalar_mul(const RingView& v, uint64_t k, elem a);

struct TablePair {
  std::vector<std::vector<elem>> add, mul;
};

/// Checks every ring axiom on explicit tables by exhaustive loops, discovers
/// zero and one, and wraps the tables as a ring. The triple loops make this
/// O(n^3); table files are expected to be small.
FiniteRing validate_tables(const TablePair& tables,
                           std::string source = "table");

/// Cayley table file: line 1 "order n", then n rows of the addition table and
/// n rows of the multiplication table, space-separated ids, row-major.
TablePair read_table_file(std::istream& in);
FiniteRing load_ring_table(std::istream& in, std::string source = "table");

}  // namespace ringlab
