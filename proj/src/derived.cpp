#include "ringlab/derived.hpp"

#include <mutex>

namespace ringlab {

namespace detail {

struct DerivedCache {
  std::once_flag units_once, idem_once, nil_once, center_once, jac_once,
      sweep_once;
  DerivedSets sets;
  std::vector<kernels::ClassCounts> sweep;
};

}  // namespace detail

namespace {

detail::DerivedCache& dc(const FiniteRing& r) {
  // Holder creation is serialized here; the component fills inside are each
  // once_flag-guarded.
  auto& cache = r.cache();
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache.derived) cache.derived = std::make_shared<detail::DerivedCache>();
  return *cache.derived;
}

detail::DerivedCache& ensure_units(const FiniteRing& r) {
  auto& c = dc(r);
  std::call_once(c.units_once, [&] {
    auto scan = kernels::units_parallel(r.view());
    c.sets.units = std::move(scan.units);
    c.sets.unit_list = std::move(scan.list);
    c.sets.inverse_of = std::move(scan.inverse_of);
  });
  return c;
}

detail::DerivedCache& ensure_idempotents(const FiniteRing& r) {
  auto& c = dc(r);
  std::call_once(c.idem_once, [&] {
    c.sets.idempotents = kernels::idempotents_scan(r.view());
    c.sets.idem_list = c.sets.idempotents.to_list();
  });
  return c;
}

detail::DerivedCache& ensure_nilpotents(const FiniteRing& r) {
  auto& c = dc(r);
  std::call_once(c.nil_once, [&] {
    auto scan = kernels::nilpotents_parallel(r.view());
    c.sets.nilpotents = std::move(scan.nilpotents);
    c.sets.nil_list = std::move(scan.list);
    c.sets.nil_index = std::move(scan.nil_index);
  });
  return c;
}

detail::DerivedCache& ensure_center(const FiniteRing& r) {
  auto& c = dc(r);
  std::call_once(c.center_once,
                 [&] { c.sets.center = kernels::center_parallel(r.view()); });
  return c;
}

detail::DerivedCache& ensure_jacobson(const FiniteRing& r) {
  auto& c = ensure_units(r);
  std::call_once(c.jac_once, [&] {
    c.sets.jacobson = kernels::jacobson_parallel(r.view(), c.sets.units);
    c.sets.jacobson_list = c.sets.jacobson.to_list();
  });
  return c;
}

}  // namespace

const Bitset& units(const FiniteRing& r) { return ensure_units(r).sets.units; }

const std::vector<elem>& unit_list(const FiniteRing& r) {
  return ensure_units(r).sets.unit_list;
}

elem inverse_of(const FiniteRing& r, elem a) {
  if (a >= r.order()) throw IndexOutOfRange(a, r.order());
  return ensure_units(r).sets.inverse_of[a];
}

const Bitset& idempotents(const FiniteRing& r) {
  return ensure_idempotents(r).sets.idempotents;
}

const std::vector<elem>& idempotent_list(const FiniteRing& r) {
  return ensure_idempotents(r).sets.idem_list;
}

const Bitset& nilpotents(const FiniteRing& r) {
  return ensure_nilpotents(r).sets.nilpotents;
}

const std::vector<elem>& nilpotent_list(const FiniteRing& r) {
  return ensure_nilpotents(r).sets.nil_list;
}

uint32_t nil_index(const FiniteRing& r, elem a) {
  if (a >= r.order()) throw IndexOutOfRange(a, r.order());
  return ensure_nilpotents(r).sets.nil_index[a];
}

const Bitset& center(const FiniteRing& r) {
  return ensure_center(r).sets.center;
}

const Bitset& jacobson_radical(const FiniteRing& r) {
  return ensure_jacobson(r).sets.jacobson;
}

const std::vector<elem>& jacobson_list(const FiniteRing& r) {
  return ensure_jacobson(r).sets.jacobson_list;
}

const DerivedSets& derived_sets(const FiniteRing& r) {
  ensure_units(r);
  ensure_idempotents(r);
  ensure_nilpotents(r);
  ensure_center(r);
  return ensure_jacobson(r).sets;
}

const std::vector<kernels::ClassCounts>& class_counts(const FiniteRing& r) {
  ensure_units(r);
  ensure_idempotents(r);
  auto& c = ensure_nilpotents(r);
  std::call_once(c.sweep_once, [&] {
    c.sweep = kernels::class_sweep_parallel(r.view(), c.sets.idem_list,
                                            c.sets.units, c.sets.nilpotents);
  });
  return c.sweep;
}

}  // namespace ringlab
