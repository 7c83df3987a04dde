#include "ringlab/errors.hpp"
#include "ringlab/kernels.hpp"

// Reference implementations of the scan kernels: single-threaded plain
// loops. The parallel flavours in kernels_parallel.cpp are checked against
// these on the whole corpus.

namespace ringlab::kernels {

UnitScan units_serial(const RingView& r) {
  const uint32_t n = r.n;
  UnitScan out;
  out.units = Bitset(n);
  out.inverse_of.assign(n, kNoElem);
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if (r.mul(a, b) == r.one) {
        // Finite rings are Dedekind-finite: a one-sided inverse that fails
        // the two-sided check means the arithmetic itself is broken.
        if (r.mul(b, a) != r.one)
          throw InternalError("one-sided inverse detected for element " +
                              std::to_string(a));
        out.units.set(a);
        out.inverse_of[a] = b;
        break;
      }
    }
  }
  out.list = out.units.to_list();
  return out;
}

Bitset idempotents_scan(const RingView& r) {
  Bitset out(r.n);
  for (elem a = 0; a < r.n; ++a)
    if (r.mul(a, a) == a) out.set(a);
  return out;
}

NilScan nilpotents_serial(const RingView& r) {
  const uint32_t n = r.n;
  NilScan out;
  out.nilpotents = Bitset(n);
  out.nil_index.assign(n, 0);
  // Power orbits cycle in a finite ring: iterate until zero or the first
  // repeated value, bounded by order+1 steps.
  std::vector<elem> stamp(n, kNoElem);
  for (elem a = 0; a < n; ++a) {
    elem p = a;
    for (uint32_t k = 1; k <= n + 1; ++k) {
      if (p == r.zero) {
        out.nilpotents.set(a);
        out.nil_index[a] = k;
        break;
      }
      if (stamp[p] == a) break;  // orbit cycled without reaching zero
      stamp[p] = a;
      p = r.mul(p, a);
    }
  }
  out.list = out.nilpotents.to_list();
  return out;
}

Bitset center_serial(const RingView& r) {
  Bitset out(r.n);
  for (elem a = 0; a < r.n; ++a) {
    bool central = true;
    for (elem b = 0; b < r.n && central; ++b)
      central = r.mul(a, b) == r.mul(b, a);
    if (central) out.set(a);
  }
  return out;
}

Bitset jacobson_serial(const RingView& r, const Bitset& units) {
  Bitset out(r.n);
  for (elem x = 0; x < r.n; ++x) {
    bool in_j = true;
    for (elem t = 0; t < r.n && in_j; ++t)
      in_j = units.test(r.sub(r.one, r.mul(t, x)));
    if (in_j) out.set(x);
  }
  return out;
}

std::vector<ClassCounts> class_sweep_serial(const RingView& r,
                                            const std::vector<elem>& idem_list,
                                            const Bitset& units,
                                            const Bitset& nilpotents) {
  std::vector<ClassCounts> rows(r.n);
  for (elem a = 0; a < r.n; ++a) {
    ClassCounts& row = rows[a];
    for (elem e : idem_list) {
      const elem d = r.sub(a, e);
      const bool is_unit = units.test(d);
      const bool is_nil = nilpotents.test(d);
      if (!is_unit && !is_nil) continue;
      const bool commutes = r.mul(e, a) == r.mul(a, e);
      if (is_unit) {
        ++row.clean;
        if (commutes) ++row.commuting_clean;
      }
      if (is_nil) {
        ++row.nil_clean;
        if (commutes) ++row.commuting_nil_clean;
      }
    }
  }
  return rows;
}

Bitset ideal_closure_scan(const RingView& r, const std::vector<elem>& gens) {
  const uint32_t n = r.n;
  Bitset in_set(n);
  std::vector<elem> members;
  std::vector<elem> work;

  auto push = [&](elem x) {
    if (!in_set.test(x)) {
      in_set.set(x);
      members.push_back(x);
      work.push_back(x);
    }
  };

  push(r.zero);
  for (elem g : gens) {
    if (g >= n) throw IndexOutOfRange(g, n);
    push(g);
  }

  while (!work.empty()) {
    const elem x = work.back();
    work.pop_back();
    push(r.neg(x));
    // Sums with everything already collected; pairs with later members are
    // produced when those members are popped.
    for (size_t i = 0; i < members.size(); ++i) push(r.add(x, members[i]));
    for (elem t = 0; t < n; ++t) {
      push(r.mul(t, x));
      push(r.mul(x, t));
    }
  }
  return in_set;
}

bool set_is_nilpotent(const RingView& r, const std::vector<elem>& s) {
  if (s.empty()) return true;
  Bitset base(r.n);
  for (elem x : s) base.set(x);

  Bitset zero_only(r.n);
  zero_only.set(r.zero);

  std::vector<Bitset> seen;
  Bitset cur = base;
  while (true) {
    if (cur == zero_only) return true;
    for (const Bitset& old : seen)
      if (old == cur) return false;  // power cycle, never reaches {0}
    seen.push_back(cur);

    Bitset next(r.n);
    const auto cur_list = cur.to_list();
    for (elem a : cur_list)
      for (elem b : s) next.set(r.mul(a, b));
    cur = next;
  }
}

}  // namespace ringlab::kernels
