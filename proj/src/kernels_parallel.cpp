#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringlab/errors.hpp"
#include "ringlab/kernels.hpp"

// Production kernels: OpenMP across elements, results written to per-element
// slots so the output is identical for every schedule and thread count.

namespace ringlab::kernels {

namespace {
int g_threads =
#ifdef _OPENMP
    0;  // 0 = use the OpenMP default
#else
    1;
#endif
}  // namespace

int set_max_threads(int n) {
  int prev = max_threads();
  g_threads = n < 1 ? 1 : n;
#ifdef _OPENMP
  omp_set_num_threads(g_threads);
#endif
  return prev;
}

int max_threads() {
#ifdef _OPENMP
  return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

UnitScan units_parallel(const RingView& r) {
  const uint32_t n = r.n;
  UnitScan out;
  out.units = Bitset(n);
  out.inverse_of.assign(n, kNoElem);
  std::atomic<bool> bad{false};

#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t ai = 0; ai < int64_t(n); ++ai) {
    const elem a = elem(ai);
    for (elem b = 0; b < n; ++b) {
      if (r.mul(a, b) == r.one) {
        if (r.mul(b, a) != r.one) bad.store(true, std::memory_order_relaxed);
        out.inverse_of[a] = b;
        break;
      }
    }
  }

  if (bad.load())
    throw InternalError("one-sided inverse detected during unit scan");
  for (elem a = 0; a < n; ++a)
    if (out.inverse_of[a] != kNoElem) out.units.set(a);
  out.list = out.units.to_list();
  return out;
}

NilScan nilpotents_parallel(const RingView& r) {
  const uint32_t n = r.n;
  NilScan out;
  out.nilpotents = Bitset(n);
  out.nil_index.assign(n, 0);

  // a is nilpotent iff a^(2^L) = 0 where 2^L >= n: the nilpotency index of
  // any element is at most the order, and repeated squaring jumps past it.
  uint32_t squarings = 0;
  for (uint64_t s = 1; s < n; s <<= 1) ++squarings;

  std::vector<uint8_t> is_nil(n, 0);
#pragma omp parallel for schedule(static)
  for (int64_t ai = 0; ai < int64_t(n); ++ai) {
    elem p = elem(ai);
    for (uint32_t i = 0; i < squarings && p != r.zero; ++i) p = r.mul(p, p);
    if (p == r.zero) is_nil[ai] = 1;
  }

  for (elem a = 0; a < n; ++a)
    if (is_nil[a]) out.nilpotents.set(a);
  out.list = out.nilpotents.to_list();

  // Exact indices only for the members (usually few); linear power walk.
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < int64_t(out.list.size()); ++i) {
    const elem a = out.list[size_t(i)];
    elem p = a;
    uint32_t k = 1;
    while (p != r.zero) {
      p = r.mul(p, a);
      ++k;
    }
    out.nil_index[a] = k;
  }
  return out;
}

Bitset center_parallel(const RingView& r) {
  const uint32_t n = r.n;
  std::vector<uint8_t> central(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t ai = 0; ai < int64_t(n); ++ai) {
    const elem a = elem(ai);
    bool ok = true;
    for (elem b = 0; b < n && ok; ++b) ok = r.mul(a, b) == r.mul(b, a);
    central[ai] = ok;
  }
  Bitset out(n);
  for (elem a = 0; a < n; ++a)
    if (central[a]) out.set(a);
  return out;
}

Bitset jacobson_parallel(const RingView& r, const Bitset& units) {
  const uint32_t n = r.n;
  std::vector<uint8_t> in_j(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t xi = 0; xi < int64_t(n); ++xi) {
    const elem x = elem(xi);
    bool ok = true;
    for (elem t = 0; t < n && ok; ++t)
      ok = units.test(r.sub(r.one, r.mul(t, x)));
    in_j[xi] = ok;
  }
  Bitset out(n);
  for (elem x = 0; x < n; ++x)
    if (in_j[x]) out.set(x);
  return out;
}

std::vector<ClassCounts> class_sweep_parallel(const RingView& r,
                                              const std::vector<elem>& idem_list,
                                              const Bitset& units,
                                              const Bitset& nilpotents) {
  std::vector<ClassCounts> rows(r.n);
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t ai = 0; ai < int64_t(r.n); ++ai) {
    const elem a = elem(ai);
    ClassCounts& row = rows[size_t(ai)];
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

namespace {

struct Violation {
  bool found = false;
  const char* axiom = nullptr;
  std::array<elem, 3> at{0, 0, 0};

  void note(const char* ax, elem a, elem b, elem c) {
    if (!found || std::array<elem, 3>{a, b, c} < at) {
      found = true;
      axiom = ax;
      at = {a, b, c};
    }
  }
  void merge(const Violation& other) {
    if (!other.found) return;
    if (!found || other.at < at) *this = other;
  }
};

uint64_t splitmix64(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool check_triple(const RingView& r, elem a, elem b, elem c, Violation& v) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
    v.note("addition associates", a, b, c);
    return false;
  }
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
    v.note("multiplication associates", a, b, c);
    return false;
  }
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
    v.note("left distributivity", a, b, c);
    return false;
  }
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
    v.note("right distributivity", a, b, c);
    return false;
  }
  return true;
}

// Pairwise axioms: commutativity, inverses, identities.
bool check_pairs(const RingView& r, Violation& v) {
  const uint32_t n = r.n;
  for (elem a = 0; a < n; ++a) {
    if (r.add(r.zero, a) != a) {
      v.note("additive identity", a, 0, 0);
      return false;
    }
    if (r.add(a, r.neg(a)) != r.zero) {
      v.note("additive inverse", a, 0, 0);
      return false;
    }
    if (r.mul(r.one, a) != a || r.mul(a, r.one) != a) {
      v.note("multiplicative identity", a, 0, 0);
      return false;
    }
    for (elem b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) {
        v.note("addition commutes", a, b, 0);
        return false;
      }
  }
  return true;
}

}  // namespace

AxiomReport check_axioms_full(const RingView& r) {
  Violation v;
  if (check_pairs(r, v)) {
    const uint32_t n = r.n;
    std::atomic<bool> stop{false};
#pragma omp parallel
    {
      Violation local;
#pragma omp for schedule(dynamic, 4)
      for (int64_t ai = 0; ai < int64_t(n); ++ai) {
        if (stop.load(std::memory_order_relaxed)) continue;
        const elem a = elem(ai);
        for (elem b = 0; b < n; ++b)
          for (elem c = 0; c < n; ++c)
            if (!check_triple(r, a, b, c, local)) {
              stop.store(true, std::memory_order_relaxed);
              b = n;
              break;
            }
      }
#pragma omp critical
      v.merge(local);
    }
  }
  AxiomReport rep;
  if (v.found) {
    rep.ok = false;
    rep.axiom = v.axiom;
    rep.at = v.at;
  }
  return rep;
}

AxiomReport check_axioms_sampled(const RingView& r, uint64_t samples,
                                 uint64_t seed) {
  Violation v;
  if (check_pairs(r, v)) {
    uint64_t s = seed;
    for (uint64_t i = 0; i < samples; ++i) {
      const elem a = elem(splitmix64(s) % r.n);
      const elem b = elem(splitmix64(s) % r.n);
      const elem c = elem(splitmix64(s) % r.n);
      if (!check_triple(r, a, b, c, v)) break;
    }
  }
  AxiomReport rep;
  if (v.found) {
    rep.ok = false;
    rep.axiom = v.axiom;
    rep.at = v.at;
  }
  return rep;
}

}  // namespace ringlab::kernels
