#include "ringlab/taxonomy.hpp"

#include "ringlab/derived.hpp"

namespace ringlab {

namespace {

std::vector<Decomposition> witnesses(const FiniteRing& r, elem a,
                                     DecompKind kind, const Bitset& partners) {
  std::vector<Decomposition> out;
  for (elem e : idempotent_list(r)) {
    const elem d = r.sub(a, e);
    if (!partners.test(d)) continue;
    out.push_back({kind, e, d, r.mul(e, a) == r.mul(a, e)});
  }
  return out;
}

}  // namespace

std::vector<Decomposition> clean_witnesses(const FiniteRing& r, elem a) {
  if (a >= r.order()) throw IndexOutOfRange(a, r.order());
  return witnesses(r, a, DecompKind::clean, units(r));
}

std::vector<Decomposition> nil_clean_witnesses(const FiniteRing& r, elem a) {
  if (a >= r.order()) throw IndexOutOfRange(a, r.order());
  return witnesses(r, a, DecompKind::nil_clean, nilpotents(r));
}

ElementProfile classify_element(const FiniteRing& r, elem a) {
  ElementProfile p;
  p.clean_witnesses = clean_witnesses(r, a);
  p.nil_clean_witnesses = nil_clean_witnesses(r, a);

  p.clean_count = uint32_t(p.clean_witnesses.size());
  p.nil_clean_count = uint32_t(p.nil_clean_witnesses.size());
  for (const auto& w : p.clean_witnesses)
    if (w.commutes) ++p.commuting_clean_count;
  for (const auto& w : p.nil_clean_witnesses)
    if (w.commutes) ++p.commuting_nil_clean_count;

  p.clean = p.clean_count > 0;
  p.strongly_clean = p.commuting_clean_count > 0;
  p.uniquely_clean = p.clean_count == 1;
  p.uniquely_strongly_clean = p.commuting_clean_count == 1;
  p.nil_clean = p.nil_clean_count > 0;
  p.strongly_nil_clean = p.commuting_nil_clean_count > 0;
  p.uniquely_nil_clean = p.nil_clean_count == 1;
  return p;
}

namespace {

// Row 2n of Pascal's triangle with entries reduced mod the characteristic.
// Reducing during the recurrence equals reducing exact binomials afterwards
// (the reduction map is a ring homomorphism), and keeps everything in
// uint64.
std::vector<uint64_t> binomial_row_mod(uint32_t two_n, uint64_t mod) {
  std::vector<uint64_t> row(two_n + 1, 0);
  row[0] = 1 % mod;
  for (uint32_t m = 1; m <= two_n; ++m)
    for (uint32_t i = m; i >= 1; --i) row[i] = (row[i] + row[i - 1]) % mod;
  return row;
}

}  // namespace

elem lift_idempotent(const FiniteRing& r, elem a) {
  if (a >= r.order()) throw IndexOutOfRange(a, r.order());
  const RingView v = r.view();
  const elem q = v.sub(a, v.mul(a, a));
  const uint32_t start = nil_index(r, q);
  if (start == 0) throw NotAlmostIdempotent(a);

  const uint64_t chr = r.characteristic();
  const elem one_minus_a = v.sub(v.one, a);
  const Bitset& nil = nilpotents(r);

  for (uint64_t n = start; n <= r.order(); ++n) {
    const auto binom = binomial_row_mod(uint32_t(2 * n), chr);
    elem e = v.zero;
    for (uint64_t i = 0; i <= n; ++i) {
      const elem term = v.mul(pow(v, a, 2 * n - i), pow(v, one_minus_a, i));
      e = v.add(e, scalar_mul(v, binom[size_t(i)], term));
    }
    if (v.mul(e, e) == e && nil.test(v.sub(a, e)) &&
        v.mul(e, a) == v.mul(a, e))
      return e;
  }
  throw FormulaDivergence("idempotent lift did not stabilize for element " +
                          std::to_string(a));
}

}  // namespace ringlab
