#include "ringlab/classes.hpp"

#include "ringlab/derived.hpp"
#include "ringlab/taxonomy.hpp"

namespace ringlab {

std::vector<std::pair<std::string, bool>> RingProfile::entries() const {
  return {{"CSNC", csnc},
          {"NCUC", ncuc},
          {"CUNC", cunc},
          {"NCSUC", ncsuc},
          {"NCC", ncc},
          {"NCUNC", ncunc},
          {"UU", uu},
          {"abelian", abelian},
          {"boolean", boolean_ring},
          {"reduced", reduced},
          {"local", local},
          {"clean_ring", clean_ring},
          {"nil_clean_ring", nil_clean_ring},
          {"strongly_nil_clean_ring", strongly_nil_clean_ring},
          {"uniquely_clean_ring", uniquely_clean_ring}};
}

bool RingProfile::value(const std::string& name) const {
  for (const auto& [k, v] : entries())
    if (k == name) return v;
  throw Error("unknown ring class: " + name);
}

const ClassWitness* RingProfile::witness(const std::string& cls) const {
  for (const auto& w : witnesses)
    if (w.cls == cls) return &w;
  return nullptr;
}

namespace {

std::string decomposition_note(const FiniteRing& r, elem a) {
  const auto& rows = class_counts(r);
  const auto& c = rows[a];
  return "clean witnesses " + std::to_string(c.clean) + " (commuting " +
         std::to_string(c.commuting_clean) + "), nil-clean witnesses " +
         std::to_string(c.nil_clean) + " (commuting " +
         std::to_string(c.commuting_nil_clean) + ")";
}

}  // namespace

RingProfile class_profile(const FiniteRing& r) {
  const uint32_t n = r.order();
  const auto& rows = class_counts(r);
  const Bitset& unit_set = units(r);
  const Bitset& nil_set = nilpotents(r);
  const Bitset& idem_set = idempotents(r);

  RingProfile p;
  p.csnc = p.ncuc = p.cunc = p.ncsuc = p.ncc = p.ncunc = true;
  p.clean_ring = p.nil_clean_ring = p.strongly_nil_clean_ring = true;
  p.uniquely_clean_ring = true;

  elem w_csnc = kNoElem, w_ncuc = kNoElem, w_cunc = kNoElem, w_ncsuc = kNoElem,
       w_ncc = kNoElem, w_ncunc = kNoElem, w_clean = kNoElem, w_nc = kNoElem,
       w_snc = kNoElem, w_uc = kNoElem;

  for (elem a = 0; a < n; ++a) {
    const auto& c = rows[a];
    auto miss = [&](bool& flag, elem& w) {
      if (flag) {
        flag = false;
        w = a;
      }
    };
    if (c.is_clean()) {
      if (!c.is_strongly_nil_clean()) miss(p.csnc, w_csnc);
      if (c.nil_clean != 1) miss(p.cunc, w_cunc);
    }
    if (c.is_nil_clean()) {
      if (c.clean != 1) miss(p.ncuc, w_ncuc);
      if (c.commuting_clean != 1) miss(p.ncsuc, w_ncsuc);
      if (!c.is_clean()) miss(p.ncc, w_ncc);
      if (c.nil_clean != 1) miss(p.ncunc, w_ncunc);
    }
    if (!c.is_clean()) miss(p.clean_ring, w_clean);
    if (!c.is_nil_clean()) miss(p.nil_clean_ring, w_nc);
    if (!c.is_strongly_nil_clean()) miss(p.strongly_nil_clean_ring, w_snc);
    if (c.clean != 1) miss(p.uniquely_clean_ring, w_uc);
  }

  // UU: units coincide with 1 + Nil.
  p.uu = true;
  elem w_uu = kNoElem;
  {
    Bitset one_plus_nil(n);
    for (elem q : nilpotent_list(r)) one_plus_nil.set(r.add(r.one(), q));
    for (elem a = 0; a < n && p.uu; ++a)
      if (unit_set.test(a) != one_plus_nil.test(a)) {
        p.uu = false;
        w_uu = a;
      }
  }

  p.abelian = idem_set.is_subset_of(center(r));
  elem w_ab = kNoElem;
  if (!p.abelian) {
    const Bitset& z = center(r);
    for (elem e : idempotent_list(r))
      if (!z.test(e)) {
        w_ab = e;
        break;
      }
  }

  p.boolean_ring = true;
  elem w_bool = kNoElem;
  for (elem a = 0; a < n && p.boolean_ring; ++a)
    if (r.mul(a, a) != a) {
      p.boolean_ring = false;
      w_bool = a;
    }

  p.reduced = nilpotent_list(r).size() == 1;  // {0} only
  elem w_red = kNoElem;
  if (!p.reduced)
    for (elem q : nilpotent_list(r))
      if (q != r.zero()) {
        w_red = q;
        break;
      }

  // Local: non-units closed under addition. The order-1 ring is excluded:
  // it has no maximal ideal, so it is not local even though the closure
  // condition is vacuous.
  p.local = n > 1;
  elem w_loc = kNoElem;
  std::string local_detail;
  if (n == 1) {
    local_detail = "the zero ring has no maximal ideal";
  } else {
    std::vector<elem> non_units;
    non_units.reserve(n - unit_list(r).size());
    for (elem a = 0; a < n; ++a)
      if (!unit_set.test(a)) non_units.push_back(a);
    for (size_t i = 0; i < non_units.size() && p.local; ++i)
      for (size_t j = i; j < non_units.size(); ++j) {
        const elem s = r.add(non_units[i], non_units[j]);
        if (unit_set.test(s)) {
          p.local = false;
          w_loc = non_units[i];
          local_detail = "non-units " + r.label(non_units[i]) + " + " +
                         r.label(non_units[j]) + " = unit " + r.label(s);
          break;
        }
      }
  }

  auto note = [&](const char* cls, elem w, std::string detail) {
    if (w == kNoElem) return;
    p.witnesses.push_back({cls, w, r.label(w), std::move(detail)});
  };

  note("CSNC", w_csnc,
       w_csnc == kNoElem
           ? ""
           : "a - a^2 = " + r.label(r.sub(w_csnc, r.mul(w_csnc, w_csnc))) +
                 (nil_set.test(r.sub(w_csnc, r.mul(w_csnc, w_csnc)))
                      ? " is nilpotent but no commuting nil-clean witness"
                      : " is not nilpotent") +
                 "; " + decomposition_note(r, w_csnc));
  note("NCUC", w_ncuc,
       w_ncuc == kNoElem ? "" : decomposition_note(r, w_ncuc));
  note("CUNC", w_cunc,
       w_cunc == kNoElem ? "" : decomposition_note(r, w_cunc));
  note("NCSUC", w_ncsuc,
       w_ncsuc == kNoElem ? "" : decomposition_note(r, w_ncsuc));
  note("NCC", w_ncc, w_ncc == kNoElem ? "" : decomposition_note(r, w_ncc));
  note("NCUNC", w_ncunc,
       w_ncunc == kNoElem ? "" : decomposition_note(r, w_ncunc));
  if (w_uu != kNoElem)
    note("UU", w_uu,
         unit_set.test(w_uu) ? "unit not of the form 1 + nilpotent"
                             : "1 + nilpotent that is not a unit");
  note("abelian", w_ab, w_ab == kNoElem ? "" : "non-central idempotent");
  note("boolean", w_bool, w_bool == kNoElem ? "" : "a^2 != a");
  note("reduced", w_red, w_red == kNoElem ? "" : "nonzero nilpotent");
  if (!p.local) note("local", w_loc == kNoElem ? 0 : w_loc, local_detail);
  note("clean_ring", w_clean, w_clean == kNoElem ? "" : "element is not clean");
  note("nil_clean_ring", w_nc, w_nc == kNoElem ? "" : "element is not nil-clean");
  note("strongly_nil_clean_ring", w_snc,
       w_snc == kNoElem ? "" : "no commuting nil-clean witness");
  note("uniquely_clean_ring", w_uc,
       w_uc == kNoElem ? "" : decomposition_note(r, w_uc));
  return p;
}

namespace {

/// Clean test with early exit (criteria do not need exact counts).
bool element_is_clean(const FiniteRing& r, elem a, const Bitset& unit_set) {
  for (elem e : idempotent_list(r))
    if (unit_set.test(r.sub(a, e))) return true;
  return false;
}

bool element_is_strongly_clean(const FiniteRing& r, elem a,
                               const Bitset& unit_set) {
  for (elem e : idempotent_list(r))
    if (unit_set.test(r.sub(a, e)) && r.mul(e, a) == r.mul(a, e)) return true;
  return false;
}

bool element_is_strongly_nil_clean(const FiniteRing& r, elem a,
                                   const Bitset& nil_set) {
  for (elem e : idempotent_list(r))
    if (nil_set.test(r.sub(a, e)) && r.mul(e, a) == r.mul(a, e)) return true;
  return false;
}

}  // namespace

std::optional<elem> csnc_criterion_witness(const FiniteRing& r) {
  const Bitset& unit_set = units(r);
  const Bitset& nil_set = nilpotents(r);
  for (elem a = 0; a < r.order(); ++a) {
    if (nil_set.test(r.sub(a, r.mul(a, a)))) continue;
    if (element_is_clean(r, a, unit_set)) return a;
  }
  return std::nullopt;
}

bool is_csnc_criterion(const FiniteRing& r) {
  return !csnc_criterion_witness(r).has_value();
}

bool is_csnc_uu_criterion(const FiniteRing& r) {
  const Bitset& unit_set = units(r);
  const Bitset& nil_set = nilpotents(r);

  for (elem u : unit_list(r))
    if (!nil_set.test(r.sub(u, r.one()))) return false;
  for (elem q : nilpotent_list(r))
    if (!unit_set.test(r.add(r.one(), q))) return false;

  for (elem a = 0; a < r.order(); ++a)
    if (element_is_clean(r, a, unit_set) &&
        !element_is_strongly_clean(r, a, unit_set))
      return false;
  return true;
}

namespace {

uint32_t power_k_bound(uint32_t order) {
  uint32_t k = 0;
  for (uint64_t s = 1; s < order; s <<= 1) ++k;
  return k;  // ceil(log2(order))
}

}  // namespace

bool is_csnc_power_criterion(const FiniteRing& r) {
  const Bitset& nil_set = nilpotents(r);
  if (!nil_set.test(r.add(r.one(), r.one()))) return false;
  const Bitset& unit_set = units(r);
  const uint32_t kmax = power_k_bound(r.order());

  for (elem a = 0; a < r.order(); ++a) {
    if (!element_is_clean(r, a, unit_set)) continue;
    bool found = false;
    elem b = a;  // a^(2^k)
    for (uint32_t k = 0; k <= kmax && !found; ++k) {
      const elem b2 = r.mul(b, b);
      found = nil_set.test(r.sub(b, b2));
      b = b2;
    }
    if (!found) return false;
  }
  return true;
}

bool is_csnc_power_snc_criterion(const FiniteRing& r) {
  const Bitset& nil_set = nilpotents(r);
  if (!nil_set.test(r.add(r.one(), r.one()))) return false;
  const Bitset& unit_set = units(r);
  const uint32_t kmax = power_k_bound(r.order());

  for (elem a = 0; a < r.order(); ++a) {
    if (!element_is_clean(r, a, unit_set)) continue;
    bool found = false;
    elem b = a;
    for (uint32_t k = 0; k <= kmax && !found; ++k) {
      found = element_is_strongly_nil_clean(r, b, nil_set);
      b = r.mul(b, b);
    }
    if (!found) return false;
  }
  return true;
}

bool is_ncuc_criterion(const FiniteRing& r) {
  return idempotents(r).is_subset_of(center(r));
}

bool is_csnc_check(const FiniteRing& r) { return is_csnc_criterion(r); }

bool is_ncsuc_check(const FiniteRing& r) {
  const auto& rows = class_counts(r);
  for (elem a = 0; a < r.order(); ++a)
    if (rows[a].is_nil_clean() && rows[a].commuting_clean != 1) return false;
  return true;
}

}  // namespace ringlab
