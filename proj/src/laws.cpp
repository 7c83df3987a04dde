#include "ringlab/laws.hpp"

#include <functional>

#include "ringlab/assets.hpp"
#include "ringlab/builders.hpp"
#include "ringlab/derived.hpp"
#include "ringlab/kernels.hpp"

namespace ringlab {

namespace {

struct Ctx {
  const FiniteRing& r;
  const RingProfile& profile;
  const LawOptions& opt;
};

LawResult make_result(const char* id, const char* statement) {
  LawResult lr;
  lr.id = id;
  lr.statement = statement;
  return lr;
}

void fail(LawResult& lr, std::string detail) {
  lr.pass = false;
  lr.detail = std::move(detail);
}

void not_applicable(LawResult& lr, std::string why) {
  lr.applicable = false;
  lr.detail = std::move(why);
}

bool fits(const Ctx& c, uint64_t order) { return order <= c.opt.max_build_order; }

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t out = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (b != 0 && out > (uint64_t(1) << 62) / b) return uint64_t(1) << 62;
    out *= b;
  }
  return out;
}

bool is_field(const FiniteRing& r) {
  return r.order() >= 2 && center(r).count() == r.order() &&
         unit_list(r).size() == r.order() - 1;
}

const std::vector<FiniteGroup>& law_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> g;
    g.push_back(cyclic_group(1));
    g.push_back(cyclic_group(2));
    g.push_back(cyclic_group(3));
    g.push_back(cyclic_group(4));
    g.push_back(group_product({cyclic_group(2), cyclic_group(2)}));
    g.push_back(assets::s3());
    return g;
  }();
  return groups;
}

LawResult law1(Ctx& c) {
  auto lr = make_result("L1", "the four CSNC deciders agree");
  const bool a = c.profile.csnc;
  const bool b = is_csnc_criterion(c.r);
  const bool d = is_csnc_uu_criterion(c.r);
  const bool e = is_csnc_power_criterion(c.r);
  const bool f = is_csnc_power_snc_criterion(c.r);
  if (a != b || a != d || a != e || a != f)
    fail(lr, c.r.source() + ": definitional=" + std::to_string(a) +
                 " almost-idempotent=" + std::to_string(b) + " uu=" +
                 std::to_string(d) + " power=" + std::to_string(e) +
                 " power-snc=" + std::to_string(f));
  return lr;
}

LawResult law2(Ctx& c) {
  auto lr = make_result("L2", "NCUC, the centrality criterion, and NCUNC agree");
  const bool a = c.profile.ncuc;
  const bool b = is_ncuc_criterion(c.r);
  const bool d = c.profile.ncunc;
  if (a != b || a != d)
    fail(lr, c.r.source() + ": definitional=" + std::to_string(a) +
                 " central-idempotents=" + std::to_string(b) + " ncunc=" +
                 std::to_string(d));
  return lr;
}

LawResult law3(Ctx& c) {
  auto lr = make_result("L3", "CSNC forces 2 nilpotent and J(R) inside Nil(R)");
  if (!c.profile.csnc) {
    not_applicable(lr, "ring is not CSNC");
    return lr;
  }
  const elem two = c.r.add(c.r.one(), c.r.one());
  if (!nilpotents(c.r).test(two)) {
    fail(lr, c.r.source() + ": 2 = " + c.r.label(two) + " is not nilpotent");
    return lr;
  }
  if (!jacobson_radical(c.r).is_subset_of(nilpotents(c.r))) {
    for (elem x : jacobson_list(c.r))
      if (!nilpotents(c.r).test(x)) {
        fail(lr, c.r.source() + ": radical element " + c.r.label(x) +
                     " (id " + std::to_string(x) + ") is not nilpotent");
        break;
      }
  }
  return lr;
}

LawResult law4(Ctx& c) {
  auto lr = make_result(
      "L4", "CSNC coincides with strongly nil-clean for finite rings");
  if (c.profile.csnc != c.profile.strongly_nil_clean_ring)
    fail(lr, c.r.source() + ": CSNC=" + std::to_string(c.profile.csnc) +
                 " strongly-nil-clean-ring=" +
                 std::to_string(c.profile.strongly_nil_clean_ring));
  return lr;
}

LawResult law5(Ctx& c) {
  auto lr = make_result("L5", "corner rings of a CSNC ring are CSNC");
  if (!c.profile.csnc) {
    not_applicable(lr, "ring is not CSNC");
    return lr;
  }
  for (elem e : idempotent_list(c.r)) {
    const FiniteRing corner = corner_ring(c.r, e);
    if (!is_csnc_check(corner)) {
      fail(lr, corner.source() + " is not CSNC (corner at idempotent id " +
                   std::to_string(e) + ")");
      return lr;
    }
  }
  return lr;
}

LawResult law6(Ctx& c) {
  auto lr = make_result("L6", "a finite direct product is CSNC iff every factor is");
  const BuildLimits limits{c.opt.max_build_order};
  for (uint64_t n : {uint64_t(2), uint64_t(3)}) {
    if (!fits(c, c.r.order() * n)) continue;
    const FiniteRing partner = make_zn(n, limits);
    const FiniteRing prod = direct_product({c.r, partner}, limits);
    const bool expected = c.profile.csnc && is_csnc_check(partner);
    if (is_csnc_check(prod) != expected) {
      fail(lr, prod.source() + ": CSNC=" + std::to_string(!expected) +
                   " but factors give " + std::to_string(expected));
      return lr;
    }
  }
  return lr;
}

LawResult law7(Ctx& c) {
  auto lr = make_result("L7", "T_n(K) is CSNC iff K is CSNC (n = 1, 2, 3)");
  const BuildLimits limits{c.opt.max_build_order};
  bool any = false;
  for (uint32_t n : {1u, 2u, 3u}) {
    if (!fits(c, ipow(c.r.order(), n * (n + 1) / 2))) continue;
    any = true;
    const FiniteRing t = triangular_ring(c.r, n, limits);
    if (is_csnc_check(t) != c.profile.csnc) {
      fail(lr, t.source() + ": CSNC=" + std::to_string(!c.profile.csnc) +
                   " but base gives " + std::to_string(c.profile.csnc));
      return lr;
    }
  }
  if (!any) not_applicable(lr, "all T_n exceed the build cap");
  return lr;
}

LawResult law8(Ctx& c) {
  auto lr = make_result("L8", "K_s(R) is CSNC iff R is CSNC, for central nilpotent s");
  if (!fits(c, ipow(c.r.order(), 4))) {
    not_applicable(lr, "K_s exceeds the build cap");
    return lr;
  }
  const BuildLimits limits{c.opt.max_build_order};
  const Bitset& z = center(c.r);
  for (elem s : nilpotent_list(c.r)) {
    if (!z.test(s)) continue;
    const FiniteRing ks = ks_ring(c.r, s, limits);
    if (is_csnc_check(ks) != c.profile.csnc) {
      fail(lr, ks.source() + ": CSNC=" + std::to_string(!c.profile.csnc) +
                   " but base gives " + std::to_string(c.profile.csnc));
      return lr;
    }
  }
  return lr;
}

LawResult law9(Ctx& c) {
  auto lr = make_result("L9", "R[G] is CSNC iff R is CSNC and G is a 2-group");
  const BuildLimits limits{c.opt.max_build_order};
  bool any = false;
  for (const FiniteGroup& g : law_groups()) {
    if (!fits(c, ipow(c.r.order(), g.order()))) continue;
    any = true;
    const FiniteRing rg = group_ring(c.r, g, limits);
    // The zero ring absorbs everything: 0[G] = 0 is CSNC for any G.
    const bool expected =
        c.r.order() == 1 || (c.profile.csnc && is_2group(g));
    if (is_csnc_check(rg) != expected) {
      fail(lr, rg.source() + ": CSNC=" + std::to_string(!expected) +
                   " but base/group predict " + std::to_string(expected));
      return lr;
    }
  }
  if (!any) not_applicable(lr, "all group rings exceed the build cap");
  return lr;
}

LawResult law10(Ctx& c) {
  auto lr = make_result("L10", "R is CSNC iff R/I is CSNC, for nil ideals I");
  const Bitset& nil_set = nilpotents(c.r);

  std::vector<Bitset> ideals;
  for (elem q : nilpotent_list(c.r)) {
    if (q == c.r.zero()) continue;
    if (ideals.size() >= 7) break;
    ideals.push_back(ideal_closure(c.r, {q}));
  }
  {
    Bitset j(c.r.order());
    for (elem x : jacobson_list(c.r)) j.set(x);
    ideals.push_back(std::move(j));
  }

  for (const Bitset& ideal : ideals) {
    bool nil_ideal = true;
    for (elem x : ideal.to_list())
      if (!nil_set.test(x)) {
        nil_ideal = false;  // closure escaped Nil(R); hypothesis not met
        break;
      }
    if (!nil_ideal) continue;
    const FiniteRing q = quotient_ring(c.r, ideal);
    if (is_csnc_check(q) != c.profile.csnc) {
      fail(lr, c.r.source() + " mod a nil ideal of size " +
                   std::to_string(ideal.count()) + ": CSNC=" +
                   std::to_string(!c.profile.csnc) + " but the ring gives " +
                   std::to_string(c.profile.csnc));
      return lr;
    }
  }
  return lr;
}

LawResult law11(const LawOptions& opt) {
  auto lr = make_result("L11", "Z_n is CSNC iff n is a power of 2 (n <= 64)");
  const BuildLimits limits{opt.max_build_order};
  for (uint64_t n = 1; n <= 64; ++n) {
    const bool expected = (n & (n - 1)) == 0;
    const FiniteRing zn = make_zn(n, limits);
    if (is_csnc_check(zn) != expected) {
      fail(lr, zn.source() + ": CSNC=" + std::to_string(!expected) +
                   " expected " + std::to_string(expected));
      return lr;
    }
  }
  return lr;
}

LawResult law12(Ctx& c) {
  auto lr = make_result(
      "L12", "a finite local ring is CSNC iff its residue field has order 2");
  if (!c.profile.local) {
    not_applicable(lr, "ring is not local");
    return lr;
  }
  const uint32_t residue = c.r.order() / uint32_t(jacobson_list(c.r).size());
  if (c.profile.csnc != (residue == 2))
    fail(lr, c.r.source() + ": CSNC=" + std::to_string(c.profile.csnc) +
                 " but |R/J| = " + std::to_string(residue));
  return lr;
}

LawResult law13(Ctx& c) {
  auto lr = make_result("L13", "reduced or local rings are NCSUC");
  if (!c.profile.reduced && !c.profile.local) {
    not_applicable(lr, "ring is neither reduced nor local");
    return lr;
  }
  if (!c.profile.ncsuc) {
    const auto* w = c.profile.witness("NCSUC");
    fail(lr, c.r.source() + " is not NCSUC" +
                 (w ? "; witness element id " + std::to_string(w->element) : ""));
  }
  return lr;
}

LawResult law14(Ctx& c) {
  auto lr = make_result("L14", "for a finite field K: T_2(K) is NCSUC, M_2(K) is not");
  if (!is_field(c.r)) {
    not_applicable(lr, "ring is not a field");
    return lr;
  }
  const BuildLimits limits{c.opt.max_build_order};
  bool any = false;
  if (fits(c, ipow(c.r.order(), 3))) {
    any = true;
    const FiniteRing t = triangular_ring(c.r, 2, limits);
    if (!is_ncsuc_check(t)) {
      fail(lr, t.source() + " is not NCSUC");
      return lr;
    }
  }
  if (fits(c, ipow(c.r.order(), 4))) {
    any = true;
    const FiniteRing m = matrix_ring(c.r, 2, limits);
    if (is_ncsuc_check(m)) {
      fail(lr, m.source() + " is NCSUC but must not be");
      return lr;
    }
  }
  if (!any) not_applicable(lr, "T_2 and M_2 exceed the build cap");
  return lr;
}

LawResult law15(Ctx& c) {
  auto lr = make_result(
      "L15", "CUNC => NCUC, CSNC => NCSUC, NCSUC => NCC, NCUC => abelian");
  const auto& p = c.profile;
  if (p.cunc && !p.ncuc) fail(lr, c.r.source() + ": CUNC without NCUC");
  else if (p.csnc && !p.ncsuc) fail(lr, c.r.source() + ": CSNC without NCSUC");
  else if (p.ncsuc && !p.ncc) fail(lr, c.r.source() + ": NCSUC without NCC");
  else if (p.ncuc && !p.abelian) fail(lr, c.r.source() + ": NCUC without abelian");
  return lr;
}

LawResult law16(Ctx& c) {
  auto lr = make_result("L16", "CUNC coincides with abelian CSNC");
  const auto& p = c.profile;
  if (p.cunc != (p.abelian && p.csnc))
    fail(lr, c.r.source() + ": CUNC=" + std::to_string(p.cunc) + " abelian=" +
                 std::to_string(p.abelian) + " CSNC=" + std::to_string(p.csnc));
  return lr;
}

LawResult law17(Ctx& c) {
  auto lr = make_result(
      "L17",
      "the augmentation ideal of R[G] is a nilpotent set for CSNC R, 2-group G");
  if (!c.profile.csnc) {
    not_applicable(lr, "ring is not CSNC");
    return lr;
  }
  const BuildLimits limits{c.opt.max_build_order};
  bool any = false;
  for (const FiniteGroup& g : law_groups()) {
    if (!is_2group(g) || g.order() == 1) continue;
    if (!fits(c, ipow(c.r.order(), g.order()))) continue;
    any = true;
    const FiniteRing rg = group_ring(c.r, g, limits);
    const std::vector<elem> delta = augmentation_ideal(rg);
    if (!kernels::set_is_nilpotent(rg.view(), delta)) {
      fail(lr, rg.source() + ": augmentation ideal of size " +
                   std::to_string(delta.size()) + " is not nilpotent");
      return lr;
    }
  }
  if (!any) not_applicable(lr, "all group rings exceed the build cap");
  return lr;
}

}  // namespace

LawReport check_laws(const FiniteRing& r, const LawOptions& options) {
  const RingProfile profile = class_profile(r);
  Ctx c{r, profile, options};

  LawReport report;
  report.ring = r.source();
  report.results.push_back(law1(c));
  report.results.push_back(law2(c));
  report.results.push_back(law3(c));
  report.results.push_back(law4(c));
  report.results.push_back(law5(c));
  report.results.push_back(law6(c));
  report.results.push_back(law7(c));
  report.results.push_back(law8(c));
  report.results.push_back(law9(c));
  report.results.push_back(law10(c));
  report.results.push_back(law12(c));
  report.results.push_back(law13(c));
  report.results.push_back(law14(c));
  report.results.push_back(law15(c));
  report.results.push_back(law16(c));
  report.results.push_back(law17(c));
  return report;
}

LawReport check_global_laws(const LawOptions& options) {
  LawReport report;
  report.ring = "(global)";

  const BuildLimits limits{options.max_build_order};
  auto l6 = make_result(
      "L6", "a finite direct product is CSNC iff every factor is");
  std::vector<FiniteRing> factors;
  factors.push_back(make_zn(2, limits));
  factors.push_back(make_zn(3, limits));
  factors.push_back(make_zn(4, limits));
  factors.push_back(triangular_ring(make_zn(2, limits), 2, limits));
  for (const FiniteRing& a : factors)
    for (const FiniteRing& b : factors) {
      const FiniteRing prod = direct_product({a, b}, limits);
      const bool expected = is_csnc_check(a) && is_csnc_check(b);
      if (is_csnc_check(prod) != expected) {
        fail(l6, prod.source() + ": CSNC=" + std::to_string(!expected) +
                     " but factors give " + std::to_string(expected));
        break;
      }
    }
  report.results.push_back(std::move(l6));
  report.results.push_back(law11(options));
  return report;
}

}  // namespace ringlab
