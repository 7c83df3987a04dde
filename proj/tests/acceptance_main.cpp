// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria with a stated runtime bound enforce it.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "expr_gen.hpp"
#include "ringlab/assets.hpp"
#include "ringlab/builders.hpp"
#include "ringlab/classes.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/derived.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/laws.hpp"
#include "ringlab/taxonomy.hpp"

using namespace ringlab;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit_s;
  std::function<bool(std::string&)> body;
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

// --- criterion 1: reference-grid reproduction ------------------------------

bool run_table1(std::string& detail) {
  std::ostringstream out, err;
  if (cli::cmd_table1({}, out, err) != 0) {
    detail = "in-process table1 mismatch: " + err.str();
    return false;
  }

  // The shipped binary must agree (exit 0).
  const std::string cmd = std::string(RINGLAB_BIN) + " table1 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    detail = "ringlab table1 exited nonzero";
    return false;
  }
  detail = "all 20 cells match";
  return true;
}

// --- criterion 2: Z_n classification ---------------------------------------

bool run_zn_law(std::string& detail) {
  for (uint64_t n : {2, 4, 8, 16, 32, 64})
    if (!class_profile(make_zn(n)).csnc) {
      detail = "Z" + std::to_string(n) + " must be CSNC";
      return false;
    }
  for (uint64_t n : {3, 5, 6, 10, 12, 24, 48, 60})
    if (class_profile(make_zn(n)).csnc) {
      detail = "Z" + std::to_string(n) + " must not be CSNC";
      return false;
    }
  detail = "14 moduli classified";
  return true;
}

// --- criterion 3: matrix rings are never CSNC ------------------------------

bool run_matrix_impossibility(std::string& detail) {
  const std::vector<FiniteRing> rings = {matrix_ring(make_zn(2), 2),
                                         matrix_ring(make_zn(4), 2),
                                         matrix_ring(assets::f4(), 2)};
  for (const FiniteRing& m : rings) {
    if (class_profile(m).csnc) {
      detail = m.source() + " classified CSNC";
      return false;
    }
    const std::optional<elem> w = csnc_criterion_witness(m);
    if (!w) {
      detail = m.source() + " has no stored witness";
      return false;
    }
    const elem diff = m.sub(*w, m.mul(*w, *w));
    if (clean_witnesses(m, *w).empty() || nilpotents(m).test(diff)) {
      detail = m.source() + ": witness " + m.label(*w) + " does not verify";
      return false;
    }
  }
  detail = "witnesses verified for M2(Z2), M2(Z4), M2(F4)";
  return true;
}

// --- criterion 4: cross-decider equivalence --------------------------------

bool run_cross_deciders(std::string& detail) {
  if (corpus().size() < 25) {
    detail = "corpus too small";
    return false;
  }
  uint32_t min_order = UINT32_MAX, max_order = 0;
  for (const auto& entry : corpus()) {
    min_order = std::min(min_order, entry.ring.order());
    max_order = std::max(max_order, entry.ring.order());
  }
  if (min_order != 1 || max_order != 4096) {
    detail = "corpus must span orders 1..4096";
    return false;
  }
  for (const char* prefix : {"Z", "F4", "M2(", "T2(", "T3(", "corner(", "quot(",
                             "GR(", "Ks(", "FT("}) {
    bool found = false;
    for (const auto& entry : corpus())
      if (entry.name.rfind(prefix, 0) == 0) found = true;
    if (!found) {
      detail = std::string("constructor missing from corpus: ") + prefix;
      return false;
    }
  }
  int disagreements = 0;
  for (const auto& entry : corpus()) {
    const FiniteRing& r = entry.ring;
    const bool csnc[4] = {class_profile(r).csnc, is_csnc_criterion(r),
                          is_csnc_uu_criterion(r), is_csnc_power_criterion(r)};
    for (int i = 1; i < 4; ++i)
      if (csnc[i] != csnc[0]) ++disagreements;
    const RingProfile p = class_profile(r);
    const bool ncuc[3] = {p.ncuc, is_ncuc_criterion(r), p.ncunc};
    for (int i = 1; i < 3; ++i)
      if (ncuc[i] != ncuc[0]) ++disagreements;
    if (disagreements) {
      detail = entry.name + " deciders disagree";
      return false;
    }
  }
  detail = std::to_string(corpus().size()) +
           " rings, 4 CSNC + 3 NCUC deciders, zero disagreements";
  return true;
}

// --- criterion 5: theorem-law suite ----------------------------------------

bool run_law_suite(std::string& detail) {
  std::vector<std::string> failures;
  for (const auto& entry : corpus()) {
    const LawReport report = check_laws(entry.ring);
    for (const auto& lr : report.results)
      if (!lr.pass)
        failures.push_back(entry.name + " " + lr.id + ": " + lr.detail);
  }
  const LawReport global = check_global_laws();
  for (const auto& lr : global.results)
    if (!lr.pass) failures.push_back("(global) " + lr.id + ": " + lr.detail);

  if (!failures.empty()) {
    detail = std::to_string(failures.size()) + " failures; first: " + failures[0];
    for (const auto& f : failures) std::fprintf(stderr, "    law failure: %s\n", f.c_str());
    return false;
  }
  detail = "laws L3-L17 clean on " + std::to_string(corpus().size()) + " rings";
  return true;
}

// --- criterion 6: group-ring criterion --------------------------------------

bool run_group_ring_criterion(std::string& detail) {
  std::vector<FiniteGroup> groups = {cyclic_group(1), cyclic_group(2),
                                     cyclic_group(3), cyclic_group(4),
                                     group_product({cyclic_group(2), cyclic_group(2)}),
                                     assets::s3()};
  int checked = 0;
  for (uint64_t n : {2, 3, 4}) {
    const FiniteRing r = make_zn(n);
    const bool base_csnc = class_profile(r).csnc;
    for (const FiniteGroup& g : groups) {
      uint64_t order = 1;
      bool fits = true;
      for (uint32_t i = 0; i < g.order(); ++i) {
        order *= r.order();
        if (order > 65536) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      const FiniteRing rg = group_ring(r, g);
      const bool expected = base_csnc && is_2group(g);
      if (class_profile(rg).csnc != expected) {
        detail = rg.source() + ": CSNC != (CSNC(R) and G 2-group)";
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " group rings match the predicted verdict";
  return true;
}

// --- criterion 7: idempotent-lift fuzz --------------------------------------

bool run_lift_fuzz(std::string& detail) {
  uint64_t lifted = 0;
  for (const auto& entry : corpus()) {
    const FiniteRing& r = entry.ring;
    const Bitset& nil = nilpotents(r);
    for (elem a = 0; a < r.order(); ++a) {
      if (!nil.test(r.sub(a, r.mul(a, a)))) continue;
      elem e;
      try {
        e = lift_idempotent(r, a);
      } catch (const FormulaDivergence&) {
        detail = entry.name + ": divergence at element " + std::to_string(a);
        return false;
      }
      if (r.mul(e, e) != e || !nil.test(r.sub(a, e)) ||
          r.mul(e, a) != r.mul(a, e)) {
        detail = entry.name + ": bad lift at element " + std::to_string(a);
        return false;
      }
      ++lifted;
    }
  }
  detail = std::to_string(lifted) + " lifts verified, zero divergences";
  return true;
}

// --- criterion 8: element-lemma exhaustion ----------------------------------

bool run_element_lemmas(std::string& detail) {
  uint64_t checked = 0;
  for (const auto& entry : corpus()) {
    const FiniteRing& r = entry.ring;
    const auto& rows = class_counts(r);
    const Bitset& z = center(r);
    for (elem e : idempotent_list(r)) {
      if (rows[e].commuting_clean != 1) {
        detail = entry.name + ": idempotent " + std::to_string(e) +
                 " is not uniquely strongly clean";
        return false;
      }
      if ((rows[e].clean == 1) != z.test(e)) {
        detail = entry.name + ": idempotent " + std::to_string(e) +
                 " breaks the central/uniquely-clean equivalence";
        return false;
      }
      ++checked;
    }
    for (elem q : nilpotent_list(r)) {
      if (rows[q].commuting_clean != 1) {
        detail = entry.name + ": nilpotent " + std::to_string(q) +
                 " is not uniquely strongly clean";
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " idempotents/nilpotents exhausted";
  return true;
}

// --- criterion 9: parser round-trip ------------------------------------------

bool run_parser_roundtrip(std::string& detail) {
  std::mt19937 rng(424242);
  for (int i = 0; i < 100; ++i) {
    const RingExpr e = testgen::random_ring_expr(rng, 4);
    const std::string printed = to_string(e);
    RingExpr back;
    try {
      back = parse_ring_expr(printed);
    } catch (const ParseError& ex) {
      detail = "failed to reparse: " + printed;
      return false;
    }
    if (!(back == e)) {
      detail = "round trip broke on: " + printed;
      return false;
    }
  }

  const std::vector<std::pair<std::string, size_t>> malformed = {
      {"M0(Z2)", 1}, {"", 0},          {"Zx", 1},    {"Q5", 0},
      {"Z2)", 2},    {"M2(Z2", 5},     {"Z2xx", 3},  {"GR(Z2 C2)", 6},
      {"corner(Z4)", 9}, {"table()", 6}};
  for (const auto& [text, offset] : malformed) {
    try {
      parse_ring_expr(text);
      detail = "accepted malformed input: " + text;
      return false;
    } catch (const ParseError& ex) {
      if (ex.offset != offset) {
        detail = "wrong offset for '" + text + "': got " +
                 std::to_string(ex.offset) + ", want " + std::to_string(offset);
        return false;
      }
    }
  }
  detail = "100 round trips, 10 malformed inputs with exact offsets";
  return true;
}

}  // namespace

int main() {
  kernels::set_max_threads(
      int(std::max(1u, std::thread::hardware_concurrency())));

  const std::vector<Criterion> criteria = {
      {1, "reference-grid reproduction", 5.0, run_table1},
      {2, "Z_n classification by 2-power modulus", 2.0, run_zn_law},
      {3, "matrix rings are never CSNC", 30.0, run_matrix_impossibility},
      {4, "cross-decider equivalence on the corpus", 120.0, run_cross_deciders},
      {5, "theorem-law suite (L3-L17)", 180.0, run_law_suite},
      {6, "group-ring criterion", std::nullopt, run_group_ring_criterion},
      {7, "idempotent-lift property fuzz", std::nullopt, run_lift_fuzz},
      {8, "element-lemma exhaustion", std::nullopt, run_element_lemmas},
      {9, "parser round-trip", std::nullopt, run_parser_roundtrip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && c.limit_s && secs >= *c.limit_s) {
      ok = false;
      detail += " [exceeded time limit]";
    }
    std::printf("criterion %d: %-4s %6.2fs%s  %s — %s\n", c.id,
                ok ? "PASS" : "FAIL", secs,
                c.limit_s ? ("/" + std::to_string(int(*c.limit_s)) + "s").c_str()
                          : "    ",
                c.name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
