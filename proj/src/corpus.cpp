#include "ringlab/corpus.hpp"

#include "ringlab/assets.hpp"
#include "ringlab/expr.hpp"

namespace ringlab {

Bimodule z2_as_z2_z4_bimodule(const FiniteRing& z2, const FiniteRing& z4) {
  (void)z4;
  Bimodule m;
  m.order = 2;
  m.zero = 0;
  m.add = [](elem a, elem b) { return elem((a + b) & 1); };
  m.left = [](elem r, elem x) { return elem(r & x); };
  m.right = [](elem x, elem s) { return elem((x * s) & 1); };
  m.label = [](elem a) { return std::to_string(a); };
  (void)z2;
  return m;
}

std::vector<CorpusEntry> build_corpus(const BuildLimits& limits) {
  std::vector<CorpusEntry> corpus;
  auto add_expr = [&](const std::string& expr) {
    FiniteRing r = build(parse_ring_expr(expr), limits);
    corpus.push_back({expr, std::move(r)});
  };
  auto add = [&](FiniteRing r) {
    std::string name = r.source();
    corpus.push_back({std::move(name), std::move(r)});
  };

  for (const char* e : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z12", "Z16",
                        "Z27", "Z64", "Z4096"})
    add_expr(e);

  const FiniteRing f4 = assets::f4();
  add(f4);

  add_expr("Z2xZ2");
  add_expr("Z2xZ3");
  add_expr("Z2xZ8");
  add_expr("T2(Z2)xZ2");

  add_expr("M2(Z2)");
  add_expr("M2(Z4)");
  add(matrix_ring(f4, 2, limits));
  add_expr("M2(Z8)");

  add_expr("T2(Z2)");
  add_expr("T2(Z3)");
  add_expr("T2(Z4)");
  add_expr("T2(Z16)");
  add_expr("T3(Z2)");
  add_expr("T3(Z4)");

  add_expr("corner(M2(Z2),8)");   // e = E_11
  add_expr("corner(T2(Z2),1)");   // e = E_22
  add_expr("quot(Z8,4)");
  add_expr("quot(Z12,2)");

  add_expr("GR(Z2,C2)");
  add_expr("GR(Z2,C4)");
  add_expr("GR(Z2,C2xC2)");
  add_expr("GR(Z3,C3)");
  add_expr("GR(Z4,C4)");
  add(group_ring(build(parse_ring_expr("Z2"), limits), assets::s3(), limits));

  add_expr("Ks(Z2,0)");
  add_expr("Ks(Z2,1)");
  add_expr("Ks(Z4,2)");
  add_expr("Ks(Z8,2)");

  const FiniteRing z2 = build(parse_ring_expr("Z2"), limits);
  const FiniteRing z4 = build(parse_ring_expr("Z4"), limits);
  add(formal_triangular(z2, z2, ring_as_bimodule(z2), limits));
  add(formal_triangular(z2, z4, z2_as_z2_z4_bimodule(z2, z4), limits));

  return corpus;
}

}  // namespace ringlab
