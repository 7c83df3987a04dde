#pragma once

#include <string>
#include <vector>

#include "ringlab/builders.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct CorpusEntry {
  std::string name;
  FiniteRing ring;
};

/// The shipped test corpus: 40+ rings of order 1..4096 exercising every
/// constructor (residues, tables, products, matrix and triangular rings,
/// corners, quotients, group rings over cyclic/product/table groups, twisted
/// 2x2 rings, formal triangular rings).
std::vector<CorpusEntry> build_corpus(const BuildLimits& limits = {});

/// The (Z2, Z4)-bimodule on two elements: left action by Z2 multiplication,
/// right action through reduction mod 2. Used by the corpus and tests.
Bimodule z2_as_z2_z4_bimodule(const FiniteRing& z2, const FiniteRing& z4);

}  // namespace ringlab
