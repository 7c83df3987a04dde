#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringlab/builders.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Group-constructor AST: Cn, products, or a Cayley table file.
struct GroupExpr {
  enum class Kind { cn, prod, table };
  Kind kind = Kind::cn;
  uint64_t n = 0;                  // cn
  std::vector<GroupExpr> factors;  // prod
  std::string path;                // table

  bool operator==(const GroupExpr&) const = default;
};

/// Ring-constructor AST matching the expression grammar:
///   expr := Z<int> | M<int>(expr) | T<int>(expr) | expr (x expr)+
///         | corner(expr,<int>) | quot(expr,<intlist>) | GR(expr,grp)
///         | Ks(expr,<int>) | table(<path>)
///   grp  := C<int> | grp x grp | gtable(<path>)
struct RingExpr {
  enum class Kind { zn, table, prod, mat, tri, corner, quot, group_ring, ks };
  Kind kind = Kind::zn;
  uint64_t n = 0;                  // zn modulus; mat/tri size; corner idem; ks s
  std::vector<RingExpr> children;
  std::vector<uint64_t> ids;       // quot generators
  std::string path;                // table
  std::vector<GroupExpr> group;    // group_ring (one entry)

  bool operator==(const RingExpr&) const = default;
};

/// Recursive-descent parse; whitespace-insensitive. Throws ParseError (or
/// UnknownConstructor) carrying the byte offset of the offending token.
RingExpr parse_ring_expr(std::string_view input);

/// Structure-preserving printer with minimal whitespace; the inverse of
/// parse_ring_expr on parseable trees.
std::string to_string(const RingExpr& e);
std::string to_string(const GroupExpr& g);

/// Canonical form: nested products flattened and factors sorted
/// lexicographically by their printed form. canonical_key is the stable
/// cache key used by the survey stream.
RingExpr canonicalize(const RingExpr& e);
std::string canonical_key(const RingExpr& e);

FiniteGroup make_group(const GroupExpr& g);
FiniteRing build(const RingExpr& e, const BuildLimits& limits = {});

}  // namespace ringlab
