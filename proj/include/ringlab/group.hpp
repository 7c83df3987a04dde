#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

class GroupOps {
 public:
  virtual ~GroupOps() = default;
  virtual uint32_t order() const = 0;
  virtual elem op(elem a, elem b) const = 0;
  virtual elem identity() const = 0;
  virtual std::string label(elem a) const { return "x" + std::to_string(a); }
};

/// A finite group; immutable, cheap to copy.
class FiniteGroup {
 public:
  FiniteGroup(std::shared_ptr<const GroupOps> ops, std::string source)
      : ops_(std::move(ops)),
        order_(ops_->order()),
        identity_(ops_->identity()),
        source_(std::move(source)) {}

  uint32_t order() const { return order_; }
  elem identity() const { return identity_; }
  elem op(elem a, elem b) const { return ops_->op(a, b); }
  std::string label(elem a) const { return ops_->label(a); }
  const std::string& source() const { return source_; }

  elem inverse(elem a) const {
    for (elem b = 0; b < order_; ++b)
      if (op(a, b) == identity_) return b;
    throw InternalError("group element without inverse");
  }

  elem pow(elem a, uint64_t k) const {
    elem result = identity_;
    elem base = a;
    while (k > 0) {
      if (k & 1) result = op(result, base);
      base = op(base, base);
      k >>= 1;
    }
    return result;
  }

  bool is_abelian() const {
    for (elem a = 0; a < order_; ++a)
      for (elem b = a + 1; b < order_; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

 private:
  std::shared_ptr<const GroupOps> ops_;
  uint32_t order_;
  elem identity_;
  std::string source_;
};

/// Order is a power of two; equivalent to every element having 2-power order
/// at finite scale.
inline bool is_2group(const FiniteGroup& g) {
  uint32_t n = g.order();
  return (n & (n - 1)) == 0;
}

FiniteGroup cyclic_group(uint32_t n);
FiniteGroup group_product(const std::vector<FiniteGroup>& factors);

/// Cayley table file: line 1 "order n", then n rows of the operation table.
/// Group axioms are verified by full scans.
FiniteGroup load_group_table(std::istream& in, std::string source = "gtable");

}  // namespace ringlab
