#include "ringlab/group.hpp"

namespace ringlab {

namespace {

class CyclicOps final : public GroupOps {
 public:
  explicit CyclicOps(uint32_t n) : n_(n) {}
  uint32_t order() const override { return n_; }
  elem op(elem a, elem b) const override {
    uint64_t s = uint64_t(a) + b;
    return elem(s >= n_ ? s - n_ : s);
  }
  elem identity() const override { return 0; }
  std::string label(elem a) const override {
    if (a == 0) return "1";
    if (a == 1) return "g";
    return "g^" + std::to_string(a);
  }

 private:
  uint32_t n_;
};

class ProductGroupOps final : public GroupOps {
 public:
  explicit ProductGroupOps(std::vector<FiniteGroup> factors)
      : factors_(std::move(factors)) {
    order_ = 1;
    for (const auto& g : factors_) order_ *= g.order();
  }

  uint32_t order() const override { return uint32_t(order_); }

  elem op(elem a, elem b) const override {
    // Mixed-radix, most significant factor first.
    elem out = 0;
    uint64_t ra = a, rb = b;
    uint64_t place = order_;
    for (const auto& g : factors_) {
      place /= g.order();
      const elem ca = elem(ra / place), cb = elem(rb / place);
      ra %= place;
      rb %= place;
      out = elem(out * g.order() + g.op(ca, cb));
    }
    return out;
  }

  elem identity() const override {
    elem out = 0;
    for (const auto& g : factors_) out = elem(out * g.order() + g.identity());
    return out;
  }

  std::string label(elem a) const override {
    std::string out = "(";
    uint64_t ra = a;
    uint64_t place = order_;
    for (size_t i = 0; i < factors_.size(); ++i) {
      place /= factors_[i].order();
      if (i) out += ",";
      out += factors_[i].label(elem(ra / place));
      ra %= place;
    }
    return out + ")";
  }

 private:
  std::vector<FiniteGroup> factors_;
  uint64_t order_;
};

class TableGroupOps final : public GroupOps {
 public:
  TableGroupOps(std::vector<std::vector<elem>> table, elem identity)
      : table_(std::move(table)), identity_(identity) {}
  uint32_t order() const override { return uint32_t(table_.size()); }
  elem op(elem a, elem b) const override { return table_[a][b]; }
  elem identity() const override { return identity_; }

 private:
  std::vector<std::vector<elem>> table_;
  elem identity_;
};

}  // namespace

FiniteGroup cyclic_group(uint32_t n) {
  if (n < 1) throw Error("cyclic group order must be >= 1");
  return FiniteGroup(std::make_shared<CyclicOps>(n), "C" + std::to_string(n));
}

FiniteGroup group_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw Error("group product needs at least one factor");
  std::string source;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) source += "x";
    source += factors[i].source();
  }
  return FiniteGroup(std::make_shared<ProductGroupOps>(factors), std::move(source));
}

FiniteGroup load_group_table(std::istream& in, std::string source) {
  std::string word;
  if (!(in >> word) || word != "order")
    throw OutOfRangeEntry("group table file must start with 'order n'");
  uint64_t n = 0;
  if (!(in >> n) || n < 1) throw OutOfRangeEntry("bad order in group table file");

  std::vector<std::vector<elem>> table(n, std::vector<elem>(n));
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j) {
      uint64_t v;
      if (!(in >> v)) throw OutOfRangeEntry("truncated group table");
      if (v >= n)
        throw OutOfRangeEntry("group table entry out of range at row " +
                              std::to_string(i));
      table[i][j] = elem(v);
    }

  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw AxiomViolation("group operation associates", {a, b, c});

  elem identity = kNoElem;
  for (uint32_t e = 0; e < n && identity == kNoElem; ++e) {
    bool ok = true;
    for (uint32_t x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = elem(e);
  }
  if (identity == kNoElem) throw AxiomViolation("group identity exists", {0, 0, 0});

  for (uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (uint32_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = table[a][b] == identity && table[b][a] == identity;
    if (!has_inverse) throw AxiomViolation("group inverse exists", {a, 0, 0});
  }

  return FiniteGroup(std::make_shared<TableGroupOps>(std::move(table), identity),
                     std::move(source));
}

}  // namespace ringlab
