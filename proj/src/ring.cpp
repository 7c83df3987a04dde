#include "ringlab/ring.hpp"

#include <sstream>

#include "ringlab/derived.hpp"

namespace ringlab {

namespace detail {

// DerivedCache is owned here so ring.hpp stays light; derived.cpp fills it.
RingCache::RingCache() = default;
RingCache::~RingCache() = default;

}  // namespace detail

FiniteRing::FiniteRing(std::shared_ptr<const RingOps> ops, std::string source)
    : ops_(std::move(ops)),
      cache_(std::make_shared<detail::RingCache>()),
      order_(ops_->order()),
      zero_(ops_->zero()),
      one_(ops_->one()),
      source_(std::move(source)) {
  if (order_ < 1) throw Error("ring order must be >= 1");
  if (order_ <= kAutoTableMaxOrder) ensure_tables();
}

FiniteRing share_structure(const FiniteRing& r, std::string source) {
  FiniteRing out = r;
  out.source_ = std::move(source);
  return out;
}

void FiniteRing::ensure_tables() const {
  if (order_ > kTableMaxOrder)
    throw Error("operation tables over order " + std::to_string(order_) +
                " exceed the table budget");
  auto& c = *cache_;
  std::call_once(c.tables_once, [&] {
    const uint32_t n = order_;
    c.add_tab.resize(size_t(n) * n);
    c.mul_tab.resize(size_t(n) * n);
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = 0; b < n; ++b) {
        c.add_tab[size_t(a) * n + b] = uint16_t(ops_->add(a, b));
        c.mul_tab[size_t(a) * n + b] = uint16_t(ops_->mul(a, b));
      }
    }
    c.tables_ready.store(true, std::memory_order_release);
  });
}

uint32_t FiniteRing::characteristic() const {
  auto& c = *cache_;
  std::call_once(c.char_once, [&] {
    uint32_t k = 1;
    elem x = one_;
    while (x != zero_) {
      x = add(x, one_);
      ++k;
    }
    c.characteristic = k;
  });
  return c.characteristic;
}

elem pow(const RingView& v, elem a, uint64_t k) {
  elem result = v.one;
  elem base = a;
  while (k > 0) {
    if (k & 1) result = v.mul(result, base);
    base = v.mul(base, base);
    k >>= 1;
  }
  return result;
}

elem pow(const FiniteRing& r, elem a, uint64_t k) {
  if (a >= r.order()) throw IndexOutOfRange(a, r.order());
  return pow(r.view(), a, k);
}

elem scalar_mul(const RingView& v, uint64_t k, elem a) {
  elem result = v.zero;
  elem base = a;
  while (k > 0) {
    if (k & 1) result = v.add(result, base);
    base = v.add(base, base);
    k >>= 1;
  }
  return result;
}

namespace {

class TableOps final : public RingOps {
 public:
  TableOps(std::vector<std::vector<elem>> add, std::vector<std::vector<elem>> mul,
           std::vector<elem> neg, elem zero, elem one)
      : add_(std::move(add)),
        mul_(std::move(mul)),
        neg_(std::move(neg)),
        zero_(zero),
        one_(one) {}

  uint32_t order() const override { return uint32_t(add_.size()); }
  elem add(elem a, elem b) const override { return add_[a][b]; }
  elem mul(elem a, elem b) const override { return mul_[a][b]; }
  elem neg(elem a) const override { return neg_[a]; }
  elem zero() const override { return zero_; }
  elem one() const override { return one_; }

 private:
  std::vector<std::vector<elem>> add_, mul_;
  std::vector<elem> neg_;
  elem zero_, one_;
};

}  // namespace

FiniteRing validate_tables(const TablePair& tables, std::string source) {
  const auto& add = tables.add;
  const auto& mul = tables.mul;
  const uint32_t n = uint32_t(add.size());
  if (n == 0) throw OutOfRangeEntry("empty addition table");
  if (mul.size() != n) throw OutOfRangeEntry("table sizes differ");
  for (uint32_t a = 0; a < n; ++a) {
    if (add[a].size() != n || mul[a].size() != n)
      throw OutOfRangeEntry("table row " + std::to_string(a) + " has wrong width");
    for (uint32_t b = 0; b < n; ++b) {
      if (add[a][b] >= n || mul[a][b] >= n)
        throw OutOfRangeEntry("entry out of range at row " + std::to_string(a) +
                              ", column " + std::to_string(b));
    }
  }

  // Additive identity first: everything else references it.
  elem zero = kNoElem;
  for (uint32_t z = 0; z < n && zero == kNoElem; ++z) {
    bool ok = true;
    for (uint32_t x = 0; x < n && ok; ++x)
      ok = add[z][x] == x && add[x][z] == x;
    if (ok) zero = z;
  }
  if (zero == kNoElem) throw AxiomViolation("additive identity exists", {0, 0, 0});

  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) throw AxiomViolation("addition commutes", {a, b, 0});

  std::vector<elem> neg(n, kNoElem);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b)
      if (add[a][b] == zero) {
        neg[a] = b;
        break;
      }
    if (neg[a] == kNoElem) throw AxiomViolation("additive inverse exists", {a, 0, 0});
  }

  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]])
          throw AxiomViolation("addition associates", {a, b, c});
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw AxiomViolation("multiplication associates", {a, b, c});
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          throw AxiomViolation("left distributivity", {a, b, c});
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
          throw AxiomViolation("right distributivity", {a, b, c});
      }

  elem one = kNoElem;
  for (uint32_t e = 0; e < n && one == kNoElem; ++e) {
    bool ok = true;
    for (uint32_t x = 0; x < n && ok; ++x)
      ok = mul[e][x] == x && mul[x][e] == x;
    if (ok) one = e;
  }
  if (one == kNoElem) throw NoIdentity();

  auto ops = std::make_shared<TableOps>(add, mul, std::move(neg), zero, one);
  return FiniteRing(std::move(ops), std::move(source));
}

TablePair read_table_file(std::istream& in) {
  std::string word;
  if (!(in >> word) || word != "order")
    throw OutOfRangeEntry("table file must start with 'order n'");
  uint64_t n = 0;
  if (!(in >> n) || n < 1) throw OutOfRangeEntry("bad order in table file");

  auto read_block = [&](const char* what) {
    std::vector<std::vector<elem>> t(n, std::vector<elem>(n));
    for (uint64_t i = 0; i < n; ++i)
      for (uint64_t j = 0; j < n; ++j) {
        uint64_t v;
        if (!(in >> v))
          throw OutOfRangeEntry(std::string("truncated ") + what + " table");
        if (v >= n)
          throw OutOfRangeEntry(std::string(what) + " entry out of range at row " +
                                std::to_string(i));
        t[i][j] = elem(v);
      }
    return t;
  };

  TablePair out;
  out.add = read_block("addition");
  out.mul = read_block("multiplication");
  return out;
}

FiniteRing load_ring_table(std::istream& in, std::string source) {
  return validate_tables(read_table_file(in), std::move(source));
}

}  // namespace ringlab
