#include "ringlab/builders.hpp"

#include <algorithm>
#include <array>

#include "ringlab/derived.hpp"
#include "ringlab/kernels.hpp"

namespace ringlab {

namespace {

// Orders at or below this get the full O(n^3) axiom scan when a constructor
// asks for verification; larger rings get sampled triples. The full-depth
// sampled pass over the corpus lives in the test suite.
constexpr uint32_t kFullAxiomScanMaxOrder = 512;
constexpr uint64_t kSampledTriples = 100'000;

void check_cap(uint64_t order, const BuildLimits& limits) {
  if (order > limits.order_cap) throw OrderCapExceeded(order, limits.order_cap);
}

uint64_t checked_pow(uint64_t base, uint32_t exp, const BuildLimits& limits) {
  uint64_t out = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && out > limits.order_cap / base + 1)
      throw OrderCapExceeded(limits.order_cap + 1, limits.order_cap);
    out *= base;
    check_cap(out, limits);
  }
  return out;
}

void verify_constructed(const FiniteRing& r) {
  kernels::AxiomReport rep =
      r.order() <= kFullAxiomScanMaxOrder
          ? kernels::check_axioms_full(r.view())
          : kernels::check_axioms_sampled(r.view(), kSampledTriples,
                                          0x5eedull ^ r.order());
  if (!rep.ok) throw AxiomViolation(rep.axiom, rep.at);
}

class ZnOps final : public RingOps {
 public:
  explicit ZnOps(uint32_t n) : n_(n) {}
  uint32_t order() const override { return n_; }
  elem add(elem a, elem b) const override {
    uint64_t s = uint64_t(a) + b;
    return elem(s >= n_ ? s - n_ : s);
  }
  elem mul(elem a, elem b) const override {
    return elem((uint64_t(a) * b) % n_);
  }
  elem neg(elem a) const override { return a == 0 ? 0 : n_ - a; }
  elem zero() const override { return 0; }
  elem one() const override { return n_ == 1 ? 0 : 1; }

 private:
  uint32_t n_;
};

class ProductOps final : public RingOps {
 public:
  explicit ProductOps(std::vector<FiniteRing> factors)
      : factors_(std::move(factors)) {
    order_ = 1;
    for (const auto& f : factors_) order_ *= f.order();
    places_.resize(factors_.size());
    uint64_t place = order_;
    for (size_t i = 0; i < factors_.size(); ++i) {
      place /= factors_[i].order();
      places_[i] = place;
    }
  }

  uint32_t order() const override { return uint32_t(order_); }

  elem add(elem a, elem b) const override { return zip(a, b, /*mul=*/false); }
  elem mul(elem a, elem b) const override { return zip(a, b, /*mul=*/true); }

  elem neg(elem a) const override {
    uint64_t out = 0, ra = a;
    for (size_t i = 0; i < factors_.size(); ++i) {
      const elem ca = elem(ra / places_[i]);
      ra %= places_[i];
      out = out * factors_[i].order() + factors_[i].neg(ca);
    }
    return elem(out);
  }

  elem zero() const override {
    uint64_t out = 0;
    for (const auto& f : factors_) out = out * f.order() + f.zero();
    return elem(out);
  }
  elem one() const override {
    uint64_t out = 0;
    for (const auto& f : factors_) out = out * f.order() + f.one();
    return elem(out);
  }

  std::string label(elem a) const override {
    std::string out = "(";
    uint64_t ra = a;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ",";
      out += factors_[i].label(elem(ra / places_[i]));
      ra %= places_[i];
    }
    return out + ")";
  }

 private:
  elem zip(elem a, elem b, bool mul) const {
    uint64_t out = 0, ra = a, rb = b;
    for (size_t i = 0; i < factors_.size(); ++i) {
      const elem ca = elem(ra / places_[i]), cb = elem(rb / places_[i]);
      ra %= places_[i];
      rb %= places_[i];
      const elem c = mul ? factors_[i].mul(ca, cb) : factors_[i].add(ca, cb);
      out = out * factors_[i].order() + c;
    }
    return elem(out);
  }

  std::vector<FiniteRing> factors_;
  std::vector<uint64_t> places_;
  uint64_t order_;
};

constexpr uint32_t kMaxMatrixCells = 64;

class MatrixOps final : public RingOps {
 public:
  MatrixOps(FiniteRing base, uint32_t k, uint64_t order)
      : base_(std::move(base)), k_(k), cells_(k * k), order_(order) {}

  uint32_t order() const override { return uint32_t(order_); }

  elem add(elem a, elem b) const override {
    std::array<elem, kMaxMatrixCells> x, y;
    decode(a, x);
    decode(b, y);
    const RingView v = base_.view();
    for (uint32_t i = 0; i < cells_; ++i) x[i] = v.add(x[i], y[i]);
    return encode(x);
  }

  elem mul(elem a, elem b) const override {
    std::array<elem, kMaxMatrixCells> x, y, z;
    decode(a, x);
    decode(b, y);
    const RingView v = base_.view();
    for (uint32_t i = 0; i < k_; ++i)
      for (uint32_t j = 0; j < k_; ++j) {
        elem acc = v.zero;
        for (uint32_t l = 0; l < k_; ++l)
          acc = v.add(acc, v.mul(x[i * k_ + l], y[l * k_ + j]));
        z[i * k_ + j] = acc;
      }
    return encode(z);
  }

  elem neg(elem a) const override {
    std::array<elem, kMaxMatrixCells> x;
    decode(a, x);
    for (uint32_t i = 0; i < cells_; ++i) x[i] = base_.neg(x[i]);
    return encode(x);
  }

  elem zero() const override {
    std::array<elem, kMaxMatrixCells> x;
    x.fill(base_.zero());
    return encode(x);
  }

  elem one() const override {
    std::array<elem, kMaxMatrixCells> x;
    x.fill(base_.zero());
    for (uint32_t i = 0; i < k_; ++i) x[i * k_ + i] = base_.one();
    return encode(x);
  }

  std::string label(elem a) const override {
    std::array<elem, kMaxMatrixCells> x;
    decode(a, x);
    std::string out = "[";
    for (uint32_t i = 0; i < k_; ++i) {
      out += i ? ",[" : "[";
      for (uint32_t j = 0; j < k_; ++j) {
        if (j) out += ",";
        out += base_.label(x[i * k_ + j]);
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void decode(elem a, std::array<elem, kMaxMatrixCells>& out) const {
    uint64_t ra = a;
    const uint64_t m = base_.order();
    for (uint32_t i = cells_; i-- > 0;) {
      out[i] = elem(ra % m);
      ra /= m;
    }
  }

  elem encode(const std::array<elem, kMaxMatrixCells>& x) const {
    uint64_t out = 0;
    const uint64_t m = base_.order();
    for (uint32_t i = 0; i < cells_; ++i) out = out * m + x[i];
    return elem(out);
  }

  FiniteRing base_;
  uint32_t k_, cells_;
  uint64_t order_;
};

class TriangularOps final : public RingOps {
 public:
  TriangularOps(FiniteRing base, uint32_t k, uint64_t order)
      : base_(std::move(base)), k_(k), cells_(k * (k + 1) / 2), order_(order) {
    // Row-major order of the upper cells: (0,0),(0,1),...,(1,1),...
    idx_.assign(k * k, kNoElem);
    uint32_t pos = 0;
    for (uint32_t i = 0; i < k; ++i)
      for (uint32_t j = i; j < k; ++j) idx_[i * k + j] = pos++;
  }

  uint32_t order() const override { return uint32_t(order_); }

  elem add(elem a, elem b) const override {
    std::array<elem, kMaxMatrixCells> x, y;
    decode(a, x);
    decode(b, y);
    const RingView v = base_.view();
    for (uint32_t i = 0; i < cells_; ++i) x[i] = v.add(x[i], y[i]);
    return encode(x);
  }

  elem mul(elem a, elem b) const override {
    std::array<elem, kMaxMatrixCells> x, y, z;
    decode(a, x);
    decode(b, y);
    const RingView v = base_.view();
    for (uint32_t i = 0; i < k_; ++i)
      for (uint32_t j = i; j < k_; ++j) {
        elem acc = v.zero;
        for (uint32_t l = i; l <= j; ++l)
          acc = v.add(acc, v.mul(x[idx_[i * k_ + l]], y[idx_[l * k_ + j]]));
        z[idx_[i * k_ + j]] = acc;
      }
    return encode(z);
  }

  elem neg(elem a) const override {
    std::array<elem, kMaxMatrixCells> x;
    decode(a, x);
    for (uint32_t i = 0; i < cells_; ++i) x[i] = base_.neg(x[i]);
    return encode(x);
  }

  elem zero() const override {
    std::array<elem, kMaxMatrixCells> x;
    x.fill(base_.zero());
    return encode(x);
  }

  elem one() const override {
    std::array<elem, kMaxMatrixCells> x;
    x.fill(base_.zero());
    for (uint32_t i = 0; i < k_; ++i) x[idx_[i * k_ + i]] = base_.one();
    return encode(x);
  }

  std::string label(elem a) const override {
    std::array<elem, kMaxMatrixCells> x;
    decode(a, x);
    const std::string z = base_.label(base_.zero());
    std::string out = "[";
    for (uint32_t i = 0; i < k_; ++i) {
      out += i ? ",[" : "[";
      for (uint32_t j = 0; j < k_; ++j) {
        if (j) out += ",";
        out += j < i ? z : base_.label(x[idx_[i * k_ + j]]);
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void decode(elem a, std::array<elem, kMaxMatrixCells>& out) const {
    uint64_t ra = a;
    const uint64_t m = base_.order();
    for (uint32_t i = cells_; i-- > 0;) {
      out[i] = elem(ra % m);
      ra /= m;
    }
  }

  elem encode(const std::array<elem, kMaxMatrixCells>& x) const {
    uint64_t out = 0;
    const uint64_t m = base_.order();
    for (uint32_t i = 0; i < cells_; ++i) out = out * m + x[i];
    return elem(out);
  }

  FiniteRing base_;
  uint32_t k_, cells_;
  uint64_t order_;
  std::vector<uint32_t> idx_;
};

class CornerOps final : public RingOps {
 public:
  CornerOps(FiniteRing parent, elem e, std::vector<elem> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    sub_id_.assign(parent_.order(), kNoElem);
    for (uint32_t i = 0; i < members_.size(); ++i) sub_id_[members_[i]] = i;
    zero_ = sub_id_[parent_.zero()];
    one_ = sub_id_[e];
  }

  uint32_t order() const override { return uint32_t(members_.size()); }
  elem add(elem a, elem b) const override {
    return sub_id_[parent_.add(members_[a], members_[b])];
  }
  elem mul(elem a, elem b) const override {
    return sub_id_[parent_.mul(members_[a], members_[b])];
  }
  elem neg(elem a) const override { return sub_id_[parent_.neg(members_[a])]; }
  elem zero() const override { return zero_; }
  elem one() const override { return one_; }
  std::string label(elem a) const override { return parent_.label(members_[a]); }

 private:
  FiniteRing parent_;
  std::vector<elem> members_;
  std::vector<elem> sub_id_;
  elem zero_, one_;
};

class QuotientOps final : public RingOps {
 public:
  QuotientOps(FiniteRing parent, std::vector<elem> reps, std::vector<elem> rep_of)
      : parent_(std::move(parent)),
        reps_(std::move(reps)),
        rep_of_(std::move(rep_of)) {
    sub_id_.assign(parent_.order(), kNoElem);
    for (uint32_t i = 0; i < reps_.size(); ++i) sub_id_[reps_[i]] = i;
    zero_ = sub_id_[rep_of_[parent_.zero()]];
    one_ = sub_id_[rep_of_[parent_.one()]];
  }

  uint32_t order() const override { return uint32_t(reps_.size()); }
  elem add(elem a, elem b) const override {
    return sub_id_[rep_of_[parent_.add(reps_[a], reps_[b])]];
  }
  elem mul(elem a, elem b) const override {
    return sub_id_[rep_of_[parent_.mul(reps_[a], reps_[b])]];
  }
  elem neg(elem a) const override {
    return sub_id_[rep_of_[parent_.neg(reps_[a])]];
  }
  elem zero() const override { return zero_; }
  elem one() const override { return one_; }
  std::string label(elem a) const override {
    return "[" + parent_.label(reps_[a]) + "]";
  }

 private:
  FiniteRing parent_;
  std::vector<elem> reps_;
  std::vector<elem> rep_of_;
  std::vector<elem> sub_id_;
  elem zero_, one_;
};

constexpr uint32_t kMaxGroupOrder = 64;  // |R|^|G| caps |G| long before this

class GroupRingOpsImpl final : public GroupRingOps {
 public:
  GroupRingOpsImpl(FiniteRing base, FiniteGroup grp, uint64_t order)
      : base_(std::move(base)), group_(std::move(grp)), order_(order) {
    gop_.assign(size_t(group_.order()) * group_.order(), 0);
    for (elem g = 0; g < group_.order(); ++g)
      for (elem h = 0; h < group_.order(); ++h)
        gop_[size_t(g) * group_.order() + h] = group_.op(g, h);
  }

  uint32_t order() const override { return uint32_t(order_); }

  elem add(elem a, elem b) const override {
    std::array<elem, kMaxGroupOrder> x, y;
    decode(a, x);
    decode(b, y);
    const RingView v = base_.view();
    const uint32_t m = group_.order();
    for (uint32_t i = 0; i < m; ++i) x[i] = v.add(x[i], y[i]);
    return encode(x);
  }

  elem mul(elem a, elem b) const override {
    std::array<elem, kMaxGroupOrder> x, y, z;
    decode(a, x);
    decode(b, y);
    const RingView v = base_.view();
    const uint32_t m = group_.order();
    z.fill(v.zero);
    for (uint32_t g = 0; g < m; ++g) {
      if (x[g] == v.zero) continue;
      for (uint32_t h = 0; h < m; ++h) {
        if (y[h] == v.zero) continue;
        const elem gh = gop_[size_t(g) * m + h];
        z[gh] = v.add(z[gh], v.mul(x[g], y[h]));
      }
    }
    return encode(z);
  }

  elem neg(elem a) const override {
    std::array<elem, kMaxGroupOrder> x;
    decode(a, x);
    for (uint32_t i = 0; i < group_.order(); ++i) x[i] = base_.neg(x[i]);
    return encode(x);
  }

  elem zero() const override {
    std::array<elem, kMaxGroupOrder> x;
    x.fill(base_.zero());
    return encode(x);
  }

  elem one() const override {
    std::array<elem, kMaxGroupOrder> x;
    x.fill(base_.zero());
    x[group_.identity()] = base_.one();
    return encode(x);
  }

  std::string label(elem a) const override {
    std::array<elem, kMaxGroupOrder> x;
    decode(a, x);
    std::string out;
    for (uint32_t g = 0; g < group_.order(); ++g) {
      if (x[g] == base_.zero()) continue;
      if (!out.empty()) out += "+";
      if (g == group_.identity())
        out += base_.label(x[g]);
      else if (x[g] == base_.one())
        out += group_.label(g);
      else
        out += base_.label(x[g]) + "*" + group_.label(g);
    }
    return out.empty() ? base_.label(base_.zero()) : out;
  }

  const FiniteRing& base() const override { return base_; }
  const FiniteGroup& group() const override { return group_; }

  elem coefficient(elem a, elem g) const override {
    std::array<elem, kMaxGroupOrder> x;
    decode(a, x);
    return x[g];
  }

 private:
  void decode(elem a, std::array<elem, kMaxGroupOrder>& out) const {
    uint64_t ra = a;
    const uint64_t m = base_.order();
    for (uint32_t i = group_.order(); i-- > 0;) {
      out[i] = elem(ra % m);
      ra /= m;
    }
  }

  elem encode(const std::array<elem, kMaxGroupOrder>& x) const {
    uint64_t out = 0;
    const uint64_t m = base_.order();
    for (uint32_t i = 0; i < group_.order(); ++i) out = out * m + x[i];
    return elem(out);
  }

  FiniteRing base_;
  FiniteGroup group_;
  uint64_t order_;
  std::vector<elem> gop_;
};

class KsOps final : public RingOps {
 public:
  KsOps(FiniteRing base, elem s, uint64_t order)
      : base_(std::move(base)), s_(s), order_(order) {}

  uint32_t order() const override { return uint32_t(order_); }

  elem add(elem p, elem q) const override {
    std::array<elem, 4> x, y;
    decode(p, x);
    decode(q, y);
    const RingView v = base_.view();
    for (int i = 0; i < 4; ++i) x[i] = v.add(x[i], y[i]);
    return encode(x);
  }

  elem mul(elem p, elem q) const override {
    std::array<elem, 4> x, y, z;
    decode(p, x);
    decode(q, y);
    const RingView v = base_.view();
    const elem a1 = x[0], x1 = x[1], y1 = x[2], b1 = x[3];
    const elem a2 = y[0], x2 = y[1], y2 = y[2], b2 = y[3];
    z[0] = v.add(v.mul(a1, a2), v.mul(s_, v.mul(x1, y2)));
    z[1] = v.add(v.mul(a1, x2), v.mul(x1, b2));
    z[2] = v.add(v.mul(y1, a2), v.mul(b1, y2));
    z[3] = v.add(v.mul(s_, v.mul(y1, x2)), v.mul(b1, b2));
    return encode(z);
  }

  elem neg(elem p) const override {
    std::array<elem, 4> x;
    decode(p, x);
    for (int i = 0; i < 4; ++i) x[i] = base_.neg(x[i]);
    return encode(x);
  }

  elem zero() const override {
    return encode({base_.zero(), base_.zero(), base_.zero(), base_.zero()});
  }
  elem one() const override {
    return encode({base_.one(), base_.zero(), base_.zero(), base_.one()});
  }

  std::string label(elem p) const override {
    std::array<elem, 4> x;
    decode(p, x);
    return "[[" + base_.label(x[0]) + "," + base_.label(x[1]) + "],[" +
           base_.label(x[2]) + "," + base_.label(x[3]) + "]]";
  }

 private:
  void decode(elem p, std::array<elem, 4>& out) const {
    uint64_t rp = p;
    const uint64_t m = base_.order();
    for (int i = 4; i-- > 0;) {
      out[i] = elem(rp % m);
      rp /= m;
    }
  }

  elem encode(const std::array<elem, 4>& x) const {
    uint64_t out = 0;
    const uint64_t m = base_.order();
    for (int i = 0; i < 4; ++i) out = out * m + x[i];
    return elem(out);
  }

  FiniteRing base_;
  elem s_;
  uint64_t order_;
};

class FormalTriOps final : public RingOps {
 public:
  FormalTriOps(FiniteRing rR, FiniteRing rS, Bimodule m, std::vector<elem> mneg,
               uint64_t order)
      : r_(std::move(rR)),
        s_(std::move(rS)),
        m_(std::move(m)),
        mneg_(std::move(mneg)),
        order_(order) {}

  uint32_t order() const override { return uint32_t(order_); }

  elem add(elem p, elem q) const override {
    auto [r1, m1, s1] = decode(p);
    auto [r2, m2, s2] = decode(q);
    return encode(r_.add(r1, r2), m_.add(m1, m2), s_.add(s1, s2));
  }

  elem mul(elem p, elem q) const override {
    auto [r1, m1, s1] = decode(p);
    auto [r2, m2, s2] = decode(q);
    return encode(r_.mul(r1, r2), m_.add(m_.left(r1, m2), m_.right(m1, s2)),
                  s_.mul(s1, s2));
  }

  elem neg(elem p) const override {
    auto [r1, m1, s1] = decode(p);
    return encode(r_.neg(r1), mneg_[m1], s_.neg(s1));
  }

  elem zero() const override { return encode(r_.zero(), m_.zero, s_.zero()); }
  elem one() const override { return encode(r_.one(), m_.zero, s_.one()); }

  std::string label(elem p) const override {
    auto [r1, m1, s1] = decode(p);
    const std::string ml = m_.label ? m_.label(m1) : std::to_string(m1);
    return "[[" + r_.label(r1) + "," + ml + "],[0," + s_.label(s1) + "]]";
  }

 private:
  std::array<elem, 3> decode(elem p) const {
    const uint64_t ms = uint64_t(m_.order) * s_.order();
    return {elem(p / ms), elem((p % ms) / s_.order()), elem(p % s_.order())};
  }
  elem encode(elem r, elem m, elem s) const {
    return elem((uint64_t(r) * m_.order + m) * s_.order() + s);
  }

  FiniteRing r_, s_;
  Bimodule m_;
  std::vector<elem> mneg_;
  uint64_t order_;
};

}  // namespace

FiniteRing make_zn(uint64_t n, const BuildLimits& limits) {
  if (n == 0) throw ZeroModulus();
  check_cap(n, limits);
  return FiniteRing(std::make_shared<ZnOps>(uint32_t(n)),
                    "Z" + std::to_string(n));
}

FiniteRing direct_product(const std::vector<FiniteRing>& factors,
                          const BuildLimits& limits) {
  if (factors.empty()) throw Error("direct product needs at least one factor");
  uint64_t order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    check_cap(order, limits);
  }
  // A singleton product is the factor itself (the one-factor mixed-radix
  // encoding is the identity map).
  if (factors.size() == 1) return share_structure(factors[0], factors[0].source());
  std::string source;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) source += "x";
    source += factors[i].source();
  }
  return FiniteRing(std::make_shared<ProductOps>(factors), std::move(source));
}

FiniteRing matrix_ring(const FiniteRing& r, uint32_t k,
                       const BuildLimits& limits) {
  if (k < 1) throw Error("matrix size must be >= 1");
  if (k * k > kMaxMatrixCells) throw Error("matrix size too large");
  const uint64_t order = checked_pow(r.order(), k * k, limits);
  const std::string source = "M" + std::to_string(k) + "(" + r.source() + ")";
  if (k == 1) return share_structure(r, source);  // 1x1 encoding is the identity
  return FiniteRing(std::make_shared<MatrixOps>(r, k, order), source);
}

FiniteRing triangular_ring(const FiniteRing& r, uint32_t k,
                           const BuildLimits& limits) {
  if (k < 1) throw Error("matrix size must be >= 1");
  if (k * k > kMaxMatrixCells) throw Error("matrix size too large");
  const uint64_t order = checked_pow(r.order(), k * (k + 1) / 2, limits);
  const std::string source = "T" + std::to_string(k) + "(" + r.source() + ")";
  if (k == 1) return share_structure(r, source);
  return FiniteRing(std::make_shared<TriangularOps>(r, k, order), source);
}

FiniteRing corner_ring(const FiniteRing& r, elem e) {
  if (e >= r.order()) throw IndexOutOfRange(e, r.order());
  if (r.mul(e, e) != e) throw NotIdempotent(e);

  const std::string source =
      "corner(" + r.source() + "," + std::to_string(e) + ")";
  if (e == r.one()) return share_structure(r, source);

  std::vector<elem> members;
  Bitset seen(r.order());
  for (elem x = 0; x < r.order(); ++x) {
    const elem exe = r.mul(e, r.mul(x, e));
    if (!seen.test(exe)) {
      seen.set(exe);
      members.push_back(exe);
    }
  }
  std::sort(members.begin(), members.end());
  return FiniteRing(std::make_shared<CornerOps>(r, e, std::move(members)),
                    source);
}

Bitset ideal_closure(const FiniteRing& r, const std::vector<elem>& gens) {
  return kernels::ideal_closure_scan(r.view(), gens);
}

FiniteRing quotient_ring(const FiniteRing& r, const Bitset& ideal) {
  if (ideal.size() != r.order())
    throw NotAnIdeal("ideal set has wrong carrier size");
  const std::vector<elem> members = ideal.to_list();
  if (kernels::ideal_closure_scan(r.view(), members) != ideal)
    throw NotAnIdeal("set is not closed as a two-sided ideal");

  // Coset representative = smallest id: walking x in ascending order means
  // the first unassigned member of each coset is its minimum.
  std::vector<elem> rep_of(r.order(), kNoElem);
  std::vector<elem> reps;
  for (elem x = 0; x < r.order(); ++x) {
    if (rep_of[x] != kNoElem) continue;
    reps.push_back(x);
    for (elem i : members) rep_of[r.add(x, i)] = x;
    if (rep_of[x] != x)
      throw InternalError("coset enumeration missed its own base point");
  }

  std::string source = "quot(" + r.source() + ",";
  source += std::to_string(members.size()) + " gens)";
  return FiniteRing(
      std::make_shared<QuotientOps>(r, std::move(reps), std::move(rep_of)),
      std::move(source));
}

FiniteRing quotient_ring(const FiniteRing& r, const std::vector<elem>& ideal) {
  Bitset set(r.order());
  for (elem x : ideal) {
    if (x >= r.order()) throw IndexOutOfRange(x, r.order());
    set.set(x);
  }
  return quotient_ring(r, set);
}

FiniteRing group_ring(const FiniteRing& r, const FiniteGroup& g,
                      const BuildLimits& limits) {
  if (g.order() > kMaxGroupOrder) throw Error("group too large for a group ring");
  const uint64_t order = checked_pow(r.order(), g.order(), limits);
  return FiniteRing(std::make_shared<GroupRingOpsImpl>(r, g, order),
                    "GR(" + r.source() + "," + g.source() + ")");
}

std::vector<elem> augmentation_ideal(const FiniteRing& rg) {
  const auto* ops = dynamic_cast<const GroupRingOps*>(&rg.ops());
  if (!ops) throw NotAGroupRing();
  const FiniteRing& base = ops->base();
  const uint32_t m = ops->group().order();
  std::vector<elem> out;
  for (elem a = 0; a < rg.order(); ++a) {
    elem sum = base.zero();
    for (elem g = 0; g < m; ++g) sum = base.add(sum, ops->coefficient(a, g));
    if (sum == base.zero()) out.push_back(a);
  }
  return out;
}

FiniteRing ks_ring(const FiniteRing& r, elem s, const BuildLimits& limits) {
  if (s >= r.order()) throw IndexOutOfRange(s, r.order());
  if (!center(r).test(s)) throw NotCentral(s);
  const uint64_t order = checked_pow(r.order(), 4, limits);
  FiniteRing out(std::make_shared<KsOps>(r, s, order),
                 "Ks(" + r.source() + "," + std::to_string(s) + ")");
  verify_constructed(out);
  return out;
}

Bimodule ring_as_bimodule(const FiniteRing& r) {
  Bimodule m;
  m.order = r.order();
  m.zero = r.zero();
  m.add = [r](elem a, elem b) { return r.add(a, b); };
  m.left = [r](elem a, elem b) { return r.mul(a, b); };
  m.right = [r](elem a, elem b) { return r.mul(a, b); };
  m.label = [r](elem a) { return r.label(a); };
  return m;
}

namespace {

std::vector<elem> verify_bimodule(const FiniteRing& rR, const FiniteRing& rS,
                                  const Bimodule& m) {
  if (m.order < 1 || !m.add || !m.left || !m.right)
    throw BimoduleAxiomViolation("bimodule carrier is incomplete");
  const uint32_t n = m.order;

  auto fail = [](const std::string& what) {
    throw BimoduleAxiomViolation("bimodule axiom failed: " + what);
  };

  for (elem a = 0; a < n; ++a) {
    if (m.add(m.zero, a) != a) fail("zero is an additive identity");
    for (elem b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a)) fail("addition commutes");
      for (elem c = 0; c < n; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          fail("addition associates");
    }
  }

  std::vector<elem> neg(n, kNoElem);
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b)
      if (m.add(a, b) == m.zero) {
        neg[a] = b;
        break;
      }
    if (neg[a] == kNoElem) fail("additive inverses exist");
  }

  for (elem x = 0; x < n; ++x) {
    if (m.left(rR.one(), x) != x) fail("1*m = m");
    if (m.right(x, rS.one()) != x) fail("m*1 = m");
  }

  for (elem r1 = 0; r1 < rR.order(); ++r1)
    for (elem x = 0; x < n; ++x) {
      for (elem r2 = 0; r2 < rR.order(); ++r2) {
        if (m.left(rR.add(r1, r2), x) != m.add(m.left(r1, x), m.left(r2, x)))
          fail("left action is additive in the ring argument");
        if (m.left(rR.mul(r1, r2), x) != m.left(r1, m.left(r2, x)))
          fail("(r1r2)m = r1(r2m)");
      }
      for (elem y = 0; y < n; ++y)
        if (m.left(r1, m.add(x, y)) != m.add(m.left(r1, x), m.left(r1, y)))
          fail("left action is additive in the module argument");
    }

  for (elem s1 = 0; s1 < rS.order(); ++s1)
    for (elem x = 0; x < n; ++x) {
      for (elem s2 = 0; s2 < rS.order(); ++s2) {
        if (m.right(x, rS.add(s1, s2)) != m.add(m.right(x, s1), m.right(x, s2)))
          fail("right action is additive in the ring argument");
        if (m.right(x, rS.mul(s1, s2)) != m.right(m.right(x, s1), s2))
          fail("m(s1s2) = (ms1)s2");
      }
      for (elem y = 0; y < n; ++y)
        if (m.right(m.add(x, y), s1) != m.add(m.right(x, s1), m.right(y, s1)))
          fail("right action is additive in the module argument");
    }

  for (elem r1 = 0; r1 < rR.order(); ++r1)
    for (elem x = 0; x < n; ++x)
      for (elem s1 = 0; s1 < rS.order(); ++s1)
        if (m.right(m.left(r1, x), s1) != m.left(r1, m.right(x, s1)))
          fail("(rm)s = r(ms)");

  return neg;
}

}  // namespace

FiniteRing formal_triangular(const FiniteRing& rR, const FiniteRing& rS,
                             const Bimodule& m, const BuildLimits& limits) {
  std::vector<elem> neg = verify_bimodule(rR, rS, m);
  const uint64_t order = uint64_t(rR.order()) * m.order * rS.order();
  check_cap(order, limits);
  FiniteRing out(
      std::make_shared<FormalTriOps>(rR, rS, m, std::move(neg), order),
      "FT(" + rR.source() + "," + rS.source() + ")");
  verify_constructed(out);
  return out;
}

}  // namespace ringlab
