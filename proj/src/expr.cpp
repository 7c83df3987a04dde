#include "ringlab/expr.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ringlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  RingExpr parse() {
    RingExpr e = ring_expr();
    skip_ws();
    if (pos_ != in_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(uint8_t(in_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < in_.size() ? in_[pos_] : '\0';
  }

  bool try_consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (in_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  uint64_t parse_int(const char* what) {
    skip_ws();
    const size_t start = pos_;
    uint64_t v = 0;
    while (pos_ < in_.size() && std::isdigit(uint8_t(in_[pos_]))) {
      v = v * 10 + uint64_t(in_[pos_] - '0');
      if (v > 1'000'000'000'000ull) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError(std::string("expected ") + what, start);
    return v;
  }

  std::string parse_path() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < in_.size() && in_[pos_] != ')') ++pos_;
    std::string path(in_.substr(start, pos_ - start));
    while (!path.empty() && std::isspace(uint8_t(path.back()))) path.pop_back();
    if (path.empty()) throw ParseError("expected a file path", start);
    return path;
  }

  RingExpr ring_expr() {
    RingExpr first = primary();
    if (peek() != 'x') return first;
    RingExpr prod;
    prod.kind = RingExpr::Kind::prod;
    prod.children.push_back(std::move(first));
    while (try_consume('x')) prod.children.push_back(primary());
    return prod;
  }

  RingExpr primary() {
    skip_ws();
    const size_t start = pos_;
    RingExpr e;
    switch (peek()) {
      case 'Z':
        ++pos_;
        e.kind = RingExpr::Kind::zn;
        e.n = parse_int("a modulus");
        return e;
      case 'M':
      case 'T': {
        const bool mat = in_[pos_] == 'M';
        ++pos_;
        const size_t int_at = pos_;
        const uint64_t k = parse_int("a matrix size");
        if (k < 1) throw ParseError("matrix size must be >= 1", int_at);
        e.kind = mat ? RingExpr::Kind::mat : RingExpr::Kind::tri;
        e.n = k;
        expect('(');
        e.children.push_back(ring_expr());
        expect(')');
        return e;
      }
      case 'c':
        if (try_keyword("corner")) {
          e.kind = RingExpr::Kind::corner;
          expect('(');
          e.children.push_back(ring_expr());
          expect(',');
          e.n = parse_int("an idempotent id");
          expect(')');
          return e;
        }
        break;
      case 'q':
        if (try_keyword("quot")) {
          e.kind = RingExpr::Kind::quot;
          expect('(');
          e.children.push_back(ring_expr());
          expect(',');
          e.ids.push_back(parse_int("a generator id"));
          while (try_consume(',')) e.ids.push_back(parse_int("a generator id"));
          expect(')');
          return e;
        }
        break;
      case 'G':
        if (try_keyword("GR")) {
          e.kind = RingExpr::Kind::group_ring;
          expect('(');
          e.children.push_back(ring_expr());
          expect(',');
          e.group.push_back(group_expr());
          expect(')');
          return e;
        }
        break;
      case 'K':
        if (try_keyword("Ks")) {
          e.kind = RingExpr::Kind::ks;
          expect('(');
          e.children.push_back(ring_expr());
          expect(',');
          e.n = parse_int("a central element id");
          expect(')');
          return e;
        }
        break;
      case 't':
        if (try_keyword("table")) {
          e.kind = RingExpr::Kind::table;
          expect('(');
          e.path = parse_path();
          expect(')');
          return e;
        }
        break;
      case '\0':
        throw ParseError("expected a ring expression", start);
      default:
        break;
    }
    throw UnknownConstructor("unknown constructor", start);
  }

  GroupExpr group_expr() {
    GroupExpr first = group_primary();
    if (peek() != 'x') return first;
    GroupExpr prod;
    prod.kind = GroupExpr::Kind::prod;
    prod.factors.push_back(std::move(first));
    while (try_consume('x')) prod.factors.push_back(group_primary());
    return prod;
  }

  GroupExpr group_primary() {
    skip_ws();
    const size_t start = pos_;
    GroupExpr g;
    if (try_consume('C')) {
      g.kind = GroupExpr::Kind::cn;
      g.n = parse_int("a group order");
      if (g.n < 1) throw ParseError("group order must be >= 1", start + 1);
      return g;
    }
    if (try_keyword("gtable")) {
      g.kind = GroupExpr::Kind::table;
      expect('(');
      g.path = parse_path();
      expect(')');
      return g;
    }
    throw UnknownConstructor("unknown group constructor", start);
  }

  std::string_view in_;
  size_t pos_ = 0;
};

}  // namespace

RingExpr parse_ring_expr(std::string_view input) {
  return Parser(input).parse();
}

std::string to_string(const GroupExpr& g) {
  switch (g.kind) {
    case GroupExpr::Kind::cn:
      return "C" + std::to_string(g.n);
    case GroupExpr::Kind::prod: {
      std::string out;
      for (size_t i = 0; i < g.factors.size(); ++i) {
        if (i) out += "x";
        out += to_string(g.factors[i]);
      }
      return out;
    }
    case GroupExpr::Kind::table:
      return "gtable(" + g.path + ")";
  }
  return {};
}

std::string to_string(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zn:
      return "Z" + std::to_string(e.n);
    case RingExpr::Kind::table:
      return "table(" + e.path + ")";
    case RingExpr::Kind::prod: {
      std::string out;
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += "x";
        out += to_string(e.children[i]);
      }
      return out;
    }
    case RingExpr::Kind::mat:
      return "M" + std::to_string(e.n) + "(" + to_string(e.children[0]) + ")";
    case RingExpr::Kind::tri:
      return "T" + std::to_string(e.n) + "(" + to_string(e.children[0]) + ")";
    case RingExpr::Kind::corner:
      return "corner(" + to_string(e.children[0]) + "," + std::to_string(e.n) +
             ")";
    case RingExpr::Kind::quot: {
      std::string out = "quot(" + to_string(e.children[0]);
      for (uint64_t id : e.ids) out += "," + std::to_string(id);
      return out + ")";
    }
    case RingExpr::Kind::group_ring:
      return "GR(" + to_string(e.children[0]) + "," + to_string(e.group[0]) +
             ")";
    case RingExpr::Kind::ks:
      return "Ks(" + to_string(e.children[0]) + "," + std::to_string(e.n) + ")";
  }
  return {};
}

namespace {

GroupExpr canonicalize_group(const GroupExpr& g) {
  if (g.kind != GroupExpr::Kind::prod) return g;
  GroupExpr out;
  out.kind = GroupExpr::Kind::prod;
  for (const auto& f : g.factors) {
    GroupExpr cf = canonicalize_group(f);
    if (cf.kind == GroupExpr::Kind::prod)
      for (auto& sub : cf.factors) out.factors.push_back(std::move(sub));
    else
      out.factors.push_back(std::move(cf));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const GroupExpr& a, const GroupExpr& b) {
              return to_string(a) < to_string(b);
            });
  if (out.factors.size() == 1) return out.factors[0];
  return out;
}

}  // namespace

RingExpr canonicalize(const RingExpr& e) {
  RingExpr out = e;
  out.children.clear();
  for (const auto& c : e.children) out.children.push_back(canonicalize(c));
  if (!out.group.empty()) out.group[0] = canonicalize_group(out.group[0]);

  if (out.kind == RingExpr::Kind::prod) {
    std::vector<RingExpr> flat;
    for (auto& c : out.children) {
      if (c.kind == RingExpr::Kind::prod)
        for (auto& sub : c.children) flat.push_back(std::move(sub));
      else
        flat.push_back(std::move(c));
    }
    std::sort(flat.begin(), flat.end(),
              [](const RingExpr& a, const RingExpr& b) {
                return to_string(a) < to_string(b);
              });
    if (flat.size() == 1) return flat[0];
    out.children = std::move(flat);
  }
  return out;
}

std::string canonical_key(const RingExpr& e) {
  return to_string(canonicalize(e));
}

FiniteGroup make_group(const GroupExpr& g) {
  switch (g.kind) {
    case GroupExpr::Kind::cn:
      return cyclic_group(uint32_t(g.n));
    case GroupExpr::Kind::prod: {
      std::vector<FiniteGroup> factors;
      for (const auto& f : g.factors) factors.push_back(make_group(f));
      return group_product(factors);
    }
    case GroupExpr::Kind::table: {
      std::ifstream in(g.path);
      if (!in) throw Error("cannot open group table file: " + g.path);
      return load_group_table(in, "gtable(" + g.path + ")");
    }
  }
  throw Error("bad group expression");
}

FiniteRing build(const RingExpr& e, const BuildLimits& limits) {
  auto with_source = [&](FiniteRing r) {
    return share_structure(std::move(r), to_string(e));
  };
  switch (e.kind) {
    case RingExpr::Kind::zn:
      return with_source(make_zn(e.n, limits));
    case RingExpr::Kind::table: {
      std::ifstream in(e.path);
      if (!in) throw Error("cannot open ring table file: " + e.path);
      return with_source(load_ring_table(in, "table(" + e.path + ")"));
    }
    case RingExpr::Kind::prod: {
      std::vector<FiniteRing> factors;
      for (const auto& c : e.children) factors.push_back(build(c, limits));
      return with_source(direct_product(factors, limits));
    }
    case RingExpr::Kind::mat:
      return with_source(
          matrix_ring(build(e.children[0], limits), uint32_t(e.n), limits));
    case RingExpr::Kind::tri:
      return with_source(
          triangular_ring(build(e.children[0], limits), uint32_t(e.n), limits));
    case RingExpr::Kind::corner:
      return with_source(corner_ring(build(e.children[0], limits), elem(e.n)));
    case RingExpr::Kind::quot: {
      const FiniteRing base = build(e.children[0], limits);
      std::vector<elem> gens;
      for (uint64_t id : e.ids) {
        if (id >= base.order()) throw IndexOutOfRange(id, base.order());
        gens.push_back(elem(id));
      }
      return with_source(quotient_ring(base, ideal_closure(base, gens)));
    }
    case RingExpr::Kind::group_ring:
      return with_source(group_ring(build(e.children[0], limits),
                                    make_group(e.group[0]), limits));
    case RingExpr::Kind::ks:
      return with_source(
          ks_ring(build(e.children[0], limits), elem(e.n), limits));
  }
  throw Error("bad ring expression");
}

}  // namespace ringlab
