#include "ringlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "ringlab/corpus.hpp"
#include "ringlab/derived.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/report.hpp"

namespace ringlab::cli {

namespace {

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void apply_config(const CliConfig& cfg) {
  kernels::set_max_threads(cfg.jobs);
}

}  // namespace

int cmd_classify(const std::string& expr_text, const CliConfig& cfg,
                 std::ostream& out, std::ostream& err) {
  apply_config(cfg);
  RingExpr expr;
  try {
    expr = parse_ring_expr(expr_text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    const FiniteRing r = build(expr, {cfg.order_cap});
    const RingProfile profile = class_profile(r);
    if (cfg.json)
      out << profile_record(r.source(), r.order(), profile).dump() << "\n";
    else
      out << render_profile_text(r, profile);
    return kOk;
  } catch (const Error& e) {
    err << "build error: " << e.what() << "\n";
    return kBuildError;
  }
}

int cmd_element(const std::string& expr_text, uint64_t element,
                const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  apply_config(cfg);
  RingExpr expr;
  try {
    expr = parse_ring_expr(expr_text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    const FiniteRing r = build(expr, {cfg.order_cap});
    if (element >= r.order()) throw IndexOutOfRange(element, r.order());
    const ElementProfile p = classify_element(r, elem(element));
    if (cfg.json)
      out << element_record(r, elem(element), p).dump() << "\n";
    else
      out << render_element_text(r, elem(element), p);
    return kOk;
  } catch (const Error& e) {
    err << "build error: " << e.what() << "\n";
    return kBuildError;
  }
}

namespace {

struct ReferenceRow {
  const char* expr;
  // CUNC, NCUC, CSNC, NCSUC, NCC
  bool expected[5];
};

constexpr const char* kReferenceColumns[5] = {"CUNC", "NCUC", "CSNC", "NCSUC",
                                              "NCC"};

// Classification grid of the four reference rings.
constexpr ReferenceRow kReferenceTable[4] = {
    {"M2(Z2)", {false, false, false, false, true}},
    {"T2(Z3)", {false, false, false, true, true}},
    {"T2(Z2)", {false, false, true, true, true}},
    {"Z3", {false, true, false, true, true}},
};

}  // namespace

int cmd_table1(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  apply_config(cfg);
  try {
    std::vector<std::string> mismatches;
    json rows = json::array();
    std::string grid = "         CUNC  NCUC  CSNC  NCSUC  NCC\n";

    for (const ReferenceRow& row : kReferenceTable) {
      const FiniteRing r = build(parse_ring_expr(row.expr), {cfg.order_cap});
      const RingProfile p = class_profile(r);
      const bool got[5] = {p.cunc, p.ncuc, p.csnc, p.ncsuc, p.ncc};

      std::string line = row.expr;
      line.resize(9, ' ');
      json cells = json::object();
      for (int i = 0; i < 5; ++i) {
        line += got[i] ? "✓" : "✗";
        line += i == 3 ? "      " : "     ";
        cells[kReferenceColumns[i]] = got[i];
        if (got[i] != row.expected[i])
          mismatches.push_back(std::string(row.expr) + " / " +
                               kReferenceColumns[i] + ": computed " +
                               (got[i] ? "true" : "false") + ", reference " +
                               (row.expected[i] ? "true" : "false"));
      }
      grid += line + "\n";
      rows.push_back({{"ring", row.expr}, {"classes", cells}});
    }

    if (cfg.json)
      out << json{{"rows", rows}, {"matches_reference", mismatches.empty()}}
                 .dump()
          << "\n";
    else
      out << grid;

    if (!mismatches.empty()) {
      for (const auto& m : mismatches) err << "mismatch: " << m << "\n";
      return kCheckFailed;
    }
    return kOk;
  } catch (const Error& e) {
    err << "build error: " << e.what() << "\n";
    return kBuildError;
  }
}

int cmd_laws(const std::string& expr_text, const CliConfig& cfg,
             std::ostream& out, std::ostream& err) {
  apply_config(cfg);
  RingExpr expr;
  try {
    expr = parse_ring_expr(expr_text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    const FiniteRing r = build(expr, {cfg.order_cap});
    LawOptions options;
    if (options.max_build_order > cfg.order_cap)
      options.max_build_order = cfg.order_cap;
    LawReport report = check_laws(r, options);
    LawReport global = check_global_laws(options);
    for (auto& lr : global.results) report.results.push_back(std::move(lr));

    if (cfg.json)
      out << law_report_record(report).dump() << "\n";
    else
      out << render_law_report_text(report);

    if (!report.all_pass()) {
      for (const auto& lr : report.results)
        if (!lr.pass) err << "law " << lr.id << " failed: " << lr.detail << "\n";
      return kCheckFailed;
    }
    return kOk;
  } catch (const Error& e) {
    err << "build error: " << e.what() << "\n";
    return kBuildError;
  }
}

std::vector<std::string> survey_expressions(uint64_t max_order) {
  std::vector<std::string> exprs;
  std::set<std::string> seen;
  auto emit = [&](const std::string& text) {
    const std::string key = canonical_key(parse_ring_expr(text));
    if (seen.insert(key).second) exprs.push_back(key);
  };

  auto ipow_le = [&](uint64_t b, uint32_t e, uint64_t cap) {
    uint64_t out = 1;
    for (uint32_t i = 0; i < e; ++i) {
      if (b != 0 && out > cap / b) return false;
      out *= b;
    }
    return out <= cap;
  };

  for (uint64_t n = 2; n <= max_order; ++n) emit("Z" + std::to_string(n));
  for (uint64_t i = 2; i <= max_order; ++i)
    for (uint64_t j = i; i * j <= max_order; ++j)
      emit("Z" + std::to_string(i) + "xZ" + std::to_string(j));
  for (uint64_t n = 2; ipow_le(n, 4, max_order); ++n)
    emit("M2(Z" + std::to_string(n) + ")");
  for (uint64_t n = 2; ipow_le(n, 3, max_order); ++n)
    emit("T2(Z" + std::to_string(n) + ")");
  for (uint64_t n = 2; ipow_le(n, 6, max_order); ++n)
    emit("T3(Z" + std::to_string(n) + ")");
  for (const auto& [gname, gorder] :
       std::vector<std::pair<std::string, uint32_t>>{
           {"C2", 2}, {"C3", 3}, {"C4", 4}, {"C2xC2", 4}})
    for (uint64_t n = 2; ipow_le(n, gorder, max_order); ++n)
      emit("GR(Z" + std::to_string(n) + "," + gname + ")");
  for (uint64_t n = 2; ipow_le(n, 4, max_order); ++n)
    for (uint64_t s = 0; s < n; ++s)
      emit("Ks(Z" + std::to_string(n) + "," + std::to_string(s) + ")");
  for (uint64_t n = 4; n <= max_order; ++n)
    for (uint64_t d = 2; d < n; ++d)
      if (n % d == 0) emit("quot(Z" + std::to_string(n) + "," +
                           std::to_string(d) + ")");
  return exprs;
}

int cmd_survey(uint64_t max_order, const CliConfig& cfg, std::ostream& out,
               std::ostream& err) {
  apply_config(cfg);
  try {
    if (max_order > cfg.order_cap)
      throw Error("max order " + std::to_string(max_order) +
                  " exceeds the order cap " + std::to_string(cfg.order_cap));

    // RINGLAB_CACHE overrides any configured cache path.
    std::optional<std::string> cache_path = cfg.cache_path;
    if (const char* env = std::getenv("RINGLAB_CACHE")) cache_path = env;

    std::map<std::string, json> cached;
    if (cache_path) {
      std::ifstream in(*cache_path);
      std::string line;
      while (in && std::getline(in, line)) {
        if (line.empty()) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.contains("expr") ||
            !record["expr"].is_string())
          throw Error("malformed cache line in " + *cache_path);
        const std::string key = record["expr"].get<std::string>();
        cached[key] = std::move(record);
      }
    }

    const std::vector<std::string> exprs = survey_expressions(max_order);
    std::vector<size_t> fresh;
    for (size_t i = 0; i < exprs.size(); ++i)
      if (!cached.count(exprs[i])) fresh.push_back(i);

    std::vector<json> fresh_records(fresh.size());
    std::string first_error;
#pragma omp parallel for schedule(dynamic)
    for (int64_t fi = 0; fi < int64_t(fresh.size()); ++fi) {
      const std::string& key = exprs[fresh[size_t(fi)]];
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const RingExpr expr = parse_ring_expr(key);
        const FiniteRing r = build(expr, {cfg.order_cap});
        const int64_t t_build = ms_since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        derived_sets(r);
        const int64_t t_derived = ms_since(t1);
        const auto t2 = std::chrono::steady_clock::now();
        const RingProfile profile = class_profile(r);
        const int64_t t_classify = ms_since(t2);
        const std::map<std::string, int64_t> timings = {{"build", t_build},
                                                        {"derived", t_derived},
                                                        {"classify", t_classify}};
        fresh_records[size_t(fi)] =
            profile_record(key, r.order(), profile, &timings);
      } catch (const std::exception& e) {
#pragma omp critical
        if (first_error.empty()) first_error = key + ": " + e.what();
      }
    }
    if (!first_error.empty()) throw Error("survey entry failed: " + first_error);

    // Single writer appends in enumeration order.
    if (cache_path && !fresh_records.empty()) {
      std::ofstream cache(*cache_path, std::ios::app);
      if (!cache) throw CacheWriteError("cannot open cache " + *cache_path);
      for (const json& record : fresh_records) {
        cache << record.dump() << "\n";
        if (!cache) throw CacheWriteError("write failed for " + *cache_path);
      }
    }

    std::map<std::string, const json*> fresh_by_key;
    for (size_t fi = 0; fi < fresh.size(); ++fi)
      fresh_by_key[exprs[fresh[fi]]] = &fresh_records[fi];

    for (const std::string& key : exprs) {
      const json& record =
          cached.count(key) ? cached[key] : *fresh_by_key.at(key);
      if (cfg.json)
        out << record.dump() << "\n";
      else
        out << render_record_line(record) << "\n";
    }
    return kOk;
  } catch (const CacheWriteError& e) {
    err << "cache error: " << e.what() << "\n";
    return kBuildError;
  } catch (const Error& e) {
    err << "survey error: " << e.what() << "\n";
    return kBuildError;
  }
}

}  // namespace ringlab::cli
