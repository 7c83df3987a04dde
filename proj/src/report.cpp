#include "ringlab/report.hpp"

#include <sstream>

namespace ringlab {

namespace {

const char* mark(bool v) { return v ? "✓" : "✗"; }

}  // namespace

json profile_record(const std::string& expr, uint32_t order,
                    const RingProfile& profile,
                    const std::map<std::string, int64_t>* timings_ms) {
  json classes = json::object();
  for (const auto& [name, value] : profile.entries()) classes[name] = value;

  json witnesses = json::object();
  for (const auto& w : profile.witnesses)
    witnesses[w.cls] = {{"element", w.label}, {"detail", w.detail}};

  json record = {{"expr", expr},
                 {"order", order},
                 {"classes", classes},
                 {"witnesses", witnesses}};
  if (timings_ms) {
    json t = json::object();
    for (const auto& [stage, ms] : *timings_ms) t[stage] = ms;
    record["timings_ms"] = t;
  }
  return record;
}

std::string render_profile_text(const FiniteRing& r, const RingProfile& profile) {
  std::ostringstream out;
  out << "ring " << r.source() << "  (order " << r.order() << ")\n";
  for (const auto& [name, value] : profile.entries()) {
    out << "  " << name;
    for (size_t i = name.size(); i < 26; ++i) out << ' ';
    out << mark(value);
    if (!value) {
      if (const ClassWitness* w = profile.witness(name)) {
        out << "  witness " << r.label(w->element) << " (id " << w->element
            << ")";
        if (!w->detail.empty()) out << ": " << w->detail;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_record_line(const json& record) {
  std::ostringstream out;
  out << record.at("expr").get<std::string>() << "  order="
      << record.at("order").get<uint64_t>() << " ";
  const auto& classes = record.at("classes");
  // Fixed rendering order, independent of JSON key order.
  for (const auto& [name, value] : RingProfile{}.entries()) {
    (void)value;
    if (classes.contains(name))
      out << " " << name << ":" << mark(classes.at(name).get<bool>());
  }
  return out.str();
}

namespace {

void render_witness_list(std::ostringstream& out, const FiniteRing& r,
                         const std::vector<Decomposition>& ws) {
  for (const auto& w : ws) {
    out << "    e = " << r.label(w.e) << " (id " << w.e << "), partner = "
        << r.label(w.partner) << " (id " << w.partner << ")"
        << (w.commutes ? "  [commuting]" : "") << "\n";
  }
}

}  // namespace

json element_record(const FiniteRing& r, elem a, const ElementProfile& p) {
  auto witness_array = [&](const std::vector<Decomposition>& ws) {
    json arr = json::array();
    for (const auto& w : ws)
      arr.push_back({{"e", w.e},
                     {"e_label", r.label(w.e)},
                     {"partner", w.partner},
                     {"partner_label", r.label(w.partner)},
                     {"commutes", w.commutes}});
    return arr;
  };
  return {{"expr", r.source()},
          {"element", a},
          {"label", r.label(a)},
          {"flags",
           {{"clean", p.clean},
            {"strongly_clean", p.strongly_clean},
            {"uniquely_clean", p.uniquely_clean},
            {"uniquely_strongly_clean", p.uniquely_strongly_clean},
            {"nil_clean", p.nil_clean},
            {"strongly_nil_clean", p.strongly_nil_clean},
            {"uniquely_nil_clean", p.uniquely_nil_clean}}},
          {"clean_witnesses", witness_array(p.clean_witnesses)},
          {"nil_clean_witnesses", witness_array(p.nil_clean_witnesses)}};
}

std::string render_element_text(const FiniteRing& r, elem a,
                                const ElementProfile& p) {
  std::ostringstream out;
  out << "element " << r.label(a) << " (id " << a << ") of " << r.source()
      << "\n";
  out << "  clean                    " << mark(p.clean) << "\n";
  out << "  strongly clean           " << mark(p.strongly_clean) << "\n";
  out << "  uniquely clean           " << mark(p.uniquely_clean) << "\n";
  out << "  uniquely strongly clean  " << mark(p.uniquely_strongly_clean)
      << "\n";
  out << "  nil-clean                " << mark(p.nil_clean) << "\n";
  out << "  strongly nil-clean       " << mark(p.strongly_nil_clean) << "\n";
  out << "  uniquely nil-clean       " << mark(p.uniquely_nil_clean) << "\n";
  out << "  clean decompositions (" << p.clean_witnesses.size() << "):\n";
  render_witness_list(out, r, p.clean_witnesses);
  out << "  nil-clean decompositions (" << p.nil_clean_witnesses.size()
      << "):\n";
  render_witness_list(out, r, p.nil_clean_witnesses);
  return out.str();
}

json law_report_record(const LawReport& report) {
  json laws = json::array();
  for (const auto& lr : report.results)
    laws.push_back({{"id", lr.id},
                    {"statement", lr.statement},
                    {"applicable", lr.applicable},
                    {"pass", lr.pass},
                    {"detail", lr.detail}});
  return {{"ring", report.ring}, {"laws", laws}, {"all_pass", report.all_pass()}};
}

std::string render_law_report_text(const LawReport& report) {
  std::ostringstream out;
  out << "laws for " << report.ring << "\n";
  for (const auto& lr : report.results) {
    out << "  " << lr.id << "  "
        << (lr.pass ? (lr.applicable ? "pass" : "n/a ") : "FAIL") << "  "
        << lr.statement << "\n";
    if (!lr.pass) out << "        " << lr.detail << "\n";
  }
  return out.str();
}

}  // namespace ringlab
