#include "pchi/report.hpp"

#include <sstream>

namespace pchi {

namespace {

Json flags_json(const ClassFlags& f) {
  Json out = Json::array();
  if (f.elementary_abelian) out.push_back("elementary-abelian");
  if (f.cyclic) out.push_back("cyclic");
  if (f.p_selfcentralizing) out.push_back("centric");
  if (f.p_radical) out.push_back("p-radical");
  if (f.f_radical) out.push_back("f-radical");
  return out;
}

}  // namespace

Json report_document(const ClassTable& table, const ChiReport& report,
                     const std::map<std::string, Rat>& residuals,
                     const std::map<std::string, long>& timings_ms) {
  Json doc;
  doc["group"] = report.group_text;
  doc["order"] = report.order;
  doc["prime"] = report.prime;
  doc["scope"] = scope_name(report.scope);

  Json cats;
  for (const auto& [kind, res] : report.results) cats[kind_name(kind)] = rat_str(res.chi);
  doc["categories"] = std::move(cats);

  std::vector<int> sel = table.select(report.scope);
  Json classes = Json::array();
  for (std::size_t i = 0; i < sel.size(); ++i) {
    const SubgroupClass& c = table.classes()[static_cast<std::size_t>(sel[i])];
    Json entry;
    entry["order"] = c.order();
    entry["class_size"] = c.class_size;
    entry["flags"] = flags_json(c.flags);
    Json w, cw;
    for (const auto& [kind, res] : report.results) {
      if (res.weighting.sel == sel) w[kind_name(kind)] = rat_str(res.weighting.values[i]);
      if (res.coweighting.sel == sel)
        cw[kind_name(kind)] = rat_str(res.coweighting.values[i]);
    }
    entry["weighting"] = std::move(w);
    entry["coweighting"] = std::move(cw);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);

  Json res;
  for (const auto& [name, value] : residuals) res[name] = rat_str(value);
  doc["residuals"] = std::move(res);

  if (!timings_ms.empty()) {
    Json t;
    for (const auto& [phase, ms] : timings_ms) t[phase] = ms;
    doc["timing"] = std::move(t);
  }
  return doc;
}

std::string render_table(const ChiReport& report) {
  std::ostringstream out;
  out << "group " << report.group_text << "  order " << report.order << "  prime "
      << report.prime << "  scope " << scope_name(report.scope) << "\n";
  if (report.results.empty()) return out.str();
  std::size_t kind_w = 4, chi_w = 3;
  for (const auto& [kind, res] : report.results) {
    kind_w = std::max(kind_w, kind_name(kind).size());
    chi_w = std::max(chi_w, rat_str(res.chi).size());
  }
  out << "  " << std::string(kind_w, '-') << "  " << std::string(chi_w, '-') << "\n";
  for (const auto& [kind, res] : report.results) {
    std::string k = kind_name(kind), v = rat_str(res.chi);
    out << "  " << k << std::string(kind_w - k.size(), ' ') << "  " << v << "\n";
  }
  return out.str();
}

std::string render_csv(const ChiReport& report, bool header) {
  std::ostringstream out;
  if (header) out << "group,order,prime,scope,kind,chi\n";
  for (const auto& [kind, res] : report.results)
    out << report.group_text << ',' << report.order << ',' << report.prime << ','
        << scope_name(report.scope) << ',' << kind_name(kind) << ','
        << rat_str(res.chi) << "\n";
  return out.str();
}

}  // namespace pchi
