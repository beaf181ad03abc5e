#include "grpd/io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace grpd {

using json = nlohmann::ordered_json;

namespace {

json groupoid_to_json(const FiniteGroupoid& g) {
  json j;
  j["objects"] = g.object_count();
  json arrows = json::array();
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    arrows.push_back({{"name", g.arrow_label(a)},
                      {"dom", g.dom(a)},
                      {"ran", g.ran(a)},
                      {"inv", g.inv(a)}});
  }
  j["arrows"] = std::move(arrows);
  j["identity"] = g.identity_table();
  json comp = json::array();
  for (const auto& t : g.comp_triples()) comp.push_back({t[0], t[1], t[2]});
  j["comp"] = std::move(comp);
  return j;
}

void expect_keys(const json& j, const std::vector<std::string>& required,
                 const std::vector<std::string>& optional, const std::string& where) {
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError(where + ": missing key '" + k + "'");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const auto& r : required) known |= (k == r);
    for (const auto& o : optional) known |= (k == o);
    if (!known) throw ParseError(where + ": unknown key '" + k + "'");
  }
}

std::uint64_t get_index(const json& j, const std::string& where, std::uint64_t limit,
                        const std::string& what) {
  if (!j.is_number_unsigned())
    throw ParseError(where + ": " + what + " must be a nonnegative integer");
  std::uint64_t v = j.get<std::uint64_t>();
  if (v >= limit)
    throw ParseError(where + ": " + what + " " + std::to_string(v) + " is out of range (" +
                     std::to_string(limit) + " available)");
  return v;
}

FiniteGroupoid groupoid_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("groupoid: expected a JSON object");
  expect_keys(j, {"objects", "arrows", "identity", "comp"}, {"br_labels"}, "groupoid");

  if (!j["objects"].is_number_unsigned())
    throw ParseError("groupoid: 'objects' must be a nonnegative integer");
  const std::size_t objects = j["objects"].get<std::size_t>();
  if (!j["arrows"].is_array()) throw ParseError("groupoid: 'arrows' must be an array");
  const std::size_t n = j["arrows"].size();

  std::vector<ObjectId> dom, ran;
  std::vector<ArrowId> inv;
  std::vector<std::string> labels;
  bool any_label = false;
  for (std::size_t a = 0; a < n; ++a) {
    const json& e = j["arrows"][a];
    const std::string where = "arrow #" + std::to_string(a);
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    expect_keys(e, {"dom", "ran", "inv"}, {"name"}, where);
    dom.push_back(ObjectId(get_index(e["dom"], where, objects, "dom")));
    ran.push_back(ObjectId(get_index(e["ran"], where, objects, "ran")));
    inv.push_back(ArrowId(get_index(e["inv"], where, n, "inv")));
    if (e.contains("name")) {
      if (!e["name"].is_string()) throw ParseError(where + ": 'name' must be a string");
      labels.push_back(e["name"].get<std::string>());
      any_label = true;
    } else {
      labels.push_back("");
    }
  }
  if (any_label) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (!sorted[i].empty() && sorted[i] == sorted[i - 1])
        throw ParseError("groupoid: duplicate arrow name '" + sorted[i] + "'");
  } else {
    labels.clear();
  }

  if (!j["identity"].is_array() || j["identity"].size() != objects)
    throw ParseError("groupoid: 'identity' must list one arrow per object");
  std::vector<ArrowId> identity;
  for (std::size_t x = 0; x < objects; ++x)
    identity.push_back(
        ArrowId(get_index(j["identity"][x], "identity of object " + std::to_string(x), n,
                          "arrow index")));

  if (!j["comp"].is_array()) throw ParseError("groupoid: 'comp' must be an array");
  std::vector<std::array<ArrowId, 3>> comp;
  for (std::size_t i = 0; i < j["comp"].size(); ++i) {
    const json& t = j["comp"][i];
    const std::string where = "comp triple #" + std::to_string(i);
    if (!t.is_array() || t.size() != 3) throw ParseError(where + ": expected [g, h, gh]");
    comp.push_back({ArrowId(get_index(t[0], where, n, "g")),
                    ArrowId(get_index(t[1], where, n, "h")),
                    ArrowId(get_index(t[2], where, n, "gh"))});
  }
  return FiniteGroupoid(objects, std::move(dom), std::move(ran), std::move(inv),
                        std::move(identity), std::move(comp), std::move(labels));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
}

json report_to_json(const ValidationReport& report) {
  json j;
  j["valid"] = report.ok();
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"rule", v.rule}, {"arrows", v.arrows}, {"message", v.message}});
  }
  j["violations"] = std::move(violations);
  return j;
}

json certificate_to_json(const IsoCertificate& cert) {
  json j;
  j["field"] = cert.field;
  j["br_count"] = cert.br_count;
  j["relations_ok"] = cert.relations_ok;
  j["generation_rank"] = cert.generation_rank;
  j["extraction_ok"] = cert.extraction_ok;
  j["normal_form_rank"] = cert.normal_form_rank;
  j["max_len_used"] = cert.max_len_used;
  j["component_sum_ok"] = cert.component_sum_ok;
  json components = json::array();
  for (const auto& c : cert.components) components.push_back(certificate_to_json(c));
  j["components"] = std::move(components);
  j["passed"] = cert.passed();
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_groupoid(const FiniteGroupoid& g) { return dump(groupoid_to_json(g)); }

FiniteGroupoid parse_groupoid_raw(const std::string& text) {
  return groupoid_from_json(parse_json(text));
}

FiniteGroupoid parse_groupoid(const std::string& text) {
  FiniteGroupoid g = parse_groupoid_raw(text);
  ValidationReport report = validate(g);
  if (!report.ok())
    throw ParseError("groupoid axioms violated: " + report.violations.front().rule + ": " +
                     report.violations.front().message + " (" +
                     std::to_string(report.violations.size()) + " violation(s) total)");
  return g;
}

std::string serialize_br(const BRGroupoid& brg, const FiniteGroupoid& origin) {
  json j = groupoid_to_json(brg.base());
  json labels = json::array();
  for (std::size_t i = 0; i < brg.size(); ++i) {
    const BRPair& p = brg.pair(ArrowId(i));
    json carrier = json::array();
    for (ArrowId a : p.carrier) carrier.push_back(origin.arrow_label(a));
    labels.push_back({{"arrow", origin.arrow_label(p.arrow)}, {"carrier", std::move(carrier)}});
  }
  j["br_labels"] = std::move(labels);
  return dump(j);
}

std::string validation_report_json(const ValidationReport& report) {
  return dump(report_to_json(report));
}

std::string certificate_json(const IsoCertificate& cert) {
  return dump(certificate_to_json(cert));
}

RepFileData parse_rep_file(const std::string& text,
                           const std::function<std::string(const std::string&)>& load_ref) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("representation file: expected a JSON object");
  expect_keys(j, {"groupoid", "dim", "field", "images"}, {}, "representation file");

  json gj = j["groupoid"];
  if (gj.is_string()) {
    if (!load_ref) throw ParseError("representation file: groupoid references are not allowed here");
    gj = parse_json(load_ref(gj.get<std::string>()));
  }
  FiniteGroupoid g = groupoid_from_json(gj);
  ValidationReport report = validate(g);
  if (!report.ok())
    throw ParseError("representation file: groupoid axioms violated: " +
                     report.violations.front().message);

  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw ParseError("representation file: 'dim' must be a positive integer");
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j["field"].is_string()) throw ParseError("representation file: 'field' must be a string");

  if (!j["images"].is_array() || j["images"].size() != g.arrow_count())
    throw ParseError("representation file: 'images' must list one matrix per arrow");
  std::vector<std::vector<std::string>> entries;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    const json& m = j["images"][a];
    if (!m.is_array() || m.size() != dim * dim)
      throw ParseError("representation file: image #" + std::to_string(a) + " must have " +
                       std::to_string(dim * dim) + " row-major entries");
    std::vector<std::string> row;
    row.reserve(dim * dim);
    for (const json& e : m) {
      if (!e.is_string())
        throw ParseError("representation file: entries must be exact scalar strings");
      row.push_back(e.get<std::string>());
    }
    entries.push_back(std::move(row));
  }
  return RepFileData{std::move(g), dim, j["field"].get<std::string>(), std::move(entries)};
}

std::string iso_table_json(const IsoTableData& table) {
  json j;
  j["field"] = table.field_spec;
  j["dimension"] = table.dimension;
  json basis = json::array();
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    basis.push_back({{"label", table.labels[i]}, {"element", table.elements[i]}});
  j["basis"] = std::move(basis);
  json constants = json::array();
  for (const auto& e : table.entries)
    constants.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", e.coeff}});
  j["constants"] = std::move(constants);
  return dump(j);
}

}  // namespace grpd
