#include "esakia/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace esakia {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw validation_error("malformed JSON");
  return j;
}

FinitePoset poset_from(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("covers"))
    throw validation_error("poset JSON needs \"points\" and \"covers\"");
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) {
    if (!p.is_string()) throw validation_error("point names must be strings");
    labels.push_back(p.get<std::string>());
  }
  int n = (int)labels.size();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw validation_error("covers must be index pairs");
    covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  }
  return FinitePoset::from_covers(n, covers, std::move(labels));
}

json poset_to(const FinitePoset& p) {
  json points = json::array();
  for (int i = 0; i < p.size(); ++i) points.push_back(p.label(i));
  json covers = json::array();
  for (auto [i, j] : p.covers()) covers.push_back(json::array({i, j}));
  return json{{"points", points}, {"covers", covers}};
}

}  // namespace

FinitePoset poset_from_json(const std::string& text) { return poset_from(parse(text)); }

std::string poset_to_json(const FinitePoset& p) { return poset_to(p).dump(2); }

HeytingAlgebra algebra_from_json(const std::string& text) {
  json j = parse(text);
  if (j.is_object() && j.contains("dual")) return from_upsets(poset_from(j.at("dual")));
  if (!j.is_object() || !j.contains("leq"))
    throw validation_error("algebra JSON needs \"dual\" or explicit tables");
  auto matrix = [&](const char* name, int m) {
    const json& t = j.at(name);
    if ((int)t.size() != m) throw validation_error(std::string(name) + " has wrong row count");
    std::vector<std::uint16_t> out;
    for (const auto& row : t) {
      if ((int)row.size() != m) throw validation_error(std::string(name) + " has a short row");
      for (const auto& v : row) out.push_back((std::uint16_t)v.get<int>());
    }
    return out;
  };
  int m = (int)j.at("leq").size();
  std::vector<std::uint8_t> leq;
  for (const auto& row : j.at("leq")) {
    if ((int)row.size() != m) throw validation_error("leq has a short row");
    for (const auto& v : row) leq.push_back(v.get<int>() ? 1 : 0);
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  if (!j.contains("meet") && !j.contains("join") && !j.contains("imp")) {
    // order-only form; derive the operations
    return HeytingAlgebra::from_order(m, leq, std::move(labels));
  }
  if (!j.contains("bottom") || !j.contains("top"))
    throw validation_error("explicit tables need \"bottom\" and \"top\"");
  return HeytingAlgebra::from_tables(m, std::move(leq), matrix("meet", m), matrix("join", m),
                                     matrix("imp", m), j.at("bottom").get<int>(),
                                     j.at("top").get<int>(), std::move(labels));
}

std::string algebra_to_json(const HeytingAlgebra& a, bool explicit_tables) {
  if (!explicit_tables) {
    // canonical dual form: the algebra of upsets of the prime filter poset
    FinitePoset d = a.dual() ? *a.dual() : prime_filters(a);
    return json{{"dual", poset_to(d)}}.dump(2);
  }
  int m = a.size();
  auto table = [&](auto f) {
    json rows = json::array();
    for (int i = 0; i < m; ++i) {
      json row = json::array();
      for (int j2 = 0; j2 < m; ++j2) row.push_back(f(i, j2));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json out{{"leq", table([&](int i, int j2) { return a.leq(i, j2) ? 1 : 0; })},
           {"meet", table([&](int i, int j2) { return a.meet(i, j2); })},
           {"join", table([&](int i, int j2) { return a.join(i, j2); })},
           {"imp", table([&](int i, int j2) { return a.imp(i, j2); })},
           {"bottom", a.bottom()},
           {"top", a.top()}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out.dump(2);
}

Partition partition_from_json(const std::string& text, int n) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("classes"))
    throw validation_error("partition JSON needs \"classes\"");
  std::vector<std::vector<int>> classes;
  for (const auto& c : j.at("classes")) classes.push_back(c.get<std::vector<int>>());
  return Partition::from_classes(n, classes);
}

std::string partition_to_json(const Partition& r) {
  json classes = json::array();
  for (const auto& c : r.classes()) classes.push_back(c);
  return json{{"classes", classes}}.dump(2);
}

std::vector<int> point_map_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("map")) throw validation_error("map JSON needs \"map\"");
  return j.at("map").get<std::vector<int>>();
}

std::string point_map_to_json(const std::vector<int>& f) {
  return json{{"map", f}}.dump(2);
}

namespace {

const char* kPalette[] = {"lightblue", "lightsalmon", "palegreen",  "plum",
                          "khaki",     "lightpink",   "lightcyan",  "wheat",
                          "thistle",   "darkseagreen", "lightgray", "gold"};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_nodes_edges(const FinitePoset& p, const Partition* partition, const std::string& prefix,
                      std::ostringstream& os) {
  for (int i = 0; i < p.size(); ++i) {
    os << "  " << prefix << i << " [label=" << quote(p.label(i));
    if (partition) {
      int c = partition->class_of[i];
      auto cls = partition->classes();
      if (cls[c].size() > 1)
        os << ", style=filled, fillcolor=\""
           << kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))] << "\"";
    }
    os << "];\n";
  }
  for (auto [i, j] : p.covers()) os << "  " << prefix << i << " -> " << prefix << j << ";\n";
}

}  // namespace

std::string poset_to_dot(const FinitePoset& p, const Partition* partition) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  emit_nodes_edges(p, partition, "p", os);
  os << "}\n";
  return os.str();
}

std::string morphism_to_dot(const FinitePoset& source, const FinitePoset& target,
                            const std::vector<int>& f) {
  if ((int)f.size() != source.size()) throw validation_error("map size does not match source");
  std::ostringstream os;
  os << "digraph morphism {\n  rankdir=BT;\n  node [shape=circle];\n";
  os << "  subgraph cluster_source {\n    label=\"source\";\n";
  emit_nodes_edges(source, nullptr, "s", os);
  os << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  emit_nodes_edges(target, nullptr, "t", os);
  os << "  }\n";
  for (int i = 0; i < source.size(); ++i)
    os << "  s" << i << " -> t" << f[i] << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write " + path);
  out << text;
}

}  // namespace esakia
