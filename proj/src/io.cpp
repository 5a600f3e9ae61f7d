#include "covlat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace covlat {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("ParseError", "document is not valid JSON");
  if (!j.is_object()) throw Error("ParseError", "document root must be an object");
  return j;
}

const json& required_key(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error("ParseError", std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_array(const json& j, const char* key) {
  if (!j.is_array()) throw Error("ParseError", std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw Error("ParseError", std::string("\"") + key + "\" must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Covering covering_from_json(const std::string& text) {
  json j = parse_document(text);
  std::vector<std::string> ground = string_array(required_key(j, "ground"), "ground");
  const json& blocks_json = required_key(j, "blocks");
  if (!blocks_json.is_array()) throw Error("ParseError", "\"blocks\" must be an array");
  std::vector<std::vector<std::string>> blocks;
  blocks.reserve(blocks_json.size());
  for (const auto& b : blocks_json) {
    blocks.push_back(string_array(b, "blocks"));
  }
  return validate_covering(std::move(ground), std::move(blocks));
}

std::string covering_to_json(const Covering& c, bool pretty) {
  json j;
  j["ground"] = c.ground().labels();
  j["blocks"] = c.block_labels();
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

GradedLattice lattice_from_json(const std::string& text) {
  json j = parse_document(text);
  GradedLattice l;

  const json& flats = required_key(j, "flats");
  if (!flats.is_array()) throw Error("ParseError", "\"flats\" must be an array");
  for (const auto& f : flats) {
    if (f.is_string()) {
      l.labels.push_back(f.get<std::string>());
    } else if (f.is_array()) {
      std::string label = "{";
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_string()) {
          throw Error("ParseError", "\"flats\" entries must hold strings");
        }
        if (i > 0) label += ",";
        label += f[i].get<std::string>();
      }
      label += "}";
      l.labels.push_back(std::move(label));
    } else {
      throw Error("ParseError", "\"flats\" entries must be strings or arrays");
    }
  }

  const json& heights = required_key(j, "heights");
  if (!heights.is_array() || heights.size() != l.labels.size()) {
    throw Error("ParseError", "\"heights\" must list one height per flat");
  }
  for (const auto& h : heights) {
    if (!h.is_number_integer()) throw Error("ParseError", "\"heights\" must hold integers");
    l.heights.push_back(h.get<int>());
  }

  int n = l.size();
  l.covers_up.resize(static_cast<std::size_t>(n));
  const json& covers = required_key(j, "covers");
  if (!covers.is_array()) throw Error("ParseError", "\"covers\" must be an array");
  for (const auto& e : covers) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw Error("ParseError", "\"covers\" must hold [from,to] index pairs");
    }
    int from = e[0].get<int>(), to = e[1].get<int>();
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw Error("ParseError", "\"covers\" index out of range");
    }
    l.covers_up[from].push_back(to);
  }

  const json& bottom = required_key(j, "bottom");
  const json& top = required_key(j, "top");
  if (!bottom.is_number_integer() || !top.is_number_integer()) {
    throw Error("ParseError", "\"bottom\" and \"top\" must be integers");
  }
  l.bottom = bottom.get<int>();
  l.top = top.get<int>();

  validate_graded_lattice(l);
  return l;
}

GroupTable cayley_from_json(const std::string& text) {
  json j = parse_document(text);
  const json& order = required_key(j, "order");
  if (!order.is_number_integer()) throw Error("ParseError", "\"order\" must be an integer");
  const json& table_json = required_key(j, "table");
  if (!table_json.is_array()) throw Error("ParseError", "\"table\" must be an array");
  std::vector<std::vector<int>> table;
  for (const auto& row : table_json) {
    if (!row.is_array()) throw Error("ParseError", "\"table\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error("ParseError", "\"table\" must hold integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (order.get<int>() != static_cast<int>(table.size())) {
    throw Error("ParseError", "\"order\" disagrees with the table size");
  }
  return GroupTable::from_table(std::move(table));
}

std::string report_to_json(const ClassificationReport& r, bool pretty) {
  json j;
  j["family"] = family_name(r.family);
  j["verdict"] = r.verdict;

  json params = json::object();
  if (r.n.has_value()) params["n"] = *r.n;
  if (r.q.has_value()) params["q"] = *r.q;
  if (r.group_order.has_value()) params["group_order"] = *r.group_order;
  j["parameters"] = params;

  json evidence;
  evidence["m"] = r.m;
  if (r.k.has_value()) evidence["k"] = *r.k;
  if (r.class_size.has_value()) evidence["class_size"] = *r.class_size;
  evidence["level_profile"] = r.level_profile;
  evidence["branch"] = r.branch;
  j["evidence"] = evidence;

  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileError", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace covlat
