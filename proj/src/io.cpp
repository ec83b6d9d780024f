#include "alextop/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace alextop {

using nlohmann::json;

namespace {

std::vector<std::string> parse_elements(const json& j) {
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
    throw FormatError("space file needs a nonempty 'elements' array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw FormatError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  if (labels.size() > 20) throw FormatError("at most 20 elements supported");
  return labels;
}

int label_index(const std::vector<std::string>& labels, const std::string& name) {
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw FormatError("unknown element label: '" + name + "'");
  return static_cast<int>(it - labels.begin());
}

}  // namespace

FiniteSpace parse_space(const json& j) {
  if (!j.is_object()) throw FormatError("space file must be a JSON object");
  const std::vector<std::string> labels = parse_elements(j);
  const bool has_opens = j.contains("opens");
  const bool has_order = j.contains("order");
  if (has_opens == has_order)
    throw FormatError("space file must contain exactly one of 'opens' or 'order'");

  if (has_opens) {
    if (!j["opens"].is_array()) throw FormatError("'opens' must be an array of arrays");
    std::vector<Mask> opens;
    for (const auto& sub : j["opens"]) {
      if (!sub.is_array()) throw FormatError("'opens' must be an array of arrays");
      Mask m = 0;
      for (const auto& e : sub) {
        if (!e.is_string()) throw FormatError("subset entries must be element labels");
        m |= Mask{1} << label_index(labels, e.get<std::string>());
      }
      opens.push_back(m);
    }
    return validate_space(labels, opens);  // SpaceError propagates to the caller
  }

  if (!j["order"].is_array()) throw FormatError("'order' must be an array of pairs");
  const int n = static_cast<int>(labels.size());
  Preorder p;
  p.n = n;
  p.below.resize(n);
  for (int x = 0; x < n; ++x) p.below[x] = Mask{1} << x;
  for (const auto& pair : j["order"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw FormatError("'order' entries must be [\"y\",\"x\"] label pairs");
    const int y = label_index(labels, pair[0].get<std::string>());
    const int x = label_index(labels, pair[1].get<std::string>());
    p.below[x] |= Mask{1} << y;
  }
  // Transitive closure.
  for (bool grew = true; grew;) {
    grew = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (bit(p.below[x], y) && (p.below[y] & ~p.below[x])) {
          p.below[x] |= p.below[y];
          grew = true;
        }
  }
  return topology_from_preorder(p, labels);
}

FlowCandidate parse_flow(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw FormatError("flow file must be a JSON object");
  if (!j.contains("space")) throw FormatError("flow file needs a 'space'");

  FlowCandidate c;
  if (j["space"].is_string()) {
    std::string path = j["space"].get<std::string>();
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    c.space = parse_space(load_json_file(path));
  } else {
    c.space = parse_space(j["space"]);
  }

  if (!j.contains("maps") || !j["maps"].is_object() || j["maps"].empty())
    throw FormatError("flow file needs a nonempty 'maps' object");
  std::map<std::string, int> map_index;
  for (const auto& [name, assign] : j["maps"].items()) {
    if (!assign.is_object()) throw FormatError("map '" + name + "' must be an object");
    PointMap f;
    f.domain_size = f.codomain_size = c.space.size();
    f.image.assign(c.space.size(), -1);
    for (const auto& [from, to] : assign.items()) {
      if (!to.is_string()) throw FormatError("map '" + name + "' images must be labels");
      f.image[label_index(c.space.labels, from)] =
          label_index(c.space.labels, to.get<std::string>());
    }
    for (int x = 0; x < c.space.size(); ++x)
      if (f.image[x] < 0)
        throw FormatError("map '" + name + "' is missing an image for '" +
                          c.space.labels[x] + "'");
    map_index[name] = static_cast<int>(c.maps.size());
    c.map_names.push_back(name);
    c.maps.push_back(std::move(f));
  }

  if (!j.contains("breakpoints") || !j["breakpoints"].is_array())
    throw FormatError("flow file needs a 'breakpoints' array");
  for (const auto& b : j["breakpoints"]) {
    if (!b.is_string()) throw FormatError("breakpoints must be rational strings");
    try {
      c.schedule.breakpoints.push_back(parse_rational(b.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  for (std::size_t i = 0; i + 1 < c.schedule.breakpoints.size(); ++i)
    if (!(c.schedule.breakpoints[i] < c.schedule.breakpoints[i + 1]))
      throw FormatError("breakpoints must be strictly increasing");

  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw FormatError("flow file needs a 'pieces' array");
  if (j["pieces"].size() != 2 * c.schedule.breakpoints.size() + 1)
    throw FormatError("pieces length must be 2*breakpoints+1");
  for (const auto& p : j["pieces"]) {
    if (!p.is_string()) throw FormatError("pieces must be map names");
    const auto it = map_index.find(p.get<std::string>());
    if (it == map_index.end())
      throw FormatError("piece references unknown map '" + p.get<std::string>() + "'");
    c.schedule.pieces.push_back(it->second);
  }
  return c;
}

json space_to_json(const FiniteSpace& s) {
  json j;
  j["elements"] = s.labels;
  json opens = json::array();
  for (Mask o : s.opens) {
    json sub = json::array();
    for (int i = 0; i < s.size(); ++i)
      if (bit(o, i)) sub.push_back(s.labels[i]);
    opens.push_back(sub);
  }
  j["opens"] = opens;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json_file(const std::string& path) {
  const std::string text = read_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("malformed JSON in " + path);
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string mask_to_string(const FiniteSpace& s, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < s.size(); ++i)
    if (bit(m, i)) {
      if (!first) out += ",";
      out += s.labels[i];
      first = false;
    }
  return out + "}";
}

}  // namespace alextop
