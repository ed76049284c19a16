#include "fatpoints/cluster_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace fatpoints {

namespace {

using nlohmann::json;

Int parse_multiplicity(const json& v, std::size_t index) {
  std::string field = "multiplicities[" + std::to_string(index) + "]";
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      Rat r = parse_rational(s);
      if (den(r) != 1) throw std::invalid_argument("not an integer");
      return num(r);
    } catch (const std::invalid_argument&) {
      throw FormatError("field " + field + ": '" + s + "' is not an integer");
    }
  }
  throw FormatError("field " + field + ": expected integer or digit string");
}

}  // namespace

WeightedCluster parse_cluster(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("cluster file: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("cluster file: top level must be an object");
  for (const auto& key : {"points", "proximities", "multiplicities"})
    if (!doc.contains(key)) throw FormatError(std::string("field ") + key + ": missing");

  constexpr std::int64_t kMaxPoints = 1000000;
  if (!doc["points"].is_number_integer() || doc["points"].get<std::int64_t>() < 1 ||
      doc["points"].get<std::int64_t>() > kMaxPoints)
    throw FormatError("field points: expected an integer in [1, " +
                      std::to_string(kMaxPoints) + "]");
  int r = doc["points"].get<int>();

  std::vector<std::pair<int, int>> prox;
  if (!doc["proximities"].is_array())
    throw FormatError("field proximities: expected an array of [j, i] pairs");
  std::size_t idx = 0;
  for (const auto& pair : doc["proximities"]) {
    std::string field = "proximities[" + std::to_string(idx++) + "]";
    auto in_range = [](const json& v) {
      return v.is_number_integer() && v.get<std::int64_t>() >= 1 &&
             v.get<std::int64_t>() <= kMaxPoints;
    };
    if (!pair.is_array() || pair.size() != 2 || !in_range(pair[0]) || !in_range(pair[1]))
      throw FormatError("field " + field + ": expected a [j, i] pair of indices");
    prox.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }

  if (!doc["multiplicities"].is_array())
    throw FormatError("field multiplicities: expected an array");
  std::vector<Int> mult;
  idx = 0;
  for (const auto& v : doc["multiplicities"]) mult.push_back(parse_multiplicity(v, idx++));

  ProximityStructure structure(r, std::move(prox));
  auto issues = validate(structure);
  if (!issues.empty())
    throw FormatError("field proximities: " + issues.front().message);
  if (static_cast<int>(mult.size()) != r)
    throw FormatError("field multiplicities: expected " + std::to_string(r) +
                      " entries, got " + std::to_string(mult.size()));
  return WeightedCluster{std::move(structure), std::move(mult)};
}

std::string print_cluster(const WeightedCluster& c) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"points\": " << c.structure.points << ",\n";
  out << "  \"proximities\": [";
  for (std::size_t k = 0; k < c.structure.proximities.size(); ++k) {
    const auto& [j, i] = c.structure.proximities[k];
    out << (k ? ", " : "") << "[" << j << ", " << i << "]";
  }
  out << "],\n";
  out << "  \"multiplicities\": [";
  static const Int kInt64Max = Int(INT64_MAX), kInt64Min = Int(INT64_MIN);
  for (std::size_t k = 0; k < c.multiplicities.size(); ++k) {
    const Int& m = c.multiplicities[k];
    out << (k ? ", " : "");
    if (m > kInt64Max || m < kInt64Min)
      out << '"' << m.str() << '"';
    else
      out << m.str();
  }
  out << "]\n}\n";
  return out.str();
}

WeightedCluster load_cluster_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open cluster file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cluster(buf.str());
}

}  // namespace fatpoints
