#pragma once

#include "fatpoints/cluster.hpp"

#include <stdexcept>
#include <string>

namespace fatpoints {

/// Raised on malformed cluster files; the message cites the offending line or
/// field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON cluster format:
///   { "points": r, "proximities": [[j, i], ...], "multiplicities": [...] }
/// Multiplicities may be JSON integers or decimal strings (for values beyond
/// 64 bits). The structure is validated; violations raise FormatError.
WeightedCluster parse_cluster(const std::string& text);

/// Canonical printing: fixed key order, proximities sorted ascending,
/// multiplicities as integers when they fit in 64 bits and as decimal strings
/// otherwise. parse_cluster(print_cluster(c)) == c for every valid cluster.
std::string print_cluster(const WeightedCluster& c);

WeightedCluster load_cluster_file(const std::string& path);

}  // namespace fatpoints
