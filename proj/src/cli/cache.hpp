#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mckaylab::cli {

/// On-disk JSON cache, one file per entry. Keys hash the group's element
/// table, the operation name and its parameters, so isomorphic groups entered
/// differently never share an entry.
class Cache {
public:
  /// An empty directory disables caching.
  explicit Cache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }

  static std::string key(const std::string &group_hash, const std::string &op,
                         const std::string &params);

  std::optional<nlohmann::json> get(const std::string &key) const;

  /// `group_spec` is kept so verify-cache can rebuild the group.
  void put(const std::string &key, const std::string &group_spec, const std::string &group_hash,
           const std::string &op, const std::string &params, const nlohmann::json &value) const;

  /// Returns the cached value or computes and stores it.
  nlohmann::json fetch(const std::string &group_spec, const std::string &group_hash,
                       const std::string &op, const std::string &params,
                       const std::function<nlohmann::json()> &compute) const;

  struct Entry {
    std::filesystem::path file;
    nlohmann::json record;
  };
  std::vector<Entry> entries() const;

private:
  std::filesystem::path dir_;
};

} // namespace mckaylab::cli
