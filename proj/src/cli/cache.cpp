#include "cli/cache.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab::cli {

namespace fs = std::filesystem;

Cache::Cache(fs::path dir) : dir_(std::move(dir))
{
  if (enabled())
    fs::create_directories(dir_);
}

std::string Cache::key(const std::string &group_hash, const std::string &op,
                       const std::string &params)
{
  std::uint64_t h = 1469598103934665603ULL;
  for (const std::string *part : {&group_hash, &op, &params}) {
    for (unsigned char c : *part) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
  return fmt::format("{:016x}", h);
}

std::optional<nlohmann::json> Cache::get(const std::string &key) const
{
  if (!enabled())
    return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"));
  if (!in)
    return std::nullopt;
  try {
    auto record = nlohmann::json::parse(in);
    if (record.at("key") != key)
      return std::nullopt;
    return record.at("value");
  } catch (const nlohmann::json::exception &) {
    return std::nullopt; // a corrupt entry is recomputed and overwritten
  }
}

void Cache::put(const std::string &key, const std::string &group_spec,
                const std::string &group_hash, const std::string &op, const std::string &params,
                const nlohmann::json &value) const
{
  if (!enabled())
    return;
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  nlohmann::json record = {{"key", key},
                           {"group_spec", group_spec},
                           {"group_hash", group_hash},
                           {"op", op},
                           {"params", params},
                           {"created", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                           {"value", value}};
  // Write then rename so concurrent readers never see half a file.
  const fs::path tmp = dir_ / (key + ".json.tmp");
  {
    std::ofstream out(tmp);
    if (!out)
      throw Error(fmt::format("cannot write cache entry {}", tmp.string()));
    out << record.dump(1) << '\n';
  }
  fs::rename(tmp, dir_ / (key + ".json"));
}

nlohmann::json Cache::fetch(const std::string &group_spec, const std::string &group_hash,
                            const std::string &op, const std::string &params,
                            const std::function<nlohmann::json()> &compute) const
{
  const std::string k = key(group_hash, op, params);
  if (auto hit = get(k))
    return *hit;
  nlohmann::json value = compute();
  put(k, group_spec, group_hash, op, params, value);
  return value;
}

std::vector<Cache::Entry> Cache::entries() const
{
  std::vector<Entry> out;
  if (!enabled() || !fs::exists(dir_))
    return out;
  for (const auto &f : fs::directory_iterator(dir_)) {
    // Only files named like a key; other JSON in the directory is not ours.
    const auto stem = f.path().stem().string();
    if (f.path().extension() != ".json" || stem.size() != 16 ||
        stem.find_first_not_of("0123456789abcdef") != std::string::npos)
      continue;
    std::ifstream in(f.path());
    Entry e{f.path(), nlohmann::json()};
    try {
      e.record = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &) {
      e.record = nullptr;
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Entry &a, const Entry &b) { return a.file < b.file; });
  return out;
}

} // namespace mckaylab::cli
