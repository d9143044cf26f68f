#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modal {

/// Plain `key = value` configuration. Blank lines and lines starting with '#'
/// are ignored; later keys override earlier ones.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in);
  static KeyValueConfig load(const std::string& path);

  bool contains(const std::string& key) const { return entries_.contains(key); }
  std::optional<std::string> get(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<long long> get_int(const std::string& key) const;
  /// Comma-separated list of reals.
  std::optional<std::vector<double>> get_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace modal
