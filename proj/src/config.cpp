#include "modal/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "modal/error.hpp"

namespace modal {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::Config, "config key '" + key + "': cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
  KeyValueConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::Config, "config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) fail(ErrorCode::Config, "config line " + std::to_string(lineno) + ": empty key");
    cfg.entries_[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Config, "cannot open config file '" + path + "'");
  return parse(in);
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> KeyValueConfig::get_double(const std::string& key) const {
  const auto v = get(key);
  if (!v) return std::nullopt;
  return parse_number<double>(key, *v);
}

std::optional<long long> KeyValueConfig::get_int(const std::string& key) const {
  const auto v = get(key);
  if (!v) return std::nullopt;
  return parse_number<long long>(key, *v);
}

std::optional<std::vector<double>> KeyValueConfig::get_list(const std::string& key) const {
  const auto v = get(key);
  if (!v) return std::nullopt;
  std::vector<double> out;
  std::string_view rest(*v);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    if (!item.empty()) out.push_back(parse_number<double>(key, item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace modal
