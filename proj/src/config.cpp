#include "mhelm/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace mhelm {
namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_comment(const std::string& line) {
  for (size_t i = 0; i < line.size(); ++i)
    if (line[i] == '#' || line[i] == ';') return line.substr(0, i);
  return line;
}

double parse_number(const std::string& raw, const std::string& where) {
  const std::string t = trim(raw);
  if (t.empty()) throw ConfigError(where + ": expected a number, got empty value");
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected a number, got '" + t + "'");
  }
  if (pos != t.size())
    throw ConfigError(where + ": trailing characters after number in '" + t + "'");
  return v;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(strip_comment(line));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
      cfg.sections_[section];  // allow empty sections
      continue;
    }
    const size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected 'key = value' or '[section]', got '" + t + "'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": key '" + key + "' appears before any [section]");
    auto& sec = cfg.sections_[section];
    if (sec.count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                        section + "." + key + "'");
    sec[key] = Entry{value, lineno};
  }
  return cfg;
}

const Config::Entry* Config::find(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end()) return nullptr;
  auto k = s->second.find(key);
  if (k == s->second.end()) return nullptr;
  return &k->second;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

std::string Config::locate(const std::string& section, const std::string& key) const {
  const Entry* e = find(section, key);
  std::string loc = origin_;
  if (e) loc += ":" + std::to_string(e->line);
  return loc + " (" + section + "." + key + ")";
}

std::string Config::require_string(const std::string& section, const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e)
    throw ConfigError(origin_ + ": missing required field " + section + "." + key);
  return e->raw;
}

double Config::require_double(const std::string& section, const std::string& key) const {
  return parse_number(require_string(section, key), locate(section, key));
}

int Config::require_int(const std::string& section, const std::string& key) const {
  const double v = require_double(section, key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError(locate(section, key) + ": expected an integer");
  return i;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  const Entry* e = find(section, key);
  return e ? e->raw : fallback;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  const Entry* e = find(section, key);
  return e ? parse_number(e->raw, locate(section, key)) : fallback;
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const {
  const Entry* e = find(section, key);
  if (!e) return fallback;
  return require_int(section, key);
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  const Entry* e = find(section, key);
  if (!e) return fallback;
  std::string t = trim(e->raw);
  for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw ConfigError(locate(section, key) + ": expected a boolean, got '" + e->raw + "'");
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
  const Entry* e = find(section, key);
  std::vector<double> out;
  if (!e) return out;
  const std::string where = locate(section, key);
  std::string item;
  std::istringstream in(e->raw);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(where + ": empty list element");
    out.push_back(parse_number(item, where));
  }
  return out;
}

std::vector<Point> Config::get_points(const std::string& section, const std::string& key) const {
  const Entry* e = find(section, key);
  std::vector<Point> out;
  if (!e) return out;
  const std::string where = locate(section, key);
  const std::string& raw = e->raw;
  size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && raw[i] != '(') ++i;
    if (i >= raw.size()) break;
    const size_t close = raw.find(')', i);
    if (close == std::string::npos)
      throw ConfigError(where + ": unterminated '(' in point list");
    std::string body = raw.substr(i + 1, close - i - 1);
    std::vector<double> coords;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) coords.push_back(parse_number(item, where));
    if (coords.size() != 2 && coords.size() != 3)
      throw ConfigError(where + ": points need 2 or 3 coordinates");
    out.push_back(pt(coords[0], coords[1], coords.size() == 3 ? coords[2] : 0.0));
    i = close + 1;
  }
  if (out.empty()) throw ConfigError(where + ": expected at least one (x, y[, z]) point");
  return out;
}

std::string Config::content_hash() const {
  // FNV-1a over a canonical serialization.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const auto& [sec, entries] : sections_) {
    mix(sec);
    for (const auto& [key, entry] : entries) {
      mix(key);
      mix(entry.raw);
    }
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace mhelm
