#pragma once
#include <map>
#include <string>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

// Minimal structured config: sections of key = value lines.
//
//   # comment (also ';')
//   [section]
//   key = 3.5          numbers
//   name = disk        bare strings
//   flag = true        booleans
//   list = 1, 2, 3     inline lists
//   pts = (0,0) (1,2)  inline point lists
//
// Keys are case-sensitive; values keep their raw text so typed getters can
// report the offending line on a bad parse.
class Config {
 public:
  struct Entry {
    std::string raw;
    int line = 0;
  };

  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text, const std::string& origin = "<text>");

  bool has(const std::string& section, const std::string& key) const;

  // Typed getters. The require_* forms throw ConfigError naming the field;
  // the get_* forms fall back to the provided default when the key is absent
  // (but still throw on a present-but-malformed value).
  std::string require_string(const std::string& section, const std::string& key) const;
  double require_double(const std::string& section, const std::string& key) const;
  int require_int(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& section, const std::string& key) const;
  std::vector<Point> get_points(const std::string& section, const std::string& key) const;

  // For diagnostics: "origin:line (section.key)".
  std::string locate(const std::string& section, const std::string& key) const;
  const std::string& origin() const { return origin_; }

  // Stable content hash of the parsed entries (order-independent).
  std::string content_hash() const;

  const std::map<std::string, std::map<std::string, Entry>>& sections() const {
    return sections_;
  }

 private:
  const Entry* find(const std::string& section, const std::string& key) const;
  std::string origin_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

}  // namespace mhelm
