#pragma once

// Textual group specifications ("alt 5", "psl2 11", "m11", "file x.gens")
// resolved to enumerated groups.

#include <cctype>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "engel/connectivity.hpp"
#include "engel/group.hpp"
#include "engel/matrix_groups.hpp"

namespace engel {

struct GroupSpec {
  std::string family;  // alt sym cyclic psl2 pgl2 psl3 sl3 sz m10 m11 m12 m22 file
  std::uint64_t param = 0;
  std::string path;    // family == "file"

  std::string label() const {
    if (family == "file") return "file:" + path;
    if (family == "sz") return "sz8";
    if (param == 0) return family;
    return family + "(" + std::to_string(param) + ")";
  }
};

inline const std::vector<std::string>& parameterised_families() {
  static const std::vector<std::string> f{"alt", "sym", "cyclic", "psl2", "pgl2", "psl3", "sl3"};
  return f;
}

inline const std::vector<std::string>& named_groups() {
  static const std::vector<std::string> f{"m10", "m11", "m12", "m22", "sz8"};
  return f;
}

/// Accepts "alt 5", "alt5", "psl2 11", "m11", "sz8", "file PATH". A bare path
/// ending in .gens is treated as a file.
inline GroupSpec parse_group_spec(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw std::invalid_argument("empty group specification");
  GroupSpec s;
  std::string head = words[0];
  for (auto& c : head) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  if (head == "file") {
    if (words.size() != 2) throw std::invalid_argument("expected 'file PATH'");
    s.family = "file";
    s.path = words[1];
    return s;
  }
  if (words.size() == 1 && words[0].size() > 5 && words[0].ends_with(".gens")) {
    s.family = "file";
    s.path = words[0];
    return s;
  }
  for (const auto& n : named_groups())
    if (head == n) {
      if (words.size() != 1) throw std::invalid_argument(n + " takes no parameter");
      s.family = n == "sz8" ? "sz" : n;
      s.param = n == "sz8" ? 8 : 0;
      return s;
    }
  if (head == "sz") {
    if (words.size() != 2 || words[1] != "8") throw std::invalid_argument("only sz 8 is available");
    s.family = "sz";
    s.param = 8;
    return s;
  }
  // Split a trailing number off the family name ("alt5", "psl2_7").
  std::string name = head, number;
  if (words.size() == 2) {
    number = words[1];
  } else if (words.size() == 1) {
    for (const auto& f : parameterised_families())
      if (head.size() > f.size() && head.rfind(f, 0) == 0) {
        std::string rest = head.substr(f.size());
        if (!rest.empty() && (rest[0] == '_' || rest[0] == '(')) rest.erase(0, 1);
        if (!rest.empty() && rest.back() == ')') rest.pop_back();
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
          name = f;
          number = rest;
        }
      }
  } else {
    throw std::invalid_argument("too many words in group specification '" + text + "'");
  }
  bool known = false;
  for (const auto& f : parameterised_families()) known = known || f == name;
  if (!known) throw std::invalid_argument("unknown group family '" + name + "'");
  if (number.empty() || number.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("family " + name + " needs a numeric parameter");
  s.family = name;
  s.param = std::stoull(number);
  return s;
}

/// Locates a generator file: as given, then under data_dir/gens.
inline std::filesystem::path resolve_gens_path(const std::string& path, const std::filesystem::path& data_dir) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const fs::path alt = data_dir / "gens" / path;
  if (fs::exists(alt)) return alt;
  throw ConstructionError("generator file not found: " + path + " (also looked in " + (data_dir / "gens").string() +
                          ")");
}

inline Group build_group(const GroupSpec& s, const std::filesystem::path& data_dir, const GroupCache* cache = nullptr,
                         std::size_t limit = Group::kDefaultLimit) {
  auto from_file = [&](const std::string& p) { return load_group(resolve_gens_path(p, data_dir).string(), limit, cache); };
  if (s.family == "file") return from_file(s.path);
  if (s.family == "m10" || s.family == "m11" || s.family == "m12" || s.family == "m22") return from_file(s.family + ".gens");
  if (s.family == "sz") return suzuki8(limit);
  if (s.family == "alt") {
    if (s.param < 1) throw ConstructionError("alt needs n >= 1");
    return alternating_group(s.param);
  }
  if (s.family == "sym") {
    if (s.param < 1) throw ConstructionError("sym needs n >= 1");
    return symmetric_group(s.param);
  }
  if (s.family == "cyclic") {
    if (s.param < 1) throw ConstructionError("cyclic needs n >= 1");
    return cyclic_group(s.param);
  }
  if (s.family == "psl2") return psl2(s.param, limit);
  if (s.family == "pgl2") return pgl2(s.param, limit);
  if (s.family == "psl3") return psl3(s.param, limit);
  if (s.family == "sl3") return sl3(s.param, limit);
  throw ConstructionError("cannot build group " + s.label());
}

/// Tabulated minimal n for a spec, when there is one.
inline std::optional<Table1Prediction> predict_for(const GroupSpec& s) {
  if (s.family == "file" || s.family == "cyclic" || s.family == "sl3") return std::nullopt;
  try {
    return predict_table1(s.family, s.param);
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // below the tabulated range
  }
}

/// Shipped character table for a spec, if any.
inline std::optional<std::filesystem::path> table_for(const GroupSpec& s, const std::filesystem::path& data_dir) {
  std::string f;
  if (s.family == "sym" && s.param == 3) f = "s3.ct";
  if (s.family == "sym" && s.param == 4) f = "s4.ct";
  if (s.family == "alt" && s.param == 5) f = "a5.ct";
  if ((s.family == "psl2" && s.param == 7) || (s.family == "psl3" && s.param == 2)) f = "psl2_7.ct";
  if (f.empty()) return std::nullopt;
  return data_dir / "chartab" / f;
}

/// Odd prime-graph components of the small Mathieu groups with a subgroup
/// order to search for (0: none listed).
inline std::optional<std::vector<SporadicRow>> table2_rows(const GroupSpec& s) {
  if (s.family == "m11") return std::vector<SporadicRow>{{5, 120, "S5"}, {11, 660, "L2(11)"}};
  if (s.family == "m12") return std::vector<SporadicRow>{{11, 7920, "M11"}};
  if (s.family == "m22") return std::vector<SporadicRow>{{5, 120, "S5"}, {7, 2520, "A7"}, {11, 660, "L2(11)"}};
  return std::nullopt;
}

}  // namespace engel
