#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "commutor.hpp"
#include "error.hpp"
#include "growth.hpp"
#include "root_system.hpp"
#include "weight.hpp"

namespace crystal {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidInput("cannot parse " + std::string(what) + " '" + std::string(s) + "' as an integer");
  return v;
}

}  // namespace detail

// ---- fundamental-coordinate text forms ------------------------------------

inline std::string format_weight(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline Weight parse_weight(const RootSystem& sys, std::string_view text) {
  std::vector<int> c;
  for (auto tok : detail::split(detail::trim(text), ',')) c.push_back(detail::parse_int(tok, "weight coordinate"));
  Weight w(std::move(c));
  sys.check_weight(w);
  return w;
}

/// "1,0;1,0;-1,1"; the empty sequence is "()".
inline std::string format_entries(const std::vector<Weight>& entries) {
  if (entries.empty()) return "()";
  std::string out;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j) out += ';';
    out += format_weight(entries[j]);
  }
  return out;
}

inline std::vector<Weight> parse_entries(const RootSystem& sys, std::string_view text) {
  text = detail::trim(text);
  std::vector<Weight> out;
  if (text.empty() || text == "()") return out;
  for (auto tok : detail::split(text, ';')) out.push_back(parse_weight(sys, tok));
  return out;
}

/// Blocks joined by " | ".
inline std::string format_blocked(const BlockedElement& x) {
  std::string out;
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    if (k) out += " | ";
    out += format_entries(x.part(k).entries());
  }
  return out;
}

/// Either a flat list of entries or blocks separated by '|'. Returns the flat
/// entries and, when blocks were given, their lengths.
struct ParsedElement {
  std::vector<Weight> entries;
  std::vector<std::size_t> block_lengths;  // empty when the input was flat
};

inline ParsedElement parse_element(const RootSystem& sys, std::string_view text) {
  ParsedElement out;
  if (text.find('|') == std::string_view::npos) {
    out.entries = parse_entries(sys, text);
    return out;
  }
  for (auto group : detail::split(text, '|')) {
    auto part = parse_entries(sys, group);
    out.block_lengths.push_back(part.size());
    out.entries.insert(out.entries.end(), part.begin(), part.end());
  }
  return out;
}

// ---- epsilon coordinates (types A-D) --------------------------------------
//
// Coordinates are kept doubled so that the half-integral spin weights of B
// and D stay integral. Type A uses r+1 coordinates normalized to minimum 0.

inline std::vector<int> to_epsilon_doubled(const RootSystem& sys, const Weight& w) {
  sys.check_weight(w);
  const std::size_t r = sys.rank();
  std::vector<int> c;
  switch (sys.type()) {
    case CartanType::A: {
      c.assign(r + 1, 0);
      for (std::size_t j = r; j-- > 0;) c[j] = c[j + 1] + 2 * w[j];
      const int lo = *std::min_element(c.begin(), c.end());
      for (int& x : c) x -= lo;
      break;
    }
    case CartanType::B:
      c.assign(r, 0);
      c[r - 1] = w[r - 1];
      for (std::size_t j = r - 1; j-- > 0;) c[j] = c[j + 1] + 2 * w[j];
      break;
    case CartanType::C:
      c.assign(r, 0);
      c[r - 1] = 2 * w[r - 1];
      for (std::size_t j = r - 1; j-- > 0;) c[j] = c[j + 1] + 2 * w[j];
      break;
    case CartanType::D:
      c.assign(r, 0);
      c[r - 1] = w[r - 1] - w[r - 2];
      c[r - 2] = w[r - 1] + w[r - 2];
      for (std::size_t j = r - 2; j-- > 0;) c[j] = c[j + 1] + 2 * w[j];
      break;
    case CartanType::E:
      throw InvalidInput("epsilon coordinates are only available for types A, B, C and D");
  }
  return c;
}

inline Weight from_epsilon_doubled(const RootSystem& sys, const std::vector<int>& c) {
  const std::size_t r = sys.rank();
  const std::size_t need = sys.type() == CartanType::A ? r + 1 : r;
  if (sys.type() == CartanType::E) throw InvalidInput("epsilon coordinates are only available for types A, B, C and D");
  if (c.size() > need) throw InvalidInput("epsilon index out of range for " + sys.name());
  std::vector<int> e(c);
  e.resize(need, 0);
  std::vector<int> twice(r);
  for (std::size_t i = 0; i + 1 < r; ++i) twice[i] = e[i] - e[i + 1];
  switch (sys.type()) {
    case CartanType::A: twice[r - 1] = e[r - 1] - e[r]; break;
    case CartanType::B: twice[r - 1] = 2 * e[r - 1]; break;
    case CartanType::C: twice[r - 1] = e[r - 1]; break;
    case CartanType::D: twice[r - 1] = e[r - 2] + e[r - 1]; break;
    case CartanType::E: break;
  }
  Weight w(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (twice[i] % 2 != 0) throw InvalidInput("epsilon expression is not an integral weight of " + sys.name());
    w[i] = twice[i] / 2;
  }
  return w;
}

/// "e1+e1+e2" style is accepted on input; output collects terms, e.g.
/// "2e1+e2", "1/2e1-1/2e2", "0".
inline std::string format_epsilon(const RootSystem& sys, const Weight& w) {
  const auto c = to_epsilon_doubled(sys, w);
  std::string out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int d = c[j];
    if (d == 0) continue;
    std::string term;
    if (d % 2 == 0) {
      const int k = d / 2;
      term = k == 1 ? "" : k == -1 ? "-" : std::to_string(k);
    } else {
      term = std::to_string(d) + "/2";
    }
    term += "e" + std::to_string(j + 1);
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

inline Weight parse_epsilon(const RootSystem& sys, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidInput("empty epsilon expression");
  std::vector<int> c;
  if (s == "0") return from_epsilon_doubled(sys, c);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw InvalidInput("malformed epsilon expression '" + std::string(text) + "'");
    }
    int num = 1, den = 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) num = detail::parse_int(std::string_view(s).substr(start, pos - start), "coefficient");
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      den = detail::parse_int(std::string_view(s).substr(start, pos - start), "denominator");
      if (den != 1 && den != 2) throw InvalidInput("epsilon coefficients must be integers or halves");
    }
    if (pos >= s.size() || s[pos] != 'e') throw InvalidInput("malformed epsilon expression '" + std::string(text) + "'");
    ++pos;
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const int j = detail::parse_int(std::string_view(s).substr(start, pos - start), "epsilon index");
    if (j < 1) throw InvalidInput("epsilon indices start at 1");
    if (c.size() < static_cast<std::size_t>(j)) c.resize(static_cast<std::size_t>(j), 0);
    c[static_cast<std::size_t>(j - 1)] += sign * num * (2 / den);
  }
  return from_epsilon_doubled(sys, c);
}

inline std::string format_entries_epsilon(const RootSystem& sys, const std::vector<Weight>& entries) {
  if (entries.empty()) return "()";
  std::string out;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j) out += ';';
    out += format_epsilon(sys, entries[j]);
  }
  return out;
}

inline std::string format_blocked_epsilon(const BlockedElement& x) {
  std::string out;
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    if (k) out += " | ";
    out += format_entries_epsilon(x.system(), x.part(k).entries());
  }
  return out;
}

// ---- JSON ------------------------------------------------------------------

inline nlohmann::json weight_json(const Weight& w) { return nlohmann::json(w.vec()); }

inline Weight weight_from_json(const RootSystem& sys, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("weight must be a JSON array of integers");
  std::vector<int> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("weight coordinates must be integers");
    c.push_back(x.get<int>());
  }
  Weight w(std::move(c));
  sys.check_weight(w);
  return w;
}

inline nlohmann::json entries_json(const std::vector<Weight>& ws) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& w : ws) a.push_back(weight_json(w));
  return a;
}

inline nlohmann::json system_json(const RootSystem& sys) {
  return {{"type", std::string(1, type_letter(sys.type()))}, {"rank", sys.rank()}};
}

/// {"type":"A","rank":2,"blocks":[{"lambda":[1,1],"entries":[[1,0],...],
/// "parts":[[1,0],...]}, ...]}
inline nlohmann::json to_json(const BlockedElement& x) {
  nlohmann::json j = system_json(x.system());
  j["blocks"] = nlohmann::json::array();
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    j["blocks"].push_back({{"lambda", weight_json(x.block(k).lambda)},
                           {"entries", entries_json(x.part(k).entries())},
                           {"parts", entries_json(x.block(k).decomposition.parts)}});
  }
  return j;
}

inline std::shared_ptr<const RootSystem> system_from_json(const nlohmann::json& j) {
  if (!j.contains("type") || !j["type"].is_string() || j["type"].get<std::string>().size() != 1)
    throw InvalidInput("JSON needs a one-letter \"type\"");
  if (!j.contains("rank") || !j["rank"].is_number_integer()) throw InvalidInput("JSON needs an integer \"rank\"");
  auto t = parse_type_letter(j["type"].get<std::string>()[0]);
  if (!t) throw InvalidInput("unknown Cartan type in JSON");
  return RootSystem::make(*t, j["rank"].get<int>());
}

/// Blocks without "parts" use the default decomposition of "lambda".
inline BlockedElement blocked_from_json(const nlohmann::json& j) {
  auto sys = system_from_json(j);
  if (!j.contains("blocks") || !j["blocks"].is_array()) throw InvalidInput("JSON needs a \"blocks\" array");
  std::vector<Block> blocks;
  std::vector<Weight> flat;
  for (const auto& b : j["blocks"]) {
    if (!b.contains("lambda") || !b.contains("entries")) throw InvalidInput("each block needs \"lambda\" and \"entries\"");
    const Weight lambda = weight_from_json(*sys, b["lambda"]);
    if (b.contains("parts")) {
      MinusculeDecomposition d;
      for (const auto& p : b["parts"]) {
        d.parts.push_back(weight_from_json(*sys, p));
        d.dominant_orbits.push_back(sys->dominant(d.parts.back()));
      }
      Block blk = make_block(*sys, std::move(d));
      if (blk.lambda != lambda) throw InvalidInput("block parts do not sum to lambda");
      blocks.push_back(std::move(blk));
    } else {
      blocks.push_back(make_block(*sys, lambda));
    }
    for (const auto& e : b["entries"]) flat.push_back(weight_from_json(*sys, e));
  }
  return BlockedElement::from_entries(sys, std::move(blocks), flat);
}

inline nlohmann::json to_json(const GrowthDiagram& d) {
  nlohmann::json h = nlohmann::json::array(), v = nlohmann::json::array(), c = nlohmann::json::array();
  for (std::size_t i = 0; i <= d.rows(); ++i) h.push_back(entries_json(d.row(i)));
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::vector<Weight> row;
    for (std::size_t j = 0; j <= d.cols(); ++j) row.push_back(d.v(i, j));
    v.push_back(entries_json(row));
  }
  for (std::size_t i = 0; i <= d.rows(); ++i) {
    std::vector<Weight> row;
    for (std::size_t j = 0; j <= d.cols(); ++j) row.push_back(d.corner(i, j));
    c.push_back(entries_json(row));
  }
  return {{"rows", d.rows()}, {"cols", d.cols()}, {"h", h}, {"v", v}, {"corners", c}};
}

// ---- growth diagram rendering ----------------------------------------------

/// ASCII picture in matrix orientation: corners are '+', each horizontal
/// label sits above its edge and each vertical label to the left of its edge.
template <class Label>
std::string render_growth_diagram(const GrowthDiagram& d, Label label) {
  const std::size_t k = d.rows(), l = d.cols();
  std::size_t hw = 0, vw = 0;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j < l; ++j) hw = std::max(hw, label(d.h(i, j)).size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= l; ++j) vw = std::max(vw, label(d.v(i, j)).size());
  const std::size_t cell = std::max(hw, vw) + 2;
  const std::size_t width = vw + 1 + l * (cell + 1);
  auto x_of = [&](std::size_t j) { return vw + j * (cell + 1); };

  std::ostringstream out;
  auto emit = [&](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  for (std::size_t i = 0; i <= k; ++i) {
    if (l > 0) {
      std::string line(width, ' ');
      for (std::size_t j = 0; j < l; ++j) {
        const std::string s = label(d.h(i, j));
        const std::size_t start = x_of(j) + 1 + (cell - s.size()) / 2;
        line.replace(start, s.size(), s);
      }
      emit(line);
    }
    std::string corners(width, ' ');
    for (std::size_t j = 0; j <= l; ++j) {
      corners[x_of(j)] = '+';
      if (j < l)
        for (std::size_t x = x_of(j) + 1; x < x_of(j + 1); ++x) corners[x] = '-';
    }
    emit(corners);
    if (i == k) break;
    std::string line(width, ' ');
    for (std::size_t j = 0; j <= l; ++j) {
      const std::string s = label(d.v(i, j));
      line.replace(x_of(j) - s.size(), s.size(), s);
      line[x_of(j)] = '|';
    }
    emit(line);
  }
  return out.str();
}

inline std::string render_growth_diagram(const GrowthDiagram& d) {
  return render_growth_diagram(d, [](const Weight& w) { return format_weight(w); });
}

}  // namespace crystal
