#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "subtan/cli.hpp"
#include "subtan/parse.hpp"

namespace subtan::cli {
namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment removed
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    lines.push_back({number++, std::move(line)});
    start = end + 1;
  }
  return lines;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// 0-based offset of the first non-space character at or after `from`.
std::size_t skip_space(const std::string& s, std::size_t from) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

// Items separated by commas and/or whitespace, with their 0-based offsets.
std::vector<std::pair<std::string, std::size_t>> words(const std::string& s, std::size_t from) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = from;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ',' && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i), i);
    i = j;
  }
  return out;
}

struct ParsedMatrix {
  Matrix m;
  std::vector<std::size_t> row_lines;
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : lines_(split_lines(text)) {}

  InputDocument parse() {
    std::map<std::string, std::size_t> seen;
    std::optional<Chart> chart;
    std::map<std::string, ParsedMatrix> matrices;
    InputDocument doc{Tensors{Chart({"x"}), {}, {}, {}, {}}, {}, {}};

    while (next_nonblank()) {
      const Line& line = lines_[pos_++];
      std::size_t key_at = skip_space(line.text, 0);
      std::size_t colon = line.text.find(':', key_at);
      if (colon == std::string::npos) throw ParseError(line.number, key_at + 1, "expected 'key:'");
      std::string key = line.text.substr(key_at, colon - key_at);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
      if (!seen.emplace(key, line.number).second)
        throw ParseError(line.number, key_at + 1, "duplicate section '" + key + "'");
      std::size_t rest = skip_space(line.text, colon + 1);

      if (key == "chart") {
        std::vector<std::string> names;
        for (auto& [w, at] : words(line.text, rest)) names.push_back(w);
        try {
          chart.emplace(names);
        } catch (const Error& e) {
          throw ParseError(line.number, rest + 1, e.what());
        }
      } else if (key == "pi" || key == "a" || key == "sigma" || key == "omega") {
        if (!chart) throw ParseError(line.number, key_at + 1, "the chart section must come before '" + key + "'");
        if (rest < line.text.size())
          throw ParseError(line.number, rest + 1, "matrix rows go on the lines after '" + key + ":'");
        matrices.emplace(key, matrix(key, line, *chart));
      } else if (key == "checks") {
        for (auto& [w, at] : words(line.text, rest)) {
          if (std::find(known_checks().begin(), known_checks().end(), w) == known_checks().end())
            throw ParseError(line.number, at + 1, "unknown check '" + w + "'");
          doc.checks.push_back(w);
        }
      } else if (key == "seed") {
        auto items = words(line.text, rest);
        std::uint64_t v = 0;
        bool ok = items.size() == 1;
        if (ok) {
          const std::string& w = items[0].first;
          auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
          ok = ec == std::errc() && p == w.data() + w.size();
        }
        if (!ok) throw ParseError(line.number, rest + 1, "seed must be one unsigned integer");
        doc.seed = v;
      } else {
        throw ParseError(line.number, key_at + 1, "unknown section '" + key + "'");
      }
    }

    if (!chart) throw Error(ErrorKind::InvalidInput, "missing chart section");
    if (matrices.empty()) throw Error(ErrorKind::InvalidInput, "at least one of pi, a, sigma, omega is required");
    doc.tensors.chart = *chart;
    const Chart& c = *chart;
    for (const auto& [key, pm] : matrices) {
      if (key == "a") {
        doc.tensors.a = Endo(c, pm.m);
        continue;
      }
      require_antisymmetric(key, pm);
      KVector p(c, 2);
      KForm w(c, 2);
      for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = i + 1; j < c.dim(); ++j) {
          p.add({i, j}, pm.m(i, j));
          w.add({i, j}, pm.m(i, j));
        }
      if (key == "pi") doc.tensors.pi = p;
      if (key == "sigma") doc.tensors.sigma = w;
      if (key == "omega") doc.tensors.omega = w;
    }
    return doc;
  }

 private:
  bool next_nonblank() {
    while (pos_ < lines_.size() && blank(lines_[pos_].text)) ++pos_;
    return pos_ < lines_.size();
  }

  ParsedMatrix matrix(const std::string& key, const Line& header, const Chart& c) {
    const std::size_t n = c.dim();
    ParsedMatrix pm{Matrix(c.vars(), n, n), {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (!next_nonblank() || lines_[pos_].text.find(':') != std::string::npos) {
        std::size_t at = pos_ < lines_.size() ? lines_[pos_].number : header.number;
        throw ParseError(at, 1, "'" + key + "' needs " + std::to_string(n) + " rows, found " + std::to_string(i));
      }
      const Line& row = lines_[pos_++];
      pm.row_lines.push_back(row.number);
      std::size_t start = 0;
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t comma = row.text.find(',', start);
        bool last = j + 1 == n;
        if (last && comma != std::string::npos)
          throw ParseError(row.number, comma + 1, "row has more than " + std::to_string(n) + " entries");
        if (!last && comma == std::string::npos)
          throw ParseError(row.number, row.text.size() + 1,
                           "row has " + std::to_string(j + 1) + " entries, expected " + std::to_string(n));
        std::size_t end = last ? row.text.size() : comma;
        pm.m(i, j) = cell(row, start, end, c);
        start = end + 1;
      }
    }
    return pm;
  }

  static RatFunc cell(const Line& row, std::size_t start, std::size_t end, const Chart& c) {
    std::string text = row.text.substr(start, end - start);
    try {
      return parse_coeff(text, c.vars());
    } catch (const ParseError& e) {
      throw ParseError(row.number, start + e.column(), e.message());
    } catch (const Error& e) {
      throw ParseError(row.number, skip_space(row.text, start) + 1, e.what());
    }
  }

  static void require_antisymmetric(const std::string& key, const ParsedMatrix& pm) {
    const std::size_t n = pm.row_lines.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if ((pm.m(i, j) + pm.m(j, i)).is_zero()) continue;
        std::string where = "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") at line " +
                            std::to_string(pm.row_lines[i]);
        if (i == j) throw Error(ErrorKind::InvalidInput, key + " must be antisymmetric: diagonal entry " + where + " is nonzero");
        throw Error(ErrorKind::InvalidInput, key + " must be antisymmetric: entry " + where + " and entry (" +
                                                 std::to_string(j + 1) + ", " + std::to_string(i + 1) +
                                                 ") at line " + std::to_string(pm.row_lines[j]) + " do not cancel");
      }
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

InputDocument parse_document(std::string_view text) { return DocumentParser(text).parse(); }

}  // namespace subtan::cli
