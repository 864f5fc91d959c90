#include "subtan/chart.hpp"

#include <cctype>
#include <set>

#include "subtan/error.hpp"

namespace subtan {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Chart::Chart(std::vector<std::string> names) {
  if (names.empty()) throw Error(ErrorKind::InvalidInput, "chart needs at least one coordinate");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw Error(ErrorKind::InvalidInput, "bad coordinate name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error(ErrorKind::InvalidInput, "duplicate coordinate name '" + n + "'");
  }
  vars_ = make_vars(std::move(names));
}

void require_same_chart(const Chart& a, const Chart& b, const char* what) {
  if (!(a == b)) throw Error(ErrorKind::ChartMismatch, std::string(what) + ": charts differ");
}

}  // namespace subtan
