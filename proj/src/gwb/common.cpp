#include "gwb/common.hpp"

#include <numeric>
#include <sstream>

namespace gwb {

std::string to_string(const Tuple& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ',';
    out << t[i];
  }
  out << ')';
  return out.str();
}

// Accepts "2,1", "(2,1)", "[2, 1]" and "2".
Tuple parse_tuple(const std::string& text) {
  Tuple out;
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') continue;
    cleaned.push_back(c);
  }
  if (cleaned.empty()) return out;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InvalidInput("malformed tuple '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed tuple '" + text + "'");
    }
    if (used != item.size()) throw InvalidInput("malformed tuple '" + text + "'");
    out.push_back(value);
  }
  return out;
}

int tuple_sum(const Tuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

}  // namespace gwb
