// Reads one JSON document per line from stdin; exits nonzero unless
// parse-then-reserialize reproduces every line byte for byte.
#include <iostream>
#include <string>

#include "json.hpp"

int main() {
  std::string line;
  int checked = 0;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded()) {
      std::cerr << "unparseable: " << line << "\n";
      return 1;
    }
    if (parsed.dump() != line) {
      std::cerr << "round trip differs:\n  in:  " << line << "\n  out: " << parsed.dump() << "\n";
      return 1;
    }
    ++checked;
  }
  return checked > 0 ? 0 : 1;
}
