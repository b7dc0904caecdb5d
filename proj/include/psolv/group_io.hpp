#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "psolv/errors.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/permutation.hpp"

namespace psolv {

/// Parses the group text format:
///   degree <n>
///   gen <cycles>     e.g. gen (1 2)(3 4), 1-indexed disjoint cycles
/// Blank lines and '#' comments are ignored. Errors carry line numbers.
inline PermGroup parse_group_text(std::istream& in, const std::string& source_name = "<input>") {
  unsigned degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::string line;
  std::size_t line_number = 0;
  auto fail = [&](const std::string& message) -> void {
    throw input_error(source_name + ":" + std::to_string(line_number) + ": " + message);
  };
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t hash = line.find('#');
    std::string body = line.substr(start, hash == std::string::npos ? std::string::npos
                                                                    : hash - start);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r'))
      body.pop_back();
    if (body.empty()) continue;

    std::istringstream fields(body);
    std::string keyword;
    fields >> keyword;
    if (keyword == "degree") {
      if (have_degree) fail("duplicate degree line");
      long long value = -1;
      if (!(fields >> value) || value < 1 || value > static_cast<long long>(kMaxDegree))
        fail("degree must be an integer in 1.." + std::to_string(kMaxDegree));
      std::string rest;
      if (fields >> rest) fail("unexpected trailing text after degree");
      degree = static_cast<unsigned>(value);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree) fail("gen line before degree line");
      std::string cycles;
      std::getline(fields, cycles);
      try {
        gens.push_back(permutation_from_cycles(cycles, degree));
      } catch (const input_error& e) {
        fail(e.what());
      }
    } else {
      fail("unknown keyword '" + keyword + "' (expected 'degree' or 'gen')");
    }
  }
  if (!have_degree) {
    line_number = 0;
    fail("missing degree line");
  }
  return PermGroup(degree, gens);
}

inline PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open group file: " + path);
  return parse_group_text(in, path);
}

/// Serializes a group in the same text format. Parsing the output yields an
/// equal group (same order, same generator membership).
inline std::string group_to_text(const PermGroup& group) {
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (const auto& g : group.generators()) out += "gen " + to_cycle_string(g) + "\n";
  return out;
}

}  // namespace psolv
