#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "scop/core.hpp"

namespace scop::testsupport {

// A randomized concept system: 2..8 states (first is ground), 1..5
// contexts besides the bounds, each with a random non-empty eigenstate
// set; roughly a third of the (context, state) rows get an explicit
// random transition distribution supported on the eigenstates.
inline Scop random_scop(std::mt19937& rng) {
  std::uniform_int_distribution<int> state_count(2, 8);
  std::uniform_int_distribution<int> context_count(1, 5);
  int ns = state_count(rng);
  int nc = context_count(rng);

  ScopBuilder b;
  std::vector<std::string> states;
  for (int i = 0; i < ns; ++i) {
    std::string id = "s" + std::to_string(i);
    states.push_back(id);
    b.add_state(id, "state " + id, i == 0);
  }

  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::string> contexts;
  std::vector<std::vector<std::string>> eigensets;
  for (int c = 0; c < nc; ++c) {
    std::string id = "c" + std::to_string(c);
    contexts.push_back(id);
    b.add_context(id, "context " + id);
    std::vector<std::string> eigen;
    while (eigen.empty())
      for (const auto& s : states)
        if (coin(rng)) eigen.push_back(s);
    b.set_eigenstates(id, eigen);
    eigensets.push_back(eigen);
  }

  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::uniform_int_distribution<int> third(0, 2);
  for (int c = 0; c < nc; ++c) {
    for (const auto& from : states) {
      if (third(rng) != 0) continue;
      bool from_is_eigen = false;
      for (const auto& e : eigensets[c])
        if (e == from) from_is_eigen = true;
      if (from_is_eigen) continue;  // eigenstates stay fixed
      std::map<std::string, double> row;
      double total = 0.0;
      for (const auto& q : eigensets[c]) {
        row[q] = unit(rng);
        total += row[q];
      }
      for (auto& [_, v] : row) v /= total;
      b.set_transition_row(contexts[c], from, row);
    }
  }

  // a couple of properties with random weights, some pinned to 1
  std::uniform_int_distribution<int> prop_count(0, 4);
  int np = prop_count(rng);
  for (int a = 0; a < np; ++a) {
    std::string id = "a" + std::to_string(a);
    b.add_property(id, "property " + id);
    for (const auto& s : states) {
      int r = third(rng);
      if (r == 0)
        b.set_property_weight(s, id, 1.0);
      else if (r == 1)
        b.set_property_weight(s, id, unit(rng) * 0.99);
    }
  }
  return b.build();
}

}  // namespace scop::testsupport
