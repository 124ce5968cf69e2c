#pragma once

// Embedded example corpus: the worked examples and reference tuples the library
// must reproduce, and the checks that regenerate them.
//
// Keys:
//   fig1a, fig1b            GKM graph edges for (2,3,3) and (3,3,3)
//   fig2a, fig2b            x_2 and y_2 (one-row classes) for (2,3,3)
//   fig3a, fig3b            x_2 and y_2 (transpose classes) for (2,3,3)
//   fig4                    degree-0 transition block for h(1) = 1, n = 4
//   ex-simple-ptableaux     the six P-tableaux of (4,5,5,5,5), shape (2,1,1,1)
//   ex-nilpotent-insertion  insertion trace of x_1x_3x_4 at (2,3,5,5,5)
//   ex-b1-insertion         insertion trace of x_1^2x_3x_4 at (3,5,5,5,5)
//   ex-b3-insertion         insertion trace of x_5^2x_3(y_2-y_1) at (3,5,5,5,5)
//
// Linear GKM values are stored as coefficient lists over t_1..t_n.

#include <string>
#include <string_view>
#include <vector>

#include "hess/io.hpp"

namespace hess {

// sorted
std::vector<std::string> golden_keys();
// KeyNotFound for unknown keys
const Json& golden(std::string_view key);

struct PaperCheck {
  std::string key;
  std::string description;
  bool pass = false;
  std::string detail;  // first mismatch, empty on success
};

// one entry per golden key, in key order
std::vector<PaperCheck> verify_paper();
PaperCheck verify_golden(std::string_view key);
// runs the check registered for key against substitute data
PaperCheck verify_golden(std::string_view key, const Json& data);

}  // namespace hess
