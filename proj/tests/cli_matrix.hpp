#pragma once

// Fixed invocations covering every verb, used for the determinism checks.

#include <string>
#include <vector>

namespace stabscope::testing {

inline const std::vector<std::vector<std::string>>& cli_matrix() {
  static const std::vector<std::vector<std::string>> matrix{
      {"exc", "char", "5/4"},
      {"exc", "points", "-3/2"},
      {"curve", "emit", "--depth", "4", "--from", "-1", "--to", "1", "--format", "json"},
      {"curve", "emit", "--depth", "4", "--from", "-1", "--to", "1", "--format", "csv"},
      {"curve", "emit", "--depth", "4", "--from", "-1", "--to", "1", "--format", "svg"},
      {"classify-point", "--x", "1/3", "--y", "-1/3", "--depth", "8"},
      {"dlp", "--ch0", "5", "--ch1", "2", "--ch2", "-11/10", "--depth", "6"},
      {"charge", "eval", "--s", "1/2", "--q", "0", "--ch0", "2", "--ch1", "3", "--ch2", "3/2"},
      {"charge", "normalize", "--c0", "0,-1/2", "--c1", "0,1", "--c2", "-1,0"},
      {"stab-region", "--label", "1/2", "--depth", "5", "--grid", "-1,1,0,2,7"},
      {"triple", "make", "--pattern", "right", "--base", "1/2"},
      {"mutate", "left", "--triple", "adj:1"},
      {"mutate", "right", "--triple", "adj:1", "--slot", "first"},
      {"classify-cell", "--triple", "adj:0", "--m", "1,2,3", "--phi", "0.1,0.7,1.4", "--depth", "6"},
      {"classify-cell", "--triple", "adj:1", "--m", "1,1,1", "--exact-units", "0:4/5,3/5;1:-3/5,-4/5;1:4/5,-3/5"},
      {"transport", "--triple", "adj:1", "--m", "1,1,1", "--exact-units", "0:4/5,3/5;1:-3/5,-4/5;1:4/5,-3/5"},
      {"wall", "--v", "1,0,0", "--w", "2,3,3/2"},
      {"walls", "--v", "1,0,-1", "--pool-depth", "2", "--window", "-2,2,-2,2"},
      {"walls", "--v", "1,0,-1", "--pool-depth", "2", "--window", "-2,2,-2,2", "--format", "svg"},
  };
  return matrix;
}

}  // namespace stabscope::testing
