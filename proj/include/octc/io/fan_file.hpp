#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octc/fan/stacky_fan.hpp"

namespace octc {

struct BraneSpec {
  Edge edge{0, 0};
  long framing = 0;
  std::optional<Cone3> cone;
};

struct FanSpec {
  ExtendedStackyFan fan;
  std::optional<IntMatrix> charges;  // R x k
  std::optional<std::vector<RatVec>> pbasis;
  std::vector<BraneSpec> branes;
  std::string note;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format, one key per line, '#' starts a comment:
//   name: a1
//   points: [1,0,1] [0,1,1] [0,0,1] [0,2,1]
//   rays: [1,3,4]
//   cones: [1,3,4]
//   charges: [0,-2,1,1]          (kernel basis vectors, each of length R)
//   pbasis: [-2]                 (vectors in L-dual coordinates)
//   brane: edge=[3,4] framing=0 cone=[1,3,4]
//   note: free text
// Structural problems (bad indices, wrong lengths) are parse errors.
FanSpec parse_fan_spec(const std::string& text);
FanSpec load_fan_file(const std::string& path);
std::string render_fan_spec(const FanSpec& spec);

}  // namespace octc
