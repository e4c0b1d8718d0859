#include "octc/io/corpus.hpp"

#include <filesystem>
#include <cctype>
#include <map>
#include <optional>

namespace octc {

namespace {

struct Builtin {
  const char* summary;
  const char* text;
};

const std::map<std::string, Builtin>& table() {
  static const std::map<std::string, Builtin> t = {
      {"c3", {"smooth affine C^3", R"(name: c3
points: [1,0,1] [0,1,1] [0,0,1]
cones: [1,2,3]
brane: edge=[2,3] framing=0
)"}},
      {"a1", {"A_1 = [C^2/Z_2] x C, orbifold point 2 on the edge {3,4}", R"(name: a1
points: [1,0,1] [0,1,1] [0,0,1] [0,2,1]
rays: [1,3,4]
cones: [1,3,4]
pbasis: [-2]
brane: edge=[3,4] framing=0
)"}},
      {"kp1o", {"K_P1 + O, the crepant resolution of a1", R"(name: kp1o
points: [1,0,1] [0,1,1] [0,0,1] [0,2,1]
rays: [1,2,3,4]
cones: [1,2,3] [1,2,4]
pbasis: [1]
brane: edge=[2,3] framing=0
)"}},
      {"a1p", {"A_1', two copies of a1 glued along the inner edge {3,4}", R"(name: a1p
points: [1,0,1] [0,1,1] [0,0,1] [0,2,1] [-1,0,1]
rays: [1,3,4,5]
cones: [1,3,4] [3,4,5]
charges: [1,0,-2,0,1] [0,-2,1,1,0]
brane: edge=[3,4] framing=0 cone=[1,3,4]
)"}},
      {"a1pres", {"resolution of a1p at point 2; inner brane on {2,3}", R"(name: a1pres
points: [1,0,1] [0,1,1] [0,0,1] [0,2,1] [-1,0,1]
rays: [1,2,3,4,5]
cones: [1,2,3] [1,2,4] [2,3,5] [2,4,5]
charges: [1,0,-2,0,1] [0,-2,1,1,0]
brane: edge=[2,3] framing=0 cone=[1,2,3]
)"}},
      {"a2", {"A_2 = [C^2/Z_3] x C, orbifold points 2 and 5", R"(name: a2
points: [1,0,1] [0,2,1] [0,0,1] [0,3,1] [0,1,1]
rays: [1,3,4]
cones: [1,3,4]
charges: [0,1,1,0,-2] [0,-2,0,1,1]
pbasis: [1,-2] [-2,1]
brane: edge=[3,4] framing=0
)"}},
      {"a2res", {"partial resolution of a2 at point 2", R"(name: a2res
points: [1,0,1] [0,2,1] [0,0,1] [0,3,1] [0,1,1]
rays: [1,2,3,4]
cones: [1,2,3] [1,2,4]
charges: [0,1,1,0,-2] [0,-2,0,1,1]
pbasis: [0,1] [-2,1]
brane: edge=[2,3] framing=0
brane: edge=[2,4] framing=0
)"}},
      {"c3z3", {"[C^3/Z_3] with the interior point 1", R"(name: c3z3
points: [1,0,1] [0,1,1] [0,0,1] [3,-1,1]
rays: [2,3,4]
cones: [2,3,4]
pbasis: [-3]
brane: edge=[2,3] framing=0
)"}},
      {"kp2", {"K_P2, the crepant resolution of c3z3", R"(name: kp2
points: [1,0,1] [0,1,1] [0,0,1] [3,-1,1]
rays: [1,2,3,4]
cones: [1,2,3] [1,3,4] [1,2,4]
pbasis: [1]
brane: edge=[2,3] framing=0
)"}},
      {"flop_plus", {"resolved conifold, one side of a flop", R"(name: flop_plus
points: [1,0,1] [0,1,1] [0,0,1] [1,-1,1]
cones: [1,2,3] [1,3,4]
pbasis: [1]
brane: edge=[2,3] framing=0
)"}},
      {"flop_minus", {"resolved conifold, the other side of the flop", R"(name: flop_minus
points: [1,0,1] [0,1,1] [0,0,1] [1,-1,1]
cones: [2,3,4] [1,2,4]
pbasis: [-1]
brane: edge=[2,3] framing=0
)"}},
      {"case1_plus", {"flop away from an outer brane on {3,5}", R"(name: case1_plus
points: [1,0,1] [0,1,1] [0,0,1] [1,-1,1] [-1,1,1]
cones: [2,3,5] [1,2,3] [1,3,4]
brane: edge=[3,5] framing=0
)"}},
      {"case1_minus", {"flop away from an outer brane on {3,5}", R"(name: case1_minus
points: [1,0,1] [0,1,1] [0,0,1] [1,-1,1] [-1,1,1]
cones: [2,3,5] [2,3,4] [1,2,4]
brane: edge=[3,5] framing=0
)"}},
      {"twisted", {"non-regular triangulation: twisted inner triangle", R"(name: twisted
note: outer triangle 1,2,3 with a twisted inner triangle 4,5,6; remaining lattice points are orbifold points
points: [0,0,1] [4,0,1] [0,4,1] [1,1,1] [2,1,1] [1,2,1] [1,0,1] [2,0,1] [3,0,1] [0,1,1] [0,2,1] [0,3,1] [1,3,1] [2,2,1] [3,1,1]
rays: [1,2,3,4,5,6]
cones: [1,2,4] [2,5,4] [2,3,5] [3,6,5] [3,1,6] [1,4,6] [4,5,6]
)"}},
  };
  return t;
}

std::string an_text(int n) {
  std::string s = "name: an" + std::to_string(n) + "\npoints: [1,0,1] [0," + std::to_string(n + 1) + ",1] [0,0,1]";
  for (int i = 1; i <= n; ++i) s += " [0," + std::to_string(i) + ",1]";
  s += "\nrays: [1,2,3]\ncones: [1,2,3]\nbrane: edge=[2,3] framing=0\n";
  return s;
}

std::optional<int> an_index(const std::string& name) {
  if (name.size() < 3 || name.rfind("an", 0) != 0) return std::nullopt;
  for (std::size_t i = 2; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  int n = std::stoi(name.substr(2));
  if (n < 1 || n > 40) return std::nullopt;
  return n;
}

}  // namespace

std::vector<CorpusEntry> corpus_listing() {
  std::vector<CorpusEntry> out;
  for (const auto& [name, b] : table()) out.push_back({name, b.summary});
  out.push_back({"an<n>", "A_n generator, e.g. an3: points (1,0),(0,n+1),(0,0),(0,i)"});
  return out;
}

bool is_builtin(const std::string& name) { return table().count(name) || an_index(name); }

std::string builtin_text(const std::string& name) {
  if (auto n = an_index(name)) return an_text(*n);
  auto it = table().find(name);
  if (it == table().end()) throw PreconditionError("unknown built-in fan '" + name + "'");
  return it->second.text;
}

FanSpec builtin_fan(const std::string& name) { return parse_fan_spec(builtin_text(name)); }

FanSpec resolve_fan(const std::string& name_or_path) {
  if (is_builtin(name_or_path)) return builtin_fan(name_or_path);
  if (std::filesystem::exists(name_or_path)) return load_fan_file(name_or_path);
  throw ParseError(0, "'" + name_or_path + "' is neither a built-in fan nor a readable file");
}

}  // namespace octc
