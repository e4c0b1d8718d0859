#include "octc/io/fan_file.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace octc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::vector<BigRational>> bracket_lists(int line, const std::string& v) {
  std::vector<std::vector<BigRational>> out;
  static const std::regex br(R"(\[([^\[\]]*)\])");
  std::string rest = std::regex_replace(v, br, "");
  if (!trim(rest).empty()) throw ParseError(line, "unexpected text outside brackets: '" + trim(rest) + "'");
  for (std::sregex_iterator it(v.begin(), v.end(), br), end; it != end; ++it) {
    std::vector<BigRational> row;
    std::stringstream ss((*it)[1].str());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (tok.empty()) throw ParseError(line, "empty list entry");
      try {
        row.push_back(parse_rational(tok));
      } catch (const std::exception&) {
        throw ParseError(line, "not a number: '" + tok + "'");
      }
    }
    out.push_back(row);
  }
  return out;
}

long as_long(int line, const BigRational& q) {
  if (!is_integer(q)) throw ParseError(line, "expected an integer, got " + to_string(q));
  return to_long(num(q));
}

std::vector<long> int_list(int line, const std::vector<BigRational>& v) {
  std::vector<long> out;
  for (const auto& q : v) out.push_back(as_long(line, q));
  return out;
}

}  // namespace

FanSpec parse_fan_spec(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<std::string> name;
  std::vector<Point3> points;
  std::optional<std::vector<int>> rays;
  std::vector<Cone3> cones;
  std::vector<std::vector<long>> charges;
  std::optional<std::vector<RatVec>> pbasis;
  std::vector<std::pair<int, BraneSpec>> branes;
  std::string note;
  bool have_points = false, have_cones = false;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(line, "expected 'key: value'");
    std::string key = trim(s.substr(0, colon)), val = trim(s.substr(colon + 1));
    if (key == "name") {
      if (val.empty()) throw ParseError(line, "empty name");
      name = val;
    } else if (key == "note") {
      note = val;
    } else if (key == "points") {
      for (const auto& row : bracket_lists(line, val)) {
        if (row.size() != 3) throw ParseError(line, "points must be integer triples");
        auto v = int_list(line, row);
        points.push_back({v[0], v[1], v[2]});
      }
      have_points = true;
    } else if (key == "rays") {
      auto lists = bracket_lists(line, val);
      if (lists.size() != 1) throw ParseError(line, "rays must be one bracketed list");
      std::vector<int> r;
      for (long x : int_list(line, lists[0])) r.push_back(static_cast<int>(x));
      rays = r;
    } else if (key == "cones") {
      for (const auto& row : bracket_lists(line, val)) {
        if (row.size() != 3) throw ParseError(line, "cones must be index triples");
        auto v = int_list(line, row);
        cones.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
      }
      have_cones = true;
    } else if (key == "charges") {
      for (const auto& row : bracket_lists(line, val)) charges.push_back(int_list(line, row));
    } else if (key == "pbasis") {
      pbasis = bracket_lists(line, val);
    } else if (key == "brane") {
      BraneSpec b;
      bool have_edge = false;
      static const std::regex kv(R"((\w+)\s*=\s*(\[[^\]]*\]|-?\d+))");
      std::string rest = std::regex_replace(val, kv, "");
      if (!trim(rest).empty()) throw ParseError(line, "unexpected brane field text: '" + trim(rest) + "'");
      for (std::sregex_iterator it(val.begin(), val.end(), kv), end; it != end; ++it) {
        std::string k = (*it)[1].str(), v = (*it)[2].str();
        if (k == "edge") {
          auto l = bracket_lists(line, v);
          if (l.size() != 1 || l[0].size() != 2) throw ParseError(line, "edge must be an index pair");
          auto e = int_list(line, l[0]);
          b.edge = {static_cast<int>(e[0]), static_cast<int>(e[1])};
          have_edge = true;
        } else if (k == "framing") {
          b.framing = std::stol(v);
        } else if (k == "cone") {
          auto l = bracket_lists(line, v);
          if (l.size() != 1 || l[0].size() != 3) throw ParseError(line, "cone must be an index triple");
          auto c = int_list(line, l[0]);
          b.cone = Cone3{static_cast<int>(c[0]), static_cast<int>(c[1]), static_cast<int>(c[2])};
        } else {
          throw ParseError(line, "unknown brane field '" + k + "'");
        }
      }
      if (!have_edge) throw ParseError(line, "brane needs edge=[i,j]");
      branes.push_back({line, b});
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (!name) throw ParseError(line, "missing name");
  if (!have_points || points.empty()) throw ParseError(line, "missing points");
  if (!have_cones || cones.empty()) throw ParseError(line, "missing cones");
  const int R = static_cast<int>(points.size());
  auto check_index = [&](int i, const std::string& what) {
    if (i < 1 || i > R) throw ParseError(line, what + " index " + std::to_string(i) + " out of range 1.." + std::to_string(R));
  };
  for (const auto& c : cones)
    for (int i : c) check_index(i, "cone");
  if (!rays) {
    std::vector<int> r;
    for (const auto& c : cones) r.insert(r.end(), c.begin(), c.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    rays = r;
  }
  for (int i : *rays) check_index(i, "ray");
  FanSpec spec;
  spec.fan = ExtendedStackyFan(*name, points, *rays, cones);
  spec.note = note;
  const int k = R - 3;
  if (!charges.empty()) {
    if (static_cast<int>(charges.size()) != k)
      throw ParseError(line, "expected " + std::to_string(k) + " charge vectors, got " + std::to_string(charges.size()));
    IntMatrix m(R, k);
    for (int j = 0; j < k; ++j) {
      if (static_cast<int>(charges[j].size()) != R) throw ParseError(line, "charge vectors must have length R");
      for (int i = 0; i < R; ++i) m(i, j) = charges[j][i];
    }
    spec.charges = m;
  }
  if (pbasis) {
    for (const auto& v : *pbasis)
      if (static_cast<int>(v.size()) != k) throw ParseError(line, "pbasis vectors must have length R-3");
    spec.pbasis = pbasis;
  }
  for (const auto& [ln, b] : branes) {
    check_index(b.edge[0], "brane edge");
    check_index(b.edge[1], "brane edge");
    if (b.cone)
      for (int i : *b.cone) check_index(i, "brane cone");
    spec.branes.push_back(b);
  }
  return spec;
}

FanSpec load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open fan file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan_spec(ss.str());
}

std::string render_fan_spec(const FanSpec& spec) {
  std::ostringstream o;
  const auto& fan = spec.fan;
  o << "name: " << fan.name() << "\n";
  if (!spec.note.empty()) o << "note: " << spec.note << "\n";
  o << "points:";
  for (const auto& p : fan.points()) o << " [" << p[0] << "," << p[1] << "," << p[2] << "]";
  o << "\nrays: [";
  for (std::size_t i = 0; i < fan.rays().size(); ++i) o << (i ? "," : "") << fan.rays()[i];
  o << "]\ncones:";
  for (const auto& c : fan.cones()) o << " [" << c[0] << "," << c[1] << "," << c[2] << "]";
  o << "\n";
  if (spec.charges) {
    o << "charges:";
    for (std::size_t j = 0; j < spec.charges->cols(); ++j) {
      o << " [";
      for (std::size_t i = 0; i < spec.charges->rows(); ++i) o << (i ? "," : "") << to_string((*spec.charges)(i, j));
      o << "]";
    }
    o << "\n";
  }
  if (spec.pbasis) {
    o << "pbasis:";
    for (const auto& v : *spec.pbasis) {
      o << " [";
      for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << to_string(v[i]);
      o << "]";
    }
    o << "\n";
  }
  for (const auto& b : spec.branes) {
    o << "brane: edge=[" << b.edge[0] << "," << b.edge[1] << "] framing=" << b.framing;
    if (b.cone) o << " cone=[" << (*b.cone)[0] << "," << (*b.cone)[1] << "," << (*b.cone)[2] << "]";
    o << "\n";
  }
  return o.str();
}

}  // namespace octc
