#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "octc/curve/curve.hpp"
#include "octc/gkz/wall.hpp"
#include "octc/io/fan_file.hpp"
#include "octc/numeric/numeric.hpp"
#include "octc/series/disk.hpp"

namespace octc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "octc-report/1";

// Everything needed to talk about one brane of one fan.
struct BraneJob {
  FanSpec spec;
  GKZData gkz;
  PBasis pb;
  Brane brane;
  std::optional<int> a0;
};

// brane_index is 1-based into the file's branes; `cone` overrides the primary cone.
BraneJob prepare_brane(const FanSpec& spec, int brane_index, long framing = 0,
                       std::optional<Cone3> cone = std::nullopt);

struct WallJob {
  FanSpec plus, minus;
  GKZData gkz_plus, gkz_minus;
  WallData wall;
  WallPBases pbases;
  WallCrossing wc;
  CurveEquation H_plus, H_minus;  // symbolic framing
  std::optional<CurveEquation> H_plus2;
  IdentificationReport ident;
};

// Classification, p-bases, relations, curves and the exact identification.
WallJob prepare_wall(const FanSpec& plus, const FanSpec& minus, int brane_index = 1);

// Which x relation exact term matching certifies, against the variant with
// the framing coefficient of the q_1 exponent doubled.
struct FramingRelationCheck {
  bool applicable = false;  // x rule depends on the framing
  std::string certified, alternative;
  bool certified_passes = false, alternative_passes = false;
  std::vector<TermMismatch> alternative_mismatches;
};
FramingRelationCheck framing_relation_check(const WallJob& job);
std::string framing_relation_note(const FramingRelationCheck& fr);

std::string input_digest(const std::string& text);  // FNV-1a 64, hex
Json report_header(const std::string& command, const std::vector<std::string>& args);
void add_input(Json& report, const std::string& role, const FanSpec& spec);
void add_check(Json& report, const std::string& name, bool ok, const std::string& detail, Json extra = Json::object());

Json series_json(const ExactSeries& s);
Json series_json(const FloatSeries& s);
Json disk_json(const DiskPotential<CycloNumber>& d);
Json disk_json(const DiskPotential<cplx>& d);
Json wall_json(const WallJob& job);
Json verdict_json(const OctcVerdict& v, const NumericConfig& cfg);
Json monodromy_json(const MonodromyReport& m);
Json validation_json(const ValidationReport& v);

}  // namespace octc
