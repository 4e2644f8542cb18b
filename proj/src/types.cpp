#include "shequid/types.hpp"

namespace shequid {

std::string to_string(Model m) { return m == Model::qg ? "qg" : "cg"; }

std::string to_string(PairMode m) {
  return m == PairMode::nearest_only ? "nearest_only" : "full_pairwise";
}

std::string to_string(FieldOrientation o) {
  return o == FieldOrientation::perpendicular ? "perpendicular" : "parallel";
}

std::string to_string(ReadoutMode m) {
  return m == ReadoutMode::gaussian ? "gaussian" : "counting";
}

Model model_from_string(const std::string& s) {
  if (s == "qg") return Model::qg;
  if (s == "cg") return Model::cg;
  throw std::invalid_argument("model must be \"qg\" or \"cg\", got \"" + s + "\"");
}

PairMode pair_mode_from_string(const std::string& s) {
  if (s == "nearest_only") return PairMode::nearest_only;
  if (s == "full_pairwise") return PairMode::full_pairwise;
  throw std::invalid_argument(
      "mode must be \"nearest_only\" or \"full_pairwise\", got \"" + s + "\"");
}

FieldOrientation orientation_from_string(const std::string& s) {
  if (s == "perpendicular") return FieldOrientation::perpendicular;
  if (s == "parallel") return FieldOrientation::parallel;
  throw std::invalid_argument(
      "E_orientation must be \"perpendicular\" or \"parallel\", got \"" + s +
      "\"");
}

ReadoutMode readout_mode_from_string(const std::string& s) {
  if (s == "gaussian") return ReadoutMode::gaussian;
  if (s == "counting") return ReadoutMode::counting;
  throw std::invalid_argument(
      "readout_mode must be \"gaussian\" or \"counting\", got \"" + s + "\"");
}

}  // namespace shequid
