#pragma once

#include <stdexcept>
#include <string>

namespace shequid {

/// Hypothesis under which the two-interferometer system evolves.
/// qg: the gravitational interaction mediates branch-dependent phases
/// (entangling). cg: the interaction is classical and contributes only a
/// global phase, leaving the joint state a product state.
enum class Model { qg, cg };

/// Which arm pairs contribute branch phases.
/// nearest_only keeps the side-by-side pair at separation d; full_pairwise
/// adds the cross pairs at 2L and the far pair at 2L + d.
enum class PairMode { nearest_only, full_pairwise };

/// Orientation of the applied static electric field relative to the axis
/// separating the two side-by-side channels. perpendicular (field along the
/// channels) polarizes the columns side-on and the line-line force is
/// repulsive; parallel gives head-to-tail dipoles and attraction.
enum class FieldOrientation { perpendicular, parallel };

/// Detector noise model: additive Gaussian on the port probability, or
/// per-sample counting statistics (binomial with a fixed number of counts).
enum class ReadoutMode { gaussian, counting };

std::string to_string(Model m);
std::string to_string(PairMode m);
std::string to_string(FieldOrientation o);
std::string to_string(ReadoutMode m);

Model model_from_string(const std::string& s);
PairMode pair_mode_from_string(const std::string& s);
FieldOrientation orientation_from_string(const std::string& s);
ReadoutMode readout_mode_from_string(const std::string& s);

}  // namespace shequid
