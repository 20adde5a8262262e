// Planar diagram codes, Wirtinger presentations and peripheral systems.
//
// PD convention: a crossing (i, j, k, l) lists its four edge labels
// counterclockwise starting from the incoming under-edge, so the under strand
// runs i -> k.  The over strand runs j -> l for a negative crossing and
// l -> j for a positive one.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rtorsion/presentation.hpp"

namespace rt {

struct PDCode {
  std::vector<std::array<long, 4>> crossings;
  std::size_t size() const { return crossings.size(); }
};

/// Accepts "X(1,4,2,5) X(3,6,4,1) ...", "PD[X[1,4,2,5], ...]" or "[[1,4,2,5], ...]".
/// Throws std::invalid_argument on malformed text, labels not occurring
/// exactly twice, an under strand entered from the wrong side, or more than
/// one component.
PDCode parse_pd(std::string_view text);
PDCode pd_from_json(const nlohmann::json& j);
void validate_pd(const PDCode& d);

/// A knot group presentation with its peripheral system.
struct MarkedPresentation {
  std::string name;
  FinitePresentation presentation;
  int meridian = 0;
  /// Null-homologous longitude commuting with the meridian.
  GroupWord longitude;
  /// +1 as read from the diagram, -1 when the mirror image was requested.
  int orientation = 1;
  /// All generators are meridians (Wirtinger presentations).
  bool conjugate_generators = false;
};

/// One generator x1, x2, ... per arc (numbered along the knot from the
/// outgoing under-edge of the first crossing), one relator per crossing,
/// meridian x1 and longitude = over-arc word times x1^(-writhe).
MarkedPresentation wirtinger(const PDCode& d, bool mirror = false, std::string name = "");

/// Crossing signs in the order of the PD code.
std::vector<int> crossing_signs(const PDCode& d);
int writhe(const PDCode& d);

/// ⟨a | ⟩ with trivial longitude.
MarkedPresentation unknot();

/// {"name", "pd": [[a,b,c,d], ...], "mirror"?} or
/// {"name", "presentation": {...}, "meridian": "a", "longitude": "word"}.
MarkedPresentation knot_from_json(const nlohmann::json& j);
MarkedPresentation load_knot(const std::string& path);

}  // namespace rt
