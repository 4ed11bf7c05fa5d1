#pragma once

#include <string>

#include "brauer/covering.hpp"

namespace brauer {

struct MatchReport {
  bool match = false;
  std::string detail;
  int model_dimension = 0;
  int quotient_dimension = 0;
};

// Checks that sending vertices and arrows of the graph's quiver to the
// corresponding idempotents and arrows of the covering truncation defines an
// isomorphism: quivers correspond, every relation of both presentations
// vanishes in the truncation model, the images generate it, and its
// dimension equals that of the path-algebra quotient. For skew graphs all
// special cycles at a vertex copy must also coincide in the model.
MatchReport presentations_match(const BrauerGraph& g, const CoveredGraph& c);

}  // namespace brauer
