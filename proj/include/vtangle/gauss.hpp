#pragma once

#include <string>
#include <vector>

#include "vtangle/term.hpp"

namespace vtangle {

enum class Layer { Over, Under };

struct GaussPass {
  int label;
  Layer layer;
  Sign sign;
  bool operator==(const GaussPass&) const = default;
};

// Combinatorial closed virtual link: per component, the cyclic sequence of
// crossing passes. Every label occurs exactly twice, once over and once
// under, with the same sign.
struct GaussCode {
  std::vector<std::vector<GaussPass>> components;
  bool operator==(const GaussCode&) const = default;
};

// O/U notation, components separated by ",": "O1+U2+O3+U1+O2+U3+".
// A bare "o" denotes a zero-crossing unknot component; empty text is the
// empty link. Throws SyntaxError / PairingError.
GaussCode parse_gauss(const std::string& text);

std::string gauss_str(const GaussCode& g);

// Realizes the code as a closed sliced term over one-letter intervals with
// exactly one real crossing per label, transporting strands with virtual
// crossings. Sweep: walk each component's passes in order, birth strands by
// cups on first need, close them by caps when exhausted.
MorphismTerm compile_gauss(const GaussCode& g);

}  // namespace vtangle
