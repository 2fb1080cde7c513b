#pragma once

#include <vector>

#include "gae/bitstring.hpp"

namespace gae {

/// One agent: the heritable genotype plus the edited copy that was last
/// evaluated. Fitness always refers to the transcript, not the genotype.
struct Individual {
    BitString genotype;
    BitString transcript;
    double fitness = 0.0;
    int edits = 0; // edits applied when the transcript was produced
};

using Population = std::vector<Individual>;

} // namespace gae
