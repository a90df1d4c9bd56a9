#pragma once

#include "scedeco/evolution.hpp"
#include "scedeco/lineage.hpp"

namespace scedeco {

// Reconstructs a run from its log alone: rebuilds the setup from the
// embedded config snapshot and re-executes the run while checking every
// recomputed event against the recorded one. Any divergence — a flipped
// verdict bit, a truncated tail, a foreign config — raises
// corruption_error; an unsupported format raises version_error.
coevolution_run replay(const lineage_log& log);

}  // namespace scedeco
