#pragma once

#include <functional>

#include "scedeco/adaptation.hpp"
#include "scedeco/system.hpp"

namespace scedeco::oracle {

// Ground-truth checkers for the shipped benchmark families, written as a
// deliberately separate code path from the engine's episode execution:
// gridworld walks are resolved by cycle detection rather than stepping to
// the horizon, goals and measures are interpreted directly from their
// names. Small instances only.

// Independent adapts_to verdict. Understands gridworld and boolfit clause
// parameter records and the vocabulary their environments register.
bool oracle_adapts_to(const system_under_test& s, const adaptation_domain& d);

// Best attainable fitness of the clause's measure over all genomes.
fitness_value oracle_best_fitness(const clause& c);

// Enumerates every genome of the spec in lexicographic order. The visitor
// returns false to stop early.
void for_each_genome(const genome_spec& spec,
                     const std::function<bool(const genome&)>& visit);

}  // namespace scedeco::oracle
