#pragma once

// Model updates. Each takes the topic as a truth set rather than a formula, so
// the same operation serves formula topics and raw bipartitions.

#include "epimc/model.hpp"

namespace epimc {

// R'_i = R_i ∩ (R_{D,S} ∪ ~T). Throws InputError for agents outside the model.
KripkeModel partial_comm_update(const KripkeModel& m, const AgentSet& group,
                                const WorldSet& topic_truthset);

// Edge-deleting announcement: R'_i = R_i ∩ ~T.
KripkeModel pa_edge_update(const KripkeModel& m, const WorldSet& topic_truthset);

// World-removing announcement: keeps only the worlds of T, in their original
// order. Throws EmptyDomainError when T is empty.
KripkeModel pa_world_update(const KripkeModel& m, const WorldSet& topic_truthset);

}  // namespace epimc
