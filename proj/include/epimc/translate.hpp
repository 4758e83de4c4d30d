#pragma once

// Reduction-axiom translation of update modalities into the basic language.
// Rewriting is innermost first; output can be exponentially larger than the
// input (shared subterms keep it compact in memory).

#include "epimc/formula.hpp"

namespace epimc {

// (χ → D_G(χ → φ)) ∧ (¬χ → D_G(¬χ → φ)). Throws InputError for an empty group.
Formula dgr(const AgentSet& group, const Formula& topic, const Formula& body);

// Formulas without announcements or quantifiers; throws UnsupportedFragment otherwise.
Formula translate_pc(const Formula& f);
// Formulas without partial communication or quantifiers.
Formula translate_pa(const Formula& f);
// Both kinds of update modality.
Formula translate(const Formula& f);

}  // namespace epimc
