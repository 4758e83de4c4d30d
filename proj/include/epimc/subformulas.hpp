#pragma once

// The labelled subformula list consumed by the global checker.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "epimc/formula.hpp"

namespace epimc {

// One update modality inside a label: [S!χ], or [χ!] when `announcement`.
struct ModalityDescriptor {
  bool announcement = false;
  AgentSet group;
  Formula topic;

  friend bool operator==(const ModalityDescriptor& a, const ModalityDescriptor& b) {
    return a.announcement == b.announcement && a.group == b.group && a.topic == b.topic;
  }
  friend bool operator<(const ModalityDescriptor& a, const ModalityDescriptor& b);
};

using Label = std::vector<ModalityDescriptor>;

struct LabelledSubformula {
  // For a modality symbol, the formula is its topic and `symbol` is set.
  Formula formula;
  Label label;
  std::optional<ModalityDescriptor> symbol;
  bool in_topic = false;   // occurs inside the topic of some modality
  std::size_t position = 0;  // pre-order position of the first occurrence

  bool is_symbol() const noexcept { return symbol.has_value(); }
};

// All subformulas and modality symbols of `f`, each with the sequence of
// enclosing modalities, ordered so that everything an element depends on comes
// first. Throws UnsupportedFragment for [*S] and [!*].
std::vector<LabelledSubformula> ordered_subformulas(const Formula& f);

std::string describe(const LabelledSubformula& element);
std::string describe(const ModalityDescriptor& modality);

}  // namespace epimc
