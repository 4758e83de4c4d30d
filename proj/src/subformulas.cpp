#include "epimc/subformulas.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "epimc/error.hpp"
#include "epimc/syntax.hpp"

namespace epimc {

bool operator<(const ModalityDescriptor& a, const ModalityDescriptor& b) {
  return std::tie(a.announcement, a.group, a.topic) < std::tie(b.announcement, b.group, b.topic);
}

namespace {

// Symbols are keyed by their modality, other elements by formula and label.
using Key = std::tuple<std::optional<ModalityDescriptor>, Formula, Label>;

bool proper_prefix(const Label& a, const Label& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

class Collector {
 public:
  std::vector<LabelledSubformula> elements;
  std::vector<std::vector<std::size_t>> deps;
  std::vector<std::vector<std::size_t>> children;  // same-label parts

  std::size_t visit(const Formula& f, const Label& label, bool in_topic) {
    const std::size_t self = add({std::nullopt, f, label}, f, label, std::nullopt, in_topic);

    switch (f.kind()) {
      case FormulaKind::Atom:
        break;
      case FormulaKind::Not:
        link_child(self, visit(f.operand(), label, in_topic));
        break;
      case FormulaKind::And:
        link_child(self, visit(f.lhs(), label, in_topic));
        link_child(self, visit(f.rhs(), label, in_topic));
        break;
      case FormulaKind::Distributed:
        link_child(self, visit(f.body(), label, in_topic));
        break;
      case FormulaKind::PartialComm:
      case FormulaKind::PubAnn: {
        ModalityDescriptor m{f.kind() == FormulaKind::PubAnn,
                             f.kind() == FormulaKind::PubAnn ? AgentSet{} : f.group(), f.topic()};
        const std::size_t symbol = add({m, f.topic(), label}, f.topic(), label, m, true);
        const std::size_t topic = visit(f.topic(), label, true);
        deps[symbol].push_back(topic);
        link_child(symbol, topic);
        link_child(self, symbol);

        Label inner = label;
        inner.push_back(m);
        const std::size_t body = visit(f.body(), inner, in_topic);
        deps[self].push_back(body);
        break;
      }
      case FormulaKind::ArbPartialComm:
      case FormulaKind::ArbPubAnn:
        throw UnsupportedFragment("the labelling checker does not handle quantified modalities");
    }
    return self;
  }

 private:
  std::size_t add(const Key& key, const Formula& f, const Label& label,
                  std::optional<ModalityDescriptor> symbol, bool in_topic) {
    if (auto it = index_.find(key); it != index_.end()) {
      elements[it->second].in_topic = elements[it->second].in_topic || in_topic;
      return it->second;
    }
    const std::size_t id = elements.size();
    index_.emplace(key, id);
    elements.push_back({f, label, std::move(symbol), in_topic, position_++});
    deps.emplace_back();
    children.emplace_back();

    // Everything under σ·m needs the symbol m^σ first.
    if (!label.empty()) {
      Label outer(label.begin(), label.end() - 1);
      const ModalityDescriptor& last = label.back();
      const Key creator{last, last.topic, outer};
      deps[id].push_back(index_.at(creator));
    }
    return id;
  }

  void link_child(std::size_t parent, std::size_t child) {
    deps[parent].push_back(child);
    children[parent].push_back(child);
  }

  std::map<Key, std::size_t> index_;
  std::size_t position_ = 0;
};

class Orderer {
 public:
  explicit Orderer(const Collector& c) : c_(c), n_(c.elements.size()), part_(n_, std::vector<bool>(n_)) {
    std::vector<bool> done(n_, false);
    for (std::size_t e = 0; e < n_; ++e) fill_parts(e, done);
  }

  std::vector<std::size_t> order() {
    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> out;
    while (out.size() < n_) {
      std::vector<std::size_t> ready;
      for (std::size_t e = 0; e < n_; ++e) {
        if (placed[e]) continue;
        bool ok = true;
        for (std::size_t d : c_.deps[e]) ok = ok && (placed[d] || d == e);
        if (ok) ready.push_back(e);
      }
      std::size_t pick = ready.front();
      bool found = false;
      for (std::size_t cand : ready) {
        bool beaten = false;
        for (std::size_t other : ready) {
          if (other != cand && compare(other, cand) > 0) {
            beaten = true;
            break;
          }
        }
        if (!beaten) {
          pick = cand;
          found = true;
          break;
        }
      }
      if (!found) {
        for (std::size_t cand : ready) {
          if (c_.elements[cand].position < c_.elements[pick].position) pick = cand;
        }
      }
      placed[pick] = true;
      out.push_back(pick);
    }
    return out;
  }

 private:
  // part_[a][b]: element b is a proper part of element a under the same label.
  void fill_parts(std::size_t a, std::vector<bool>& done) {
    if (done[a]) return;
    done[a] = true;
    for (std::size_t child : c_.children[a]) {
      if (c_.elements[child].label != c_.elements[a].label) continue;
      fill_parts(child, done);
      part_[a][child] = true;
      for (std::size_t k = 0; k < n_; ++k) {
        if (part_[child][k]) part_[a][k] = true;
      }
    }
  }

  bool modality_part(std::size_t e) const {
    return c_.elements[e].in_topic || c_.elements[e].is_symbol();
  }

  // The precedence clauses, tried in turn: > 0 when `a` goes first, < 0 when
  // `b` does, 0 when no clause decides.
  int compare(std::size_t a, std::size_t b) const {
    const auto& ea = c_.elements[a];
    const auto& eb = c_.elements[b];
    const auto clauses = {
        +[](const Orderer& o, std::size_t x, std::size_t y) {
          return o.modality_part(x) && o.modality_part(y) &&
                 proper_prefix(o.c_.elements[x].label, o.c_.elements[y].label);
        },
        +[](const Orderer& o, std::size_t x, std::size_t y) {
          return o.modality_part(x) && !o.modality_part(y);
        },
        +[](const Orderer& o, std::size_t x, std::size_t y) {
          return o.c_.elements[x].is_symbol() && !o.c_.elements[y].is_symbol() &&
                 proper_prefix(o.c_.elements[x].label, o.c_.elements[y].label);
        },
        +[](const Orderer& o, std::size_t x, std::size_t y) {
          return !o.modality_part(x) && !o.modality_part(y) &&
                 proper_prefix(o.c_.elements[y].label, o.c_.elements[x].label);
        },
        +[](const Orderer& o, std::size_t x, std::size_t y) {
          return o.c_.elements[x].is_symbol() && o.c_.elements[y].is_symbol() &&
                 proper_prefix(o.c_.elements[x].label, o.c_.elements[y].label);
        },
        +[](const Orderer& o, std::size_t x, std::size_t y) {
          return o.c_.elements[x].label == o.c_.elements[y].label && o.part_[y][x];
        },
    };
    for (auto clause : clauses) {
      if (clause(*this, a, b)) return 1;
      if (clause(*this, b, a)) return -1;
    }
    if (ea.position != eb.position) return ea.position < eb.position ? 1 : -1;
    return 0;
  }

  const Collector& c_;
  std::size_t n_;
  std::vector<std::vector<bool>> part_;
};

}  // namespace

std::vector<LabelledSubformula> ordered_subformulas(const Formula& f) {
  Collector collector;
  collector.visit(f, {}, false);
  std::vector<LabelledSubformula> out;
  for (std::size_t e : Orderer(collector).order()) out.push_back(collector.elements[e]);
  return out;
}

std::string describe(const ModalityDescriptor& modality) {
  if (modality.announcement) return "[! " + print_formula(modality.topic) + "]";
  std::string group;
  for (const auto& a : modality.group) group += (group.empty() ? "" : ",") + a;
  return "[" + group + (group.empty() ? "! " : " ! ") + print_formula(modality.topic) + "]";
}

std::string describe(const LabelledSubformula& element) {
  std::string out = element.is_symbol() ? describe(*element.symbol) : print_formula(element.formula);
  if (!element.label.empty()) {
    out += " ^ ";
    for (std::size_t k = 0; k < element.label.size(); ++k) {
      out += (k == 0 ? "" : " ") + describe(element.label[k]);
    }
  }
  return out;
}

}  // namespace epimc
