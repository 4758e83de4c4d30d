#include "epimc/syntax.hpp"

#include <cctype>
#include <sstream>

#include "epimc/error.hpp"

namespace epimc {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char peek() {
    skip_ws();
    return peek_raw();
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string identifier() {
    skip_ws();
    if (!is_ident_start(peek_raw())) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Possibly empty comma-separated agent list, stopping before `stop`.
  AgentSet agent_list(char stop) {
    AgentSet group;
    if (peek() == stop) return group;
    group.insert(identifier());
    while (accept(",")) group.insert(identifier());
    return group;
  }

  Formula formula() {
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return Formula::negation(formula());
    }
    if (c == '(') return parenthesised();
    if (c == '[' || c == '<') return modality(c == '[');
    if (!is_ident_start(c)) fail("expected formula");

    const std::size_t start = pos_;
    const std::string word = identifier();
    if (word == "true") return Formula::top();
    if (word == "false") return Formula::bottom();
    if (word == "K") {
      std::string agent = identifier();
      return Formula::knows(std::move(agent), formula());
    }
    if (word == "D" && peek() == '{') {
      ++pos_;
      AgentSet group = agent_list('}');
      expect("}");
      if (group.empty()) throw EmptyGroupError(start);
      return Formula::distributed(std::move(group), formula());
    }
    return Formula::atom(word);
  }

  Formula parenthesised() {
    expect("(");
    Formula lhs = formula();
    if (accept(")")) return lhs;

    std::string op;
    for (std::string_view candidate : {"<->", "->", "&", "|"}) {
      if (accept(candidate)) {
        op = candidate;
        break;
      }
    }
    if (op.empty()) fail("expected binary operator or ')'");

    do {
      Formula rhs = formula();
      if (op == "&") {
        lhs = Formula::conjunction(lhs, rhs);
      } else if (op == "|") {
        lhs = Formula::disjunction(lhs, rhs);
      } else if (op == "->") {
        lhs = Formula::implies(lhs, rhs);
      } else {
        lhs = Formula::iff(lhs, rhs);
      }
    } while (accept(op));
    expect(")");
    return lhs;
  }

  Formula modality(bool box) {
    const std::string close = box ? "]" : ">";
    ++pos_;  // '[' or '<'
    const char next = peek_raw();

    if (next == '!') {
      ++pos_;
      if (accept("*")) {
        expect(close);
        Formula body = formula();
        return box ? Formula::arbitrary_announcement(std::move(body))
                   : Formula::arbitrary_announcement_diamond(std::move(body));
      }
      Formula topic = formula();
      expect(close);
      Formula body = formula();
      return box ? Formula::announcement(std::move(topic), std::move(body))
                 : Formula::announcement_diamond(std::move(topic), std::move(body));
    }

    if (next == '*') {
      ++pos_;
      AgentSet group = agent_list(close[0]);
      expect(close);
      Formula body = formula();
      return box ? Formula::arbitrary_comm(std::move(group), std::move(body))
                 : Formula::arbitrary_comm_diamond(std::move(group), std::move(body));
    }

    AgentSet group = agent_list('!');
    expect("!");
    Formula topic = formula();
    expect(close);
    Formula body = formula();
    return box ? Formula::partial_comm(std::move(group), std::move(topic), std::move(body))
               : Formula::comm_diamond(std::move(group), std::move(topic), std::move(body));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string group_text(const AgentSet& group) {
  std::string out;
  for (const auto& agent : group) {
    if (!out.empty()) out += ",";
    out += agent;
  }
  return out;
}

bool is_negation(const Formula& f) { return f.kind() == FormulaKind::Not; }

class Printer {
 public:
  std::string print(const Formula& f) {
    std::ostringstream out;
    emit(out, f);
    return out.str();
  }

 private:
  void emit(std::ostream& out, const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Atom:
        out << f.name();
        return;
      case FormulaKind::Not:
        emit_negation(out, f.operand());
        return;
      case FormulaKind::And:
        emit_conjunction(out, f);
        return;
      case FormulaKind::Distributed:
        if (f.group().size() == 1) {
          out << "K " << *f.group().begin() << ' ';
        } else {
          out << "D{" << group_text(f.group()) << "} ";
        }
        emit(out, f.body());
        return;
      case FormulaKind::PartialComm:
        emit_comm(out, '[', ']', f.group(), f.topic());
        emit(out, f.body());
        return;
      case FormulaKind::ArbPartialComm:
        out << "[*" << (f.group().empty() ? "" : " ") << group_text(f.group()) << "] ";
        emit(out, f.body());
        return;
      case FormulaKind::PubAnn:
        out << "[! ";
        emit(out, f.topic());
        out << "] ";
        emit(out, f.body());
        return;
      case FormulaKind::ArbPubAnn:
        out << "[!*] ";
        emit(out, f.body());
        return;
    }
  }

  void emit_comm(std::ostream& out, char open, char close, const AgentSet& group,
                 const Formula& topic) {
    out << open;
    out << (group.empty() ? " " : group_text(group)) << (group.empty() ? "! " : " ! ");
    emit(out, topic);
    out << close << ' ';
  }

  // Prints ~inner, recognising the derived forms that expand to a negation.
  void emit_negation(std::ostream& out, const Formula& inner) {
    if (inner == Formula::bottom()) {
      out << "true";
      return;
    }
    switch (inner.kind()) {
      case FormulaKind::PartialComm:
        if (is_negation(inner.body())) {
          emit_comm(out, '<', '>', inner.group(), inner.topic());
          emit(out, inner.body().operand());
          return;
        }
        break;
      case FormulaKind::ArbPartialComm:
        if (is_negation(inner.body())) {
          out << "<*" << (inner.group().empty() ? "" : " ") << group_text(inner.group()) << "> ";
          emit(out, inner.body().operand());
          return;
        }
        break;
      case FormulaKind::PubAnn:
        if (is_negation(inner.body())) {
          out << "<! ";
          emit(out, inner.topic());
          out << "> ";
          emit(out, inner.body().operand());
          return;
        }
        break;
      case FormulaKind::ArbPubAnn:
        if (is_negation(inner.body())) {
          out << "<!*> ";
          emit(out, inner.body().operand());
          return;
        }
        break;
      case FormulaKind::And:
        if (is_negation(inner.lhs()) && is_negation(inner.rhs()) && inner.lhs() != Formula::top()) {
          out << '(';
          emit(out, inner.lhs().operand());
          out << " | ";
          emit(out, inner.rhs().operand());
          out << ')';
          return;
        }
        if (is_negation(inner.rhs())) {
          out << '(';
          emit(out, inner.lhs());
          out << " -> ";
          emit(out, inner.rhs().operand());
          out << ')';
          return;
        }
        break;
      default:
        break;
    }
    out << '~';
    emit(out, inner);
  }

  void emit_conjunction(std::ostream& out, const Formula& f) {
    if (f == Formula::bottom()) {
      out << "false";
      return;
    }
    // (a -> b) & (b -> a) prints as (a <-> b).
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    if (is_negation(l) && is_negation(r) && l.operand().kind() == FormulaKind::And &&
        r.operand().kind() == FormulaKind::And) {
      const Formula& li = l.operand();
      const Formula& ri = r.operand();
      if (is_negation(li.rhs()) && is_negation(ri.rhs()) && li.lhs() == ri.rhs().operand() &&
          ri.lhs() == li.rhs().operand()) {
        out << '(';
        emit(out, li.lhs());
        out << " <-> ";
        emit(out, li.rhs().operand());
        out << ')';
        return;
      }
    }
    out << '(';
    emit(out, l);
    out << " & ";
    emit(out, r);
    out << ')';
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

std::string print_formula(const Formula& f) { return Printer().print(f); }

std::vector<Formula> parse_query_file(std::string_view text) {
  std::vector<Formula> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.push_back(parse_formula(line));
    start = end + 1;
  }
  return out;
}

}  // namespace epimc
