#include "hyperkalman/formula.hpp"

#include <mutex>
#include <unordered_map>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

namespace {

struct Node {
  Conn conn;
  std::uint32_t a = 0;  // var name index, or left child id
  std::uint32_t b = 0;  // right child id
};

class FormulaArenaImpl {
 public:
  static FormulaArenaImpl& instance() {
    static FormulaArenaImpl arena;
    return arena;
  }

  std::uint32_t intern_var(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key(name);
    auto it = var_ids_.find(key);
    std::uint32_t name_idx;
    if (it != var_ids_.end()) {
      name_idx = it->second;
    } else {
      name_idx = static_cast<std::uint32_t>(var_names_.size());
      var_names_.push_back(key);
      var_ids_.emplace(std::move(key), name_idx);
    }
    return intern_locked({Conn::Var, name_idx, 0});
  }

  std::uint32_t intern(Node n) {
    std::lock_guard<std::mutex> lock(mutex_);
    return intern_locked(n);
  }

  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  const std::string& var_name(std::uint32_t name_idx) const {
    return var_names_[name_idx];
  }

 private:
  std::uint32_t intern_locked(Node n) {
    std::uint64_t key = (static_cast<std::uint64_t>(n.conn) << 60) |
                        (static_cast<std::uint64_t>(n.a) << 30) | n.b;
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(n);
    interned_.emplace(key, id);
    return id;
  }

  std::mutex mutex_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::uint32_t> interned_;
  std::vector<std::string> var_names_;
  std::unordered_map<std::string, std::uint32_t> var_ids_;
};

FormulaArenaImpl& arena() { return FormulaArenaImpl::instance(); }

}  // namespace

Formula Formula::var(std::string_view name) {
  return Formula(arena().intern_var(name));
}

Formula Formula::negate(Formula a) {
  return Formula(arena().intern({Conn::Not, a.id_, 0}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(arena().intern({Conn::And, a.id_, b.id_}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(arena().intern({Conn::Or, a.id_, b.id_}));
}

Formula Formula::imp(Formula a, Formula b) {
  return Formula(arena().intern({Conn::Imp, a.id_, b.id_}));
}

Conn Formula::conn() const { return arena().node(id_).conn; }

Formula Formula::left() const {
  const Node& n = arena().node(id_);
  if (n.conn == Conn::Var) throw precondition_error("variable has no children");
  return Formula(n.a);
}

Formula Formula::right() const {
  const Node& n = arena().node(id_);
  if (n.conn == Conn::Var || n.conn == Conn::Not)
    throw precondition_error("node has no right child");
  return Formula(n.b);
}

const std::string& Formula::var_name() const {
  const Node& n = arena().node(id_);
  if (n.conn != Conn::Var) throw precondition_error("not a variable");
  return arena().var_name(n.a);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  // imp := or ('->' imp)?   right-associative
  Formula implication() {
    Formula lhs = disjunction();
    if (eat("->")) return Formula::imp(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (true) {
      skip_ws();
      // Do not consume '|' if it is not there; '|' is a single char.
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        lhs = Formula::disj(lhs, conjunction());
      } else {
        return lhs;
      }
    }
  }

  Formula conjunction() {
    Formula lhs = negation();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        lhs = Formula::conj(lhs, negation());
      } else {
        return lhs;
      }
    }
  }

  Formula negation() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '~') {
      ++pos_;
      return Formula::negate(negation());
    }
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = implication();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw parse_error("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'')
          ++pos_;
        else
          break;
      }
      return Formula::var(text_.substr(start, pos_ - start));
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Conn c) {
  switch (c) {
    case Conn::Var: return 4;
    case Conn::Not: return 3;
    case Conn::And: return 2;
    case Conn::Or: return 1;
    case Conn::Imp: return 0;
  }
  return 0;
}

void format_into(Formula f, std::string& out, int parent_prec, bool right_of_same) {
  Conn c = f.conn();
  int prec = precedence(c);
  bool need_parens =
      prec < parent_prec || (prec == parent_prec && !right_of_same && c == Conn::Imp);
  // Left-associative & and | at equal precedence need parens on the right.
  if (c == Conn::And || c == Conn::Or)
    need_parens = prec < parent_prec || (prec == parent_prec && right_of_same);
  if (need_parens) out += '(';
  switch (c) {
    case Conn::Var:
      out += f.var_name();
      break;
    case Conn::Not:
      out += '~';
      format_into(f.left(), out, precedence(Conn::Not), false);
      break;
    case Conn::And:
      format_into(f.left(), out, prec, false);
      out += " & ";
      format_into(f.right(), out, prec, true);
      break;
    case Conn::Or:
      format_into(f.left(), out, prec, false);
      out += " | ";
      format_into(f.right(), out, prec, true);
      break;
    case Conn::Imp:
      format_into(f.left(), out, prec + 1, false);
      out += " -> ";
      format_into(f.right(), out, prec, true);
      break;
  }
  if (need_parens) out += ')';
}

void closure_visit(Formula f, std::vector<Formula>& out, std::vector<bool>& seen) {
  if (f.id() < seen.size() && seen[f.id()]) return;
  Conn c = f.conn();
  if (c != Conn::Var) {
    closure_visit(f.left(), out, seen);
    if (c != Conn::Not) closure_visit(f.right(), out, seen);
  }
  if (f.id() >= seen.size()) seen.resize(f.id() + 1, false);
  if (!seen[f.id()]) {
    seen[f.id()] = true;
    out.push_back(f);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string format_formula(Formula f) {
  std::string out;
  format_into(f, out, 0, true);
  return out;
}

std::vector<Formula> subformula_closure(std::span<const Formula> roots) {
  std::vector<Formula> out;
  std::vector<bool> seen;
  for (const Formula& f : roots) closure_visit(f, out, seen);
  return out;
}

std::vector<Formula> variables_of(Formula f) {
  std::vector<Formula> vars;
  for (Formula g : subformula_closure(std::span<const Formula>(&f, 1)))
    if (g.conn() == Conn::Var) vars.push_back(g);
  return vars;
}

Formula gn_formula(int n) {
  if (n < 1) throw precondition_error("G_n needs n >= 1");
  std::vector<Formula> vars;
  for (int i = 1; i <= n + 1; ++i)
    vars.push_back(Formula::var("p" + std::to_string(i)));
  bool first = true;
  Formula acc = vars[0];  // overwritten before use
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      Formula disjunct = Formula::conj(Formula::imp(vars[i - 1], vars[j - 1]),
                                       Formula::imp(vars[j - 1], vars[i - 1]));
      acc = first ? disjunct : Formula::disj(acc, disjunct);
      first = false;
    }
  return acc;
}

}  // namespace hyperkalman
