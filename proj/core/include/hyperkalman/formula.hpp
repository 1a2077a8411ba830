#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperkalman {

enum class Conn : std::uint8_t { Var, Not, And, Or, Imp };

/// A propositional formula over the signature {∧,∨,→,¬} with named
/// variables. Formulas are hash-consed into a process-wide arena, so equal
/// trees share one node and a subformula closure is a DAG; a Formula value
/// is just the node id.
class Formula {
 public:
  static Formula var(std::string_view name);
  static Formula negate(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);

  Conn conn() const;
  Formula left() const;             // Not: the child; binary: left child
  Formula right() const;            // binary connectives only
  const std::string& var_name() const;

  std::uint32_t id() const { return id_; }
  friend bool operator==(const Formula& a, const Formula& b) = default;
  friend bool operator<(const Formula& a, const Formula& b) { return a.id_ < b.id_; }

 private:
  explicit Formula(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
  friend class FormulaArena;
};

/// Grammar: variables are identifiers (p0, p1, q, x'...); connectives are
/// `~ & | ->` with precedence ~ > & > | > ->; `->` is right-associative,
/// `&` and `|` left-associative; parentheses group. Throws parse_error
/// with the byte position on bad input.
Formula parse_formula(std::string_view text);

/// Canonical rendering with minimal parentheses; parse(format(f)) == f.
std::string format_formula(Formula f);

/// All subformulas of the inputs, children before parents, deduplicated,
/// in first-traversal order (inputs processed left to right).
std::vector<Formula> subformula_closure(std::span<const Formula> roots);

/// Variables occurring in f, in first-occurrence order.
std::vector<Formula> variables_of(Formula f);

/// G_n = the disjunction over 1 <= i < j <= n+1 of (p_i -> p_j) & (p_j -> p_i),
/// disjuncts in (i,j) lexicographic order, left-associated. Requires n >= 1.
Formula gn_formula(int n);

}  // namespace hyperkalman
