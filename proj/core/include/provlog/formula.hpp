#pragma once

#include <provlog/errors.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace provlog {

enum class Kind : uint8_t { Bot, Top, Atom, And, Or, Imp, Box };

// Immutable, hash-consed modal formula. Copies are pointer-sized, structural
// equality is pointer equality, and ids are dense in allocation order, so
// formulas work directly as keys in bitsets and flat arrays.
//
// Negation and boxdot are derived notation: neg(A) builds A -> false and
// boxdot(A) builds A /\ []A. They never appear as distinct AST cases.
class Formula {
 public:
  Kind kind() const;
  const std::string& name() const;  // Atom only
  Formula left() const;             // And, Or, Imp
  Formula right() const;            // And, Or, Imp
  Formula body() const;             // Box only
  uint32_t id() const;
  int size() const;  // connective count

  bool operator==(const Formula& o) const = default;
  bool operator<(const Formula& o) const { return id() < o.id(); }

  static Formula bot();
  static Formula top();
  static Formula atom(std::string_view name);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula box(Formula b);
  static Formula neg(Formula a);
  static Formula boxdot(Formula a);

  bool is_neg() const;  // Imp with right == bot

  struct Node;
  const Node* raw() const { return node_; }

 private:
  explicit Formula(const Node* n) : node_(n) {}
  const Node* node_;
  friend class Interner;
};

// Text grammar shared with the command line: atoms [a-z][a-zA-Z0-9_]*,
// constants `false`/`true`, prefix `~` `[]` `boxdot`, binary `/\` `\/` `->`
// with `->` right-associative and precedence unary > /\ > \/ > ->.
// Unicode forms are accepted as input aliases. Throws ParseError.
Formula parse(std::string_view text);

// ASCII rendering with minimal parentheses; A -> false prints as ~A.
// print followed by parse is the identity on formulas without internal atoms.
std::string print(Formula f);

// Sub(A): every subformula including A itself, deduplicated, in order of
// first occurrence (preorder, left before right).
std::vector<Formula> subformulas(Formula f);

// Atom names in order of first occurrence.
std::vector<std::string> atoms(Formula f);

// Finite map from atom names to formulas; atoms without an entry stay put.
// Deliberately a standalone class rather than an alias for std::map so that
// unqualified calls to apply() never pull std::apply into overload resolution.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Formula>> items)
      : map_(items) {}

  void set(std::string name, Formula f) {
    map_.insert_or_assign(std::move(name), f);
  }
  const Formula* find(const std::string& name) const {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : &it->second;
  }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

 private:
  std::map<std::string, Formula> map_;
};

// Homomorphic atom replacement; unmapped atoms are left in place.
Formula apply(const Substitution& sigma, Formula f);

/// Implication-nesting measure: 0 on atoms, constants and boxed formulas,
// max over /\ and \/, and max(rho(A)+1, rho(B)) on A -> B.
int rho(Formula f);

struct Classification {
  bool noi;        // every -> occurs inside some []
  bool nnil;       // no nested implication antecedents (equals rho <= 1)
  bool tnnil;      // nnil built up through boxes as well
  bool tnnil_box;  // boolean skeleton over boxed parts that are all tnnil
};

// Each flag is computed from its own inductive definition; in particular the
// nnil flag does not consult rho, so the two can cross-check each other.
Classification classify(Formula f);

struct BoxedDecomposition {
  // Box-free skeleton over the reserved atoms "@0", "@1", ... which the text
  // grammar cannot produce; substituting [](boxed_parts[k]) for "@k"
  // reproduces the input exactly.
  Formula skeleton;
  // Maximal boxed subformulas (their bodies), deduplicated, in order of
  // first occurrence.
  std::vector<Formula> boxed_parts;
};

BoxedDecomposition boxed_decomposition(Formula f);

// Canonical conjunction of all prime implicates of f over the literal
// abstraction that treats atoms and maximal boxed subformulas as opaque.
// Every clause is E -> F with E a conjunction (empty = true) and F a
// disjunction (empty = false) of literals; literals are ordered atoms-first
// lexicographically, clauses lexicographically by literal rank; tautologies
// collapse to `true`. Throws ResourceError beyond max_literals literals.
Formula impl_normal_form(Formula f, int max_literals = 16);

}  // namespace provlog

template <>
struct std::hash<provlog::Formula> {
  std::size_t operator()(const provlog::Formula& f) const noexcept { return f.id(); }
};
