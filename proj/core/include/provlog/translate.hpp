#pragma once

#include <provlog/formula.hpp>

#include <optional>

namespace provlog {

enum class TranslationKind {
  Leivant,
  BoxFull,
  BoxUp,
  BoxDown,
  NegFull,
  NegUp,
  NegDown,
  NnilStar,
  TnnilPlus,
  TnnilMinus,
  Dagger,
  DDagger,
};

// Fixes atoms and boxed formulas, commutes with /\, guards each disjunct of a
// \/ with boxdot, and translates only the consequent of an implication whose
// antecedent keeps all its arrows inside boxes.
Formula leivant(Formula a);

// The three box translations (`which` must be BoxFull, BoxUp or BoxDown).
// Up and full turn atoms into boxdots and wrap translated implications in a
// boxdot; up leaves boxed subformulas alone while full and down rewrite []A
// to [](full A); down otherwise leaves the formula's shape untouched.
Formula box_translate(Formula a, TranslationKind which);

// The double-negation family (`which` must be NegFull, NegUp or NegDown).
// A subformula A -> false is treated by the negation clause (~A)^t = ~(A^t)
// before the implication clause applies; constants map to themselves.
Formula neg_translate(Formula a, TranslationKind which);

// [A]B: keeps atomic and boxed B, distributes over /\ and \/, and guards an
// implication B1 -> B2 with A', which is A with every occurrence of B1 -> B2
// not under a box replaced by B2.
Formula bracket(Formula a, Formula b);

// Best NNIL approximation of A from below. Throws ResourceError if the
// internal fuel bound is exhausted, which would indicate a termination bug
// rather than a property of the input.
Formula nnil_star(Formula a);

// Best TNNIL approximation: nnil_star of the box-free skeleton with every
// maximal boxed part recursively approximated.
Formula tnnil_plus(Formula a);

// Like tnnil_plus inside boxes, but the outer boolean skeleton is kept as-is.
Formula tnnil_minus(Formula a);

// dagger rewrites every maximal boxed subformula []E to [](ddagger E) and
// otherwise commutes with the connectives; ddagger additionally normalizes
// the result to the canonical implication conjunction.
Formula dagger(Formula a);
Formula ddagger(Formula a);

Formula translate(TranslationKind kind, Formula a);

// Kebab-case names used by the command line ("box-down", "nnil-star", ...).
const char* translation_kind_name(TranslationKind kind);
std::optional<TranslationKind> translation_kind_from_name(std::string_view name);

}  // namespace provlog
