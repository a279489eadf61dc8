#pragma once

// Abstract syntax, s-expression concrete syntax, and static analysis for
// first-, second-, and third-order formulae.
//
// Third-order variables are typed by a shape: a TO variable of shape
// (a1,...,ak) denotes a set of k-tuples whose i-th component is a relation of
// arity ai over the domain (arity 0 meaning a single domain element).

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "somc/structures.hpp"

namespace somc::logic {

enum class Kind {
  Rel,      // vocabulary relation atom R(t...)
  Var2,     // SO-variable atom X(t...)
  Var3,     // TO-variable atom X(S1,...,Sk); args are SO var names (or FO
            // var names for arity-0 shape components)
  Eq,       // t1 = t2
  Not,
  And,      // n-ary
  Or,       // n-ary
  Implies,
  Iff,
  Ex1, All1,  // FO quantifiers
  Ex2, All2,  // SO quantifiers (with arity)
  Ex3, All3,  // TO quantifiers (with shape)
};

// A term is an FO variable name or a declared constant name; which one it is
// gets resolved against the structure at evaluation time.
using Term = std::string;

struct ToShape {
  std::vector<int> componentArities;
  bool operator==(const ToShape&) const = default;
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string name;             // atom name or bound variable name
  std::vector<Term> terms;      // Rel/Var2 arguments, Eq terms, Var3 args
  int arity = 0;                // Ex2/All2
  ToShape shape;                // Ex3/All3
  std::vector<Formula> kids;
};

// --- constructors -----------------------------------------------------------

Formula mkRel(std::string name, std::vector<Term> terms);
Formula mkVar2(std::string name, std::vector<Term> terms);
Formula mkVar3(std::string name, std::vector<std::string> args);
Formula mkEq(Term a, Term b);
Formula mkNot(Formula f);
Formula mkAnd(std::vector<Formula> fs);   // empty conjunction not allowed
Formula mkOr(std::vector<Formula> fs);
Formula mkImplies(Formula a, Formula b);
Formula mkIff(Formula a, Formula b);
Formula mkEx1(std::string v, Formula body);
Formula mkAll1(std::string v, Formula body);
Formula mkEx2(std::string v, int arity, Formula body);
Formula mkAll2(std::string v, int arity, Formula body);
Formula mkEx3(std::string v, ToShape shape, Formula body);
Formula mkAll3(std::string v, ToShape shape, Formula body);

bool structurallyEqual(const Formula& a, const Formula& b);

// Generates fresh variable names ("x1", "x2", ... for a base "x"); used by
// the library builders so no name is bound twice along any path.
class FreshNames {
 public:
  std::string next(const std::string& base) { return base + std::to_string(++counter_); }
 private:
  long counter_ = 0;
};

// --- concrete syntax --------------------------------------------------------

// Grammar (s-expressions): (rel NAME term...), (var2 NAME term...),
// (var3 NAME sovar...), (eq t1 t2), (not f), (and f...), (or f...),
// (implies f g), (iff f g), (ex1 x f), (all1 x f), (ex2 X k f),
// (all2 X k f), (ex3 X (a1 ... ak) f), (all3 X (a1 ... ak) f).
//
// Static checks: binder/use arity and shape agreement. When a vocabulary is
// supplied, relation names and arities are checked against it and terms that
// are not bound FO variables must be declared constants.
Formula parseFormula(const std::string& text);
Formula parseFormula(const std::string& text, const Vocabulary& vocab);

std::string prettyPrint(const Formula& f);

// --- analysis ---------------------------------------------------------------

struct FormulaStats {
  std::set<std::string> freeFoVars;
  std::set<std::string> freeSoVars;
  std::set<std::string> freeToVars;
  int maxSoArity = 0;  // max over all SO binding sites
  // (variable, existential?) in binding-site preorder
  std::vector<std::pair<std::string, bool>> soQuantifierPolarity;
  int toDepth = 0;  // max nesting depth of TO quantifiers
};

FormulaStats analyze(const Formula& f);

// True when no variable name is bound at two nested binding sites.
bool noRebindingOnPath(const Formula& f);

}  // namespace somc::logic
