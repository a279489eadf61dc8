#pragma once

// Finite relational structures over {0,...,n-1}, generators for the structure
// families used throughout the workbench (hypercubes, linear digraphs, cycles,
// complete graphs), independent brute-force graph oracles, and a line-based
// text format for structure files.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace somc {

// Raised for malformed parameters, parse errors, violated preconditions.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation exceeds its enumeration/size budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

using Tuple = std::vector<int>;
using TupleSet = std::set<Tuple>;

struct Vocabulary {
  // Relation name -> arity, in declaration order.
  std::vector<std::pair<std::string, int>> relations;
  std::vector<std::string> constants;

  bool hasRelation(const std::string& name) const;
  std::optional<int> relationArity(const std::string& name) const;
  bool hasConstant(const std::string& name) const;
};

struct FiniteStructure {
  Vocabulary vocab;
  int domainSize = 0;  // domain is {0,...,domainSize-1}
  std::map<std::string, TupleSet> interp;
  std::map<std::string, int> constInterp;

  const TupleSet& tuples(const std::string& rel) const;
  bool holds(const std::string& rel, const Tuple& t) const;
  void validate() const;  // checks arities and component ranges

  bool operator==(const FiniteStructure& o) const;
};

// --- generators -------------------------------------------------------------

// Undirected graph vocabulary {E} with E stored symmetrically.
Vocabulary graphVocabulary();
// Linear digraph vocabulary {succ}.
Vocabulary linearVocabulary();

// Q_m: vertices are bitstrings of length m (numbered by value), edges between
// Hamming-distance-1 pairs, both directed tuples present.
FiniteStructure generateHypercube(int m);
// succ = {(i,i+1) : 0 <= i < n-1} on domain {0,...,n-1}.
FiniteStructure generateLinearDigraph(int n);
// Undirected n-cycle (n = 1 is a single loop-free vertex, n = 2 one edge).
FiniteStructure generateCycle(int n);
// Complete loop-free undirected graph K_n.
FiniteStructure generateComplete(int n);

// --- oracles ----------------------------------------------------------------

// Deterministic analogue of the paper's guess-a-labeling NP algorithm:
// power-of-two size check, m-regularity check, BFS bit-labeling; brute-force
// isomorphism fallback for |V| <= 8. Throws InvalidInput if g is not a
// symmetric loop-free graph over {E}.
bool isHypercubeOracle(const FiniteStructure& g);

// True iff all vertices have equal degree. Throws InvalidInput when the edge
// relation is not symmetric.
bool isRegularOracle(const FiniteStructure& g);

// Brute-force isomorphism over all domain permutations; both domains must
// have size <= 8 (BudgetExceeded otherwise) and equal vocabularies.
bool areIsomorphic(const FiniteStructure& g, const FiniteStructure& h);

// --- file format ------------------------------------------------------------

FiniteStructure parseStructure(const std::string& text);
std::string serializeStructure(const FiniteStructure& s);

}  // namespace somc
