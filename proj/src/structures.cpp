#include "somc/structures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

namespace somc {

bool Vocabulary::hasRelation(const std::string& name) const {
  return relationArity(name).has_value();
}

std::optional<int> Vocabulary::relationArity(const std::string& name) const {
  for (const auto& [n, a] : relations)
    if (n == name) return a;
  return std::nullopt;
}

bool Vocabulary::hasConstant(const std::string& name) const {
  return std::find(constants.begin(), constants.end(), name) != constants.end();
}

const TupleSet& FiniteStructure::tuples(const std::string& rel) const {
  auto it = interp.find(rel);
  if (it == interp.end()) throw InvalidInput("unknown relation: " + rel);
  return it->second;
}

bool FiniteStructure::holds(const std::string& rel, const Tuple& t) const {
  return tuples(rel).count(t) != 0;
}

void FiniteStructure::validate() const {
  if (domainSize <= 0) throw InvalidInput("domain size must be positive");
  for (const auto& [name, arity] : vocab.relations) {
    auto it = interp.find(name);
    if (it == interp.end())
      throw InvalidInput("relation " + name + " has no interpretation");
    for (const Tuple& t : it->second) {
      if ((int)t.size() != arity)
        throw InvalidInput("arity mismatch in relation " + name);
      for (int c : t)
        if (c < 0 || c >= domainSize)
          throw InvalidInput("tuple component out of range in " + name);
    }
  }
  for (const std::string& c : vocab.constants) {
    auto it = constInterp.find(c);
    if (it == constInterp.end())
      throw InvalidInput("constant " + c + " has no interpretation");
    if (it->second < 0 || it->second >= domainSize)
      throw InvalidInput("constant " + c + " out of range");
  }
}

bool FiniteStructure::operator==(const FiniteStructure& o) const {
  return vocab.relations == o.vocab.relations &&
         vocab.constants == o.vocab.constants && domainSize == o.domainSize &&
         interp == o.interp && constInterp == o.constInterp;
}

Vocabulary graphVocabulary() { return Vocabulary{{{"E", 2}}, {}}; }
Vocabulary linearVocabulary() { return Vocabulary{{{"succ", 2}}, {}}; }

static FiniteStructure emptyGraph(int n, Vocabulary vocab,
                                  const std::string& rel) {
  FiniteStructure s;
  s.vocab = std::move(vocab);
  s.domainSize = n;
  s.interp[rel] = {};
  return s;
}

static void addUndirected(FiniteStructure& s, int a, int b) {
  s.interp["E"].insert({a, b});
  s.interp["E"].insert({b, a});
}

FiniteStructure generateHypercube(int m) {
  if (m < 1) throw InvalidInput("hypercube dimension must be >= 1");
  if (m > 16) throw InvalidInput("hypercube dimension too large");
  int n = 1 << m;
  FiniteStructure s = emptyGraph(n, graphVocabulary(), "E");
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < m; ++i)
      if (int w = v ^ (1 << i); v < w) addUndirected(s, v, w);
  return s;
}

FiniteStructure generateLinearDigraph(int n) {
  if (n < 1) throw InvalidInput("linear digraph size must be >= 1");
  FiniteStructure s = emptyGraph(n, linearVocabulary(), "succ");
  for (int i = 0; i + 1 < n; ++i) s.interp["succ"].insert({i, i + 1});
  return s;
}

FiniteStructure generateCycle(int n) {
  if (n < 1) throw InvalidInput("cycle size must be >= 1");
  FiniteStructure s = emptyGraph(n, graphVocabulary(), "E");
  if (n >= 2)
    for (int i = 0; i < n; ++i)
      if (int j = (i + 1) % n; i != j) addUndirected(s, i, j);
  return s;
}

FiniteStructure generateComplete(int n) {
  if (n < 1) throw InvalidInput("complete graph size must be >= 1");
  FiniteStructure s = emptyGraph(n, graphVocabulary(), "E");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) addUndirected(s, i, j);
  return s;
}

// --- oracles ----------------------------------------------------------------

static std::vector<std::vector<int>> adjacency(const FiniteStructure& g,
                                               bool rejectLoops) {
  if (!g.vocab.hasRelation("E") || g.vocab.relationArity("E") != 2)
    throw InvalidInput("expected a graph with binary relation E");
  std::vector<std::vector<int>> adj(g.domainSize);
  for (const Tuple& t : g.tuples("E")) {
    if (t[0] == t[1]) {
      if (rejectLoops) throw InvalidInput("graph has a loop");
      continue;
    }
    if (!g.holds("E", {t[1], t[0]}))
      throw InvalidInput("edge relation is not symmetric");
    adj[t[0]].push_back(t[1]);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool isRegularOracle(const FiniteStructure& g) {
  auto adj = adjacency(g, /*rejectLoops=*/false);
  for (const auto& row : adj)
    if (row.size() != adj[0].size()) return false;
  return true;
}

bool areIsomorphic(const FiniteStructure& g, const FiniteStructure& h) {
  if (g.vocab.relations != h.vocab.relations ||
      g.vocab.constants != h.vocab.constants)
    throw InvalidInput("vocabulary mismatch");
  if (g.domainSize > 8 || h.domainSize > 8)
    throw BudgetExceeded("brute-force isomorphism limited to domain <= 8");
  if (g.domainSize != h.domainSize) return false;
  std::vector<int> perm(g.domainSize);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [rel, _] : g.vocab.relations) {
      TupleSet mapped;
      for (const Tuple& t : g.tuples(rel)) {
        Tuple u(t.size());
        for (size_t i = 0; i < t.size(); ++i) u[i] = perm[t[i]];
        mapped.insert(std::move(u));
      }
      if (mapped != h.tuples(rel)) {
        ok = false;
        break;
      }
    }
    if (ok)
      for (const std::string& c : g.vocab.constants)
        if (perm[g.constInterp.at(c)] != h.constInterp.at(c)) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// BFS bit-labeling: root gets label 0, its neighbors the m unit bits; a vertex
// at BFS depth d must see at least two labeled neighbors whose labels OR to a
// d-bit label consistent with every labeled neighbor.
static bool bfsBitLabeling(const std::vector<std::vector<int>>& adj) {
  int n = (int)adj.size();
  std::vector<long long> label(n, -1);
  std::vector<int> depth(n, -1);
  label[0] = 0;
  depth[0] = 0;
  std::set<long long> used = {0};
  std::queue<int> q;
  {
    int bit = 0;
    for (int w : adj[0]) {
      label[w] = 1LL << bit++;
      depth[w] = 1;
      used.insert(label[w]);
      q.push(w);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (label[w] >= 0) {
        // already labeled: edge must connect Hamming-distance-1 labels
        if (std::popcount((unsigned long long)(label[u] ^ label[w])) != 1)
          return false;
        continue;
      }
      int d = depth[u] + 1;
      long long cand = 0;
      int seen = 0;
      bool ok = true;
      for (int v2 : adj[w])
        if (label[v2] >= 0 && depth[v2] == d - 1) {
          cand |= label[v2];
          ++seen;
        }
      if (d >= 2 && seen < 2) return false;
      if (std::popcount((unsigned long long)cand) != d) return false;
      for (int v2 : adj[w])
        if (label[v2] >= 0 &&
            std::popcount((unsigned long long)(cand ^ label[v2])) != 1)
          ok = false;
      if (!ok || used.count(cand)) return false;
      label[w] = cand;
      depth[w] = d;
      used.insert(cand);
      q.push(w);
    }
  }
  return (int)used.size() == n;
}

bool isHypercubeOracle(const FiniteStructure& g) {
  auto adj = adjacency(g, /*rejectLoops=*/true);
  int n = g.domainSize;
  bool bfsVerdict = false;
  int m = -1;
  if (n >= 2 && std::has_single_bit((unsigned)n)) {
    m = std::countr_zero((unsigned)n);
    bool regular = true;
    size_t edges = 0;
    for (const auto& row : adj) {
      if ((int)row.size() != m) regular = false;
      edges += row.size();
    }
    if (regular && edges == (size_t)m * n)  // m * 2^m directed tuples
      bfsVerdict = bfsBitLabeling(adj);
  }
  if (!bfsVerdict && n <= 8 && m >= 1)
    return areIsomorphic(g, generateHypercube(m));
  return bfsVerdict;
}

// --- file format ------------------------------------------------------------

FiniteStructure parseStructure(const std::string& text) {
  FiniteStructure s;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool haveDomain = false;
  std::string currentRel;
  int currentArity = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw InvalidInput("line " + std::to_string(lineNo) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!haveDomain) {
      int n;
      if (word != "domain" || !(ls >> n) || n <= 0)
        fail("expected 'domain N' with N positive");
      s.domainSize = n;
      haveDomain = true;
      continue;
    }
    if (word == "const") {
      if (!currentRel.empty()) fail("'const' inside relation block");
      std::string name;
      int k;
      if (!(ls >> name >> k)) fail("expected 'const NAME K'");
      if (s.vocab.hasConstant(name)) fail("duplicate constant " + name);
      if (k < 0 || k >= s.domainSize) fail("constant value out of range");
      s.vocab.constants.push_back(name);
      s.constInterp[name] = k;
    } else if (word == "rel") {
      if (!currentRel.empty()) fail("missing 'end' before new relation");
      std::string name;
      int arity;
      if (!(ls >> name >> arity)) fail("expected 'rel NAME ARITY'");
      if (arity < 1) fail("relation arity must be >= 1");
      if (s.vocab.hasRelation(name)) fail("duplicate relation header " + name);
      s.vocab.relations.emplace_back(name, arity);
      s.interp[name] = {};
      currentRel = name;
      currentArity = arity;
    } else if (word == "end") {
      if (currentRel.empty()) fail("'end' outside relation block");
      currentRel.clear();
    } else {
      if (currentRel.empty()) fail("unexpected line outside relation block");
      Tuple t;
      std::istringstream ts(line);
      int c;
      while (ts >> c) {
        if (c < 0 || c >= s.domainSize)
          fail("component " + std::to_string(c) + " out of range");
        t.push_back(c);
      }
      if (!ts.eof()) fail("malformed tuple");
      if ((int)t.size() != currentArity)
        fail("tuple arity mismatch in relation " + currentRel);
      s.interp[currentRel].insert(std::move(t));
    }
  }
  if (!haveDomain) throw InvalidInput("empty structure file");
  if (!currentRel.empty())
    throw InvalidInput("unterminated relation block " + currentRel);
  s.validate();
  return s;
}

std::string serializeStructure(const FiniteStructure& s) {
  std::ostringstream out;
  out << "domain " << s.domainSize << "\n";
  for (const std::string& c : s.vocab.constants)
    out << "const " << c << " " << s.constInterp.at(c) << "\n";
  for (const auto& [name, arity] : s.vocab.relations) {
    out << "rel " << name << " " << arity << "\n";
    for (const Tuple& t : s.tuples(name)) {  // std::set is already sorted
      for (size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

}  // namespace somc
