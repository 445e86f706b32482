#include "cshapes/reasoner.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>

namespace cshapes {

using Op = Concept::Op;

namespace {

constexpr int kTop = 0;
constexpr int kBottom = 1;

struct CNode {
  Op op;
  int a = -1, b = -1;
  int role = -1;  // 2 * base + inverted
  int name = -1;  // atom or individual id
};

// NNF concepts, hash-consed. Every id has its negation interned too once
// close() has run.
struct ConceptTable {
  std::vector<CNode> nodes;
  std::vector<int> negOf;
  std::map<std::tuple<int, int, int, int, int>, int> index;
  std::map<Name, int> atoms, individuals, roles;

  ConceptTable() {
    raw({Op::Top});
    raw({Op::Bottom});
  }

  int raw(const CNode& n) {
    auto key = std::make_tuple(static_cast<int>(n.op), n.a, n.b, n.role, n.name);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(n);
    negOf.push_back(-1);
    index.emplace(key, id);
    return id;
  }

  static int idOf(std::map<Name, int>& m, const Name& n) {
    return m.emplace(n, static_cast<int>(m.size())).first->second;
  }
  int roleId(const Role& r) { return 2 * idOf(roles, r.name) + (r.inverted ? 1 : 0); }
  int individual(const Name& n) { return idOf(individuals, n); }

  int conj(int a, int b) {
    if (a == kBottom || b == kBottom) return kBottom;
    if (a == kTop) return b;
    if (b == kTop || a == b) return a;
    if (a > b) std::swap(a, b);
    return raw({Op::And, a, b});
  }
  int disj(int a, int b) {
    if (a == kTop || b == kTop) return kTop;
    if (a == kBottom) return b;
    if (b == kBottom || a == b) return a;
    if (a > b) std::swap(a, b);
    return raw({Op::Or, a, b});
  }

  int neg(int id) {
    if (negOf[static_cast<std::size_t>(id)] >= 0) return negOf[static_cast<std::size_t>(id)];
    CNode n = nodes[static_cast<std::size_t>(id)];
    int r = 0;
    switch (n.op) {
      case Op::Top: r = kBottom; break;
      case Op::Bottom: r = kTop; break;
      case Op::Atom:
      case Op::Nominal: r = raw({Op::Not, id}); break;
      case Op::Not: r = n.a; break;
      case Op::And: r = disj(neg(n.a), neg(n.b)); break;
      case Op::Or: r = conj(neg(n.a), neg(n.b)); break;
      case Op::Exists: r = raw({Op::Forall, neg(n.a), -1, n.role}); break;
      case Op::Forall: r = raw({Op::Exists, neg(n.a), -1, n.role}); break;
    }
    negOf[static_cast<std::size_t>(id)] = r;
    negOf[static_cast<std::size_t>(r)] = id;
    return r;
  }

  int from(const Concept& c, bool pos = true) {
    switch (c.op()) {
      case Op::Top: return pos ? kTop : kBottom;
      case Op::Bottom: return pos ? kBottom : kTop;
      case Op::Atom: {
        int a = raw({Op::Atom, -1, -1, -1, idOf(atoms, c.name())});
        return pos ? a : neg(a);
      }
      case Op::Nominal: {
        int a = raw({Op::Nominal, -1, -1, -1, individual(c.name())});
        return pos ? a : neg(a);
      }
      case Op::Not: return from(c.left(), !pos);
      case Op::And:
        return pos ? conj(from(c.left()), from(c.right())) : disj(from(c.left(), false), from(c.right(), false));
      case Op::Or:
        return pos ? disj(from(c.left()), from(c.right())) : conj(from(c.left(), false), from(c.right(), false));
      case Op::Exists:
      case Op::Forall: {
        bool ex = (c.op() == Op::Exists) == pos;
        int body = from(c.left(), pos);
        return raw({ex ? Op::Exists : Op::Forall, body, -1, roleId(c.role())});
      }
    }
    return kTop;
  }

  void close() {
    for (std::size_t i = 0; i < nodes.size(); ++i) neg(static_cast<int>(i));
  }

  void flatten(int id, std::vector<int>& out) const {
    const CNode& n = nodes[static_cast<std::size_t>(id)];
    if (n.op == Op::And) {
      flatten(n.a, out);
      flatten(n.b, out);
    } else {
      out.push_back(id);
    }
  }
};

}  // namespace

struct Reasoner::Compiled {
  ConceptTable table;
  std::vector<std::pair<Role, Role>> roleIncls;
  std::vector<int> globals;                  // added to every node
  std::map<int, std::vector<int>> unfold;    // atom/nominal id -> consequences

  int conjAll(const std::vector<int>& xs) {
    int r = kTop;
    for (int x : xs) r = table.conj(r, x);
    return r;
  }

  // C1 ⊓ ... ⊓ Cn ⊑ rhs, rewritten until the left side is an atom, a
  // nominal, or nothing at all.
  void absorb(std::vector<int> lhs, int rhs) {
    if (rhs == kTop) return;
    std::erase(lhs, kTop);
    if (std::count(lhs.begin(), lhs.end(), kBottom)) return;
    if (lhs.empty()) {
      globals.push_back(rhs);
      return;
    }
    auto pick = [&](auto pred) -> int {
      for (std::size_t i = 0; i < lhs.size(); ++i)
        if (pred(table.nodes[static_cast<std::size_t>(lhs[i])].op)) return static_cast<int>(i);
      return -1;
    };
    auto restRhs = [&](int skip) {
      std::vector<int> rest;
      for (std::size_t i = 0; i < lhs.size(); ++i)
        if (static_cast<int>(i) != skip) rest.push_back(lhs[i]);
      return table.disj(table.neg(conjAll(rest)), rhs);
    };
    if (int i = pick([](Op o) { return o == Op::Atom || o == Op::Nominal; }); i >= 0) {
      unfold[lhs[static_cast<std::size_t>(i)]].push_back(restRhs(i));
      return;
    }
    if (int i = pick([](Op o) { return o == Op::Exists; }); i >= 0) {
      const CNode n = table.nodes[static_cast<std::size_t>(lhs[static_cast<std::size_t>(i)])];
      int next = table.raw({Op::Forall, restRhs(i), -1, n.role ^ 1});
      std::vector<int> body;
      table.flatten(n.a, body);
      absorb(body, next);
      return;
    }
    if (int i = pick([](Op o) { return o == Op::Or; }); i >= 0) {
      const CNode n = table.nodes[static_cast<std::size_t>(lhs[static_cast<std::size_t>(i)])];
      for (int side : {n.a, n.b}) {
        std::vector<int> next;
        for (std::size_t j = 0; j < lhs.size(); ++j)
          if (static_cast<int>(j) != i) next.push_back(lhs[j]);
        table.flatten(side, next);
        absorb(next, rhs);
      }
      return;
    }
    globals.push_back(restRhs(-1));
  }

  void addAxiom(const Axiom& ax) {
    if (ax.isRole()) {
      table.roleId(ax.rlhs);
      table.roleId(ax.rrhs);
      roleIncls.push_back({ax.rlhs, ax.rrhs});
      return;
    }
    std::vector<int> lhs;
    table.flatten(table.from(ax.lhs), lhs);
    absorb(lhs, table.from(ax.rhs));
  }
};

namespace {

// Everything one consistency run needs, frozen.
struct Problem {
  const ConceptTable* table;
  const std::vector<int>* globals;
  const std::map<int, std::vector<int>>* unfold;
  std::vector<std::vector<char>> sub;  // role id x role id
  std::size_t words = 0;
  int individuals = 0;
  ReasonerLimits limits;
  bool subRole(int r, int s) const { return sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] != 0; }
};

std::vector<std::vector<char>> roleClosure(std::size_t baseRoles, const ConceptTable& t,
                                           const std::vector<std::pair<Role, Role>>& incls) {
  std::size_t n = 2 * baseRoles;
  std::vector<std::vector<char>> sub(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) sub[i][i] = 1;
  auto id = [&](const Role& r) { return static_cast<std::size_t>(2 * t.roles.at(r.name) + (r.inverted ? 1 : 0)); };
  for (const auto& [l, r] : incls) {
    sub[id(l)][id(r)] = 1;
    sub[id(l) ^ 1][id(r) ^ 1] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (sub[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (sub[k][j]) sub[i][j] = 1;
  return sub;
}

struct Budget {
  std::size_t nodes = 0;
  std::size_t firings = 0;
};

// Branch levels a fact rests on, sorted.
using Deps = std::vector<int>;

Deps unite(const Deps& a, const Deps& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Deps out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Edge {
  int to;
  int role;  // seen from the owning node
  Deps deps;
};

struct TNode {
  std::vector<std::uint64_t> bits;
  std::vector<int> label;  // insertion order
  std::vector<Deps> deps;  // parallel to label
  std::vector<Edge> edges;
  int parent = -1;
  int rep = -1;
  bool nominal = false;
  bool pruned = false;
};

// Completion graph with dependency-directed backjumping: a failed branch
// whose clash does not rest on its own choice skips the alternative.
class Tableau {
 public:
  Tableau(const Problem& p, Budget& budget) : p_(p), budget_(budget) {}

  int newNode(int parent, bool nominal) {
    if (++budget_.nodes > p_.limits.maxNodes) throw ResourceLimit("node budget exhausted");
    TNode n;
    n.bits.assign(p_.words, 0);
    n.bits[0] |= std::uint64_t{1} << kTop;  // implicit, never in the label
    n.parent = parent;
    n.nominal = nominal;
    int id = static_cast<int>(nodes_.size());
    n.rep = id;
    nodes_.push_back(std::make_shared<TNode>(std::move(n)));
    for (int g : *p_.globals) add(id, g, {});
    return id;
  }

  void seed(const std::vector<std::pair<int, int>>& conceptAssertions,
            const std::vector<std::tuple<int, int, int>>& roleAssertions) {
    for (int i = 0; i < p_.individuals; ++i) {
      int n = newNode(-1, true);
      add(n, p_.table->index.at(std::make_tuple(static_cast<int>(Op::Nominal), -1, -1, -1, i)), {});
    }
    for (auto [ind, c] : conceptAssertions) add(ind, c, {});
    for (auto [s, r, o] : roleAssertions) addEdge(s, o, r, {});
  }

  bool clash() const { return clash_; }

  bool solve() {
    while (true) {
      if (!saturate()) return false;
      auto status = blocking();
      bool progress = false;
      int branchNode = -1, branchConcept = -1;
      // Resolved disjunctions stay resolved; everything else is kept.
      auto pending = std::move(ors_);
      ors_.clear();
      for (auto [ix, c] : pending) {
        auto x = static_cast<std::size_t>(ix);
        const CNode& n = cnode(c);
        if (clash_ || !live(x) || has(x, n.a) || has(x, n.b)) continue;
        if (has(x, neg(n.a))) {
          add(ix, n.b, unite(depsOf(x, c), depsOf(x, neg(n.a))));
          progress = true;
        } else if (has(x, neg(n.b))) {
          add(ix, n.a, unite(depsOf(x, c), depsOf(x, neg(n.b))));
          progress = true;
        } else {
          // Lowest node first, as in a scan by creation order.
          if (status[x] != kIndirect && (branchNode < 0 || ix < branchNode)) {
            branchNode = ix;
            branchConcept = c;
          }
          ors_.push_back({ix, c});
        }
      }
      if (clash_) return false;
      if (progress) continue;
      if (branchNode >= 0) {
        const CNode& n = cnode(branchConcept);
        int first = p_.limits.reverseBranches ? n.b : n.a;
        Deps orDeps = depsOf(static_cast<std::size_t>(branchNode), branchConcept);
        int level = level_ + 1;
        Tableau copy = *this;
        copy.level_ = level;
        copy.add(branchNode, first, unite(orDeps, {level}));
        if (copy.solve()) return true;
        Deps why = std::move(copy.clashDeps_);
        auto it = std::find(why.begin(), why.end(), level);
        if (it == why.end()) {
          clash_ = true;
          clashDeps_ = std::move(why);
          return false;
        }
        why.erase(it);
        add(branchNode, neg(first), unite(orDeps, why));
        continue;
      }
      if (!expandExists(status)) return true;
    }
  }

 private:
  static constexpr char kNone = 0, kDirect = 1, kIndirect = 2;

  const CNode& cnode(int c) const { return p_.table->nodes[static_cast<std::size_t>(c)]; }
  int neg(int c) const { return p_.table->negOf[static_cast<std::size_t>(c)]; }
  const TNode& nd(std::size_t x) const { return *nodes_[x]; }
  TNode& mut(std::size_t x) {
    auto& p = nodes_[x];
    if (p.use_count() > 1) p = std::make_shared<TNode>(*p);
    return *p;
  }
  bool live(std::size_t x) const { return nd(x).rep == static_cast<int>(x); }
  int find(int x) const {
    while (nd(static_cast<std::size_t>(x)).rep != x) x = nd(static_cast<std::size_t>(x)).rep;
    return x;
  }
  bool has(std::size_t x, int c) const {
    return (nd(x).bits[static_cast<std::size_t>(c) >> 6] >> (static_cast<std::size_t>(c) & 63)) & 1U;
  }
  const Deps& depsOf(std::size_t x, int c) const {
    static const Deps none;
    const auto& label = nd(x).label;
    auto it = std::find(label.begin(), label.end(), c);
    return it == label.end() ? none : nd(x).deps[static_cast<std::size_t>(it - label.begin())];
  }

  void fire() {
    if (++budget_.firings > p_.limits.maxRuleFirings) throw ResourceLimit("rule budget exhausted");
    if ((budget_.firings & 1023) == 0 && p_.limits.deadline && std::chrono::steady_clock::now() > *p_.limits.deadline)
      throw ResourceLimit("deadline passed");
  }

  void add(int x, int c, const Deps& d) {
    if (nd(static_cast<std::size_t>(x)).pruned) return;
    x = find(x);
    auto ux = static_cast<std::size_t>(x);
    if (has(ux, c)) return;
    fire();
    if (!clash_ && (c == kBottom || has(ux, neg(c)))) {
      clash_ = true;
      clashDeps_ = c == kBottom ? d : unite(d, depsOf(ux, neg(c)));
    }
    TNode& n = mut(ux);
    n.bits[static_cast<std::size_t>(c) >> 6] |= std::uint64_t{1} << (static_cast<std::size_t>(c) & 63);
    n.label.push_back(c);
    n.deps.push_back(d);
    work_.push_back({x, c});
    if (cnode(c).op == Op::Or) ors_.push_back({x, c});
    if (cnode(c).op == Op::Exists) exists_.push_back({x, c});
  }

  bool hasEdge(int x, int y, int r) const {
    for (const auto& e : nd(static_cast<std::size_t>(x)).edges)
      if (e.to == y && e.role == r) return true;
    return false;
  }

  // Pushes ∀ concepts of `from` across an edge labelled r (seen from `from`).
  void propagate(int from, int to, int r, const Deps& edgeDeps) {
    const auto& node = nd(static_cast<std::size_t>(from));
    for (std::size_t k = 0; k < node.label.size(); ++k) {
      const CNode& n = cnode(node.label[k]);
      if (n.op == Op::Forall && p_.subRole(r, n.role)) add(to, n.a, unite(node.deps[k], edgeDeps));
    }
  }

  void addEdge(int x, int y, int r, const Deps& d) {
    if (nd(static_cast<std::size_t>(x)).pruned || nd(static_cast<std::size_t>(y)).pruned) return;
    x = find(x);
    y = find(y);
    if (hasEdge(x, y, r)) return;
    fire();
    mut(static_cast<std::size_t>(x)).edges.push_back({y, r, d});
    if (!hasEdge(y, x, r ^ 1)) mut(static_cast<std::size_t>(y)).edges.push_back({x, r ^ 1, d});
    propagate(x, y, r, d);
    propagate(y, x, r ^ 1, d);
  }

  void merge(int x, int y, const Deps& d) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    fire();
    auto ux = static_cast<std::size_t>(x);
    // A tree node folding into a nominal loses its subtree. Handing the
    // subtree to the nominal would make it unblockable and let merges
    // regrow it forever.
    std::vector<char> pruned(nodes_.size(), 0);
    if (!nd(ux).nominal)
      for (std::size_t i = ux + 1; i < nodes_.size(); ++i)
        if (live(i) && !nd(i).nominal && nd(i).parent >= 0 &&
            (nd(i).parent == x || pruned[static_cast<std::size_t>(nd(i).parent)]))
          pruned[i] = 1;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (pruned[i]) {
        detach(static_cast<int>(i), y);
        mut(i).pruned = true;
      }
    auto edges = detach(x, y);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nd(i).parent == x) mut(i).parent = y;
    std::vector<int> label = nd(ux).label;
    std::vector<Deps> deps = nd(ux).deps;
    for (std::size_t k = 0; k < label.size(); ++k) add(y, label[k], unite(deps[k], d));
    for (const auto& e : edges)
      if (!pruned[static_cast<std::size_t>(e.to)]) addEdge(y, e.to == x ? y : e.to, e.role, unite(e.deps, d));
  }

  // Unlinks x from its neighbours and forwards it to y. Returns x's edges.
  std::vector<Edge> detach(int x, int y) {
    auto ux = static_cast<std::size_t>(x);
    TNode& n = mut(ux);
    n.rep = y;
    auto edges = std::move(n.edges);
    n.edges.clear();
    for (const auto& e : edges)
      if (e.to != x)
        std::erase_if(mut(static_cast<std::size_t>(e.to)).edges, [&](const Edge& f) { return f.to == x; });
    return edges;
  }

  void process(int x, int c) {
    const CNode& n = cnode(c);
    Deps d = depsOf(static_cast<std::size_t>(x), c);
    switch (n.op) {
      case Op::And:
        add(x, n.a, d);
        add(x, n.b, d);
        break;
      case Op::Atom:
      case Op::Nominal: {
        auto it = p_.unfold->find(c);
        if (it != p_.unfold->end())
          for (int e : it->second) add(x, e, d);
        if (n.op == Op::Nominal) merge(x, n.name, d);
        break;
      }
      case Op::Exists:
        if (cnode(n.a).op == Op::Nominal) addEdge(x, cnode(n.a).name, n.role, d);
        break;
      case Op::Forall: {
        auto edges = nd(static_cast<std::size_t>(x)).edges;
        for (const auto& e : edges)
          if (p_.subRole(e.role, n.role)) add(e.to, n.a, unite(d, e.deps));
        break;
      }
      default:
        break;
    }
  }

  bool saturate() {
    while (!work_.empty() && !clash_) {
      auto [x, c] = work_.front();
      work_.pop_front();
      if (!live(static_cast<std::size_t>(x))) continue;
      process(x, c);
    }
    work_.clear();
    return !clash_;
  }

  // Anywhere pairwise blocking over live nodes in creation order. Nominal
  // nodes never block and are never blocked.
  std::vector<char> blocking() const {
    std::size_t size = nodes_.size();
    std::vector<char> status(size, kNone);
    std::vector<std::size_t> labelHash(size, 0);
    std::vector<int> next(size, -1);  // chains nodes sharing a key
    std::unordered_map<std::size_t, int> head;
    head.reserve(size);
    for (std::size_t x = 0; x < size; ++x) {
      if (!live(x)) continue;
      std::size_t h = 17;
      for (auto w : nd(x).bits) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
      labelHash[x] = h;
    }
    auto edgeRoles = [&](std::size_t p, std::size_t x) {
      std::vector<int> rs;
      for (const auto& e : nd(p).edges)
        if (e.to == static_cast<int>(x)) rs.push_back(e.role);
      std::sort(rs.begin(), rs.end());
      return rs;
    };
    for (std::size_t x = 0; x < size; ++x) {
      if (!live(x) || nd(x).nominal) continue;
      auto up = static_cast<std::size_t>(find(nd(x).parent));
      if (status[up] != kNone) {
        status[x] = kIndirect;
        continue;
      }
      if (nd(up).nominal) continue;
      std::size_t key = labelHash[up] * 1000003U ^ labelHash[x];
      auto [it, first] = head.try_emplace(key, static_cast<int>(x));
      if (first) continue;
      std::vector<int> roles = edgeRoles(up, x);
      bool blocked = false;
      for (int y = it->second; y >= 0 && !blocked; y = next[static_cast<std::size_t>(y)]) {
        auto uy = static_cast<std::size_t>(y);
        auto uq = static_cast<std::size_t>(find(nd(uy).parent));
        blocked = nd(uy).bits == nd(x).bits && nd(uq).bits == nd(up).bits && edgeRoles(uq, uy) == roles;
      }
      if (blocked) {
        status[x] = kDirect;
      } else {
        next[x] = it->second;
        it->second = static_cast<int>(x);
      }
    }
    return status;
  }

  // Applies the ∃ rule once, on the lowest node with an unmet ∃. False when
  // nothing is left to expand.
  bool expandExists(const std::vector<char>& status) {
    constexpr std::size_t kNoEntry = SIZE_MAX;
    std::size_t keep = 0, best = kNoEntry;
    for (std::size_t i = 0; i < exists_.size(); ++i) {
      auto [ix, c] = exists_[i];
      auto x = static_cast<std::size_t>(ix);
      if (!live(x)) continue;
      exists_[keep] = exists_[i];
      if (status[x] == kNone && (best == kNoEntry || ix < exists_[best].first) && !satisfied(x, c, status))
        best = keep;
      ++keep;
    }
    exists_.resize(keep);
    if (best == kNoEntry) return false;
    auto [ix, c] = exists_[best];
    // Its own successor satisfies it for good.
    exists_.erase(exists_.begin() + static_cast<std::ptrdiff_t>(best));
    const CNode& n = cnode(c);
    Deps d = depsOf(static_cast<std::size_t>(ix), c);
    int role = n.role, filler = n.a;
    int z = newNode(ix, false);
    addEdge(ix, z, role, d);
    add(z, filler, d);
    return true;
  }

  bool satisfied(std::size_t x, int c, const std::vector<char>& status) const {
    const CNode& n = cnode(c);
    for (const auto& e : nd(x).edges)
      if (p_.subRole(e.role, n.role) && status[static_cast<std::size_t>(e.to)] != kIndirect &&
          has(static_cast<std::size_t>(e.to), n.a))
        return true;
    return false;
  }

  const Problem& p_;
  Budget& budget_;
  // Shared with branch copies; cloned on first write.
  std::vector<std::shared_ptr<TNode>> nodes_;
  std::deque<std::pair<int, int>> work_;
  bool clash_ = false;
  Deps clashDeps_;
  std::vector<std::pair<int, int>> ors_, exists_;  // (node, concept) still to check
  int level_ = 0;
};

Name freshIndividual(const ConceptTable& t) {
  for (int i = 0;; ++i) {
    Name n = Name::individual("__o" + std::to_string(i));
    if (!t.individuals.count(n)) return n;
  }
}

bool run(Reasoner::Compiled c, const ReasonerLimits& limits, const std::vector<std::pair<Name, Concept>>& cas,
         const std::vector<RoleAssertion>& ras) {
  std::vector<std::pair<int, int>> conceptIds;
  std::vector<std::tuple<int, int, int>> roleIds;
  for (const auto& [ind, cc] : cas) conceptIds.push_back({c.table.individual(ind), c.table.from(cc)});
  for (const auto& ra : ras)
    roleIds.push_back({c.table.individual(ra.subject), c.table.roleId({ra.role, false}), c.table.individual(ra.object)});
  // Every individual, including those only named in nominals, gets a node.
  for (const auto& [name, id] : c.table.individuals)
    c.table.raw({Op::Nominal, -1, -1, -1, id});
  c.table.close();

  Problem p;
  p.table = &c.table;
  p.globals = &c.globals;
  p.unfold = &c.unfold;
  p.sub = roleClosure(c.table.roles.size(), c.table, c.roleIncls);
  p.words = (c.table.nodes.size() + 63) / 64;
  p.individuals = static_cast<int>(c.table.individuals.size());
  p.limits = limits;

  Budget budget;
  Tableau t(p, budget);
  t.seed(conceptIds, roleIds);
  if (t.clash()) return false;
  return t.solve();
}

}  // namespace

Reasoner::Reasoner(const std::vector<Axiom>& tbox, ReasonerLimits limits)
    : compiled_(std::make_unique<Compiled>()), limits_(limits) {
  for (const auto& ax : tbox) compiled_->addAxiom(ax);
  compiled_->table.close();
}

Reasoner::~Reasoner() = default;
Reasoner::Reasoner(Reasoner&&) noexcept = default;
Reasoner& Reasoner::operator=(Reasoner&&) noexcept = default;

bool Reasoner::isConsistent(const std::vector<std::pair<Name, Concept>>& conceptAssertions,
                            const std::vector<RoleAssertion>& roleAssertions) const {
  return run(*compiled_, limits_, conceptAssertions, roleAssertions);
}

bool Reasoner::entails(const Axiom& goal) const {
  if (goal.isRole()) throw std::invalid_argument("entails expects a concept inclusion");
  Name o = freshIndividual(compiled_->table);
  Concept c = Concept::conj(goal.lhs, Concept::negate(goal.rhs));
  return !run(*compiled_, limits_, {{o, c}}, {});
}

bool isConsistent(const KnowledgeBase& kb, const ReasonerLimits& limits) {
  return Reasoner(kb.tbox, limits).isConsistent(kb.conceptAssertions, kb.roleAssertions);
}

bool entails(const std::vector<Axiom>& sigma, const Axiom& goal, const ReasonerLimits& limits) {
  return Reasoner(sigma, limits).entails(goal);
}

}  // namespace cshapes
