#include <provlog/kripke.hpp>

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <provlog/errors.hpp>

namespace provlog {

namespace {

void require_node(const KripkeModel& m, NodeId node) {
  if (node < 0 || node >= m.node_count)
    throw std::out_of_range("unknown node id " + std::to_string(node));
}

bool strict_leq(const KripkeModel& m, int a, int b) {
  return a != b && m.leq[a][b];
}

// Memoized forcing. The key packs (formula, node) injectively.
bool force_rec(const KripkeModel& m, int a, Formula f,
               std::unordered_map<long long, char>& memo) {
  long long key = (long long)f.id() * m.node_count + a;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second != 0;
  bool out = false;
  switch (f.kind()) {
    case Kind::Bot: out = false; break;
    case Kind::Top: out = true; break;
    case Kind::Atom: out = m.val[a].count(f.name()) != 0; break;
    case Kind::And:
      out = force_rec(m, a, f.left(), memo) && force_rec(m, a, f.right(), memo);
      break;
    case Kind::Or:
      out = force_rec(m, a, f.left(), memo) || force_rec(m, a, f.right(), memo);
      break;
    case Kind::Imp:
      out = true;
      for (int b = 0; b < m.node_count && out; ++b)
        if (m.leq[a][b] && force_rec(m, b, f.left(), memo) &&
            !force_rec(m, b, f.right(), memo))
          out = false;
      break;
    case Kind::Box:
      out = true;
      for (int b = 0; b < m.node_count && out; ++b)
        if (m.sub[a][b] && !force_rec(m, b, f.body(), memo)) out = false;
      break;
  }
  memo.emplace(key, out ? 1 : 0);
  return out;
}

bool local_rec(const KripkeModel& m, int a, Formula f,
               std::unordered_map<long long, char>& fmemo) {
  switch (f.kind()) {
    case Kind::Bot: return false;
    case Kind::Top: return true;
    case Kind::Atom: return m.val[a].count(f.name()) != 0;
    case Kind::And:
      return local_rec(m, a, f.left(), fmemo) && local_rec(m, a, f.right(), fmemo);
    case Kind::Or:
      return local_rec(m, a, f.left(), fmemo) || local_rec(m, a, f.right(), fmemo);
    case Kind::Imp:
      return !local_rec(m, a, f.left(), fmemo) || local_rec(m, a, f.right(), fmemo);
    case Kind::Box:
      for (int b = 0; b < m.node_count; ++b)
        if (m.sub[a][b] && !force_rec(m, b, f.body(), fmemo)) return false;
      return true;
  }
  return false;
}

bool classical_rec(const KripkeModel& m, int a, Formula f,
                   std::unordered_map<long long, char>& memo) {
  long long key = (long long)f.id() * m.node_count + a;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second != 0;
  bool out = false;
  switch (f.kind()) {
    case Kind::Bot: out = false; break;
    case Kind::Top: out = true; break;
    case Kind::Atom: out = m.val[a].count(f.name()) != 0; break;
    case Kind::And:
      out = classical_rec(m, a, f.left(), memo) &&
            classical_rec(m, a, f.right(), memo);
      break;
    case Kind::Or:
      out = classical_rec(m, a, f.left(), memo) ||
            classical_rec(m, a, f.right(), memo);
      break;
    case Kind::Imp:
      out = !classical_rec(m, a, f.left(), memo) ||
            classical_rec(m, a, f.right(), memo);
      break;
    case Kind::Box:
      out = true;
      for (int b = 0; b < m.node_count && out; ++b)
        if (m.sub[a][b] && !classical_rec(m, b, f.body(), memo)) out = false;
      break;
  }
  memo.emplace(key, out ? 1 : 0);
  return out;
}

KripkeModel with_override(const KripkeModel& m, int node,
                          const BooleanAssignment& I) {
  KripkeModel copy = m;
  copy.val[node] = I.true_atoms;
  return copy;
}

bool classical_at(const KripkeModel& m, int a) {
  for (int b = 0; b < m.node_count; ++b)
    if (strict_leq(m, a, b)) return false;
  return true;
}

bool quasi_classical_at(const KripkeModel& m, int a) {
  for (int b = 0; b < m.node_count; ++b)
    if (strict_leq(m, a, b) != m.sub[a][b]) return false;
  return true;
}

bool complete_at(const KripkeModel& m, int a) {
  for (int b = 0; b < m.node_count; ++b)
    if (m.sub[a][b] && !strict_leq(m, a, b)) return false;
  return true;
}

bool atom_complete_at(const KripkeModel& m, int a) {
  for (int b = 0; b < m.node_count; ++b)
    if (m.sub[a][b])
      for (const auto& p : m.val[a])
        if (!m.val[b].count(p)) return false;
  return true;
}

bool sub_branching_at(const KripkeModel& m, int a) {
  int immediate = 0;
  for (int b = 0; b < m.node_count; ++b) {
    if (!m.sub[a][b]) continue;
    bool has_mid = false;
    for (int c = 0; c < m.node_count && !has_mid; ++c)
      if (m.sub[a][c] && m.sub[c][b]) has_mid = true;
    if (!has_mid) ++immediate;
  }
  return immediate != 1;
}

bool sound_at(const KripkeModel& m, int a, Formula formula) {
  for (Formula b : subformulas(formula))
    if (b.kind() == Kind::Box)
      if (local_truth(m, a, b) && !local_truth(m, a, b.body())) return false;
  return true;
}

bool brilliant(const KripkeModel& m) {
  for (int a = 0; a < m.node_count; ++a)
    for (int d = 0; d < m.node_count; ++d)
      if (m.sub[a][d])
        for (int b = 0; b < m.node_count; ++b)
          if (m.leq[d][b] && !m.sub[a][b]) return false;
  return true;
}

bool neat(const KripkeModel& m) {
  for (int a = 0; a < m.node_count; ++a)
    for (int c = 0; c < m.node_count; ++c)
      if (m.sub[a][c])
        for (int b = 0; b < m.node_count; ++b)
          if (m.leq[a][b] && m.leq[b][c] && !m.sub[a][b] && !m.sub[b][c])
            return false;
  return true;
}

// The two relations together should arrange the nodes as a rooted tree:
// no cycles, everything beneath a node forms a chain, and a single root.
// Judged on the reachability closure, so a growth step followed by a sub
// step needs no direct shortcut edge.
bool tree_frame(const KripkeModel& m) {
  int n = m.node_count;
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      r[a][b] = strict_leq(m, a, b) || m.sub[a][b];
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      if (r[a][c])
        for (int b = 0; b < n; ++b)
          if (r[c][b]) r[a][b] = true;
  for (int a = 0; a < n; ++a)
    if (r[a][a]) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r[y][x])
        for (int z = 0; z < y; ++z)
          if (r[z][x] && !r[y][z] && !r[z][y]) return false;
  int roots = 0;
  for (int a = 0; a < n; ++a) {
    bool has_pred = false;
    for (int b = 0; b < n && !has_pred; ++b) has_pred = r[b][a];
    if (!has_pred) ++roots;
  }
  return roots <= 1;
}

bool sub_irreflexive(const KripkeModel& m) {
  for (int a = 0; a < m.node_count; ++a)
    if (m.sub[a][a]) return false;
  return true;
}

bool sub_transitive(const KripkeModel& m) {
  for (int a = 0; a < m.node_count; ++a)
    for (int b = 0; b < m.node_count; ++b)
      if (m.sub[a][b])
        for (int c = 0; c < m.node_count; ++c)
          if (m.sub[b][c] && !m.sub[a][c]) return false;
  return true;
}

std::vector<bool> suc_mask(const KripkeModel& m) {
  std::vector<bool> suc(m.node_count, false);
  for (int a = 0; a < m.node_count; ++a)
    for (int b = 0; b < m.node_count; ++b)
      if (m.sub[a][b]) suc[b] = true;
  return suc;
}

bool check_nodewise(const KripkeModel& m, std::optional<NodeId> at,
                    bool (*pred)(const KripkeModel&, int)) {
  if (at) {
    require_node(m, *at);
    return pred(m, *at);
  }
  for (int a = 0; a < m.node_count; ++a)
    if (!pred(m, a)) return false;
  return true;
}

}  // namespace

bool check_model(const KripkeModel& m) {
  int n = m.node_count;
  if ((int)m.leq.size() != n || (int)m.sub.size() != n || (int)m.val.size() != n)
    return false;
  for (int a = 0; a < n; ++a)
    if ((int)m.leq[a].size() != n || (int)m.sub[a].size() != n) return false;
  for (int a = 0; a < n; ++a)
    if (!m.leq[a][a]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && m.leq[a][b] && m.leq[b][a]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.leq[a][b])
        for (int c = 0; c < n; ++c)
          if (m.leq[b][c] && !m.leq[a][c]) return false;
  // Mixing law: going up by leq first never loses sub successors.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.leq[a][b])
        for (int c = 0; c < n; ++c)
          if (m.sub[b][c] && !m.sub[a][c]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.leq[a][b])
        for (const auto& p : m.val[a])
          if (!m.val[b].count(p)) return false;
  return true;
}

bool force(const KripkeModel& m, NodeId node, Formula a) {
  require_node(m, node);
  std::unordered_map<long long, char> memo;
  return force_rec(m, node, a, memo);
}

bool local_truth(const KripkeModel& m, NodeId node, Formula a,
                 const std::optional<BooleanAssignment>& override) {
  require_node(m, node);
  std::unordered_map<long long, char> memo;
  if (override) return local_rec(with_override(m, node, *override), node, a, memo);
  return local_rec(m, node, a, memo);
}

bool classical_truth(const KripkeModel& m, NodeId node, Formula a,
                     const std::optional<BooleanAssignment>& override) {
  require_node(m, node);
  std::unordered_map<long long, char> memo;
  if (override)
    return classical_rec(with_override(m, node, *override), node, a, memo);
  return classical_rec(m, node, a, memo);
}

bool check_frame(const KripkeModel& m, const FrameProperty& prop,
                 std::optional<NodeId> at) {
  switch (prop.tag) {
    case FrameTag::Brilliant: return brilliant(m);
    case FrameTag::Neat: return neat(m);
    case FrameTag::TreeFrame: return tree_frame(m);
    case FrameTag::Irreflexive: return sub_irreflexive(m);
    case FrameTag::Transitive: return sub_transitive(m);
    case FrameTag::SemiPerfect:
      return tree_frame(m) && brilliant(m) && neat(m) && sub_irreflexive(m) &&
             sub_transitive(m);
    case FrameTag::Perfect:
      return check_frame(m, FrameTag::SemiPerfect) &&
             check_nodewise(m, {}, complete_at);
    case FrameTag::QuasiClassical:
      return check_nodewise(m, at, quasi_classical_at);
    case FrameTag::Classical: return check_nodewise(m, at, classical_at);
    case FrameTag::SucClassical: {
      auto suc = suc_mask(m);
      for (int a = 0; a < m.node_count; ++a)
        if (suc[a] && !classical_at(m, a)) return false;
      return true;
    }
    case FrameTag::SucQuasiClassical: {
      auto suc = suc_mask(m);
      for (int a = 0; a < m.node_count; ++a)
        if (suc[a] && !quasi_classical_at(m, a)) return false;
      return true;
    }
    case FrameTag::AtomComplete: return check_nodewise(m, at, atom_complete_at);
    case FrameTag::SubBranching: return check_nodewise(m, at, sub_branching_at);
    case FrameTag::Complete: return check_nodewise(m, at, complete_at);
    case FrameTag::SoundFor: {
      if (!at) throw std::invalid_argument("soundness check needs a node");
      require_node(m, *at);
      return sound_at(m, *at, *prop.formula);
    }
  }
  return false;
}

std::pair<KripkeModel, NodeId> smorynski_extend(const KripkeModel& m,
                                                NodeId node) {
  require_node(m, node);
  int n = m.node_count;
  KripkeModel out = m;
  out.node_count = n + 1;
  for (int a = 0; a < n; ++a) {
    out.leq[a].push_back(false);
    out.sub[a].push_back(false);
  }
  out.leq.emplace_back(n + 1, false);
  out.sub.emplace_back(n + 1, false);
  out.val.push_back(m.val[node]);
  out.leq[n][n] = true;
  for (int b = 0; b < n; ++b) {
    if (m.leq[node][b]) out.leq[n][b] = true;
    if (m.sub[node][b]) out.sub[n][b] = true;
  }
  out.sub[n][node] = true;
  return {out, n};
}

KripkeModel tilde(const KripkeModel& m) {
  KripkeModel out = m;
  auto suc = suc_mask(m);
  for (int a = 0; a < m.node_count; ++a)
    if (suc[a])
      for (int b = 0; b < m.node_count; ++b) out.leq[a][b] = (a == b);
  return out;
}

Unraveling unravel_traced(const KripkeModel& m, NodeId root,
                          bool force_branching) {
  require_node(m, root);
  int n = m.node_count;

  std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      step[a][b] = strict_leq(m, a, b) || m.sub[a][b];

  std::vector<bool> seen(n, false);
  std::deque<int> queue = {root};
  seen[root] = true;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b = 0; b < n; ++b)
      if (step[a][b] && !seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("model has nodes unreachable from the root");

  // Paths grow along covering edges only; longer hops are recovered by the
  // endpoint relations below, so each one contributes no extra path segment.
  std::vector<std::vector<int>> covers(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!step[a][b]) continue;
      bool mid = false;
      for (int c = 0; c < n && !mid; ++c)
        if (step[a][c] && step[c][b]) mid = true;
      if (!mid) covers[a].push_back(b);
    }

  constexpr int kMaxPaths = 200000;
  // Path nodes in breadth-first order; the path itself stays implicit in the
  // parent pointers. sub_depth counts the sub steps from the root, so a pair
  // of paths is sub-related exactly when the deeper one gained a sub step.
  std::vector<int> parent = {-1}, last = {root}, sub_depth = {0};
  for (int r = 0; r < (int)last.size(); ++r) {
    int a = last[r];
    for (int b : covers[a]) {
      bool step_sub = m.sub[a][b];
      int copies = (step_sub && force_branching) ? 2 : 1;
      for (int t = 0; t < copies; ++t) {
        parent.push_back(r);
        last.push_back(b);
        sub_depth.push_back(sub_depth[r] + (step_sub ? 1 : 0));
        if ((int)last.size() > kMaxPaths)
          throw ResourceError("unraveling exceeded the path budget");
      }
    }
  }

  int k = (int)last.size();
  Unraveling out;
  out.model.node_count = k;
  out.model.leq.assign(k, std::vector<bool>(k, false));
  out.model.sub.assign(k, std::vector<bool>(k, false));
  out.model.val.resize(k);
  for (int r = 0; r < k; ++r) out.model.val[r] = m.val[last[r]];
  for (int s = 0; s < k; ++s) {
    out.model.leq[s][s] = true;
    for (int r = parent[s]; r != -1; r = parent[r]) {
      if (m.leq[last[r]][last[s]]) out.model.leq[r][s] = true;
      if (sub_depth[s] > sub_depth[r]) out.model.sub[r][s] = true;
    }
  }
  out.last = std::move(last);
  return out;
}

KripkeModel unravel(const KripkeModel& m, NodeId root, bool force_branching) {
  return unravel_traced(m, root, force_branching).model;
}

namespace {

// Tree skeleton used by the generator; relations are derived from the typed
// edges: a reaches b by sub when the tree path contains a sub edge, and by
// leq when it is all growth edges.
struct Skeleton {
  std::vector<int> parent;        // parent[0] == -1
  std::vector<bool> sub_edge;     // type of the edge into each node
};

bool path_has_sub(const Skeleton& t, int ancestor, int node) {
  for (int c = node; c != ancestor; c = t.parent[c])
    if (t.sub_edge[c]) return true;
  return false;
}

bool is_ancestor(const Skeleton& t, int a, int b) {
  for (int c = b; c != -1; c = t.parent[c])
    if (c == a) return true;
  return false;
}

KripkeModel realize(const Skeleton& t, bool full_upgrade, bool suc_upgrade) {
  int n = (int)t.parent.size();
  KripkeModel m;
  m.node_count = n;
  m.leq.assign(n, std::vector<bool>(n, false));
  m.sub.assign(n, std::vector<bool>(n, false));
  m.val.resize(n);
  for (int a = 0; a < n; ++a) {
    m.leq[a][a] = true;
    for (int b = 0; b < n; ++b) {
      if (a == b || !is_ancestor(t, a, b)) continue;
      if (path_has_sub(t, a, b))
        m.sub[a][b] = true;
      else
        m.leq[a][b] = true;
      if (full_upgrade) m.leq[a][b] = true;
    }
  }
  if (suc_upgrade) {
    auto suc = suc_mask(m);
    for (int a = 0; a < n; ++a)
      if (suc[a])
        for (int b = 0; b < n; ++b)
          if (m.sub[a][b]) m.leq[a][b] = true;
  }
  return m;
}

}  // namespace

KripkeModel generate_random(const std::vector<FrameProperty>& frame_class,
                            int max_nodes,
                            const std::vector<std::string>& atoms,
                            unsigned long long seed) {
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be positive");
  std::mt19937_64 rng(seed);

  bool all_sub = false, down_closed = false, full_upgrade = false,
       suc_upgrade = false, persist_sub = false, want_branching = false;
  for (const auto& p : frame_class) switch (p.tag) {
      case FrameTag::Classical: all_sub = true; break;
      case FrameTag::QuasiClassical:
        all_sub = true;
        full_upgrade = true;
        break;
      case FrameTag::Complete:
      case FrameTag::Perfect: full_upgrade = true; break;
      case FrameTag::SucClassical: down_closed = true; break;
      case FrameTag::SucQuasiClassical:
        down_closed = true;
        suc_upgrade = true;
        break;
      case FrameTag::AtomComplete: persist_sub = true; break;
      case FrameTag::SubBranching: want_branching = true; break;
      default: break;
    }
  if (full_upgrade || suc_upgrade) persist_sub = true;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    int n = 1 + (int)(rng() % (unsigned)max_nodes);
    Skeleton t;
    t.parent.assign(n, -1);
    t.sub_edge.assign(n, false);
    for (int i = 1; i < n; ++i) {
      t.parent[i] = (int)(rng() % (unsigned)i);
      bool forced_sub =
          all_sub || (down_closed && (t.sub_edge[t.parent[i]] ||
                                      path_has_sub(t, 0, t.parent[i])));
      t.sub_edge[i] = forced_sub || (rng() & 1);
    }

    if (want_branching) {
      bool grew = true;
      while (grew && (int)t.parent.size() <= 200) {
        grew = false;
        KripkeModel probe = realize(t, full_upgrade, suc_upgrade);
        for (int a = 0; a < probe.node_count && !grew; ++a) {
          if (sub_branching_at(probe, a)) continue;
          // Find the lone minimal sub successor and duplicate the branch
          // through which it is reached, giving the node a second one.
          int target = -1;
          for (int b = 0; b < probe.node_count && target < 0; ++b) {
            if (!probe.sub[a][b]) continue;
            bool mid = false;
            for (int c = 0; c < probe.node_count && !mid; ++c)
              if (probe.sub[a][c] && probe.sub[c][b]) mid = true;
            if (!mid) target = b;
          }
          int child = target;
          while (t.parent[child] != a) child = t.parent[child];
          int old_size = (int)t.parent.size();
          std::vector<int> map(old_size, -1);
          for (int b = child; b < old_size; ++b) {
            if (b != child && map[t.parent[b]] < 0) continue;
            map[b] = (int)t.parent.size();
            t.parent.push_back(b == child ? a : map[t.parent[b]]);
            t.sub_edge.push_back(t.sub_edge[b]);
          }
          grew = true;
        }
      }
      if ((int)t.parent.size() > 200) continue;
    }

    KripkeModel m = realize(t, full_upgrade, suc_upgrade);
    for (auto& v : m.val) {
      v.clear();
      for (const auto& p : atoms)
        if (rng() & 1) v.insert(p);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < m.node_count; ++a)
        for (int b = 0; b < m.node_count; ++b) {
          if (!(m.leq[a][b] || (persist_sub && m.sub[a][b])) || a == b) continue;
          for (const auto& p : m.val[a])
            if (m.val[b].insert(p).second) changed = true;
        }
    }

    if (!check_model(m)) continue;
    bool ok = true;
    for (const auto& p : frame_class) {
      if (p.tag == FrameTag::SoundFor) {
        for (int a = 0; a < m.node_count && ok; ++a)
          ok = check_frame(m, p, a);
      } else {
        ok = check_frame(m, p);
      }
      if (!ok) break;
    }
    if (ok) return m;
  }
  throw UnsupportedError("no model with the requested frame class found");
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
}

}  // namespace

std::string to_json(const KripkeModel& m, NodeId designated,
                    const Formula& formula,
                    const std::vector<std::string>& frame_class) {
  std::string out = "{\"nodes\":[";
  for (int a = 0; a < m.node_count; ++a) {
    if (a) out += ',';
    out += "{\"id\":" + std::to_string(a) + ",\"atoms\":[";
    bool first = true;
    for (const auto& p : m.val[a]) {
      if (!first) out += ',';
      first = false;
      out += '"';
      append_escaped(out, p);
      out += '"';
    }
    out += "]}";
  }
  out += "],\"leq\":[";
  bool first = true;
  for (int a = 0; a < m.node_count; ++a)
    for (int b = 0; b < m.node_count; ++b)
      if (m.leq[a][b]) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(a) + ',' + std::to_string(b) + ']';
      }
  out += "],\"sub\":[";
  first = true;
  for (int a = 0; a < m.node_count; ++a)
    for (int b = 0; b < m.node_count; ++b)
      if (m.sub[a][b]) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(a) + ',' + std::to_string(b) + ']';
      }
  out += "],\"designated\":" + std::to_string(designated) + ",\"formula\":\"";
  append_escaped(out, print(formula));
  out += "\",\"frame_class\":[";
  first = true;
  for (const auto& f : frame_class) {
    if (!first) out += ',';
    first = false;
    out += '"';
    append_escaped(out, f);
    out += '"';
  }
  out += "]}";
  return out;
}

std::string to_dot(const KripkeModel& m) {
  std::string out = "digraph model {\n  rankdir=BT;\n";
  for (int a = 0; a < m.node_count; ++a) {
    out += "  n" + std::to_string(a) + " [label=\"" + std::to_string(a);
    if (!m.val[a].empty()) {
      out += ':';
      for (const auto& p : m.val[a]) out += ' ' + p;
    }
    out += "\"];\n";
  }
  // Transitive reductions keep the picture readable; the JSON form carries
  // the full relations.
  auto reduced = [&](auto rel) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m.node_count; ++a)
      for (int b = 0; b < m.node_count; ++b) {
        if (!rel(a, b)) continue;
        bool mid = false;
        for (int c = 0; c < m.node_count && !mid; ++c)
          if (c != a && c != b && rel(a, c) && rel(c, b)) mid = true;
        if (!mid) edges.emplace_back(a, b);
      }
    return edges;
  };
  for (auto [a, b] :
       reduced([&](int x, int y) { return strict_leq(m, x, y); }))
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) +
           " [style=solid];\n";
  for (auto [a, b] : reduced([&](int x, int y) { return m.sub[x][y]; }))
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) +
           " [style=dashed];\n";
  out += "}\n";
  return out;
}

}  // namespace provlog
