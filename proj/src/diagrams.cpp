#include "bcr/diagrams.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bcr/errors.hpp"

namespace bcr {

char role_letter(VertexRole r) {
  switch (r) {
    case VertexRole::ExternalWithLeg: return 'E';
    case VertexRole::TrivalentWithLeg: return 'T';
    case VertexRole::Univalent: return 'U';
    case VertexRole::BivalentExtIn: return 'A';
    case VertexRole::BivalentIntIn: return 'B';
  }
  return '?';
}

namespace {

struct VertexTally {
  unsigned in_ext = 0, in_int = 0, out_ext = 0, out_int = 0;
  unsigned in_from_univalent = 0;
  unsigned degree() const { return in_ext + in_int + out_ext + out_int; }
};

std::vector<VertexTally> tally(const BcrDiagram& g) {
  std::vector<VertexTally> t(g.vertices.size());
  std::vector<unsigned> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  for (const auto& e : g.edges) {
    if (e.kind == EdgeKind::External) {
      ++t[e.from].out_ext;
      ++t[e.to].in_ext;
    } else {
      ++t[e.from].out_int;
      ++t[e.to].in_int;
    }
    if (deg[e.from] == 1) ++t[e.to].in_from_univalent;
  }
  return t;
}

} // namespace

DiagramReport validate_diagram(const BcrDiagram& g) {
  DiagramReport rep;
  auto fail = [&rep](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  std::size_t nv = g.vertices.size();
  if (nv == 0) {
    fail("diagram has no vertices");
    return rep;
  }
  std::set<std::pair<unsigned, unsigned>> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.from >= nv || e.to >= nv) {
      fail("edge " + std::to_string(i) + " references a missing vertex");
      return rep;
    }
    if (e.from == e.to) fail("edge " + std::to_string(i) + " is a loop");
    if (!seen.insert({e.from, e.to}).second)
      fail("repeated ordered edge " + std::to_string(e.from) + "->" +
           std::to_string(e.to));
  }

  std::vector<VertexTally> t = tally(g);
  rep.roles.assign(nv, VertexRole::Univalent);
  for (std::size_t v = 0; v < nv; ++v) {
    const VertexTally& a = t[v];
    std::string where = "vertex " + std::to_string(v) + ": ";
    if (g.vertices[v] == VertexKind::External) {
      if (a.in_int + a.out_int > 0)
        fail(where + "external vertex touches an internal edge");
      else if (a.in_ext != 2 || a.out_ext != 1)
        fail(where + "external vertex needs two incoming and one outgoing "
                     "external edge");
      else if (a.in_from_univalent != 1)
        fail(where + "external vertex needs exactly one incoming leg");
      else
        rep.roles[v] = VertexRole::ExternalWithLeg;
      continue;
    }
    // Internal vertex: one of the four internal shapes.
    if (a.in_ext == 0 && a.in_int == 0 && a.out_ext == 1 && a.out_int == 0) {
      rep.roles[v] = VertexRole::Univalent;
    } else if (a.in_ext == 1 && a.in_int == 1 && a.out_ext == 0 && a.out_int == 1 &&
               a.in_from_univalent >= 1) {
      // The external in-edge must be the leg; the internal one never counts
      // as coming from a univalent vertex (its source has an in-edge too).
      rep.roles[v] = VertexRole::TrivalentWithLeg;
    } else if (a.in_ext == 1 && a.in_int == 0 && a.out_ext == 0 && a.out_int == 1) {
      rep.roles[v] = VertexRole::BivalentExtIn;
    } else if (a.in_ext == 0 && a.in_int == 1 && a.out_ext == 1 && a.out_int == 0) {
      rep.roles[v] = VertexRole::BivalentIntIn;
    } else {
      fail(where + "internal vertex matches none of the admissible shapes");
    }
  }

  // Connectivity, ignoring edge directions.
  std::vector<std::vector<unsigned>> adj(nv);
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> vis(nv, false);
  std::vector<unsigned> stack{0};
  vis[0] = true;
  while (!stack.empty()) {
    unsigned v = stack.back();
    stack.pop_back();
    for (unsigned w : adj[v])
      if (!vis[w]) {
        vis[w] = true;
        stack.push_back(w);
      }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!vis[v]) {
      fail("diagram is not connected");
      break;
    }

  if (rep.valid) rep.degree = static_cast<unsigned>(nv / 2);
  return rep;
}

namespace {

bool word_transition_ok(char a, char b) {
  // Outgoing kind of a: E,B external; T,A internal. The next cycle vertex
  // must accept that kind on its cycle input.
  bool ext = (a == 'E' || a == 'B');
  return ext ? (b == 'E' || b == 'A') : (b == 'T' || b == 'B');
}

std::string min_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::string rot = w.substr(r) + w.substr(0, r);
    if (rot < best) best = rot;
  }
  return best;
}

} // namespace

BcrDiagram diagram_from_word(const std::string& word) {
  std::size_t m = word.size();
  if (m < 2) throw std::invalid_argument("cycle word needs length >= 2");
  for (std::size_t i = 0; i < m; ++i) {
    char c = word[i];
    if (c != 'E' && c != 'T' && c != 'A' && c != 'B')
      throw std::invalid_argument("cycle word letter must be one of E,T,A,B");
    if (!word_transition_ok(c, word[(i + 1) % m]))
      throw std::invalid_argument("invalid cycle transition " + word.substr(i, 1) +
                                  "->" + std::string(1, word[(i + 1) % m]));
  }
  BcrDiagram g;
  g.vertices.reserve(2 * m);
  for (char c : word)
    g.vertices.push_back(c == 'E' ? VertexKind::External : VertexKind::Internal);
  for (std::size_t i = 0; i < m; ++i) {
    char c = word[i];
    bool ext_out = (c == 'E' || c == 'B');
    g.edges.push_back({static_cast<unsigned>(i), static_cast<unsigned>((i + 1) % m),
                       ext_out ? EdgeKind::External : EdgeKind::Internal});
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (word[i] != 'E' && word[i] != 'T') continue;
    unsigned leg = static_cast<unsigned>(g.vertices.size());
    g.vertices.push_back(VertexKind::Internal);
    g.edges.push_back({leg, static_cast<unsigned>(i), EdgeKind::External});
  }
  return g;
}

std::string canonical_word(const BcrDiagram& g) {
  DiagramReport rep = validate_diagram(g);
  if (!rep.valid)
    throw validation_error("canonical_word requires a valid diagram: " +
                           (rep.violations.empty() ? std::string("?")
                                                   : rep.violations.front()));
  // Non-univalent vertices form the directed cycle; walk it once.
  std::vector<unsigned> succ(g.vertices.size(), 0);
  for (const auto& e : g.edges) succ[e.from] = e.to;
  unsigned start = 0;
  while (rep.roles[start] == VertexRole::Univalent) ++start;
  std::string w;
  unsigned v = start;
  do {
    w += role_letter(rep.roles[v]);
    v = succ[v];
  } while (v != start);
  return min_rotation(w);
}

std::vector<BcrDiagram> enumerate_diagrams(unsigned k) {
  if (k < 2 || k > 7)
    throw std::invalid_argument("enumerate_diagrams is guarded to 2 <= k <= 7");
  std::set<std::pair<std::size_t, std::string>> canon;
  const std::string alphabet = "ETAB";
  // Cycle length m plus one leg per E/T totals 2k vertices, so the word has
  // m letters of which exactly 2k - m are E or T.
  for (unsigned m = k; m <= 2 * k; ++m) {
    unsigned legs = 2 * k - m;
    std::string w(m, '?');
    auto rec = [&](auto&& self, unsigned pos, unsigned used_legs) -> void {
      if (pos == m) {
        if (used_legs == legs && word_transition_ok(w[m - 1], w[0]))
          canon.insert({m, min_rotation(w)});
        return;
      }
      for (char c : alphabet) {
        if (pos > 0 && !word_transition_ok(w[pos - 1], c)) continue;
        unsigned nl = used_legs + (c == 'E' || c == 'T' ? 1 : 0);
        if (nl > legs) continue;
        // Each remaining position can add at most one leg.
        if (nl + (m - pos - 1) < legs) continue;
        w[pos] = c;
        self(self, pos + 1, nl);
      }
    };
    rec(rec, 0, 0);
  }
  std::vector<BcrDiagram> out;
  out.reserve(canon.size());
  for (const auto& [m, w] : canon) out.push_back(diagram_from_word(w));
  return out;
}

std::vector<ThetaPair> e_theta_edges(const BcrDiagram& g) {
  DiagramReport rep = validate_diagram(g);
  if (!rep.valid)
    throw validation_error("e_theta_edges requires a valid diagram");
  std::vector<unsigned> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  auto out_int_edge_of = [&](unsigned v) -> unsigned {
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (g.edges[i].from == v && g.edges[i].kind == EdgeKind::Internal)
        return static_cast<unsigned>(i);
    throw inconsistency_error("missing internal out-edge");
  };
  auto leg_into = [&](unsigned v) -> unsigned {
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (g.edges[i].to == v && deg[g.edges[i].from] == 1)
        return static_cast<unsigned>(i);
    throw inconsistency_error("missing leg edge");
  };
  std::vector<ThetaPair> theta;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.kind != EdgeKind::External) continue;
    if (g.vertices[e.to] == VertexKind::Internal) {
      theta.push_back({static_cast<unsigned>(i), out_int_edge_of(e.to)});
    } else if (deg[e.from] != 1) {
      // Cycle edge into an external vertex; its partner is that vertex's leg.
      theta.push_back({static_cast<unsigned>(i), leg_into(e.to)});
    }
  }
  return theta;
}

std::size_t automorphism_count(const BcrDiagram& g) {
  std::size_t nv = g.vertices.size();
  if (nv == 0) return 1;
  std::vector<VertexTally> t = tally(g);
  // Candidate images must share the full local signature.
  auto sig = [&](std::size_t v) {
    return std::tuple(g.vertices[v], t[v].in_ext, t[v].in_int, t[v].out_ext,
                      t[v].out_int, t[v].in_from_univalent);
  };
  std::set<std::tuple<unsigned, unsigned, bool>> edge_set;
  for (const auto& e : g.edges)
    edge_set.insert({e.from, e.to, e.kind == EdgeKind::Internal});

  std::vector<int> img(nv, -1);
  std::vector<bool> used(nv, false);
  std::size_t count = 0;
  // A bijection that maps every edge onto an edge of the same kind is an
  // automorphism (injectivity on pairs plus equal cardinality make the edge
  // map onto). Partially assigned maps are pruned the same way.
  auto maps_all_edges = [&]() {
    for (const auto& e : g.edges) {
      if (img[e.from] < 0 || img[e.to] < 0) continue;
      if (!edge_set.count({static_cast<unsigned>(img[e.from]),
                           static_cast<unsigned>(img[e.to]),
                           e.kind == EdgeKind::Internal}))
        return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      ++count;
      return;
    }
    for (std::size_t w = 0; w < nv; ++w) {
      if (used[w] || sig(w) != sig(v)) continue;
      img[v] = static_cast<int>(w);
      used[w] = true;
      if (maps_all_edges()) self(self, v + 1);
      img[v] = -1;
      used[w] = false;
    }
  };
  rec(rec, 0);
  return count;
}

Int numbering_count(const BcrDiagram& g) {
  DiagramReport rep = validate_diagram(g);
  if (!rep.valid)
    throw validation_error("numbering_count requires a valid diagram");
  Int total = factorial(static_cast<unsigned>(g.edges.size()));
  Int aut = static_cast<long>(automorphism_count(g));
  if (total % aut != 0)
    throw inconsistency_error("automorphism count does not divide the numbering total");
  return total / aut;
}

} // namespace bcr
