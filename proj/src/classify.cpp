#include "linres/classify.hpp"

#include <algorithm>
#include <queue>

#include "json.hpp"
#include "linres/binomial.hpp"

namespace linres {

bool is_clique(const Clutter& c, VertexMask v) {
  if ((v & ~c.full_mask()) != 0) fail(errc::invalid_input, "clique test vertex set not within 1..n");
  if (popcount(v) < c.d()) return true;
  bool all = true;
  for_each_subset_of_mask(v, c.d(), [&](VertexMask f) {
    if (!c.contains(f)) all = false;
  });
  return all;
}

namespace {

// Union-find over circuit indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Clutter subclutter(const Clutter& c, const std::vector<VertexMask>& circuits) {
  return Clutter(c.n(), c.d(), circuits);
}

std::optional<Decomposition> split_by_components(const Clutter& c, Dsu& dsu,
                                                 const std::vector<char>& in_separator,
                                                 DecompositionKind kind, VertexMask separator) {
  const auto& cs = c.circuits();
  int first_root = -1;
  bool multiple = false;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (in_separator[i]) continue;
    int root = dsu.find(static_cast<int>(i));
    if (first_root < 0)
      first_root = root;
    else if (root != first_root)
      multiple = true;
  }
  if (!multiple) return std::nullopt;
  std::vector<VertexMask> part1, part2;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (in_separator[i]) {
      part1.push_back(cs[i]);
      part2.push_back(cs[i]);
    } else if (dsu.find(static_cast<int>(i)) == first_root) {
      part1.push_back(cs[i]);
    } else {
      part2.push_back(cs[i]);
    }
  }
  return Decomposition{subclutter(c, part1), subclutter(c, part2), kind, separator, true};
}

}  // namespace

std::optional<Decomposition> decompose(const Clutter& c, int separator_cap) {
  const auto& cs = c.circuits();
  if (cs.size() < 2) return std::nullopt;
  const int d = c.d();

  // (a) SC-disjoint kind: components of the codimension-one adjacency graph.
  {
    Dsu dsu(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (popcount(cs[i] & cs[j]) == d - 1) dsu.unite(static_cast<int>(i), static_cast<int>(j));
    std::vector<char> none(cs.size(), 0);
    auto split = split_by_components(c, dsu, none, DecompositionKind::sc_disjoint, 0);
    if (split) return split;
  }

  // (b) clique-intersection kind: for each clique separator S (up to the cap),
  // group circuits that share a vertex outside S; circuits inside S join both
  // parts.
  const int cap = separator_cap > 0 ? separator_cap : d + 2;
  const SimplicialComplex delta = clique_complex(c);
  const bool complete = cap >= delta.dim() + 1;
  for (int s = 0; s <= std::min(cap, delta.dim() + 1); ++s) {
    for (VertexMask sep : delta.faces_of_size(s)) {
      Dsu dsu(cs.size());
      std::vector<char> inside(cs.size(), 0);
      for (std::size_t i = 0; i < cs.size(); ++i) inside[i] = (cs[i] & ~sep) == 0;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (inside[i]) continue;
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          if (inside[j]) continue;
          if ((cs[i] & cs[j] & ~sep) != 0) dsu.unite(static_cast<int>(i), static_cast<int>(j));
        }
      }
      auto split = split_by_components(c, dsu, inside, DecompositionKind::clique_intersection, sep);
      if (split) {
        split->complete_search = complete;
        return split;
      }
    }
  }
  std::optional<Decomposition> none;
  return none;
}

bool is_pseudo_manifold(const Clutter& c) {
  if (!strongly_connected(c)) return false;
  const SubmaximalCircuitTable table = submaximal_circuits(c);
  for (const auto& [e, deg] : table.entries())
    if (deg != 2) return false;
  return true;
}

bool is_orientable(const Clutter& c) {
  if (!is_pseudo_manifold(c))
    fail(errc::not_pseudo_manifold, "orientability is defined for pseudo-manifolds only");
  if (c.empty()) return true;
  const SimplicialComplex gen = generated_complex(c);
  const long long h = reduced_homology_dims(gen, FieldSpec::rationals(), c.d() - 1, c.d() - 1)[0];
  return h == 1;
}

bool orientable_by_sign_propagation(const Clutter& c) {
  if (!is_pseudo_manifold(c))
    fail(errc::not_pseudo_manifold, "orientability is defined for pseudo-manifolds only");
  const auto& cs = c.circuits();
  if (cs.empty()) return true;
  // sign of e = F \ {v} inside the oriented boundary of F
  auto boundary_sign = [](VertexMask f, VertexMask vbit) -> int {
    return popcount(f & (vbit - 1)) % 2 == 0 ? 1 : -1;
  };
  std::vector<int> sign(cs.size(), 0);
  sign[0] = 1;
  std::queue<std::size_t> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    std::size_t i = bfs.front();
    bfs.pop();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (j == i || popcount(cs[i] & cs[j]) != c.d() - 1) continue;
      const VertexMask vi = cs[i] & ~cs[j];
      const VertexMask vj = cs[j] & ~cs[i];
      // adjacent circuits must induce opposite orientations on the shared face
      const int needed = -sign[i] * boundary_sign(cs[i], vi) * boundary_sign(cs[j], vj);
      if (sign[j] == 0) {
        sign[j] = needed;
        bfs.push(j);
      } else if (sign[j] != needed) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// For a clutter whose clique complex has dimension d-1, minimality to
// d-linearity is equivalent to: the circuit boundary map has a
// one-dimensional kernel spanned by a vector with full support. Column c
// lies in the support iff deleting it keeps the rank (drops the kernel).
bool minimal_via_kernel(const Clutter& c, const SimplicialComplex& delta, const FieldSpec& k) {
  const ExactMatrix m = boundary_matrix(delta, c.d() - 1, k);
  const int r = rank(m, k);
  if (static_cast<int>(c.size()) - r != 1) return false;
  for (int col = 0; col < m.cols; ++col)
    if (rank(m.without_column(col), k) != r) return false;
  return true;
}

}  // namespace

bool is_minimal_to_linearity(const Clutter& c, const FieldSpec& k) {
  if (c.empty() || binomial(c.n(), c.d()) == c.size()) return false;  // zero ideal is linear
  const SimplicialComplex delta = clique_complex(c);
  if (delta.dim() != c.d() - 1) return false;
  if (is_pseudo_manifold(c))
    return is_orientable(c) ? true : k.characteristic() == 2;
  return minimal_via_kernel(c, delta, k);
}

bool is_obstruction(const Clutter& c, const FieldSpec& k, int exhaustive_cap) {
  if (c.empty() || binomial(c.n(), c.d()) == c.size()) return false;
  const SimplicialComplex delta = clique_complex(c);
  if (delta.dim() == c.d() - 1) {
    if (is_pseudo_manifold(c)) return is_orientable(c) ? true : k.characteristic() == 2;
    return minimal_via_kernel(c, delta, k);
  }
  // Cliques above dimension d-1 exist; fall back to the exhaustive scan.
  if (static_cast<int>(c.size()) > exhaustive_cap)
    fail(errc::capacity_exceeded,
         "obstruction scan is exhaustive over 2^|C| subclutters; |C| = " + std::to_string(c.size()) +
             " exceeds the cap " + std::to_string(exhaustive_cap));
  if (c.n() > HochsterOptions{}.max_n)
    fail(errc::capacity_exceeded, "obstruction scan needs full tables; n exceeds the subset cap");
  if (has_linear_resolution(c, k)) return false;
  const auto& cs = c.circuits();
  const std::uint64_t total = 1ull << cs.size();
  int all_linear = 1;
#pragma omp parallel for schedule(dynamic, 64)
  for (long long pick = 0; pick < static_cast<long long>(total) - 1; ++pick) {
    int keep_going;
#pragma omp atomic read
    keep_going = all_linear;
    if (!keep_going) continue;
    std::vector<VertexMask> sub;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (pick >> i & 1) sub.push_back(cs[i]);
    if (!has_linear_resolution(Clutter(c.n(), c.d(), sub), k)) {
#pragma omp atomic write
      all_linear = 0;
    }
  }
  return all_linear != 0;
}

bool is_almost_tree(const Clutter& c, const FieldSpec& k) {
  if (has_linear_resolution(c, k)) return false;
  for (VertexMask f : c.circuits())
    if (!is_forest(remove_circuit(c, f))) return false;
  return true;
}

bool is_chordal_graph(const Clutter& c) {
  if (c.d() != 2) fail(errc::invalid_input, "chordality is defined for graphs (d = 2)");
  std::vector<VertexMask> adj(static_cast<std::size_t>(c.n()) + 1, 0);
  for (VertexMask e : c.circuits()) {
    auto vs = mask_to_vertices(e);
    adj[static_cast<std::size_t>(vs[0])] |= vertex_bit(vs[1]);
    adj[static_cast<std::size_t>(vs[1])] |= vertex_bit(vs[0]);
  }
  VertexMask alive = c.full_mask();
  while (alive) {
    bool removed = false;
    for (int v = 1; v <= c.n() && !removed; ++v) {
      if (!(alive & vertex_bit(v))) continue;
      const VertexMask nb = adj[static_cast<std::size_t>(v)] & alive;
      bool simplicial = true;
      for (int u : mask_to_vertices(nb))
        if ((nb & ~adj[static_cast<std::size_t>(u)] & ~vertex_bit(u)) != 0) {
          simplicial = false;
          break;
        }
      if (simplicial) {
        alive &= ~vertex_bit(v);
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

ClassificationReport classify(const Clutter& c, const FieldSpec& k, int separator_cap,
                              int exhaustive_cap) {
  ClassificationReport r;
  r.n = c.n();
  r.d = c.d();
  r.field = k;
  const SimplicialComplex delta = clique_complex(c);
  r.clique_complex_dim = delta.dim();
  r.clique_complex_dim_ok = delta.dim() == c.d() - 1;
  r.connected = connected(c);
  r.strongly_connected = strongly_connected(c);
  r.forest = is_forest(c);
  r.tree = is_tree(c);
  r.pseudo_manifold = is_pseudo_manifold(c);
  r.orientable = r.pseudo_manifold ? (is_orientable(c) ? TriState::yes : TriState::no)
                                   : TriState::not_applicable;
  r.linear_resolution = has_linear_resolution(c, k);
  r.decomposition = decompose(c, separator_cap);
  r.decomposable = r.decomposition.has_value();
  if (r.decomposable) {
    r.decompose_search_complete = r.decomposition->complete_search;
  } else {
    const int cap = separator_cap > 0 ? separator_cap : c.d() + 2;
    r.decompose_search_complete = cap >= delta.dim() + 1;
  }
  r.almost_tree = is_almost_tree(c, k);
  try {
    r.obstruction = is_obstruction(c, k, exhaustive_cap);
  } catch (const error& e) {
    if (e.code() != errc::capacity_exceeded) throw;
    r.obstruction = std::nullopt;
  }
  r.minimal_to_linearity = is_minimal_to_linearity(c, k);
  if (c.d() == 2) r.chordal = is_chordal_graph(c);
  return r;
}

namespace {

const char* tristate_name(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "not_applicable";
  }
}

std::string circuits_string(const Clutter& c) {
  std::string out = "[";
  bool first = true;
  for (VertexMask f : c.circuits()) {
    if (!first) out += " ";
    out += mask_to_string(f);
    first = false;
  }
  return out + "]";
}

}  // namespace

std::string render_report_text(const ClassificationReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += "n=" + std::to_string(r.n) + " d=" + std::to_string(r.d) + " field=" + r.field.name() + "\n";
  out += "clique_complex_dim=" + std::to_string(r.clique_complex_dim) +
         (r.clique_complex_dim_ok ? " (= d-1)" : " (!= d-1)") + "\n";
  out += std::string("connected=") + yn(r.connected) + "\n";
  out += std::string("strongly_connected=") + yn(r.strongly_connected) + "\n";
  out += std::string("forest=") + yn(r.forest) + "\n";
  out += std::string("tree=") + yn(r.tree) + "\n";
  out += std::string("pseudo_manifold=") + yn(r.pseudo_manifold) + "\n";
  out += std::string("orientable=") + tristate_name(r.orientable) + "\n";
  out += std::string("linear_resolution=") + yn(r.linear_resolution) + "\n";
  out += std::string("decomposable=") + yn(r.decomposable);
  if (r.decomposition) {
    const auto& dec = *r.decomposition;
    out += dec.kind == DecompositionKind::clique_intersection
               ? " kind=clique-intersection separator=" + mask_to_string(dec.separator)
               : " kind=sc-disjoint";
    out += "\n  part1=" + circuits_string(dec.part1);
    out += "\n  part2=" + circuits_string(dec.part2);
  } else if (!r.decompose_search_complete) {
    out += " (clique separators searched up to the cap only)";
  }
  out += "\n";
  out += std::string("almost_tree=") + yn(r.almost_tree) + " (forest reading)\n";
  out += "obstruction=";
  out += r.obstruction ? yn(*r.obstruction) : "cap-exceeded";
  out += "\n";
  out += "minimal_to_linearity=";
  out += r.minimal_to_linearity ? yn(*r.minimal_to_linearity) : "cap-exceeded";
  out += "\n";
  if (r.chordal) out += std::string("chordal=") + yn(*r.chordal) + "\n";
  return out;
}

std::string report_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["field"] = r.field.name();
  j["clique_complex_dim"] = r.clique_complex_dim;
  j["clique_complex_dim_ok"] = r.clique_complex_dim_ok;
  j["connected"] = r.connected;
  j["strongly_connected"] = r.strongly_connected;
  j["forest"] = r.forest;
  j["tree"] = r.tree;
  j["pseudo_manifold"] = r.pseudo_manifold;
  j["orientable"] = tristate_name(r.orientable);
  j["linear_resolution"] = r.linear_resolution;
  j["decomposable"] = r.decomposable;
  j["decompose_search_complete"] = r.decompose_search_complete;
  if (r.decomposition) {
    const auto& dec = *r.decomposition;
    nlohmann::ordered_json dj;
    dj["kind"] = dec.kind == DecompositionKind::clique_intersection ? "clique-intersection"
                                                                    : "sc-disjoint";
    dj["separator"] = mask_to_vertices(dec.separator);
    dj["part1"] = dec.part1.circuit_lists();
    dj["part2"] = dec.part2.circuit_lists();
    j["decomposition"] = dj;
  } else {
    j["decomposition"] = nullptr;
  }
  j["almost_tree"] = r.almost_tree;
  j["almost_tree_reading"] = "forest";
  if (r.obstruction)
    j["obstruction"] = *r.obstruction;
  else
    j["obstruction"] = "cap-exceeded";
  if (r.minimal_to_linearity)
    j["minimal_to_linearity"] = *r.minimal_to_linearity;
  else
    j["minimal_to_linearity"] = "cap-exceeded";
  if (r.chordal)
    j["chordal"] = *r.chordal;
  else
    j["chordal"] = nullptr;
  return j.dump();
}

}  // namespace linres
