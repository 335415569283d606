#include "linres/clutter.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace linres {

std::vector<int> mask_to_vertices(VertexMask m) {
  std::vector<int> out;
  while (m) {
    int b = __builtin_ctzll(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

VertexMask vertices_to_mask(const std::vector<int>& vs, int n) {
  VertexMask m = 0;
  for (int v : vs) {
    if (v < 1 || v > n)
      fail(errc::invalid_input, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    VertexMask bit = vertex_bit(v);
    if (m & bit) fail(errc::invalid_input, "repeated vertex " + std::to_string(v) + " in circuit");
    m |= bit;
  }
  return m;
}

std::string mask_to_string(VertexMask m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_vertices(m)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

Clutter::Clutter(int n, int d, std::vector<VertexMask> circuits)
    : n_(n), d_(d), circuits_(std::move(circuits)) {
  if (n_ < 0 || n_ > kMaxVertices)
    fail(errc::invalid_input, "vertex count must be in 0.." + std::to_string(kMaxVertices));
  if (d_ < 1) fail(errc::invalid_input, "uniformity d must be >= 1");
  const VertexMask full = full_mask();
  for (VertexMask f : circuits_) {
    if ((f & ~full) != 0) fail(errc::invalid_input, "circuit " + mask_to_string(f) + " has a vertex > n");
    if (popcount(f) != d_)
      fail(errc::invalid_input, "circuit " + mask_to_string(f) + " is not a " + std::to_string(d_) + "-set");
  }
  std::sort(circuits_.begin(), circuits_.end());
  auto dup = std::adjacent_find(circuits_.begin(), circuits_.end());
  if (dup != circuits_.end())
    fail(errc::invalid_input, "duplicate circuit " + mask_to_string(*dup));
}

Clutter Clutter::from_vertex_lists(int n, int d, const std::vector<std::vector<int>>& lists) {
  std::vector<VertexMask> cs;
  cs.reserve(lists.size());
  for (const auto& vs : lists) cs.push_back(vertices_to_mask(vs, n));
  return Clutter(n, d, std::move(cs));
}

bool Clutter::contains(VertexMask f) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), f);
}

VertexMask Clutter::vertex_support() const {
  VertexMask m = 0;
  for (VertexMask f : circuits_) m |= f;
  return m;
}

std::vector<std::vector<int>> Clutter::circuit_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(circuits_.size());
  for (VertexMask f : circuits_) out.push_back(mask_to_vertices(f));
  return out;
}

int SubmaximalCircuitTable::degree(VertexMask e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(e, 0));
  if (it == entries_.end() || it->first != e) return 0;
  return it->second;
}

Clutter maximal_clutter(int n, int d) {
  if (d < 1 || d > n) fail(errc::invalid_input, "maximal clutter needs 1 <= d <= n");
  std::vector<VertexMask> cs;
  VertexMask full = n == 64 ? ~0ull : (1ull << n) - 1;
  for_each_subset_of_mask(full, d, [&](VertexMask m) { cs.push_back(m); });
  return Clutter(n, d, std::move(cs));
}

Clutter complement(const Clutter& c) {
  std::vector<VertexMask> cs;
  for_each_subset_of_mask(c.full_mask(), c.d(), [&](VertexMask m) {
    if (!c.contains(m)) cs.push_back(m);
  });
  return Clutter(c.n(), c.d(), std::move(cs));
}

SubmaximalCircuitTable submaximal_circuits(const Clutter& c) {
  std::vector<std::pair<VertexMask, int>> entries;
  for (VertexMask f : c.circuits()) {
    VertexMask rest = f;
    while (rest) {
      VertexMask bit = rest & (0ull - rest);
      entries.emplace_back(f ^ bit, 1);
      rest ^= bit;
    }
  }
  std::sort(entries.begin(), entries.end());
  std::vector<std::pair<VertexMask, int>> merged;
  for (const auto& [e, one] : entries) {
    if (!merged.empty() && merged.back().first == e)
      merged.back().second += one;
    else
      merged.emplace_back(e, one);
  }
  return SubmaximalCircuitTable(std::move(merged));
}

InducedClutter induced(const Clutter& c, VertexMask w) {
  if ((w & ~c.full_mask()) != 0) fail(errc::invalid_input, "induced vertex set not within 1..n");
  std::vector<int> label = mask_to_vertices(w);
  std::vector<int> newpos(c.n() + 1, 0);
  for (std::size_t i = 0; i < label.size(); ++i) newpos[label[i]] = static_cast<int>(i) + 1;
  std::vector<VertexMask> cs;
  for (VertexMask f : c.circuits()) {
    if ((f & ~w) != 0) continue;
    VertexMask g = 0;
    for (int v : mask_to_vertices(f)) g |= vertex_bit(newpos[v]);
    cs.push_back(g);
  }
  return InducedClutter{Clutter(static_cast<int>(label.size()), c.d(), std::move(cs)),
                        std::move(label)};
}

namespace {

// Components of the circuit graph under `adjacent`; true when <= 1 component.
template <typename Adj>
bool circuit_graph_connected(const Clutter& c, Adj adjacent) {
  const auto& cs = c.circuits();
  if (cs.size() <= 1) return true;
  std::vector<char> seen(cs.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (seen[j] || !adjacent(cs[i], cs[j])) continue;
      seen[j] = 1;
      ++visited;
      stack.push_back(j);
    }
  }
  return visited == cs.size();
}

}  // namespace

bool connected(const Clutter& c) {
  return circuit_graph_connected(c, [](VertexMask a, VertexMask b) { return (a & b) != 0; });
}

bool strongly_connected(const Clutter& c) {
  const int d = c.d();
  return circuit_graph_connected(
      c, [d](VertexMask a, VertexMask b) { return popcount(a & b) == d - 1; });
}

Clutter remove_circuit(const Clutter& c, VertexMask f) {
  std::vector<VertexMask> cs;
  cs.reserve(c.size());
  for (VertexMask g : c.circuits())
    if (g != f) cs.push_back(g);
  if (cs.size() == c.size()) fail(errc::invalid_input, "circuit to remove is not present");
  return Clutter(c.n(), c.d(), std::move(cs));
}

Clutter peel_core(const Clutter& c) {
  std::vector<VertexMask> cs = c.circuits();
  bool changed = true;
  while (changed && !cs.empty()) {
    changed = false;
    SubmaximalCircuitTable table = submaximal_circuits(Clutter(c.n(), c.d(), cs));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      VertexMask rest = cs[i];
      bool removable = false;
      while (rest) {
        VertexMask bit = rest & (0ull - rest);
        if (table.degree(cs[i] ^ bit) == 1) {
          removable = true;
          break;
        }
        rest ^= bit;
      }
      if (removable) {
        cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return Clutter(c.n(), c.d(), std::move(cs));
}

bool is_forest(const Clutter& c) { return peel_core(c).empty(); }

bool is_tree(const Clutter& c) { return is_forest(c) && connected(c); }

namespace {

void skip_ws_and_comments(std::istream& in, int& line_no) {
  while (true) {
    int ch = in.peek();
    if (ch == '#') {
      std::string dummy;
      std::getline(in, dummy);
      ++line_no;
    } else if (ch == '\n') {
      in.get();
      ++line_no;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      in.get();
    } else {
      return;
    }
  }
}

}  // namespace

Clutter parse_clutter_text(std::istream& in) {
  int line_no = 1;
  skip_ws_and_comments(in, line_no);
  std::string header;
  if (!std::getline(in, header)) fail(errc::parse_error, "missing 'n=<int> d=<int>' header");
  int n = -1, d = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("n=", 0) == 0)
        n = std::atoi(tok.c_str() + 2);
      else if (tok.rfind("d=", 0) == 0)
        d = std::atoi(tok.c_str() + 2);
      else
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": unexpected token '" + tok + "'");
    }
  }
  if (n < 0 || d < 1)
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": header must be 'n=<int> d=<int>'");
  ++line_no;
  std::vector<std::vector<int>> lists;
  std::string line;
  for (; std::getline(in, line); ++line_no) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    std::vector<int> vs;
    int v;
    while (ls >> v) vs.push_back(v);
    if (!ls.eof()) fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected integers");
    if (vs.empty()) continue;
    if (static_cast<int>(vs.size()) != d)
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": circuit has " +
                                  std::to_string(vs.size()) + " vertices, expected " + std::to_string(d));
    lists.push_back(std::move(vs));
  }
  try {
    return Clutter::from_vertex_lists(n, d, lists);
  } catch (const error& e) {
    fail(errc::parse_error, e.what());
  }
}

Clutter parse_clutter_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    std::vector<std::vector<int>> lists;
    for (const auto& c : j.at("circuits")) lists.push_back(c.get<std::vector<int>>());
    return Clutter::from_vertex_lists(j.at("n").get<int>(), j.at("d").get<int>(), lists);
  } catch (const error& e) {
    fail(errc::parse_error, e.what());
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("bad clutter json: ") + e.what());
  }
}

Clutter parse_clutter(std::istream& in) {
  while (true) {
    int ch = in.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n')
      in.get();
    else
      break;
  }
  if (in.peek() == '{') return parse_clutter_json(in);
  return parse_clutter_text(in);
}

std::string to_text(const Clutter& c) {
  std::string out = "n=" + std::to_string(c.n()) + " d=" + std::to_string(c.d()) + "\n";
  for (const auto& vs : c.circuit_lists()) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(vs[i]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json_string(const Clutter& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n();
  j["d"] = c.d();
  j["circuits"] = c.circuit_lists();
  return j.dump();
}

}  // namespace linres
