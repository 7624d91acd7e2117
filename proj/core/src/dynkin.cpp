#include "wittflags/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>

namespace wittflags {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end || value <= 0)
    throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct LocalEdge {
  int a;
  int b;
  int multiplicity;
  int long_end;
};

// Bourbaki edges of one component, 1-based local indices.
std::vector<LocalEdge> standard_edges(ComponentType t) {
  const int n = t.rank;
  std::vector<LocalEdge> out;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) out.push_back({i, i + 1, 1, -1});
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) out.push_back({i, i + 1, 1, -1});
      out.push_back({n - 1, n, 2, n - 1});
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) out.push_back({i, i + 1, 1, -1});
      out.push_back({n - 1, n, 2, n});
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) out.push_back({i, i + 1, 1, -1});
      out.push_back({n - 2, n, 1, -1});
      break;
    case Family::E:
      out.push_back({1, 3, 1, -1});
      out.push_back({2, 4, 1, -1});
      for (int i = 3; i < n; ++i) out.push_back({i, i + 1, 1, -1});
      break;
    case Family::F:
      out.push_back({1, 2, 1, -1});
      out.push_back({2, 3, 2, 2});
      out.push_back({3, 4, 1, -1});
      break;
    case Family::G:
      out.push_back({1, 2, 3, 2});
      break;
  }
  return out;
}

std::vector<int> standard_lengths(ComponentType t) {
  const int n = t.rank;
  std::vector<int> len(n + 1, 1);
  switch (t.family) {
    case Family::B:
      for (int i = 1; i < n; ++i) len[i] = 2;
      break;
    case Family::C:
      len[n] = 2;
      break;
    case Family::F:
      len[1] = len[2] = 2;
      break;
    case Family::G:
      len[2] = 3;
      break;
    default:
      break;
  }
  return len;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string ComponentType::name() const { return family_letter(family) + std::to_string(rank); }

void validate_component_type(ComponentType t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B:
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 4; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw ParseError("rank out of range for diagram " + t.name());
}

DynkinDiagram::DynkinDiagram(std::vector<ComponentType> components) : components_(std::move(components)) {
  if (components_.empty()) throw ParseError("empty diagram");
  int total = 0;
  for (const auto& t : components_) {
    validate_component_type(t);
    offsets_.push_back(total);
    total += t.rank;
  }
  adjacency_.resize(total);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& t = components_[c];
    const int off = offsets_[c];
    const auto len = standard_lengths(t);
    for (int i = 1; i <= t.rank; ++i) {
      component_of_.push_back(static_cast<int>(c));
      length_sq_.push_back(len[i]);
    }
    for (const auto& e : standard_edges(t)) {
      const int a = off + std::min(e.a, e.b) - 1;
      const int b = off + std::max(e.a, e.b) - 1;
      edges_.push_back({a, b, e.multiplicity, e.long_end < 0 ? -1 : off + e.long_end - 1});
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

DynkinDiagram DynkinDiagram::parse(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty diagram spec");
  std::vector<ComponentType> comps;
  for (auto token : split(text, ';')) {
    if (token.empty()) throw ParseError("empty component in diagram spec '" + std::string(text) + "'");
    const char letter = token.front();
    if (letter < 'A' || letter > 'G')
      throw ParseError("unknown family letter '" + std::string(1, letter) + "'");
    const int rank = parse_positive(trim(token.substr(1)), "rank");
    comps.push_back({static_cast<Family>(letter - 'A'), rank});
  }
  return DynkinDiagram(std::move(comps));
}

int DynkinDiagram::bond(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_)
    if (e.a == a && e.b == b) return e.multiplicity;
  return 0;
}

int DynkinDiagram::cartan(int row, int col) const {
  if (row == col) return 2;
  const int a = std::min(row, col);
  const int b = std::max(row, col);
  for (const auto& e : edges_) {
    if (e.a != a || e.b != b) continue;
    if (e.multiplicity == 1) return -1;
    return e.long_end == row ? -e.multiplicity : -1;
  }
  return 0;
}

std::string DynkinDiagram::label(int node) const {
  if (node < 0 || node >= rank()) throw ParseError("node index out of range");
  if (components_.size() == 1) return std::to_string(local_index(node));
  return std::to_string(component_of(node) + 1) + "." + std::to_string(local_index(node));
}

int DynkinDiagram::parse_node(std::string_view text) const {
  text = trim(text);
  int comp = 1;
  std::string_view local = text;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    comp = parse_positive(trim(text.substr(0, dot)), "component index");
    local = trim(text.substr(dot + 1));
  } else if (components_.size() != 1) {
    throw ParseError("node '" + std::string(text) + "' needs the form c.i on a reducible diagram");
  }
  const int i = parse_positive(local, "node index");
  if (comp > static_cast<int>(components_.size()) || i > components_[comp - 1].rank)
    throw ParseError("no node '" + std::string(text) + "' in " + spec());
  return node(comp - 1, i);
}

std::string DynkinDiagram::spec() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) out += ';';
    out += components_[c].name();
  }
  return out;
}

IntMatrix cartan_matrix(const DynkinDiagram& d) {
  const int n = d.rank();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d.cartan(i, j);
  return m;
}

IntMatrix cartan_matrix(ComponentType t) { return cartan_matrix(DynkinDiagram({t})); }

RationalMatrix inverse_cartan(ComponentType t) { return invert(to_rational(cartan_matrix(t))); }

int positive_root_count(ComponentType t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

Integer weyl_group_order(ComponentType t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return factorial(l + 1);
    case Family::B:
    case Family::C: return checked_mul(Integer(1) << l, factorial(l));
    case Family::D: return checked_mul(Integer(1) << (l - 1), factorial(l));
    case Family::E: return l == 6 ? 51840 : l == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

bool ClassifiedComponent::contains(int node) const { return local_of(node) != 0; }

int ClassifiedComponent::local_of(int node) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == node) return static_cast<int>(i) + 1;
  return 0;
}

ClassifiedComponent classify(const DynkinDiagram& d, std::vector<int> nodes) {
  if (nodes.empty()) throw InternalError("classify: empty node set");
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const int ambient = d.component_of(nodes.front());
  const int k = static_cast<int>(nodes.size());
  auto inside = [&](int v) { return std::binary_search(nodes.begin(), nodes.end(), v); };

  std::vector<std::vector<int>> adj(d.rank());
  int multi_a = -1, multi_b = -1, multi = 1, edge_count = 0;
  for (const auto& e : d.edges()) {
    if (!inside(e.a) || !inside(e.b)) continue;
    ++edge_count;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
    if (e.multiplicity > 1) {
      multi = e.multiplicity;
      multi_a = e.a;
      multi_b = e.b;
    }
  }
  if (edge_count != k - 1) throw InternalError("classify: node set is not connected");
  for (int v : nodes)
    if (d.component_of(v) != ambient) throw InternalError("classify: node set spans components");

  // Walks a path from `start` away from `prev` through the induced subgraph.
  auto walk = [&](int start, int prev) {
    std::vector<int> path{start};
    while (adj[path.back()].size() <= 2) {
      int next = -1;
      for (int w : adj[path.back()])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = path.back();
      path.push_back(next);
    }
    return path;
  };

  std::vector<int> endpoints;
  int branch = -1;
  for (int v : nodes) {
    if (adj[v].size() <= 1) endpoints.push_back(v);
    if (adj[v].size() == 3) branch = v;
    if (adj[v].size() > 3) throw InternalError("classify: node of degree > 3");
  }

  ClassifiedComponent out{{Family::A, k}, {}, ambient};
  const Family ambient_family = d.components()[ambient].family;

  if (k == 1) {
    out.nodes = nodes;
  } else if (multi == 3) {
    const int short_end = d.length_squared(multi_a) < d.length_squared(multi_b) ? multi_a : multi_b;
    out.type = {Family::G, 2};
    out.nodes = {short_end, short_end == multi_a ? multi_b : multi_a};
  } else if (multi == 2) {
    const int long_end = d.length_squared(multi_a) > d.length_squared(multi_b) ? multi_a : multi_b;
    const int short_end = long_end == multi_a ? multi_b : multi_a;
    if (branch >= 0) throw InternalError("classify: branched diagram with a double bond");
    if (k == 2) {
      if (ambient_family == Family::C) {
        out.type = {Family::C, 2};
        out.nodes = {short_end, long_end};
      } else {
        out.type = {Family::B, 2};
        out.nodes = {long_end, short_end};
      }
    } else if (adj[short_end].size() == 1) {
      out.type = {Family::B, k};
      out.nodes = walk(short_end, -1);
      std::reverse(out.nodes.begin(), out.nodes.end());
    } else if (adj[long_end].size() == 1) {
      out.type = {Family::C, k};
      out.nodes = walk(long_end, -1);
      std::reverse(out.nodes.begin(), out.nodes.end());
    } else {
      if (k != 4) throw InternalError("classify: interior double bond outside F4");
      out.type = {Family::F, 4};
      int start = -1;
      for (int v : endpoints)
        if (d.length_squared(v) > 1 && std::find(adj[v].begin(), adj[v].end(), long_end) != adj[v].end()) start = v;
      out.nodes = walk(start, -1);
    }
  } else if (branch < 0) {
    out.nodes = walk(std::min(endpoints[0], endpoints[1]), -1);
  } else {
    std::vector<std::vector<int>> arms;
    for (int first : adj[branch]) {
      auto arm = walk(first, branch);
      arms.push_back(arm);
    }
    // Shorter arms first; equal lengths ordered by the id of the far end.
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x.back() < y.back();
    });
    const std::size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
    if (a == 1 && b == 1) {
      // D_k: the long arm carries 1..k-2. In D4 every arm has length one and
      // the smallest id plays the long arm.
      std::vector<int> tail, forks;
      if (c == 1) {
        std::vector<int> ends{arms[0][0], arms[1][0], arms[2][0]};
        std::sort(ends.begin(), ends.end());
        tail = {ends[0]};
        forks = {ends[1], ends[2]};
      } else {
        tail = arms[2];
        forks = {arms[0][0], arms[1][0]};
        std::sort(forks.begin(), forks.end());
      }
      out.type = {Family::D, k};
      out.nodes.assign(tail.rbegin(), tail.rend());
      out.nodes.push_back(branch);
      out.nodes.insert(out.nodes.end(), forks.begin(), forks.end());
    } else if (a == 1 && b == 2 && c >= 2 && c <= 4) {
      out.type = {Family::E, k};
      out.nodes = {arms[1][1], arms[0][0], arms[1][0], branch};
      out.nodes.insert(out.nodes.end(), arms[2].begin(), arms[2].end());
    } else {
      throw InternalError("classify: branched node set is not of type D or E");
    }
  }

  validate_component_type(out.type);
  if (static_cast<int>(out.nodes.size()) != k) throw InternalError("classify: relabelling lost nodes");
  const IntMatrix standard = cartan_matrix(out.type);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (standard(i, j) != d.cartan(out.nodes[i], out.nodes[j]))
        throw InternalError("classify: relabelling of " + out.type.name() + " is not an isomorphism");
  return out;
}

ParabolicSubset::ParabolicSubset(DynkinDiagram diagram, std::vector<int> theta)
    : diagram_(std::move(diagram)), theta_(std::move(theta)) {
  const int n = diagram_.rank();
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  in_theta_.assign(n, false);
  for (int v : theta_) {
    if (v < 0 || v >= n) throw ParseError("theta node out of range");
    in_theta_[v] = true;
  }
  white_index_.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (!in_theta_[v]) {
      white_index_[v] = static_cast<int>(white_.size());
      white_.push_back(v);
    }

  component_index_.assign(n, -1);
  for (int start : theta_) {
    if (component_index_[start] >= 0) continue;
    const int idx = static_cast<int>(components_.size());
    std::vector<int> members;
    std::queue<int> todo;
    todo.push(start);
    component_index_[start] = idx;
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      members.push_back(v);
      for (int w : diagram_.neighbours(v))
        if (in_theta_[w] && component_index_[w] < 0) {
          component_index_[w] = idx;
          todo.push(w);
        }
    }
    components_.push_back(classify(diagram_, members));
  }

  for (int beta : white_) {
    std::vector<int> seen(components_.size(), 0);
    for (int w : diagram_.neighbours(beta))
      if (in_theta_[w] && ++seen[component_index_[w]] > 1)
        throw InternalError("white node with two neighbours in one Theta-component");
  }
}

const ClassifiedComponent& ParabolicSubset::component_for(int node) const {
  const int idx = component_index_.at(node);
  if (idx < 0) throw InternalError("component_for: node is not in Theta");
  return components_[idx];
}

std::optional<int> ParabolicSubset::neighbour_in(int beta, const ClassifiedComponent& c) const {
  for (int w : diagram_.neighbours(beta))
    if (c.contains(w)) return w;
  return std::nullopt;
}

std::vector<int> ParabolicSubset::white_neighbours(const ClassifiedComponent& c) const {
  std::vector<int> out;
  for (int beta : white_)
    if (neighbour_in(beta, c)) out.push_back(beta);
  return out;
}

std::vector<int> parse_node_list(const DynkinDiagram& d, std::string_view text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (auto token : split(text, ',')) {
    if (token.empty()) throw ParseError("empty entry in node list '" + std::string(text) + "'");
    out.push_back(d.parse_node(token));
  }
  return out;
}

}  // namespace wittflags
