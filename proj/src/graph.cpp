#include "tutte/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace tutte {

namespace {

void check_endpoints(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  for (auto [u, v] : edges)
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range");
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  check_endpoints(n_, edges_);
  adjacency_.assign(n_, 0);
  mult_.assign(n_ * n_, 0);
  for (auto [u, v] : edges_) {
    ++mult_[(u - 1) * n_ + (v - 1)];
    if (u != v) {
      ++mult_[(v - 1) * n_ + (u - 1)];
      adjacency_[u - 1] |= singleton(v);
      adjacency_[v - 1] |= singleton(u);
    }
  }
}

Multigraph Multigraph::induced(VertexSet x) const {
  std::vector<int> label(n_ + 1, 0);
  int k = 0;
  for (int v = 1; v <= n_; ++v)
    if (x & singleton(v)) label[v] = ++k;
  std::vector<Edge> kept;
  for (auto [u, v] : edges_)
    if (label[u] && label[v]) kept.emplace_back(label[u], label[v]);
  return Multigraph(k, std::move(kept));
}

Multigraph Multigraph::relabel(const std::vector<int>& perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u - 1], perm[v - 1]);
  return Multigraph(n_, std::move(e));
}

Digraph::Digraph(int n, std::vector<Edge> arcs) : n_(n), arcs_(std::move(arcs)) {
  check_endpoints(n_, arcs_);
  out_.assign(n_, 0);
  mult_.assign(n_ * n_, 0);
  for (auto [u, v] : arcs_) {
    ++mult_[(u - 1) * n_ + (v - 1)];
    out_[u - 1] |= singleton(v);
  }
}

Digraph Digraph::relabel(const std::vector<int>& perm) const {
  std::vector<Edge> a;
  a.reserve(arcs_.size());
  for (auto [u, v] : arcs_) a.emplace_back(perm[u - 1], perm[v - 1]);
  return Digraph(n_, std::move(a));
}

EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  bool have_n = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_n) {
      long long n;
      if (tokens.size() != 1 || !parse_int(tokens[0], n))
        throw ParseError(lineno, "expected vertex count");
      if (n > kMaxVertices)
        throw CapacityError(lineno, "vertex count " + std::to_string(n) +
                                        " exceeds " + std::to_string(kMaxVertices));
      if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
      out.n = static_cast<int>(n);
      have_n = true;
      continue;
    }
    long long u, v;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      throw ParseError(lineno, "expected two vertex labels");
    if (u < 1 || u > out.n || v < 1 || v > out.n)
      throw ParseError(lineno, "endpoint out of range 1.." + std::to_string(out.n));
    out.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_n) throw ParseError(lineno, "missing vertex count");
  return out;
}

Multigraph parse_graph(std::istream& in) {
  auto e = parse_edge_list(in);
  return Multigraph(e.n, std::move(e.edges));
}

Digraph parse_digraph(std::istream& in) {
  auto e = parse_edge_list(in);
  return Digraph(e.n, std::move(e.edges));
}

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

std::string to_edge_list(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream os;
  os << d.vertex_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<VertexSet> components_of(const Multigraph& g, VertexSet x) {
  std::vector<VertexSet> out;
  VertexSet rest = x;
  while (rest) {
    VertexSet comp = rest & (~rest + 1);
    VertexSet frontier = comp;
    while (frontier) {
      int v = min_vertex(frontier);
      frontier &= frontier - 1;
      VertexSet fresh = g.neighbours(v) & x & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Multigraph& g) {
  return components_of(g, full_set(g.vertex_count()));
}

bool is_connected(const Multigraph& g, VertexSet x) {
  if (!x) return false;
  VertexSet comp = x & (~x + 1);
  VertexSet frontier = comp;
  while (frontier) {
    int v = min_vertex(frontier);
    frontier &= frontier - 1;
    VertexSet fresh = g.neighbours(v) & x & ~comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp == x;
}

int induced_edge_count(const Multigraph& g, VertexSet x) {
  int count = 0;
  for (auto [u, v] : g.edges())
    if ((x & singleton(u)) && (x & singleton(v))) ++count;
  return count;
}

std::vector<std::uint32_t> induced_edge_table(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> table(std::size_t{1} << n, 0);
  for (std::size_t x = 1; x < table.size(); ++x) {
    const VertexSet s = static_cast<VertexSet>(x);
    const int i = min_vertex(s);
    const VertexSet rest = s & (s - 1);
    std::uint32_t add = g.loops(i);
    for (VertexSet nb = g.neighbours(i) & rest; nb; nb &= nb - 1)
      add += g.multiplicity(i, min_vertex(nb));
    table[x] = table[rest] + add;
  }
  return table;
}

mpz_class spanning_tree_count(const Multigraph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g, full_set(n))) return 0;
  if (n == 1) return 1;
  // Reduced Laplacian (drop vertex n), fraction-free Bareiss elimination.
  const int d = n - 1;
  std::vector<mpz_class> a(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        int deg = 0;
        for (int k = 1; k <= n; ++k)
          if (k != i + 1) deg += g.multiplicity(i + 1, k);
        a[i * d + j] = deg;
      } else {
        a[i * d + j] = -g.multiplicity(i + 1, j + 1);
      }
    }
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (a[k * d + k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < d; ++r)
        if (a[r * d + k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < d; ++j) std::swap(a[k * d + j], a[swap * d + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        mpz_class t = a[i * d + j] * a[k * d + k] - a[i * d + k] * a[k * d + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * d + j] = t;
      }
    }
    prev = a[k * d + k];
  }
  mpz_class det = a[(d - 1) * d + (d - 1)];
  return sign < 0 ? mpz_class(-det) : det;
}

mpz_class count_connected_sets(const Multigraph& g) {
  // Walks the same lattice as the memoised connected-set evaluation:
  // a connected X leads to the components of X \ {i} for each i in X.
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> stack;
  for (VertexSet c : connected_components(g)) stack.push_back(c);
  while (!stack.empty()) {
    VertexSet x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (VertexSet r = x; r; r &= r - 1) {
      VertexSet sub = x & ~(r & (~r + 1));
      for (VertexSet c : components_of(g, sub))
        if (!seen.count(c)) stack.push_back(c);
    }
  }
  return static_cast<unsigned long>(seen.size());
}

}  // namespace tutte
