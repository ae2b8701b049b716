#include "tnncomb/minor_ineq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tnn {

TLDiagram::TLDiagram(int n, std::vector<std::pair<int, int>> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (static_cast<int>(arcs_.size()) != n_) throw std::invalid_argument("matching needs n arcs");
  std::vector<char> seen(static_cast<size_t>(2 * n_) + 1, 0);
  for (auto& [a, b] : arcs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > 2 * n_ || a == b) throw std::invalid_argument("arc out of range");
    if (seen[static_cast<size_t>(a)] || seen[static_cast<size_t>(b)])
      throw std::invalid_argument("matching must cover every point once");
    seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = 1;
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (size_t i = 0; i < arcs_.size(); ++i)
    for (size_t j = i + 1; j < arcs_.size(); ++j) {
      auto [a, b] = arcs_[i];
      auto [c, d] = arcs_[j];
      if (a < c && c < b && b < d) throw std::invalid_argument("crossing arcs");
    }
}

std::string TLDiagram::str() const {
  std::ostringstream os;
  for (const auto& [a, b] : arcs_) os << "(" << a << "-" << b << ")";
  return os.str();
}

std::vector<TLDiagram> tl_basis(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  // noncrossing perfect matchings on a boundary line correspond to balanced
  // bracket sequences: a closer pairs with the most recent open point
  std::vector<TLDiagram> out;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> stack;
  std::function<void(int, int)> rec = [&](int pos, int open) {
    if (pos > 2 * n) {
      out.push_back(TLDiagram(n, arcs));
      return;
    }
    int remaining = 2 * n - pos + 1;
    if (open < remaining) {  // room to open another arc
      stack.push_back(pos);
      rec(pos + 1, open + 1);
      stack.pop_back();
    }
    if (open > 0) {
      int a = stack.back();
      stack.pop_back();
      arcs.push_back({a, pos});
      rec(pos + 1, open - 1);
      arcs.pop_back();
      stack.push_back(a);
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Coloring::Coloring(int n_, IndexSet I_) : n(n_), I(std::move(I_)) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (!I.empty() && I[I.size() - 1] > n) throw std::invalid_argument("index out of range");
}

Coloring Coloring::canonical() const {
  if (I.contains(1)) return *this;
  return Coloring(n, complement());
}

std::string Coloring::str() const {
  auto fmt = [](const IndexSet& s) {
    std::string t = "{";
    for (int k = 0; k < s.size(); ++k) {
      if (k) t += ",";
      t += std::to_string(s[k]);
    }
    return t + "}";
  };
  return "D" + fmt(I) + "D" + fmt(complement());
}

bool operator<(const Coloring& a, const Coloring& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.I.size() != b.I.size()) return a.I.size() < b.I.size();
  return a.I < b.I;
}

std::vector<TLDiagram> tl_subset(const Coloring& c) {
  int n = c.n;
  auto in_I = [&](int i) { return c.I.contains(i); };
  std::vector<TLDiagram> out;
  for (const auto& d : tl_basis(n)) {
    bool ok = true;
    for (const auto& [a, b] : d.arcs()) {
      bool a_src = a <= n, b_src = b <= n;
      int ai = a_src ? a : 2 * n + 1 - a;  // boundary point -> source/sink index
      int bi = b_src ? b : 2 * n + 1 - b;
      if (a_src && b_src) {
        if (in_I(ai) == in_I(bi)) ok = false;  // sources need distinct colors
      } else if (!a_src && !b_src) {
        if (in_I(ai) == in_I(bi)) ok = false;  // sinks need distinct colors
      } else {
        if (in_I(ai) != in_I(bi)) ok = false;  // source-sink needs equal colors
      }
      if (!ok) break;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

std::vector<std::vector<int>> lattice_partition(const Coloring& c) {
  // block key: the lower height of the band the unit step occupies
  std::map<int, std::vector<int>> blocks;
  int h = 0;
  for (int i = 1; i <= c.n; ++i) {
    int next = h + (c.I.contains(i) ? 1 : -1);
    blocks[std::min(h, next)].push_back(i);
    h = next;
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

std::string order_str(Order o) {
  switch (o) {
    case Order::Less: return "<=";
    case Order::Greater: return ">=";
    case Order::Equal: return "=";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

bool subset_of(const std::vector<TLDiagram>& a, const std::vector<TLDiagram>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool refines(const std::vector<std::vector<int>>& fine, const std::vector<std::vector<int>>& coarse) {
  for (const auto& block : fine) {
    bool inside = false;
    for (const auto& big : coarse)
      if (std::includes(big.begin(), big.end(), block.begin(), block.end())) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

Order compare(const Coloring& c1, const Coloring& c2, Method method) {
  if (c1.n != c2.n) throw std::invalid_argument("order mismatch");
  bool le, ge;
  if (method == Method::TL) {
    auto s1 = tl_subset(c1), s2 = tl_subset(c2);
    le = subset_of(s1, s2);
    ge = subset_of(s2, s1);
  } else {
    auto p1 = lattice_partition(c1), p2 = lattice_partition(c2);
    le = refines(p1, p2);
    ge = refines(p2, p1);
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::Less;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

Poset poset(int n, Method method, int bound) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (n > bound)
    throw guard_error("poset order exceeds bound (" + std::to_string(bound) + ")");
  Poset p;
  p.n = n;
  std::set<Coloring> reps;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
      if (mask & (1L << (i - 1))) v.push_back(i);
    reps.insert(Coloring(n, IndexSet(std::move(v))).canonical());
  }
  p.nodes.assign(reps.begin(), reps.end());

  int m = static_cast<int>(p.nodes.size());
  std::vector<std::vector<bool>> less(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      Order o = compare(p.nodes[static_cast<size_t>(a)], p.nodes[static_cast<size_t>(b)], method);
      if (o == Order::Less) less[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
      if (o == Order::Equal)
        throw std::logic_error("distinct products compare equal; node identification is incomplete");
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (less[static_cast<size_t>(a)][static_cast<size_t>(b)]) p.relations.push_back({a, b});
  for (const auto& [a, b] : p.relations) {
    bool cover = true;
    for (int mid = 0; mid < m && cover; ++mid)
      if (less[static_cast<size_t>(a)][static_cast<size_t>(mid)] &&
          less[static_cast<size_t>(mid)][static_cast<size_t>(b)])
        cover = false;
    if (cover) p.cover_edges.push_back({a, b});
  }
  return p;
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (size_t i = 0; i < p.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << p.nodes[i].str() << "\", shape=box];\n";
  for (const auto& [a, b] : p.cover_edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_json(const Poset& p) {
  // {"lhs": I, "rhs": J, "n": n} per inequality
  std::ostringstream os;
  os << "{\n  \"n\": " << p.n << ",\n  \"inequalities\": [\n";
  auto idx_list = [](const IndexSet& s) {
    std::string t = "[";
    for (int k = 0; k < s.size(); ++k) {
      if (k) t += ",";
      t += std::to_string(s[k]);
    }
    return t + "]";
  };
  for (size_t k = 0; k < p.relations.size(); ++k) {
    const auto& [a, b] = p.relations[k];
    os << "    {\"lhs\": " << idx_list(p.nodes[static_cast<size_t>(a)].I)
       << ", \"rhs\": " << idx_list(p.nodes[static_cast<size_t>(b)].I) << ", \"n\": " << p.n << "}";
    os << (k + 1 < p.relations.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string poset_to_text(const Poset& p) {
  std::ostringstream os;
  for (const auto& [a, b] : p.relations)
    os << p.nodes[static_cast<size_t>(a)].str() << " <= " << p.nodes[static_cast<size_t>(b)].str()
       << "\n";
  return os.str();
}

Rat minor_product(const Matrix& m, const Coloring& c) {
  if (!m.square() || m.rows() != c.n) throw std::invalid_argument("matrix size mismatch");
  return minor_det(m, c.I, c.I) * minor_det(m, c.complement(), c.complement());
}

bool verify_inequality_on(const Matrix& m, const Coloring& c1, const Coloring& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("order mismatch");
  return minor_product(m, c1) <= minor_product(m, c2);
}

}  // namespace tnn
