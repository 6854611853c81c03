#include "knotsig/cover.hpp"

#include <numeric>
#include <queue>

#include <fmt/format.h>

#include "knotsig/errors.hpp"
#include "knotsig/gassner.hpp"
#include "knotsig/linalg.hpp"

namespace knotsig {

std::vector<int> FatGraphCover::element(int vertex) const {
  std::vector<int> g(orders.size());
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
    g[i] = static_cast<int>(vertex % orders[i]);
    vertex /= static_cast<int>(orders[i]);
  }
  return g;
}

int FatGraphCover::index(const std::vector<int>& g) const {
  long long v = 0;
  for (size_t i = 0; i < orders.size(); ++i) {
    long long x = g[i] % orders[i];
    if (x < 0) x += orders[i];
    v = v * orders[i] + x;
  }
  return static_cast<int>(v);
}

int FatGraphCover::step(int vertex, int color, int power) const {
  std::vector<int> g = element(vertex);
  g[color - 1] += power;
  return index(g);
}

int FatGraphCover::head(int edge) const {
  int j = edge % strands;
  return step(tail(edge), coloring.color(j), coloring.sign(j));
}

int FatGraphCover::connected_components() const {
  std::vector<int> parent(vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = vertices();
  for (int e = 0; e < edges(); ++e) {
    int a = find(tail(e)), b = find(head(e));
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

FatGraphCover::Boundary FatGraphCover::boundary_components() const {
  // Darts: 2e is edge e at its tail (out), 2e + 1 at its head (in). The face
  // permutation is sigma(alpha(d)) with sigma the ribbon rotation.
  const int n = strands;
  auto rotate = [&](int dart) {
    int e = dart / 2;
    int j = e % n;
    if (dart % 2 == 0) {
      // out_j at v -> in_j at v, which is the edge arriving along strand j.
      int v = tail(e);
      int src = step(v, coloring.color(j), -coloring.sign(j));
      return 2 * (src * n + j) + 1;
    }
    // in_j at v -> out_{j+1} at v
    int v = head(e);
    return 2 * (v * n + (j + 1) % n);
  };
  auto alpha = [](int dart) { return dart ^ 1; };
  std::vector<bool> seen(2 * edges(), false);
  Boundary b;
  for (int d = 0; d < 2 * edges(); ++d) {
    if (seen[d]) continue;
    bool outer = d % 2 == 0;
    for (int x = d; !seen[x]; x = rotate(alpha(x))) seen[x] = true;
    ++(outer ? b.outer : b.puncture);
  }
  return b;
}

long long FatGraphCover::predicted_outer_boundary() const {
  std::vector<int> l = ell(coloring);
  long long ord = 1;
  for (size_t i = 0; i < orders.size(); ++i) {
    long long k = orders[i];
    long long li = ((l[i] % k) + k) % k;
    ord = std::lcm(ord, k / std::gcd(k, li));
  }
  return group_order / ord;
}

FatGraphCover build_cover(const Coloring& c, const TorusPoint& omega) {
  if (omega.num_vars() != c.mu) throw DimensionMismatch("coloring and torus point disagree on mu");
  FatGraphCover cov;
  cov.coloring = c;
  cov.omega = omega;
  cov.orders = omega.orders();
  cov.strands = c.size();
  long long g = 1;
  for (long long k : cov.orders) g *= k;
  if (g * c.size() > 2'000'000) throw DimensionMismatch("cover too large");
  cov.group_order = static_cast<int>(g);

  // BFS spanning forest; every non-tree edge closes one fundamental cycle.
  std::vector<int> parent_edge(cov.vertices(), -2);
  std::vector<std::vector<std::pair<int, int>>> adj(cov.vertices());  // (edge, other end)
  for (int e = 0; e < cov.edges(); ++e) {
    adj[cov.tail(e)].push_back({e, cov.head(e)});
    adj[cov.head(e)].push_back({e, cov.tail(e)});
  }
  std::vector<bool> tree(cov.edges(), false);
  for (int root = 0; root < cov.vertices(); ++root) {
    if (parent_edge[root] != -2) continue;
    parent_edge[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [e, w] : adj[v])
        if (parent_edge[w] == -2) {
          parent_edge[w] = e;
          tree[e] = true;
          q.push(w);
        }
    }
  }
  // Signed tree path from the root of the component to v.
  auto root_path = [&](int v) {
    std::map<int, int> p;
    while (parent_edge[v] >= 0) {
      int e = parent_edge[v];
      bool forward = cov.head(e) == v;
      p[e] += forward ? 1 : -1;
      v = forward ? cov.tail(e) : cov.head(e);
    }
    return p;
  };
  for (int e = 0; e < cov.edges(); ++e) {
    if (tree[e]) continue;
    std::map<int, int> cyc = root_path(cov.tail(e));
    cyc[e] += 1;
    for (auto [f, k] : root_path(cov.head(e))) cyc[f] -= k;
    std::erase_if(cyc, [](const auto& kv) { return kv.second == 0; });
    cov.cycle_basis.push_back(std::move(cyc));
  }
  return cov;
}

template <class S>
S character(const FatGraphCover& cov, int vertex) {
  std::vector<int> g = cov.element(vertex);
  long long lcm = 1;
  for (const auto& r : cov.omega.rotations()) lcm = std::lcm(lcm, r.den);
  long long num = 0;
  for (size_t i = 0; i < g.size(); ++i) {
    const auto& r = cov.omega.rotation(static_cast<int>(i));
    num = (num + g[i] * (r.num * (lcm / r.den))) % lcm;
  }
  return unit_root<S>(num, lcm);
}

template <class S>
Mat<S> projector_matrix(const FatGraphCover& cov) {
  // c(edge (h, k)) = (1/|G|) sum_g conj(chi(g)) (g h, k)
  const int n = cov.strands, V = cov.vertices();
  Mat<S> P = Mat<S>::Zero(cov.edges(), cov.edges());
  std::vector<S> chi;
  for (int v = 0; v < V; ++v) chi.push_back(character<S>(cov, v));
  S inv = S(1) / S(real_t<S>(V));
  for (int h = 0; h < V; ++h) {
    std::vector<int> eh = cov.element(h);
    for (int g = 0; g < V; ++g) {
      std::vector<int> eg = cov.element(g);
      for (size_t i = 0; i < eg.size(); ++i) eg[i] += eh[i];
      int gh = cov.index(eg);
      for (int k = 0; k < n; ++k) P(gh * n + k, h * n + k) += cconj(chi[g]) * inv;
    }
  }
  return P;
}

namespace {

template <class S>
Mat<S> lifted_basis(const FatGraphCover& cov) {
  const Coloring& c = cov.coloring;
  const int n = c.size(), V = cov.vertices();
  if (n <= 1) return Mat<S>(cov.edges(), 0);
  // rows v_j of the colored reduced basis
  std::vector<S> T;
  for (int j = 0; j < n; ++j) T.push_back(cov.omega.power<S>(c.color(j), c.sign(j)));
  Mat<S> Vr = Mat<S>::Zero(n - 1, n);
  for (int j = 0; j + 1 < n; ++j) {
    Vr(j, j) = S(1) - T[j + 1];
    Vr(j, j + 1) = -(S(1) - T[j]);
  }
  Mat<S> B = Mat<S>::Zero(cov.edges(), n - 1);
  S inv = S(1) / S(real_t<S>(V));
  for (int g = 0; g < V; ++g) {
    S w = cconj(character<S>(cov, g)) * inv;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k + 1 < n; ++k)
        if (Vr(k, j) != S(0)) B(g * n + j, k) = w * Vr(k, j);
  }
  return B;
}

}  // namespace

template <class S>
EigenSpaceData<S> eigenspace_form(const FatGraphCover& cov, double tol) {
  require_nontrivial(cov.coloring, cov.omega);
  const int n = cov.strands;
  EigenSpaceData<S> out;
  out.basis = lifted_basis<S>(cov);
  const Eigen::Index d = out.basis.cols();
  out.dim = d == 0 ? 0 : rank(out.basis, tol);
  out.form = Mat<S>::Zero(d, d);
  if (d == 0) return out;

  // Boundary check: columns must be cycles.
  Mat<S> bd = Mat<S>::Zero(cov.vertices(), d);
  for (int e = 0; e < cov.edges(); ++e) {
    bd.row(cov.head(e)) += out.basis.row(e);
    bd.row(cov.tail(e)) -= out.basis.row(e);
  }
  if (max_abs(bd) > real_t<S>(1e-6) * max_abs(out.basis))
    throw SubspaceNotInvariant("lifted basis is not a cycle");

  // At each vertex the slots run b_out, a_out, a_in, b_in per strand; every
  // (a-slot, later b-slot) pair contributes f_a f_b a[e_a] conj(b[e_b]).
  struct Slot {
    bool is_a;
    int edge;
    int f;
  };
  Mat<S> conj_basis = conj_entries(out.basis);
  for (int v = 0; v < cov.vertices(); ++v) {
    std::vector<Slot> slots;
    for (int j = 0; j < n; ++j) {
      int out_e = v * n + j;
      int src = cov.step(v, cov.coloring.color(j), -cov.coloring.sign(j));
      int in_e = src * n + j;
      slots.push_back({false, out_e, 1});
      slots.push_back({true, out_e, 1});
      slots.push_back({true, in_e, -1});
      slots.push_back({false, in_e, -1});
    }
    Eigen::Matrix<S, 1, Eigen::Dynamic> suffix = Eigen::Matrix<S, 1, Eigen::Dynamic>::Zero(d);
    for (int x = static_cast<int>(slots.size()) - 1; x >= 0; --x) {
      const Slot& s = slots[x];
      if (s.is_a) {
        out.form += (S(real_t<S>(s.f)) * out.basis.row(s.edge)).transpose() * suffix;
      } else {
        suffix += S(real_t<S>(s.f)) * conj_basis.row(s.edge);
      }
    }
  }
  return out;
}

template <class S>
int projected_cycle_rank(const FatGraphCover& cov, double tol) {
  const int n = cov.strands, V = cov.vertices();
  if (cov.cycle_basis.empty()) return 0;
  std::vector<S> chi;
  for (int v = 0; v < V; ++v) chi.push_back(character<S>(cov, v));
  Mat<S> M = Mat<S>::Zero(cov.edges(), static_cast<Eigen::Index>(cov.cycle_basis.size()));
  S inv = S(1) / S(real_t<S>(V));
  for (size_t c = 0; c < cov.cycle_basis.size(); ++c)
    for (auto [e, k] : cov.cycle_basis[c]) {
      std::vector<int> eh = cov.element(cov.tail(e));
      for (int g = 0; g < V; ++g) {
        std::vector<int> eg = cov.element(g);
        for (size_t i = 0; i < eg.size(); ++i) eg[i] += eh[i];
        M(cov.index(eg) * n + e % n, c) += S(real_t<S>(k)) * cconj(chi[g]) * inv;
      }
    }
  return rank(M, tol);
}

namespace {

// (generator, power) with generators counted from 0
using Word = std::vector<std::pair<int, int>>;

// Images of the generators under the automorphism of one letter.
std::vector<Word> letter_images(int n, int i, int sign) {
  std::vector<Word> img(n);
  for (int j = 0; j < n; ++j) img[j] = {{j, 1}};
  if (sign > 0) {
    img[i] = {{i, 1}, {i + 1, 1}, {i, -1}};
    img[i + 1] = {{i, 1}};
  } else {
    img[i] = {{i + 1, 1}};
    img[i + 1] = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
  }
  return img;
}

}  // namespace

ChainMap braid_chain_map(const FatGraphCover& cov, const BraidWord& w) {
  if (!(w.bottom() == cov.coloring)) throw ColoringMismatch("braid and cover colorings differ");
  const int n = cov.strands;
  ChainMap total(cov.edges());
  for (int e = 0; e < cov.edges(); ++e) total[e][e] = 1;
  Coloring c = w.bottom();
  for (const Letter& l : w.letters()) {
    Coloring next = c;
    std::swap(next.entries[l.index - 1], next.entries[l.index]);
    auto img = letter_images(n, l.index - 1, l.sign);
    ChainMap letter(cov.edges());
    for (int v = 0; v < cov.vertices(); ++v)
      for (int j = 0; j < n; ++j) {
        int h = v;
        auto& col = letter[v * n + j];
        for (auto [k, p] : img[j]) {
          if (p > 0) {
            col[h * n + k] += 1;
            h = cov.step(h, next.color(k), next.sign(k));
          } else {
            h = cov.step(h, next.color(k), -next.sign(k));
            col[h * n + k] -= 1;
          }
        }
        if (h != cov.step(v, c.color(j), c.sign(j)))
          throw SubspaceNotInvariant("lifted path does not close up");
        std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
      }
    ChainMap composed(cov.edges());
    for (int e = 0; e < cov.edges(); ++e) {
      for (auto [mid, a] : total[e])
        for (auto [f, b] : letter[mid]) composed[e][f] += a * b;
      std::erase_if(composed[e], [](const auto& kv) { return kv.second == 0; });
    }
    total = std::move(composed);
    c = next;
  }
  return total;
}

template <class S>
Mat<S> braid_action(const FatGraphCover& cov, const EigenSpaceData<S>& data, const BraidWord& w,
                    double tol) {
  if (!w.is_endomorphism()) throw NotEndomorphism("braid_action needs an endomorphism");
  ChainMap m = braid_chain_map(cov, w);
  const Eigen::Index d = data.basis.cols();
  Mat<S> image = Mat<S>::Zero(cov.edges(), d);
  for (int e = 0; e < cov.edges(); ++e)
    for (auto [f, k] : m[e]) image.row(f) += S(real_t<S>(k)) * data.basis.row(e);
  Mat<S> X = solve_least_norm(data.basis, image, tol);
  real_t<S> scale = max_abs(image);
  if (scale < 1) scale = 1;
  if (max_abs(Mat<S>(data.basis * X - image)) > real_t<S>(1e-6) * scale)
    throw SubspaceNotInvariant("eigenspace is not invariant under the braid");
  return X;
}

#define KNOTSIG_INST(S)                                                                         \
  template S character<S>(const FatGraphCover&, int);                                           \
  template Mat<S> projector_matrix<S>(const FatGraphCover&);                                    \
  template EigenSpaceData<S> eigenspace_form<S>(const FatGraphCover&, double);                  \
  template int projected_cycle_rank<S>(const FatGraphCover&, double);                           \
  template Mat<S> braid_action<S>(const FatGraphCover&, const EigenSpaceData<S>&, const BraidWord&, \
                                  double);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig
