#include <gpd/simplicial.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gpd {

SimplicialComplex SimplicialComplex::make(int n_vertices,
                                          std::vector<std::array<int, 2>> edges,
                                          std::vector<std::array<int, 3>> triangles) {
  if (n_vertices < 0) throw std::invalid_argument("complex: negative vertex count");
  auto in_range = [&](int v) { return v >= 0 && v < n_vertices; };
  for (auto &e : edges) {
    if (!in_range(e[0]) || !in_range(e[1]))
      throw std::invalid_argument("complex: edge vertex out of range");
    if (e[0] == e[1]) throw std::invalid_argument("complex: degenerate edge");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  for (auto &t : triangles) {
    std::sort(t.begin(), t.end());
    if (!in_range(t[0]) || !in_range(t[2]))
      throw std::invalid_argument("complex: triangle vertex out of range");
    if (t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("complex: degenerate triangle");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());

  std::set<std::array<int, 2>> edge_set(edges.begin(), edges.end());
  for (auto const &t : triangles)
    for (auto const &e : {std::array<int, 2>{t[0], t[1]}, std::array<int, 2>{t[0], t[2]},
                          std::array<int, 2>{t[1], t[2]}})
      if (!edge_set.count(e))
        throw std::invalid_argument("complex: triangle with a missing edge");

  SimplicialComplex x;
  x.n_vertices_ = n_vertices;
  x.edges_ = std::move(edges);
  x.triangles_ = std::move(triangles);
  x.adj_.assign(n_vertices, {});
  for (auto const &e : x.edges_) {
    x.adj_[e[0]].push_back(e[1]);
    x.adj_[e[1]].push_back(e[0]);
  }
  for (auto &v : x.adj_) std::sort(v.begin(), v.end());
  return x;
}

bool SimplicialComplex::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::array<int, 2>{a, b});
}

std::vector<int> SimplicialComplex::star(int v) const {
  std::vector<int> s{v};
  s.insert(s.end(), adj_[v].begin(), adj_[v].end());
  std::sort(s.begin(), s.end());
  return s;
}

bool SimplicialComplex::is_connected() const {
  if (n_vertices_ <= 1) return true;
  std::vector<bool> seen(n_vertices_, false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (int w : adj_[queue[i]])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

SimplicialComplex path_complex(int n_edges) {
  if (n_edges < 0) throw std::invalid_argument("path_complex: negative length");
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < n_edges; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex::make(n_edges + 1, std::move(edges), {});
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw std::invalid_argument("cycle_complex: need n >= 3");
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::make(n, std::move(edges), {});
}

SimplicialComplex grid_complex(int dim, int subdivisions) {
  if (dim < 0 || dim > 2) throw std::invalid_argument("grid_complex: dimension must be <= 2");
  if (subdivisions < 1) throw std::invalid_argument("grid_complex: need at least one cell");
  int n = subdivisions;
  if (dim == 0) return SimplicialComplex::make(1, {}, {});
  if (dim == 1) return path_complex(n);
  int side = n + 1;
  auto id = [side](int i, int j) { return i * side + j; };
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < n) edges.push_back({id(i, j), id(i + 1, j)});
      if (j < n) edges.push_back({id(i, j), id(i, j + 1)});
      if (i < n && j < n) {
        edges.push_back({id(i, j), id(i + 1, j + 1)});
        triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
        triangles.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
      }
    }
  return SimplicialComplex::make(side * side, std::move(edges), std::move(triangles));
}

void ComplexAction::validate() const {
  int n = complex.n_vertices();
  if (vertex_act.size() != static_cast<size_t>(group.order()) * n)
    throw std::invalid_argument("complex action: table size");
  for (int v : vertex_act)
    if (v < 0 || v >= n) throw std::invalid_argument("complex action: vertex out of range");
  for (int v = 0; v < n; ++v)
    if (act(group.identity(), v) != v)
      throw std::invalid_argument("complex action: identity moves a vertex");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int v = 0; v < n; ++v)
        if (act(g, act(h, v)) != act(group.mul(g, h), v))
          throw std::invalid_argument("complex action: composition law fails");
  for (int g = 0; g < group.order(); ++g) {
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
      if (hit[act(g, v)]) throw std::invalid_argument("complex action: not a permutation");
      hit[act(g, v)] = true;
    }
    for (auto const &e : complex.edges())
      if (!complex.has_edge(act(g, e[0]), act(g, e[1])))
        throw std::invalid_argument("complex action: edge image missing");
    for (auto const &t : complex.triangles()) {
      std::array<int, 3> im{act(g, t[0]), act(g, t[1]), act(g, t[2])};
      std::sort(im.begin(), im.end());
      if (im[0] == im[1] || im[1] == im[2] ||
          !std::binary_search(complex.triangles().begin(), complex.triangles().end(), im))
        throw std::invalid_argument("complex action: triangle image missing");
    }
  }
}

ComplexAction trivial_action(FiniteGroup group, SimplicialComplex complex) {
  ComplexAction a;
  int n = complex.n_vertices();
  a.group = std::move(group);
  a.complex = std::move(complex);
  a.vertex_act.resize(static_cast<size_t>(a.group.order()) * n);
  for (int g = 0; g < a.group.order(); ++g)
    for (int v = 0; v < n; ++v) a.vertex_act[static_cast<size_t>(g) * n + v] = v;
  return a;
}

// ---- edge-path presentation -----------------------------------------------------

Word Pi1Data::path_word(std::vector<int> const &vertices) const {
  Word w;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    int u = vertices[i], v = vertices[i + 1];
    if (u == v) continue;
    auto it = edge_gen.find({std::min(u, v), std::max(u, v)});
    if (it == edge_gen.end()) throw std::invalid_argument("path_word: not an edge path");
    int gen = it->second;
    if (gen < 0) continue;  // tree edge
    w.push_back(u < v ? gen + 1 : -(gen + 1));
  }
  return free_reduce(std::move(w));
}

std::vector<int> Pi1Data::tree_path(int v) const {
  std::vector<int> path;
  for (int u = v; u >= 0; u = tree_parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

Word Pi1Data::edge_loop_word(int u, int v) const {
  std::vector<int> loop = tree_path(u);
  loop.push_back(v);
  std::vector<int> back = tree_path(v);
  std::reverse(back.begin(), back.end());
  loop.insert(loop.end(), back.begin(), back.end());
  return path_word(loop);
}

Pi1Data pi1_presentation(SimplicialComplex const &x, int basepoint) {
  if (basepoint < 0 || basepoint >= x.n_vertices())
    throw std::invalid_argument("pi1_presentation: basepoint out of range");
  if (!x.is_connected()) throw std::invalid_argument("pi1_presentation: complex not connected");

  Pi1Data data;
  data.basepoint = basepoint;
  data.tree_parent.assign(x.n_vertices(), -2);
  data.tree_parent[basepoint] = -1;
  std::vector<int> queue{basepoint};
  for (size_t i = 0; i < queue.size(); ++i)
    for (int w : x.neighbors()[queue[i]])
      if (data.tree_parent[w] == -2) {
        data.tree_parent[w] = queue[i];
        queue.push_back(w);
      }

  auto is_tree_edge = [&](int a, int b) {
    return data.tree_parent[a] == b || data.tree_parent[b] == a;
  };
  int n_gens = 0;
  for (auto const &e : x.edges()) {
    if (is_tree_edge(e[0], e[1]))
      data.edge_gen[{e[0], e[1]}] = -1;
    else
      data.edge_gen[{e[0], e[1]}] = n_gens++;
  }

  std::vector<Word> relators;
  for (auto const &t : x.triangles()) {
    // boundary path a -> b -> c -> a
    Word w;
    for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}}) {
      int gen = data.edge_gen.at({std::min(u, v), std::max(u, v)});
      if (gen >= 0) w.push_back(u < v ? gen + 1 : -(gen + 1));
    }
    if (!w.empty()) relators.push_back(std::move(w));
  }
  data.presentation = GroupPresentation(n_gens, std::move(relators));
  return data;
}

// ---- EG and products ---------------------------------------------------------------

ComplexAction eg_skeleton(FiniteGroup const &g) {
  int n = g.order();
  auto id = [n](int level, int e) { return level * n + e; };
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      edges.push_back({id(0, a), id(1, b)});
      edges.push_back({id(0, a), id(2, b)});
      edges.push_back({id(1, a), id(2, b)});
      for (int c = 0; c < n; ++c) triangles.push_back({id(0, a), id(1, b), id(2, c)});
    }
  ComplexAction action;
  action.group = g;
  action.complex = SimplicialComplex::make(3 * n, std::move(edges), std::move(triangles));
  action.vertex_act.resize(static_cast<size_t>(n) * 3 * n);
  for (int h = 0; h < n; ++h)
    for (int level = 0; level < 3; ++level)
      for (int e = 0; e < n; ++e)
        action.vertex_act[static_cast<size_t>(h) * 3 * n + id(level, e)] = id(level, g.mul(h, e));
  return action;
}

SimplicialComplex product_2skeleton(SimplicialComplex const &x, SimplicialComplex const &y) {
  int ny = y.n_vertices();
  auto id = [ny](int a, int b) { return a * ny + b; };

  // cells as sorted vertex lists, vertices included
  auto list_cells = [](SimplicialComplex const &c) {
    std::vector<std::vector<int>> cells;
    for (int v = 0; v < c.n_vertices(); ++v) cells.push_back({v});
    for (auto const &e : c.edges()) cells.push_back({e[0], e[1]});
    for (auto const &t : c.triangles()) cells.push_back({t[0], t[1], t[2]});
    return cells;
  };

  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  for (auto const &sx : list_cells(x))
    for (auto const &sy : list_cells(y)) {
      // grid points of sx x sy, product order; coordinates are positions
      int s = static_cast<int>(sx.size()), t = static_cast<int>(sy.size());
      std::vector<std::pair<int, int>> pts;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) pts.emplace_back(i, j);
      auto less_eq = [](std::pair<int, int> a, std::pair<int, int> b) {
        return a.first <= b.first && a.second <= b.second;
      };
      auto covers = [&](std::vector<std::pair<int, int>> const &chain) {
        std::vector<bool> row(s, false), col(t, false);
        for (auto [i, j] : chain) {
          row[i] = true;
          col[j] = true;
        }
        return std::all_of(row.begin(), row.end(), [](bool b) { return b; }) &&
               std::all_of(col.begin(), col.end(), [](bool b) { return b; });
      };
      // chains of length 2 and 3 with full support in both coordinates
      for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = 0; b < pts.size(); ++b) {
          if (a == b || !less_eq(pts[a], pts[b])) continue;
          if (covers({pts[a], pts[b]}) && s + t <= 4 && (s <= 2 && t <= 2))
            edges.push_back({id(sx[pts[a].first], sy[pts[a].second]),
                             id(sx[pts[b].first], sy[pts[b].second])});
          for (size_t c = 0; c < pts.size(); ++c) {
            if (c == a || c == b || !less_eq(pts[b], pts[c])) continue;
            if (!covers({pts[a], pts[b], pts[c]})) continue;
            triangles.push_back({id(sx[pts[a].first], sy[pts[a].second]),
                                 id(sx[pts[b].first], sy[pts[b].second]),
                                 id(sx[pts[c].first], sy[pts[c].second])});
          }
        }
    }
  return SimplicialComplex::make(x.n_vertices() * ny, std::move(edges), std::move(triangles));
}

int CellList::id(std::vector<int> key) const {
  std::sort(key.begin(), key.end());
  auto it = index.find(key);
  if (it == index.end()) throw std::invalid_argument("cells: unknown cell");
  return it->second;
}

CellList cells_of(SimplicialComplex const &x) {
  CellList out;
  for (int v = 0; v < x.n_vertices(); ++v) out.cells.push_back({v});
  for (auto const &e : x.edges()) out.cells.push_back({e[0], e[1]});
  for (auto const &t : x.triangles()) out.cells.push_back({t[0], t[1], t[2]});
  for (size_t i = 0; i < out.cells.size(); ++i) out.index[out.cells[i]] = static_cast<int>(i);
  return out;
}

namespace {

// strict faces of a cell (as sorted vertex lists)
std::vector<std::vector<int>> strict_faces(std::vector<int> const &cell) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(cell.size());
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) f.push_back(cell[i]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

Subdivision barycentric_subdivision(SimplicialComplex const &x) {
  Subdivision out;
  out.cells = cells_of(x);
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  for (size_t c = 0; c < out.cells.cells.size(); ++c) {
    auto const &cell = out.cells.cells[c];
    for (auto const &f : strict_faces(cell)) {
      int fid = out.cells.index.at(f);
      edges.push_back({std::min<int>(fid, static_cast<int>(c)),
                       std::max<int>(fid, static_cast<int>(c))});
      if (cell.size() == 3 && f.size() == 2)
        for (auto const &f2 : strict_faces(f)) {
          std::array<int, 3> t{out.cells.index.at(f2), fid, static_cast<int>(c)};
          std::sort(t.begin(), t.end());
          triangles.push_back(t);
        }
    }
  }
  out.complex = SimplicialComplex::make(static_cast<int>(out.cells.cells.size()),
                                        std::move(edges), std::move(triangles));
  return out;
}

ComplexAction subdivide_action(ComplexAction const &a) {
  Subdivision sub = barycentric_subdivision(a.complex);
  ComplexAction out;
  out.group = a.group;
  out.complex = sub.complex;
  int n = out.complex.n_vertices();
  out.vertex_act.resize(static_cast<size_t>(a.group.order()) * n);
  for (int g = 0; g < a.group.order(); ++g)
    for (int c = 0; c < n; ++c) {
      std::vector<int> image;
      for (int v : sub.cells.cells[c]) image.push_back(a.act(g, v));
      std::sort(image.begin(), image.end());
      out.vertex_act[static_cast<size_t>(g) * n + c] = sub.cells.index.at(image);
    }
  return out;
}

PosetProduct poset_product_2skeleton(SimplicialComplex const &x, SimplicialComplex const &y) {
  PosetProduct out;
  out.x_cells = cells_of(x);
  out.y_cells = cells_of(y);

  for (size_t i = 0; i < out.x_cells.cells.size(); ++i)
    for (size_t j = 0; j < out.y_cells.cells.size(); ++j) {
      out.vertex_index[{static_cast<int>(i), static_cast<int>(j)}] =
          static_cast<int>(out.vertex_cells.size());
      out.vertex_cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  // faces of each product cell: pairs of (face or self, face or self)
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  auto faces_with_self = [](std::vector<int> const &cell) {
    std::vector<std::vector<int>> fs = strict_faces(cell);
    fs.push_back(cell);
    return fs;
  };
  for (auto const &[i, j] : out.vertex_cells) {
    auto const &cx = out.x_cells.cells[i];
    auto const &cy = out.y_cells.cells[j];
    int top = out.vertex_index.at({i, j});
    for (auto const &fx : faces_with_self(cx))
      for (auto const &fy : faces_with_self(cy)) {
        if (fx.size() == cx.size() && fy.size() == cy.size()) continue;  // self pair
        int mid = out.vertex_index.at({out.x_cells.index.at(fx), out.y_cells.index.at(fy)});
        edges.push_back({std::min(mid, top), std::max(mid, top)});
        // chains below (fx, fy)
        for (auto const &gx : faces_with_self(fx))
          for (auto const &gy : faces_with_self(fy)) {
            if (gx.size() == fx.size() && gy.size() == fy.size()) continue;
            int low =
                out.vertex_index.at({out.x_cells.index.at(gx), out.y_cells.index.at(gy)});
            std::array<int, 3> t{low, mid, top};
            std::sort(t.begin(), t.end());
            triangles.push_back(t);
          }
      }
  }
  out.complex = SimplicialComplex::make(static_cast<int>(out.vertex_cells.size()),
                                        std::move(edges), std::move(triangles));
  return out;
}

ComplexAction diagonal_action(PosetProduct const &prod, ComplexAction const &ax,
                              ComplexAction const &ay) {
  if (!(ax.group == ay.group))
    throw std::invalid_argument("diagonal_action: factor groups differ");
  int m = ax.group.order();
  int n = prod.complex.n_vertices();

  auto cell_image = [](CellList const &cells, ComplexAction const &a, int cell, int g) {
    std::vector<int> image;
    for (int v : cells.cells[cell]) image.push_back(a.act(g, v));
    std::sort(image.begin(), image.end());
    return cells.index.at(image);
  };

  ComplexAction out;
  out.group = ax.group;
  out.complex = prod.complex;
  out.vertex_act.resize(static_cast<size_t>(m) * n);
  for (int g = 0; g < m; ++g)
    for (int v = 0; v < n; ++v) {
      auto [cx, cy] = prod.vertex_cells[v];
      out.vertex_act[static_cast<size_t>(g) * n + v] =
          prod.vertex_index.at({cell_image(prod.x_cells, ax, cx, g),
                                cell_image(prod.y_cells, ay, cy, g)});
    }
  return out;
}

QuotientResult quotient_by_free_action(ComplexAction const &input) {
  ComplexAction action = input;
  action.validate();

  for (int round = 0;; ++round) {
    int n = action.complex.n_vertices();
    int m = action.group.order();
    int e = action.group.identity();
    for (int g = 0; g < m; ++g) {
      if (g == e) continue;
      for (int v = 0; v < n; ++v)
        if (action.act(g, v) == v)
          throw std::invalid_argument("quotient: action is not free on vertices");
    }

    // orbit labels for vertices: least vertex in orbit
    std::vector<int> orbit_min(n);
    std::iota(orbit_min.begin(), orbit_min.end(), 0);
    for (int v = 0; v < n; ++v)
      for (int g = 0; g < m; ++g) orbit_min[v] = std::min(orbit_min[v], action.act(g, v));

    auto simplex_ok = [&](std::vector<int> const &s) {
      // regularity: s meets none of its translates; labels stay distinct
      for (int g = 0; g < m; ++g) {
        if (g == e) continue;
        for (int v : s)
          for (int w : s)
            if (action.act(g, v) == w) return false;
      }
      return true;
    };

    bool regular = true;
    for (auto const &ed : action.complex.edges())
      if (!simplex_ok({ed[0], ed[1]})) {
        regular = false;
        break;
      }
    if (regular)
      for (auto const &t : action.complex.triangles())
        if (!simplex_ok({t[0], t[1], t[2]})) {
          regular = false;
          break;
        }

    // orbit-injectivity: simplices with equal label sets must be translates
    std::map<std::vector<int>, std::vector<int>> first_with_label;
    auto injective = [&](std::vector<int> const &s) {
      std::vector<int> label;
      for (int v : s) label.push_back(orbit_min[v]);
      std::sort(label.begin(), label.end());
      auto [it, inserted] = first_with_label.try_emplace(label, s);
      if (inserted) return true;
      for (int g = 0; g < m; ++g) {
        std::vector<int> im;
        for (int v : it->second) im.push_back(action.act(g, v));
        std::sort(im.begin(), im.end());
        if (im == s) return true;
      }
      return false;
    };
    if (regular) {
      for (auto const &ed : action.complex.edges())
        if (!injective({ed[0], ed[1]})) {
          regular = false;
          break;
        }
      first_with_label.clear();
      if (regular)
        for (auto const &t : action.complex.triangles())
          if (!injective({t[0], t[1], t[2]})) {
            regular = false;
            break;
          }
    }

    if (!regular) {
      if (round >= 2)
        throw std::logic_error("quotient: regularity not reached after two subdivisions");
      action = subdivide_action(action);
      continue;
    }

    // build the quotient on orbit labels
    std::vector<int> label_ids(n, -1);
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
      if (orbit_min[v] == v) {
        label_ids[v] = static_cast<int>(reps.size());
        reps.push_back(v);
      }
    QuotientResult out;
    out.subdivisions = round;
    out.vertex_class_of.resize(n);
    for (int v = 0; v < n; ++v) out.vertex_class_of[v] = label_ids[orbit_min[v]];

    std::vector<std::array<int, 2>> edges;
    for (auto const &ed : action.complex.edges()) {
      int a = out.vertex_class_of[ed[0]], b = out.vertex_class_of[ed[1]];
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::array<int, 3>> triangles;
    for (auto const &t : action.complex.triangles()) {
      std::array<int, 3> im{out.vertex_class_of[t[0]], out.vertex_class_of[t[1]],
                            out.vertex_class_of[t[2]]};
      std::sort(im.begin(), im.end());
      triangles.push_back(im);
    }
    out.quotient =
        SimplicialComplex::make(static_cast<int>(reps.size()), std::move(edges), std::move(triangles));
    out.action = std::move(action);

    // covering-space consistency
    if (out.action.complex.euler_characteristic() !=
        m * out.quotient.euler_characteristic())
      throw std::logic_error("quotient: Euler characteristic is not multiplicative");
    return out;
  }
}

}  // namespace gpd
