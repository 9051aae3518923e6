#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "catv/fincat.hpp"

namespace catv {

CatPtr build_opposite(const CatPtr& c) {
  CatBuilder b(c->name.empty() ? "op" : c->name + "_op");
  for (int a = 0; a < c->n_obj(); ++a) b.add_object(c->objects[a]);
  std::vector<int> idx(c->n_mor());
  for (int a = 0; a < c->n_obj(); ++a) idx[c->id_of[a]] = b.id_of(a);
  for (int m = 0; m < c->n_mor(); ++m)
    if (!c->is_identity(m))
      idx[m] = b.add_mor(c->mors[m].name + "^op", c->mors[m].cod, c->mors[m].dom);
  for (int f = 0; f < c->n_mor(); ++f)
    for (int g = 0; g < c->n_mor(); ++g)
      if (c->composable(g, f)) b.set_compose(idx[f], idx[g], idx[c->compose(g, f)]);
  return b.validate();
}

ProductData build_product(const CatPtr& x, const CatPtr& y) {
  ProductData out;
  CatBuilder b("(" + x->name + "x" + y->name + ")");
  out.obj_idx.assign(x->n_obj(), std::vector<int>(y->n_obj(), -1));
  out.mor_idx.assign(x->n_mor(), std::vector<int>(y->n_mor(), -1));
  for (int a = 0; a < x->n_obj(); ++a)
    for (int c = 0; c < y->n_obj(); ++c)
      out.obj_idx[a][c] = b.add_object("(" + x->objects[a] + "," + y->objects[c] + ")");
  for (int f = 0; f < x->n_mor(); ++f)
    for (int g = 0; g < y->n_mor(); ++g) {
      if (x->is_identity(f) && y->is_identity(g)) {
        out.mor_idx[f][g] = b.id_of(out.obj_idx[x->mors[f].dom][y->mors[g].dom]);
        continue;
      }
      out.mor_idx[f][g] =
          b.add_mor("(" + x->mors[f].name + "," + y->mors[g].name + ")",
                    out.obj_idx[x->mors[f].dom][y->mors[g].dom],
                    out.obj_idx[x->mors[f].cod][y->mors[g].cod]);
    }
  for (int f = 0; f < x->n_mor(); ++f)
    for (int f2 = 0; f2 < x->n_mor(); ++f2) {
      if (!x->composable(f, f2)) continue;
      for (int g = 0; g < y->n_mor(); ++g)
        for (int g2 = 0; g2 < y->n_mor(); ++g2) {
          if (!y->composable(g, g2)) continue;
          b.set_compose(out.mor_idx[f][g], out.mor_idx[f2][g2],
                        out.mor_idx[x->compose(f, f2)][y->compose(g, g2)]);
        }
    }
  out.cat = b.validate();
  out.pr1.src = out.pr2.src = out.cat;
  out.pr1.dst = x;
  out.pr2.dst = y;
  out.pr1.obj.resize(out.cat->n_obj());
  out.pr2.obj.resize(out.cat->n_obj());
  out.pr1.mor.resize(out.cat->n_mor());
  out.pr2.mor.resize(out.cat->n_mor());
  for (int a = 0; a < x->n_obj(); ++a)
    for (int c = 0; c < y->n_obj(); ++c) {
      out.pr1.obj[out.obj_idx[a][c]] = a;
      out.pr2.obj[out.obj_idx[a][c]] = c;
    }
  for (int f = 0; f < x->n_mor(); ++f)
    for (int g = 0; g < y->n_mor(); ++g) {
      out.pr1.mor[out.mor_idx[f][g]] = f;
      out.pr2.mor[out.mor_idx[f][g]] = g;
    }
  return out;
}

CosliceData build_coslice(const CatPtr& c, int obj) {
  CosliceData out;
  CatBuilder b(c->objects[obj] + "\\" + c->name);
  std::vector<int> obj_idx(c->n_mor(), -1);  // arrow u out of obj -> coslice object
  for (int u = 0; u < c->n_mor(); ++u)
    if (c->mors[u].dom == obj) {
      obj_idx[u] = b.add_object(c->mors[u].name);
      out.obj_arrow.push_back(u);
    }
  // Morphism (u -> u;w) for every w composable with u; w determines it.
  std::map<std::pair<int, int>, int> cell;  // (coslice source obj, w) -> mor
  for (int u = 0; u < c->n_mor(); ++u) {
    if (obj_idx[u] < 0) continue;
    for (int w = 0; w < c->n_mor(); ++w) {
      if (!c->composable(u, w)) continue;
      int v = c->compose(u, w);
      int idx = c->is_identity(w)
                    ? b.id_of(obj_idx[u])
                    : b.add_mor(c->mors[u].name + ">" + c->mors[w].name, obj_idx[u],
                                obj_idx[v]);
      cell[{obj_idx[u], w}] = idx;
    }
  }
  for (int u = 0; u < c->n_mor(); ++u) {
    if (obj_idx[u] < 0) continue;
    for (int w1 = 0; w1 < c->n_mor(); ++w1) {
      if (!c->composable(u, w1)) continue;
      int v = c->compose(u, w1);
      for (int w2 = 0; w2 < c->n_mor(); ++w2) {
        if (!c->composable(w1, w2)) continue;
        b.set_compose(cell.at({obj_idx[u], w1}), cell.at({obj_idx[v], w2}),
                      cell.at({obj_idx[u], c->compose(w1, w2)}));
      }
    }
  }
  out.cat = b.validate();
  out.proj.src = out.cat;
  out.proj.dst = c;
  out.proj.obj.resize(out.cat->n_obj());
  out.proj.mor.resize(out.cat->n_mor());
  for (int u = 0; u < c->n_mor(); ++u)
    if (obj_idx[u] >= 0) out.proj.obj[obj_idx[u]] = c->mors[u].cod;
  for (auto& [k, m] : cell) out.proj.mor[m] = k.second;
  return out;
}

JoinData build_join(const CatPtr& c, const CatPtr& d) {
  JoinData out;
  CatBuilder b(c->name + "*" + d->name);
  std::vector<int> co(c->n_obj()), dobj(d->n_obj());
  for (int a = 0; a < c->n_obj(); ++a) co[a] = b.add_object("l_" + c->objects[a]);
  for (int a = 0; a < d->n_obj(); ++a) dobj[a] = b.add_object("r_" + d->objects[a]);
  std::vector<int> cm(c->n_mor()), dm(d->n_mor());
  for (int m = 0; m < c->n_mor(); ++m)
    cm[m] = c->is_identity(m) ? b.id_of(co[c->mors[m].dom])
                              : b.add_mor("l_" + c->mors[m].name, co[c->mors[m].dom],
                                          co[c->mors[m].cod]);
  for (int m = 0; m < d->n_mor(); ++m)
    dm[m] = d->is_identity(m) ? b.id_of(dobj[d->mors[m].dom])
                              : b.add_mor("r_" + d->mors[m].name, dobj[d->mors[m].dom],
                                          dobj[d->mors[m].cod]);
  out.join_arrow.assign(c->n_obj(), std::vector<int>(d->n_obj(), -1));
  for (int a = 0; a < c->n_obj(); ++a)
    for (int z = 0; z < d->n_obj(); ++z)
      out.join_arrow[a][z] =
          b.add_mor("j_" + c->objects[a] + "_" + d->objects[z], co[a], dobj[z]);
  for (int f = 0; f < c->n_mor(); ++f)
    for (int g = 0; g < c->n_mor(); ++g)
      if (c->composable(f, g)) b.set_compose(cm[f], cm[g], cm[c->compose(f, g)]);
  for (int f = 0; f < d->n_mor(); ++f)
    for (int g = 0; g < d->n_mor(); ++g)
      if (d->composable(f, g)) b.set_compose(dm[f], dm[g], dm[d->compose(f, g)]);
  for (int f = 0; f < c->n_mor(); ++f)
    for (int z = 0; z < d->n_obj(); ++z)
      b.set_compose(cm[f], out.join_arrow[c->mors[f].cod][z],
                    out.join_arrow[c->mors[f].dom][z]);
  for (int a = 0; a < c->n_obj(); ++a)
    for (int g = 0; g < d->n_mor(); ++g)
      b.set_compose(out.join_arrow[a][d->mors[g].dom], dm[g],
                    out.join_arrow[a][d->mors[g].cod]);
  out.cat = b.validate();
  out.inl.src = c;
  out.inl.dst = out.cat;
  out.inl.obj = co;
  out.inl.mor = cm;
  out.inr.src = d;
  out.inr.dst = out.cat;
  out.inr.obj = dobj;
  out.inr.mor = dm;
  return out;
}

int FunCatData::find_obj(const Functor& f) const {
  for (std::size_t i = 0; i < obj_fun.size(); ++i)
    if (same_functor(obj_fun[i], f)) return static_cast<int>(i);
  return -1;
}

int FunCatData::find_mor(const Transformation& t) const {
  for (std::size_t i = 0; i < mor_nat.size(); ++i)
    if (same_transformation(mor_nat[i], t)) return static_cast<int>(i);
  return -1;
}

FunCatData build_functor_category(const CatPtr& j, const CatPtr& x, Budget& budget) {
  FunCatData out;
  std::vector<Functor> objs = enumerate_functors(j, x, budget);
  CatBuilder b("Fun(" + j->name + "," + x->name + ")");
  for (std::size_t i = 0; i < objs.size(); ++i) b.add_object("F" + std::to_string(i));

  struct Cell {
    int src, dst;
    Transformation t;
  };
  std::vector<Cell> cells;  // non-identity transformations
  std::vector<std::vector<Transformation>> id_cells(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t k = 0; k < objs.size(); ++k) {
      auto ts = enumerate_transformations(objs[i], objs[k], budget);
      for (auto& t : ts) {
        if (i == k && same_transformation(t, identity_transformation(objs[i]))) {
          id_cells[i].push_back(t);
          continue;
        }
        cells.push_back({static_cast<int>(i), static_cast<int>(k), std::move(t)});
      }
    }
  std::vector<int> cell_idx(cells.size());
  std::map<std::tuple<int, int, std::vector<int>>, int> by_data;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    budget.spend(1, "functor category cells");
    cell_idx[c] = b.add_mor("t" + std::to_string(c), cells[c].src, cells[c].dst);
    by_data[{cells[c].src, cells[c].dst, cells[c].t.comp}] = cell_idx[c];
  }
  for (std::size_t i = 0; i < objs.size(); ++i)
    by_data[{static_cast<int>(i), static_cast<int>(i),
             identity_transformation(objs[i]).comp}] = b.id_of(static_cast<int>(i));
  auto vc = [&](const Transformation& a, const Transformation& bb) {
    std::vector<int> comp(a.comp.size());
    for (std::size_t q = 0; q < comp.size(); ++q) comp[q] = x->compose(a.comp[q], bb.comp[q]);
    return comp;
  };
  for (std::size_t c1 = 0; c1 < cells.size(); ++c1)
    for (std::size_t c2 = 0; c2 < cells.size(); ++c2) {
      if (cells[c1].dst != cells[c2].src) continue;
      budget.spend(1, "functor category composition");
      auto it = by_data.find({cells[c1].src, cells[c2].dst, vc(cells[c1].t, cells[c2].t)});
      if (it == by_data.end())
        throw ValidationError("Internal", "functor category composite not found");
      b.set_compose(cell_idx[c1], cell_idx[c2], it->second);
    }
  out.cat = b.validate();
  out.obj_fun = std::move(objs);
  out.mor_nat.resize(out.cat->n_mor());
  for (std::size_t i = 0; i < out.obj_fun.size(); ++i)
    out.mor_nat[out.cat->id_of[i]] = identity_transformation(out.obj_fun[i]);
  for (std::size_t c = 0; c < cells.size(); ++c) out.mor_nat[cell_idx[c]] = cells[c].t;
  return out;
}

// ---- Collapse of a semi-discrete opfibration ----

namespace {

// Unique comparison z -> w over an identity; -1 when absent.
int vertical_comparison(const Functor& p, int z, int w) {
  for (int c : p.src->hom(z, w))
    if (p.dst->is_identity(p.mor[c])) return c;
  return -1;
}

}  // namespace

DofCollapse dof_collapse(const Functor& p) {
  const FinCat& E = *p.src;
  const FinCat& B = *p.dst;
  DofCollapse out;

  // Classes: objects joined by a morphism over an identity.
  std::vector<int> cls(E.n_obj());
  std::iota(cls.begin(), cls.end(), 0);
  std::function<int(int)> root = [&](int a) { return cls[a] == a ? a : cls[a] = root(cls[a]); };
  for (int m = 0; m < E.n_mor(); ++m)
    if (B.is_identity(p.mor[m])) cls[root(E.mors[m].dom)] = root(E.mors[m].cod);
  out.rep_of.resize(E.n_obj());
  std::vector<int> rep_obj;  // representative -> collapsed object index
  std::vector<int> reps;
  for (int a = 0; a < E.n_obj(); ++a) {
    int r = root(a);
    // Representative: least object in the class.
    int best = r;
    for (int z = 0; z < E.n_obj(); ++z)
      if (root(z) == r && z < best) best = z;
    out.rep_of[a] = best;
  }
  rep_obj.assign(E.n_obj(), -1);
  for (int a = 0; a < E.n_obj(); ++a)
    if (out.rep_of[a] == a) {
      rep_obj[a] = static_cast<int>(reps.size());
      reps.push_back(a);
    }

  // cod_rep(x, f): the class of the codomain of any lift of f at x.
  auto lift_of = [&](int x, int f) -> int {
    for (int u = 0; u < E.n_mor(); ++u)
      if (E.mors[u].dom == x && p.mor[u] == f) return u;
    return -1;
  };

  CatBuilder b(E.name + "_collapsed");
  for (int r : reps) b.add_object(E.objects[r]);
  // Morphism (rep x, f) for every base arrow f out of p(x); identity pairs
  // are the builder identities.
  std::map<std::pair<int, int>, int> cell;  // (collapsed obj, base arrow) -> mor
  std::vector<std::pair<int, int>> cell_of_mor;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    int x = reps[i];
    cell[{static_cast<int>(i), B.id_of[p.obj[x]]}] = b.id_of(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    int x = reps[i];
    for (int f = 0; f < B.n_mor(); ++f) {
      if (B.mors[f].dom != p.obj[x] || B.is_identity(f)) continue;
      int u = lift_of(x, f);
      if (u < 0)
        throw ValidationError("NotSemiDiscrete", "no lift of '" + B.mors[f].name + "'");
      int tgt = rep_obj[out.rep_of[E.mors[u].cod]];
      cell[{static_cast<int>(i), f}] =
          b.add_mor(E.objects[x] + "!" + B.mors[f].name, static_cast<int>(i), tgt);
    }
  }
  for (auto& [k1, m1] : cell)
    for (auto& [k2, m2] : cell) {
      if (b.cod(m1) != b.dom(m2)) continue;
      if (!B.composable(k1.second, k2.second)) continue;
      b.set_compose(m1, m2, cell.at({k1.first, B.compose(k1.second, k2.second)}));
    }
  out.total = b.validate();

  out.p.src = out.total;
  out.p.dst = p.dst;
  out.p.obj.resize(out.total->n_obj());
  out.p.mor.resize(out.total->n_mor());
  for (std::size_t i = 0; i < reps.size(); ++i) out.p.obj[i] = p.obj[reps[i]];
  for (auto& [k, m] : cell) out.p.mor[m] = k.second;

  out.g.src = p.src;
  out.g.dst = out.total;
  out.g.obj.resize(E.n_obj());
  out.g.mor.resize(E.n_mor());
  for (int a = 0; a < E.n_obj(); ++a) out.g.obj[a] = rep_obj[out.rep_of[a]];
  for (int m = 0; m < E.n_mor(); ++m)
    out.g.mor[m] = cell.at({rep_obj[out.rep_of[E.mors[m].dom]], p.mor[m]});

  out.section.src = out.total;
  out.section.dst = p.src;
  out.section.obj.resize(out.total->n_obj());
  out.section.mor.resize(out.total->n_mor());
  for (std::size_t i = 0; i < reps.size(); ++i) out.section.obj[i] = reps[i];
  for (auto& [k, m] : cell) {
    int x = reps[k.first];
    int u = lift_of(x, k.second);
    int z = E.mors[u].cod;
    int v = vertical_comparison(p, z, out.rep_of[z]);
    if (v < 0) throw ValidationError("NotSemiDiscrete", "missing comparison");
    out.section.mor[m] = E.compose(u, v);
  }

  out.beta.src = compose_functors(out.g, out.section);
  out.beta.dst = identity_functor(p.src);
  out.beta.comp.resize(E.n_obj());
  for (int a = 0; a < E.n_obj(); ++a) {
    int v = vertical_comparison(p, out.rep_of[a], a);
    if (v < 0) throw ValidationError("NotSemiDiscrete", "missing comparison");
    out.beta.comp[a] = v;
  }
  return out;
}

// ---- Standard categories ----

CatPtr terminal_cat() {
  CatBuilder b("1");
  b.add_object("*");
  return b.validate();
}

CatPtr empty_cat() {
  CatBuilder b("0");
  return b.validate();
}

CatPtr discrete_cat(int n) {
  CatBuilder b("disc" + std::to_string(n));
  for (int i = 0; i < n; ++i) b.add_object("d" + std::to_string(i));
  return b.validate();
}

CatPtr simplex_cat(int n) {
  CatBuilder b("[" + std::to_string(n) + "]");
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> arr(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) arr[i][i] = b.id_of(i);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      arr[i][j] = b.add_mor("d" + std::to_string(i) + std::to_string(j), i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) b.set_compose(arr[i][j], arr[j][k], arr[i][k]);
  return b.validate();
}

CatPtr walking_arrow() { return simplex_cat(1); }
CatPtr walking_composable_pair() { return simplex_cat(2); }

CatPtr walking_iso() {
  CatBuilder b("iso");
  b.add_object("x");
  b.add_object("y");
  int f = b.add_mor("f", 0, 1);
  int g = b.add_mor("g", 1, 0);
  b.set_compose(f, g, b.id_of(0));
  b.set_compose(g, f, b.id_of(1));
  return b.validate();
}

CatPtr parallel_pair() {
  CatBuilder b("pp");
  b.add_object("a");
  b.add_object("b");
  b.add_mor("f", 0, 1);
  b.add_mor("g", 0, 1);
  return b.validate();
}

CatPtr span_cat() {
  CatBuilder b("span");
  b.add_object("a");
  b.add_object("x");
  b.add_object("y");
  b.add_mor("l", 0, 1);
  b.add_mor("r", 0, 2);
  return b.validate();
}

CatPtr cospan_cat() {
  CatBuilder b("cospan");
  b.add_object("x");
  b.add_object("y");
  b.add_object("c");
  b.add_mor("l", 0, 2);
  b.add_mor("r", 1, 2);
  return b.validate();
}

CatPtr commuting_square_cat() {
  auto p = build_product(walking_arrow(), walking_arrow());
  return p.cat;
}

CatPtr boolean_poset() {
  CatBuilder b("B2");
  // Subsets of {0,1} ordered by inclusion.
  for (int s = 0; s < 4; ++s) {
    std::string nm = "{";
    if (s & 1) nm += "0";
    if (s & 2) nm += (s & 1) ? ",1" : "1";
    nm += "}";
    b.add_object(nm);
  }
  std::vector<std::vector<int>> arr(4, std::vector<int>(4, -1));
  for (int s = 0; s < 4; ++s) arr[s][s] = b.id_of(s);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      if (s != t && (s & t) == s)
        arr[s][t] = b.add_mor("le" + std::to_string(s) + std::to_string(t), s, t);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int u = 0; u < 4; ++u)
        if ((s & t) == s && (t & u) == t) b.set_compose(arr[s][t], arr[t][u], arr[s][u]);
  return b.validate();
}

CatPtr cyclic_group_cat(int n) {
  CatBuilder b("Z" + std::to_string(n));
  b.add_object("*");
  std::vector<int> g(n);
  g[0] = b.id_of(0);
  for (int i = 1; i < n; ++i) g[i] = b.add_mor("g" + std::to_string(i), 0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_compose(g[i], g[j], g[(i + j) % n]);
  return b.validate();
}

namespace {
std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}
}  // namespace

CatPtr symmetric_group_cat(int n) {
  CatBuilder b("Sym" + std::to_string(n));
  b.add_object("*");
  auto perms = permutations_of(n);
  std::vector<int> idx(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    bool is_id = true;
    for (int k = 0; k < n; ++k)
      if (perms[i][k] != k) is_id = false;
    std::string nm = "p";
    for (int k = 0; k < n; ++k) nm += std::to_string(perms[i][k]);
    idx[i] = is_id ? b.id_of(0) : b.add_mor(nm, 0, 0);
  }
  auto find = [&](const std::vector<int>& p) -> int {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return idx[i];
    return -1;
  };
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<int> c(n);
      for (int k = 0; k < n; ++k) c[k] = perms[j][perms[i][k]];  // i then j
      b.set_compose(idx[i], idx[j], find(c));
    }
  return b.validate();
}

// ---- Bounded-set skeleton ----

int SetSkeleton::mor_of_fn(int m, int n, const std::vector<int>& f) const {
  long code = 0;
  for (int i = m - 1; i >= 0; --i) code = code * n + f[i];
  return idx_[m][n][static_cast<int>(code)];
}

SetSkeleton build_set_skeleton(int bound) {
  SetSkeleton out;
  out.bound = bound;
  CatBuilder b("S" + std::to_string(bound));
  for (int m = 0; m <= bound; ++m) b.add_object(std::to_string(m));
  out.idx_.assign(bound + 1, std::vector<std::vector<int>>(bound + 1));

  // Decode: digits base n, digit i = f(i). The empty function has code 0.
  auto decode = [](int m, int n, long code) {
    std::vector<int> f(m);
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(code % n);
      code /= n;
    }
    return f;
  };
  auto npow = [](int n, int m) {
    long r = 1;
    for (int i = 0; i < m; ++i) r *= n;
    return r;
  };

  out.fn.resize(b.n_mor());
  for (int m = 0; m <= bound; ++m) {
    std::vector<int> idf(m);
    std::iota(idf.begin(), idf.end(), 0);
    out.fn[b.id_of(m)] = idf;
  }

  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      if (n == 0 && m > 0) continue;
      long cnt = npow(n == 0 ? 1 : n, m);
      if (n == 0) cnt = m == 0 ? 1 : 0;
      out.idx_[m][n].assign(static_cast<std::size_t>(cnt), -1);
      for (long code = 0; code < cnt; ++code) {
        auto f = decode(m, std::max(n, 1), code);
        bool is_id = m == n;
        if (is_id)
          for (int i = 0; i < m; ++i)
            if (f[i] != i) is_id = false;
        int mi;
        if (is_id) mi = b.id_of(m);
        else {
          std::string nm = "f" + std::to_string(m) + "to" + std::to_string(n) + "_";
          for (int i = 0; i < m; ++i) nm += std::to_string(f[i]);
          mi = b.add_mor(nm, m, n);
        }
        out.idx_[m][n][static_cast<std::size_t>(code)] = mi;
        if (static_cast<int>(out.fn.size()) <= mi) out.fn.resize(mi + 1);
        out.fn[mi] = f;
      }
    }

  auto encode = [](const std::vector<int>& f, int n) {
    long code = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) code = code * std::max(n, 1) + f[i];
    return code;
  };
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (int p = 0; p <= bound; ++p) {
        for (std::size_t c1 = 0; c1 < out.idx_[m][n].size(); ++c1)
          for (std::size_t c2 = 0; c2 < out.idx_[n][p].size(); ++c2) {
            const auto& f = out.fn[out.idx_[m][n][c1]];
            const auto& g = out.fn[out.idx_[n][p][c2]];
            std::vector<int> h(m);
            for (int i = 0; i < m; ++i) h[i] = g[f[i]];
            b.set_compose(out.idx_[m][n][c1], out.idx_[n][p][c2],
                          out.idx_[m][p][static_cast<std::size_t>(encode(h, p))]);
          }
      }
  out.cat = b.validate();
  return out;
}

std::vector<NamedCat> standard_corpus() {
  std::vector<NamedCat> out;
  out.push_back({"terminal", terminal_cat()});
  out.push_back({"walking_arrow", walking_arrow()});
  out.push_back({"composable_pair", walking_composable_pair()});
  out.push_back({"walking_iso", walking_iso()});
  out.push_back({"discrete_two", discrete_cat(2)});
  out.push_back({"parallel_pair", parallel_pair()});
  out.push_back({"commuting_square", commuting_square_cat()});
  out.push_back({"b2", boolean_poset()});
  out.push_back({"s2", build_set_skeleton(2).cat});
  out.push_back({"z2", cyclic_group_cat(2)});
  return out;
}

CatPtr corpus_lookup(const std::string& name) {
  for (auto& nc : standard_corpus())
    if (nc.name == name) return nc.cat;
  if (name == "span") return span_cat();
  if (name == "cospan") return cospan_cat();
  if (name == "empty") return empty_cat();
  if (name == "s3") return build_set_skeleton(3).cat;
  if (name == "s4") return build_set_skeleton(4).cat;
  return nullptr;
}

}  // namespace catv
