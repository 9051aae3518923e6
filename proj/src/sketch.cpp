#include <algorithm>
#include <map>
#include <tuple>

#include "catv/limits.hpp"

namespace catv {

Verdict validate_sketch(const Sketch& s) {
  const FinCat& J = *s.shape;
  for (auto& q : s.pullback_squares) {
    auto [t, l, r, bm] = q;
    for (int m : {t, l, r, bm})
      if (m < 0 || m >= J.n_mor())
        return Verdict::fail({{"reason", "square morphism out of range"}});
    if (J.mors[t].dom != J.mors[l].dom || J.mors[t].cod != J.mors[r].dom ||
        J.mors[l].cod != J.mors[bm].dom || J.mors[r].cod != J.mors[bm].cod ||
        J.compose(t, r) != J.compose(l, bm))
      return Verdict::fail({{"reason", "marked square malformed"},
                            {"square", {J.mors[t].name, J.mors[l].name, J.mors[r].name,
                                        J.mors[bm].name}}});
  }
  for (auto& [p, q] : s.products)
    if (p < 0 || p >= J.n_mor() || q < 0 || q >= J.n_mor() ||
        J.mors[p].dom != J.mors[q].dom)
      return Verdict::fail({{"reason", "marked product cone malformed"}});
  for (int t : s.terminals)
    if (t < 0 || t >= J.n_obj())
      return Verdict::fail({{"reason", "marked terminal out of range"}});
  return Verdict::ok();
}

Sketch mon_sketch() {
  Sketch s;
  s.name = "mon";
  s.shape = walking_arrow();
  int a = -1;
  for (int m = 0; m < s.shape->n_mor(); ++m)
    if (!s.shape->is_identity(m)) a = m;
  int i0 = s.shape->id_of[0];
  s.pullback_squares.push_back({i0, i0, a, a});
  return s;
}

bool is_model(const Sketch& s, const Functor& m) {
  const FinCat& X = *m.dst;
  for (auto& q : s.pullback_squares)
    if (!is_pullback_square(X, m.mor[q[0]], m.mor[q[1]], m.mor[q[2]], m.mor[q[3]]))
      return false;
  for (auto& [p, q] : s.products)
    if (!is_product_cone(X, m.mor[p], m.mor[q])) return false;
  for (int t : s.terminals)
    if (!X.is_terminal_object(m.obj[t])) return false;
  return true;
}

namespace {

// Fun(shape, X) as a plain index space: objects and cells are enumerated and
// identified, composition is computed pointwise in X. No composition table is
// stored; the intermediates of the assembly route are too large for one.
struct FunIndex {
  CatPtr shape, x;
  std::vector<Functor> objs;
  struct Cell {
    int src, dst;
    std::vector<int> comp;
  };
  std::vector<Cell> cells;
  std::vector<int> id_cell;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> obj_lk;
  std::map<std::tuple<int, int, std::vector<int>>, int> cell_lk;

  int find_obj(const Functor& f) const {
    auto it = obj_lk.find({f.obj, f.mor});
    return it == obj_lk.end() ? -1 : it->second;
  }
  int find_cell(int s, int d, const std::vector<int>& comp) const {
    auto it = cell_lk.find({s, d, comp});
    return it == cell_lk.end() ? -1 : it->second;
  }
  int compose_cell(int c1, int c2) const {
    const Cell& a = cells[c1];
    const Cell& b = cells[c2];
    std::vector<int> comp(a.comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = x->compose(a.comp[i], b.comp[i]);
    return find_cell(a.src, b.dst, comp);
  }
};

FunIndex build_fun_index(const CatPtr& shape, const CatPtr& x, Budget& budget) {
  FunIndex out;
  out.shape = shape;
  out.x = x;
  out.objs = enumerate_functors(shape, x, budget);
  for (std::size_t i = 0; i < out.objs.size(); ++i)
    out.obj_lk[{out.objs[i].obj, out.objs[i].mor}] = static_cast<int>(i);
  out.id_cell.resize(out.objs.size());
  for (std::size_t i = 0; i < out.objs.size(); ++i)
    for (std::size_t k = 0; k < out.objs.size(); ++k) {
      auto ts = enumerate_transformations(out.objs[i], out.objs[k], budget);
      for (auto& t : ts) {
        budget.spend(1, "functor index cells");
        int idx = static_cast<int>(out.cells.size());
        out.cells.push_back({static_cast<int>(i), static_cast<int>(k), t.comp});
        out.cell_lk[{static_cast<int>(i), static_cast<int>(k), t.comp}] = idx;
        if (i == k && t.comp == identity_transformation(out.objs[i]).comp)
          out.id_cell[i] = idx;
      }
    }
  return out;
}

// A map from a materialized category into an index space.
struct IndexedFunctor {
  std::vector<int> obj, mor;
};

// The walking cone shapes: the cone point joined onto the diagram shape.
struct ConeShapes {
  CatPtr diagram;    // cospan (pullback case) or discrete 2 (product case)
  JoinData cone;     // 1 * diagram
  int cospan_l = -1, cospan_r = -1;  // diagram arrows when cospan
};

ConeShapes make_cone_shapes(bool pullback_case) {
  ConeShapes out;
  out.diagram = pullback_case ? cospan_cat() : discrete_cat(2);
  out.cone = build_join(terminal_cat(), out.diagram);
  if (pullback_case)
    for (int m = 0; m < out.diagram->n_mor(); ++m) {
      if (out.diagram->is_identity(m)) continue;
      (out.diagram->mors[m].dom == 0 ? out.cospan_l : out.cospan_r) = m;
    }
  return out;
}

// Square/span functor assembled from a diagram and a cone over it.
Functor cone_diagram(const ConeShapes& sh, const Functor& diag, int apex, int leg1,
                     int leg2, const CatPtr& x) {
  Functor f;
  f.src = sh.cone.cat;
  f.dst = x;
  f.obj.resize(sh.cone.cat->n_obj());
  f.mor.resize(sh.cone.cat->n_mor());
  f.obj[sh.cone.inl.obj[0]] = apex;
  for (int d = 0; d < sh.diagram->n_obj(); ++d) f.obj[sh.cone.inr.obj[d]] = diag.obj[d];
  f.mor[sh.cone.cat->id_of[sh.cone.inl.obj[0]]] = x->id_of[apex];
  for (int m = 0; m < sh.diagram->n_mor(); ++m) f.mor[sh.cone.inr.mor[m]] = diag.mor[m];
  f.mor[sh.cone.join_arrow[0][0]] = leg1;
  f.mor[sh.cone.join_arrow[0][1]] = leg2;
  if (sh.diagram->n_obj() == 3)
    f.mor[sh.cone.join_arrow[0][2]] = x->compose(leg1, diag.mor[sh.cospan_l]);
  return f;
}

// Universal single-cone model U with its map phi into Fun(cone, X).
// This is the strict pullback of the chosen-limit functor (on diagrams
// admitting a limit) against restriction-to-the-far-end of the iso-joined
// cotensor, computed at the level of its objects and morphisms: an object is
// a limitable diagram with an iso onto the chosen limit, the far-end cone is
// pinned to the chosen one, and the near-end apex carries the iso.
struct UniversalCone {
  // objects: (diagram obj in diag index, iso sigma of X onto the chosen apex)
  std::vector<std::pair<int, int>> objs;
  struct M {
    int dom, cod;
    int tau;  // diagram cell
    int a;    // apex component of X, determined by the mediator
  };
  std::vector<M> mors;
  std::vector<int> id_of;
  std::map<std::tuple<int, int, int>, int> mor_lk;  // (dom, cod, tau)
  IndexedFunctor phi;  // into the cone-shape FunIndex

  int compose(int m1, int m2, const FunIndex& diag_ix) const {
    return mor_lk.at({mors[m1].dom, mors[m2].cod,
                      diag_ix.compose_cell(mors[m1].tau, mors[m2].tau)});
  }
};

UniversalCone build_universal_cone(const CatPtr& x, const ConeShapes& sh,
                                   const FunIndex& diag_ix, const FunIndex& cone_ix) {
  UniversalCone u;
  auto limit_of = [&](const Functor& diag) -> std::optional<Cone> {
    if (sh.diagram->n_obj() == 3)
      return chosen_pullback(*x, diag.mor[sh.cospan_l], diag.mor[sh.cospan_r]);
    return chosen_product(*x, diag.obj[0], diag.obj[1]);
  };
  std::vector<std::optional<Cone>> cones(diag_ix.objs.size());
  std::vector<std::vector<int>> objs_of_diag(diag_ix.objs.size());
  for (std::size_t d = 0; d < diag_ix.objs.size(); ++d) {
    cones[d] = limit_of(diag_ix.objs[d]);
    if (!cones[d]) continue;
    for (int s = 0; s < x->n_mor(); ++s)
      if (x->is_iso(s) && x->mors[s].cod == cones[d]->apex) {
        objs_of_diag[d].push_back(static_cast<int>(u.objs.size()));
        u.objs.push_back({static_cast<int>(d), s});
      }
  }
  u.id_of.resize(u.objs.size());
  for (std::size_t c = 0; c < diag_ix.cells.size(); ++c) {
    const auto& cell = diag_ix.cells[c];
    if (!cones[cell.src] || !cones[cell.dst]) continue;
    const Cone& c0 = *cones[cell.src];
    const Cone& c1 = *cones[cell.dst];
    int med = -1;
    for (int m : x->hom(c0.apex, c1.apex))
      if (x->compose(m, c1.leg1) == x->compose(c0.leg1, cell.comp[0]) &&
          x->compose(m, c1.leg2) == x->compose(c0.leg2, cell.comp[1])) {
        med = m;
        break;
      }
    if (med < 0) throw ValidationError("Internal", "mediator missing");
    for (int o0 : objs_of_diag[cell.src])
      for (int o1 : objs_of_diag[cell.dst]) {
        int s0 = u.objs[o0].second, s1 = u.objs[o1].second;
        int a = x->compose(x->compose(s0, med), x->inverse(s1));
        int idx = static_cast<int>(u.mors.size());
        u.mors.push_back({o0, o1, static_cast<int>(c), a});
        u.mor_lk[{o0, o1, static_cast<int>(c)}] = idx;
        if (o0 == o1 && static_cast<int>(c) == diag_ix.id_cell[cell.src])
          u.id_of[o0] = idx;
      }
  }
  // phi: assemble the near-end square/span.
  u.phi.obj.resize(u.objs.size());
  u.phi.mor.resize(u.mors.size());
  for (std::size_t o = 0; o < u.objs.size(); ++o) {
    auto [d, s] = u.objs[o];
    const Cone& c = *cones[d];
    Functor sq = cone_diagram(sh, diag_ix.objs[d], x->mors[s].dom,
                              x->compose(s, c.leg1), x->compose(s, c.leg2), x);
    int i = cone_ix.find_obj(sq);
    if (i < 0) throw ValidationError("Internal", "universal cone object missing");
    u.phi.obj[o] = i;
  }
  for (std::size_t m = 0; m < u.mors.size(); ++m) {
    const auto& mm = u.mors[m];
    const auto& cell = diag_ix.cells[mm.tau];
    std::vector<int> comp(sh.cone.cat->n_obj());
    comp[sh.cone.inl.obj[0]] = mm.a;
    for (int d = 0; d < sh.diagram->n_obj(); ++d)
      comp[sh.cone.inr.obj[d]] = cell.comp[d];
    int i = cone_ix.find_cell(u.phi.obj[mm.dom], u.phi.obj[mm.cod], comp);
    if (i < 0) throw ValidationError("Internal", "universal cone cell missing");
    u.phi.mor[m] = i;
  }
  return u;
}

// Strict pullback of (cur -> cone index space) against (U -> same space),
// materialized: U-composition is computed through the diagram index.
struct CutResult {
  CatPtr apex;
  Functor pr1;  // apex -> cur
};

CutResult cut_with_universal(const CatPtr& cur, const IndexedFunctor& sq,
                             const UniversalCone& u, const FunIndex& diag_ix) {
  CutResult out;
  CatBuilder b(cur->name + "&");
  std::map<std::pair<int, int>, int> obj_ix;
  for (int o = 0; o < cur->n_obj(); ++o)
    for (std::size_t w = 0; w < u.objs.size(); ++w)
      if (sq.obj[o] == u.phi.obj[w])
        obj_ix[{o, static_cast<int>(w)}] =
            b.add_object(cur->objects[o] + "&" + std::to_string(w));
  std::map<std::pair<int, int>, int> mor_ix;
  for (int m = 0; m < cur->n_mor(); ++m)
    for (std::size_t w = 0; w < u.mors.size(); ++w) {
      if (sq.mor[m] != u.phi.mor[w]) continue;
      int src = obj_ix.at({cur->mors[m].dom, u.mors[w].dom});
      int dst = obj_ix.at({cur->mors[m].cod, u.mors[w].cod});
      int idx;
      if (cur->is_identity(m) && static_cast<int>(w) == u.id_of[u.mors[w].dom] &&
          src == dst)
        idx = b.id_of(src);
      else
        idx = b.add_mor("m" + std::to_string(m) + "&" + std::to_string(w), src, dst);
      mor_ix[{m, static_cast<int>(w)}] = idx;
    }
  for (auto& [k1, m1] : mor_ix)
    for (auto& [k2, m2] : mor_ix) {
      if (b.cod(m1) != b.dom(m2)) continue;
      b.set_compose(m1, m2,
                    mor_ix.at({cur->compose(k1.first, k2.first),
                               u.compose(k1.second, k2.second, diag_ix)}));
    }
  out.apex = b.validate();
  out.pr1.src = out.apex;
  out.pr1.dst = cur;
  out.pr1.obj.resize(out.apex->n_obj());
  out.pr1.mor.resize(out.apex->n_mor());
  for (auto& [k, o] : obj_ix) out.pr1.obj[o] = k.first;
  for (auto& [k, m] : mor_ix) out.pr1.mor[m] = k.first;
  return out;
}

// Evaluation Fun(J, X) -> X at a shape object.
Functor evaluation_functor(const FunCatData& fun, int shape_obj, const CatPtr& x) {
  Functor e;
  e.src = fun.cat;
  e.dst = x;
  e.obj.resize(fun.cat->n_obj());
  e.mor.resize(fun.cat->n_mor());
  for (int o = 0; o < fun.cat->n_obj(); ++o) e.obj[o] = fun.obj_fun[o].obj[shape_obj];
  for (int m = 0; m < fun.cat->n_mor(); ++m) e.mor[m] = fun.mor_nat[m].comp[shape_obj];
  return e;
}

// The inclusion of the marked cone into the sketch shape.
Functor marked_cone_inclusion(const Sketch& s, const ConeShapes& sh,
                              const std::array<int, 4>& square, bool pullback_case) {
  const FinCat& J = *s.shape;
  Functor sigma;
  sigma.src = sh.cone.cat;
  sigma.dst = s.shape;
  sigma.obj.resize(sh.cone.cat->n_obj());
  sigma.mor.resize(sh.cone.cat->n_mor());
  auto [t, l, r, bm] = square;
  sigma.obj[sh.cone.inl.obj[0]] = J.mors[t].dom;
  sigma.obj[sh.cone.inr.obj[0]] = J.mors[t].cod;
  sigma.obj[sh.cone.inr.obj[1]] = J.mors[l].cod;
  if (pullback_case) sigma.obj[sh.cone.inr.obj[2]] = J.mors[r].cod;
  sigma.mor[sh.cone.cat->id_of[sh.cone.inl.obj[0]]] = J.id_of[J.mors[t].dom];
  for (int d = 0; d < sh.diagram->n_obj(); ++d)
    sigma.mor[sh.cone.inr.mor[sh.diagram->id_of[d]]] =
        J.id_of[sigma.obj[sh.cone.inr.obj[d]]];
  if (pullback_case) {
    sigma.mor[sh.cone.inr.mor[sh.cospan_l]] = r;
    sigma.mor[sh.cone.inr.mor[sh.cospan_r]] = bm;
    sigma.mor[sh.cone.join_arrow[0][2]] = J.compose(t, r);
  }
  sigma.mor[sh.cone.join_arrow[0][0]] = t;
  sigma.mor[sh.cone.join_arrow[0][1]] = l;
  if (!check_functor(sigma).holds)
    throw ValidationError("Internal", "marked cone inclusion is not a functor");
  return sigma;
}

}  // namespace

SketchCotensorData sketch_cotensor(const CatPtr& x, const Sketch& s, SketchRoute route,
                                   Budget& budget) {
  Verdict v = validate_sketch(s);
  if (!v.holds) throw ValidationError("BadSketch", v.counterexample.dump());
  SketchCotensorData out;
  out.fun = std::make_shared<FunCatData>(build_functor_category(s.shape, x, budget));

  if (route == SketchRoute::kDirect) {
    std::vector<int> models;
    for (int o = 0; o < out.fun->cat->n_obj(); ++o)
      if (is_model(s, out.fun->obj_fun[o])) models.push_back(o);
    auto sub = full_subcat(out.fun->cat, models, s.name + "_models");
    out.total = sub.cat;
    out.to_fun = sub.incl;
    return out;
  }

  CatPtr cur = out.fun->cat;
  Functor to_fun = identity_functor(cur);

  auto do_cones = [&](bool pullback_case) {
    auto marks = pullback_case ? s.pullback_squares : std::vector<std::array<int, 4>>{};
    if (!pullback_case)
      for (auto& [p, q] : s.products) marks.push_back({p, q, -1, -1});
    if (marks.empty()) return;
    ConeShapes sh = make_cone_shapes(pullback_case);
    FunIndex diag_ix = build_fun_index(sh.diagram, x, budget);
    FunIndex cone_ix = build_fun_index(sh.cone.cat, x, budget);
    UniversalCone uni = build_universal_cone(x, sh, diag_ix, cone_ix);
    for (auto& q : marks) {
      Functor sigma = marked_cone_inclusion(s, sh, q, pullback_case);
      IndexedFunctor sq;
      sq.obj.resize(cur->n_obj());
      sq.mor.resize(cur->n_mor());
      for (int o = 0; o < cur->n_obj(); ++o) {
        int i = cone_ix.find_obj(compose_functors(sigma, out.fun->obj_fun[to_fun.obj[o]]));
        if (i < 0) throw ValidationError("Internal", "marked restriction object");
        sq.obj[o] = i;
      }
      for (int m = 0; m < cur->n_mor(); ++m) {
        const Transformation& a = out.fun->mor_nat[to_fun.mor[m]];
        std::vector<int> comp(sh.cone.cat->n_obj());
        for (int j = 0; j < sh.cone.cat->n_obj(); ++j) comp[j] = a.comp[sigma.obj[j]];
        int i = cone_ix.find_cell(sq.obj[cur->mors[m].dom], sq.obj[cur->mors[m].cod], comp);
        if (i < 0) throw ValidationError("Internal", "marked restriction morphism");
        sq.mor[m] = i;
      }
      auto cutr = cut_with_universal(cur, sq, uni, diag_ix);
      to_fun = compose_functors(cutr.pr1, to_fun);
      cur = cutr.apex;
    }
  };
  do_cones(true);
  do_cones(false);

  for (int t : s.terminals) {
    std::vector<int> terms;
    for (int o = 0; o < x->n_obj(); ++o)
      if (x->is_terminal_object(o)) terms.push_back(o);
    auto sub = full_subcat(x, terms, x->name + "_terminals");
    Functor ev = compose_functors(to_fun, evaluation_functor(*out.fun, t, x));
    auto pb = build_pullback(ev, sub.incl);
    to_fun = compose_functors(pb.pr1, to_fun);
    cur = pb.apex;
  }
  out.total = cur;
  out.to_fun = to_fun;
  return out;
}

Verdict compare_sketch_routes(const SketchCotensorData& a, const SketchCotensorData& b,
                              Budget& budget) {
  // Rebase b.to_fun into a's copy of the functor category via the dictionaries.
  Functor q;
  q.src = b.total;
  q.dst = a.fun->cat;
  q.obj.resize(b.total->n_obj());
  q.mor.resize(b.total->n_mor());
  for (int o = 0; o < b.total->n_obj(); ++o) {
    int i = a.fun->find_obj(b.fun->obj_fun[b.to_fun.obj[o]]);
    if (i < 0) return Verdict::fail({{"reason", "object not matched across routes"}});
    q.obj[o] = i;
  }
  for (int m = 0; m < b.total->n_mor(); ++m) {
    int i = a.fun->find_mor(b.fun->mor_nat[b.to_fun.mor[m]]);
    if (i < 0) return Verdict::fail({{"reason", "morphism not matched across routes"}});
    q.mor[m] = i;
  }
  auto h = find_isomorphism_over(a.to_fun, q, budget);
  if (!h) return Verdict::fail({{"reason", "no isomorphism over the functor category"},
                                {"first_objects", a.total->n_obj()},
                                {"second_objects", b.total->n_obj()}});
  return Verdict::ok({{"objects", a.total->n_obj()}, {"morphisms", a.total->n_mor()}});
}

}  // namespace catv
