#include <algorithm>
#include <functional>

#include "catv/presheaf.hpp"

namespace catv {

namespace {

// (coslice source object, underlying index morphism) -> coslice morphism.
std::map<std::pair<int, int>, int> coslice_cells(const CosliceData& cs) {
  std::map<std::pair<int, int>, int> out;
  for (int m = 0; m < cs.cat->n_mor(); ++m)
    out[{cs.cat->mors[m].dom, cs.proj.mor[m]}] = m;
  return out;
}

int coslice_obj(const CosliceData& cs, int arrow) {
  for (int o = 0; o < cs.cat->n_obj(); ++o)
    if (cs.obj_arrow[o] == arrow) return o;
  return -1;
}

}  // namespace

Verdict check_presheaf(const PresheafOfCats& f) {
  const FinCat& C = *f.index;
  if (static_cast<int>(f.at.size()) != C.n_obj() ||
      static_cast<int>(f.act.size()) != C.n_mor())
    return Verdict::fail({{"reason", "component tables have the wrong size"}});
  for (int u = 0; u < C.n_mor(); ++u) {
    if (f.act[u].src != f.at[C.mors[u].dom] || f.act[u].dst != f.at[C.mors[u].cod])
      return Verdict::fail({{"reason", "action endpoints disagree"}, {"u", C.mors[u].name}});
    Verdict v = check_functor(f.act[u]);
    if (!v) return v;
    if (C.is_identity(u) && !same_functor(f.act[u], identity_functor(f.at[C.mors[u].dom])))
      return Verdict::fail({{"reason", "action of an identity is not the identity"}});
  }
  for (int u = 0; u < C.n_mor(); ++u)
    for (int v = 0; v < C.n_mor(); ++v) {
      if (!C.composable(u, v)) continue;
      if (!same_functor(compose_functors(f.act[u], f.act[v]), f.act[C.compose(u, v)]))
        return Verdict::fail({{"reason", "action is not functorial"},
                              {"u", C.mors[u].name},
                              {"v", C.mors[v].name}});
    }
  return Verdict::ok();
}

PresheafOfCats constant_presheaf(const CatPtr& c, const CatPtr& d, std::string name) {
  PresheafOfCats out;
  out.index = c;
  out.name = std::move(name);
  out.at.assign(c->n_obj(), d);
  out.act.assign(c->n_mor(), identity_functor(d));
  return out;
}

PresheafOfCats representable_presheaf(const CatPtr& c, int obj) {
  PresheafOfCats out;
  out.index = c;
  out.name = "y(" + c->objects[obj] + ")";
  std::vector<std::vector<int>> homs(c->n_obj());
  for (int b = 0; b < c->n_obj(); ++b) {
    homs[b] = c->hom(obj, b);
    out.at.push_back(discrete_cat(static_cast<int>(homs[b].size())));
  }
  auto pos = [&](int b, int m) {
    return static_cast<int>(std::find(homs[b].begin(), homs[b].end(), m) - homs[b].begin());
  };
  for (int u = 0; u < c->n_mor(); ++u) {
    int b = c->mors[u].dom, b2 = c->mors[u].cod;
    Functor a;
    a.src = out.at[b];
    a.dst = out.at[b2];
    a.obj.resize(homs[b].size());
    a.mor.resize(homs[b].size());
    for (std::size_t i = 0; i < homs[b].size(); ++i) {
      a.obj[i] = pos(b2, c->compose(homs[b][i], u));
      a.mor[i] = out.at[b2]->id_of[a.obj[i]];
    }
    out.act.push_back(std::move(a));
  }
  return out;
}

Verdict check_ps_morphism(const PsMorphism& m) {
  const FinCat& C = *m.src.index;
  if (m.dst.index != m.src.index ||
      static_cast<int>(m.comp.size()) != C.n_obj())
    return Verdict::fail({{"reason", "components do not match the index"}});
  for (int c = 0; c < C.n_obj(); ++c) {
    if (m.comp[c].src != m.src.at[c] || m.comp[c].dst != m.dst.at[c])
      return Verdict::fail({{"reason", "component endpoints disagree"}, {"at", C.objects[c]}});
    Verdict v = check_functor(m.comp[c]);
    if (!v) return v;
  }
  for (int u = 0; u < C.n_mor(); ++u)
    if (!same_functor(compose_functors(m.src.act[u], m.comp[C.mors[u].cod]),
                      compose_functors(m.comp[C.mors[u].dom], m.dst.act[u])))
      return Verdict::fail({{"reason", "strict naturality fails"}, {"u", C.mors[u].name}});
  return Verdict::ok();
}

PsMorphism identity_ps_morphism(const PresheafOfCats& f) {
  PsMorphism out{f, f, {}, "id"};
  for (const auto& a : f.at) out.comp.push_back(identity_functor(a));
  return out;
}

PsMorphism compose_ps_morphisms(const PsMorphism& a, const PsMorphism& b) {
  PsMorphism out{a.src, b.dst, {}, a.name + ";" + b.name};
  for (std::size_t c = 0; c < a.comp.size(); ++c)
    out.comp.push_back(compose_functors(a.comp[c], b.comp[c]));
  return out;
}

bool same_ps_morphism(const PsMorphism& a, const PsMorphism& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (std::size_t c = 0; c < a.comp.size(); ++c)
    if (!same_functor(a.comp[c], b.comp[c])) return false;
  return true;
}

Verdict check_ps_modification(const PsModification& m) {
  const FinCat& C = *m.src.src.index;
  if (static_cast<int>(m.comp.size()) != C.n_obj())
    return Verdict::fail({{"reason", "modification has the wrong arity"}});
  for (int c = 0; c < C.n_obj(); ++c) {
    if (!same_functor(m.comp[c].src, m.src.comp[c]) ||
        !same_functor(m.comp[c].dst, m.dst.comp[c]))
      return Verdict::fail({{"reason", "modification endpoints disagree"}});
    Verdict v = check_transformation(m.comp[c]);
    if (!v) return v;
  }
  const PresheafOfCats& F = m.src.src;
  const PresheafOfCats& G = m.src.dst;
  for (int u = 0; u < C.n_mor(); ++u) {
    int c = C.mors[u].dom, c2 = C.mors[u].cod;
    for (int x = 0; x < F.at[c]->n_obj(); ++x)
      if (m.comp[c2].comp[F.act[u].obj[x]] != G.act[u].mor[m.comp[c].comp[x]])
        return Verdict::fail(
            {{"reason", "modification is not compatible with the actions"},
             {"u", C.mors[u].name}});
  }
  return Verdict::ok();
}

std::vector<PsMorphism> enumerate_ps_morphisms(const PresheafOfCats& x,
                                               const PresheafOfCats& f, Budget& budget) {
  const FinCat& C = *x.index;
  std::vector<std::vector<Functor>> cand(C.n_obj());
  for (int c = 0; c < C.n_obj(); ++c) cand[c] = enumerate_functors(x.at[c], f.at[c], budget);

  std::vector<std::vector<int>> by_last(C.n_obj());
  for (int u = 0; u < C.n_mor(); ++u)
    by_last[std::max(C.mors[u].dom, C.mors[u].cod)].push_back(u);

  std::vector<PsMorphism> out;
  std::vector<int> pick(C.n_obj(), -1);
  std::function<void(int)> rec = [&](int c) {
    budget.spend(1, "presheaf morphism enumeration");
    if (c == C.n_obj()) {
      PsMorphism m{x, f, {}, ""};
      for (int b = 0; b < C.n_obj(); ++b) m.comp.push_back(cand[b][pick[b]]);
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t i = 0; i < cand[c].size(); ++i) {
      pick[c] = static_cast<int>(i);
      bool ok = true;
      for (int u : by_last[c]) {
        int d = C.mors[u].dom, e = C.mors[u].cod;
        if (pick[d] < 0 || pick[e] < 0) continue;
        if (!same_functor(compose_functors(x.act[u], cand[e][pick[e]]),
                          compose_functors(cand[d][pick[d]], f.act[u]))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(c + 1);
    }
    pick[c] = -1;
  };
  rec(0);
  return out;
}

std::vector<PsModification> enumerate_ps_modifications(const PsMorphism& a,
                                                       const PsMorphism& b, Budget& budget) {
  const FinCat& C = *a.src.index;
  const PresheafOfCats& F = a.src;
  const PresheafOfCats& G = a.dst;
  std::vector<std::vector<Transformation>> cand(C.n_obj());
  for (int c = 0; c < C.n_obj(); ++c)
    cand[c] = enumerate_transformations(a.comp[c], b.comp[c], budget);

  std::vector<std::vector<int>> by_last(C.n_obj());
  for (int u = 0; u < C.n_mor(); ++u)
    by_last[std::max(C.mors[u].dom, C.mors[u].cod)].push_back(u);

  std::vector<PsModification> out;
  std::vector<int> pick(C.n_obj(), -1);
  std::function<void(int)> rec = [&](int c) {
    budget.spend(1, "modification enumeration");
    if (c == C.n_obj()) {
      PsModification m{a, b, {}, ""};
      for (int d = 0; d < C.n_obj(); ++d) m.comp.push_back(cand[d][pick[d]]);
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t i = 0; i < cand[c].size(); ++i) {
      pick[c] = static_cast<int>(i);
      bool ok = true;
      for (int u : by_last[c]) {
        int d = C.mors[u].dom, e = C.mors[u].cod;
        if (pick[d] < 0 || pick[e] < 0) continue;
        for (int x = 0; x < F.at[d]->n_obj() && ok; ++x)
          if (cand[e][pick[e]].comp[F.act[u].obj[x]] !=
              G.act[u].mor[cand[d][pick[d]].comp[x]])
            ok = false;
        if (!ok) break;
      }
      if (ok) rec(c + 1);
    }
    pick[c] = -1;
  };
  rec(0);
  return out;
}

int ElPresheaf::mor_of(int dom_obj, int u, int xi) const {
  auto it = mor_idx_.find({dom_obj, u, xi});
  return it == mor_idx_.end() ? -1 : it->second;
}

int ElPresheaf::cocart(int o, int u) const { return cocart_[o][u]; }

ElPresheaf el(const PresheafOfCats& f) {
  const FinCat& C = *f.index;
  ElPresheaf out;
  CatBuilder b("el(" + f.name + ")");
  out.obj_idx_.assign(C.n_obj(), {});
  for (int c = 0; c < C.n_obj(); ++c)
    for (int x = 0; x < f.at[c]->n_obj(); ++x) {
      out.obj_idx_[c].push_back(b.add_object(C.objects[c] + ":" + f.at[c]->objects[x]));
      out.obj.push_back({c, x});
    }
  // Morphism (c,x) -> (c2,x2): index arrow u with a fibre arrow
  // xi: act(u)(x) -> x2 in F(c2).
  for (int o = 0; o < static_cast<int>(out.obj.size()); ++o) {
    auto [c, x] = out.obj[o];
    for (int u = 0; u < C.n_mor(); ++u) {
      if (C.mors[u].dom != c) continue;
      int c2 = C.mors[u].cod;
      int tx = f.act[u].obj[x];
      for (int xi = 0; xi < f.at[c2]->n_mor(); ++xi) {
        if (f.at[c2]->mors[xi].dom != tx) continue;
        int o2 = out.obj_idx_[c2][f.at[c2]->mors[xi].cod];
        int m;
        if (C.is_identity(u) && f.at[c2]->is_identity(xi))
          m = b.id_of(o);
        else
          m = b.add_mor(C.mors[u].name + "|" + f.at[c2]->mor_name(xi) + "@" +
                            std::to_string(o),
                        o, o2);
        out.mor_idx_[{o, u, xi}] = m;
      }
    }
  }
  out.mor.resize(b.n_mor());
  for (auto [key, m] : out.mor_idx_) out.mor[m] = {std::get<1>(key), std::get<2>(key)};
  for (auto [key, m1] : out.mor_idx_) {
    auto [o, u, xi] = key;
    int o2 = b.cod(m1);
    auto [c2, x2] = out.obj[o2];
    for (int v = 0; v < C.n_mor(); ++v) {
      if (C.mors[v].dom != c2) continue;
      int c3 = C.mors[v].cod;
      for (int zeta = 0; zeta < f.at[c3]->n_mor(); ++zeta) {
        if (f.at[c3]->mors[zeta].dom != f.act[v].obj[x2]) continue;
        int m2 = out.mor_idx_.at({o2, v, zeta});
        int comp_xi = f.at[c3]->compose(f.act[v].mor[xi], zeta);
        b.set_compose(m1, m2, out.mor_idx_.at({o, C.compose(u, v), comp_xi}));
      }
    }
  }
  out.total = b.validate();

  out.proj.src = out.total;
  out.proj.dst = f.index;
  out.proj.name = "el_proj";
  out.proj.obj.resize(out.total->n_obj());
  out.proj.mor.resize(out.total->n_mor());
  for (int o = 0; o < out.total->n_obj(); ++o) out.proj.obj[o] = out.obj[o].first;
  for (auto [key, m] : out.mor_idx_) out.proj.mor[m] = std::get<1>(key);

  out.cocart_.assign(out.total->n_obj(), std::vector<int>(C.n_mor(), -1));
  for (int o = 0; o < out.total->n_obj(); ++o) {
    auto [c, x] = out.obj[o];
    for (int u = 0; u < C.n_mor(); ++u) {
      if (C.mors[u].dom != c) continue;
      int c2 = C.mors[u].cod;
      out.cocart_[o][u] = out.mor_idx_.at({o, u, f.at[c2]->id_of[f.act[u].obj[x]]});
    }
  }
  return out;
}

Verdict check_split_opfibration(const ElPresheaf& e) {
  const FinCat& C = *e.proj.dst;
  const FinCat& E = *e.total;
  for (int o = 0; o < E.n_obj(); ++o) {
    if (e.cocart(o, C.id_of[e.proj.obj[o]]) != E.id_of[o])
      return Verdict::fail({{"reason", "identity lift is not the identity"}});
    for (int u = 0; u < C.n_mor(); ++u) {
      if (C.mors[u].dom != e.proj.obj[o]) continue;
      int l1 = e.cocart(o, u);
      for (int v = 0; v < C.n_mor(); ++v) {
        if (!C.composable(u, v)) continue;
        if (E.compose(l1, e.cocart(E.mors[l1].cod, v)) != e.cocart(o, C.compose(u, v)))
          return Verdict::fail({{"reason", "splitting is not functorial"}});
      }
    }
  }
  // Every morphism factors as a chosen lift followed by a vertical one.
  for (int m = 0; m < E.n_mor(); ++m) {
    int o = E.mors[m].dom;
    auto [u, xi] = e.mor[m];
    int l = e.cocart(o, u);
    int vert = e.mor_of(E.mors[l].cod, C.id_of[C.mors[u].cod], xi);
    if (vert < 0 || E.compose(l, vert) != m)
      return Verdict::fail({{"reason", "cocartesian factorization fails"}});
  }
  return Verdict::ok();
}

Functor el_of(const PsMorphism& m, const ElPresheaf& ef, const ElPresheaf& eg) {
  const FinCat& E = *ef.total;
  Functor out;
  out.src = ef.total;
  out.dst = eg.total;
  out.name = "el(" + m.name + ")";
  out.obj.resize(E.n_obj());
  out.mor.resize(E.n_mor());
  for (int o = 0; o < E.n_obj(); ++o) {
    auto [c, x] = ef.obj[o];
    out.obj[o] = eg.obj_of(c, m.comp[c].obj[x]);
  }
  for (int mm = 0; mm < E.n_mor(); ++mm) {
    auto [u, xi] = ef.mor[mm];
    int c2 = m.src.index->mors[u].cod;
    out.mor[mm] = eg.mor_of(out.obj[E.mors[mm].dom], u, m.comp[c2].mor[xi]);
  }
  return out;
}

Verdict ps_square_pullback(const PsMorphism& h, const PsMorphism& k, const PsMorphism& f,
                           const PsMorphism& g) {
  for (std::size_t c = 0; c < h.comp.size(); ++c) {
    Verdict v = check_strict_pullback(h.comp[c], k.comp[c], f.comp[c], g.comp[c]);
    if (!v) return v;
  }
  return Verdict::ok();
}

Verdict el_preserves_reflects_pullback(const PsMorphism& h, const PsMorphism& k,
                                       const PsMorphism& f, const PsMorphism& g) {
  auto ep = el(h.src), ea = el(h.dst), eb = el(k.dst), eu = el(f.dst);
  Verdict down = ps_square_pullback(h, k, f, g);
  Verdict up = check_strict_pullback(el_of(h, ep, ea), el_of(k, ep, eb),
                                     el_of(f, ea, eu), el_of(g, eb, eu));
  if (down.holds != up.holds)
    return Verdict::fail({{"reason", "el does not preserve/reflect the square"},
                          {"pointwise", down.holds},
                          {"on_el", up.holds}});
  return Verdict::ok({{"is_pullback", down.holds}});
}

SpData sp(const CatPtr& d, const CatPtr& c, Budget& budget) {
  const FinCat& C = *c;
  SpData out;
  out.ps.index = c;
  out.ps.name = "sp(" + d->name + ")";
  for (int b = 0; b < C.n_obj(); ++b) {
    out.coslices.push_back(build_coslice(c, b));
    out.fun.push_back(
        std::make_shared<FunCatData>(build_functor_category(out.coslices[b].cat, d, budget)));
    out.ps.at.push_back(out.fun[b]->cat);
  }
  for (int u = 0; u < C.n_mor(); ++u) {
    int b = C.mors[u].dom, b2 = C.mors[u].cod;
    const CosliceData& csb = out.coslices[b];
    const CosliceData& csb2 = out.coslices[b2];
    auto cells_b = coslice_cells(csb);
    Functor ustar;
    ustar.src = csb2.cat;
    ustar.dst = csb.cat;
    ustar.name = "(" + C.mors[u].name + ")*";
    ustar.obj.resize(csb2.cat->n_obj());
    ustar.mor.resize(csb2.cat->n_mor());
    for (int o = 0; o < csb2.cat->n_obj(); ++o)
      ustar.obj[o] = coslice_obj(csb, C.compose(u, csb2.obj_arrow[o]));
    for (int m = 0; m < csb2.cat->n_mor(); ++m)
      ustar.mor[m] = cells_b.at({ustar.obj[csb2.cat->mors[m].dom], csb2.proj.mor[m]});
    out.ustar.push_back(ustar);

    Functor a;
    a.src = out.fun[b]->cat;
    a.dst = out.fun[b2]->cat;
    a.name = "sp_act(" + C.mors[u].name + ")";
    a.obj.resize(a.src->n_obj());
    a.mor.resize(a.src->n_mor());
    for (int i = 0; i < a.src->n_obj(); ++i) {
      a.obj[i] = out.fun[b2]->find_obj(compose_functors(ustar, out.fun[b]->obj_fun[i]));
      if (a.obj[i] < 0) throw ValidationError("Internal", "sp action misses an object");
    }
    for (int m = 0; m < a.src->n_mor(); ++m) {
      const Transformation& t = out.fun[b]->mor_nat[m];
      Transformation t2;
      t2.src = compose_functors(ustar, t.src);
      t2.dst = compose_functors(ustar, t.dst);
      t2.comp.resize(csb2.cat->n_obj());
      for (int o = 0; o < csb2.cat->n_obj(); ++o) t2.comp[o] = t.comp[ustar.obj[o]];
      a.mor[m] = out.fun[b2]->find_mor(t2);
      if (a.mor[m] < 0) throw ValidationError("Internal", "sp action misses a cell");
    }
    out.ps.act.push_back(std::move(a));
  }
  Verdict v = check_presheaf(out.ps);
  if (!v) throw ValidationError("Internal", "sp is not strictly functorial");
  return out;
}

PsMorphism sp_of(const Functor& p, const SpData& spd, const SpData& spe) {
  const FinCat& C = *spd.ps.index;
  PsMorphism out{spd.ps, spe.ps, {}, "sp(" + p.name + ")"};
  for (int b = 0; b < C.n_obj(); ++b) {
    Functor f;
    f.src = spd.fun[b]->cat;
    f.dst = spe.fun[b]->cat;
    f.obj.resize(f.src->n_obj());
    f.mor.resize(f.src->n_mor());
    for (int i = 0; i < f.src->n_obj(); ++i) {
      f.obj[i] = spe.fun[b]->find_obj(compose_functors(spd.fun[b]->obj_fun[i], p));
      if (f.obj[i] < 0) throw ValidationError("Internal", "sp_of misses an object");
    }
    for (int m = 0; m < f.src->n_mor(); ++m) {
      const Transformation& t = spd.fun[b]->mor_nat[m];
      Transformation t2;
      t2.src = compose_functors(t.src, p);
      t2.dst = compose_functors(t.dst, p);
      t2.comp.resize(t.comp.size());
      for (std::size_t o = 0; o < t.comp.size(); ++o) t2.comp[o] = p.mor[t.comp[o]];
      f.mor[m] = spe.fun[b]->find_mor(t2);
      if (f.mor[m] < 0) throw ValidationError("Internal", "sp_of misses a cell");
    }
    out.comp.push_back(std::move(f));
  }
  return out;
}

PsMorphism adjunction_unit(const PresheafOfCats& f, const ElPresheaf& ef,
                           const SpData& sp_elf) {
  const FinCat& C = *f.index;
  PsMorphism out{f, sp_elf.ps, {}, "unit"};
  for (int c = 0; c < C.n_obj(); ++c) {
    const CosliceData& cs = sp_elf.coslices[c];
    auto sends = [&](int x) {
      Functor h;
      h.src = cs.cat;
      h.dst = ef.total;
      h.obj.resize(cs.cat->n_obj());
      h.mor.resize(cs.cat->n_mor());
      for (int o = 0; o < cs.cat->n_obj(); ++o) {
        int m = cs.obj_arrow[o];
        h.obj[o] = ef.obj_of(C.mors[m].cod, f.act[m].obj[x]);
      }
      for (int m = 0; m < cs.cat->n_mor(); ++m)
        h.mor[m] = ef.cocart(h.obj[cs.cat->mors[m].dom], cs.proj.mor[m]);
      return h;
    };
    Functor comp;
    comp.src = f.at[c];
    comp.dst = sp_elf.fun[c]->cat;
    comp.obj.resize(f.at[c]->n_obj());
    comp.mor.resize(f.at[c]->n_mor());
    std::vector<Functor> images(f.at[c]->n_obj());
    for (int x = 0; x < f.at[c]->n_obj(); ++x) {
      images[x] = sends(x);
      comp.obj[x] = sp_elf.fun[c]->find_obj(images[x]);
      if (comp.obj[x] < 0) throw ValidationError("Internal", "unit misses an object");
    }
    for (int xi = 0; xi < f.at[c]->n_mor(); ++xi) {
      int x = f.at[c]->mors[xi].dom, y = f.at[c]->mors[xi].cod;
      Transformation t;
      t.src = images[x];
      t.dst = images[y];
      t.comp.resize(cs.cat->n_obj());
      for (int o = 0; o < cs.cat->n_obj(); ++o) {
        int m = cs.obj_arrow[o];
        int b = C.mors[m].cod;
        t.comp[o] = ef.mor_of(images[x].obj[o], C.id_of[b], f.act[m].mor[xi]);
      }
      comp.mor[xi] = sp_elf.fun[c]->find_mor(t);
      if (comp.mor[xi] < 0) throw ValidationError("Internal", "unit misses a cell");
    }
    out.comp.push_back(std::move(comp));
  }
  return out;
}

Functor adjunction_counit(const CatPtr& d, const SpData& spd, const ElPresheaf& el_spd) {
  const FinCat& C = *spd.ps.index;
  Functor out;
  out.src = el_spd.total;
  out.dst = d;
  out.name = "counit";
  out.obj.resize(el_spd.total->n_obj());
  out.mor.resize(el_spd.total->n_mor());
  std::vector<int> idobj(C.n_obj());
  std::vector<std::map<std::pair<int, int>, int>> cells(C.n_obj());
  for (int c = 0; c < C.n_obj(); ++c) {
    idobj[c] = coslice_obj(spd.coslices[c], C.id_of[c]);
    cells[c] = coslice_cells(spd.coslices[c]);
  }
  for (int o = 0; o < el_spd.total->n_obj(); ++o) {
    auto [c, i] = el_spd.obj[o];
    out.obj[o] = spd.fun[c]->obj_fun[i].obj[idobj[c]];
  }
  for (int m = 0; m < el_spd.total->n_mor(); ++m) {
    auto [u, xi] = el_spd.mor[m];
    auto [c, i] = el_spd.obj[el_spd.total->mors[m].dom];
    int c2 = C.mors[u].cod;
    const Functor& h = spd.fun[c]->obj_fun[i];
    const Transformation& t = spd.fun[c2]->mor_nat[xi];
    out.mor[m] = d->compose(h.mor[cells[c].at({idobj[c], u})], t.comp[idobj[c2]]);
  }
  return out;
}

Verdict adjunction_check(const CatPtr& c, const CatPtr& d, const PresheafOfCats& f,
                         Budget& budget) {
  auto ef = el(f);
  auto sp_elf = sp(ef.total, c, budget);
  PsMorphism unit = adjunction_unit(f, ef, sp_elf);
  Verdict vu = check_ps_morphism(unit);
  if (!vu) return vu;

  auto spd = sp(d, c, budget);
  auto el_spd = el(spd.ps);
  Functor counit = adjunction_counit(d, spd, el_spd);
  Verdict vc = check_functor(counit);
  if (!vc) return vc;

  // Triangle on el: el(unit) then the counit of el(F) is the identity.
  auto el_spelf = el(sp_elf.ps);
  Functor tri1 = compose_functors(el_of(unit, ef, el_spelf),
                                  adjunction_counit(ef.total, sp_elf, el_spelf));
  if (!same_functor(tri1, identity_functor(ef.total)))
    return Verdict::fail({{"reason", "first triangle identity fails"}});

  // Triangle on sp: the unit of sp(D) followed by sp(counit) is the identity.
  auto sp_elspd = sp(el_spd.total, c, budget);
  PsMorphism unit2 = adjunction_unit(spd.ps, el_spd, sp_elspd);
  PsMorphism tri2 = compose_ps_morphisms(unit2, sp_of(counit, sp_elspd, spd));
  if (!same_ps_morphism(tri2, identity_ps_morphism(spd.ps)))
    return Verdict::fail({{"reason", "second triangle identity fails"}});
  return Verdict::ok({{"el_objects", ef.total->n_obj()}});
}

Verdict counit_square_at_p(const CatPtr& c, const ClassifierConfig& cfg, Budget& budget) {
  auto cl = build_classifier(cfg);
  auto sp_star = sp(cl.star, c, budget);
  auto sp_s = sp(cl.s.cat, c, budget);
  PsMorphism spp = sp_of(cl.p, sp_star, sp_s);
  Verdict vm = check_ps_morphism(spp);
  if (!vm) return vm;
  auto el_star = el(sp_star.ps);
  auto el_s = el(sp_s.ps);
  Functor down = el_of(spp, el_star, el_s);
  Functor eps_star = adjunction_counit(cl.star, sp_star, el_star);
  Functor eps_s = adjunction_counit(cl.s.cat, sp_s, el_s);
  return check_strict_pullback(eps_star, down, cl.p, eps_s);
}

}  // namespace catv
