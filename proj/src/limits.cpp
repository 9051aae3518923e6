#include "catv/limits.hpp"

#include <algorithm>

namespace catv {

PullbackData build_pullback(const Functor& f, const Functor& g) {
  const FinCat& A = *f.src;
  const FinCat& B = *g.src;
  PullbackData out;
  CatBuilder b("pb(" + A.name + "," + B.name + ")");
  out.obj_idx.assign(A.n_obj(), std::vector<int>(B.n_obj(), -1));
  out.mor_idx.assign(A.n_mor(), std::vector<int>(B.n_mor(), -1));
  for (int a = 0; a < A.n_obj(); ++a)
    for (int c = 0; c < B.n_obj(); ++c)
      if (f.obj[a] == g.obj[c])
        out.obj_idx[a][c] = b.add_object("(" + A.objects[a] + "," + B.objects[c] + ")");
  for (int m = 0; m < A.n_mor(); ++m)
    for (int k = 0; k < B.n_mor(); ++k) {
      if (f.mor[m] != g.mor[k]) continue;
      if (A.is_identity(m) && B.is_identity(k)) {
        out.mor_idx[m][k] = b.id_of(out.obj_idx[A.mors[m].dom][B.mors[k].dom]);
        continue;
      }
      out.mor_idx[m][k] =
          b.add_mor("(" + A.mors[m].name + "," + B.mors[k].name + ")",
                    out.obj_idx[A.mors[m].dom][B.mors[k].dom],
                    out.obj_idx[A.mors[m].cod][B.mors[k].cod]);
    }
  std::vector<std::pair<int, int>> matched;
  for (int m = 0; m < A.n_mor(); ++m)
    for (int k = 0; k < B.n_mor(); ++k)
      if (out.mor_idx[m][k] >= 0) matched.push_back({m, k});
  for (auto& [m, k] : matched)
    for (auto& [m2, k2] : matched) {
      if (!A.composable(m, m2) || !B.composable(k, k2)) continue;
      b.set_compose(out.mor_idx[m][k], out.mor_idx[m2][k2],
                    out.mor_idx[A.compose(m, m2)][B.compose(k, k2)]);
    }
  out.apex = b.validate();
  out.pr1.src = out.pr2.src = out.apex;
  out.pr1.dst = f.src;
  out.pr2.dst = g.src;
  out.pr1.obj.resize(out.apex->n_obj());
  out.pr2.obj.resize(out.apex->n_obj());
  out.pr1.mor.resize(out.apex->n_mor());
  out.pr2.mor.resize(out.apex->n_mor());
  for (int a = 0; a < A.n_obj(); ++a)
    for (int c = 0; c < B.n_obj(); ++c)
      if (out.obj_idx[a][c] >= 0) {
        out.pr1.obj[out.obj_idx[a][c]] = a;
        out.pr2.obj[out.obj_idx[a][c]] = c;
      }
  for (int m = 0; m < A.n_mor(); ++m)
    for (int k = 0; k < B.n_mor(); ++k)
      if (out.mor_idx[m][k] >= 0) {
        out.pr1.mor[out.mor_idx[m][k]] = m;
        out.pr2.mor[out.mor_idx[m][k]] = k;
      }
  return out;
}

Verdict check_strict_pullback(const Functor& h, const Functor& k, const Functor& f,
                              const Functor& g) {
  if (!same_functor(compose_functors(h, f), compose_functors(k, g)))
    return Verdict::fail({{"reason", "square does not commute"}});
  auto pb = build_pullback(f, g);
  const FinCat& P = *h.src;
  // Comparison p |-> (h p, k p) must be bijective on objects and morphisms.
  std::vector<int> obj_hit(pb.apex->n_obj(), 0), mor_hit(pb.apex->n_mor(), 0);
  for (int a = 0; a < P.n_obj(); ++a) obj_hit[pb.pair_obj(h.obj[a], k.obj[a])]++;
  for (int m = 0; m < P.n_mor(); ++m) mor_hit[pb.pair_mor(h.mor[m], k.mor[m])]++;
  for (int a = 0; a < pb.apex->n_obj(); ++a)
    if (obj_hit[a] != 1)
      return Verdict::fail({{"reason", "comparison not bijective on objects"},
                            {"object", pb.apex->objects[a]},
                            {"preimages", obj_hit[a]}});
  for (int m = 0; m < pb.apex->n_mor(); ++m)
    if (mor_hit[m] != 1)
      return Verdict::fail({{"reason", "comparison not bijective on morphisms"},
                            {"morphism", pb.apex->mors[m].name},
                            {"preimages", mor_hit[m]}});
  return Verdict::ok({{"apex_objects", pb.apex->n_obj()}});
}

// ---- Arrow and pair categories ----

int ArrowCatData::mor_of(int src_obj, int dst_obj, int u, int v) const {
  auto it = mor_lookup_.find({src_obj, dst_obj, u, v});
  return it == mor_lookup_.end() ? -1 : it->second;
}

ArrowCatData build_arrow_category(const CatPtr& x) {
  const FinCat& X = *x;
  ArrowCatData out;
  CatBuilder b(X.name + "^[1]");
  out.obj_of.resize(X.n_mor());
  for (int f = 0; f < X.n_mor(); ++f) {
    out.obj_mor.push_back(f);
    out.obj_of[f] = b.add_object("[" + X.mors[f].name + "]");
  }
  // Morphism f -> g: (u: dom f -> dom g, v: cod f -> cod g) with u;g == f;v.
  out.mor_pair.resize(X.n_mor());  // identities first
  for (int f = 0; f < X.n_mor(); ++f)
    out.mor_pair[b.id_of(out.obj_of[f])] = {X.id_of[X.mors[f].dom], X.id_of[X.mors[f].cod]};
  for (int f = 0; f < X.n_mor(); ++f)
    for (int g = 0; g < X.n_mor(); ++g)
      for (int u : X.hom(X.mors[f].dom, X.mors[g].dom))
        for (int v : X.hom(X.mors[f].cod, X.mors[g].cod)) {
          if (X.compose(u, g) != X.compose(f, v)) continue;
          int idx;
          if (f == g && X.is_identity(u) && X.is_identity(v)) idx = b.id_of(out.obj_of[f]);
          else {
            idx = b.add_mor("[" + X.mors[u].name + "|" + X.mors[v].name + "]@" +
                                X.mors[f].name,
                            out.obj_of[f], out.obj_of[g]);
            out.mor_pair.push_back({u, v});
          }
          out.mor_lookup_[{out.obj_of[f], out.obj_of[g], u, v}] = idx;
        }
  for (auto& [k1, m1] : out.mor_lookup_)
    for (auto& [k2, m2] : out.mor_lookup_) {
      if (b.cod(m1) != b.dom(m2)) continue;
      b.set_compose(m1, m2,
                    out.mor_lookup_.at({k1[0], k2[1], X.compose(k1[2], k2[2]),
                                        X.compose(k1[3], k2[3])}));
    }
  out.cat = b.validate();
  out.d0.src = out.d1.src = out.cat;
  out.d0.dst = out.d1.dst = x;
  out.d0.obj.resize(out.cat->n_obj());
  out.d1.obj.resize(out.cat->n_obj());
  out.d0.mor.resize(out.cat->n_mor());
  out.d1.mor.resize(out.cat->n_mor());
  for (int o = 0; o < out.cat->n_obj(); ++o) {
    out.d0.obj[o] = X.mors[out.obj_mor[o]].dom;
    out.d1.obj[o] = X.mors[out.obj_mor[o]].cod;
  }
  for (int m = 0; m < out.cat->n_mor(); ++m) {
    out.d0.mor[m] = out.mor_pair[m].first;
    out.d1.mor[m] = out.mor_pair[m].second;
  }
  out.delta.src = out.d0;
  out.delta.dst = out.d1;
  out.delta.comp = out.obj_mor;
  return out;
}

int PairCatData::obj_of(int f, int g) const {
  auto it = obj_lookup_.find({f, g});
  return it == obj_lookup_.end() ? -1 : it->second;
}

PairCatData build_pair_category(const CatPtr& x, const ArrowCatData& arr) {
  const FinCat& X = *x;
  PairCatData out;
  CatBuilder b(X.name + "^[2]");
  for (int f = 0; f < X.n_mor(); ++f)
    for (int g = 0; g < X.n_mor(); ++g)
      if (X.composable(f, g)) {
        out.obj_lookup_[{f, g}] =
            b.add_object("[" + X.mors[f].name + ";" + X.mors[g].name + "]");
        out.obj_pair.push_back({f, g});
      }
  int nobj = b.n_obj();
  out.mor_triple.resize(nobj);
  for (int o = 0; o < nobj; ++o) {
    auto [f, g] = out.obj_pair[o];
    out.mor_triple[b.id_of(o)] = {X.id_of[X.mors[f].dom], X.id_of[X.mors[f].cod],
                                  X.id_of[X.mors[g].cod]};
  }
  std::map<std::array<int, 5>, int> lk;  // (src obj, dst obj, u, v, w) -> morphism
  for (int o = 0; o < nobj; ++o) {
    auto [f, g] = out.obj_pair[o];
    for (int o2 = 0; o2 < nobj; ++o2) {
      auto [f2, g2] = out.obj_pair[o2];
      for (int u : X.hom(X.mors[f].dom, X.mors[f2].dom))
        for (int v : X.hom(X.mors[f].cod, X.mors[f2].cod)) {
          if (X.compose(u, f2) != X.compose(f, v)) continue;
          for (int w : X.hom(X.mors[g].cod, X.mors[g2].cod)) {
            if (X.compose(v, g2) != X.compose(g, w)) continue;
            int idx;
            if (o == o2 && X.is_identity(u) && X.is_identity(v) && X.is_identity(w))
              idx = b.id_of(o);
            else {
              idx = b.add_mor("tri" + std::to_string(lk.size()), o, o2);
              out.mor_triple.push_back({u, v, w});
            }
            lk[{o, o2, u, v, w}] = idx;
          }
        }
    }
  }
  for (auto& [k1, m1] : lk)
    for (auto& [k2, m2] : lk) {
      if (b.cod(m1) != b.dom(m2)) continue;
      b.set_compose(m1, m2,
                    lk.at({k1[0], k2[1], X.compose(k1[2], k2[2]),
                           X.compose(k1[3], k2[3]), X.compose(k1[4], k2[4])}));
    }
  out.cat = b.validate();

  auto mk_proj = [&](int which) {
    Functor p;
    p.src = out.cat;
    p.dst = arr.cat;
    p.obj.resize(out.cat->n_obj());
    p.mor.resize(out.cat->n_mor());
    for (int o = 0; o < out.cat->n_obj(); ++o) {
      auto [f, g] = out.obj_pair[o];
      int m = which == 0 ? f : which == 1 ? g : X.compose(f, g);
      p.obj[o] = arr.obj_of[m];
    }
    for (auto& [k, m] : lk) {
      auto [f, g] = out.obj_pair[k[0]];
      auto [f2, g2] = out.obj_pair[k[1]];
      auto& t = out.mor_triple[m];
      int so, dsto, u, v;
      if (which == 0) { so = arr.obj_of[f]; dsto = arr.obj_of[f2]; u = t[0]; v = t[1]; }
      else if (which == 1) { so = arr.obj_of[g]; dsto = arr.obj_of[g2]; u = t[1]; v = t[2]; }
      else {
        so = arr.obj_of[X.compose(f, g)];
        dsto = arr.obj_of[X.compose(f2, g2)];
        u = t[0];
        v = t[2];
      }
      p.mor[m] = arr.mor_of(so, dsto, u, v);
    }
    return p;
  };
  out.p01 = mk_proj(0);
  out.p12 = mk_proj(1);
  out.p02 = mk_proj(2);
  return out;
}

// ---- Core and full subcategories ----

CoreData build_core(const CatPtr& x) {
  const FinCat& X = *x;
  CoreData out;
  CatBuilder b(X.name + "^iso");
  for (int a = 0; a < X.n_obj(); ++a) b.add_object(X.objects[a]);
  out.core_of.assign(X.n_mor(), -1);
  std::vector<int> idx(X.n_mor(), -1);
  for (int a = 0; a < X.n_obj(); ++a) idx[X.id_of[a]] = b.id_of(a);
  for (int m = 0; m < X.n_mor(); ++m)
    if (!X.is_identity(m) && X.is_iso(m))
      idx[m] = b.add_mor(X.mors[m].name, X.mors[m].dom, X.mors[m].cod);
  for (int m = 0; m < X.n_mor(); ++m)
    for (int k = 0; k < X.n_mor(); ++k)
      if (idx[m] >= 0 && idx[k] >= 0 && X.composable(m, k))
        b.set_compose(idx[m], idx[k], idx[X.compose(m, k)]);
  out.cat = b.validate();
  out.mor_of.resize(out.cat->n_mor());
  for (int m = 0; m < X.n_mor(); ++m)
    if (idx[m] >= 0) {
      out.core_of[m] = idx[m];
      out.mor_of[idx[m]] = m;
    }
  out.incl.src = out.cat;
  out.incl.dst = x;
  out.incl.obj.resize(X.n_obj());
  for (int a = 0; a < X.n_obj(); ++a) out.incl.obj[a] = a;
  out.incl.mor = out.mor_of;
  return out;
}

Functor core_of_functor(const Functor& f, const CoreData& ca, const CoreData& cx) {
  Functor g;
  g.src = ca.cat;
  g.dst = cx.cat;
  g.obj = f.obj;
  g.mor.resize(ca.cat->n_mor());
  for (int m = 0; m < ca.cat->n_mor(); ++m) g.mor[m] = cx.core_of[f.mor[ca.mor_of[m]]];
  return g;
}

FullSubcatData full_subcat(const CatPtr& x, const std::vector<int>& objs, std::string name) {
  const FinCat& X = *x;
  FullSubcatData out;
  CatBuilder b(std::move(name));
  out.obj_back.assign(X.n_obj(), -1);
  out.mor_back.assign(X.n_mor(), -1);
  for (int a : objs) {
    out.obj_back[a] = b.add_object(X.objects[a]);
    out.obj_of.push_back(a);
  }
  std::vector<int> idx(X.n_mor(), -1);
  for (int a : objs) idx[X.id_of[a]] = b.id_of(out.obj_back[a]);
  for (int m = 0; m < X.n_mor(); ++m) {
    if (X.is_identity(m)) continue;
    if (out.obj_back[X.mors[m].dom] < 0 || out.obj_back[X.mors[m].cod] < 0) continue;
    idx[m] = b.add_mor(X.mors[m].name, out.obj_back[X.mors[m].dom],
                       out.obj_back[X.mors[m].cod]);
  }
  for (int m = 0; m < X.n_mor(); ++m)
    for (int k = 0; k < X.n_mor(); ++k)
      if (idx[m] >= 0 && idx[k] >= 0 && X.composable(m, k))
        b.set_compose(idx[m], idx[k], idx[X.compose(m, k)]);
  out.cat = b.validate();
  out.mor_of.resize(out.cat->n_mor());
  for (int m = 0; m < X.n_mor(); ++m)
    if (idx[m] >= 0) {
      out.mor_back[m] = idx[m];
      out.mor_of[idx[m]] = m;
    }
  out.incl.src = out.cat;
  out.incl.dst = x;
  out.incl.obj = out.obj_of;
  out.incl.mor = out.mor_of;
  return out;
}

MonData build_mon_object(const CatPtr& x, const ArrowCatData& arr) {
  std::vector<int> objs;
  for (int o = 0; o < arr.cat->n_obj(); ++o)
    if (x->is_mono(arr.obj_mor[o])) objs.push_back(o);
  auto sub = full_subcat(arr.cat, objs, x->name + "_mon");
  MonData out;
  out.cat = sub.cat;
  out.incl = sub.incl;
  out.d0 = compose_functors(sub.incl, arr.d0);
  out.d1 = compose_functors(sub.incl, arr.d1);
  out.delta.src = out.d0;
  out.delta.dst = out.d1;
  out.delta.comp.resize(sub.cat->n_obj());
  out.obj_mor.resize(sub.cat->n_obj());
  for (int o = 0; o < sub.cat->n_obj(); ++o) {
    out.obj_mor[o] = arr.obj_mor[sub.obj_of[o]];
    out.delta.comp[o] = out.obj_mor[o];
  }
  return out;
}

// ---- Limits inside a finite category ----

bool is_pullback_square(const FinCat& x, int top, int left, int right, int bottom) {
  if (x.mors[top].dom != x.mors[left].dom) return false;
  if (x.mors[top].cod != x.mors[right].dom) return false;
  if (x.mors[left].cod != x.mors[bottom].dom) return false;
  if (x.mors[right].cod != x.mors[bottom].cod) return false;
  if (x.compose(top, right) != x.compose(left, bottom)) return false;
  int a = x.mors[top].dom;
  for (int o = 0; o < x.n_obj(); ++o)
    for (int h1 : x.hom(o, x.mors[right].dom))
      for (int h2 : x.hom(o, x.mors[bottom].dom)) {
        if (x.compose(h1, right) != x.compose(h2, bottom)) continue;
        int count = 0;
        for (int m : x.hom(o, a))
          if (x.compose(m, top) == h1 && x.compose(m, left) == h2) ++count;
        if (count != 1) return false;
      }
  return true;
}

bool is_product_cone(const FinCat& x, int leg1, int leg2) {
  if (x.mors[leg1].dom != x.mors[leg2].dom) return false;
  int a = x.mors[leg1].dom;
  for (int o = 0; o < x.n_obj(); ++o)
    for (int h1 : x.hom(o, x.mors[leg1].cod))
      for (int h2 : x.hom(o, x.mors[leg2].cod)) {
        int count = 0;
        for (int m : x.hom(o, a))
          if (x.compose(m, leg1) == h1 && x.compose(m, leg2) == h2) ++count;
        if (count != 1) return false;
      }
  return true;
}

std::optional<Cone> chosen_pullback(const FinCat& x, int f, int g) {
  for (int a = 0; a < x.n_obj(); ++a)
    for (int l1 : x.hom(a, x.mors[f].dom))
      for (int l2 : x.hom(a, x.mors[g].dom)) {
        if (x.compose(l1, f) != x.compose(l2, g)) continue;
        if (is_pullback_square(x, l1, l2, f, g)) return Cone{a, l1, l2};
      }
  return std::nullopt;
}

std::optional<Cone> chosen_product(const FinCat& x, int a, int b) {
  for (int o = 0; o < x.n_obj(); ++o)
    for (int l1 : x.hom(o, a))
      for (int l2 : x.hom(o, b))
        if (is_product_cone(x, l1, l2)) return Cone{o, l1, l2};
  return std::nullopt;
}

std::optional<int> chosen_terminal(const FinCat& x) {
  for (int t = 0; t < x.n_obj(); ++t)
    if (x.is_terminal_object(t)) return t;
  return std::nullopt;
}

Verdict has_finite_limits(const CatPtr& x) {
  auto t = chosen_terminal(*x);
  if (!t) return Verdict::fail({{"reason", "no terminal object"}});
  json pbs = json::array();
  for (int f = 0; f < x->n_mor(); ++f)
    for (int g = 0; g < x->n_mor(); ++g) {
      if (x->mors[f].cod != x->mors[g].cod) continue;
      auto c = chosen_pullback(*x, f, g);
      if (!c)
        return Verdict::fail({{"reason", "missing pullback"},
                              {"cospan", {x->mors[f].name, x->mors[g].name}}});
      pbs.push_back({{"cospan", {x->mors[f].name, x->mors[g].name}},
                     {"apex", x->objects[c->apex]}});
    }
  return Verdict::ok({{"terminal", x->objects[*t]}, {"pullbacks", pbs}});
}

}  // namespace catv
