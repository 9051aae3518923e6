#include "catv/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catv {

namespace {

// Pairing functor <f, g>: A -> B x C through a materialized product.
Functor pairing(const Functor& f, const Functor& g, const ProductData& prod) {
  Functor h;
  h.src = f.src;
  h.dst = prod.cat;
  h.name = "<" + f.name + "," + g.name + ">";
  h.obj.resize(f.src->n_obj());
  h.mor.resize(f.src->n_mor());
  for (int a = 0; a < f.src->n_obj(); ++a) h.obj[a] = prod.pair_obj(f.obj[a], g.obj[a]);
  for (int m = 0; m < f.src->n_mor(); ++m) h.mor[m] = prod.pair_mor(f.mor[m], g.mor[m]);
  return h;
}

Functor product_of(const Functor& f, const Functor& g, const ProductData& src_prod,
                   const ProductData& dst_prod) {
  Functor h;
  h.src = src_prod.cat;
  h.dst = dst_prod.cat;
  h.name = f.name + "x" + g.name;
  h.obj.resize(src_prod.cat->n_obj());
  h.mor.resize(src_prod.cat->n_mor());
  for (int a = 0; a < src_prod.cat->n_obj(); ++a) {
    int a1 = src_prod.pr1.obj[a], a2 = src_prod.pr2.obj[a];
    h.obj[a] = dst_prod.pair_obj(f.obj[a1], g.obj[a2]);
  }
  for (int m = 0; m < src_prod.cat->n_mor(); ++m) {
    int m1 = src_prod.pr1.mor[m], m2 = src_prod.pr2.mor[m];
    h.mor[m] = dst_prod.pair_mor(f.mor[m1], g.mor[m2]);
  }
  return h;
}

void require_equal(const Functor& f, const Functor& g, const char* equation) {
  if (!same_functor(f, g))
    throw ValidationError("EquationViolation", std::string("equation fails: ") + equation);
}

// The unique square on h with the given vertical boundary, or -1 / -2 when
// there is none / more than one.
int boundary_lift(const DoubleCat& c, int h, int u, int v) {
  int found = -1;
  for (int a = 0; a < c.c1->n_mor(); ++a) {
    if (c.c1->mors[a].dom != h) continue;
    if (c.p0.mor[a] != u || c.p1.mor[a] != v) continue;
    if (found >= 0) return -2;
    found = a;
  }
  return found;
}

// Composite-projection cospan of the completeness and iso-object squares:
// <q012;p02, q123;p02> : c3 -> c1 x c1 and e x e : c0 x c0 -> c1 x c1.
struct CompositeBoundary {
  ProductData prod00, prod11;
  Functor f;  // c3 -> c1 x c1
  Functor g;  // c0 x c0 -> c1 x c1
};
CompositeBoundary composite_boundary(const DoubleCat& c) {
  CompositeBoundary out;
  out.prod00 = build_product(c.c0, c.c0);
  out.prod11 = build_product(c.c1, c.c1);
  out.f = pairing(compose_functors(c.q012, c.p02), compose_functors(c.q123, c.p02), out.prod11);
  out.g = product_of(c.e, c.e, out.prod00, out.prod11);
  return out;
}

}  // namespace

DoubleCat validate_double(const RawDouble& raw) {
  DoubleCat c;
  c.c0 = raw.c0;
  c.c1 = raw.c1;
  c.c2 = raw.c2;
  c.p0 = raw.p0;
  c.p1 = raw.p1;
  c.e = raw.e;
  c.p01 = raw.p01;
  c.p12 = raw.p12;
  c.p02 = raw.p02;

  struct Named {
    const Functor* f;
    const char* n;
  };
  for (auto [f, n] : {Named{&c.p0, "pi0"}, Named{&c.p1, "pi1"}, Named{&c.e, "e"},
                      Named{&c.p01, "pi01"}, Named{&c.p12, "pi12"}, Named{&c.p02, "pi02"}}) {
    if (!check_functor(*f))
      throw ValidationError("EquationViolation", std::string(n) + " is not a functor");
  }

  require_equal(compose_functors(c.e, c.p0), identity_functor(c.c0), "e;pi0 = id");
  require_equal(compose_functors(c.e, c.p1), identity_functor(c.c0), "e;pi1 = id");
  require_equal(compose_functors(c.p01, c.p1), compose_functors(c.p12, c.p0),
                "pi01;pi1 = pi12;pi0");
  require_equal(compose_functors(c.p02, c.p0), compose_functors(c.p01, c.p0),
                "pi02;pi0 = pi01;pi0");
  require_equal(compose_functors(c.p02, c.p1), compose_functors(c.p12, c.p1),
                "pi02;pi1 = pi12;pi1");

  if (!check_strict_pullback(c.p01, c.p12, c.p1, c.p0))
    throw ValidationError("NotPullback", "c2 is not the strict pullback c1 x_c0 c1");

  c.pair_obj_.assign(c.c1->n_obj(), std::vector<int>(c.c1->n_obj(), -1));
  c.pair_mor_.assign(c.c1->n_mor(), std::vector<int>(c.c1->n_mor(), -1));
  for (int w = 0; w < c.c2->n_obj(); ++w) c.pair_obj_[c.p01.obj[w]][c.p12.obj[w]] = w;
  for (int a = 0; a < c.c2->n_mor(); ++a) c.pair_mor_[c.p01.mor[a]][c.p12.mor[a]] = a;

  for (int h = 0; h < c.c1->n_obj(); ++h) {
    if (c.hcomp_obj(c.e.obj[c.p0.obj[h]], h) != h || c.hcomp_obj(h, c.e.obj[c.p1.obj[h]]) != h)
      throw ValidationError("EquationViolation", "horizontal unit law fails at object " +
                                                     c.c1->objects[h]);
  }
  for (int a = 0; a < c.c1->n_mor(); ++a) {
    if (c.hcomp_mor(c.e.mor[c.p0.mor[a]], a) != a || c.hcomp_mor(a, c.e.mor[c.p1.mor[a]]) != a)
      throw ValidationError("EquationViolation",
                            "horizontal unit law fails at square " + c.c1->mors[a].name);
  }

  auto pb3 = build_pullback(c.p12, c.p01);
  c.c3 = pb3.apex;
  c.q012 = pb3.pr1;
  c.q123 = pb3.pr2;
  c.triple_obj_ = pb3.obj_idx;
  c.triple_mor_ = pb3.mor_idx;

  for (int t = 0; t < c.c3->n_obj(); ++t) {
    int w01 = c.q012.obj[t], w12 = c.q123.obj[t];
    if (c.hcomp_obj(c.p02.obj[w01], c.p12.obj[w12]) !=
        c.hcomp_obj(c.p01.obj[w01], c.p02.obj[w12]))
      throw ValidationError("EquationViolation",
                            "horizontal associativity fails at triple " + c.c3->objects[t]);
  }
  for (int t = 0; t < c.c3->n_mor(); ++t) {
    int a01 = c.q012.mor[t], a12 = c.q123.mor[t];
    if (c.hcomp_mor(c.p02.mor[a01], c.p12.mor[a12]) !=
        c.hcomp_mor(c.p01.mor[a01], c.p02.mor[a12]))
      throw ValidationError("EquationViolation",
                            "horizontal associativity fails at square triple " +
                                c.c3->mors[t].name);
  }

  auto prod00 = build_product(c.c0, c.c0);
  Functor bd = pairing(c.p0, c.p1, prod00);
  if (!check_property(MapProperty::kIsofibration, bd))
    throw ValidationError("NotIsofibration", "<pi0,pi1> is not an isofibration");

  return c;
}

RawDouble squares_double(const CatPtr& x) {
  auto arr = build_arrow_category(x);
  auto prs = build_pair_category(x, arr);
  RawDouble d;
  d.c0 = x;
  d.c1 = arr.cat;
  d.c2 = prs.cat;
  d.p0 = arr.d0;
  d.p1 = arr.d1;
  d.p01 = prs.p01;
  d.p12 = prs.p12;
  d.p02 = prs.p02;
  d.e.src = x;
  d.e.dst = arr.cat;
  d.e.name = "e";
  d.e.obj.resize(x->n_obj());
  d.e.mor.resize(x->n_mor());
  for (int a = 0; a < x->n_obj(); ++a) d.e.obj[a] = arr.obj_of[x->id_of[a]];
  for (int u = 0; u < x->n_mor(); ++u)
    d.e.mor[u] = arr.mor_of(arr.obj_of[x->id_of[x->mors[u].dom]],
                            arr.obj_of[x->id_of[x->mors[u].cod]], u, u);
  return d;
}

Verdict is_gbo(const DoubleCat& c, GboRoute route) {
  struct Named {
    const FinCat* cat;
    const char* n;
  };
  for (auto [cat, n] : {Named{c.c0.get(), "c0"}, Named{c.c1.get(), "c1"},
                        Named{c.c2.get(), "c2"}}) {
    if (!cat->is_groupoid())
      return Verdict::fail({{"reason", "level is not a groupoid"}, {"level", n}});
  }

  if (route == GboRoute::kDirect) {
    auto prod00 = build_product(c.c0, c.c0);
    Functor bd = pairing(c.p0, c.p1, prod00);
    Verdict v = check_property(MapProperty::kDiscreteOpfibration, bd);
    if (!v)
      return Verdict::fail({{"reason", "boundary functor is not a DOF"},
                            {"detail", v.counterexample}});
    return Verdict::ok({{"route", "direct"}});
  }

  // Characterization route: the relation from verticals to horizontals is a
  // function R, and a square with boundary (u, v) from h to k exists exactly
  // when h.R(v) = R(u).k.
  const FinCat& C0 = *c.c0;
  const FinCat& C1 = *c.c1;
  std::vector<int> r(C0.n_mor(), -1);
  for (int v = 0; v < C0.n_mor(); ++v) {
    int x = C0.mors[v].dom;
    std::set<int> images;
    for (int a = 0; a < C1.n_mor(); ++a) {
      if (C1.mors[a].dom != c.e.obj[x]) continue;
      if (c.p0.mor[a] != C0.id_of[x] || c.p1.mor[a] != v) continue;
      images.insert(C1.mors[a].cod);
    }
    if (images.size() != 1)
      return Verdict::fail({{"reason", "relation R is not a function"},
                            {"vertical", C0.mors[v].name},
                            {"image_count", images.size()}});
    r[v] = *images.begin();
  }
  for (int h = 0; h < C1.n_obj(); ++h) {
    for (int k = 0; k < C1.n_obj(); ++k) {
      for (int u = 0; u < C0.n_mor(); ++u) {
        if (C0.mors[u].dom != c.p0.obj[h] || C0.mors[u].cod != c.p0.obj[k]) continue;
        for (int v = 0; v < C0.n_mor(); ++v) {
          if (C0.mors[v].dom != c.p1.obj[h] || C0.mors[v].cod != c.p1.obj[k]) continue;
          bool exists = false;
          for (int a = 0; a < C1.n_mor(); ++a) {
            if (C1.mors[a].dom == h && C1.mors[a].cod == k && c.p0.mor[a] == u &&
                c.p1.mor[a] == v) {
              exists = true;
              break;
            }
          }
          bool predicted = c.hcomp_obj(h, r[v]) == c.hcomp_obj(r[u], k);
          if (exists != predicted)
            return Verdict::fail({{"reason", "boundary-filler criterion fails"},
                                  {"h", C1.objects[h]},
                                  {"k", C1.objects[k]},
                                  {"u", C0.mors[u].name},
                                  {"v", C0.mors[v].name},
                                  {"square_exists", exists},
                                  {"composites_agree", predicted}});
        }
      }
    }
  }
  return Verdict::ok({{"route", "characterization"}});
}

ReflectionData reflection(const DoubleCat& c) {
  if (!is_gbo(c, GboRoute::kDirect))
    throw ValidationError("NotGbo", "reflection requires a gbo congruence");
  const FinCat& C0 = *c.c0;
  ReflectionData out;
  out.r.resize(C0.n_mor());
  out.filler.resize(C0.n_mor());
  for (int v = 0; v < C0.n_mor(); ++v) {
    int x = C0.mors[v].dom;
    int a = boundary_lift(c, c.e.obj[x], C0.id_of[x], v);
    if (a < 0) throw ValidationError("NotGbo", "reflection lift not unique for " + C0.mors[v].name);
    out.filler[v] = a;
    out.r[v] = c.c1->mors[a].cod;
  }
  for (int x = 0; x < C0.n_obj(); ++x) {
    if (out.r[C0.id_of[x]] != c.e.obj[x])
      throw ValidationError("EquationViolation", "R(id) != e at " + C0.objects[x]);
  }
  for (int v = 0; v < C0.n_mor(); ++v) {
    for (int w = 0; w < C0.n_mor(); ++w) {
      if (!C0.composable(v, w)) continue;
      if (out.r[C0.compose(v, w)] != c.hcomp_obj(out.r[v], out.r[w]))
        throw ValidationError("EquationViolation",
                              "R(vw) != R(v).R(w) at " + C0.mors[v].name + ", " + C0.mors[w].name);
    }
  }
  return out;
}

ObjectOfIsos object_of_isos(const DoubleCat& c) {
  const FinCat& C1 = *c.c1;
  ObjectOfIsos out;
  out.hinv.assign(C1.n_obj(), -1);
  std::vector<int> objs;
  for (int h = 0; h < C1.n_obj(); ++h) {
    int x = c.p0.obj[h], y = c.p1.obj[h];
    for (int g = 0; g < C1.n_obj(); ++g) {
      if (c.p0.obj[g] != y || c.p1.obj[g] != x) continue;
      if (c.hcomp_obj(h, g) == c.e.obj[x] && c.hcomp_obj(g, h) == c.e.obj[y]) {
        out.hinv[h] = g;
        break;
      }
    }
    if (out.hinv[h] >= 0) objs.push_back(h);
  }
  out.sub = full_subcat(c.c1, objs, c.c1->name + "_iso");

  out.e_bar.src = c.c0;
  out.e_bar.dst = out.sub.cat;
  out.e_bar.name = "e_bar";
  out.e_bar.obj.resize(c.c0->n_obj());
  out.e_bar.mor.resize(c.c0->n_mor());
  for (int x = 0; x < c.c0->n_obj(); ++x) out.e_bar.obj[x] = out.sub.obj_back[c.e.obj[x]];
  for (int v = 0; v < c.c0->n_mor(); ++v) out.e_bar.mor[v] = out.sub.mor_back[c.e.mor[v]];

  // Strict-pullback criterion: the canonical pullback of the two-sided triple
  // composite against e x e projects bijectively, via the middle horizontal
  // arrow, onto the full subcategory of invertibles.
  auto cb = composite_boundary(c);
  auto pb = build_pullback(cb.f, cb.g);
  Functor mid = compose_functors(compose_functors(pb.pr1, c.q012), c.p12);
  std::vector<int> obj_hit(C1.n_obj(), 0), mor_hit(C1.n_mor(), 0);
  for (int a = 0; a < pb.apex->n_obj(); ++a) obj_hit[mid.obj[a]]++;
  for (int m = 0; m < pb.apex->n_mor(); ++m) mor_hit[mid.mor[m]]++;
  out.pullback_criterion = Verdict::ok({{"pullback_objects", pb.apex->n_obj()}});
  for (int h = 0; h < C1.n_obj(); ++h) {
    int want = out.hinv[h] >= 0 ? 1 : 0;
    if (obj_hit[h] != want) {
      out.pullback_criterion = Verdict::fail(
          {{"reason", "middle projection misses or duplicates a horizontal arrow"},
           {"object", C1.objects[h]},
           {"hits", obj_hit[h]},
           {"invertible", want == 1}});
      return out;
    }
  }
  for (int m = 0; m < C1.n_mor(); ++m) {
    int want = (out.hinv[C1.mors[m].dom] >= 0 && out.hinv[C1.mors[m].cod] >= 0) ? 1 : 0;
    if (mor_hit[m] != want) {
      out.pullback_criterion =
          Verdict::fail({{"reason", "middle projection not bijective on squares"},
                         {"morphism", C1.mors[m].name},
                         {"hits", mor_hit[m]}});
      return out;
    }
  }
  return out;
}

Verdict is_complete(const DoubleCat& c, CompleteRoute route) {
  if (!is_gbo(c, GboRoute::kDirect))
    throw ValidationError("NotGbo", "is_complete requires a gbo congruence");

  if (route == CompleteRoute::kRBijection) {
    auto refl = reflection(c);
    auto isos = object_of_isos(c);
    std::vector<int> hits(c.c1->n_obj(), 0);
    for (int v = 0; v < c.c0->n_mor(); ++v) hits[refl.r[v]]++;
    for (int h = 0; h < c.c1->n_obj(); ++h) {
      int want = isos.hinv[h] >= 0 ? 1 : 0;
      if (hits[h] != want)
        return Verdict::fail({{"reason", "R is not a bijection onto horizontal isos"},
                              {"horizontal", c.c1->objects[h]},
                              {"preimages", hits[h]},
                              {"invertible", want == 1}});
    }
    return Verdict::ok({{"route", "Rbijection"}, {"verticals", c.c0->n_mor()}});
  }

  if (route == CompleteRoute::kEEquivalence) {
    auto isos = object_of_isos(c);
    Verdict v = check_property(MapProperty::kEquivalence, isos.e_bar);
    if (!v)
      return Verdict::fail(
          {{"reason", "e_bar is not an equivalence"}, {"detail", v.counterexample}});
    return Verdict::ok({{"route", "eEquivalence"}});
  }

  // Pullback-square route: the square off the vertical-arrow category built
  // from <r, inverted r, r> into c3 must be a strict pullback over e x e.
  auto refl = reflection(c);
  auto arr = build_arrow_category(c.c0);

  Functor r;
  r.src = arr.cat;
  r.dst = c.c1;
  r.name = "r";
  r.obj.resize(arr.cat->n_obj());
  r.mor.resize(arr.cat->n_mor());
  for (int a = 0; a < arr.cat->n_obj(); ++a) r.obj[a] = refl.r[arr.obj_mor[a]];
  for (int m = 0; m < arr.cat->n_mor(); ++m) {
    auto [u, w] = arr.mor_pair[m];
    int lift = boundary_lift(c, r.obj[arr.cat->mors[m].dom], u, w);
    if (lift < 0 || c.c1->mors[lift].cod != r.obj[arr.cat->mors[m].cod])
      return Verdict::fail({{"reason", "r is not functorial on vertical squares"},
                            {"square", arr.cat->mors[m].name}});
    r.mor[m] = lift;
  }

  Functor tau;  // invert the vertical arrow, transpose the square
  tau.src = arr.cat;
  tau.dst = arr.cat;
  tau.name = "tau";
  tau.obj.resize(arr.cat->n_obj());
  tau.mor.resize(arr.cat->n_mor());
  for (int a = 0; a < arr.cat->n_obj(); ++a) tau.obj[a] = arr.obj_of[c.c0->inverse(arr.obj_mor[a])];
  for (int m = 0; m < arr.cat->n_mor(); ++m) {
    auto [u, w] = arr.mor_pair[m];
    tau.mor[m] = arr.mor_of(tau.obj[arr.cat->mors[m].dom], tau.obj[arr.cat->mors[m].cod], w, u);
  }
  Functor tr = compose_functors(tau, r);

  Functor triple;
  triple.src = arr.cat;
  triple.dst = c.c3;
  triple.name = "<r,tau r,r>";
  triple.obj.resize(arr.cat->n_obj());
  triple.mor.resize(arr.cat->n_mor());
  for (int a = 0; a < arr.cat->n_obj(); ++a)
    triple.obj[a] = c.triple_obj(c.pair_obj(r.obj[a], tr.obj[a]), c.pair_obj(tr.obj[a], r.obj[a]));
  for (int m = 0; m < arr.cat->n_mor(); ++m)
    triple.mor[m] = c.triple_mor(c.pair_mor(r.mor[m], tr.mor[m]), c.pair_mor(tr.mor[m], r.mor[m]));

  auto cb = composite_boundary(c);
  Functor bd = pairing(arr.d0, arr.d1, cb.prod00);
  Verdict v = check_strict_pullback(triple, bd, cb.f, cb.g);
  if (!v)
    return Verdict::fail(
        {{"reason", "completeness square is not a strict pullback"}, {"detail", v.counterexample}});
  return Verdict::ok({{"route", "pullbackSquare"}});
}

Verdict check_cocone(const DoubleCat& c, const DoubleCocone& k) {
  if (!check_functor(k.gamma)) return Verdict::fail({{"reason", "gamma is not a functor"}});
  Transformation g01 = k.gamma01;
  if (!check_transformation(g01))
    return Verdict::fail({{"reason", "gamma01 is not a transformation"}});
  if (!same_functor(g01.src, compose_functors(c.p0, k.gamma)) ||
      !same_functor(g01.dst, compose_functors(c.p1, k.gamma)))
    return Verdict::fail({{"reason", "gamma01 has the wrong boundary"}});
  const FinCat& Y = *k.gamma.dst;
  for (int x = 0; x < c.c0->n_obj(); ++x) {
    if (g01.comp[c.e.obj[x]] != Y.id_of[k.gamma.obj[x]])
      return Verdict::fail(
          {{"reason", "unit cocone equation fails"}, {"object", c.c0->objects[x]}});
  }
  for (int w = 0; w < c.c2->n_obj(); ++w) {
    int lhs = g01.comp[c.p02.obj[w]];
    int rhs = Y.compose(g01.comp[c.p01.obj[w]], g01.comp[c.p12.obj[w]]);
    if (lhs != rhs)
      return Verdict::fail(
          {{"reason", "multiplication cocone equation fails"}, {"pair", c.c2->objects[w]}});
  }
  return Verdict::ok();
}

NerveData nerve(const CatPtr& x) {
  NerveData n;
  n.x = x;
  n.core0 = build_core(x);
  n.arrow = build_arrow_category(x);
  n.core1 = build_core(n.arrow.cat);
  n.pairs = build_pair_category(x, n.arrow);
  n.core2 = build_core(n.pairs.cat);

  RawDouble raw;
  raw.c0 = n.core0.cat;
  raw.c1 = n.core1.cat;
  raw.c2 = n.core2.cat;
  raw.p0 = core_of_functor(n.arrow.d0, n.core1, n.core0);
  raw.p1 = core_of_functor(n.arrow.d1, n.core1, n.core0);
  raw.p01 = core_of_functor(n.pairs.p01, n.core2, n.core1);
  raw.p12 = core_of_functor(n.pairs.p12, n.core2, n.core1);
  raw.p02 = core_of_functor(n.pairs.p02, n.core2, n.core1);

  Functor ex;  // x -> x^[1], identity squares
  ex.src = x;
  ex.dst = n.arrow.cat;
  ex.name = "e";
  ex.obj.resize(x->n_obj());
  ex.mor.resize(x->n_mor());
  for (int a = 0; a < x->n_obj(); ++a) ex.obj[a] = n.arrow.obj_of[x->id_of[a]];
  for (int u = 0; u < x->n_mor(); ++u)
    ex.mor[u] = n.arrow.mor_of(n.arrow.obj_of[x->id_of[x->mors[u].dom]],
                               n.arrow.obj_of[x->id_of[x->mors[u].cod]], u, u);
  raw.e = core_of_functor(ex, n.core0, n.core1);

  n.dc = validate_double(raw);

  n.taut.gamma = n.core0.incl;
  n.taut.gamma01.src = compose_functors(n.dc.p0, n.taut.gamma);
  n.taut.gamma01.dst = compose_functors(n.dc.p1, n.taut.gamma);
  n.taut.gamma01.name = "i_delta";
  n.taut.gamma01.comp.resize(n.dc.c1->n_obj());
  for (int h = 0; h < n.dc.c1->n_obj(); ++h) n.taut.gamma01.comp[h] = n.arrow.obj_mor[h];
  return n;
}

QuotientData quotient(const DoubleCat& c, const std::vector<CatPtr>& probes, Budget& budget) {
  if (!is_complete(c, CompleteRoute::kRBijection))
    throw ValidationError("NotComplete", "quotient requires a complete congruence");
  auto refl = reflection(c);
  const FinCat& C0 = *c.c0;
  const FinCat& C1 = *c.c1;

  CatBuilder b(C1.name + "_quot");
  for (int x = 0; x < C0.n_obj(); ++x) b.add_object(C0.objects[x]);
  std::vector<int> mor_of_h(C1.n_obj(), -1);
  for (int x = 0; x < C0.n_obj(); ++x) mor_of_h[c.e.obj[x]] = b.id_of(x);
  for (int h = 0; h < C1.n_obj(); ++h)
    if (mor_of_h[h] < 0) mor_of_h[h] = b.add_mor(C1.objects[h], c.p0.obj[h], c.p1.obj[h]);
  for (int h = 0; h < C1.n_obj(); ++h)
    for (int k = 0; k < C1.n_obj(); ++k)
      if (c.p1.obj[h] == c.p0.obj[k])
        b.set_compose(mor_of_h[h], mor_of_h[k], mor_of_h[c.hcomp_obj(h, k)]);
  QuotientData out;
  out.x = b.validate();

  out.cocone.gamma.src = c.c0;
  out.cocone.gamma.dst = out.x;
  out.cocone.gamma.name = "gamma";
  out.cocone.gamma.obj.resize(C0.n_obj());
  out.cocone.gamma.mor.resize(C0.n_mor());
  for (int x = 0; x < C0.n_obj(); ++x) out.cocone.gamma.obj[x] = x;
  for (int v = 0; v < C0.n_mor(); ++v) out.cocone.gamma.mor[v] = mor_of_h[refl.r[v]];
  out.cocone.gamma01.src = compose_functors(c.p0, out.cocone.gamma);
  out.cocone.gamma01.dst = compose_functors(c.p1, out.cocone.gamma);
  out.cocone.gamma01.name = "gamma01";
  out.cocone.gamma01.comp.resize(C1.n_obj());
  for (int h = 0; h < C1.n_obj(); ++h) out.cocone.gamma01.comp[h] = mor_of_h[h];
  Verdict cv = check_cocone(c, out.cocone);
  if (!cv) {
    out.universality = cv;
    return out;
  }

  json per_probe = json::array();
  for (const auto& y : probes) {
    auto funcs = enumerate_functors(out.x, y, budget);
    // All cocones under c with vertex y.
    std::vector<DoubleCocone> cocones;
    for (const auto& g : enumerate_functors(c.c0, y, budget)) {
      Functor s = compose_functors(c.p0, g), t = compose_functors(c.p1, g);
      for (const auto& d : enumerate_transformations(s, t, budget)) {
        DoubleCocone k{g, d};
        if (check_cocone(c, k)) cocones.push_back(std::move(k));
      }
    }
    // The comparison: f |-> (gamma;f, gamma01 whiskered by f).
    std::vector<int> hit(cocones.size(), 0);
    for (const auto& f : funcs) {
      Functor g = compose_functors(out.cocone.gamma, f);
      Transformation d;
      d.src = compose_functors(c.p0, g);
      d.dst = compose_functors(c.p1, g);
      d.comp.resize(C1.n_obj());
      for (int h = 0; h < C1.n_obj(); ++h) d.comp[h] = f.mor[out.cocone.gamma01.comp[h]];
      bool found = false;
      for (std::size_t i = 0; i < cocones.size(); ++i) {
        if (same_functor(cocones[i].gamma, g) && cocones[i].gamma01.comp == d.comp) {
          hit[i]++;
          found = true;
          break;
        }
      }
      if (!found) {
        out.universality = Verdict::fail(
            {{"reason", "induced cocone not found"}, {"probe", y->name}});
        return out;
      }
    }
    for (std::size_t i = 0; i < cocones.size(); ++i) {
      if (hit[i] != 1) {
        out.universality = Verdict::fail({{"reason", "functors do not biject with cocones"},
                                          {"probe", y->name},
                                          {"cocone_index", i},
                                          {"preimages", hit[i]}});
        return out;
      }
    }
    per_probe.push_back({{"probe", y->name}, {"functors", funcs.size()}});
  }
  out.universality = Verdict::ok({{"probes", per_probe}});
  return out;
}

std::vector<CatPtr> default_quotient_probes() {
  std::vector<CatPtr> out;
  for (const char* n : {"terminal", "walking_arrow", "composable_pair", "walking_iso",
                        "discrete_two", "parallel_pair", "b2"})
    out.push_back(corpus_lookup(n));
  return out;
}

DoubleCat swap_double(const DoubleCat& c) {
  RawDouble raw;
  raw.c0 = c.c0;
  raw.c1 = c.c1;
  raw.c2 = c.c2;
  raw.p0 = c.p1;
  raw.p1 = c.p0;
  raw.e = c.e;
  raw.p01 = c.p12;
  raw.p12 = c.p01;
  raw.p02 = c.p02;
  return validate_double(raw);
}

OppositionData opposition(const CatPtr& x, const std::vector<CatPtr>& probes, Budget& budget) {
  OppositionData out;
  out.nv = nerve(x);
  out.q = quotient(out.nv.dc, probes, budget);
  out.cop = swap_double(out.nv.dc);
  out.qop = quotient(out.cop, probes, budget);
  out.xop = build_opposite(x);

  Verdict checks = Verdict::ok();
  if (!find_isomorphism(out.q.x, x, budget))
    checks = Verdict::fail({{"reason", "quotient does not recover the subject"}});
  else if (!find_isomorphism(out.qop.x, out.xop, budget))
    checks = Verdict::fail({{"reason", "swapped quotient is not the opposite"}});
  else if (!out.q.universality || !out.qop.universality)
    checks = Verdict::fail({{"reason", "a quotient cocone is not universal"}});
  else {
    // The reflection of the swap inverts the reflection of the nerve.
    auto r = reflection(out.nv.dc);
    auto rop = reflection(out.cop);
    for (int v = 0; v < out.nv.dc.c0->n_mor(); ++v) {
      if (rop.r[v] != r.r[out.nv.dc.c0->inverse(v)]) {
        checks = Verdict::fail({{"reason", "swapped reflection differs from inverted reflection"},
                                {"vertical", out.nv.dc.c0->mors[v].name}});
        break;
      }
    }
  }
  out.checks = checks;
  return out;
}

std::vector<InternalFunctor> enumerate_internal_functors(const DoubleCat& c, const DoubleCat& d,
                                                         Budget& budget) {
  // e is injective (it splits p0), so f0 is determined by f1, and f2 is
  // determined through the pair lookups; only f1 is searched.
  std::vector<int> e_obj_back(d.c1->n_obj(), -1), e_mor_back(d.c1->n_mor(), -1);
  for (int a = 0; a < d.c0->n_obj(); ++a) e_obj_back[d.e.obj[a]] = a;
  for (int m = 0; m < d.c0->n_mor(); ++m) e_mor_back[d.e.mor[m]] = m;

  std::vector<InternalFunctor> out;
  for (const auto& f1 : enumerate_functors(c.c1, d.c1, budget)) {
    InternalFunctor g;
    g.f1 = f1;
    g.f0.src = c.c0;
    g.f0.dst = d.c0;
    g.f0.obj.resize(c.c0->n_obj());
    g.f0.mor.resize(c.c0->n_mor());
    bool ok = true;
    for (int a = 0; a < c.c0->n_obj() && ok; ++a) {
      int im = e_obj_back[f1.obj[c.e.obj[a]]];
      if (im < 0) ok = false;
      g.f0.obj[a] = im;
    }
    for (int m = 0; m < c.c0->n_mor() && ok; ++m) {
      int im = e_mor_back[f1.mor[c.e.mor[m]]];
      if (im < 0) ok = false;
      g.f0.mor[m] = im;
    }
    if (!ok) continue;
    if (!same_functor(compose_functors(f1, d.p0), compose_functors(c.p0, g.f0))) continue;
    if (!same_functor(compose_functors(f1, d.p1), compose_functors(c.p1, g.f0))) continue;

    g.f2.src = c.c2;
    g.f2.dst = d.c2;
    g.f2.obj.resize(c.c2->n_obj());
    g.f2.mor.resize(c.c2->n_mor());
    for (int w = 0; w < c.c2->n_obj(); ++w)
      g.f2.obj[w] = d.pair_obj(f1.obj[c.p01.obj[w]], f1.obj[c.p12.obj[w]]);
    for (int a = 0; a < c.c2->n_mor(); ++a)
      g.f2.mor[a] = d.pair_mor(f1.mor[c.p01.mor[a]], f1.mor[c.p12.mor[a]]);
    if (!same_functor(compose_functors(g.f2, d.p02), compose_functors(c.p02, f1))) continue;
    out.push_back(std::move(g));
  }
  return out;
}

Verdict nerve_hom_check(const CatPtr& x, const CatPtr& y, Budget& budget) {
  NerveData nx = nerve(x), ny = nerve(y);
  auto internal = enumerate_internal_functors(nx.dc, ny.dc, budget);
  auto funcs = enumerate_functors(x, y, budget);

  // Nv on functors: restrict the induced arrow-category functor to cores.
  auto apply_nerve = [&](const Functor& f) {
    InternalFunctor g;
    g.f0.src = nx.dc.c0;
    g.f0.dst = ny.dc.c0;
    g.f0.obj = f.obj;
    g.f0.mor.resize(nx.dc.c0->n_mor());
    for (int m = 0; m < nx.dc.c0->n_mor(); ++m)
      g.f0.mor[m] = ny.core0.core_of[f.mor[nx.core0.mor_of[m]]];
    g.f1.src = nx.dc.c1;
    g.f1.dst = ny.dc.c1;
    g.f1.obj.resize(nx.dc.c1->n_obj());
    g.f1.mor.resize(nx.dc.c1->n_mor());
    for (int h = 0; h < nx.dc.c1->n_obj(); ++h)
      g.f1.obj[h] = ny.arrow.obj_of[f.mor[nx.arrow.obj_mor[h]]];
    for (int m = 0; m < nx.dc.c1->n_mor(); ++m) {
      auto [u, v] = nx.arrow.mor_pair[nx.core1.mor_of[m]];
      int am = ny.arrow.mor_of(g.f1.obj[nx.dc.c1->mors[m].dom], g.f1.obj[nx.dc.c1->mors[m].cod],
                               f.mor[u], f.mor[v]);
      g.f1.mor[m] = ny.core1.core_of[am];
    }
    return g;
  };
  auto same_internal = [](const InternalFunctor& a, const InternalFunctor& b) {
    return same_functor(a.f1, b.f1);
  };

  std::vector<int> hit(internal.size(), 0);
  for (const auto& f : funcs) {
    InternalFunctor g = apply_nerve(f);
    bool found = false;
    for (std::size_t i = 0; i < internal.size(); ++i)
      if (same_internal(g, internal[i])) {
        hit[i]++;
        found = true;
        break;
      }
    if (!found)
      return Verdict::fail({{"reason", "nerve of a functor is not internal"}, {"functor", f.name}});
  }
  for (std::size_t i = 0; i < internal.size(); ++i)
    if (hit[i] != 1)
      return Verdict::fail({{"reason", "internal functors do not biject with functors"},
                            {"index", i},
                            {"preimages", hit[i]}});

  // 2-cells: internal transformations between Nv(f) and Nv(g) versus
  // transformations f => g, for every ordered pair.
  std::int64_t total_internal = 0, total_plain = 0;
  for (const auto& f : funcs) {
    InternalFunctor F = apply_nerve(f);
    for (const auto& g : funcs) {
      InternalFunctor G = apply_nerve(g);
      auto trs = enumerate_transformations(f, g, budget);
      total_plain += static_cast<std::int64_t>(trs.size());

      // Internal transformation: a functor c0 -> d1 with boundary (F0, G0)
      // satisfying the exchange law; its morphism part is forced by lifts.
      const FinCat& C0 = *nx.dc.c0;
      const FinCat& C1x = *nx.dc.c1;
      std::vector<int> theta(C0.n_obj(), -1);
      std::int64_t count = 0;
      std::vector<std::vector<int>> candidates(C0.n_obj());
      for (int a = 0; a < C0.n_obj(); ++a)
        for (int h = 0; h < ny.dc.c1->n_obj(); ++h)
          if (ny.dc.p0.obj[h] == F.f0.obj[a] && ny.dc.p1.obj[h] == G.f0.obj[a])
            candidates[a].push_back(h);
      std::function<void(int)> rec = [&](int a) {
        budget.spend(1, "internal transformations");
        if (a == C0.n_obj()) {
          // Exchange on horizontal arrows.
          for (int h = 0; h < C1x.n_obj(); ++h) {
            if (ny.dc.hcomp_obj(F.f1.obj[h], theta[nx.dc.p1.obj[h]]) !=
                ny.dc.hcomp_obj(theta[nx.dc.p0.obj[h]], G.f1.obj[h]))
              return;
          }
          // Morphism part: unique boundary lifts, checked for coherence.
          for (int v = 0; v < C0.n_mor(); ++v) {
            int lift = boundary_lift(ny.dc, theta[C0.mors[v].dom], F.f0.mor[v], G.f0.mor[v]);
            if (lift < 0 || ny.dc.c1->mors[lift].cod != theta[C0.mors[v].cod]) return;
          }
          for (int m = 0; m < C1x.n_mor(); ++m) {
            int lv0 = boundary_lift(ny.dc, theta[nx.dc.p0.obj[C1x.mors[m].dom]],
                                    F.f0.mor[nx.dc.p0.mor[m]], G.f0.mor[nx.dc.p0.mor[m]]);
            int lv1 = boundary_lift(ny.dc, theta[nx.dc.p1.obj[C1x.mors[m].dom]],
                                    F.f0.mor[nx.dc.p1.mor[m]], G.f0.mor[nx.dc.p1.mor[m]]);
            if (lv0 < 0 || lv1 < 0) return;
            if (ny.dc.hcomp_mor(F.f1.mor[m], lv1) != ny.dc.hcomp_mor(lv0, G.f1.mor[m])) return;
          }
          count++;
          return;
        }
        for (int h : candidates[a]) {
          theta[a] = h;
          rec(a + 1);
        }
        theta[a] = -1;
      };
      rec(0);
      total_internal += count;
      if (count != static_cast<std::int64_t>(trs.size()))
        return Verdict::fail({{"reason", "2-cell counts differ"},
                              {"from", f.name},
                              {"to", g.name},
                              {"internal", count},
                              {"plain", trs.size()}});
    }
  }
  return Verdict::ok({{"functors", funcs.size()},
                      {"internal_functors", internal.size()},
                      {"two_cells", total_plain},
                      {"internal_two_cells", total_internal}});
}

}  // namespace catv
