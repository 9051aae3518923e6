#include <algorithm>
#include <string>
#include <vector>

#include "catv/gpdsuite.hpp"

namespace catv {

namespace {

CatPtr walking_iso_pair() {
  CatBuilder b("wisopair");
  int x0 = b.add_object("x0"), y0 = b.add_object("y0");
  int x1 = b.add_object("x1"), y1 = b.add_object("y1");
  int f0 = b.add_mor("f0", x0, y0), g0 = b.add_mor("g0", y0, x0);
  int f1 = b.add_mor("f1", x1, y1), g1 = b.add_mor("g1", y1, x1);
  b.set_compose(f0, g0, b.id_of(x0));
  b.set_compose(g0, f0, b.id_of(y0));
  b.set_compose(f1, g1, b.id_of(x1));
  b.set_compose(g1, f1, b.id_of(y1));
  return b.validate();
}

Transformation post_whisker(const Transformation& t, const Functor& f) {
  return whisker(identity_functor(t.src.src), t, f);
}

json functor_tables(const Functor& f) {
  return json{{"obj", f.obj}, {"mor", f.mor}};
}

}  // namespace

std::vector<CatPtr> corpus_probes() {
  return {terminal_cat(), discrete_cat(2), walking_iso(), cyclic_group_cat(2),
          walking_iso_pair()};
}

ProbeFamily probes_for(const CatPtr& x) {
  ProbeFamily pf;
  pf.x = x;
  pf.corpus = corpus_probes();
  pf.nv = nerve(x);
  return pf;
}

std::vector<CatPtr> ProbeFamily::all() const {
  std::vector<CatPtr> out = corpus;
  out.push_back(nv.dc.c0);
  out.push_back(nv.dc.c1);
  out.push_back(nv.dc.c2);
  return out;
}

GroupoidNaturalData restrict_functor(const Functor& f) {
  GroupoidNaturalData d;
  d.x = f.src;
  d.y = f.dst;
  d.name = "post_" + f.name;
  d.on_obj = [f](const Functor& g) { return compose_functors(g, f); };
  d.on_mor = [f](const Transformation& t) { return post_whisker(t, f); };
  return d;
}

GroupoidCellData restrict_transformation(const Transformation& t) {
  GroupoidCellData d;
  d.src = restrict_functor(t.src);
  d.dst = restrict_functor(t.dst);
  d.name = "post_" + t.name;
  d.at = [t](const Functor& h) { return whisker(h, t, identity_functor(t.src.dst)); };
  return d;
}

Verdict separate(const Functor& f, const Functor& g, const ProbeFamily& pf, Budget& budget) {
  if (f.src != g.src || f.dst != g.dst)
    throw ValidationError("Internal", "separate: functors are not parallel");
  if (same_functor(f, g))
    return Verdict::fail({{"precondition", "inputs equal as tables"}});
  const CatPtr& x = f.src;
  // Canonical nerve-level witnesses: the core inclusion detects any object
  // difference, the tautological 2-cell detects any morphism difference.
  const Functor& gamma = pf.nv.taut.gamma;
  if (!same_functor(compose_functors(gamma, f), compose_functors(gamma, g))) {
    for (int o = 0; o < x->n_obj(); ++o)
      if (f.obj[o] != g.obj[o])
        return Verdict::ok({{"probe", pf.nv.dc.c0->name},
                            {"test", "core inclusion"},
                            {"at_object", x->objects[o]}});
  }
  Transformation tf = post_whisker(pf.nv.taut.gamma01, f);
  Transformation tg = post_whisker(pf.nv.taut.gamma01, g);
  for (std::size_t o = 0; o < tf.comp.size(); ++o)
    if (tf.comp[o] != tg.comp[o])
      return Verdict::ok({{"probe", pf.nv.dc.c1->name},
                          {"test", "tautological 2-cell"},
                          {"at", x->mors[pf.nv.arrow.obj_mor[o]].name}});
  for (const CatPtr& a : pf.corpus)
    for (const Functor& h : enumerate_functors(a, x, budget))
      if (!same_functor(compose_functors(h, f), compose_functors(h, g)))
        return Verdict::ok(
            {{"probe", a->name}, {"test", "enumerated functor"}, {"at", functor_tables(h)}});
  return Verdict::fail({{"error", "NoSeparatorFound"}});
}

Verdict separate(const Transformation& a, const Transformation& b, const ProbeFamily& pf,
                 Budget& budget) {
  (void)budget;
  if (!same_functor(a.src, b.src) || !same_functor(a.dst, b.dst))
    throw ValidationError("Internal", "separate: transformations are not parallel");
  if (a.comp == b.comp)
    return Verdict::fail({{"precondition", "inputs equal as tables"}});
  const CatPtr& x = a.src.src;
  // Evaluating at the core inclusion reproduces the component table, so it
  // always separates distinct parallel 2-cells.
  Transformation ag = whisker(pf.nv.taut.gamma, a, identity_functor(a.src.dst));
  Transformation bg = whisker(pf.nv.taut.gamma, b, identity_functor(a.src.dst));
  for (std::size_t o = 0; o < ag.comp.size(); ++o)
    if (ag.comp[o] != bg.comp[o])
      return Verdict::ok({{"probe", pf.nv.dc.c0->name},
                          {"test", "evaluation at core inclusion"},
                          {"at_object", x->objects[o]}});
  return Verdict::fail({{"error", "NoSeparatorFound"}});
}

ReconstructResult reconstruct(const GroupoidNaturalData& d, const ProbeFamily& pf,
                              Budget& budget) {
  const CatPtr& x = d.x;
  const DoubleCat& dc = pf.nv.dc;
  const Functor& gamma = pf.nv.taut.gamma;
  const Transformation& gamma01 = pf.nv.taut.gamma01;
  Functor g0 = d.on_obj(gamma);
  if (!check_functor(g0))
    throw ValidationError("NaturalityViolation", "value at the core inclusion is not a functor");

  // Structure-functor naturality squares on the nerve levels.
  auto nat1 = [&](const Functor& u, const Functor& h, const char* label) {
    if (!same_functor(d.on_obj(compose_functors(u, h)), compose_functors(u, d.on_obj(h))))
      throw ValidationError("NaturalityViolation",
                            std::string("1-cell square at ") + label);
  };
  nat1(dc.p0, gamma, "p0");
  nat1(dc.p1, gamma, "p1");
  nat1(dc.e, compose_functors(dc.p0, gamma), "e (source leg)");
  nat1(dc.e, compose_functors(dc.p1, gamma), "e (target leg)");
  Transformation g01 = d.on_mor(gamma01);
  auto nat2 = [&](const Functor& u, const char* label) {
    Transformation lhs = d.on_mor(whisker(u, gamma01, identity_functor(x)));
    Transformation rhs = whisker(u, g01, identity_functor(d.y));
    if (lhs.comp != rhs.comp)
      throw ValidationError("NaturalityViolation",
                            std::string("2-cell square at ") + label);
  };
  nat2(dc.e, "e");
  nat2(dc.p01, "p01");
  nat2(dc.p12, "p12");
  nat2(dc.p02, "p02");

  if (!same_functor(g01.src, compose_functors(dc.p0, g0)) ||
      !same_functor(g01.dst, compose_functors(dc.p1, g0)))
    throw ValidationError("NaturalityViolation", "tautological 2-cell has wrong boundary");
  g01.src = compose_functors(dc.p0, g0);
  g01.dst = compose_functors(dc.p1, g0);
  Verdict cocone = check_cocone(dc, DoubleCocone{g0, g01});
  if (!cocone)
    throw ValidationError("CoconeEquationViolation", cocone.counterexample.dump());

  Functor f;
  f.src = x;
  f.dst = d.y;
  f.name = "reconstructed(" + d.name + ")";
  f.obj = g0.obj;
  f.mor.resize(x->n_mor());
  for (int m = 0; m < x->n_mor(); ++m) f.mor[m] = g01.comp[pf.nv.arrow.obj_of[m]];
  Verdict fv = check_functor(f);
  if (!fv) return {f, Verdict::fail({{"reconstruction", fv.counterexample}})};

  // Round trip against postcomposition: nerve levels, then the corpus.
  json trips = json::array();
  if (!same_functor(g0, compose_functors(gamma, f)))
    return {f, Verdict::fail({{"round_trip", "core inclusion"}})};
  if (post_whisker(gamma01, f).comp != g01.comp)
    return {f, Verdict::fail({{"round_trip", "tautological 2-cell"}})};
  for (const CatPtr& a : pf.corpus) {
    std::vector<Functor> hs = enumerate_functors(a, x, budget);
    int cells = 0;
    for (const Functor& h : hs)
      if (!same_functor(d.on_obj(h), compose_functors(h, f)))
        return {f, Verdict::fail({{"round_trip", a->name}, {"at", functor_tables(h)}})};
    for (const Functor& h1 : hs)
      for (const Functor& h2 : hs)
        for (const Transformation& t : enumerate_transformations(h1, h2, budget)) {
          ++cells;
          if (d.on_mor(t).comp != post_whisker(t, f).comp)
            return {f, Verdict::fail({{"round_trip_cell", a->name}})};
        }
    trips.push_back({{"probe", a->name}, {"functors", hs.size()}, {"cells", cells}});
  }
  return {f, Verdict::ok({{"round_trips", trips}})};
}

ReconstructCellResult reconstruct_cell(const GroupoidCellData& d, const ProbeFamily& pf,
                                       Budget& budget) {
  ReconstructResult rs = reconstruct(d.src, pf, budget);
  ReconstructResult rd = reconstruct(d.dst, pf, budget);
  if (!rs.verdict || !rd.verdict)
    return {Transformation{}, Verdict::fail({{"boundary", "reconstruction failed"}})};
  const CatPtr& x = d.src.x;
  Transformation at_gamma = d.at(pf.nv.taut.gamma);
  Transformation t;
  t.src = rs.f;
  t.dst = rd.f;
  t.name = "reconstructed(" + d.name + ")";
  t.comp = at_gamma.comp;
  Verdict tv = check_transformation(t);
  if (!tv) return {t, Verdict::fail({{"reconstruction", tv.counterexample}})};

  json trips = json::array();
  bool clause = true;
  for (const CatPtr& a : pf.corpus) {
    std::vector<Functor> hs = enumerate_functors(a, x, budget);
    int cells = 0;
    for (const Functor& h : hs)
      if (d.at(h).comp != whisker(h, t, identity_functor(t.src.dst)).comp)
        return {t, Verdict::fail({{"round_trip", a->name}, {"at", functor_tables(h)}})};
    // Modification compatibility, recorded as a derived observation.
    for (const Functor& h1 : hs)
      for (const Functor& h2 : hs)
        for (const Transformation& b : enumerate_transformations(h1, h2, budget)) {
          ++cells;
          Transformation lhs = vcompose(d.src.on_mor(b), d.at(h2));
          Transformation rhs = vcompose(d.at(h1), d.dst.on_mor(b));
          if (lhs.comp != rhs.comp) clause = false;
        }
    trips.push_back({{"probe", a->name}, {"functors", hs.size()}, {"cells", cells}});
  }
  return {t, Verdict::ok({{"round_trips", trips}, {"two_cell_clause_automatic", clause}})};
}

namespace {

Functor precompose(const Functor& i, const FunCatData& from, const FunCatData& to,
                   const CatPtr& x, const std::string& name) {
  Functor r;
  r.src = from.cat;
  r.dst = to.cat;
  r.name = name;
  for (const Functor& h : from.obj_fun) {
    int o = to.find_obj(compose_functors(i, h));
    if (o < 0) throw ValidationError("Internal", "precompose: missing object");
    r.obj.push_back(o);
  }
  for (const Transformation& t : from.mor_nat) {
    int m = to.find_mor(whisker(i, t, identity_functor(x)));
    if (m < 0) throw ValidationError("Internal", "precompose: missing morphism");
    r.mor.push_back(m);
  }
  return r;
}

bool is_cat_iso(const Functor& f) {
  if (!check_functor(f)) return false;
  if (f.src->n_obj() != f.dst->n_obj() || f.src->n_mor() != f.dst->n_mor()) return false;
  std::vector<bool> ho(f.dst->n_obj(), false), hm(f.dst->n_mor(), false);
  for (int o : f.obj) {
    if (ho[o]) return false;
    ho[o] = true;
  }
  for (int m : f.mor) {
    if (hm[m]) return false;
    hm[m] = true;
  }
  return true;
}

// The fresh [1]-vertex k picks out one of the two embeddings [0]*J -> [1]*J.
Functor vertex_embedding(const JoinData& jh, const JoinData& jhh, const CatPtr& one,
                         const CatPtr& two, const CatPtr& j, int k) {
  Functor i;
  i.src = jh.cat;
  i.dst = jhh.cat;
  i.name = "i" + std::to_string(k);
  i.obj.assign(jh.cat->n_obj(), -1);
  i.mor.assign(jh.cat->n_mor(), -1);
  i.obj[jh.inl.obj[0]] = jhh.inl.obj[k];
  i.mor[jh.inl.mor[one->id_of[0]]] = jhh.inl.mor[two->id_of[k]];
  for (int o = 0; o < j->n_obj(); ++o) {
    i.obj[jh.inr.obj[o]] = jhh.inr.obj[o];
    i.mor[jh.join_arrow[0][o]] = jhh.join_arrow[k][o];
  }
  for (int m = 0; m < j->n_mor(); ++m) i.mor[jh.inr.mor[m]] = jhh.inr.mor[m];
  for (int m = 0; m < jh.cat->n_mor(); ++m)
    if (i.mor[m] < 0) throw ValidationError("Internal", "vertex_embedding: uncovered morphism");
  Verdict v = check_functor(i);
  if (!v) throw ValidationError("Internal", "vertex_embedding: not a functor");
  return i;
}

}  // namespace

LimitOperatorData limit_operator(const CatPtr& x, const CatPtr& j, Budget& budget) {
  LimitOperatorData out;
  CatPtr one = terminal_cat();
  CatPtr two = walking_arrow();
  JoinData jh = build_join(one, j);
  JoinData jhh = build_join(two, j);
  out.jhat = jh.cat;
  out.jhathat = jhh.cat;
  out.fj = build_functor_category(j, x, budget);
  out.fjh = build_functor_category(jh.cat, x, budget);
  out.fjhh = build_functor_category(jhh.cat, x, budget);
  out.restr = precompose(jh.inr, out.fjh, out.fj, x, "restr");
  Functor i0 = vertex_embedding(jh, jhh, one, two, j, 0);
  Functor i1 = vertex_embedding(jh, jhh, one, two, j, 1);
  Functor i0s = precompose(i0, out.fjhh, out.fjh, x, "i0*");
  Functor i1s = precompose(i1, out.fjhh, out.fjh, x, "i1*");

  // A cone is limiting when every cone over the same diagram admits exactly
  // one vertical morphism into it.
  const FinCat& fh = *out.fjh.cat;
  auto vertical_count = [&](int from, int to, int over_mor) {
    int count = 0;
    for (int m = 0; m < fh.n_mor(); ++m)
      if (fh.mors[m].dom == from && fh.mors[m].cod == to && out.restr.mor[m] == over_mor)
        ++count;
    return count;
  };
  int n_diag = out.fj.cat->n_obj();
  std::vector<int> chosen(n_diag, -1);
  for (int F = 0; F < n_diag; ++F) {
    std::vector<int> cones;
    for (int c = 0; c < fh.n_obj(); ++c)
      if (out.restr.obj[c] == F) cones.push_back(c);
    int idF = out.fj.cat->id_of[F];
    for (int c : cones) {
      bool limiting = true;
      for (int c2 : cones)
        if (vertical_count(c2, c, idF) != 1) {
          limiting = false;
          break;
        }
      if (limiting) {
        chosen[F] = c;
        break;
      }
    }
    if (chosen[F] < 0) {
      out.exists = false;
      out.checks = Verdict::fail({{"diagram", out.fj.obj_fun[F].name.empty()
                                                  ? json(F)
                                                  : json(out.fj.obj_fun[F].name)},
                                  {"diagram_index", F},
                                  {"cones_tested", cones.size()},
                                  {"reason", "no limiting cone; every section value fails"}});
      return out;
    }
  }

  out.ell.src = out.fj.cat;
  out.ell.dst = out.fjh.cat;
  out.ell.name = "ell";
  out.ell.obj = chosen;
  out.ell.mor.resize(out.fj.cat->n_mor());
  for (int t = 0; t < out.fj.cat->n_mor(); ++t) {
    int F = out.fj.cat->mors[t].dom, G = out.fj.cat->mors[t].cod;
    int found = -1, count = 0;
    for (int m = 0; m < fh.n_mor(); ++m)
      if (fh.mors[m].dom == chosen[F] && fh.mors[m].cod == chosen[G] &&
          out.restr.mor[m] == t) {
        found = m;
        ++count;
      }
    if (count != 1) {
      out.checks = Verdict::fail({{"mediator_not_unique", t}, {"candidates", count}});
      return out;
    }
    out.ell.mor[t] = found;
  }
  out.exists = true;
  if (!check_functor(out.ell)) {
    out.checks = Verdict::fail({{"reason", "section is not a functor"}});
    return out;
  }

  bool section_law =
      same_functor(compose_functors(out.ell, out.restr), identity_functor(out.fj.cat));
  PullbackData pd = build_pullback(i1s, out.ell);
  bool fact_iso = is_cat_iso(compose_functors(pd.pr1, i0s));

  CoreData cj = build_core(out.fj.cat);
  CoreData ch = build_core(out.fjh.cat);
  CoreData chh = build_core(out.fjhh.cat);
  Functor ell_iso = core_of_functor(out.ell, cj, ch);
  Functor restr_iso = core_of_functor(out.restr, ch, cj);
  bool core_section =
      same_functor(compose_functors(ell_iso, restr_iso), identity_functor(cj.cat));
  Functor i0s_iso = core_of_functor(i0s, chh, ch);
  Functor i1s_iso = core_of_functor(i1s, chh, ch);
  PullbackData pdi = build_pullback(i1s_iso, ell_iso);
  bool core_fact_iso = is_cat_iso(compose_functors(pdi.pr1, i0s_iso));

  json witness{{"diagrams", n_diag},
               {"cone_category_objects", fh.n_obj()},
               {"section_law", section_law},
               {"factorization_iso", fact_iso},
               {"core_section_law", core_section},
               {"core_factorization_iso", core_fact_iso},
               {"budget_used", budget.used}};
  if (section_law && fact_iso && core_section && core_fact_iso)
    out.checks = Verdict::ok(witness);
  else
    out.checks = Verdict::fail(witness);
  return out;
}

}  // namespace catv
