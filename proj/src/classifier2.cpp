#include <algorithm>

#include "catv/classifier.hpp"

namespace catv {

namespace {

struct DofTable {
  std::vector<std::vector<int>> lift;
  explicit DofTable(const Functor& f) {
    lift.assign(f.src->n_obj(), std::vector<int>(f.dst->n_mor(), -1));
    for (int m = 0; m < f.src->n_mor(); ++m) lift[f.src->mors[m].dom][f.mor[m]] = m;
  }
  int operator()(int e, int v) const { return lift[e][v]; }
};

std::vector<int> fibre_sizes(const Functor& f) {
  std::vector<int> s(f.dst->n_obj(), 0);
  for (int e = 0; e < f.src->n_obj(); ++e) s[f.obj[e]]++;
  return s;
}

// Faithful and full on isomorphisms.
bool pseudo_monic(const Functor& f) {
  if (!check_property(MapProperty::kFaithful, f)) return false;
  const FinCat& E = *f.src;
  const FinCat& B = *f.dst;
  for (int e = 0; e < E.n_obj(); ++e)
    for (int e2 = 0; e2 < E.n_obj(); ++e2)
      for (int m = 0; m < B.n_mor(); ++m) {
        if (!B.is_iso(m) || B.mors[m].dom != f.obj[e] || B.mors[m].cod != f.obj[e2]) continue;
        bool found = false;
        for (int l = 0; l < E.n_mor(); ++l)
          if (E.is_iso(l) && E.mors[l].dom == e && E.mors[l].cod == e2 && f.mor[l] == m) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

int popcount(unsigned x) {
  int c = 0;
  while (x) {
    c += x & 1u;
    x >>= 1;
  }
  return c;
}

// Elements of the mask in ascending order.
std::vector<int> mask_elems(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; (1u << i) <= mask; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

Verdict smallness_suite(const ClassifierConfig& cfg) {
  json cases = json::array();
  auto t1 = corpus_lookup("terminal");
  auto a1 = corpus_lookup("walking_arrow");
  auto d2 = corpus_lookup("discrete_two");

  // Monic DOF: target endpoint of the walking arrow.
  Functor end1;
  end1.src = t1;
  end1.dst = a1;
  end1.name = "end1";
  end1.obj = {1};
  end1.mor = {a1->id_of[1]};
  {
    bool dof = check_property(MapProperty::kDiscreteOpfibration, end1).holds;
    bool mono = check_property(MapProperty::kMono, end1).holds;
    auto fs = fibre_sizes(end1);
    int maxf = *std::max_element(fs.begin(), fs.end());
    if (!(dof && mono && maxf <= 1))
      return Verdict::fail({{"reason", "monic DOF does not have singleton fibres"}});
    cases.push_back({{"case", "monic"}, {"max_fibre", maxf}, {"small_at_1", true}});
  }

  // Pseudo-monic equivalence on sample DOFs: mono iff faithful + full on isos.
  {
    Functor collapse;
    collapse.src = d2;
    collapse.dst = t1;
    collapse.name = "collapse";
    collapse.obj = {0, 0};
    collapse.mor = {0, 0};
    for (const Functor* f : {&end1, &collapse}) {
      bool mono = check_property(MapProperty::kMono, *f).holds;
      if (mono != pseudo_monic(*f))
        return Verdict::fail(
            {{"reason", "pseudo-monic equivalence fails"}, {"functor", f->name}});
    }
    cases.push_back({{"case", "pseudo_monic_equivalence"}, {"samples", 2}});
  }

  // Composite of two fibre-2 DOFs over the terminal: total fibre 4.
  Functor step1, step2;
  {
    auto d4 = discrete_cat(4);
    step1.src = d4;
    step1.dst = d2;
    step1.name = "step1";
    step1.obj = {0, 0, 1, 1};
    step1.mor = {d2->id_of[0], d2->id_of[0], d2->id_of[1], d2->id_of[1]};
    step2.src = d2;
    step2.dst = t1;
    step2.name = "step2";
    step2.obj = {0, 0};
    step2.mor = {0, 0};
    Functor comp = compose_functors(step1, step2);
    auto fs = fibre_sizes(comp);
    if (fs[0] != 4) return Verdict::fail({{"reason", "composite fibre is not the sum"}});
    cases.push_back({{"case", "composite"},
                     {"fibre", 4},
                     {"small_at_bound", 4 <= cfg.n},
                     {"note", 4 <= cfg.n ? "small" : "NotSmallAtThisBound"}});
  }

  // Pullback stability: fibres are reindexed along the base change.
  {
    auto s = build_set_skeleton(std::max(cfg.n, 2));
    Functor g;
    g.src = a1;
    g.dst = s.cat;
    g.name = "g";
    g.obj = {2, 1};
    g.mor = {s.cat->id_of[2], s.cat->id_of[1], s.mor_of_fn(2, 1, {0, 0})};
    auto el = gr(g, s);
    Functor end0;
    end0.src = t1;
    end0.dst = a1;
    end0.name = "end0";
    end0.obj = {0};
    end0.mor = {a1->id_of[0]};
    auto pb = build_pullback(el.proj, end0);
    Functor pulled = pb.pr2;  // apex -> terminal
    if (!check_property(MapProperty::kDiscreteOpfibration, pulled))
      return Verdict::fail({{"reason", "pullback of a DOF is not a DOF"}});
    auto fs = fibre_sizes(pulled);
    if (fs[0] != g.obj[0])
      return Verdict::fail({{"reason", "pullback fibre size not preserved"}});
    cases.push_back({{"case", "pullback_stability"}, {"fibre", fs[0]}});
  }

  // 2-of-3: when the second leg and the composite are small, so is the first.
  {
    Functor comp = compose_functors(step1, step2);
    auto f_fib = fibre_sizes(step1);
    auto c_fib = fibre_sizes(comp);
    for (int d = 0; d < step1.dst->n_obj(); ++d)
      if (f_fib[d] > c_fib[step2.obj[d]])
        return Verdict::fail({{"reason", "2-of-3 fibre inequality fails"}});
    cases.push_back({{"case", "two_of_three"}, {"first_leg_max", 2}});
  }

  return Verdict::ok({{"cases", cases}});
}

int SubsetFibration::wobj_of(int m, unsigned mask) const { return widx_[m][mask]; }

SubsetFibration subset_fibration(const SetSkeleton& s, const ClassifierConfig& cfg) {
  SubsetFibration out;
  out.s_iso = build_core(s.cat);
  const FinCat& C = *out.s_iso.cat;  // objects = sizes, morphisms = bijections

  auto direct_image = [&](int sigma_core, unsigned mask) {
    const std::vector<int>& t = s.fn[out.s_iso.mor_of[sigma_core]];
    unsigned r = 0;
    for (int i = 0; (1u << i) <= mask; ++i)
      if (mask & (1u << i)) r |= 1u << t[i];
    return r;
  };

  CatBuilder b("wpow" + std::to_string(s.bound));
  out.widx_.assign(s.bound + 1, {});
  for (int m = 0; m <= s.bound; ++m)
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      out.widx_[m].push_back(
          b.add_object(std::to_string(m) + "#" + std::to_string(mask)));
      out.wobj.push_back({m, mask});
    }
  // (wpow object, core morphism out of its size) -> builder morphism
  std::map<std::pair<int, int>, int> mor_at;
  for (int w = 0; w < static_cast<int>(out.wobj.size()); ++w) {
    auto [m, mask] = out.wobj[w];
    for (int sm = 0; sm < C.n_mor(); ++sm) {
      if (C.mors[sm].dom != m) continue;
      if (C.is_identity(sm)) {
        mor_at[{w, sm}] = b.id_of(out.widx_[m][mask]);
      } else {
        mor_at[{w, sm}] = b.add_mor(C.mors[sm].name + "#" + std::to_string(mask),
                                    out.widx_[m][mask], out.widx_[m][direct_image(sm, mask)]);
      }
    }
  }
  for (int w = 0; w < static_cast<int>(out.wobj.size()); ++w) {
    auto [m, mask] = out.wobj[w];
    for (int sm = 0; sm < C.n_mor(); ++sm) {
      if (C.mors[sm].dom != m) continue;
      int w2 = out.widx_[m][direct_image(sm, mask)];
      for (int sm2 = 0; sm2 < C.n_mor(); ++sm2) {
        if (C.mors[sm2].dom != m) continue;
        b.set_compose(mor_at[{w, sm}], mor_at[{w2, sm2}], mor_at[{w, C.compose(sm, sm2)}]);
      }
    }
  }
  out.wpow = b.validate();

  out.dot_pow.src = out.wpow;
  out.dot_pow.dst = out.s_iso.cat;
  out.dot_pow.name = "dot_pow";
  out.dot_pow.obj.resize(out.wpow->n_obj());
  out.dot_pow.mor.resize(out.wpow->n_mor());
  out.tilde_d0.src = out.wpow;
  out.tilde_d0.dst = s.cat;
  out.tilde_d0.name = "tilde_d0";
  out.tilde_d0.obj.resize(out.wpow->n_obj());
  out.tilde_d0.mor.resize(out.wpow->n_mor());
  for (int w = 0; w < out.wpow->n_obj(); ++w) {
    out.dot_pow.obj[w] = out.wobj[w].first;
    out.tilde_d0.obj[w] = popcount(out.wobj[w].second);
  }
  for (auto [key, bm] : mor_at) {
    auto [w, sm] = key;
    out.dot_pow.mor[bm] = sm;
    auto [m, mask] = out.wobj[w];
    auto elems = mask_elems(mask);
    unsigned mask2 = direct_image(sm, mask);
    auto elems2 = mask_elems(mask2);
    const std::vector<int>& t = s.fn[out.s_iso.mor_of[sm]];
    std::vector<int> table(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      table[i] = static_cast<int>(
          std::find(elems2.begin(), elems2.end(), t[elems[i]]) - elems2.begin());
    out.tilde_d0.mor[bm] = s.mor_of_fn(static_cast<int>(elems.size()),
                                       static_cast<int>(elems2.size()), table);
  }

  out.tilde_d.src = out.tilde_d0;
  out.tilde_d.dst = compose_functors(out.dot_pow, out.s_iso.incl);
  out.tilde_d.name = "tilde_d";
  out.tilde_d.comp.resize(out.wpow->n_obj());
  for (int w = 0; w < out.wpow->n_obj(); ++w) {
    auto [m, mask] = out.wobj[w];
    out.tilde_d.comp[w] = s.mor_of_fn(popcount(mask), m, mask_elems(mask));
  }

  std::vector<int> adm;
  for (int m = 0; m <= s.bound; ++m)
    if (cfg.power_admissible(m)) adm.push_back(m);
  out.admissible = full_subcat(out.s_iso.cat, adm, "s_iso_adm");
  out.pow.src = out.admissible.cat;
  out.pow.dst = s.cat;
  out.pow.name = "pow";
  out.pow.obj.resize(out.admissible.cat->n_obj());
  out.pow.mor.resize(out.admissible.cat->n_mor());
  for (int o = 0; o < out.admissible.cat->n_obj(); ++o)
    out.pow.obj[o] = 1 << out.admissible.obj_of[o];
  for (int m = 0; m < out.admissible.cat->n_mor(); ++m) {
    int sm = out.admissible.mor_of[m];
    int sz = C.mors[sm].dom;
    std::vector<int> table(1u << sz);
    for (unsigned mask = 0; mask < (1u << sz); ++mask)
      table[mask] = static_cast<int>(direct_image(sm, mask));
    out.pow.mor[m] = s.mor_of_fn(1 << sz, 1 << sz, table);
  }

  // The DOF-collapse of the mono fibration restricted to isos matches
  // dot_pow. Squares over isos determine their fourth side, so the category
  // is built directly from (mono, iso pair) triples; codomain sizes are
  // capped at 3 to keep the square count materializable.
  int mc = std::min(s.bound, 3);
  std::vector<int> monos;
  std::vector<int> mono_pos(s.cat->n_mor(), -1);
  for (int f = 0; f < s.cat->n_mor(); ++f) {
    if (s.cat->mors[f].cod > mc) continue;
    std::vector<char> seen(s.cat->mors[f].cod, 0);
    bool inj = true;
    for (int x : s.fn[f]) {
      if (seen[x]) {
        inj = false;
        break;
      }
      seen[x] = 1;
    }
    if (!inj) continue;
    mono_pos[f] = static_cast<int>(monos.size());
    monos.push_back(f);
  }
  CatBuilder bm("mon_iso" + std::to_string(mc));
  for (int f : monos) bm.add_object(s.cat->mors[f].name);
  std::map<std::array<int, 3>, int> smor;  // (mono position, core u, core v)
  for (int o = 0; o < static_cast<int>(monos.size()); ++o) {
    int f = monos[o];
    for (int u = 0; u < C.n_mor(); ++u) {
      if (C.mors[u].dom != s.cat->mors[f].dom) continue;
      for (int v = 0; v < C.n_mor(); ++v) {
        if (C.mors[v].dom != s.cat->mors[f].cod) continue;
        if (C.is_identity(u) && C.is_identity(v)) {
          smor[{o, u, v}] = bm.id_of(o);
          continue;
        }
        int f2 = s.cat->compose(s.cat->inverse(out.s_iso.mor_of[u]),
                                s.cat->compose(f, out.s_iso.mor_of[v]));
        smor[{o, u, v}] = bm.add_mor(s.cat->mors[f].name + "|" + C.mors[u].name + "," +
                                         C.mors[v].name,
                                     o, mono_pos[f2]);
      }
    }
  }
  for (auto [key, m1] : smor) {
    auto [o, u, v] = key;
    int o2 = bm.cod(m1);
    for (int u2 = 0; u2 < C.n_mor(); ++u2) {
      if (C.mors[u2].dom != s.cat->mors[monos[o2]].dom) continue;
      for (int v2 = 0; v2 < C.n_mor(); ++v2) {
        if (C.mors[v2].dom != s.cat->mors[monos[o2]].cod) continue;
        bm.set_compose(m1, smor.at({o2, u2, v2}),
                       smor.at({o, C.compose(u, u2), C.compose(v, v2)}));
      }
    }
  }
  CatPtr mcat = bm.validate();
  Functor d1_iso;
  d1_iso.src = mcat;
  d1_iso.dst = out.s_iso.cat;
  d1_iso.name = "d1_iso";
  d1_iso.obj.resize(mcat->n_obj());
  d1_iso.mor.resize(mcat->n_mor());
  for (int o = 0; o < static_cast<int>(monos.size()); ++o)
    d1_iso.obj[o] = s.cat->mors[monos[o]].cod;
  for (auto [key, m1] : smor) d1_iso.mor[m1] = key[2];
  auto collapse = dof_collapse(d1_iso);

  Functor target = out.dot_pow;
  if (mc < s.bound) {
    std::vector<int> keep;
    for (int w = 0; w < static_cast<int>(out.wobj.size()); ++w)
      if (out.wobj[w].first <= mc) keep.push_back(w);
    auto sub = full_subcat(out.wpow, keep, "wpow_restr");
    target = compose_functors(sub.incl, out.dot_pow);
  }
  Budget budget{50'000'000, 0};
  auto iso = find_isomorphism_over(collapse.p, target, budget);
  json w_note = {{"collapsed_objects", collapse.total->n_obj()}, {"checked_bound", mc}};
  out.collapse_check =
      iso ? Verdict::ok(w_note)
          : Verdict::fail({{"reason", "collapse of the iso-mono fibration differs from dot_pow"}});
  return out;
}

int pow_value(const ClassifierConfig& cfg, int m) {
  if (!cfg.power_admissible(m))
    throw ValidationError("PowerNotAdmissible",
                          "2^" + std::to_string(m) + " exceeds bound " + std::to_string(cfg.n));
  return 1 << m;
}

Verdict verify_pow_universal(const CatPtr& a, const Transformation& alpha,
                             const SetSkeleton& s, const SubsetFibration& w,
                             const ClassifierConfig& cfg, Budget& budget) {
  if (!a->is_groupoid()) throw ValidationError("NotGroupoid", "probe must be a groupoid");
  const Functor& f = alpha.src;
  const Functor& g = alpha.dst;
  for (int x = 0; x < a->n_obj(); ++x)
    if (!cfg.power_admissible(g.obj[x]))
      throw ValidationError("PowerNotAdmissible",
                            "target size " + std::to_string(g.obj[x]) + " at " + a->objects[x]);
  if (!check_property(MapProperty::kPointwiseMono, alpha))
    return Verdict::fail({{"reason", "alpha is not pointwise mono"}});

  // g corestricted to the core (a is a groupoid, so all values are isos).
  Functor core_g;
  core_g.src = a;
  core_g.dst = w.s_iso.cat;
  core_g.obj = g.obj;
  core_g.mor.resize(a->n_mor());
  for (int v = 0; v < a->n_mor(); ++v) core_g.mor[v] = w.s_iso.core_of[g.mor[v]];

  // The candidate u' must lift core_g through dot_pow and admit an iso
  // correction making the subset triangle equal alpha.
  auto xi_for = [&](const Functor& u, int x) -> int {
    auto elems = mask_elems(w.wobj[u.obj[x]].second);
    const std::vector<int>& af = s.fn[alpha.comp[x]];
    if (static_cast<int>(elems.size()) != f.obj[x]) return -1;
    std::vector<int> table(af.size());
    std::vector<int> used(elems.size(), 0);
    for (std::size_t i = 0; i < af.size(); ++i) {
      auto it = std::find(elems.begin(), elems.end(), af[i]);
      if (it == elems.end()) return -1;
      table[i] = static_cast<int>(it - elems.begin());
      used[table[i]]++;
    }
    for (int u2 : used)
      if (u2 != 1) return -1;
    return s.mor_of_fn(f.obj[x], static_cast<int>(elems.size()), table);
  };

  std::vector<Functor> accepted;
  for (const auto& u : enumerate_lifts(core_g, w.dot_pow, budget)) {
    Transformation xi;
    xi.src = f;
    xi.dst = compose_functors(u, w.tilde_d0);
    xi.comp.resize(a->n_obj());
    bool ok = true;
    for (int x = 0; x < a->n_obj() && ok; ++x) {
      xi.comp[x] = xi_for(u, x);
      if (xi.comp[x] < 0) ok = false;
    }
    if (!ok || !check_transformation(xi)) continue;
    accepted.push_back(u);
  }
  if (accepted.size() != 1)
    return Verdict::fail(
        {{"reason", "classifying lift not unique"}, {"candidates", accepted.size()}});

  // The accepted lift is the canonical image formula.
  const Functor& u = accepted.front();
  for (int x = 0; x < a->n_obj(); ++x) {
    unsigned mask = 0;
    for (int i = 0; i < f.obj[x]; ++i) mask |= 1u << s.fn[alpha.comp[x]][i];
    if (u.obj[x] != w.wobj_of(g.obj[x], mask))
      return Verdict::fail({{"reason", "lift differs from the image formula"}});
  }
  return Verdict::ok({{"candidates", 1}});
}

int PowerObject::p_obj_of(int u, unsigned mask) const { return pidx_[u][mask]; }
int PowerObject::eps_obj_of(int u, unsigned mask, int t) const {
  return eps_idx_.at({u, static_cast<int>(mask), t});
}

PowerObject power_object_in_dof(const Functor& a_dof, const ClassifierConfig& cfg) {
  const FinCat& U = *a_dof.dst;
  if (!U.is_groupoid()) throw ValidationError("NotGroupoid", "base must be a groupoid");
  PowerObject out;
  out.fib.assign(U.n_obj(), {});
  std::vector<int> pos(a_dof.src->n_obj(), -1);
  for (int e = 0; e < a_dof.src->n_obj(); ++e) {
    pos[e] = static_cast<int>(out.fib[a_dof.obj[e]].size());
    out.fib[a_dof.obj[e]].push_back(e);
  }
  for (int u = 0; u < U.n_obj(); ++u)
    if (!cfg.power_admissible(static_cast<int>(out.fib[u].size())))
      throw ValidationError("PowerNotAdmissible", "fibre over " + U.objects[u]);

  DofTable lifts(a_dof);
  auto transport = [&](int v, unsigned mask) {
    unsigned r = 0;
    int u = U.mors[v].dom;
    for (std::size_t t = 0; t < out.fib[u].size(); ++t)
      if (mask & (1u << t)) r |= 1u << pos[a_dof.src->mors[lifts(out.fib[u][t], v)].cod];
    return r;
  };

  // P: one object per (base object, subset of the fibre).
  CatBuilder bp("pow(" + a_dof.name + ")");
  out.pidx_.assign(U.n_obj(), {});
  for (int u = 0; u < U.n_obj(); ++u)
    for (unsigned mask = 0; mask < (1u << out.fib[u].size()); ++mask) {
      out.pidx_[u].push_back(bp.add_object(U.objects[u] + "#" + std::to_string(mask)));
      out.p_obj.push_back({u, mask});
    }
  std::map<std::pair<int, int>, int> pmor;  // (P object, base morphism)
  for (int o = 0; o < static_cast<int>(out.p_obj.size()); ++o) {
    auto [u, mask] = out.p_obj[o];
    for (int v = 0; v < U.n_mor(); ++v) {
      if (U.mors[v].dom != u) continue;
      if (U.is_identity(v))
        pmor[{o, v}] = bp.id_of(o);
      else
        pmor[{o, v}] = bp.add_mor(U.mors[v].name + "#" + std::to_string(mask), o,
                                  out.pidx_[U.mors[v].cod][transport(v, mask)]);
    }
  }
  for (int o = 0; o < static_cast<int>(out.p_obj.size()); ++o) {
    auto [u, mask] = out.p_obj[o];
    for (int v = 0; v < U.n_mor(); ++v) {
      if (U.mors[v].dom != u) continue;
      int o2 = out.pidx_[U.mors[v].cod][transport(v, mask)];
      for (int v2 = 0; v2 < U.n_mor(); ++v2) {
        if (U.mors[v2].dom != U.mors[v].cod) continue;
        bp.set_compose(pmor[{o, v}], pmor[{o2, v2}], pmor[{o, U.compose(v, v2)}]);
      }
    }
  }
  out.p_total = bp.validate();
  out.p_dof.src = out.p_total;
  out.p_dof.dst = a_dof.dst;
  out.p_dof.name = "p_dof";
  out.p_dof.obj.resize(out.p_total->n_obj());
  out.p_dof.mor.resize(out.p_total->n_mor());
  for (int o = 0; o < out.p_total->n_obj(); ++o) out.p_dof.obj[o] = out.p_obj[o].first;
  for (auto [key, bm] : pmor) out.p_dof.mor[bm] = key.second;

  // eps: subsets with a chosen member.
  CatBuilder be("eps(" + a_dof.name + ")");
  for (int o = 0; o < static_cast<int>(out.p_obj.size()); ++o) {
    auto [u, mask] = out.p_obj[o];
    for (int t = 0; t < static_cast<int>(out.fib[u].size()); ++t)
      if (mask & (1u << t)) {
        out.eps_idx_[{u, static_cast<int>(mask), t}] =
            be.add_object(U.objects[u] + "#" + std::to_string(mask) + "." + std::to_string(t));
        out.eps_obj.push_back({u, static_cast<int>(mask), t});
      }
  }
  std::map<std::pair<int, int>, int> emor;
  for (int o = 0; o < static_cast<int>(out.eps_obj.size()); ++o) {
    auto [u, mask, t] = out.eps_obj[o];
    for (int v = 0; v < U.n_mor(); ++v) {
      if (U.mors[v].dom != u) continue;
      if (U.is_identity(v)) {
        emor[{o, v}] = be.id_of(o);
      } else {
        int u2 = U.mors[v].cod;
        int t2 = pos[a_dof.src->mors[lifts(out.fib[u][t], v)].cod];
        emor[{o, v}] = be.add_mor(U.mors[v].name + "#" + std::to_string(mask) + "." +
                                      std::to_string(t),
                                  o, out.eps_idx_.at({u2, static_cast<int>(transport(v, mask)), t2}));
      }
    }
  }
  for (int o = 0; o < static_cast<int>(out.eps_obj.size()); ++o) {
    auto [u, mask, t] = out.eps_obj[o];
    (void)mask;
    (void)t;
    for (int v = 0; v < U.n_mor(); ++v) {
      if (U.mors[v].dom != u) continue;
      int o2 = be.cod(emor[{o, v}]);
      for (int v2 = 0; v2 < U.n_mor(); ++v2) {
        if (U.mors[v2].dom != U.mors[v].cod) continue;
        be.set_compose(emor[{o, v}], emor[{o2, v2}], emor[{o, U.compose(v, v2)}]);
      }
    }
  }
  out.eps_total = be.validate();
  out.eps_dof.src = out.eps_total;
  out.eps_dof.dst = a_dof.dst;
  out.eps_dof.name = "eps_dof";
  out.eps_dof.obj.resize(out.eps_total->n_obj());
  out.eps_dof.mor.resize(out.eps_total->n_mor());
  for (int o = 0; o < out.eps_total->n_obj(); ++o) out.eps_dof.obj[o] = out.eps_obj[o][0];
  for (auto [key, bm] : emor) out.eps_dof.mor[bm] = key.second;

  out.axp = build_pullback(a_dof, out.p_dof);
  out.j.src = out.eps_total;
  out.j.dst = out.axp.apex;
  out.j.name = "j";
  out.j.obj.resize(out.eps_total->n_obj());
  out.j.mor.resize(out.eps_total->n_mor());
  for (int o = 0; o < out.eps_total->n_obj(); ++o) {
    auto [u, mask, t] = out.eps_obj[o];
    out.j.obj[o] = out.axp.pair_obj(out.fib[u][t], out.pidx_[u][mask]);
  }
  for (auto [key, bm] : emor) {
    auto [o, v] = key;
    auto [u, mask, t] = out.eps_obj[o];
    out.j.mor[bm] =
        out.axp.pair_mor(lifts(out.fib[u][t], v), pmor.at({out.pidx_[u][mask], v}));
  }
  return out;
}

Verdict verify_power_universal(const Functor& a_dof, const PowerObject& po,
                               const ClassifierConfig& cfg, Budget& budget) {
  const CatPtr& ucat = a_dof.dst;
  auto s = build_set_skeleton(cfg.n);
  DofTable plifts(po.p_dof);
  DofTable elifts(po.eps_dof);
  std::vector<int> apos(a_dof.src->n_obj(), -1);
  for (int u = 0; u < ucat->n_obj(); ++u)
    for (std::size_t t = 0; t < po.fib[u].size(); ++t) apos[po.fib[u][t]] = static_cast<int>(t);

  // Monos over U with the same image induce the same mediator, so the
  // quantification runs over subobjects of A x_U B: the subsets of the apex
  // closed under lifting, i.e. unions of connected components.
  json stats = json::object();
  std::int64_t instances = 0;
  auto hats = enumerate_functors(ucat, s.cat, budget);
  for (const auto& bhat : hats) {
    auto B = gr(bhat, s);
    auto axb = build_pullback(a_dof, B.proj);
    Functor axb_proj = compose_functors(axb.pr1, a_dof);

    std::vector<int> orbit(axb.apex->n_obj(), -1);
    int n_orb = 0;
    for (int o = 0; o < axb.apex->n_obj(); ++o) {
      if (orbit[o] >= 0) continue;
      std::vector<int> stack{o};
      orbit[o] = n_orb;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int m = 0; m < axb.apex->n_mor(); ++m) {
          int d = axb.apex->mors[m].dom, c = axb.apex->mors[m].cod;
          if (d == cur && orbit[c] < 0) orbit[c] = n_orb, stack.push_back(c);
          if (c == cur && orbit[d] < 0) orbit[d] = n_orb, stack.push_back(d);
        }
      }
      n_orb++;
    }
    budget.spend(std::int64_t{1} << std::min(n_orb, 62), "power subobjects");
    auto vcands = enumerate_lifts(B.proj, po.p_dof, budget);

    for (unsigned sel = 0; sel < (1u << n_orb); ++sel) {
      std::vector<char> in_image(axb.apex->n_obj(), 0);
      std::vector<int> chosen;
      std::vector<int> fibre_count(ucat->n_obj(), 0);
      for (int o = 0; o < axb.apex->n_obj(); ++o)
        if ((sel >> orbit[o]) & 1u) {
          in_image[o] = 1;
          chosen.push_back(o);
          fibre_count[axb_proj.obj[o]]++;
        }
      bool small = true;
      for (int c : fibre_count)
        if (c > cfg.n) small = false;
      if (!small) continue;
      instances++;

      auto sub = full_subcat(axb.apex, chosen, "r_sub");
      const Functor& k = sub.incl;
      Functor rproj = compose_functors(k, axb_proj);

      // Mediator from the membership formula.
      Functor v;
      v.src = B.total;
      v.dst = po.p_total;
      v.name = "v";
      v.obj.resize(B.total->n_obj());
      v.mor.resize(B.total->n_mor());
      for (int bo = 0; bo < B.total->n_obj(); ++bo) {
        int u = B.proj.obj[bo];
        unsigned mask = 0;
        for (std::size_t t = 0; t < po.fib[u].size(); ++t)
          if (in_image[axb.pair_obj(po.fib[u][t], bo)]) mask |= 1u << t;
        v.obj[bo] = po.p_obj_of(u, mask);
      }
      bool ok = true;
      for (int m = 0; m < B.total->n_mor() && ok; ++m) {
        v.mor[m] = plifts(v.obj[B.total->mors[m].dom], B.proj.mor[m]);
        if (v.mor[m] < 0 || po.p_total->mors[v.mor[m]].cod != v.obj[B.total->mors[m].cod])
          ok = false;
      }
      if (!ok)
        return Verdict::fail(
            {{"reason", "membership mediator is not functorial"}, {"b", bhat.name}});

      // Square into eps over the mediator, checked as a strict pullback.
      Functor q;
      q.src = sub.cat;
      q.dst = po.eps_total;
      q.obj.resize(sub.cat->n_obj());
      q.mor.resize(sub.cat->n_mor());
      for (int r = 0; r < sub.cat->n_obj(); ++r) {
        int ax = axb.pr1.obj[sub.obj_of[r]], bo = axb.pr2.obj[sub.obj_of[r]];
        int u = a_dof.obj[ax];
        unsigned mask = po.p_obj[v.obj[bo]].second;
        q.obj[r] = po.eps_obj_of(u, mask, apos[ax]);
      }
      for (int m = 0; m < sub.cat->n_mor() && ok; ++m) {
        q.mor[m] = elifts(q.obj[sub.cat->mors[m].dom], rproj.mor[m]);
        if (q.mor[m] < 0) ok = false;
      }
      if (!ok)
        return Verdict::fail(
            {{"reason", "no lift into the membership fibration"}, {"b", bhat.name}});

      Functor idxv;
      idxv.src = axb.apex;
      idxv.dst = po.axp.apex;
      idxv.obj.resize(axb.apex->n_obj());
      idxv.mor.resize(axb.apex->n_mor());
      for (int o = 0; o < axb.apex->n_obj(); ++o)
        idxv.obj[o] = po.axp.pair_obj(axb.pr1.obj[o], v.obj[axb.pr2.obj[o]]);
      for (int m = 0; m < axb.apex->n_mor(); ++m)
        idxv.mor[m] = po.axp.pair_mor(axb.pr1.mor[m], v.mor[axb.pr2.mor[m]]);

      Verdict sq = check_strict_pullback(q, k, po.j, idxv);
      if (!sq)
        return Verdict::fail({{"reason", "induced square is not a strict pullback"},
                              {"b", bhat.name},
                              {"subobject", sel},
                              {"detail", sq.counterexample}});

      // Uniqueness: no other lift of B to P induces the same subobject.
      int matches = 0;
      bool canonical_seen = false;
      for (const auto& v2 : vcands) {
        bool same = true;
        for (int o = 0; o < axb.apex->n_obj() && same; ++o) {
          int ax = axb.pr1.obj[o], bo = axb.pr2.obj[o];
          unsigned mask = po.p_obj[v2.obj[bo]].second;
          bool member = (mask >> apos[ax]) & 1u;
          if (member != static_cast<bool>(in_image[o])) same = false;
        }
        if (same) {
          matches++;
          if (same_functor(v2, v)) canonical_seen = true;
        }
      }
      if (matches != 1 || !canonical_seen)
        return Verdict::fail({{"reason", "mediator not unique"},
                              {"b", bhat.name},
                              {"subobject", sel},
                              {"matches", matches}});
    }
  }
  stats["small_dofs"] = hats.size();
  stats["subobject_instances"] = instances;
  return Verdict::ok(stats);
}

Verdict power_stability(const Functor& f, const Functor& a_dof, const ClassifierConfig& cfg,
                        Budget& budget) {
  auto po = power_object_in_dof(a_dof, cfg);
  auto pbA = build_pullback(f, a_dof);   // pulled A over U'
  auto pbP = build_pullback(f, po.p_dof);
  auto pbE = build_pullback(f, po.eps_dof);
  auto po2 = power_object_in_dof(pbA.pr1, cfg);

  // Fibre positions of the pulled A, to translate subset masks.
  std::vector<int> apos(a_dof.src->n_obj(), -1);
  for (std::size_t u = 0; u < po.fib.size(); ++u)
    for (std::size_t t = 0; t < po.fib[u].size(); ++t) apos[po.fib[u][t]] = static_cast<int>(t);
  auto translate = [&](int uprime, unsigned mask) {
    unsigned r = 0;
    for (std::size_t t2 = 0; t2 < po2.fib[uprime].size(); ++t2) {
      int pulled = po2.fib[uprime][t2];  // object of pbA.apex
      int ax = pbA.pr2.obj[pulled];
      if ((mask >> apos[ax]) & 1u) r |= 1u << t2;
    }
    return r;
  };

  Functor phi;  // pulled P -> directly built P, over U'
  phi.src = pbP.apex;
  phi.dst = po2.p_total;
  phi.name = "phi";
  phi.obj.resize(pbP.apex->n_obj());
  phi.mor.resize(pbP.apex->n_mor());
  DofTable plifts(po2.p_dof);
  for (int o = 0; o < pbP.apex->n_obj(); ++o) {
    int uprime = pbP.pr1.obj[o];
    unsigned mask = po.p_obj[pbP.pr2.obj[o]].second;
    phi.obj[o] = po2.p_obj_of(uprime, translate(uprime, mask));
  }
  for (int m = 0; m < pbP.apex->n_mor(); ++m) {
    phi.mor[m] = plifts(phi.obj[pbP.apex->mors[m].dom], pbP.pr1.mor[m]);
    if (phi.mor[m] < 0 ||
        po2.p_total->mors[phi.mor[m]].cod != phi.obj[pbP.apex->mors[m].cod])
      return Verdict::fail({{"reason", "pulled transport disagrees"}});
  }
  if (!check_functor(phi)) return Verdict::fail({{"reason", "comparison is not a functor"}});
  if (!same_functor(compose_functors(phi, po2.p_dof), pbP.pr1))
    return Verdict::fail({{"reason", "comparison does not live over the base"}});
  std::vector<int> hits(po2.p_total->n_obj(), 0);
  for (int o = 0; o < pbP.apex->n_obj(); ++o) hits[phi.obj[o]]++;
  for (int h : hits)
    if (h != 1) return Verdict::fail({{"reason", "pulled P not isomorphic to direct P"}});
  if (pbP.apex->n_mor() != po2.p_total->n_mor())
    return Verdict::fail({{"reason", "pulled P not isomorphic to direct P"}});
  (void)budget;

  // j-compatibility on objects: membership is preserved by the comparison.
  for (int o = 0; o < pbE.apex->n_obj(); ++o) {
    int uprime = pbE.pr1.obj[o];
    auto [u, mask, t] = po.eps_obj[pbE.pr2.obj[o]];
    (void)u;
    unsigned mask2 = translate(uprime, static_cast<unsigned>(mask));
    // The chosen member must land in the translated subset.
    bool found = false;
    for (std::size_t t2 = 0; t2 < po2.fib[uprime].size(); ++t2) {
      int pulled = po2.fib[uprime][t2];
      if (apos[pbA.pr2.obj[pulled]] == t && ((mask2 >> t2) & 1u)) found = true;
    }
    if (!found) return Verdict::fail({{"reason", "membership not preserved"}});
  }
  return Verdict::ok({{"pulled_objects", pbP.apex->n_obj()}});
}

Verdict dof_limits(const CatPtr& a, const ClassifierConfig& cfg, int n_small, Budget& budget) {
  auto s = build_set_skeleton(cfg.n);
  auto ss = build_set_skeleton(n_small);
  json report = json::object();

  auto funcs = enumerate_functors(a, s.cat, budget);
  std::vector<Functor> sample;
  for (std::size_t i = 0; i < funcs.size() && sample.size() < 6;
       i += std::max<std::size_t>(1, funcs.size() / 6))
    sample.push_back(funcs[i]);

  // Terminal object of DOF(a): the identity, with exactly one map into it.
  for (const auto& g : sample) {
    auto el = gr(g, s);
    auto maps = enumerate_lifts(el.proj, identity_functor(a), budget);
    if (maps.size() != 1)
      return Verdict::fail({{"reason", "identity is not terminal in DOF(A)"}});
  }
  report["terminal_checked"] = sample.size();

  // Pullbacks of cospans of DOFs, computed on total categories.
  int cospans = 0;
  json small_notes = json::array();
  for (std::size_t i = 0; i < sample.size() && cospans < 4; ++i)
    for (std::size_t j = 0; j < sample.size() && cospans < 4; ++j) {
      auto alphas = enumerate_transformations(sample[i], sample[j], budget);
      auto betas = enumerate_transformations(sample[(i + 1) % sample.size()], sample[j], budget);
      if (alphas.empty() || betas.empty()) continue;
      auto e1 = gr(sample[i], s), e2 = gr(sample[(i + 1) % sample.size()], s),
           e3 = gr(sample[j], s);
      Functor t1 = gr_2cell(alphas.front(), e1, e3, s);
      Functor t2 = gr_2cell(betas.front(), e2, e3, s);
      auto pb = build_pullback(t1, t2);
      Functor proj = compose_functors(pb.pr1, e1.proj);
      if (!check_property(MapProperty::kDiscreteOpfibration, proj))
        return Verdict::fail({{"reason", "pullback in DOF(A) is not a DOF"}});
      for (int x = 0; x < a->n_obj(); ++x) {
        int expect = 0;
        for (int p = 0; p < sample[i].obj[x]; ++p)
          for (int q2 = 0; q2 < sample[(i + 1) % sample.size()].obj[x]; ++q2)
            if (s.fn[alphas.front().comp[x]][p] == s.fn[betas.front().comp[x]][q2]) expect++;
        int got = 0;
        for (int o = 0; o < pb.apex->n_obj(); ++o)
          if (proj.obj[o] == x) got++;
        if (got != expect)
          return Verdict::fail({{"reason", "pullback fibre is not the fibre product"}});
        if (got > cfg.n)
          small_notes.push_back({{"note", "NotSmallAtThisBound"}, {"fibre", got}});
      }
      cospans++;
    }
  report["cospans_checked"] = cospans;
  report["smallness_notes"] = small_notes;

  // Nested bound: the size inclusion is fully faithful and preserves the
  // constructions on admissible inputs.
  Functor inc;
  inc.src = ss.cat;
  inc.dst = s.cat;
  inc.name = "incl";
  inc.obj.resize(ss.cat->n_obj());
  inc.mor.resize(ss.cat->n_mor());
  for (int m = 0; m <= n_small; ++m) inc.obj[m] = m;
  for (int f = 0; f < ss.cat->n_mor(); ++f)
    inc.mor[f] = s.mor_of_fn(ss.cat->mors[f].dom, ss.cat->mors[f].cod, ss.fn[f]);
  if (!check_property(MapProperty::kFullyFaithful, inc))
    return Verdict::fail({{"reason", "size inclusion not fully faithful"}});

  auto small_funcs = enumerate_functors(a, ss.cat, budget);
  std::vector<Functor> ssample;
  for (std::size_t i = 0; i < small_funcs.size() && ssample.size() < 4;
       i += std::max<std::size_t>(1, small_funcs.size() / 4))
    ssample.push_back(small_funcs[i]);
  for (const auto& g : ssample)
    for (const auto& h : ssample) {
      auto lo = enumerate_transformations(g, h, budget);
      auto hi = enumerate_transformations(compose_functors(g, inc),
                                          compose_functors(h, inc), budget);
      if (lo.size() != hi.size())
        return Verdict::fail({{"reason", "inclusion does not preserve 2-cell counts"}});
    }
  for (const auto& g : ssample) {
    auto el_lo = gr(g, ss);
    auto el_hi = gr(compose_functors(g, inc), s);
    Budget b2{budget.limit - budget.used, 0};
    if (!find_isomorphism_over(el_lo.proj, el_hi.proj, b2).has_value())
      return Verdict::fail({{"reason", "inclusion does not preserve elements"}});
  }
  ClassifierConfig small_cfg;
  small_cfg.n = n_small;
  for (int m = 0; m <= n_small; ++m)
    if (small_cfg.power_admissible(m) && pow_value(small_cfg, m) != pow_value(cfg, m))
      return Verdict::fail({{"reason", "power values disagree across bounds"}});
  report["nested_pairs"] = ssample.size() * ssample.size();
  return Verdict::ok(report);
}

}  // namespace catv
