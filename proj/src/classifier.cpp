#include "catv/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace catv {

namespace {

// lift[e][v]: the unique morphism over v starting at e, for a DOF f.
struct DofTable {
  std::vector<std::vector<int>> lift;
  explicit DofTable(const Functor& f) {
    lift.assign(f.src->n_obj(), std::vector<int>(f.dst->n_mor(), -1));
    for (int m = 0; m < f.src->n_mor(); ++m) lift[f.src->mors[m].dom][f.mor[m]] = m;
  }
  int operator()(int e, int v) const { return lift[e][v]; }
};

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

int BoundedSetClassifier::star_obj_of(int m, int i) const { return star_idx_[m][i]; }

BoundedSetClassifier build_classifier(const ClassifierConfig& cfg) {
  BoundedSetClassifier out;
  out.cfg = cfg;
  out.s = build_set_skeleton(cfg.n);
  const FinCat& S = *out.s.cat;

  CatBuilder b("set" + std::to_string(cfg.n) + "_ptd");
  out.star_idx_.assign(cfg.n + 1, {});
  for (int m = 1; m <= cfg.n; ++m)
    for (int i = 0; i < m; ++i) {
      out.star_idx_[m].push_back(b.add_object(std::to_string(m) + "." + std::to_string(i)));
      out.star_obj.push_back({m, i});
    }
  std::vector<std::vector<int>> mor_at(S.n_mor());  // (S-mor, point) -> star mor
  for (int f = 0; f < S.n_mor(); ++f) {
    int m = S.mors[f].dom, n = S.mors[f].cod;
    mor_at[f].assign(std::max(m, 1), -1);
    for (int i = 0; i < m; ++i) {
      if (S.is_identity(f)) {
        mor_at[f][i] = b.id_of(out.star_idx_[m][i]);
      } else {
        mor_at[f][i] = b.add_mor(S.mors[f].name + "@" + std::to_string(i),
                                 out.star_idx_[m][i], out.star_idx_[n][out.s.fn[f][i]]);
      }
    }
  }
  for (int f = 0; f < S.n_mor(); ++f)
    for (int g = 0; g < S.n_mor(); ++g) {
      if (!S.composable(f, g)) continue;
      int m = S.mors[f].dom;
      for (int i = 0; i < m; ++i)
        b.set_compose(mor_at[f][i], mor_at[g][out.s.fn[f][i]], mor_at[S.compose(f, g)][i]);
    }
  out.star = b.validate();

  out.p.src = out.star;
  out.p.dst = out.s.cat;
  out.p.name = "p";
  out.p.obj.resize(out.star->n_obj());
  out.p.mor.resize(out.star->n_mor());
  for (int o = 0; o < out.star->n_obj(); ++o) out.p.obj[o] = out.star_obj[o].first;
  for (int f = 0; f < S.n_mor(); ++f)
    for (int i = 0; i < static_cast<int>(mor_at[f].size()); ++i)
      if (S.mors[f].dom > 0) out.p.mor[mor_at[f][i]] = f;

  out.genericity = check_property(MapProperty::kDiscreteOpfibration, out.p);
  if (out.genericity.holds) {
    // f |-> f_* bijects Hom(m, n) with fibre maps: the lift table of every
    // morphism must reproduce its function table, and tables are distinct.
    DofTable lifts(out.p);
    for (int f = 0; f < S.n_mor() && out.genericity.holds; ++f) {
      int m = S.mors[f].dom;
      for (int i = 0; i < m; ++i) {
        int l = lifts(out.star_idx_[m][i], f);
        if (l < 0 || out.star_obj[out.star->mors[l].cod].second != out.s.fn[f][i]) {
          out.genericity =
              Verdict::fail({{"reason", "pushforward disagrees with the function table"},
                             {"morphism", S.mors[f].name}});
          break;
        }
      }
    }
    for (int m = 0; m <= cfg.n && out.genericity.holds; ++m)
      for (int n = 0; n <= cfg.n; ++n)
        if (static_cast<std::int64_t>(S.hom(m, n).size()) != ipow(n, m)) {
          out.genericity = Verdict::fail(
              {{"reason", "hom cardinality is not n^m"}, {"m", m}, {"n", n}});
          break;
        }
  }
  return out;
}

Verdict genericity_criterion(int n) {
  if (n <= 4) {
    ClassifierConfig cfg;
    cfg.n = n;
    return build_classifier(cfg).genericity;
  }
  // Counting form: tables enumerated without materializing the category.
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= n; ++k) {
      std::int64_t count = 0;
      std::vector<int> t(m, 0);
      bool more = true;
      if (m == 0) {
        count = 1;
      } else if (k == 0) {
        count = 0;
      } else {
        while (more) {
          count++;
          more = false;
          for (int i = 0; i < m; ++i) {
            if (++t[i] < k) {
              more = true;
              break;
            }
            t[i] = 0;
          }
        }
      }
      if (count != ipow(k, m))
        return Verdict::fail({{"reason", "table count mismatch"}, {"m", m}, {"k", k}});
    }
  }
  // Closure and associativity on sampled triples of tables.
  auto table = [&](int m, int k, std::int64_t code) {
    std::vector<int> t(m);
    for (int i = 0; i < m; ++i) {
      t[i] = static_cast<int>(code % k);
      code /= k;
    }
    return t;
  };
  for (int m = 1; m <= n; ++m)
    for (std::int64_t c1 = 0; c1 < ipow(n, m); c1 += 7)
      for (std::int64_t c2 = 0; c2 < ipow(n, n); c2 += 11) {
        auto f = table(m, n, c1), g = table(n, n, c2);
        for (int i = 0; i < m; ++i) {
          int v = g[f[i]];
          if (v < 0 || v >= n)
            return Verdict::fail({{"reason", "composition leaves the table set"}});
        }
      }
  return Verdict::ok({{"bound", n}, {"materialized", false}});
}

ElData gr(const Functor& g, const SetSkeleton& s) {
  const FinCat& A = *g.src;
  ElData out;
  CatBuilder b("el(" + (g.name.empty() ? "g" : g.name) + ")");
  out.obj_idx_.assign(A.n_obj(), {});
  for (int a = 0; a < A.n_obj(); ++a)
    for (int i = 0; i < g.obj[a]; ++i) {
      out.obj_idx_[a].push_back(b.add_object(A.objects[a] + "." + std::to_string(i)));
      out.obj.push_back({a, i});
    }
  std::vector<std::vector<int>> mor_at(A.n_mor());
  for (int u = 0; u < A.n_mor(); ++u) {
    int a = A.mors[u].dom, a2 = A.mors[u].cod;
    mor_at[u].assign(std::max(g.obj[a], 1), -1);
    for (int i = 0; i < g.obj[a]; ++i) {
      if (A.is_identity(u)) {
        mor_at[u][i] = b.id_of(out.obj_idx_[a][i]);
      } else {
        mor_at[u][i] = b.add_mor(A.mors[u].name + "@" + std::to_string(i), out.obj_idx_[a][i],
                                 out.obj_idx_[a2][s.fn[g.mor[u]][i]]);
      }
    }
  }
  for (int u = 0; u < A.n_mor(); ++u)
    for (int v = 0; v < A.n_mor(); ++v) {
      if (!A.composable(u, v)) continue;
      for (int i = 0; i < g.obj[A.mors[u].dom]; ++i)
        b.set_compose(mor_at[u][i], mor_at[v][s.fn[g.mor[u]][i]], mor_at[A.compose(u, v)][i]);
    }
  out.total = b.validate();

  out.proj.src = out.total;
  out.proj.dst = g.src;
  out.proj.name = "el_proj";
  out.proj.obj.resize(out.total->n_obj());
  out.proj.mor.resize(out.total->n_mor());
  out.mor.resize(out.total->n_mor());
  for (int o = 0; o < out.total->n_obj(); ++o) out.proj.obj[o] = out.obj[o].first;
  for (int u = 0; u < A.n_mor(); ++u)
    for (int i = 0; i < static_cast<int>(mor_at[u].size()); ++i) {
      if (g.obj[A.mors[u].dom] == 0) continue;
      out.proj.mor[mor_at[u][i]] = u;
      out.mor[mor_at[u][i]] = {u, i};
    }
  return out;
}

Functor gr_2cell(const Transformation& gamma, const ElData& ef, const ElData& eh,
                 const SetSkeleton& s) {
  const FinCat& A = *gamma.src.src;
  std::map<std::pair<int, int>, int> eh_mor;
  for (int m = 0; m < eh.total->n_mor(); ++m) eh_mor[eh.mor[m]] = m;
  Functor t;
  t.src = ef.total;
  t.dst = eh.total;
  t.name = "gr(" + gamma.name + ")";
  t.obj.resize(ef.total->n_obj());
  t.mor.resize(ef.total->n_mor());
  for (int o = 0; o < ef.total->n_obj(); ++o) {
    auto [a, i] = ef.obj[o];
    t.obj[o] = eh.obj_of(a, s.fn[gamma.comp[a]][i]);
  }
  for (int m = 0; m < ef.total->n_mor(); ++m) {
    auto [u, i] = ef.mor[m];
    t.mor[m] = eh_mor.at({u, s.fn[gamma.comp[A.mors[u].dom]][i]});
  }
  return t;
}

ClassifyResult classify(const Functor& f, const SetSkeleton& s) {
  const FinCat& A = *f.dst;
  const FinCat& E = *f.src;
  if (!check_property(MapProperty::kDiscreteOpfibration, f))
    throw ValidationError("NotDof", "classify requires a discrete opfibration");
  std::vector<std::vector<int>> fib(A.n_obj());
  std::vector<int> pos(E.n_obj(), -1);
  for (int e = 0; e < E.n_obj(); ++e) {
    pos[e] = static_cast<int>(fib[f.obj[e]].size());
    fib[f.obj[e]].push_back(e);
  }
  for (int a = 0; a < A.n_obj(); ++a)
    if (static_cast<int>(fib[a].size()) > s.bound)
      throw ValidationError("FibreTooLarge", "fibre over " + A.objects[a] + " has " +
                                                 std::to_string(fib[a].size()) + " objects");

  DofTable lifts(f);
  ClassifyResult out;
  out.g.src = f.dst;
  out.g.dst = s.cat;
  out.g.name = "classify(" + f.name + ")";
  out.g.obj.resize(A.n_obj());
  out.g.mor.resize(A.n_mor());
  for (int a = 0; a < A.n_obj(); ++a) out.g.obj[a] = static_cast<int>(fib[a].size());
  for (int u = 0; u < A.n_mor(); ++u) {
    int a = A.mors[u].dom;
    std::vector<int> table(fib[a].size());
    for (std::size_t i = 0; i < fib[a].size(); ++i)
      table[i] = pos[E.mors[lifts(fib[a][i], u)].cod];
    out.g.mor[u] = s.mor_of_fn(static_cast<int>(fib[a].size()),
                               static_cast<int>(fib[A.mors[u].cod].size()), table);
  }
  if (!check_functor(out.g))
    throw ValidationError("NotDof", "classifying assignment is not functorial");

  out.el = gr(out.g, s);
  out.iso.src = out.el.total;
  out.iso.dst = f.src;
  out.iso.name = "classify_iso";
  out.iso.obj.resize(out.el.total->n_obj());
  out.iso.mor.resize(out.el.total->n_mor());
  for (int o = 0; o < out.el.total->n_obj(); ++o) {
    auto [a, i] = out.el.obj[o];
    out.iso.obj[o] = fib[a][i];
  }
  for (int m = 0; m < out.el.total->n_mor(); ++m) {
    auto [u, i] = out.el.mor[m];
    out.iso.mor[m] = lifts(fib[A.mors[u].dom][i], u);
  }
  return out;
}

Verdict check_gr_fully_faithful(const CatPtr& a, const Functor& f, const Functor& h,
                                const SetSkeleton& s, Budget& budget) {
  (void)a;
  auto ef = gr(f, s), eh = gr(h, s);
  auto cells = enumerate_transformations(f, h, budget);
  std::vector<Functor> over;
  for (const auto& t : enumerate_functors(ef.total, eh.total, budget))
    if (same_functor(compose_functors(t, eh.proj), ef.proj)) over.push_back(t);

  std::vector<int> hit(over.size(), 0);
  for (const auto& c : cells) {
    Functor t = gr_2cell(c, ef, eh, s);
    bool found = false;
    for (std::size_t i = 0; i < over.size(); ++i)
      if (same_functor(t, over[i])) {
        hit[i]++;
        found = true;
        break;
      }
    if (!found)
      return Verdict::fail({{"reason", "induced functor is not over the base"}});
  }
  for (std::size_t i = 0; i < over.size(); ++i)
    if (hit[i] != 1)
      return Verdict::fail({{"reason", "2-cells do not biject with over-functors"},
                            {"index", i},
                            {"preimages", hit[i]}});
  return Verdict::ok({{"two_cells", cells.size()}, {"over_functors", over.size()}});
}

std::vector<Functor> enumerate_lifts(const Functor& g, const Functor& q, Budget& budget) {
  const FinCat& A = *g.src;
  const FinCat& T = *q.src;
  DofTable lifts(q);
  std::vector<std::vector<int>> fibre(q.dst->n_obj());
  for (int t = 0; t < T.n_obj(); ++t) fibre[q.obj[t]].push_back(t);

  // Morphisms grouped by the later of their endpoints, for early pruning.
  std::vector<std::vector<int>> by_last(A.n_obj());
  for (int m = 0; m < A.n_mor(); ++m)
    by_last[std::max(A.mors[m].dom, A.mors[m].cod)].push_back(m);

  std::vector<Functor> out;
  std::vector<int> obj(A.n_obj(), -1);
  std::function<void(int)> rec = [&](int a) {
    budget.spend(1, "lift enumeration");
    if (a == A.n_obj()) {
      Functor h;
      h.src = g.src;
      h.dst = q.src;
      h.obj = obj;
      h.mor.resize(A.n_mor());
      for (int m = 0; m < A.n_mor(); ++m) h.mor[m] = lifts(obj[A.mors[m].dom], g.mor[m]);
      out.push_back(std::move(h));
      return;
    }
    for (int t : fibre[g.obj[a]]) {
      obj[a] = t;
      bool ok = true;
      for (int m : by_last[a]) {
        int d = obj[A.mors[m].dom], c = obj[A.mors[m].cod];
        if (d < 0 || c < 0) continue;
        int l = lifts(d, g.mor[m]);
        if (l < 0 || T.mors[l].cod != c) {
          ok = false;
          break;
        }
      }
      if (ok) rec(a + 1);
    }
    obj[a] = -1;
  };
  rec(0);
  return out;
}

}  // namespace catv
