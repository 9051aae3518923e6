#include <map>
#include <sstream>
#include <string>

#include "catv/io.hpp"

namespace catv {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw ValidationError("FixtureInvalid", msg);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field: ") + key);
  return j.at(key);
}

Functor functor_from_json(const json& j, const CatPtr& src, const CatPtr& dst) {
  Functor f;
  f.src = src;
  f.dst = dst;
  f.obj = field(j, "obj").get<std::vector<int>>();
  f.mor = field(j, "mor").get<std::vector<int>>();
  if (static_cast<int>(f.obj.size()) != src->n_obj() ||
      static_cast<int>(f.mor.size()) != src->n_mor())
    bad("functor table sizes do not match the source category");
  for (int o : f.obj)
    if (o < 0 || o >= dst->n_obj()) bad("functor object table out of range");
  for (int m : f.mor)
    if (m < 0 || m >= dst->n_mor()) bad("functor morphism table out of range");
  return f;
}

json functor_to_json(const Functor& f) {
  return json{{"obj", f.obj}, {"mor", f.mor}};
}

}  // namespace

json cat_to_json(const CatPtr& c) {
  json j;
  j["kind"] = "category";
  j["name"] = c->name;
  j["objects"] = c->objects;
  json mors = json::array();
  for (int m = 0; m < c->n_mor(); ++m) {
    if (c->is_identity(m)) continue;
    mors.push_back({{"name", c->mors[m].name},
                    {"dom", c->objects[c->mors[m].dom]},
                    {"cod", c->objects[c->mors[m].cod]}});
  }
  j["morphisms"] = mors;
  json comp = json::array();
  for (int f = 0; f < c->n_mor(); ++f) {
    if (c->is_identity(f)) continue;
    for (int g = 0; g < c->n_mor(); ++g) {
      if (c->is_identity(g) || !c->composable(f, g)) continue;
      comp.push_back({c->mors[f].name, c->mors[g].name, c->mors[c->compose(f, g)].name});
    }
  }
  j["compose"] = comp;
  return j;
}

CatPtr cat_from_json(const json& j) {
  if (field(j, "kind") != "category") bad("kind is not category");
  CatBuilder b(field(j, "name").get<std::string>());
  std::map<std::string, int> obj_of;
  for (const json& o : field(j, "objects")) {
    std::string label = o.get<std::string>();
    if (obj_of.count(label)) bad("duplicate object label: " + label);
    obj_of[label] = b.add_object(label);
  }
  std::map<std::string, int> mor_of;
  for (const auto& [label, o] : obj_of) mor_of["id_" + label] = b.id_of(o);
  for (const json& m : field(j, "morphisms")) {
    std::string name = field(m, "name").get<std::string>();
    std::string dom = field(m, "dom").get<std::string>();
    std::string cod = field(m, "cod").get<std::string>();
    if (!obj_of.count(dom) || !obj_of.count(cod)) bad("unknown endpoint on " + name);
    if (mor_of.count(name)) bad("duplicate morphism name: " + name);
    mor_of[name] = b.add_mor(name, obj_of[dom], obj_of[cod]);
  }
  for (const json& t : field(j, "compose")) {
    if (!t.is_array() || t.size() != 3) bad("compose entries must be name triples");
    for (const json& n : t)
      if (!mor_of.count(n.get<std::string>()))
        bad("unknown morphism in compose: " + n.get<std::string>());
    b.set_compose(mor_of[t[0].get<std::string>()], mor_of[t[1].get<std::string>()],
                  mor_of[t[2].get<std::string>()]);
  }
  return b.validate();
}

json double_to_json(const RawDouble& d) {
  json j;
  j["kind"] = "double_category";
  j["c0"] = cat_to_json(d.c0);
  j["c1"] = cat_to_json(d.c1);
  j["c2"] = cat_to_json(d.c2);
  j["p0"] = functor_to_json(d.p0);
  j["p1"] = functor_to_json(d.p1);
  j["e"] = functor_to_json(d.e);
  j["p01"] = functor_to_json(d.p01);
  j["p12"] = functor_to_json(d.p12);
  j["p02"] = functor_to_json(d.p02);
  return j;
}

RawDouble double_from_json(const json& j) {
  if (field(j, "kind") != "double_category") bad("kind is not double_category");
  RawDouble d;
  d.c0 = cat_from_json(field(j, "c0"));
  d.c1 = cat_from_json(field(j, "c1"));
  d.c2 = cat_from_json(field(j, "c2"));
  d.p0 = functor_from_json(field(j, "p0"), d.c1, d.c0);
  d.p1 = functor_from_json(field(j, "p1"), d.c1, d.c0);
  d.e = functor_from_json(field(j, "e"), d.c0, d.c1);
  d.p01 = functor_from_json(field(j, "p01"), d.c2, d.c1);
  d.p12 = functor_from_json(field(j, "p12"), d.c2, d.c1);
  d.p02 = functor_from_json(field(j, "p02"), d.c2, d.c1);
  return d;
}

bool is_double_fixture(const json& j) {
  return field(j, "kind") == "double_category";
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_nodes_edges(std::ostringstream& out, const CatPtr& c, const std::string& prefix,
                     const std::string& indent) {
  for (int o = 0; o < c->n_obj(); ++o)
    out << indent << prefix << o << " [label=" << quote(c->objects[o]) << "];\n";
  for (int m = 0; m < c->n_mor(); ++m) {
    if (c->is_identity(m)) continue;
    out << indent << prefix << c->mors[m].dom << " -> " << prefix << c->mors[m].cod
        << " [label=" << quote(c->mors[m].name) << "];\n";
  }
}

}  // namespace

std::string cat_to_dot(const CatPtr& c) {
  std::ostringstream out;
  out << "digraph " << quote(c->name) << " {\n";
  dot_nodes_edges(out, c, "o", "  ");
  out << "}\n";
  return out.str();
}

std::string double_to_dot(const RawDouble& d) {
  std::ostringstream out;
  out << "digraph double {\n";
  const CatPtr levels[3] = {d.c0, d.c1, d.c2};
  const char* prefixes[3] = {"c0_", "c1_", "c2_"};
  for (int i = 0; i < 3; ++i) {
    out << "  subgraph cluster_c" << i << " {\n    label=" << quote(levels[i]->name)
        << ";\n";
    dot_nodes_edges(out, levels[i], prefixes[i], "    ");
    out << "  }\n";
  }
  auto cross = [&](const Functor& f, const char* from, const char* to, const char* name) {
    for (int o = 0; o < f.src->n_obj(); ++o)
      out << "  " << from << o << " -> " << to << f.obj[o] << " [style=dashed, label="
          << quote(name) << "];\n";
  };
  cross(d.p0, "c1_", "c0_", "p0");
  cross(d.p1, "c1_", "c0_", "p1");
  cross(d.e, "c0_", "c1_", "e");
  cross(d.p01, "c2_", "c1_", "p01");
  cross(d.p12, "c2_", "c1_", "p12");
  cross(d.p02, "c2_", "c1_", "p02");
  out << "}\n";
  return out.str();
}

}  // namespace catv
