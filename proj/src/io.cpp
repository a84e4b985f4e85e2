#include "fintop/io.hpp"

#include <fstream>
#include <sstream>

namespace fintop {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_input, std::string("malformed ") + what + ": " + e.what());
  }
}

PointSet names_to_set(const FinSpace& x, const json& names) {
  PointSet s;
  for (const auto& n : names) {
    const auto name = n.get<std::string>();
    bool found = false;
    for (std::size_t i = 0; i < x.size() && !found; ++i)
      if (x.label(i) == name) {
        s.insert(i);
        found = true;
      }
    if (!found) throw Error(ErrorCode::invalid_input, "unknown point " + name);
  }
  return s;
}

json set_to_names(const FinSpace& x, const PointSet& s) {
  json out = json::array();
  for (auto i : s) out.push_back(x.label(i));
  return out;
}

}  // namespace

FinSpace space_from_json(const json& j) {
  return guarded("space", [&] {
    const auto labels = j.at("points").get<std::vector<std::string>>();
    const auto opens = j.at("opens").get<std::vector<std::vector<std::string>>>();
    return build_space(labels, opens);
  });
}

json space_to_json(const FinSpace& x) {
  json opens = json::array();
  for (const auto& u : x.opens()) opens.push_back(set_to_names(x, u));
  return {{"points", x.labels()}, {"opens", opens}};
}

json filter_to_json(const FinSpace& x, const Filter& f) { return {{"gen", set_to_names(x, f.gen)}}; }

Filter filter_from_json(const FinSpace& x, const json& j) {
  return guarded("filter", [&] {
    const PointSet gen = names_to_set(x, j.at("gen"));
    if (!x.is_open(gen)) throw Error(ErrorCode::not_open, x.format(gen) + " is not open", {gen});
    return Filter{gen};
  });
}

json filter_space_to_json(const FilterSpace& tx) {
  const FinSpace& s = tx.space();
  // the open family of TX can be large; its minimal neighbourhoods are enough
  json nbhd = json::object();
  for (std::size_t i = 0; i < s.size(); ++i) nbhd[s.label(i)] = set_to_names(s, s.min_nbhd(i));
  json filters = json::array();
  for (const auto& f : tx.filters()) filters.push_back(filter_to_json(tx.base(), f));
  return {{"points", s.labels()},
          {"alpha", std::string(to_string(tx.alpha()))},
          {"min_nbhd", nbhd},
          {"points_as_filters", filters}};
}

FiniteLattice lattice_from_json(const json& j) {
  return guarded("lattice", [&] {
    const auto labels = j.at("elements").get<std::vector<std::string>>();
    const json& leq = j.at("leq");
    auto index = [&](const json& name) {
      const auto s = name.get<std::string>();
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return i;
      throw Error(ErrorCode::invalid_input, "unknown element " + s);
    };
    const bool matrix = !leq.empty() && leq.size() == labels.size() && leq[0].is_array() && !leq[0].empty() &&
                        (leq[0][0].is_number() || leq[0][0].is_boolean());
    if (matrix) {
      std::vector<std::vector<bool>> m;
      for (const auto& row : leq) {
        std::vector<bool> r;
        for (const auto& v : row) r.push_back(v.is_boolean() ? v.get<bool>() : v.get<int>() != 0);
        m.push_back(std::move(r));
      }
      return FiniteLattice::from_order(labels, m);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : leq) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::invalid_input, "leq entries must be [lo, hi] pairs");
      pairs.emplace_back(index(p[0]), index(p[1]));
    }
    return FiniteLattice::from_pairs(labels, pairs);
  });
}

json lattice_to_json(const FiniteLattice& l) {
  json pairs = json::array();
  for (auto [lo, hi] : l.covering_pairs()) pairs.push_back({l.label(lo), l.label(hi)});
  return {{"elements", l.labels()}, {"leq", pairs}};
}

FinCategory category_from_json(const json& j) {
  return guarded("category", [&] {
    const auto objects = j.at("objects").get<std::vector<std::string>>();
    auto object_index = [&](const std::string& name) {
      for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return i;
      throw Error(ErrorCode::invalid_category, "unknown object " + name);
    };
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
      arrows.push_back({object_index(a.at("dom").get<std::string>()), object_index(a.at("cod").get<std::string>()),
                        a.at("name").get<std::string>()});
    auto arrow_index = [&](const std::string& name) {
      for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
      throw Error(ErrorCode::invalid_category, "unknown arrow " + name);
    };
    std::vector<std::size_t> identities(objects.size(), FinCategory::npos);
    for (const auto& [obj, arrow] : j.at("identities").items())
      identities[object_index(obj)] = arrow_index(arrow.get<std::string>());
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (identities[i] == FinCategory::npos) throw Error(ErrorCode::invalid_category, "no identity for " + objects[i]);
    std::vector<std::vector<std::size_t>> compose(arrows.size(), std::vector<std::size_t>(arrows.size(), FinCategory::npos));
    if (j.contains("compose"))
      for (const auto& t : j.at("compose")) {
        if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::invalid_category, "compose entries are [g, f, g.f]");
        compose[arrow_index(t[0].get<std::string>())][arrow_index(t[1].get<std::string>())] =
            arrow_index(t[2].get<std::string>());
      }
    return FinCategory::build(objects, arrows, identities, compose);
  });
}

json category_to_json(const FinCategory& c) {
  json arrows = json::array();
  for (const auto& a : c.arrows()) arrows.push_back({{"name", a.name}, {"dom", c.object(a.dom)}, {"cod", c.object(a.cod)}});
  json ids = json::object();
  for (std::size_t o = 0; o < c.object_count(); ++o) ids[c.object(o)] = c.arrow(c.identity(o)).name;
  json compose = json::array();
  for (std::size_t g = 0; g < c.arrow_count(); ++g)
    for (std::size_t f = 0; f < c.arrow_count(); ++f)
      if (c.arrow(f).cod == c.arrow(g).dom)
        compose.push_back({c.arrow(g).name, c.arrow(f).name, c.arrow(c.compose(g, f)).name});
  return {{"objects", c.objects()}, {"arrows", arrows}, {"identities", ids}, {"compose", compose}};
}

InputKind detect_kind(const json& j) {
  if (j.is_object()) {
    if (j.contains("points") && j.contains("opens")) return InputKind::space;
    if (j.contains("elements") && j.contains("leq")) return InputKind::lattice;
    if (j.contains("objects") && j.contains("arrows")) return InputKind::category;
  }
  throw Error(ErrorCode::invalid_input, "input is neither a space, a lattice nor a category");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::invalid_input, path + ": " + e.what());
  }
}

}  // namespace fintop
