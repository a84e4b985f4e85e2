#include "fintop/category.hpp"

#include <algorithm>

namespace fintop {

FinCategory FinCategory::build(std::vector<std::string> objects, std::vector<Arrow> arrows,
                               std::vector<std::size_t> identities, std::vector<std::vector<std::size_t>> compose) {
  const std::size_t n = objects.size();
  const std::size_t m = arrows.size();
  if (identities.size() != n) throw Error(ErrorCode::invalid_category, "one identity per object is required");
  for (const auto& a : arrows)
    if (a.dom >= n || a.cod >= n) throw Error(ErrorCode::invalid_category, "arrow " + a.name + " has an unknown end");
  for (std::size_t o = 0; o < n; ++o) {
    const std::size_t id = identities[o];
    if (id >= m || arrows[id].dom != o || arrows[id].cod != o)
      throw Error(ErrorCode::invalid_category, "identity of " + objects[o] + " is not an endo-arrow of it");
  }
  if (compose.size() != m) throw Error(ErrorCode::invalid_category, "composition table has the wrong size");
  for (const auto& row : compose)
    if (row.size() != m) throw Error(ErrorCode::invalid_category, "composition table has the wrong size");

  auto name = [&](std::size_t i) { return arrows[i].name; };
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].cod != arrows[g].dom) {
        if (compose[g][f] != npos)
          throw Error(ErrorCode::invalid_category, "composite " + name(g) + " . " + name(f) + " of non-composable arrows");
        continue;
      }
      auto& gf = compose[g][f];
      if (gf == npos) {
        if (g == identities[arrows[g].dom]) gf = f;
        else if (f == identities[arrows[f].cod]) gf = g;
        else throw Error(ErrorCode::invalid_category, "missing composite " + name(g) + " . " + name(f));
      }
      if (gf >= m || arrows[gf].dom != arrows[f].dom || arrows[gf].cod != arrows[g].cod)
        throw Error(ErrorCode::invalid_category, "composite " + name(g) + " . " + name(f) + " has the wrong type");
    }
  for (std::size_t f = 0; f < m; ++f) {
    if (compose[identities[arrows[f].cod]][f] != f)
      throw Error(ErrorCode::invalid_category, "left identity law fails at " + name(f));
    if (compose[f][identities[arrows[f].dom]] != f)
      throw Error(ErrorCode::invalid_category, "right identity law fails at " + name(f));
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g) {
      if (arrows[g].cod != arrows[h].dom) continue;
      for (std::size_t f = 0; f < m; ++f) {
        if (arrows[f].cod != arrows[g].dom) continue;
        if (compose[h][compose[g][f]] != compose[compose[h][g]][f])
          throw Error(ErrorCode::invalid_category,
                      "associativity fails at " + name(h) + ", " + name(g) + ", " + name(f));
      }
    }

  FinCategory c;
  c.objects_ = std::move(objects);
  c.arrows_ = std::move(arrows);
  c.identities_ = std::move(identities);
  c.compose_.reserve(m * m);
  for (const auto& row : compose) c.compose_.insert(c.compose_.end(), row.begin(), row.end());
  c.hom_.assign(n * n, {});
  for (std::size_t i = 0; i < m; ++i) c.hom_[c.arrows_[i].dom * n + c.arrows_[i].cod].push_back(i);
  return c;
}

std::optional<std::size_t> FinCategory::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  const std::size_t gf = compose_[g * arrows_.size() + f];
  if (gf == npos)
    throw Error(ErrorCode::invalid_category, arrows_[g].name + " and " + arrows_[f].name + " are not composable");
  return gf;
}

bool FinCategory::is_idempotent(std::size_t e) const {
  return arrows_[e].dom == arrows_[e].cod && compose(e, e) == e;
}

std::vector<std::size_t> FinCategory::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < arrows_.size(); ++e)
    if (is_idempotent(e)) out.push_back(e);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> FinCategory::find_iso(std::size_t a, std::size_t b) const {
  for (auto f : hom(a, b))
    for (auto g : hom(b, a))
      if (compose(g, f) == identity(a) && compose(f, g) == identity(b)) return std::make_pair(f, g);
  return std::nullopt;
}

bool is_functor(const FinCategory& c, const FinCategory& d, const Functor& f) {
  if (f.on_objects.size() != c.object_count() || f.on_arrows.size() != c.arrow_count()) return false;
  for (auto o : f.on_objects)
    if (o >= d.object_count()) return false;
  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    const std::size_t fi = f.on_arrows[i];
    if (fi >= d.arrow_count()) return false;
    if (d.arrow(fi).dom != f.on_objects[c.arrow(i).dom] || d.arrow(fi).cod != f.on_objects[c.arrow(i).cod])
      return false;
  }
  for (std::size_t o = 0; o < c.object_count(); ++o)
    if (f.on_arrows[c.identity(o)] != d.identity(f.on_objects[o])) return false;
  for (std::size_t g = 0; g < c.arrow_count(); ++g)
    for (std::size_t h = 0; h < c.arrow_count(); ++h)
      if (c.arrow(h).cod == c.arrow(g).dom &&
          f.on_arrows[c.compose(g, h)] != d.compose(f.on_arrows[g], f.on_arrows[h]))
        return false;
  return true;
}

bool is_fully_faithful(const FinCategory& c, const FinCategory& d, const Functor& f) {
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t b = 0; b < c.object_count(); ++b) {
      const auto& src = c.hom(a, b);
      const auto& dst = d.hom(f.on_objects[a], f.on_objects[b]);
      if (src.size() != dst.size()) return false;
      std::vector<std::size_t> image;
      for (auto i : src) image.push_back(f.on_arrows[i]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    }
  return true;
}

bool is_essentially_surjective(const FinCategory& c, const FinCategory& d, const Functor& f) {
  for (std::size_t y = 0; y < d.object_count(); ++y) {
    bool hit = false;
    for (std::size_t x = 0; x < c.object_count() && !hit; ++x) hit = d.find_iso(f.on_objects[x], y).has_value();
    if (!hit) return false;
  }
  return true;
}

Karoubi karoubi_envelope(const FinCategory& c) {
  Karoubi k;
  std::vector<std::string> objects;
  std::vector<std::size_t> identities;
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (auto e : c.hom(a, a))
      if (c.is_idempotent(e)) {
        k.objects.emplace_back(a, e);
        objects.push_back("(" + c.object(a) + "," + c.arrow(e).name + ")");
      }

  std::vector<Arrow> arrows;
  identities.assign(k.objects.size(), FinCategory::npos);
  for (std::size_t i = 0; i < k.objects.size(); ++i)
    for (std::size_t j = 0; j < k.objects.size(); ++j) {
      const auto [a, e] = k.objects[i];
      const auto [b, d] = k.objects[j];
      for (auto f : c.hom(a, b)) {
        if (c.compose(c.compose(d, f), e) != f) continue;
        if (i == j && f == e) identities[i] = arrows.size();
        arrows.push_back({i, j, c.arrow(f).name + ":" + objects[i] + "->" + objects[j]});
        k.base_arrow.push_back(f);
      }
    }

  const std::size_t m = arrows.size();
  std::vector<std::vector<std::size_t>> compose(m, std::vector<std::size_t>(m, FinCategory::npos));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].cod != arrows[g].dom) continue;
      const std::size_t base = c.compose(k.base_arrow[g], k.base_arrow[f]);
      for (std::size_t h = 0; h < m; ++h)
        if (arrows[h].dom == arrows[f].dom && arrows[h].cod == arrows[g].cod && k.base_arrow[h] == base) {
          compose[g][f] = h;
          break;
        }
    }
  k.category = FinCategory::build(std::move(objects), std::move(arrows), std::move(identities), std::move(compose));

  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t i = 0; i < k.objects.size(); ++i)
      if (k.objects[i] == std::make_pair(a, c.identity(a))) k.embedding.on_objects.push_back(i);
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    const std::size_t i = k.embedding.on_objects[c.arrow(f).dom];
    const std::size_t j = k.embedding.on_objects[c.arrow(f).cod];
    for (auto h : k.category.hom(i, j))
      if (k.base_arrow[h] == f) {
        k.embedding.on_arrows.push_back(h);
        break;
      }
  }
  if (!is_functor(c, k.category, k.embedding) || !is_fully_faithful(c, k.category, k.embedding))
    throw Error(ErrorCode::theorem_violation, "the embedding into the Karoubi envelope is not fully faithful");
  if (auto e = unsplit_idempotent(k.category))
    throw Error(ErrorCode::theorem_violation,
                "idempotent " + k.category.arrow(*e).name + " does not split in the Karoubi envelope");
  return k;
}

std::optional<Splitting> split_idempotent(const FinCategory& c, std::size_t e) {
  if (e >= c.arrow_count() || !c.is_idempotent(e))
    throw Error(ErrorCode::not_idempotent, (e < c.arrow_count() ? c.arrow(e).name : std::string("arrow")) +
                                               " is not idempotent");
  const std::size_t a = c.arrow(e).dom;
  std::vector<Splitting> found;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (auto r : c.hom(a, x))
      for (auto s : c.hom(x, a))
        if (c.compose(s, r) == e && c.compose(r, s) == c.identity(x)) found.push_back({x, r, s});
  if (found.empty()) return std::nullopt;
  for (const auto& other : found)
    if (!c.find_iso(found.front().object, other.object))
      throw Error(ErrorCode::theorem_violation, "splittings of " + c.arrow(e).name + " through " +
                                                    c.object(found.front().object) + " and " +
                                                    c.object(other.object) + " are not isomorphic");
  return found.front();
}

std::optional<std::size_t> unsplit_idempotent(const FinCategory& c) {
  for (auto e : c.idempotents())
    if (!split_idempotent(c, e)) return e;
  return std::nullopt;
}

}  // namespace fintop
