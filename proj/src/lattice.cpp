#include "fintop/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fintop {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::invalid_input, "a lattice needs at least one element");
  if (leq.size() != n) throw Error(ErrorCode::invalid_input, "order matrix has the wrong number of rows");
  for (const auto& row : leq)
    if (row.size() != n) throw Error(ErrorCode::invalid_input, "order matrix is not square");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::invalid_input, "duplicate element label");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw Error(ErrorCode::invalid_input, "order is not reflexive at " + labels[i], {}, {i});
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw Error(ErrorCode::invalid_input, "order is not antisymmetric: " + labels[i] + ", " + labels[j], {},
                    {i, j});
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw Error(ErrorCode::invalid_input,
                      "order is not transitive: " + labels[i] + " <= " + labels[j] + " <= " + labels[k], {},
                      {i, j, k});
    }
  }

  FiniteLattice l;
  l.labels_ = std::move(labels);
  l.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l.leq_[i * n + j] = leq[i][j];
  l.meet_.assign(n * n, kNone);
  l.join_.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t lub = kNone;
      std::size_t glb = kNone;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[i][c] && leq[j][c] && (lub == kNone || leq[c][lub])) lub = c;
        if (leq[c][i] && leq[c][j] && (glb == kNone || leq[glb][c])) glb = c;
      }
      // the candidates must be comparable with every other bound
      for (std::size_t c = 0; c < n && lub != kNone; ++c)
        if (leq[i][c] && leq[j][c] && !leq[lub][c]) lub = kNone;
      for (std::size_t c = 0; c < n && glb != kNone; ++c)
        if (leq[c][i] && leq[c][j] && !leq[c][glb]) glb = kNone;
      if (lub == kNone)
        throw Error(ErrorCode::invalid_input, l.labels_[i] + " and " + l.labels_[j] + " have no join", {}, {i, j});
      if (glb == kNone)
        throw Error(ErrorCode::invalid_input, l.labels_[i] + " and " + l.labels_[j] + " have no meet", {}, {i, j});
      l.join_[i * n + j] = lub;
      l.meet_[i * n + j] = glb;
    }
  std::size_t top = 0;
  std::size_t bottom = 0;
  for (std::size_t i = 1; i < n; ++i) {
    top = l.join(top, i);
    bottom = l.meet(bottom, i);
  }
  l.top_ = top;
  l.bottom_ = bottom;
  return l;
}

FiniteLattice FiniteLattice::from_pairs(std::vector<std::string> labels,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::invalid_input, "order pair out of range");
    leq[lo][hi] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return from_order(std::move(labels), leq);
}

std::optional<std::size_t> FiniteLattice::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteLattice::join_all(const std::vector<std::size_t>& xs) const {
  std::size_t out = bottom_;
  for (auto x : xs) out = join(out, x);
  return out;
}

std::size_t FiniteLattice::meet_all(const std::vector<std::size_t>& xs) const {
  std::size_t out = top_;
  for (auto x : xs) out = meet(out, x);
  return out;
}

std::optional<std::array<std::size_t, 3>> FiniteLattice::distributivity_witness() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return std::array<std::size_t, 3>{x, y, z};
  return std::nullopt;
}

bool FiniteLattice::is_join_prime(std::size_t g) const {
  if (g == bottom_) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (leq(g, join(a, b)) && !leq(g, a) && !leq(g, b)) return false;
  return true;
}

bool FiniteLattice::is_alpha_generator(std::size_t g, Alpha alpha) const {
  switch (alpha) {
    case Alpha::zero: return true;
    case Alpha::one: return g != bottom_;
    case Alpha::omega: return is_join_prime(g);
    case Alpha::Omega: {
      std::vector<std::size_t> outside;
      for (std::size_t a = 0; a < size(); ++a)
        if (!leq(g, a)) outside.push_back(a);
      return !leq(g, join_all(outside));
    }
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < size() && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

std::string FiniteLattice::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (const auto& l : labels_) os << "  \"" << l << "\";\n";
  for (auto [lo, hi] : covering_pairs()) os << "  \"" << labels_[lo] << "\" -> \"" << labels_[hi] << "\";\n";
  os << "}\n";
  return os.str();
}

FiniteFrame FiniteFrame::validate(FiniteLattice lattice) {
  if (auto w = lattice.distributivity_witness()) {
    const auto [x, y, z] = *w;
    throw Error(ErrorCode::not_a_frame,
                "distributive law fails at x=" + lattice.label(x) + ", y=" + lattice.label(y) + ", z=" +
                    lattice.label(z) + ": x meet (y join z) = " + lattice.label(lattice.meet(x, lattice.join(y, z))) +
                    " but (x meet y) join (x meet z) = " +
                    lattice.label(lattice.join(lattice.meet(x, y), lattice.meet(x, z))),
                {}, {x, y, z});
  }
  return FiniteFrame(std::move(lattice));
}

std::optional<std::vector<std::size_t>> find_lattice_iso(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto height = [](const FiniteLattice& l, std::size_t i) {
    std::size_t below = 0, above = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
      below += l.leq(j, i);
      above += l.leq(i, j);
    }
    return std::make_pair(below, above);
  };
  std::vector<std::size_t> map(n, kNone);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || height(a, i) != height(b, c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.leq(j, i) == b.leq(map[j], c) && a.leq(i, j) == b.leq(c, map[j]);
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

LatticeMap lattice_map(FiniteLattice dom, FiniteLattice cod, std::vector<std::size_t> table) {
  if (table.size() != dom.size()) throw Error(ErrorCode::invalid_input, "map table has the wrong length");
  for (auto v : table)
    if (v >= cod.size()) throw Error(ErrorCode::invalid_input, "map value out of range");
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j)
      if (dom.leq(i, j) && !cod.leq(table[i], table[j]))
        throw Error(ErrorCode::invalid_input, "map is not monotone at " + dom.label(i) + " <= " + dom.label(j), {},
                    {i, j});
  return LatticeMap{std::move(dom), std::move(cod), std::move(table)};
}

bool preserves_finite_meets(const LatticeMap& f) {
  if (f(f.dom.top()) != f.cod.top()) return false;
  for (std::size_t i = 0; i < f.dom.size(); ++i)
    for (std::size_t j = 0; j < f.dom.size(); ++j)
      if (f(f.dom.meet(i, j)) != f.cod.meet(f(i), f(j))) return false;
  return true;
}

bool preserves_alpha_sups(const LatticeMap& f, Alpha alpha) {
  if (alpha == Alpha::zero) return true;
  if (f(f.dom.bottom()) != f.cod.bottom()) return false;
  if (alpha == Alpha::one) return true;
  for (std::size_t i = 0; i < f.dom.size(); ++i)
    for (std::size_t j = 0; j < f.dom.size(); ++j)
      if (f(f.dom.join(i, j)) != f.cod.join(f(i), f(j))) return false;
  return true;
}

std::optional<Alpha> alpha_class(const LatticeMap& f) {
  if (!preserves_finite_meets(f)) return std::nullopt;
  Alpha best = Alpha::zero;
  for (auto a : kAllAlphas)
    if (preserves_alpha_sups(f, a)) best = a;
  return best;
}

LatticeMorphism lattice_morphism(FiniteLattice dom, FiniteLattice cod, std::vector<std::size_t> table, Alpha alpha) {
  LatticeMap m = lattice_map(std::move(dom), std::move(cod), std::move(table));
  if (!preserves_finite_meets(m)) throw Error(ErrorCode::invalid_input, "map does not preserve finite meets");
  if (!preserves_alpha_sups(m, alpha))
    throw Error(ErrorCode::invalid_input, "map does not preserve suprema for alpha=" + std::string(to_string(alpha)));
  LatticeMorphism out;
  static_cast<LatticeMap&>(out) = std::move(m);
  out.alpha = alpha;
  return out;
}

std::vector<std::vector<std::size_t>> all_lattice_morphisms(const FiniteLattice& dom, const FiniteLattice& cod,
                                                            Alpha alpha) {
  const std::size_t n = dom.size();
  const bool joins = alpha == Alpha::omega || alpha == Alpha::Omega;
  std::vector<std::size_t> table(n, kNone);
  std::vector<std::vector<std::size_t>> out;

  // Every constraint is checked once all the elements it mentions are
  // assigned, and each time one of them is the element just assigned.
  auto consistent = [&](std::size_t k) {
    auto known = [&](std::size_t i) { return table[i] != kNone; };
    if (k == dom.top() && table[k] != cod.top()) return false;
    if (alpha != Alpha::zero && k == dom.bottom() && table[k] != cod.bottom()) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!known(i)) continue;
      if (dom.leq(i, k) && !cod.leq(table[i], table[k])) return false;
      if (dom.leq(k, i) && !cod.leq(table[k], table[i])) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (!known(j)) continue;
        const std::size_t m = dom.meet(i, j);
        if ((i == k || j == k || m == k) && known(m) && table[m] != cod.meet(table[i], table[j])) return false;
        if (!joins) continue;
        const std::size_t s = dom.join(i, j);
        if ((i == k || j == k || s == k) && known(s) && table[s] != cod.join(table[i], table[j])) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(table);
      return;
    }
    for (std::size_t v = 0; v < cod.size(); ++v) {
      table[k] = v;
      if (consistent(k)) extend(k + 1);
    }
    table[k] = kNone;
  };
  extend(0);
  return out;
}

}  // namespace fintop
