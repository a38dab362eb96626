#include "forms/element_model.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace forms {

bool ElementModel::has_object(ObjectId g) const {
  return g >= 0 && g < static_cast<int>(objects_.size());
}

void ElementModel::check_object(ObjectId g) const {
  if (!has_object(g)) fail(Errc::Internal, "unknown object id " + std::to_string(g));
}

std::string ElementModel::object_name(ObjectId g) const {
  check_object(g);
  return objects_[g].name;
}

int ElementModel::object_order(ObjectId g) const {
  check_object(g);
  return objects_[g].order;
}

ObjectId ElementModel::add_object_info(const std::string& name, int order) const {
  objects_.push_back(ObjectInfo{name, order});
  return static_cast<int>(objects_.size()) - 1;
}

void ElementModel::check_parent(const SubObject& s, ObjectId g, const char* what) const {
  if (s.parent != g)
    fail(Errc::ParentMismatch, std::string(what) + ": subobject of " +
                                   object_name(s.parent) + " used at " + object_name(g));
}

// -- lattice -----------------------------------------------------------

SubObject ElementModel::top(ObjectId g) const {
  check_object(g);
  ElemSet all(objects_[g].order);
  std::iota(all.begin(), all.end(), 0);
  return SubObject(g, std::move(all));
}

SubObject ElementModel::bottom(ObjectId g) const {
  check_object(g);
  return SubObject(g, {0});
}

ElemSet ElementModel::close(ObjectId g, ElemSet seed) const {
  int n = objects_[g].order;
  std::vector<char> in(n, 0);
  ElemSet members{0};
  in[0] = 1;
  for (int e : seed) {
    if (e < 0 || e >= n)
      fail(Errc::OutOfRange, "element " + std::to_string(e) + " outside " + object_name(g));
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  }
  // Live-bound sweep: every unordered pair is visited once the later element
  // is reached, and both product orders are added, so one pass closes the set.
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (int c : {op(g, members[i], members[j]), op(g, members[j], members[i])}) {
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
    }
  }
  return normalized(std::move(members));
}

bool ElementModel::is_subobject(const SubObject& s) const {
  if (!has_object(s.parent)) return false;
  int n = objects_[s.parent].order;
  if (s.elems.empty() || !set_contains(s.elems, 0)) return false;
  for (int e : s.elems)
    if (e < 0 || e >= n) return false;
  for (int a : s.elems)
    for (int b : s.elems)
      if (!set_contains(s.elems, op(s.parent, a, b))) return false;
  return true;
}

bool ElementModel::leq(const SubObject& a, const SubObject& b) const {
  check_parent(a, b.parent, "leq");
  return is_subset(a.elems, b.elems);
}

SubObject ElementModel::meet(const SubObject& a, const SubObject& b) const {
  check_parent(a, b.parent, "meet");
  return SubObject(a.parent, set_intersect(a.elems, b.elems));
}

SubObject ElementModel::join(const SubObject& a, const SubObject& b) const {
  check_parent(a, b.parent, "join");
  return SubObject(a.parent, close(a.parent, set_union(a.elems, b.elems)));
}

SubObject ElementModel::generated_subobject(ObjectId g, const ElemSet& seed) const {
  check_object(g);
  return SubObject(g, close(g, seed));
}

std::vector<SubObject> ElementModel::subobjects(ObjectId g) const {
  check_object(g);
  if (auto it = subobject_cache_.find(g); it != subobject_cache_.end()) return it->second;
  std::vector<ElemSet> found{close(g, {})};
  std::deque<size_t> work{0};
  int n = objects_[g].order;
  auto known = [&](const ElemSet& s) {
    return std::find(found.begin(), found.end(), s) != found.end();
  };
  while (!work.empty()) {
    ElemSet h = found[work.front()];
    work.pop_front();
    for (int e = 1; e < n; ++e) {
      if (set_contains(h, e)) continue;
      ElemSet k = close(g, set_union(h, {e}));
      if (!known(k)) {
        found.push_back(k);
        work.push_back(found.size() - 1);
      }
    }
  }
  std::vector<SubObject> out;
  out.reserve(found.size());
  for (auto& s : found) out.emplace_back(g, std::move(s));
  std::sort(out.begin(), out.end());
  subobject_cache_[g] = out;
  return out;
}

// -- morphisms -----------------------------------------------------------

const ElementModel::MorphData& ElementModel::data(MorphId f) const {
  if (f < 0 || f >= static_cast<int>(morphs_.size()))
    fail(Errc::Internal, "unknown morphism id " + std::to_string(f));
  return morphs_[f];
}

ObjectId ElementModel::dom(MorphId f) const { return data(f).dom; }
ObjectId ElementModel::cod(MorphId f) const { return data(f).cod; }
const std::vector<int>& ElementModel::morph_map(MorphId f) const { return data(f).map; }

bool ElementModel::map_is_hom(ObjectId x, ObjectId y, const std::vector<int>& map) const {
  check_object(x);
  check_object(y);
  if (static_cast<int>(map.size()) != objects_[x].order) return false;
  for (int v : map)
    if (v < 0 || v >= objects_[y].order) return false;
  return map_is_valid(x, y, map);
}

MorphId ElementModel::register_morphism(ObjectId d, ObjectId c, std::vector<int> map) const {
  check_object(d);
  check_object(c);
  auto key = std::make_tuple(d, c, map);
  if (auto it = morph_ids_.find(key); it != morph_ids_.end()) return it->second;
  if (static_cast<int>(map.size()) != objects_[d].order)
    fail(Errc::InvalidHom, "map has " + std::to_string(map.size()) + " entries, domain " +
                               object_name(d) + " has order " + std::to_string(objects_[d].order));
  for (int v : map)
    if (v < 0 || v >= objects_[c].order)
      fail(Errc::InvalidHom, "map value " + std::to_string(v) + " outside " + object_name(c));
  if (!map_is_valid(d, c, map))
    fail(Errc::InvalidHom, "map does not preserve the structure of " + object_name(d));
  morphs_.push_back(MorphData{d, c, std::move(map)});
  MorphId id = static_cast<int>(morphs_.size()) - 1;
  morph_ids_.emplace(std::move(key), id);
  return id;
}

MorphId ElementModel::identity(ObjectId g) const {
  check_object(g);
  if (auto it = identities_.find(g); it != identities_.end()) return it->second;
  std::vector<int> map(objects_[g].order);
  std::iota(map.begin(), map.end(), 0);
  MorphId id = register_morphism(g, g, std::move(map));
  identities_[g] = id;
  return id;
}

MorphId ElementModel::compose(MorphId after, MorphId before) const {
  const auto& f = data(after);
  const auto& g = data(before);
  if (g.cod != f.dom)
    fail(Errc::Internal, "compose endpoint mismatch: " + morph_repr(before) + " then " + morph_repr(after));
  std::vector<int> map(g.map.size());
  for (size_t i = 0; i < g.map.size(); ++i) map[i] = f.map[g.map[i]];
  return register_morphism(g.dom, f.cod, std::move(map));
}

SubObject ElementModel::direct_image(MorphId f, const SubObject& a) const {
  const auto& d = data(f);
  check_parent(a, d.dom, "direct image");
  ElemSet out;
  out.reserve(a.elems.size());
  for (int e : a.elems) out.push_back(d.map[e]);
  return SubObject(d.cod, std::move(out));
}

SubObject ElementModel::inverse_image(MorphId f, const SubObject& b) const {
  const auto& d = data(f);
  check_parent(b, d.cod, "inverse image");
  ElemSet out;
  for (int e = 0; e < static_cast<int>(d.map.size()); ++e)
    if (set_contains(b.elems, d.map[e])) out.push_back(e);
  return SubObject(d.dom, std::move(out));
}

bool ElementModel::is_embedding(MorphId f) const {
  const auto& d = data(f);
  std::vector<char> seen(objects_[d.cod].order, 0);
  for (int v : d.map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool ElementModel::is_projection(MorphId f) const {
  const auto& d = data(f);
  std::vector<char> seen(objects_[d.cod].order, 0);
  for (int v : d.map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

MorphId ElementModel::invert(MorphId f) const {
  const auto& d = data(f);
  if (!is_embedding(f))
    fail(Errc::NotAnIsomorphism, "kernel " + kernel(f).repr() + " != " + bottom(d.dom).repr());
  if (!is_projection(f))
    fail(Errc::NotAnIsomorphism, "image " + image(f).repr() + " != top of " + object_name(d.cod));
  std::vector<int> inv(d.map.size());
  for (size_t i = 0; i < d.map.size(); ++i) inv[d.map[i]] = static_cast<int>(i);
  return register_morphism(d.cod, d.dom, std::move(inv));
}

// -- normality and canonical providers ------------------------------------

bool ElementModel::is_normal(const SubObject& s) const {
  if (!is_subobject(s)) return false;
  return payload_is_normal(s.parent, s.elems);
}

bool ElementModel::is_conormal(const SubObject& s) const {
  if (!is_subobject(s)) return false;
  return payload_is_conormal(s.parent, s.elems);
}

void ElementModel::coset_partition(ObjectId g, const ElemSet& s, std::vector<ElemSet>& cosets,
                                   std::vector<int>& index_of) const {
  int n = objects_[g].order;
  cosets.clear();
  index_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (index_of[e] >= 0) continue;
    ElemSet block;
    block.reserve(s.size());
    for (int x : s) block.push_back(op(g, e, x));
    block = normalized(std::move(block));
    int idx = static_cast<int>(cosets.size());
    for (int x : block) index_of[x] = idx;
    cosets.push_back(std::move(block));
  }
}

MorphId ElementModel::canonical_embedding(const SubObject& s) const {
  if (!is_subobject(s))
    fail(Errc::InvalidSubobject, s.repr() + " is not a subobject of " + object_name(s.parent));
  if (!payload_is_conormal(s.parent, s.elems))
    fail(Errc::NotConormal, s.repr() + " is not conormal in " + object_name(s.parent));
  auto key = std::make_pair(s.parent, s.elems);
  if (auto it = canonical_embeddings_.find(key); it != canonical_embeddings_.end())
    return it->second;
  MorphId id;
  if (static_cast<int>(s.elems.size()) == objects_[s.parent].order) {
    id = identity(s.parent);  // ι_⊤ = 1_G exactly
  } else {
    ObjectId carrier = build_carrier_object(s.parent, s.elems);
    id = register_morphism(carrier, s.parent, s.elems);
  }
  canonical_embeddings_[key] = id;
  return id;
}

MorphId ElementModel::canonical_projection(const SubObject& s) const {
  if (!is_subobject(s))
    fail(Errc::InvalidSubobject, s.repr() + " is not a subobject of " + object_name(s.parent));
  if (!payload_is_normal(s.parent, s.elems))
    fail(Errc::NotNormal, s.repr() + " is not normal in " + object_name(s.parent));
  auto key = std::make_pair(s.parent, s.elems);
  if (auto it = canonical_projections_.find(key); it != canonical_projections_.end())
    return it->second;
  MorphId id;
  if (s.elems.size() == 1) {
    id = identity(s.parent);  // π_1 = 1_G exactly
  } else {
    std::vector<ElemSet> cosets;
    std::vector<int> index_of;
    coset_partition(s.parent, s.elems, cosets, index_of);
    ObjectId quot = build_quotient_object(s.parent, s.elems, cosets, index_of);
    id = register_morphism(s.parent, quot, index_of);
  }
  canonical_projections_[key] = id;
  return id;
}

// -- mediators -------------------------------------------------------------

MorphId ElementModel::mediate_through_projection(MorphId p, MorphId g) const {
  const auto& dp = data(p);
  const auto& dg = data(g);
  if (dp.dom != dg.dom) fail(Errc::Internal, "mediator: projection and morphism domains differ");
  if (!is_projection(p)) fail(Errc::Internal, "mediator: not a projection: " + morph_repr(p));
  std::vector<int> v(objects_[dp.cod].order, -1);
  for (size_t x = 0; x < dp.map.size(); ++x) {
    int q = dp.map[x];
    if (v[q] == -1) {
      v[q] = dg.map[x];
    } else if (v[q] != dg.map[x]) {
      fail(Errc::Internal, "mediator: kernel of " + morph_repr(p) + " not below kernel of " + morph_repr(g));
    }
  }
  return register_morphism(dp.cod, dg.cod, std::move(v));
}

MorphId ElementModel::mediate_through_embedding(MorphId m, MorphId f) const {
  const auto& dm = data(m);
  const auto& df = data(f);
  if (dm.cod != df.cod) fail(Errc::Internal, "mediator: embedding and morphism codomains differ");
  if (!is_embedding(m)) fail(Errc::Internal, "mediator: not an embedding: " + morph_repr(m));
  std::vector<int> back(objects_[dm.cod].order, -1);
  for (size_t i = 0; i < dm.map.size(); ++i) back[dm.map[i]] = static_cast<int>(i);
  std::vector<int> u(df.map.size());
  for (size_t x = 0; x < df.map.size(); ++x) {
    int pre = back[df.map[x]];
    if (pre == -1)
      fail(Errc::Internal, "mediator: image of " + morph_repr(f) + " not below image of " + morph_repr(m));
    u[x] = pre;
  }
  return register_morphism(df.dom, dm.dom, std::move(u));
}

// -- hom enumeration ---------------------------------------------------------

ElemSet ElementModel::greedy_generators(ObjectId g) const {
  if (auto it = generator_cache_.find(g); it != generator_cache_.end()) return it->second;
  int n = objects_[g].order;
  ElemSet gens;
  ElemSet cl = close(g, {});
  while (static_cast<int>(cl.size()) < n) {
    int pick = -1;
    for (int e = 0; e < n; ++e)
      if (!set_contains(cl, e)) {
        pick = e;
        break;
      }
    gens.push_back(pick);
    cl = close(g, set_union(cl, {pick}));
  }
  generator_cache_[g] = gens;
  return gens;
}

std::vector<MorphId> ElementModel::enumerate_homs(ObjectId x, ObjectId y) const {
  check_object(x);
  check_object(y);
  auto key = std::make_pair(x, y);
  if (auto it = hom_cache_.find(key); it != hom_cache_.end()) return it->second;

  int nx = objects_[x].order;
  int ny = objects_[y].order;
  ElemSet gens = greedy_generators(x);
  int k = static_cast<int>(gens.size());

  // Express every element of x as a word in the generators via one BFS;
  // discovery order guarantees parents are mapped before children.
  std::vector<int> via_elem(nx, -1), via_gen(nx, -1), disc{0};
  {
    std::vector<char> seen(nx, 0);
    seen[0] = 1;
    for (size_t head = 0; head < disc.size(); ++head) {
      int a = disc[head];
      for (int gi = 0; gi < k; ++gi) {
        int b = op(x, a, gens[gi]);
        if (!seen[b]) {
          seen[b] = 1;
          via_elem[b] = a;
          via_gen[b] = gi;
          disc.push_back(b);
        }
      }
    }
  }

  std::vector<std::vector<int>> maps;
  std::vector<int> img(k, 0);
  while (true) {
    std::vector<int> map(nx, -1);
    map[0] = 0;
    for (int e : disc) {
      if (e == 0) continue;
      map[e] = op(y, map[via_elem[e]], img[via_gen[e]]);
    }
    if (map_is_valid(x, y, map)) maps.push_back(std::move(map));
    // odometer over generator images
    int pos = k - 1;
    while (pos >= 0 && img[pos] == ny - 1) img[pos--] = 0;
    if (pos < 0) break;
    ++img[pos];
  }
  std::sort(maps.begin(), maps.end());
  std::vector<MorphId> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(register_morphism(x, y, std::move(m)));
  hom_cache_[key] = out;
  return out;
}

}  // namespace forms
