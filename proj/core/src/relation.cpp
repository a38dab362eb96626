#include "forms/relation.hpp"

#include <algorithm>
#include <sstream>

namespace forms {

bool Relation::is_total() const {
  std::vector<char> hit(from_order, 0);
  for (auto& [a, b] : pairs) hit[a] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Relation::is_single_valued() const {
  std::vector<char> hit(from_order, 0);
  for (auto& [a, b] : pairs) {
    if (hit[a]) return false;
    hit[a] = 1;
  }
  return true;
}

std::vector<int> Relation::as_map() const {
  std::vector<int> map(from_order, -1);
  for (auto& [a, b] : pairs) map[a] = b;
  return map;
}

std::string Relation::repr() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ',';
    os << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  os << '}';
  return os.str();
}

Relation relation_oracle(const Model& m, const Zigzag& z) {
  if (!m.is_element_level())
    fail(Errc::ModelCapability, "relation oracle needs an element-level model");
  int n0 = m.object_order(z.initial());
  // rel[a] = set of current-node elements related to a ∈ X0
  std::vector<std::vector<char>> rel(n0, std::vector<char>(n0, 0));
  for (int a = 0; a < n0; ++a) rel[a][a] = 1;
  for (const Step& st : z.steps()) {
    const std::vector<int>& map = m.morph_map(st.morph);
    int nd = m.object_order(m.dom(st.morph));
    int nc = m.object_order(m.cod(st.morph));
    int nn = st.dir == Dir::Fwd ? nc : nd;
    for (int a = 0; a < n0; ++a) {
      std::vector<char> next(nn, 0);
      if (st.dir == Dir::Fwd) {
        for (int x = 0; x < nd; ++x)
          if (rel[a][x]) next[map[x]] = 1;
      } else {
        for (int x = 0; x < nd; ++x)
          if (rel[a][map[x]]) next[x] = 1;
      }
      rel[a] = std::move(next);
    }
  }
  Relation out;
  out.from = z.initial();
  out.to = z.final();
  out.from_order = n0;
  out.to_order = m.object_order(z.final());
  for (int a = 0; a < n0; ++a)
    for (int b = 0; b < out.to_order; ++b)
      if (rel[a][b]) out.pairs.emplace_back(a, b);
  return out;
}

bool relation_is_hom(const Model& m, const Relation& r) {
  if (!r.is_function()) return false;
  return m.map_is_hom(r.from, r.to, r.as_map());
}

}  // namespace forms
