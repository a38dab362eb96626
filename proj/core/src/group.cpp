#include "forms/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace forms {

GroupTable make_group_table(int n, std::vector<int> table) {
  if (n <= 0) fail(Errc::InvalidTable, "order must be positive");
  if (static_cast<int>(table.size()) != n * n)
    fail(Errc::InvalidTable, "expected " + std::to_string(n * n) + " entries, got " +
                                 std::to_string(table.size()));
  for (int v : table)
    if (v < 0 || v >= n) fail(Errc::InvalidTable, "entry " + std::to_string(v) + " out of range");
  GroupTable t;
  t.n = n;
  t.table = std::move(table);
  for (int a = 0; a < n; ++a) {
    if (t.at(0, a) != a || t.at(a, 0) != a)
      fail(Errc::InvalidTable, "identity law fails at element " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[t.at(a, b)] = 1;
      col[t.at(b, a)] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!row[v] || !col[v])
        fail(Errc::InvalidTable, "row/column " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
          fail(Errc::InvalidTable, "associativity fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")");
  t.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (t.at(a, b) == 0 && t.at(b, a) == 0) {
        t.inverse[a] = b;
        break;
      }
    if (t.inverse[a] == -1)
      fail(Errc::InvalidTable, "element " + std::to_string(a) + " has no inverse");
  }
  return t;
}

ObjectId GroupModel::install(const std::string& name, GroupTable t) const {
  ObjectId id = add_object_info(name, t.n);
  tables_.push_back(std::move(t));
  return id;
}

void GroupModel::check_bound(const std::string& name, int order) const {
  if (order > max_order_)
    fail(Errc::OutOfRange, name + " has order " + std::to_string(order) + ", bound is " +
                               std::to_string(max_order_));
}

const GroupTable& GroupModel::table(ObjectId g) const {
  check_object(g);
  return tables_[g];
}

ObjectId GroupModel::add_cyclic(const std::string& name, int k) {
  if (k < 1) fail(Errc::OutOfRange, "cyclic order must be >= 1");
  check_bound(name, k);
  std::vector<int> t(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = (a + b) % k;
  return install(name, make_group_table(k, std::move(t)));
}

ObjectId GroupModel::add_klein(const std::string& name) {
  check_bound(name, 4);
  auto bits = [](int x) { return std::make_pair(x >> 1, x & 1); };
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto [a1, a0] = bits(a);
      auto [b1, b0] = bits(b);
      t[a * 4 + b] = ((a1 ^ b1) << 1) | (a0 ^ b0);
    }
  return install(name, make_group_table(4, std::move(t)));
}

ObjectId GroupModel::add_dihedral(const std::string& name, int k) {
  if (k < 3) fail(Errc::OutOfRange, "dihedral parameter must be >= 3");
  check_bound(name, 2 * k);
  // Element i < k acts on vertices as v -> v+i; element k+i as v -> k-v after v -> v+i.
  auto perm = [&](int e) {
    std::vector<int> p(k);
    for (int v = 0; v < k; ++v) {
      int w = (v + (e % k)) % k;
      if (e >= k) w = (k - w) % k;
      p[v] = w;
    }
    return p;
  };
  std::vector<std::vector<int>> elems(2 * k);
  for (int e = 0; e < 2 * k; ++e) elems[e] = perm(e);
  auto find = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  std::vector<int> t(4 * k * k);
  for (int a = 0; a < 2 * k; ++a)
    for (int b = 0; b < 2 * k; ++b) {
      std::vector<int> p(k);
      for (int v = 0; v < k; ++v) p[v] = elems[a][elems[b][v]];
      t[a * 2 * k + b] = find(p);
    }
  return install(name, make_group_table(2 * k, std::move(t)));
}

ObjectId GroupModel::add_symmetric(const std::string& name, int k) {
  if (k < 1) fail(Errc::OutOfRange, "symmetric parameter must be >= 1");
  long order = 1;
  for (int i = 2; i <= k; ++i) order *= i;
  check_bound(name, static_cast<int>(order));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto moved = [&](const std::vector<int>& q) {
    int m = 0;
    for (int i = 0; i < k; ++i)
      if (q[i] != i) ++m;
    return m;
  };
  std::stable_sort(perms.begin(), perms.end(), [&](const auto& a, const auto& b) {
    int ma = moved(a), mb = moved(b);
    if (ma != mb) return ma < mb;
    return a < b;
  });
  int n = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> q(k);
      for (int v = 0; v < k; ++v) q[v] = perms[a][perms[b][v]];
      t[a * n + b] = find(q);
    }
  return install(name, make_group_table(n, std::move(t)));
}

ObjectId GroupModel::add_quaternion(const std::string& name) {
  check_bound(name, 8);
  // index = 2*axis + sign with axes e,i,j,k; i*j=k, j*k=i, k*i=j, squares = -1
  static const int mul_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, sa = a % 2, bx = b / 2, sb = b % 2;
      int cx = mul_axis[ax][bx];
      int neg = (sgn[ax][bx] < 0) ? 1 : 0;
      int sc = (sa + sb + neg) % 2;
      t[a * 8 + b] = cx * 2 + sc;
    }
  return install(name, make_group_table(8, std::move(t)));
}

ObjectId GroupModel::add_table(const std::string& name, int n, std::vector<int> table) {
  return install(name, make_group_table(n, std::move(table)));
}

int GroupModel::op(ObjectId g, int a, int b) const { return tables_[g].at(a, b); }

bool GroupModel::map_is_valid(ObjectId x, ObjectId y, const std::vector<int>& map) const {
  const GroupTable& tx = tables_[x];
  const GroupTable& ty = tables_[y];
  for (int a = 0; a < tx.n; ++a)
    for (int b = 0; b < tx.n; ++b)
      if (map[tx.at(a, b)] != ty.at(map[a], map[b])) return false;
  return true;
}

bool GroupModel::payload_is_normal(ObjectId g, const ElemSet& s) const {
  const GroupTable& t = tables_[g];
  for (int x = 0; x < t.n; ++x)
    for (int m : s)
      if (!set_contains(s, t.at(t.at(x, m), t.inverse[x]))) return false;
  return true;
}

bool GroupModel::payload_is_conormal(ObjectId, const ElemSet&) const {
  return true;  // every subgroup is the image of its inclusion
}

ObjectId GroupModel::build_quotient_object(ObjectId g, const ElemSet& s,
                                           const std::vector<ElemSet>& cosets,
                                           const std::vector<int>& index_of) const {
  const GroupTable& t = tables_[g];
  int q = static_cast<int>(cosets.size());
  std::vector<int> qt(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) qt[i * q + j] = index_of[t.at(cosets[i][0], cosets[j][0])];
  return install(object_name(g) + "/" + set_repr(s), make_group_table(q, std::move(qt)));
}

ObjectId GroupModel::build_carrier_object(ObjectId g, const ElemSet& s) const {
  const GroupTable& t = tables_[g];
  int m = static_cast<int>(s.size());
  auto idx = [&](int e) {
    return static_cast<int>(std::lower_bound(s.begin(), s.end(), e) - s.begin());
  };
  std::vector<int> ct(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ct[i * m + j] = idx(t.at(s[i], s[j]));
  return install(object_name(g) + ":" + set_repr(s), make_group_table(m, std::move(ct)));
}

std::pair<ObjectId, MorphId> GroupModel::quotient_group(ObjectId g, const SubObject& n) const {
  check_parent(n, g, "quotient");
  MorphId pi = canonical_projection(n);
  return {cod(pi), pi};
}

}  // namespace forms
