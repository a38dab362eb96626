#include "forms/ring.hpp"

#include <algorithm>
#include <sstream>

namespace forms {

RingTable make_ring_table(int n, std::vector<int> add, std::vector<int> mul, int one) {
  if (n <= 0) fail(Errc::InvalidRing, "order must be positive");
  if (static_cast<int>(add.size()) != n * n || static_cast<int>(mul.size()) != n * n)
    fail(Errc::InvalidRing, "tables must have " + std::to_string(n * n) + " entries");
  for (int v : add)
    if (v < 0 || v >= n) fail(Errc::InvalidRing, "addition entry out of range");
  for (int v : mul)
    if (v < 0 || v >= n) fail(Errc::InvalidRing, "multiplication entry out of range");
  if (one < 0 || one >= n) fail(Errc::InvalidRing, "identity index out of range");

  RingTable t;
  t.n = n;
  t.add = std::move(add);
  t.mul = std::move(mul);
  t.one = one;
  for (int a = 0; a < n; ++a)
    if (t.plus(0, a) != a || t.plus(a, 0) != a)
      fail(Errc::InvalidRing, "additive identity fails at " + std::to_string(a));
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0);
    for (int b = 0; b < n; ++b) row[t.plus(a, b)] = 1;
    if (!std::all_of(row.begin(), row.end(), [](char c) { return c != 0; }))
      fail(Errc::InvalidRing, "addition row " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.plus(a, b) != t.plus(b, a))
        fail(Errc::InvalidRing, "addition is not commutative at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      for (int c = 0; c < n; ++c)
        if (t.plus(t.plus(a, b), c) != t.plus(a, t.plus(b, c)))
          fail(Errc::InvalidRing, "addition associativity fails");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (t.times(t.times(a, b), c) != t.times(a, t.times(b, c)))
          fail(Errc::InvalidRing, "multiplication associativity fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
        if (t.times(a, t.plus(b, c)) != t.plus(t.times(a, b), t.times(a, c)) ||
            t.times(t.plus(a, b), c) != t.plus(t.times(a, c), t.times(b, c)))
          fail(Errc::InvalidRing, "distributivity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
      }
  for (int a = 0; a < n; ++a)
    if (t.times(one, a) != a || t.times(a, one) != a)
      fail(Errc::InvalidRing, "multiplicative identity fails at " + std::to_string(a));
  t.neg.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.plus(a, b) == 0) {
        t.neg[a] = b;
        break;
      }
  return t;
}

ObjectId RingModel::install(const std::string& name, RingTable t) const {
  ObjectId id = add_object_info(name, t.n);
  tables_.push_back(std::move(t));
  return id;
}

ObjectId RingModel::add_ring(const std::string& name, int n, std::vector<int> add,
                             std::vector<int> mul, int one) {
  if (n > max_order_)
    fail(Errc::OutOfRange, name + " has order " + std::to_string(n) + ", bound is " +
                               std::to_string(max_order_));
  return install(name, make_ring_table(n, std::move(add), std::move(mul), one));
}

ObjectId RingModel::add_zmod(const std::string& name, int n) {
  std::vector<int> add(n * n), mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  return add_ring(name, n, std::move(add), std::move(mul), n == 1 ? 0 : 1);
}

ObjectId RingModel::add_product(const std::string& name, ObjectId a, ObjectId b) {
  const RingTable& ta = tables_[a];
  const RingTable& tb = tables_[b];
  int n = ta.n * tb.n;
  auto pack = [&](int x, int y) { return x * tb.n + y; };
  std::vector<int> add(n * n), mul(n * n);
  for (int x1 = 0; x1 < ta.n; ++x1)
    for (int y1 = 0; y1 < tb.n; ++y1)
      for (int x2 = 0; x2 < ta.n; ++x2)
        for (int y2 = 0; y2 < tb.n; ++y2) {
          int p = pack(x1, y1), q = pack(x2, y2);
          add[p * n + q] = pack(ta.plus(x1, x2), tb.plus(y1, y2));
          mul[p * n + q] = pack(ta.times(x1, x2), tb.times(y1, y2));
        }
  return add_ring(name, n, std::move(add), std::move(mul), pack(ta.one, tb.one));
}

const RingTable& RingModel::table(ObjectId r) const {
  check_object(r);
  return tables_[r];
}

int RingModel::op(ObjectId g, int a, int b) const { return tables_[g].plus(a, b); }

bool RingModel::map_is_valid(ObjectId x, ObjectId y, const std::vector<int>& map) const {
  const RingTable& tx = tables_[x];
  const RingTable& ty = tables_[y];
  if (map[tx.one] != ty.one) return false;
  for (int a = 0; a < tx.n; ++a)
    for (int b = 0; b < tx.n; ++b) {
      if (map[tx.plus(a, b)] != ty.plus(map[a], map[b])) return false;
      if (map[tx.times(a, b)] != ty.times(map[a], map[b])) return false;
    }
  return true;
}

bool RingModel::payload_is_normal(ObjectId g, const ElemSet& s) const {
  const RingTable& t = tables_[g];
  for (int r = 0; r < t.n; ++r)
    for (int m : s)
      if (!set_contains(s, t.times(r, m)) || !set_contains(s, t.times(m, r))) return false;
  return true;
}

bool RingModel::payload_is_conormal(ObjectId g, const ElemSet& s) const {
  const RingTable& t = tables_[g];
  if (!set_contains(s, t.one)) return false;
  for (int a : s)
    for (int b : s)
      if (!set_contains(s, t.times(a, b))) return false;
  return true;
}

ObjectId RingModel::build_quotient_object(ObjectId g, const ElemSet& s,
                                          const std::vector<ElemSet>& cosets,
                                          const std::vector<int>& index_of) const {
  const RingTable& t = tables_[g];
  int q = static_cast<int>(cosets.size());
  std::vector<int> qadd(q * q), qmul(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      qadd[i * q + j] = index_of[t.plus(cosets[i][0], cosets[j][0])];
      qmul[i * q + j] = index_of[t.times(cosets[i][0], cosets[j][0])];
    }
  return install(object_name(g) + "/" + set_repr(s),
                 make_ring_table(q, std::move(qadd), std::move(qmul), index_of[t.one]));
}

ObjectId RingModel::build_carrier_object(ObjectId g, const ElemSet& s) const {
  const RingTable& t = tables_[g];
  int m = static_cast<int>(s.size());
  auto idx = [&](int e) {
    return static_cast<int>(std::lower_bound(s.begin(), s.end(), e) - s.begin());
  };
  std::vector<int> cadd(m * m), cmul(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cadd[i * m + j] = idx(t.plus(s[i], s[j]));
      cmul[i * m + j] = idx(t.times(s[i], s[j]));
    }
  return install(object_name(g) + ":" + set_repr(s),
                 make_ring_table(m, std::move(cadd), std::move(cmul), idx(t.one)));
}

std::pair<bool, bool> RingModel::classify_subobject(ObjectId r, const SubObject& s) const {
  check_parent(s, r, "classify");
  if (!is_subobject(s))
    fail(Errc::NotAdditiveSubgroup, s.repr() + " is not an additive subgroup of " + object_name(r));
  return {payload_is_normal(r, s.elems), payload_is_conormal(r, s.elems)};
}

std::pair<ObjectId, MorphId> RingModel::quotient_ring(ObjectId r, const SubObject& ideal) const {
  check_parent(ideal, r, "quotient");
  if (!is_subobject(ideal))
    fail(Errc::NotAdditiveSubgroup,
         ideal.repr() + " is not an additive subgroup of " + object_name(r));
  if (!payload_is_normal(r, ideal.elems))
    fail(Errc::NotAnIdeal, ideal.repr() + " is not a two-sided ideal of " + object_name(r));
  MorphId pi = canonical_projection(ideal);
  return {cod(pi), pi};
}

}  // namespace forms
