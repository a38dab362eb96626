#include "forms/normality.hpp"

namespace forms {

bool normal_to(const Model& m, const SubObject& b, const SubObject& a) {
  if (b.parent != a.parent)
    fail(Errc::ParentMismatch, "normality relation across different parents");
  if (!m.leq(b, a)) return false;
  if (!m.is_conormal(a)) return false;
  MorphId ia = m.canonical_embedding(a);
  return m.is_normal(m.inverse_image(ia, b));
}

bool conormal_to(const Model& m, const SubObject& a, const SubObject& b) {
  if (b.parent != a.parent)
    fail(Errc::ParentMismatch, "normality relation across different parents");
  if (!m.is_normal(b)) return false;
  if (!m.leq(b, a)) return false;
  MorphId pb = m.canonical_projection(b);
  return m.is_conormal(m.direct_image(pb, a));
}

ObjectId subquotient(const Model& m, const SubObject& a, const SubObject& b) {
  if (!normal_to(m, b, a))
    fail(Errc::NormalityViolation,
         b.repr() + " is not normal to " + a.repr() + " in " + m.object_name(a.parent));
  MorphId ia = m.canonical_embedding(a);
  MorphId pi = m.canonical_projection(m.inverse_image(ia, b));
  return m.cod(pi);
}

ObjectId coquotient(const Model& m, const SubObject& b, const SubObject& a) {
  if (!conormal_to(m, a, b))
    fail(Errc::NormalityViolation,
         a.repr() + " is not conormal to " + b.repr() + " in " + m.object_name(a.parent));
  MorphId pb = m.canonical_projection(b);
  MorphId io = m.canonical_embedding(m.direct_image(pb, a));
  return m.dom(io);
}

}  // namespace forms
