#include "forms/model.hpp"

#include <sstream>

namespace forms {

const std::vector<int>& Model::morph_map(MorphId) const {
  fail(Errc::ModelCapability, "model has no element-level morphism maps");
}

bool Model::map_is_hom(ObjectId, ObjectId, const std::vector<int>&) const {
  fail(Errc::ModelCapability, "model has no element-level morphism maps");
}

SubObject Model::kernel(MorphId f) const { return inverse_image(f, bottom(cod(f))); }

SubObject Model::image(MorphId f) const { return direct_image(f, top(dom(f))); }

bool Model::is_isomorphism(MorphId f) const {
  return is_embedding(f) && is_projection(f);
}

Factorization Model::factorize(MorphId f) const {
  MorphId e = canonical_projection(kernel(f));
  MorphId v = mediate_through_projection(e, f);
  MorphId m = canonical_embedding(image(f));
  MorphId h = mediate_through_embedding(m, v);
  if (!is_isomorphism(h))
    fail(Errc::Internal, "factorization middle of " + morph_repr(f) + " is not an isomorphism");
  return Factorization{e, h, m};
}

std::string Model::morph_repr(MorphId f) const {
  std::ostringstream os;
  os << object_name(dom(f)) << " -> " << object_name(cod(f));
  if (is_element_level()) {
    os << " map [";
    const auto& m = morph_map(f);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << ' ';
      os << m[i];
    }
    os << ']';
  }
  return os.str();
}

}  // namespace forms
