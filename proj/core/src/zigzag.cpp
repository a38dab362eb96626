#include "forms/zigzag.hpp"

#include <algorithm>

namespace forms {

Zigzag::Zigzag(const Model& m, std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) fail(Errc::Internal, "zigzag must have at least one step");
  nodes_.reserve(steps_.size() + 1);
  nodes_.push_back(steps_.front().dir == Dir::Fwd ? m.dom(steps_.front().morph)
                                                  : m.cod(steps_.front().morph));
  for (const Step& s : steps_) {
    ObjectId prev = nodes_.back();
    ObjectId here = s.dir == Dir::Fwd ? m.dom(s.morph) : m.cod(s.morph);
    if (here != prev)
      fail(Errc::ParentMismatch, "zigzag step " + m.morph_repr(s.morph) + " (" + dir_name(s.dir) +
                                     ") does not attach to node " + m.object_name(prev));
    nodes_.push_back(s.dir == Dir::Fwd ? m.cod(s.morph) : m.dom(s.morph));
  }
}

Zigzag Zigzag::loop(const Model& m, ObjectId g) {
  return Zigzag(m, {Step{m.identity(g), Dir::Fwd}});
}

Zigzag Zigzag::opposite(const Model& m) const {
  std::vector<Step> rev(steps_.rbegin(), steps_.rend());
  for (Step& s : rev) s.dir = s.dir == Dir::Fwd ? Dir::Bwd : Dir::Fwd;
  return Zigzag(m, std::move(rev));
}

ChaseTrace chase(const Model& m, const Zigzag& z, const SubObject& s, Dir dir) {
  const auto& nodes = z.nodes();
  int n = z.length();
  ChaseTrace tr;
  tr.at.resize(nodes.size());
  if (dir == Dir::Fwd) {
    if (s.parent != nodes.front())
      fail(Errc::ParentMismatch, "chase start " + s.repr() + " is not a subobject of " +
                                     m.object_name(nodes.front()));
    tr.at[0] = s;
    for (int i = 0; i < n; ++i) {
      const Step& st = z.steps()[i];
      tr.at[i + 1] = st.dir == Dir::Fwd ? m.direct_image(st.morph, tr.at[i])
                                        : m.inverse_image(st.morph, tr.at[i]);
    }
  } else {
    if (s.parent != nodes.back())
      fail(Errc::ParentMismatch, "chase start " + s.repr() + " is not a subobject of " +
                                     m.object_name(nodes.back()));
    tr.at[n] = s;
    for (int i = n - 1; i >= 0; --i) {
      const Step& st = z.steps()[i];
      tr.at[i] = st.dir == Dir::Fwd ? m.inverse_image(st.morph, tr.at[i + 1])
                                    : m.direct_image(st.morph, tr.at[i + 1]);
    }
  }
  return tr;
}

}  // namespace forms
