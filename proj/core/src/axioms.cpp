#include "forms/axioms.hpp"

#include "forms/dual.hpp"
#include "forms/normality.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace forms {

namespace {

struct Ctx {
  const Model& m;
  std::vector<ObjectId> primary;
  std::vector<ObjectId> secondary;
  std::vector<ObjectId> all;
  std::vector<MorphId> homs;  // between primary pairs, or the explicit list
  AxiomReport& rep;
  std::string key;
  std::set<std::string> failed;

  void viol(const std::string& witness) {
    rep.violations.push_back({key, witness});
    failed.insert(key);
  }
  void inst() { ++rep.instances; }
  void expect(bool ok, const std::string& witness) {
    inst();
    if (!ok) viol(witness);
  }
};

std::string sw(const Model& m, const SubObject& s) {
  return "(" + m.object_name(s.parent) + ", " + s.repr() + ")";
}

std::string mw(const Model& m, MorphId f) { return "(" + m.morph_repr(f) + ")"; }

Ctx resolve(const Model& m, const Scope& sc, AxiomReport& rep) {
  Ctx c{m, sc.objects, {}, {}, {}, rep, "", {}};
  if (sc.morphisms) {
    c.homs = *sc.morphisms;
  } else {
    for (ObjectId x : c.primary)
      for (ObjectId y : c.primary) {
        auto hs = m.enumerate_homs(x, y);
        c.homs.insert(c.homs.end(), hs.begin(), hs.end());
      }
  }
  auto known = [&](ObjectId o) {
    return std::find(c.primary.begin(), c.primary.end(), o) != c.primary.end() ||
           std::find(c.secondary.begin(), c.secondary.end(), o) != c.secondary.end();
  };
  if (sc.closure_depth >= 1) {
    for (MorphId f : c.homs) {
      try {
        Factorization fac = m.factorize(f);
        for (ObjectId o : {m.cod(fac.projection), m.dom(fac.embedding)})
          if (!known(o)) c.secondary.push_back(o);
      } catch (const Error&) {
        // recorded by the axiom-4 pass
      }
    }
    for (ObjectId g : c.primary)
      for (const SubObject& s : m.subobjects(g)) {
        try {
          if (m.is_conormal(s)) {
            ObjectId o = m.dom(m.canonical_embedding(s));
            if (!known(o)) c.secondary.push_back(o);
          }
        } catch (const Error&) {
        }
        try {
          if (m.is_normal(s)) {
            ObjectId o = m.cod(m.canonical_projection(s));
            if (!known(o)) c.secondary.push_back(o);
          }
        } catch (const Error&) {
        }
      }
  }
  c.all = c.primary;
  c.all.insert(c.all.end(), c.secondary.begin(), c.secondary.end());
  return c;
}

void check_axiom1(Ctx& c) {
  const Model& m = c.m;
  c.key = "axiom1";
  for (ObjectId g : c.all) {
    MorphId id = m.identity(g);
    c.expect(m.compose(id, id) == id, "identity self-composition at " + m.object_name(g));
  }
  std::map<ObjectId, std::vector<MorphId>> by_dom;
  for (MorphId f : c.homs) {
    by_dom[m.dom(f)].push_back(f);
    bool ok = m.compose(m.identity(m.cod(f)), f) == f && m.compose(f, m.identity(m.dom(f))) == f;
    c.expect(ok, "unit law " + mw(m, f));
  }
  for (MorphId h : c.homs)
    for (MorphId g : by_dom[m.cod(h)])
      for (MorphId f : by_dom[m.cod(g)]) {
        bool ok = m.compose(m.compose(f, g), h) == m.compose(f, m.compose(g, h));
        c.expect(ok, "associativity " + mw(m, f) + mw(m, g) + mw(m, h));
      }
  for (ObjectId g : c.all) {
    auto subs = m.subobjects(g);
    for (const SubObject& a : subs) {
      c.expect(m.leq(a, a), "reflexivity " + sw(m, a));
      for (const SubObject& b : subs) {
        if (m.leq(a, b) && m.leq(b, a))
          c.expect(a == b, "antisymmetry " + sw(m, a) + " " + sw(m, b));
        for (const SubObject& d : subs)
          if (m.leq(a, b) && m.leq(b, d))
            c.expect(m.leq(a, d), "transitivity at " + m.object_name(g));
      }
    }
  }
  for (MorphId f : c.homs) {
    auto sd = m.subobjects(m.dom(f));
    auto sc2 = m.subobjects(m.cod(f));
    for (const SubObject& a : sd)
      for (const SubObject& b : sc2) {
        bool ok = m.leq(m.direct_image(f, a), b) == m.leq(a, m.inverse_image(f, b));
        c.expect(ok, "galois " + mw(m, f) + " " + a.repr() + " " + b.repr());
      }
  }
  for (ObjectId g : c.all) {
    MorphId id = m.identity(g);
    for (const SubObject& a : m.subobjects(g))
      c.expect(m.direct_image(id, a) == a && m.inverse_image(id, a) == a,
               "identity image maps " + sw(m, a));
  }
  for (MorphId g : c.homs)
    for (MorphId f : by_dom[m.cod(g)]) {
      MorphId fg = m.compose(f, g);
      for (const SubObject& a : m.subobjects(m.dom(g)))
        c.expect(m.direct_image(fg, a) == m.direct_image(f, m.direct_image(g, a)),
                 "functoriality of direct images " + mw(m, f) + mw(m, g) + " " + a.repr());
      for (const SubObject& b : m.subobjects(m.cod(f)))
        c.expect(m.inverse_image(fg, b) == m.inverse_image(g, m.inverse_image(f, b)),
                 "functoriality of inverse images " + mw(m, f) + mw(m, g) + " " + b.repr());
    }
}

void check_axiom2(Ctx& c) {
  const Model& m = c.m;
  c.key = "axiom2";
  for (ObjectId g : c.all) {
    auto subs = m.subobjects(g);
    SubObject tp = m.top(g), bt = m.bottom(g);
    for (const SubObject& a : subs)
      c.expect(m.leq(bt, a) && m.leq(a, tp), "bounds " + sw(m, a));
    for (const SubObject& a : subs)
      for (const SubObject& b : subs) {
        SubObject mt = m.meet(a, b), jn = m.join(a, b);
        c.expect(m.leq(mt, a) && m.leq(mt, b), "meet lower bound " + sw(m, a) + " " + b.repr());
        c.expect(m.leq(a, jn) && m.leq(b, jn), "join upper bound " + sw(m, a) + " " + b.repr());
        for (const SubObject& d : subs) {
          if (m.leq(d, a) && m.leq(d, b))
            c.expect(m.leq(d, mt), "meet greatest " + sw(m, a) + " " + b.repr() + " " + d.repr());
          if (m.leq(a, d) && m.leq(b, d))
            c.expect(m.leq(jn, d), "join least " + sw(m, a) + " " + b.repr() + " " + d.repr());
        }
      }
  }
  for (MorphId f : c.homs) {
    SubObject ker = m.kernel(f), im = m.image(f);
    for (const SubObject& a : m.subobjects(m.dom(f)))
      c.expect(m.inverse_image(f, m.direct_image(f, a)) == m.join(a, ker),
               "inverse of direct = join with kernel " + mw(m, f) + " " + a.repr());
    for (const SubObject& b : m.subobjects(m.cod(f)))
      c.expect(m.direct_image(f, m.inverse_image(f, b)) == m.meet(b, im),
               "direct of inverse = meet with image " + mw(m, f) + " " + b.repr());
  }
}

void check_axiom3(Ctx& c) {
  const Model& m = c.m;
  c.key = "axiom3";
  // morphisms into / out of each object, sourced from the listed objects
  auto homs_into = [&](ObjectId o) {
    std::vector<MorphId> out;
    for (ObjectId u : c.primary) {
      auto hs = m.enumerate_homs(u, o);
      out.insert(out.end(), hs.begin(), hs.end());
    }
    return out;
  };
  auto homs_from = [&](ObjectId o) {
    std::vector<MorphId> out;
    for (ObjectId v : c.primary) {
      auto hs = m.enumerate_homs(o, v);
      out.insert(out.end(), hs.begin(), hs.end());
    }
    return out;
  };
  for (ObjectId g : c.all) {
    auto subs = m.subobjects(g);
    auto into = homs_into(g);
    auto from = homs_from(g);
    for (const SubObject& s : subs) {
      if (m.is_conormal(s)) {
        MorphId io = -1;
        try {
          io = m.canonical_embedding(s);
        } catch (const Error& e) {
          c.inst();
          c.viol("missing canonical embedding " + sw(m, s) + ": " + e.what());
          continue;
        }
        c.expect(m.image(io) == s, "embedding image " + sw(m, s));
        c.expect(m.is_embedding(io), "embedding predicate " + sw(m, s));
        if (s == m.top(g))
          c.expect(io == m.identity(g), "identity convention for the largest subobject at " +
                                            m.object_name(g));
        for (MorphId f : into) {
          if (!m.leq(m.image(f), s)) continue;
          if (m.is_element_level()) {
            MorphId u = m.mediate_through_embedding(io, f);
            c.expect(m.compose(io, u) == f, "embedding universal property " + sw(m, s) + mw(m, f));
          } else {
            int count = 0;
            for (MorphId u : m.enumerate_homs(m.dom(f), m.dom(io)))
              if (m.compose(io, u) == f) ++count;
            c.expect(count == 1, "embedding universal property (found " + std::to_string(count) +
                                     ") " + sw(m, s) + mw(m, f));
          }
        }
      }
      if (m.is_normal(s)) {
        MorphId pi = -1;
        try {
          pi = m.canonical_projection(s);
        } catch (const Error& e) {
          c.inst();
          c.viol("missing canonical projection " + sw(m, s) + ": " + e.what());
          continue;
        }
        c.expect(m.kernel(pi) == s, "projection kernel " + sw(m, s));
        c.expect(m.is_projection(pi), "projection predicate " + sw(m, s));
        if (s == m.bottom(g))
          c.expect(pi == m.identity(g), "identity convention for the trivial subobject at " +
                                            m.object_name(g));
        for (MorphId f : from) {
          if (!m.leq(s, m.kernel(f))) continue;
          if (m.is_element_level()) {
            MorphId v = m.mediate_through_projection(pi, f);
            c.expect(m.compose(v, pi) == f, "projection universal property " + sw(m, s) + mw(m, f));
          } else {
            int count = 0;
            for (MorphId v : m.enumerate_homs(m.cod(pi), m.cod(f)))
              if (m.compose(v, pi) == f) ++count;
            c.expect(count == 1, "projection universal property (found " + std::to_string(count) +
                                     ") " + sw(m, s) + mw(m, f));
          }
        }
      }
    }
  }
}

void check_axiom4(Ctx& c) {
  const Model& m = c.m;
  c.key = "axiom4";
  for (MorphId f : c.homs) {
    Factorization fac;
    try {
      fac = m.factorize(f);
    } catch (const Error& e) {
      c.inst();
      c.viol("factorization failed " + mw(m, f) + ": " + e.what());
      continue;
    }
    c.expect(m.compose(fac.embedding, m.compose(fac.middle, fac.projection)) == f,
             "factorization composite " + mw(m, f));
    c.expect(m.is_projection(fac.projection) && m.kernel(fac.projection) == m.kernel(f),
             "factorization projection part " + mw(m, f));
    c.expect(m.is_isomorphism(fac.middle), "factorization middle " + mw(m, f));
    c.expect(m.is_embedding(fac.embedding) && m.image(fac.embedding) == m.image(f),
             "factorization embedding part " + mw(m, f));
    if (m.kernel(f) == m.bottom(m.dom(f)))
      c.expect(fac.projection == m.identity(m.dom(f)),
               "trivial-kernel convention " + mw(m, f));
    if (m.image(f) == m.top(m.cod(f)))
      c.expect(fac.embedding == m.identity(m.cod(f)), "full-image convention " + mw(m, f));
  }
}

void check_axiom5(Ctx& c) {
  const Model& m = c.m;
  c.key = "axiom5";
  for (ObjectId g : c.all) {
    auto subs = m.subobjects(g);
    for (const SubObject& a : subs)
      for (const SubObject& b : subs) {
        if (m.is_normal(a) && m.is_normal(b))
          c.expect(m.is_normal(m.join(a, b)), "join of normals " + sw(m, a) + " " + b.repr());
        if (m.is_conormal(a) && m.is_conormal(b))
          c.expect(m.is_conormal(m.meet(a, b)), "meet of conormals " + sw(m, a) + " " + b.repr());
      }
  }
}

void finalize(Ctx& c, const std::vector<std::string>& keys) {
  for (const std::string& k : keys)
    c.rep.verdicts.emplace_back(k, c.failed.find(k) == c.failed.end());
  std::sort(c.rep.verdicts.begin(), c.rep.verdicts.end());
}

}  // namespace

bool AxiomReport::passed() const {
  return violations.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(), [](auto& v) { return v.second; });
}

bool AxiomReport::verdict_for(const std::string& key) const {
  for (auto& [k, v] : verdicts)
    if (k == key) return v;
  return false;
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  for (auto& [k, v] : verdicts) os << "  " << k << (v ? " OK" : " FAIL") << "\n";
  os << "  instances " << instances << "\n";
  os << "  violations " << violations.size() << "\n";
  for (const Violation& v : violations) os << "  violation " << v.check << ": " << v.witness << "\n";
  return os.str();
}

AxiomReport check_axioms(const Model& m, const Scope& sc, const std::set<int>& which) {
  AxiomReport rep;
  Ctx c = resolve(m, sc, rep);
  std::vector<std::string> keys;
  if (which.count(1)) {
    check_axiom1(c);
    keys.push_back("axiom1");
  }
  if (which.count(2)) {
    check_axiom2(c);
    keys.push_back("axiom2");
  }
  if (which.count(3)) {
    check_axiom3(c);
    keys.push_back("axiom3");
  }
  if (which.count(4)) {
    check_axiom4(c);
    keys.push_back("axiom4");
  }
  if (which.count(5)) {
    check_axiom5(c);
    keys.push_back("axiom5");
  }
  finalize(c, keys);
  return rep;
}

namespace {

void check_image_map_laws(Ctx& c) {
  const Model& m = c.m;
  c.key = "obs-image-maps";
  for (MorphId f : c.homs) {
    auto sd = m.subobjects(m.dom(f));
    auto sc2 = m.subobjects(m.cod(f));
    SubObject ker = m.kernel(f), im = m.image(f);
    for (const SubObject& a : sd) {
      SubObject fa = m.direct_image(f, a);
      c.expect(m.leq(a, m.inverse_image(f, fa)), "A below f^-1fA " + mw(m, f) + " " + a.repr());
      c.expect(m.direct_image(f, m.inverse_image(f, fa)) == fa,
               "ff^-1fA = fA " + mw(m, f) + " " + a.repr());
      c.expect((m.inverse_image(f, fa) == a) == m.leq(ker, a),
               "lattice-isomorphism criterion " + mw(m, f) + " " + a.repr());
      for (const SubObject& a2 : sd) {
        if (m.leq(a, a2))
          c.expect(m.leq(fa, m.direct_image(f, a2)), "direct image monotone " + mw(m, f));
        c.expect(m.direct_image(f, m.join(a, a2)) == m.join(fa, m.direct_image(f, a2)),
                 "direct image preserves joins " + mw(m, f) + " " + a.repr() + " " + a2.repr());
      }
    }
    c.expect(m.direct_image(f, m.bottom(m.dom(f))) == m.bottom(m.cod(f)),
             "direct image preserves bottom " + mw(m, f));
    c.expect(m.inverse_image(f, m.top(m.cod(f))) == m.top(m.dom(f)),
             "inverse image preserves top " + mw(m, f));
    for (const SubObject& b : sc2) {
      SubObject fb = m.inverse_image(f, b);
      c.expect(m.leq(m.direct_image(f, fb), b), "ff^-1B below B " + mw(m, f) + " " + b.repr());
      c.expect(m.inverse_image(f, m.direct_image(f, fb)) == fb,
               "f^-1ff^-1B = f^-1B " + mw(m, f) + " " + b.repr());
      c.expect((m.direct_image(f, fb) == b) == m.leq(b, im),
               "image criterion " + mw(m, f) + " " + b.repr());
      for (const SubObject& b2 : sc2) {
        if (m.leq(b, b2))
          c.expect(m.leq(fb, m.inverse_image(f, b2)), "inverse image monotone " + mw(m, f));
        c.expect(m.inverse_image(f, m.meet(b, b2)) == m.meet(fb, m.inverse_image(f, b2)),
                 "inverse image preserves meets " + mw(m, f) + " " + b.repr() + " " + b2.repr());
      }
    }
  }
}

void check_morphism_classes(Ctx& c) {
  const Model& m = c.m;
  c.key = "obs-morphism-classes";
  for (MorphId f : c.homs) {
    bool emb = m.is_embedding(f);
    bool prj = m.is_projection(f);
    SubObject ker = m.kernel(f), im = m.image(f);
    bool ker_trivial = ker == m.bottom(m.dom(f));
    bool im_full = im == m.top(m.cod(f));
    c.expect(emb == ker_trivial, "embedding iff trivial kernel " + mw(m, f));
    c.expect(prj == im_full, "projection iff full image " + mw(m, f));
    // image-map characterizations
    auto sd = m.subobjects(m.dom(f));
    auto sc2 = m.subobjects(m.cod(f));
    bool dir_inj = true, inv_surj = true, inv_inj = true, dir_surj = true, dir_right_inv = true,
         inv_right_inv = true;
    for (size_t i = 0; i < sd.size(); ++i) {
      for (size_t j = i + 1; j < sd.size(); ++j)
        if (m.direct_image(f, sd[i]) == m.direct_image(f, sd[j])) dir_inj = false;
      if (!(m.inverse_image(f, m.direct_image(f, sd[i])) == sd[i])) dir_right_inv = false;
      bool hit = false;
      for (const SubObject& b : sc2)
        if (m.inverse_image(f, b) == sd[i]) hit = true;
      if (!hit) inv_surj = false;
    }
    for (size_t i = 0; i < sc2.size(); ++i) {
      for (size_t j = i + 1; j < sc2.size(); ++j)
        if (m.inverse_image(f, sc2[i]) == m.inverse_image(f, sc2[j])) inv_inj = false;
      if (!(m.direct_image(f, m.inverse_image(f, sc2[i])) == sc2[i])) inv_right_inv = false;
      bool hit = false;
      for (const SubObject& a : sd)
        if (m.direct_image(f, a) == sc2[i]) hit = true;
      if (!hit) dir_surj = false;
    }
    c.expect(emb == dir_inj && emb == inv_surj && emb == dir_right_inv,
             "embedding image-map characterizations " + mw(m, f));
    c.expect(prj == inv_inj && prj == dir_surj && prj == inv_right_inv,
             "projection image-map characterizations " + mw(m, f));
    // isomorphism behavior
    if (emb && prj) {
      MorphId g = m.invert(f);
      c.expect(m.compose(f, g) == m.identity(m.cod(f)) &&
                   m.compose(g, f) == m.identity(m.dom(f)),
               "two-sided inverse " + mw(m, f));
      for (const SubObject& a : sd)
        c.expect(m.direct_image(f, a) == m.inverse_image(g, a),
                 "isomorphism image maps swap " + mw(m, f) + " " + a.repr());
    } else {
      bool threw = false;
      try {
        m.invert(f);
      } catch (const Error&) {
        threw = true;
      }
      c.expect(threw, "inverting a non-isomorphism must fail " + mw(m, f));
    }
    // obsU for embeddings
    if (emb) {
      for (const SubObject& a : sc2)
        for (const SubObject& b : sc2)
          if (m.leq(m.join(a, b), im))
            c.expect(m.inverse_image(f, m.join(a, b)) ==
                         m.join(m.inverse_image(f, a), m.inverse_image(f, b)),
                     "embedding inverse image preserves bounded joins " + mw(m, f));
    }
  }
  // composites
  std::map<ObjectId, std::vector<MorphId>> by_dom;
  for (MorphId f : c.homs) by_dom[m.dom(f)].push_back(f);
  for (MorphId g : c.homs)
    for (MorphId f : by_dom[m.cod(g)]) {
      MorphId fg = m.compose(f, g);
      if (m.is_embedding(f) && m.is_embedding(g))
        c.expect(m.is_embedding(fg), "composite of embeddings " + mw(m, f) + mw(m, g));
      if (m.is_projection(f) && m.is_projection(g))
        c.expect(m.is_projection(fg), "composite of projections " + mw(m, f) + mw(m, g));
      if (m.is_embedding(fg))
        c.expect(m.is_embedding(g), "first factor of an embedding " + mw(m, f) + mw(m, g));
      if (m.is_projection(fg))
        c.expect(m.is_projection(f), "last factor of a projection " + mw(m, f) + mw(m, g));
    }
}

void check_stability(Ctx& c) {
  const Model& m = c.m;
  c.key = "obs-stability";
  for (MorphId f : c.homs) {
    auto sd = m.subobjects(m.dom(f));
    auto sc2 = m.subobjects(m.cod(f));
    for (const SubObject& a : sd)
      if (m.is_conormal(a))
        c.expect(m.is_conormal(m.direct_image(f, a)),
                 "conormal stable under direct images " + mw(m, f) + " " + a.repr());
    for (const SubObject& b : sc2)
      if (m.is_normal(b))
        c.expect(m.is_normal(m.inverse_image(f, b)),
                 "normal stable under inverse images " + mw(m, f) + " " + b.repr());
    if (m.is_projection(f)) {
      for (const SubObject& a : sd)
        if (m.is_normal(a))
          c.expect(m.is_normal(m.direct_image(f, a)),
                   "normal stable along projections " + mw(m, f) + " " + a.repr());
    }
    if (m.is_embedding(f)) {
      for (const SubObject& b : sc2)
        if (m.is_conormal(b))
          c.expect(m.is_conormal(m.inverse_image(f, b)),
                   "conormal stable along embeddings " + mw(m, f) + " " + b.repr());
    }
  }
}

void check_relative_normality(Ctx& c) {
  const Model& m = c.m;
  c.key = "obs-relative-normality";
  for (MorphId f : c.homs) {
    auto sc2 = m.subobjects(m.cod(f));
    for (const SubObject& a : sc2)
      for (const SubObject& b : sc2) {
        if (!normal_to(m, b, a)) continue;
        SubObject fa = m.inverse_image(f, a);
        if (m.is_conormal(fa))
          c.expect(normal_to(m, m.inverse_image(f, b), fa),
                   "normality relation under inverse images " + mw(m, f) + " " + b.repr() + " in " +
                       a.repr());
      }
    if (m.is_projection(f)) {
      auto sd = m.subobjects(m.dom(f));
      for (const SubObject& a : sd)
        for (const SubObject& b : sd)
          if (normal_to(m, b, a))
            c.expect(normal_to(m, m.direct_image(f, b), m.direct_image(f, a)),
                     "normality relation under projections " + mw(m, f) + " " + b.repr() + " in " +
                         a.repr());
    }
  }
}

}  // namespace

AxiomReport check_observations(const Model& m, const Scope& sc) {
  AxiomReport rep;
  Ctx c = resolve(m, sc, rep);
  check_image_map_laws(c);
  check_morphism_classes(c);
  check_stability(c);
  check_relative_normality(c);
  finalize(c, {"obs-image-maps", "obs-morphism-classes", "obs-stability",
               "obs-relative-normality"});
  return rep;
}

DualityReport duality_selftest(const Model& m, const Scope& sc) {
  DualityReport out;
  out.primal = check_axioms(m, sc);
  DualModel d = dualize(m);
  out.dual = check_axioms(d, sc);
  out.verdicts_match = out.primal.verdicts.size() == out.dual.verdicts.size();
  if (out.verdicts_match)
    for (size_t i = 0; i < out.primal.verdicts.size(); ++i)
      if (out.primal.verdicts[i] != out.dual.verdicts[i]) out.verdicts_match = false;
  return out;
}

std::string DualityReport::to_text() const {
  std::ostringstream os;
  os << "primal:\n" << primal.to_text();
  os << "dual:\n" << dual.to_text();
  os << "verdicts " << (verdicts_match ? "match" : "differ") << "\n";
  return os.str();
}

std::vector<Violation> double_dual_mismatches(const Model& m, const Scope& sc) {
  std::vector<Violation> out;
  DualModel d = dualize(m);
  DualModel dd = dualize(d);
  auto mismatch = [&](const std::string& what, const std::string& where) {
    out.push_back({what, where});
  };

  std::vector<MorphId> homs;
  if (sc.morphisms) {
    homs = *sc.morphisms;
  } else {
    for (ObjectId x : sc.objects)
      for (ObjectId y : sc.objects) {
        auto hs = m.enumerate_homs(x, y);
        homs.insert(homs.end(), hs.begin(), hs.end());
      }
  }

  for (ObjectId g : sc.objects) {
    if (dd.object_name(g) != m.object_name(g) || dd.object_order(g) != m.object_order(g))
      mismatch("object data", m.object_name(g));
    if (!(dd.top(g) == m.top(g)) || !(dd.bottom(g) == m.bottom(g)))
      mismatch("lattice bounds", m.object_name(g));
    auto s1 = m.subobjects(g), s2 = dd.subobjects(g);
    if (s1 != s2) mismatch("subobject enumeration", m.object_name(g));
    for (const SubObject& a : s1) {
      if (dd.is_subobject(a) != m.is_subobject(a)) mismatch("membership", sw(m, a));
      if (dd.is_normal(a) != m.is_normal(a)) mismatch("normality", sw(m, a));
      if (dd.is_conormal(a) != m.is_conormal(a)) mismatch("conormality", sw(m, a));
      if (m.is_conormal(a) && dd.canonical_embedding(a) != m.canonical_embedding(a))
        mismatch("canonical embedding", sw(m, a));
      if (m.is_normal(a) && dd.canonical_projection(a) != m.canonical_projection(a))
        mismatch("canonical projection", sw(m, a));
      for (const SubObject& b : s1) {
        if (dd.leq(a, b) != m.leq(a, b)) mismatch("order", sw(m, a) + " " + b.repr());
        if (!(dd.meet(a, b) == m.meet(a, b))) mismatch("meet", sw(m, a) + " " + b.repr());
        if (!(dd.join(a, b) == m.join(a, b))) mismatch("join", sw(m, a) + " " + b.repr());
      }
    }
    if (dd.identity(g) != m.identity(g)) mismatch("identity", m.object_name(g));
  }
  for (ObjectId x : sc.objects)
    for (ObjectId y : sc.objects)
      if (dd.enumerate_homs(x, y) != m.enumerate_homs(x, y))
        mismatch("hom enumeration", m.object_name(x) + " -> " + m.object_name(y));
  for (MorphId f : homs) {
    if (dd.dom(f) != m.dom(f) || dd.cod(f) != m.cod(f)) mismatch("endpoints", mw(m, f));
    if (!(dd.kernel(f) == m.kernel(f)) || !(dd.image(f) == m.image(f)))
      mismatch("kernel/image", mw(m, f));
    if (dd.is_embedding(f) != m.is_embedding(f) || dd.is_projection(f) != m.is_projection(f))
      mismatch("class flags", mw(m, f));
    for (const SubObject& a : m.subobjects(m.dom(f)))
      if (!(dd.direct_image(f, a) == m.direct_image(f, a)))
        mismatch("direct image", mw(m, f) + " " + a.repr());
    for (const SubObject& b : m.subobjects(m.cod(f)))
      if (!(dd.inverse_image(f, b) == m.inverse_image(f, b)))
        mismatch("inverse image", mw(m, f) + " " + b.repr());
    Factorization f1 = m.factorize(f), f2 = dd.factorize(f);
    if (f1.projection != f2.projection || f1.middle != f2.middle || f1.embedding != f2.embedding)
      mismatch("factorization", mw(m, f));
    if (m.is_isomorphism(f) && dd.invert(f) != m.invert(f)) mismatch("inversion", mw(m, f));
    for (MorphId g : homs)
      if (m.cod(g) == m.dom(f) && dd.compose(f, g) != m.compose(f, g))
        mismatch("composition", mw(m, f) + mw(m, g));
  }
  return out;
}

}  // namespace forms
