#include "forms/theorems.hpp"

#include <algorithm>
#include <sstream>

namespace forms {

namespace {

void hypothesis(TheoremReport& r, const std::string& name, bool ok, const std::string& detail = "") {
  r.hypotheses.push_back({name, ok, detail});
  if (!ok) fail(Errc::HypothesisViolation, name + (detail.empty() ? "" : " (" + detail + ")"));
}

void soft_hypothesis(TheoremReport& r, const std::string& name, bool ok,
                     const std::string& detail = "") {
  r.hypotheses.push_back({name, ok, detail});
}

void check(TheoremReport& r, const std::string& name, bool ok, const std::string& detail = "") {
  r.checks.push_back({name, ok, detail});
}

std::string zigzag_repr(const Model& m, const Zigzag& z) {
  std::ostringstream os;
  os << m.object_name(z.initial());
  for (const Step& st : z.steps())
    os << " " << dir_name(st.dir) << " " << m.object_name(st.dir == Dir::Fwd ? m.cod(st.morph)
                                                                             : m.dom(st.morph));
  return os.str();
}

}  // namespace

bool TheoremReport::passed() const {
  auto ok = [](const CheckItem& c) { return c.pass; };
  return std::all_of(hypotheses.begin(), hypotheses.end(), ok) &&
         std::all_of(checks.begin(), checks.end(), ok);
}

std::string TheoremReport::to_text(const Model&) const {
  std::ostringstream os;
  for (const CheckItem& h : hypotheses)
    os << "  hypothesis " << h.name << (h.pass ? " OK" : " FAIL")
       << (h.detail.empty() ? "" : " " + h.detail) << "\n";
  for (const CheckItem& c : checks)
    os << "  check " << c.name << (c.pass ? " OK" : " FAIL")
       << (c.detail.empty() ? "" : " " + c.detail) << "\n";
  for (const std::string& n : notes) os << "  note " << n << "\n";
  os << "  verdict " << (passed() ? "OK" : "FAIL") << "\n";
  return os.str();
}

MorphId verify_induced_iso(const Model& m, const Zigzag& z, const std::string& label,
                           TheoremReport& r) {
  r.notes.push_back("zigzag " + label + ": " + zigzag_repr(m, z));
  bool ind = induces_homomorphism(m, z);
  check(r, label + "-induces", ind);
  if (!ind) return -1;
  MorphId f = induced_homomorphism(m, z);
  r.induced.push_back(f);
  check(r, label + "-iso", m.is_isomorphism(f), m.morph_repr(f));
  check(r, label + "-cardinality",
        m.object_order(z.initial()) == m.object_order(z.final()),
        std::to_string(m.object_order(z.initial())) + " = " +
            std::to_string(m.object_order(z.final())));
  if (m.is_element_level()) {
    Relation rel = relation_oracle(m, z);
    bool fun = rel.is_function();
    check(r, label + "-oracle-function", fun, rel.repr());
    if (fun) {
      const std::vector<int>& map = m.morph_map(f);
      check(r, label + "-oracle-graph", rel.as_map() == map);
    }
  }
  return f;
}

bool lemma_meet_normality(const Model& m, const SubObject& a, const SubObject& b,
                          const SubObject& c) {
  TheoremReport r;
  hypothesis(r, "A-normal-to-B", normal_to(m, a, b));
  hypothesis(r, "C-conormal", m.is_conormal(c));
  return normal_to(m, m.meet(a, c), m.meet(b, c));
}

bool lemma_join_normality(const Model& m, const SubObject& a, const SubObject& b,
                          const SubObject& c) {
  TheoremReport r;
  hypothesis(r, "A-normal-to-B", normal_to(m, a, b));
  hypothesis(r, "C-normal-to-join", normal_to(m, c, m.join(b, c)));
  return normal_to(m, m.join(a, c), m.join(b, c));
}

TheoremReport diamond_iso(const Model& m, const SubObject& a, const SubObject& b) {
  TheoremReport r;
  r.theorem = "diamond";
  SubObject jn = m.join(a, b);
  SubObject mt = m.meet(a, b);
  hypothesis(r, "B-conormal", m.is_conormal(b), b.repr());
  hypothesis(r, "A-normal-to-join", normal_to(m, a, jn), a.repr() + " in " + jn.repr());
  check(r, "meet-normal-to-B", normal_to(m, mt, b), mt.repr() + " in " + b.repr());
  if (!r.passed()) return r;

  MorphId ib = m.canonical_embedding(b);
  MorphId p1 = m.canonical_projection(m.inverse_image(ib, mt));
  MorphId ij = m.canonical_embedding(jn);
  MorphId p2 = m.canonical_projection(m.inverse_image(ij, a));
  Zigzag z(m, {{p1, Dir::Bwd}, {ib, Dir::Fwd}, {ij, Dir::Bwd}, {p2, Dir::Fwd}});
  verify_induced_iso(m, z, "diamond", r);
  return r;
}

TheoremReport double_quotient(const Model& m, const SubObject& n, const ElemSet& s_payload) {
  TheoremReport r;
  r.theorem = "doublequotient";
  hypothesis(r, "N-normal", m.is_normal(n), n.repr());
  MorphId pn = m.canonical_projection(n);
  ObjectId q = m.cod(pn);
  SubObject s(q, s_payload);
  if (!m.is_subobject(s))
    fail(Errc::InvalidSubobject, s.repr() + " is not a subobject of " + m.object_name(q));

  SubObject rsub = m.inverse_image(pn, s);
  r.notes.push_back("R = " + rsub.repr());
  check(r, "i-contains-N", m.leq(n, rsub));
  check(r, "i-image-is-S", m.direct_image(pn, rsub) == s);

  if (m.is_conormal(s)) {
    r.notes.push_back("clause ii applies: S conormal");
    bool cono = conormal_to(m, rsub, n);
    check(r, "ii-R-conormal-to-N", cono);
    if (cono) {
      ObjectId coq = coquotient(m, n, rsub);
      ObjectId scar = m.dom(m.canonical_embedding(s));
      check(r, "ii-coquotient-is-S-carrier", coq == scar,
            m.object_name(coq) + " = " + m.object_name(scar));
    }
  }

  bool s_normal = m.is_normal(s);
  bool r_normal = m.is_normal(rsub);
  check(r, "iii-normality-equivalence", s_normal == r_normal,
        std::string(s_normal ? "S normal" : "S not normal") + ", " +
            (r_normal ? "R normal" : "R not normal"));
  if (s_normal && r_normal) {
    r.notes.push_back("clause iii applies: S normal");
    MorphId pr = m.canonical_projection(rsub);
    MorphId ps = m.canonical_projection(s);
    Zigzag z(m, {{pr, Dir::Bwd}, {pn, Dir::Fwd}, {ps, Dir::Fwd}});
    verify_induced_iso(m, z, "doublequotient", r);
  }
  return r;
}

TheoremReport image_theorem(const Model& m, MorphId f, const SubObject& w, const SubObject& x) {
  TheoremReport r;
  r.theorem = "imagetheorem";
  SubObject ker = m.kernel(f);
  hypothesis(r, "kernel-below-W", m.leq(ker, w), ker.repr() + " in " + w.repr());
  hypothesis(r, "W-below-X", m.leq(w, x));
  hypothesis(r, "X-conormal", m.is_conormal(x));

  SubObject fw = m.direct_image(f, w);
  SubObject fx = m.direct_image(f, x);
  bool lhs = normal_to(m, w, x);
  bool rhs = normal_to(m, fw, fx);
  check(r, "normality-equivalence", lhs == rhs,
        std::string(lhs ? "W normal to X" : "W not normal to X") + ", " +
            (rhs ? "fW normal to fX" : "fW not normal to fX"));
  check(r, "fX-conormal", m.is_conormal(fx), fx.repr());
  if (lhs && rhs && m.is_conormal(fx)) {
    MorphId ix = m.canonical_embedding(x);
    MorphId p1 = m.canonical_projection(m.inverse_image(ix, w));
    MorphId ifx = m.canonical_embedding(fx);
    MorphId p2 = m.canonical_projection(m.inverse_image(ifx, fw));
    Zigzag z(m, {{p1, Dir::Bwd}, {ix, Dir::Fwd}, {f, Dir::Fwd}, {ifx, Dir::Bwd}, {p2, Dir::Fwd}});
    verify_induced_iso(m, z, "imagetheorem", r);
  }
  return r;
}

TheoremReport butterfly(const Model& m, const SubObject& s1, const SubObject& s,
                        const SubObject& t1, const SubObject& t) {
  TheoremReport r;
  r.theorem = "butterfly";
  hypothesis(r, "Sprime-conormal", m.is_conormal(s1), s1.repr());
  hypothesis(r, "S-conormal", m.is_conormal(s), s.repr());
  hypothesis(r, "Tprime-conormal", m.is_conormal(t1), t1.repr());
  hypothesis(r, "T-conormal", m.is_conormal(t), t.repr());
  hypothesis(r, "Sprime-normal-to-S", normal_to(m, s1, s));
  hypothesis(r, "Tprime-normal-to-T", normal_to(m, t1, t));
  SubObject st = m.meet(s, t);
  SubObject left_join = m.join(s1, st);   // S′∨(S∧T)
  SubObject right_join = m.join(st, t1);  // (S∧T)∨T′
  hypothesis(r, "left-join-conormal", m.is_conormal(left_join), left_join.repr());
  hypothesis(r, "right-join-conormal", m.is_conormal(right_join), right_join.repr());

  SubObject left_sub = m.join(s1, m.meet(s, t1));   // S′∨(S∧T′)
  SubObject right_sub = m.join(m.meet(s1, t), t1);  // (S′∧T)∨T′
  SubObject mid_sub = m.join(m.meet(s1, t), m.meet(s, t1));
  check(r, "left-antenna-normality", normal_to(m, left_sub, left_join),
        left_sub.repr() + " in " + left_join.repr());
  check(r, "right-antenna-normality", normal_to(m, right_sub, right_join),
        right_sub.repr() + " in " + right_join.repr());
  check(r, "middle-normality", normal_to(m, mid_sub, st), mid_sub.repr() + " in " + st.repr());
  if (!r.passed()) return r;

  // the wing fragment: both wing quotients reached from (S∧T)/1, and their
  // kernels join to the middle subquotient's kernel
  MorphId ist = m.canonical_embedding(st);
  MorphId is = m.canonical_embedding(s);
  MorphId it = m.canonical_embedding(t);
  MorphId into_s = m.mediate_through_embedding(is, ist);
  MorphId into_t = m.mediate_through_embedding(it, ist);
  MorphId fmor = m.compose(m.canonical_projection(m.inverse_image(is, s1)), into_s);
  MorphId gmor = m.compose(m.canonical_projection(m.inverse_image(it, t1)), into_t);
  SubObject kf = m.kernel(fmor);
  SubObject kg = m.kernel(gmor);
  check(r, "fragment-kernel-S", kf == m.inverse_image(ist, m.meet(s1, t)));
  check(r, "fragment-kernel-T", kg == m.inverse_image(ist, m.meet(s, t1)));
  SubObject kfg = m.join(kf, kg);
  check(r, "fragment-coapex-kernel", kfg == m.inverse_image(ist, mid_sub));
  ObjectId middle = m.cod(m.canonical_projection(kfg));
  r.notes.push_back("middle object " + m.object_name(middle) + " order " +
                    std::to_string(m.object_order(middle)));

  MorphId pmid = m.canonical_projection(m.inverse_image(ist, mid_sub));
  MorphId il = m.canonical_embedding(left_join);
  MorphId pl = m.canonical_projection(m.inverse_image(il, left_sub));
  Zigzag zl(m, {{pmid, Dir::Bwd}, {ist, Dir::Fwd}, {il, Dir::Bwd}, {pl, Dir::Fwd}});
  MorphId left = verify_induced_iso(m, zl, "left", r);

  MorphId ir = m.canonical_embedding(right_join);
  MorphId pr = m.canonical_projection(m.inverse_image(ir, right_sub));
  Zigzag zr(m, {{pmid, Dir::Bwd}, {ist, Dir::Fwd}, {ir, Dir::Bwd}, {pr, Dir::Fwd}});
  MorphId right = verify_induced_iso(m, zr, "right", r);

  if (left >= 0 && right >= 0) {
    int cm = m.object_order(middle);
    int cl = m.object_order(m.cod(left));
    int cr = m.object_order(m.cod(right));
    check(r, "antenna-cardinalities", cm == cl && cm == cr,
          std::to_string(cl) + " = " + std::to_string(cm) + " = " + std::to_string(cr));
  }
  return r;
}

TheoremReport restricted_modular_law(const Model& m, const SubObject& x, const SubObject& y,
                                     const SubObject& z) {
  TheoremReport r;
  r.theorem = "modularlaw";
  hypothesis(r, "X-below-Z", m.leq(x, z), x.repr() + " in " + z.repr());
  bool branch1 = m.is_normal(y) && m.is_conormal(z);
  bool branch2 = m.is_conormal(y) && m.is_normal(x);
  soft_hypothesis(r, "hypothesis-branch", branch1 || branch2,
                  branch1 ? (branch2 ? "both branches" : "Y normal, Z conormal")
                          : (branch2 ? "Y conormal, X normal" : "neither branch"));
  if (!(branch1 || branch2))
    fail(Errc::HypothesisViolation, "neither (Y normal, Z conormal) nor (Y conormal, X normal)");
  if (branch1) r.notes.push_back("branch: Y normal, Z conormal");
  if (branch2) r.notes.push_back("branch: Y conormal, X normal");
  SubObject lhs = m.join(x, m.meet(y, z));
  SubObject rhs = m.meet(m.join(x, y), z);
  check(r, "modular-equality", lhs == rhs, lhs.repr() + " = " + rhs.repr());
  return r;
}

std::optional<ModularWitness> find_modular_violation(const Model& m,
                                                     const std::vector<ObjectId>& scope) {
  for (ObjectId g : scope) {
    std::vector<SubObject> subs = m.subobjects(g);
    for (const SubObject& x : subs)
      for (const SubObject& z : subs) {
        if (!m.leq(x, z)) continue;
        for (const SubObject& y : subs) {
          SubObject lhs = m.join(x, m.meet(y, z));
          SubObject rhs = m.meet(m.join(x, y), z);
          if (!(lhs == rhs)) return ModularWitness{g, x, y, z, lhs, rhs};
        }
      }
  }
  return std::nullopt;
}

}  // namespace forms
