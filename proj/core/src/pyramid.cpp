#include "forms/pyramid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace forms {

int Pyramid::idx_node(int p, int q) const {
  if (p < 0 || q < p || q > n_)
    fail(Errc::Internal, "pyramid node (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
  return q * (q + 1) / 2 + p;
}

ObjectId Pyramid::node(int p, int q) const { return nodes_[idx_node(p, q)]; }

const PyramidEdge& Pyramid::edge_upright(int p, int q) const {
  if (p < 0 || q < p || q + 1 > n_) fail(Errc::Internal, "no upright edge there");
  return up_[q * (q + 1) / 2 + p];
}

const PyramidEdge& Pyramid::edge_downright(int p, int q) const {
  if (p < 0 || q <= p || q > n_) fail(Errc::Internal, "no downright edge there");
  return down_[q * (q - 1) / 2 + p];
}

std::vector<PyrNode> Pyramid::principal_horizontal() const {
  std::vector<PyrNode> path;
  for (int q = 0; q <= n_; ++q) path.push_back({0, q});
  for (int p = 1; p <= n_; ++p) path.push_back({p, n_});
  return path;
}

namespace {

// Morphism endpoints of an edge as (from, to) honoring its orientation.
struct Arrow {
  PyrNode from, to;
  MorphId morph;
};

Arrow arrow_upright(const Pyramid& pyr, int p, int q) {
  const PyramidEdge& e = pyr.edge_upright(p, q);
  if (e.dir == EdgeDir::Apex) return {{p, q}, {p, q + 1}, e.morph};
  return {{p, q + 1}, {p, q}, e.morph};
}

Arrow arrow_downright(const Pyramid& pyr, int p, int q) {
  const PyramidEdge& e = pyr.edge_downright(p, q);
  if (e.dir == EdgeDir::Apex) return {{p + 1, q}, {p, q}, e.morph};
  return {{p, q}, {p + 1, q}, e.morph};
}

Arrow arrow_between(const Pyramid& pyr, PyrNode a, PyrNode b) {
  if (a.p == b.p && b.q == a.q + 1) return arrow_upright(pyr, a.p, a.q);
  if (a.p == b.p && a.q == b.q + 1) return arrow_upright(pyr, a.p, b.q);
  if (a.q == b.q && b.p == a.p + 1) return arrow_downright(pyr, a.p, a.q);
  if (a.q == b.q && a.p == b.p + 1) return arrow_downright(pyr, b.p, a.q);
  fail(Errc::Internal, "nodes are not adjacent in the pyramid");
}

}  // namespace

Pyramid build_pyramid(const Model& m, const Zigzag& z) {
  Pyramid pyr;
  int n = z.length();
  pyr.n_ = n;
  pyr.nodes_.assign((n + 1) * (n + 2) / 2, -1);
  pyr.up_.assign(n * (n + 1) / 2, PyramidEdge{});
  pyr.down_.assign(n * (n + 1) / 2, PyramidEdge{});

  auto set_node = [&](int p, int q, ObjectId g) { pyr.nodes_[q * (q + 1) / 2 + p] = g; };
  auto set_up = [&](int p, int q, PyramidEdge e) { pyr.up_[q * (q + 1) / 2 + p] = e; };
  auto set_down = [&](int p, int q, PyramidEdge e) { pyr.down_[q * (q - 1) / 2 + p] = e; };

  for (int i = 0; i <= n; ++i) set_node(i, i, z.nodes()[i]);

  // level 1: factorize each base arrow into projection-then-embedding
  for (int i = 1; i <= n; ++i) {
    const Step& st = z.steps()[i - 1];
    Factorization fac = m.factorize(st.morph);
    MorphId up = m.compose(fac.middle, fac.projection);
    ObjectId mid = m.dom(fac.embedding);
    set_node(i - 1, i, mid);
    if (st.dir == Dir::Fwd) {
      set_up(i - 1, i - 1, {up, EdgeDir::Apex});
      set_down(i - 1, i, {fac.embedding, EdgeDir::Base});
    } else {
      set_down(i - 1, i, {up, EdgeDir::Apex});
      set_up(i - 1, i - 1, {fac.embedding, EdgeDir::Base});
    }
  }

  // upper levels: complete each diamond from its bottom wedge
  for (int level = 2; level <= n; ++level) {
    for (int p = 0; p + level <= n; ++p) {
      int q = p + level;
      const PyramidEdge wl = pyr.edge_downright(p, q - 1);   // between (p,q-1) and (p+1,q-1)
      const PyramidEdge wr = pyr.edge_upright(p + 1, q - 1); // between (p+1,q-1) and (p+1,q)
      if (wl.dir == EdgeDir::Apex && wr.dir == EdgeDir::Apex) {
        // projection diamond: top = codomain of the projection at Ker n ∨ Ker r
        MorphId nproj = wl.morph, rproj = wr.morph;
        SubObject nj = m.join(m.kernel(nproj), m.kernel(rproj));
        MorphId pj = m.canonical_projection(nj);
        set_node(p, q, m.cod(pj));
        set_up(p, q - 1, {m.mediate_through_projection(nproj, pj), EdgeDir::Apex});
        set_down(p, q, {m.mediate_through_projection(rproj, pj), EdgeDir::Apex});
      } else if (wl.dir == EdgeDir::Base && wr.dir == EdgeDir::Base) {
        // embedding diamond: top = domain of the embedding at Im m1 ∧ Im m2
        MorphId m1 = wl.morph, m2 = wr.morph;
        SubObject mt = m.meet(m.image(m1), m.image(m2));
        MorphId io = m.canonical_embedding(mt);
        set_node(p, q, m.dom(io));
        set_up(p, q - 1, {m.mediate_through_embedding(m1, io), EdgeDir::Base});
        set_down(p, q, {m.mediate_through_embedding(m2, io), EdgeDir::Base});
      } else if (wl.dir == EdgeDir::Base && wr.dir == EdgeDir::Apex) {
        // wedge composes L -> R; factorize it across the diamond
        MorphId g = m.compose(wr.morph, wl.morph);
        Factorization fac = m.factorize(g);
        set_node(p, q, m.dom(fac.embedding));
        set_up(p, q - 1, {m.compose(fac.middle, fac.projection), EdgeDir::Apex});
        set_down(p, q, {fac.embedding, EdgeDir::Base});
      } else {
        // wedge composes R -> L
        MorphId g = m.compose(wl.morph, wr.morph);
        Factorization fac = m.factorize(g);
        set_node(p, q, m.dom(fac.embedding));
        set_down(p, q, {m.compose(fac.middle, fac.projection), EdgeDir::Apex});
        set_up(p, q - 1, {fac.embedding, EdgeDir::Base});
      }
    }
  }
  return pyr;
}

void Pyramid::validate(const Model& m, const Zigzag& z) const {
  auto where = [](int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  for (int q = 0; q <= n_; ++q)
    for (int p = 0; p <= q; ++p) {
      if (q < n_) {
        const PyramidEdge& e = edge_upright(p, q);
        bool ok = e.dir == EdgeDir::Apex ? m.is_projection(e.morph) : m.is_embedding(e.morph);
        if (!ok)
          fail(Errc::Internal, "upright edge at " + where(p, q) + " violates its orientation law");
      }
      if (p < q) {
        const PyramidEdge& e = edge_downright(p, q);
        bool ok = e.dir == EdgeDir::Apex ? m.is_projection(e.morph) : m.is_embedding(e.morph);
        if (!ok)
          fail(Errc::Internal, "downright edge at " + where(p, q) + " violates its orientation law");
      }
    }

  // base triangles: the two new arrows compose to the base arrow
  for (int i = 1; i <= n_; ++i) {
    const Step& st = z.steps()[i - 1];
    Arrow a = arrow_upright(*this, i - 1, i - 1);
    Arrow b = arrow_downright(*this, i - 1, i);
    PyrNode lo{i - 1, i - 1}, mid{i - 1, i}, hi{i, i};
    MorphId composite = -1;
    if (st.dir == Dir::Fwd) {
      if (a.from == lo && a.to == mid && b.from == mid && b.to == hi)
        composite = m.compose(b.morph, a.morph);
    } else {
      if (b.from == hi && b.to == mid && a.from == mid && a.to == lo)
        composite = m.compose(a.morph, b.morph);
    }
    if (composite != st.morph)
      fail(Errc::Internal, "base triangle " + std::to_string(i) + " does not commute");
  }

  // diamonds: the construction equation of each case
  for (int level = 2; level <= n_; ++level) {
    for (int p = 0; p + level <= n_; ++p) {
      int q = p + level;
      PyrNode L{p, q - 1}, R{p + 1, q}, B{p + 1, q - 1};
      Arrow tl = arrow_upright(*this, p, q - 1);      // between L and T
      Arrow tr = arrow_downright(*this, p, q);        // between T and R
      Arrow bl = arrow_downright(*this, p, q - 1);    // between L and B
      Arrow br = arrow_upright(*this, p + 1, q - 1);  // between B and R
      MorphId lhs = -1, rhs = -2;
      if (bl.from == B && br.from == B) {  // projection diamond: x∘n = y∘r
        if (tl.from == L && tr.from == R) {
          lhs = m.compose(tl.morph, bl.morph);
          rhs = m.compose(tr.morph, br.morph);
        }
      } else if (bl.to == B && br.to == B) {  // embedding diamond: m1∘x = m2∘y
        if (tl.to == L && tr.to == R) {
          lhs = m.compose(bl.morph, tl.morph);
          rhs = m.compose(br.morph, tr.morph);
        }
      } else if (bl.to == B && br.from == B) {  // wedge L->B->R equals L->T->R
        if (tl.from == L && tr.to == R) {
          lhs = m.compose(tr.morph, tl.morph);
          rhs = m.compose(br.morph, bl.morph);
        }
      } else {  // wedge R->B->L equals R->T->L
        if (tr.from == R && tl.to == L) {
          lhs = m.compose(tl.morph, tr.morph);
          rhs = m.compose(bl.morph, br.morph);
        }
      }
      if (lhs != rhs)
        fail(Errc::Internal, "diamond with top " + where(p, q) + " does not commute");
    }
  }
}

SubObject chase_path(const Model& m, const Pyramid& pyr, const std::vector<PyrNode>& path,
                     const SubObject& start) {
  if (path.empty()) fail(Errc::Internal, "empty pyramid path");
  if (start.parent != pyr.node(path[0].p, path[0].q))
    fail(Errc::ParentMismatch, "path chase start is not a subobject of the first node");
  SubObject cur = start;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Arrow a = arrow_between(pyr, path[i], path[i + 1]);
    cur = (a.from == path[i]) ? m.direct_image(a.morph, cur) : m.inverse_image(a.morph, cur);
  }
  return cur;
}

std::vector<std::vector<PyrNode>> horizontal_paths(const Pyramid& pyr, PyrNode a, PyrNode b) {
  std::vector<std::vector<PyrNode>> out;
  if (a.p > b.p || a.q > b.q) return out;
  (void)pyr;
  std::vector<PyrNode> cur{a};
  std::function<void()> rec = [&]() {
    PyrNode u = cur.back();
    if (u == b) {
      out.push_back(cur);
      return;
    }
    if (u.q + 1 <= b.q) {  // raise q
      cur.push_back({u.p, u.q + 1});
      rec();
      cur.pop_back();
    }
    if (u.p + 1 <= b.p && u.p + 1 <= u.q) {  // raise p, staying on or above the base
      cur.push_back({u.p + 1, u.q});
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<std::vector<PyrNode>> vertical_paths(const Pyramid& pyr, PyrNode a, PyrNode b) {
  std::vector<std::vector<PyrNode>> out;
  std::vector<PyrNode> cur{a};
  std::function<void()> rec = [&]() {
    PyrNode u = cur.back();
    if (u == b) {
      out.push_back(cur);
      return;
    }
    if (u.q - u.p >= b.q - b.p) return;
    if (u.q + 1 <= b.q && u.q + 1 <= pyr.size()) {  // raise q
      cur.push_back({u.p, u.q + 1});
      rec();
      cur.pop_back();
    }
    if (u.p - 1 >= b.p) {  // lower p
      cur.push_back({u.p - 1, u.q});
      rec();
      cur.pop_back();
    }
  };
  if (b.p <= a.p && a.q <= b.q) rec();
  return out;
}

bool induces_homomorphism(const Model& m, const Zigzag& z) {
  SubObject fwd = chase(m, z, m.bottom(z.initial()), Dir::Fwd).result(Dir::Fwd);
  if (!(fwd == m.bottom(z.final()))) return false;
  SubObject bwd = chase(m, z, m.top(z.final()), Dir::Bwd).result(Dir::Bwd);
  return bwd == m.top(z.initial());
}

MorphId induced_homomorphism(const Model& m, const Zigzag& z) {
  SubObject fwd = chase(m, z, m.bottom(z.initial()), Dir::Fwd).result(Dir::Fwd);
  if (!(fwd == m.bottom(z.final())))
    fail(Errc::NotInducible, "forward chase of 1 = " + fwd.repr());
  SubObject bwd = chase(m, z, m.top(z.final()), Dir::Bwd).result(Dir::Bwd);
  if (!(bwd == m.top(z.initial())))
    fail(Errc::NotInducible, "backward chase of top = " + bwd.repr());

  Pyramid pyr = build_pyramid(m, z);
  std::vector<PyrNode> path = pyr.principal_horizontal();
  MorphId cur = m.identity(pyr.node(0, 0));
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Arrow a = arrow_between(pyr, path[i], path[i + 1]);
    if (a.from == path[i]) {
      cur = m.compose(a.morph, cur);
    } else {
      if (!m.is_isomorphism(a.morph))
        fail(Errc::Internal,
             "principal zigzag not collapsible although the chase criterion holds");
      cur = m.compose(m.invert(a.morph), cur);
    }
  }
  return cur;
}

std::string pyramid_text(const Model& m, const Pyramid& pyr) {
  std::ostringstream os;
  int n = pyr.size();
  os << "nodes " << pyr.node_count() << "\n";
  for (int level = n; level >= 0; --level) {
    os << "  level " << level << ":";
    for (int p = 0; p + level <= n; ++p)
      os << " (" << p << "," << p + level << ")=" << m.object_name(pyr.node(p, p + level));
    os << "\n";
  }
  for (int q = 0; q <= n; ++q)
    for (int p = 0; p <= q; ++p) {
      if (q < n) {
        const PyramidEdge& e = pyr.edge_upright(p, q);
        os << "  edge (" << p << "," << q << ")-(" << p << "," << q + 1 << ") "
           << (e.dir == EdgeDir::Apex ? "apex " : "base ") << m.morph_repr(e.morph) << "\n";
      }
      if (p < q) {
        const PyramidEdge& e = pyr.edge_downright(p, q);
        os << "  edge (" << p << "," << q << ")-(" << p + 1 << "," << q << ") "
           << (e.dir == EdgeDir::Apex ? "apex " : "base ") << m.morph_repr(e.morph) << "\n";
      }
    }
  return os.str();
}

}  // namespace forms
