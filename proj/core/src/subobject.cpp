#include "forms/subobject.hpp"

#include <algorithm>
#include <sstream>

namespace forms {

ElemSet normalized(ElemSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(const ElemSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string set_repr(const ElemSet& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

bool parse_set(const std::string& text, ElemSet& out) {
  out.clear();
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return false;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return true;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  out = normalized(std::move(out));
  return true;
}

bool SubObject::operator<(const SubObject& o) const {
  if (parent != o.parent) return parent < o.parent;
  if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
  return elems < o.elems;
}

}  // namespace forms
