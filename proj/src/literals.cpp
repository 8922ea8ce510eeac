#include "sumsets/literals.hpp"

#include <algorithm>
#include <cctype>

namespace sumsets {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_int(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) throw std::invalid_argument("empty integer literal");
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer literal '" + s + "'");
  }
  if (pos != t.size())
    throw std::invalid_argument("bad integer literal '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

}  // namespace

FiniteAbelianGroup parse_group(const std::string& spec) {
  std::string t = strip(spec);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t.empty()) throw std::invalid_argument("empty group spec");
  if (t == "z1" || t == "1") return FiniteAbelianGroup();
  std::vector<int> factors;
  for (const auto& part : split(t, 'x')) {
    std::string p = strip(part);
    if (p.size() < 2 || p[0] != 'z')
      throw std::invalid_argument("bad group spec '" + spec +
                                  "' (expected e.g. z6 or z2xz4)");
    int f = parse_int(p.substr(1));
    if (f < 2) throw std::invalid_argument("group factor must be >= 2");
    factors.push_back(f);
  }
  return FiniteAbelianGroup::make(factors);
}

int parse_element(const FiniteAbelianGroup& g, const std::string& lit) {
  std::string t = strip(lit);
  if (t.empty()) throw std::invalid_argument("empty element literal");
  if (t.front() == '(') {
    if (t.back() != ')')
      throw std::invalid_argument("unterminated coordinate tuple '" + lit +
                                  "'");
    std::string inner = t.substr(1, t.size() - 2);
    std::vector<int> coords;
    if (!strip(inner).empty())
      for (const auto& c : split(inner, ',')) coords.push_back(parse_int(c));
    return g.index_of(coords);
  }
  int idx = parse_int(t);
  g.check_element(idx);
  return idx;
}

GroupSubset parse_subset(const FiniteAbelianGroup& g, const std::string& lit) {
  std::string t = strip(lit);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("bad set literal '" + lit +
                                "' (expected e.g. {0,1,3})");
  std::string inner = strip(t.substr(1, t.size() - 2));
  GroupSubset s(g);
  if (inner.empty()) return s;
  for (const auto& part : split(inner, ',')) {
    int idx = parse_int(part);
    g.check_element(idx);
    s.insert(idx);
  }
  return s;
}

FamilySpec parse_family(const FiniteAbelianGroup& g, const std::string& lit) {
  std::string t = strip(lit);
  std::string head = t, arg;
  if (size_t p = t.find(':'); p != std::string::npos) {
    head = strip(t.substr(0, p));
    arg = strip(t.substr(p + 1));
  }
  std::transform(head.begin(), head.end(), head.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  auto subgroup_arg = [&]() {
    return subgroup_from_carrier(parse_subset(g, arg));
  };
  if (head == "P")
    return arg.empty() ? FamilySpec::periodic()
                       : FamilySpec::periodic_h(subgroup_arg());
  if (head == "QP")
    return arg.empty() ? FamilySpec::quasi_periodic()
                       : FamilySpec::quasi_periodic_h(subgroup_arg());
  if (head == "AP")
    return arg.empty() ? FamilySpec::progression()
                       : FamilySpec::progression_d(parse_element(g, arg));
  throw std::invalid_argument("unknown family spec '" + lit + "'");
}

}  // namespace sumsets
