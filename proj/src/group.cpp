#include "hgt/group.hpp"

#include <algorithm>

namespace hgt {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, const std::string& identity,
                         const std::function<Elem(Elem, Elem)>& mul)
    : names_(std::move(elements)) {
  if (names_.empty()) fail("group has no elements");
  for (int i = 0; i < size(); ++i) {
    if (names_[i].empty()) fail("empty element identifier");
    if (!index_.emplace(names_[i], i).second) fail("duplicate element identifier: " + names_[i]);
  }
  auto it = index_.find(identity);
  if (it == index_.end()) fail("identity element not declared: " + identity);
  identity_ = it->second;

  const int n = size();
  table_.resize(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem c = mul(a, b);
      if (c < 0 || c >= n)
        fail("multiplication table not closed at (" + names_[a] + "," + names_[b] + ")");
      table_[static_cast<size_t>(a) * n + b] = c;
    }

  // Derive inverses; -1 marks elements without a two-sided inverse, which
  // validate_group reports instead of construction rejecting them.
  inverse_.assign(n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (this->mul(a, b) == identity_ && this->mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::from_string_table(std::vector<std::string> elements,
                                           const std::string& identity,
                                           const std::map<std::string, std::string>& mul) {
  std::map<std::string, Elem> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) index.emplace(elements[i], i);

  // Pre-resolve into a dense table so the constructor's callback is total.
  const int n = static_cast<int>(elements.size());
  std::vector<Elem> dense(static_cast<size_t>(n) * n, -1);
  for (const auto& [key, value] : mul) {
    auto comma = key.find(',');
    if (comma == std::string::npos) fail("multiplication key is not of the form \"a,b\": " + key);
    auto a = index.find(key.substr(0, comma));
    auto b = index.find(key.substr(comma + 1));
    auto c = index.find(value);
    if (a == index.end() || b == index.end())
      fail("multiplication key names an undeclared element: " + key);
    if (c == index.end()) fail("multiplication value is an undeclared element: " + value);
    dense[static_cast<size_t>(a->second) * n + b->second] = c->second;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (dense[static_cast<size_t>(a) * n + b] < 0)
        fail("multiplication table is missing entry (" + elements[a] + "," + elements[b] + ")");

  return FiniteGroup(std::move(elements), identity,
                     [&dense, n](Elem a, Elem b) { return dense[static_cast<size_t>(a) * n + b]; });
}

Elem FiniteGroup::inv(Elem a) const {
  Elem b = inverse_[a];
  if (b < 0) fail("element has no two-sided inverse: " + names_[a]);
  return b;
}

Elem FiniteGroup::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail("unknown element identifier: " + name);
  return it->second;
}

Report validate_group(const FiniteGroup& g, const std::string& label) {
  Report r;
  const std::string p = label.empty() ? "" : label + ".";
  const int n = g.size();
  const Elem e = g.identity();

  for (Elem a = 0; a < n; ++a) {
    if (g.mul(e, a) != a)
      r.add(p + "identity", "left: 1*" + g.name(a) + " = " + g.name(g.mul(e, a)));
    if (g.mul(a, e) != a)
      r.add(p + "identity", "right: " + g.name(a) + "*1 = " + g.name(g.mul(a, e)));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          r.add(p + "associativity",
                "(" + g.name(a) + "," + g.name(b) + "," + g.name(c) + ")");
          if (r.violations.size() > 50) return r;  // corrupted table; enough witnesses
        }
  for (Elem a = 0; a < n; ++a)
    if (!g.has_inverse(a)) r.add(p + "inverse", g.name(a) + " has no two-sided inverse");
  return r;
}

}  // namespace hgt
