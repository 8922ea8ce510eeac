#include "sumsets/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sumsets {

struct FiniteAbelianGroup::Data {
  std::vector<int> factors;
  int order = 1;
  std::vector<int> weights;       // mixed-radix place values
  std::vector<std::uint8_t> add;  // order*order
  std::vector<std::uint8_t> neg;
  std::vector<int> elt_order;
};

namespace {

std::shared_ptr<const FiniteAbelianGroup::Data> build_data(
    const std::vector<int>& factors) {
  auto d = std::make_shared<FiniteAbelianGroup::Data>();
  d->factors = factors;
  long long ord = 1;
  for (int f : factors) {
    if (f < 2) throw std::invalid_argument("group factor must be >= 2");
    ord *= f;
    if (ord > kMaxGroupOrder)
      throw resource_error("group order exceeds subset budget of 64");
  }
  d->order = static_cast<int>(ord);
  int k = static_cast<int>(factors.size());
  d->weights.assign(k, 1);
  for (int i = k - 2; i >= 0; --i)
    d->weights[i] = d->weights[i + 1] * factors[i + 1];
  auto decode = [&](int x, std::vector<int>& c) {
    for (int i = 0; i < k; ++i) {
      c[i] = x / d->weights[i];
      x %= d->weights[i];
    }
  };
  d->add.resize(static_cast<size_t>(d->order) * d->order);
  d->neg.resize(d->order);
  std::vector<int> cx(k), cy(k);
  for (int x = 0; x < d->order; ++x) {
    decode(x, cx);
    int n = 0;
    for (int i = 0; i < k; ++i)
      n += ((factors[i] - cx[i]) % factors[i]) * d->weights[i];
    d->neg[x] = static_cast<std::uint8_t>(n);
    for (int y = 0; y < d->order; ++y) {
      decode(y, cy);
      int s = 0;
      for (int i = 0; i < k; ++i)
        s += ((cx[i] + cy[i]) % factors[i]) * d->weights[i];
      d->add[static_cast<size_t>(x) * d->order + y] =
          static_cast<std::uint8_t>(s);
    }
  }
  d->elt_order.resize(d->order);
  for (int x = 0; x < d->order; ++x) {
    int n = 1, acc = x;
    while (acc != 0) {
      acc = d->add[static_cast<size_t>(acc) * d->order + x];
      ++n;
    }
    d->elt_order[x] = x == 0 ? 1 : n;
  }
  return d;
}

const std::shared_ptr<const FiniteAbelianGroup::Data>& trivial_data() {
  static const auto d = build_data({});
  return d;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup() : d_(trivial_data()) {}

FiniteAbelianGroup FiniteAbelianGroup::make(const std::vector<int>& factors) {
  FiniteAbelianGroup g;
  g.d_ = factors.empty() ? trivial_data() : build_data(factors);
  return g;
}

int FiniteAbelianGroup::order() const { return d_->order; }
const std::vector<int>& FiniteAbelianGroup::factors() const {
  return d_->factors;
}

void FiniteAbelianGroup::check_element(int x) const {
  if (x < 0 || x >= d_->order)
    throw std::domain_error("element index " + std::to_string(x) +
                            " not in group " + name());
}

int FiniteAbelianGroup::add(int x, int y) const {
  check_element(x);
  check_element(y);
  return d_->add[static_cast<size_t>(x) * d_->order + y];
}

int FiniteAbelianGroup::neg(int x) const {
  check_element(x);
  return d_->neg[x];
}

int FiniteAbelianGroup::sub(int x, int y) const { return add(x, neg(y)); }

int FiniteAbelianGroup::scale(int n, int x) const {
  check_element(x);
  int m = d_->elt_order[x];
  n %= m;
  if (n < 0) n += m;
  int acc = 0;
  for (int i = 0; i < n; ++i) acc = d_->add[static_cast<size_t>(acc) * d_->order + x];
  return acc;
}

int FiniteAbelianGroup::element_order(int x) const {
  check_element(x);
  return d_->elt_order[x];
}

std::vector<int> FiniteAbelianGroup::coords_of(int x) const {
  check_element(x);
  std::vector<int> c(d_->factors.size());
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = x / d_->weights[i];
    x %= d_->weights[i];
  }
  return c;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& coords) const {
  if (coords.size() != d_->factors.size())
    throw std::domain_error("coordinate arity mismatch for group " + name());
  int x = 0;
  for (size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i];
    if (c < 0 || c >= d_->factors[i])
      throw std::domain_error("coordinate out of range");
    x += c * d_->weights[i];
  }
  return x;
}

std::string FiniteAbelianGroup::name() const {
  if (d_->factors.empty()) return "z1";
  std::string s;
  for (size_t i = 0; i < d_->factors.size(); ++i) {
    if (i) s += 'x';
    s += 'z';
    s += std::to_string(d_->factors[i]);
  }
  return s;
}

std::string FiniteAbelianGroup::element_to_string(int x) const {
  check_element(x);
  if (d_->factors.size() <= 1) return std::to_string(x);
  auto c = coords_of(x);
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

bool FiniteAbelianGroup::operator==(const FiniteAbelianGroup& o) const {
  return d_ == o.d_ || d_->factors == o.d_->factors;
}

std::uint64_t FiniteAbelianGroup::full_mask() const {
  return d_->order == 64 ? ~0ull : (1ull << d_->order) - 1;
}

GroupSubset::GroupSubset(FiniteAbelianGroup g, std::uint64_t bits)
    : group_(std::move(g)), bits_(bits & group_.full_mask()) {
  if (bits != (bits & group_.full_mask()))
    throw std::domain_error("subset bits outside group");
}

GroupSubset GroupSubset::of(const FiniteAbelianGroup& g,
                            const std::vector<int>& elems) {
  GroupSubset s(g);
  for (int e : elems) s.insert(e);
  return s;
}

GroupSubset GroupSubset::full(const FiniteAbelianGroup& g) {
  return GroupSubset(g, g.full_mask());
}

int GroupSubset::size() const { return std::popcount(bits_); }

bool GroupSubset::contains(int x) const {
  group_.check_element(x);
  return (bits_ >> x) & 1;
}

void GroupSubset::insert(int x) {
  group_.check_element(x);
  bits_ |= 1ull << x;
}

void GroupSubset::erase(int x) {
  group_.check_element(x);
  bits_ &= ~(1ull << x);
}

bool GroupSubset::is_subset_of(const GroupSubset& o) const {
  require_same_group(*this, o);
  return (bits_ & ~o.bits_) == 0;
}

std::vector<int> GroupSubset::elements() const {
  std::vector<int> v;
  v.reserve(size());
  for_each_bit(bits_, [&](int i) { v.push_back(i); });
  return v;
}

int GroupSubset::min_element() const {
  if (empty()) throw std::domain_error("min_element of empty subset");
  return __builtin_ctzll(bits_);
}

GroupSubset GroupSubset::complement() const {
  return GroupSubset(group_, ~bits_ & group_.full_mask());
}

GroupSubset GroupSubset::with(int x) const {
  GroupSubset s = *this;
  s.insert(x);
  return s;
}

GroupSubset GroupSubset::without(int x) const {
  GroupSubset s = *this;
  s.erase(x);
  return s;
}

bool GroupSubset::operator==(const GroupSubset& o) const {
  return group_ == o.group_ && bits_ == o.bits_;
}

std::string GroupSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(e);
  }
  return s + "}";
}

void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  if (a.group() != b.group())
    throw std::domain_error("subsets belong to different groups");
}

GroupSubset operator&(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  return GroupSubset(a.group(), a.bits() & b.bits());
}

GroupSubset operator|(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  return GroupSubset(a.group(), a.bits() | b.bits());
}

GroupSubset operator-(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  return GroupSubset(a.group(), a.bits() & ~b.bits());
}

Subgroup subgroup_from_carrier(const GroupSubset& carrier) {
  const auto& g = carrier.group();
  if (!carrier.contains(0))
    throw std::domain_error("subgroup carrier must contain 0");
  auto elems = carrier.elements();
  for (int a : elems) {
    if (!carrier.contains(g.neg(a)))
      throw std::domain_error("carrier not closed under negation");
    for (int b : elems)
      if (!carrier.contains(g.add(a, b)))
        throw std::domain_error("carrier not closed under addition");
  }
  Subgroup h;
  h.carrier = carrier;
  h.order = carrier.size();
  h.coset_index.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (h.coset_index[x] >= 0) continue;
    int id = static_cast<int>(h.transversal.size());
    h.transversal.push_back(x);
    for (int a : elems) h.coset_index[g.add(x, a)] = id;
  }
  return h;
}

namespace {

std::uint64_t closure_mask(const FiniteAbelianGroup& g, std::uint64_t seed) {
  std::uint64_t m = seed | 1ull;  // always contains 0
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t cur = m;
    for_each_bit(cur, [&](int a) {
      std::uint64_t nb = 1ull << g.neg(a);
      if (!(m & nb)) {
        m |= nb;
        grew = true;
      }
      for_each_bit(cur, [&](int b) {
        std::uint64_t s = 1ull << g.add(a, b);
        if (!(m & s)) {
          m |= s;
          grew = true;
        }
      });
    });
  }
  return m;
}

}  // namespace

Subgroup trivial_subgroup(const FiniteAbelianGroup& g) {
  return subgroup_from_carrier(GroupSubset(g, 1ull));
}

Subgroup full_subgroup(const FiniteAbelianGroup& g) {
  return subgroup_from_carrier(GroupSubset::full(g));
}

Subgroup subgroup_generated(const FiniteAbelianGroup& g, const GroupSubset& s) {
  if (s.group() != g) throw std::domain_error("generating set of wrong group");
  return subgroup_from_carrier(GroupSubset(g, closure_mask(g, s.bits())));
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g,
                                    int order_budget) {
  if (g.order() > order_budget)
    throw resource_error("group order " + std::to_string(g.order()) +
                         " exceeds subgroup enumeration budget");
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> work;
  seen.insert(1ull);
  work.push_back(1ull);
  for (size_t i = 0; i < work.size(); ++i) {
    std::uint64_t h = work[i];
    for (int x = 0; x < g.order(); ++x) {
      if ((h >> x) & 1) continue;
      std::uint64_t h2 = closure_mask(g, h | (1ull << x));
      if (seen.insert(h2).second) work.push_back(h2);
    }
  }
  std::sort(work.begin(), work.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (auto m : work) out.push_back(subgroup_from_carrier(GroupSubset(g, m)));
  return out;
}

// ---------------------------------------------------------------------------
// Quotient construction via Smith normal form of the relation lattice.

namespace {

// Diagonalizes R (rows = relations) with column operations mirrored into V.
// Returns the diagonal entries d_0 | d_1 | ... (nonnegative).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>>& r,
                                      std::vector<std::vector<long long>>& v) {
  size_t m = r.size();
  size_t n = m ? r[0].size() : 0;
  v.assign(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1;
  auto swap_rows = [&](size_t a, size_t b) { std::swap(r[a], r[b]); };
  auto swap_cols = [&](size_t a, size_t b) {
    for (size_t i = 0; i < m; ++i) std::swap(r[i][a], r[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(v[i][a], v[i][b]);
  };
  auto add_col = [&](size_t dst, size_t src, long long q) {
    for (size_t i = 0; i < m; ++i) r[i][dst] += q * r[i][src];
    for (size_t i = 0; i < n; ++i) v[i][dst] += q * v[i][src];
  };
  auto add_row = [&](size_t dst, size_t src, long long q) {
    for (size_t j = 0; j < r[dst].size(); ++j) r[dst][j] += q * r[src][j];
  };

  size_t t = 0;
  while (t < m && t < n) {
    // Find a pivot of minimal absolute value in the remaining block.
    size_t pi = t, pj = t;
    long long best = 0;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (r[i][j] != 0 &&
            (best == 0 || std::llabs(r[i][j]) < std::llabs(best))) {
          best = r[i][j];
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < m; ++i)
        if (r[i][t] != 0) {
          long long q = r[i][t] / r[t][t];
          add_row(i, t, -q);
          if (r[i][t] != 0) {
            swap_rows(t, i);
            dirty = true;
          }
        }
      for (size_t j = t + 1; j < n; ++j)
        if (r[t][j] != 0) {
          long long q = r[t][j] / r[t][t];
          add_col(j, t, -q);
          if (r[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
    }
    // Enforce divisibility of the remaining block by the pivot.
    bool redo = false;
    for (size_t i = t + 1; i < m && !redo; ++i)
      for (size_t j = t + 1; j < n && !redo; ++j)
        if (r[i][j] % r[t][t] != 0) {
          add_col(t, j, 1);
          redo = true;
        }
    if (redo) continue;
    if (r[t][t] < 0) {
      for (size_t i = 0; i < m; ++i) r[i][t] = -r[i][t];
      for (size_t i = 0; i < n; ++i) v[i][t] = -v[i][t];
    }
    ++t;
  }
  std::vector<long long> d(n, 0);
  for (size_t j = 0; j < n && j < m; ++j) d[j] = r[j][j];
  return d;
}

}  // namespace

QuotientMap::QuotientMap(const FiniteAbelianGroup& g, const Subgroup& h)
    : source_(g), kernel_(h) {
  if (h.carrier.group() != g)
    throw std::domain_error("subgroup of a different group");
  size_t k = g.factors().size();
  std::vector<std::vector<long long>> rel;
  for (size_t i = 0; i < k; ++i) {
    std::vector<long long> row(k, 0);
    row[i] = g.factors()[i];
    rel.push_back(std::move(row));
  }
  for (int e : h.carrier.elements()) {
    auto c = g.coords_of(e);
    rel.emplace_back(c.begin(), c.end());
  }
  std::vector<std::vector<long long>> v;
  auto diag = smith_diagonal(rel, v);
  std::vector<int> kept;
  std::vector<int> tfactors;
  for (size_t j = 0; j < k; ++j)
    if (diag[j] > 1) {
      kept.push_back(static_cast<int>(j));
      tfactors.push_back(static_cast<int>(diag[j]));
    }
  target_ = FiniteAbelianGroup::make(tfactors);
  image_.assign(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    auto c = g.coords_of(x);
    std::vector<int> tc(kept.size());
    for (size_t jj = 0; jj < kept.size(); ++jj) {
      int j = kept[jj];
      long long acc = 0;
      for (size_t i = 0; i < k; ++i) acc += c[i] * v[i][j];
      long long dj = diag[j];
      acc %= dj;
      if (acc < 0) acc += dj;
      tc[jj] = static_cast<int>(acc);
    }
    image_[x] = target_.index_of(tc);
  }
  // Sanity: kernel is exactly h and the image is all of the target.
  GroupSubset img(target_);
  for (int x = 0; x < g.order(); ++x) {
    img.insert(image_[x]);
    bool in_h = h.carrier.contains(x);
    if ((image_[x] == 0) != in_h)
      throw std::logic_error("quotient map kernel mismatch");
  }
  if (img.size() != target_.order() ||
      target_.order() * h.order != g.order())
    throw std::logic_error("quotient map not surjective");
}

int QuotientMap::map(int x) const {
  source_.check_element(x);
  return image_[x];
}

GroupSubset QuotientMap::push(const GroupSubset& s) const {
  if (s.group() != source_) throw std::domain_error("pushforward wrong group");
  GroupSubset out(target_);
  for_each_bit(s.bits(), [&](int x) { out.insert(image_[x]); });
  return out;
}

QuotientMap quotient_map(const FiniteAbelianGroup& g, const Subgroup& h) {
  return QuotientMap(g, h);
}

}  // namespace sumsets
