#pragma once
// Finite abelian groups in invariant-factor form with canonical element
// indexing (mixed-radix), exact subsets as 64-bit characteristic masks,
// subgroups with coset structure, and quotient homomorphisms.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsets {

// Hard cap: subsets are 64-bit masks.
constexpr int kMaxGroupOrder = 64;

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup();  // trivial group, order 1

  // Factors must all be >= 2; an empty list gives the trivial group.
  static FiniteAbelianGroup make(const std::vector<int>& invariant_factors);

  int order() const;
  const std::vector<int>& factors() const;

  int add(int x, int y) const;
  int sub(int x, int y) const;
  int neg(int x) const;
  int zero() const { return 0; }
  int scale(int n, int x) const;  // n*x, any integer n
  int element_order(int x) const;

  std::vector<int> coords_of(int x) const;
  int index_of(const std::vector<int>& coords) const;

  std::string name() const;  // "z6", "z2xz4", "z1" for the trivial group
  std::string element_to_string(int x) const;

  // Groups compare by presentation; equal factors means interchangeable
  // elements and identical indexing.
  bool operator==(const FiniteAbelianGroup& o) const;
  bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

  void check_element(int x) const;  // std::domain_error if out of range
  std::uint64_t full_mask() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

class GroupSubset {
 public:
  GroupSubset() = default;
  explicit GroupSubset(FiniteAbelianGroup g, std::uint64_t bits = 0);
  static GroupSubset of(const FiniteAbelianGroup& g,
                        const std::vector<int>& elems);
  static GroupSubset full(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& group() const { return group_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int x) const;
  void insert(int x);
  void erase(int x);
  bool is_subset_of(const GroupSubset& o) const;
  std::vector<int> elements() const;  // ascending canonical indices
  int min_element() const;            // requires nonempty
  GroupSubset complement() const;
  GroupSubset with(int x) const;
  GroupSubset without(int x) const;

  bool operator==(const GroupSubset& o) const;
  bool operator!=(const GroupSubset& o) const { return !(*this == o); }

  std::string to_string() const;  // "{0,1,3}"

 private:
  FiniteAbelianGroup group_;
  std::uint64_t bits_ = 0;
};

GroupSubset operator&(const GroupSubset& a, const GroupSubset& b);
GroupSubset operator|(const GroupSubset& a, const GroupSubset& b);
GroupSubset operator-(const GroupSubset& a, const GroupSubset& b);

// Throws std::domain_error unless both subsets live in the same group.
void require_same_group(const GroupSubset& a, const GroupSubset& b);

struct Subgroup {
  GroupSubset carrier;
  int order = 1;
  std::vector<int> coset_index;  // element -> coset id (ids follow min reps)
  std::vector<int> transversal;  // coset id -> least representative

  bool is_trivial() const { return order == 1; }
  bool is_full() const { return order == carrier.group().order(); }
  bool contains(int x) const { return carrier.contains(x); }
  int cosets() const { return static_cast<int>(transversal.size()); }
};

// Validates closure under add/neg and membership of 0, then builds cosets.
Subgroup subgroup_from_carrier(const GroupSubset& carrier);

// Every subgroup exactly once, sorted by (order, carrier bit-encoding).
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g,
                                    int order_budget = kMaxGroupOrder);

Subgroup subgroup_generated(const FiniteAbelianGroup& g, const GroupSubset& s);

Subgroup trivial_subgroup(const FiniteAbelianGroup& g);
Subgroup full_subgroup(const FiniteAbelianGroup& g);

class QuotientMap {
 public:
  QuotientMap(const FiniteAbelianGroup& g, const Subgroup& h);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const Subgroup& kernel() const { return kernel_; }
  int map(int x) const;
  GroupSubset push(const GroupSubset& s) const;

 private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  Subgroup kernel_;
  std::vector<int> image_;
};

QuotientMap quotient_map(const FiniteAbelianGroup& g, const Subgroup& h);

// Iteration helper over set bits of a mask.
template <typename F>
inline void for_each_bit(std::uint64_t bits, F&& f) {
  while (bits) {
    int i = __builtin_ctzll(bits);
    bits &= bits - 1;
    f(i);
  }
}

}  // namespace sumsets
