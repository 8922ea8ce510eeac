#pragma once
// Core sumset arithmetic: sumsets, representation counts, stabilizers and
// periodicity, iterated-sumset growth layers with witness classes, the
// Dyson e-transform, and superset distances to the structured families.

#include <optional>
#include <vector>

#include "sumsets/group.hpp"
#include "sumsets/literals.hpp"

namespace sumsets {

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b);
GroupSubset translate(const GroupSubset& s, int g);
GroupSubset negate(const GroupSubset& s);
// A - B = A + (-B)
GroupSubset difference_set(const GroupSubset& a, const GroupSubset& b);

// Representations of x as a+b: witnesses = (x - A) ∩ B.
struct RepSet {
  int target;
  GroupSubset witnesses;
  int count;
};

RepSet representations(const GroupSubset& a, const GroupSubset& b, int x);
int rep_count(const GroupSubset& a, const GroupSubset& b, int x);

// Maximal subgroup H with S + H = S. S must be nonempty.
Subgroup stabilizer(const GroupSubset& s);

bool is_periodic(const GroupSubset& s);

struct Periodicity {
  bool periodic = false;
  bool aperiodic = true;
  bool punctured = false;            // S ∪ {gamma} periodic for some gamma ∉ S
  std::optional<int> gamma;          // least such gamma
  std::optional<Subgroup> punctured_period;  // stabilizer of S ∪ {gamma}
};

Periodicity periodicity(const GroupSubset& s);

// Growth layers of A under repeated addition of B, with 0 ∈ A ∩ B.
// layer(0) = A, layer(i) = (A+iB) \ (A+(i-1)B).
struct LayerDecomposition {
  GroupSubset base_a, base_b;
  std::vector<GroupSubset> layers;  // nonempty prefix, layers[0] = A
  // Witness classes per layer i >= 1: pairs (U bits, class subset), sorted
  // by U. U is the exact witness set (x - (A+(i-1)B)) ∩ B shared by the
  // class members.
  std::vector<std::vector<std::pair<std::uint64_t, GroupSubset>>> classes;

  GroupSubset layer(int i) const;
  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

LayerDecomposition growth_layers(const GroupSubset& a, const GroupSubset& b,
                                 int max_i);

struct ETransform {
  int shift;
  GroupSubset a_e;  // (e+B) ∪ A
  GroupSubset b_e;  // (e+B) ∩ A
};

// Requires e ∈ A - B so that b_e is nonempty.
ETransform e_transform(const GroupSubset& a, const GroupSubset& b, int e);

struct SubsetDistance {
  std::optional<int> value;           // nullopt = no superset in the family
  std::optional<GroupSubset> witness;  // a minimizing superset when finite

  bool finite() const { return value.has_value(); }
};

// Minimal |B \ A| over supersets B of A inside the given family.
SubsetDistance family_distance(const GroupSubset& a, const FamilySpec& family);

// Membership of S itself in the family (distance zero).
bool in_family(const GroupSubset& s, const FamilySpec& family);

}  // namespace sumsets
