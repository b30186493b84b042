#pragma once

#include <compare>
#include <memory>
#include <span>
#include <vector>

namespace tamb {

// A finite group given by its multiplication table. Elements are the
// indices 0..order-1; mul(a, b) is the product a*b.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  std::vector<std::vector<int>> table() const;

  bool operator==(const FiniteGroup& other) const { return order_ == other.order_ && mult_ == other.mult_; }

 private:
  friend std::shared_ptr<const FiniteGroup> validate_group(const std::vector<std::vector<int>>&);
  friend std::shared_ptr<const FiniteGroup> group_from_trusted_table(int order, std::vector<int> flat);
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mult_;
  std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Checks the group axioms exhaustively. Throws InputError with code
// NotSquare, IndexOutOfRange, NoIdentity, NoInverse or NotAssociative.
GroupPtr validate_group(const std::vector<std::vector<int>>& table);

// Skips the O(n^3) axiom check; for tables derived from an already
// validated group (subgroups, products, permutation groups).
GroupPtr group_from_trusted_table(int order, std::vector<int> flat);

bool same_group(const GroupPtr& a, const GroupPtr& b);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);  // order 2n
// Sigma_n with elements indexed by the lexicographic rank (Lehmer code) of
// the permutation; mul(a, b) is the composite a o b, i.e. (a o b)(i) = a(b(i)).
GroupPtr symmetric_group(int n);
// (g, k) has index g * |K| + k.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& k);

std::vector<int> perm_from_index(int n, int index);
int perm_index(std::span<const int> perm);

// A subgroup stored as its strictly sorted element list. Also carries the
// subgroup materialized as a FiniteGroup whose element i is elements()[i].
class Subgroup {
 public:
  // Throws InputError(NotSubgroup) unless elems is a subgroup of parent.
  Subgroup(GroupPtr parent, std::vector<int> elems);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(int g) const { return local_[static_cast<std::size_t>(g)] >= 0; }
  int local(int g) const { return local_[static_cast<std::size_t>(g)]; }
  int global(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const GroupPtr& as_group() const { return as_group_; }

  Subgroup conjugate(int g) const;  // g H g^-1
  bool is_subgroup_of(const Subgroup& other) const;

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
  std::strong_ordering operator<=>(const Subgroup& o) const { return elems_ <=> o.elems_; }

 private:
  GroupPtr parent_;
  std::vector<int> elems_;
  std::vector<int> local_;
  GroupPtr as_group_;
};

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
// Smallest subgroup containing gens.
Subgroup generated_subgroup(const GroupPtr& g, std::span<const int> gens);

// Every subgroup, duplicate-free, sorted lexicographically by element list.
// Generated by repeated cyclic extension from the trivial subgroup.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

struct SubgroupConjClass {
  Subgroup representative;  // lexicographically least member
  std::vector<Subgroup> members;
};

// Classes ordered by representative.
std::vector<SubgroupConjClass> conj_classes(const GroupPtr& g);

// Index into conj_classes(g) of the class containing h.
int conj_class_index(const std::vector<SubgroupConjClass>& classes, const Subgroup& h);

// A homomorphism from a subgroup into a group; values[i] is the image of
// the subgroup's i-th element (local indexing).
struct GroupHom {
  Subgroup source;
  GroupPtr target;
  std::vector<int> values;

  int operator()(int g) const { return values[static_cast<std::size_t>(source.local(g))]; }
  bool operator==(const GroupHom& o) const { return source == o.source && values == o.values; }
};

bool is_homomorphism(const GroupHom& h);

// All homomorphisms H -> Sigma_n in lexicographic order of the images of a
// fixed generating set. Throws ResourceBound when n > limits().max_sym_degree.
std::vector<GroupHom> homs_to_sym(const Subgroup& h, int n);

}  // namespace tamb
