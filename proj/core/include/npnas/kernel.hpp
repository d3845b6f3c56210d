#pragma once

// Nominal signatures, ground trees, permutations and alpha-trees.
//
// Ground trees follow the permutative convention: <n>n and <m>m are distinct
// trees.  AlphaTree is the canonical representative of an alpha-equivalence
// class: bound occurrences are replaced by the distance to their binder and
// free names stay explicit, so equality of classes is structural equality.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace npnas {

using SortId = std::string;

class Type {
 public:
  enum class Kind { kName, kData, kAbs, kTuple, kUnit };

  static Type name(SortId sort);
  static Type data(SortId sort);
  static Type abs(SortId binder_sort, Type body);
  static Type tuple(std::vector<Type> items);
  static Type unit();

  Kind kind() const { return kind_; }
  bool is_name() const { return kind_ == Kind::kName; }
  // Name sort, data sort, or binder sort of an abstraction type.
  const SortId& sort() const { return sort_; }
  const Type& body() const { return children_.front(); }
  const std::vector<Type>& items() const { return children_; }

  std::string to_string() const;

  friend bool operator==(const Type&, const Type&) = default;
  friend std::strong_ordering operator<=>(const Type&, const Type&);

 private:
  Type(Kind kind, SortId sort, std::vector<Type> children)
      : kind_(kind), sort_(std::move(sort)), children_(std::move(children)) {}

  Kind kind_;
  SortId sort_;
  std::vector<Type> children_;
};

struct ConstructorDecl {
  std::string name;
  Type arg;
  SortId result;
};

class Signature {
 public:
  void add_name_sort(const SortId& sort);
  void add_data_sort(const SortId& sort);
  void add_constructor(const std::string& name, Type arg, const SortId& result);

  // Checks sort disjointness, that every sort used is declared, and that every
  // data sort is inhabited.  Throws Error(kInvalidSignature / kUninhabited).
  void validate() const;

  bool is_name_sort(const SortId& sort) const { return name_set_.count(sort) != 0; }
  bool is_data_sort(const SortId& sort) const { return data_set_.count(sort) != 0; }
  bool is_well_formed(const Type& type) const;

  // nullptr when undeclared.
  const ConstructorDecl* constructor(const std::string& name) const;
  std::vector<const ConstructorDecl*> constructors_of(const SortId& sort) const;

  const std::vector<SortId>& name_sorts() const { return name_sorts_; }
  const std::vector<SortId>& data_sorts() const { return data_sorts_; }
  const std::vector<ConstructorDecl>& constructors() const { return constructors_; }

 private:
  std::vector<SortId> name_sorts_;
  std::vector<SortId> data_sorts_;
  std::vector<ConstructorDecl> constructors_;
  std::set<SortId> name_set_;
  std::set<SortId> data_set_;
  std::map<std::string, std::size_t> constructor_index_;
};

// Names are drawn from a countably infinite pool per name sort.
struct Name {
  SortId sort;
  std::size_t index = 0;

  std::string to_string() const;  // "n3@N"

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;
};

class GroundTree {
 public:
  enum class Kind { kName, kUnit, kTuple, kApp, kAbs };

  static GroundTree name(Name n);
  static GroundTree unit();
  static GroundTree tuple(std::vector<GroundTree> items);
  static GroundTree app(std::string constructor, GroundTree arg);
  static GroundTree abs(Name binder, GroundTree body);

  Kind kind() const { return kind_; }
  // The leaf name, or the binder of an abstraction.
  const Name& name() const { return name_; }
  const std::string& constructor() const { return constructor_; }
  const GroundTree& child() const { return children_.front(); }
  const std::vector<GroundTree>& items() const { return children_; }

  std::string to_string() const;

  friend bool operator==(const GroundTree&, const GroundTree&) = default;

 private:
  GroundTree() = default;

  Kind kind_ = Kind::kUnit;
  Name name_;
  std::string constructor_;
  std::vector<GroundTree> children_;
};

// A finite permutation as a list of swaps, applied right to left.
class Permutation {
 public:
  Permutation() = default;
  // Throws Error(kSortMismatch) when a swap pairs names of different sorts.
  explicit Permutation(std::vector<std::pair<Name, Name>> swaps);

  static Permutation swap(const Name& a, const Name& b);

  Name apply(const Name& n) const;
  Permutation inverse() const;
  // (*this) after `first`.
  Permutation compose(const Permutation& first) const;

  const std::vector<std::pair<Name, Name>>& swaps() const { return swaps_; }

 private:
  std::vector<std::pair<Name, Name>> swaps_;
};

class AlphaTree {
 public:
  enum class Kind { kFree, kBound, kUnit, kTuple, kApp, kAbs };

  static AlphaTree free(Name n);
  static AlphaTree bound(std::size_t distance);
  static AlphaTree unit();
  static AlphaTree tuple(std::vector<AlphaTree> items);
  static AlphaTree app(std::string constructor, AlphaTree arg);
  static AlphaTree abs(SortId binder_sort, AlphaTree body);

  Kind kind() const { return kind_; }
  const Name& name() const { return name_; }
  std::size_t distance() const { return distance_; }
  // Binder sort of an abstraction.
  const SortId& sort() const { return name_.sort; }
  const std::string& constructor() const { return constructor_; }
  const AlphaTree& child() const { return children_.front(); }
  const std::vector<AlphaTree>& items() const { return children_; }

  // Prints a representative ground tree.
  std::string to_string() const;

  friend bool operator==(const AlphaTree&, const AlphaTree&) = default;
  friend std::strong_ordering operator<=>(const AlphaTree&, const AlphaTree&);

 private:
  AlphaTree() = default;

  Kind kind_ = Kind::kUnit;
  Name name_;
  std::size_t distance_ = 0;
  std::string constructor_;
  std::vector<AlphaTree> children_;
};

bool has_type(const Signature& sig, const GroundTree& g, const Type& type);
bool has_type(const Signature& sig, const AlphaTree& a, const Type& type);

// Renames every name occurrence, binders included.
GroundTree perm_apply(const Permutation& pi, const GroundTree& g);
AlphaTree perm_apply(const Permutation& pi, const AlphaTree& a);

// Alpha-equivalence and freshness by the inference rules on ground trees
// (swap-and-freshness rule for distinct binders).  Independent of canonicalize.
bool alpha_equivalent(const GroundTree& g, const GroundTree& g2);
// Typed entry point; throws Error(kTypeMismatch) if either tree lacks `type`.
bool alpha_eq(const Signature& sig, const GroundTree& g, const GroundTree& g2,
              const Type& type);
bool fresh_name(const Name& n, const GroundTree& g);

std::set<Name> free_names(const GroundTree& g);
std::set<Name> free_names(const AlphaTree& a);
// Every name occurring anywhere in g, binders included.
std::set<Name> all_names(const GroundTree& g);

AlphaTree canonicalize(const GroundTree& g);
// A ground representative; binders get the smallest indices not free in `a`.
GroundTree representative(const AlphaTree& a);
// The class of <n>g given n and the class of g.
AlphaTree abstract(const Name& n, const AlphaTree& body);

std::size_t tree_size(const GroundTree& g);
std::size_t tree_size(const AlphaTree& a);

// Some ground tree of the given type.  Name sorts use n<k> where k is taken
// from `name_index` (default 0); data sorts use the constructor found first by
// the least-fixpoint inhabitation pass.  Throws Error(kUninhabited).
GroundTree inhabitant(const Signature& sig, const Type& type);
GroundTree inhabitant(const Signature& sig, const Type& type,
                      const std::map<SortId, std::size_t>& name_index);

}  // namespace npnas
