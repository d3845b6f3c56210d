#include "npnas/kernel.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "npnas/error.hpp"

namespace npnas {

// ---------------------------------------------------------------------------
// Type

Type Type::name(SortId sort) { return Type(Kind::kName, std::move(sort), {}); }
Type Type::data(SortId sort) { return Type(Kind::kData, std::move(sort), {}); }
Type Type::abs(SortId binder_sort, Type body) {
  return Type(Kind::kAbs, std::move(binder_sort), {std::move(body)});
}
Type Type::tuple(std::vector<Type> items) {
  if (items.size() < 2) {
    throw Error(ErrorKind::kTypeMismatch, "tuple types need at least two components");
  }
  return Type(Kind::kTuple, {}, std::move(items));
}
Type Type::unit() { return Type(Kind::kUnit, {}, {}); }

std::string Type::to_string() const {
  switch (kind_) {
    case Kind::kName:
      return "(name " + sort_ + ")";
    case Kind::kData:
      return "(data " + sort_ + ")";
    case Kind::kUnit:
      return "unit";
    case Kind::kAbs:
      return "(abs (name " + sort_ + ") " + body().to_string() + ")";
    case Kind::kTuple: {
      std::string out = "(pair";
      for (const Type& t : children_) out += " " + t.to_string();
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Signature

void Signature::add_name_sort(const SortId& sort) {
  if (name_set_.insert(sort).second) name_sorts_.push_back(sort);
}

void Signature::add_data_sort(const SortId& sort) {
  if (data_set_.insert(sort).second) data_sorts_.push_back(sort);
}

void Signature::add_constructor(const std::string& name, Type arg,
                                const SortId& result) {
  if (constructor_index_.count(name) != 0) {
    throw Error(ErrorKind::kInvalidSignature, "constructor '" + name + "' declared twice");
  }
  constructor_index_.emplace(name, constructors_.size());
  constructors_.push_back({name, std::move(arg), result});
}

bool Signature::is_well_formed(const Type& type) const {
  switch (type.kind()) {
    case Type::Kind::kName:
      return is_name_sort(type.sort());
    case Type::Kind::kData:
      return is_data_sort(type.sort());
    case Type::Kind::kUnit:
      return true;
    case Type::Kind::kAbs:
      return is_name_sort(type.sort()) && is_well_formed(type.body());
    case Type::Kind::kTuple:
      return std::all_of(type.items().begin(), type.items().end(),
                         [this](const Type& t) { return is_well_formed(t); });
  }
  return false;
}

const ConstructorDecl* Signature::constructor(const std::string& name) const {
  auto it = constructor_index_.find(name);
  return it == constructor_index_.end() ? nullptr : &constructors_[it->second];
}

std::vector<const ConstructorDecl*> Signature::constructors_of(const SortId& sort) const {
  std::vector<const ConstructorDecl*> out;
  for (const ConstructorDecl& c : constructors_) {
    if (c.result == sort) out.push_back(&c);
  }
  return out;
}

namespace {

bool inhabited_under(const Type& type, const std::set<SortId>& inhabited_data) {
  switch (type.kind()) {
    case Type::Kind::kName:
    case Type::Kind::kUnit:
      return true;
    case Type::Kind::kData:
      return inhabited_data.count(type.sort()) != 0;
    case Type::Kind::kAbs:
      return inhabited_under(type.body(), inhabited_data);
    case Type::Kind::kTuple:
      return std::all_of(type.items().begin(), type.items().end(), [&](const Type& t) {
        return inhabited_under(t, inhabited_data);
      });
  }
  return false;
}

// Least fixpoint: for each data sort, the first constructor (in declaration
// order, earliest round) whose argument type is inhabited.
std::map<SortId, const ConstructorDecl*> inhabitation_witnesses(const Signature& sig) {
  std::map<SortId, const ConstructorDecl*> witness;
  std::set<SortId> inhabited;
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<SortId> next = inhabited;
    for (const SortId& d : sig.data_sorts()) {
      if (inhabited.count(d) != 0) continue;
      for (const ConstructorDecl* c : sig.constructors_of(d)) {
        if (inhabited_under(c->arg, inhabited)) {
          witness.emplace(d, c);
          next.insert(d);
          changed = true;
          break;
        }
      }
    }
    inhabited = std::move(next);
  }
  return witness;
}

}  // namespace

void Signature::validate() const {
  for (const SortId& s : name_sorts_) {
    if (data_set_.count(s) != 0) {
      throw Error(ErrorKind::kInvalidSignature,
                  "sort '" + s + "' is declared both as a name sort and a data sort");
    }
  }
  for (const ConstructorDecl& c : constructors_) {
    if (!is_data_sort(c.result)) {
      throw Error(ErrorKind::kInvalidSignature, "constructor '" + c.name +
                                                    "' has undeclared result sort '" +
                                                    c.result + "'");
    }
    if (!is_well_formed(c.arg)) {
      throw Error(ErrorKind::kInvalidSignature, "constructor '" + c.name +
                                                    "' mentions an undeclared sort in " +
                                                    c.arg.to_string());
    }
  }
  auto witness = inhabitation_witnesses(*this);
  for (const SortId& d : data_sorts_) {
    if (witness.count(d) == 0) {
      throw Error(ErrorKind::kUninhabited, "data sort '" + d + "' has no finite inhabitant");
    }
  }
}

// ---------------------------------------------------------------------------
// Name / GroundTree

std::string Name::to_string() const { return "n" + std::to_string(index) + "@" + sort; }

GroundTree GroundTree::name(Name n) {
  GroundTree g;
  g.kind_ = Kind::kName;
  g.name_ = std::move(n);
  return g;
}

GroundTree GroundTree::unit() { return GroundTree(); }

GroundTree GroundTree::tuple(std::vector<GroundTree> items) {
  if (items.size() < 2) {
    throw Error(ErrorKind::kTypeMismatch, "tuples need at least two components");
  }
  GroundTree g;
  g.kind_ = Kind::kTuple;
  g.children_ = std::move(items);
  return g;
}

GroundTree GroundTree::app(std::string constructor, GroundTree arg) {
  GroundTree g;
  g.kind_ = Kind::kApp;
  g.constructor_ = std::move(constructor);
  g.children_.push_back(std::move(arg));
  return g;
}

GroundTree GroundTree::abs(Name binder, GroundTree body) {
  GroundTree g;
  g.kind_ = Kind::kAbs;
  g.name_ = std::move(binder);
  g.children_.push_back(std::move(body));
  return g;
}

std::string GroundTree::to_string() const {
  switch (kind_) {
    case Kind::kName:
      return name_.to_string();
    case Kind::kUnit:
      return "unit";
    case Kind::kApp:
      return "(con " + constructor_ + " " + child().to_string() + ")";
    case Kind::kAbs:
      return "(abs " + name_.to_string() + " " + child().to_string() + ")";
    case Kind::kTuple: {
      std::string out = "(tuple";
      for (const GroundTree& g : children_) out += " " + g.to_string();
      return out + ")";
    }
  }
  return {};
}

bool has_type(const Signature& sig, const GroundTree& g, const Type& type) {
  switch (g.kind()) {
    case GroundTree::Kind::kName:
      return type.kind() == Type::Kind::kName && g.name().sort == type.sort() &&
             sig.is_name_sort(type.sort());
    case GroundTree::Kind::kUnit:
      return type.kind() == Type::Kind::kUnit;
    case GroundTree::Kind::kTuple: {
      if (type.kind() != Type::Kind::kTuple || type.items().size() != g.items().size()) {
        return false;
      }
      for (std::size_t i = 0; i < g.items().size(); ++i) {
        if (!has_type(sig, g.items()[i], type.items()[i])) return false;
      }
      return true;
    }
    case GroundTree::Kind::kApp: {
      const ConstructorDecl* c = sig.constructor(g.constructor());
      return c != nullptr && type.kind() == Type::Kind::kData && c->result == type.sort() &&
             has_type(sig, g.child(), c->arg);
    }
    case GroundTree::Kind::kAbs:
      return type.kind() == Type::Kind::kAbs && g.name().sort == type.sort() &&
             sig.is_name_sort(type.sort()) && has_type(sig, g.child(), type.body());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::pair<Name, Name>> swaps) : swaps_(std::move(swaps)) {
  for (const auto& [a, b] : swaps_) {
    if (a.sort != b.sort) {
      throw Error(ErrorKind::kSortMismatch,
                  "cannot swap " + a.to_string() + " with " + b.to_string());
    }
  }
}

Permutation Permutation::swap(const Name& a, const Name& b) {
  return Permutation({{a, b}});
}

Name Permutation::apply(const Name& n) const {
  Name cur = n;
  for (auto it = swaps_.rbegin(); it != swaps_.rend(); ++it) {
    if (cur == it->first) {
      cur = it->second;
    } else if (cur == it->second) {
      cur = it->first;
    }
  }
  return cur;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.swaps_.assign(swaps_.rbegin(), swaps_.rend());
  return out;
}

Permutation Permutation::compose(const Permutation& first) const {
  Permutation out = *this;
  out.swaps_.insert(out.swaps_.end(), first.swaps_.begin(), first.swaps_.end());
  return out;
}

GroundTree perm_apply(const Permutation& pi, const GroundTree& g) {
  switch (g.kind()) {
    case GroundTree::Kind::kName:
      return GroundTree::name(pi.apply(g.name()));
    case GroundTree::Kind::kUnit:
      return g;
    case GroundTree::Kind::kTuple: {
      std::vector<GroundTree> items;
      items.reserve(g.items().size());
      for (const GroundTree& c : g.items()) items.push_back(perm_apply(pi, c));
      return GroundTree::tuple(std::move(items));
    }
    case GroundTree::Kind::kApp:
      return GroundTree::app(g.constructor(), perm_apply(pi, g.child()));
    case GroundTree::Kind::kAbs:
      return GroundTree::abs(pi.apply(g.name()), perm_apply(pi, g.child()));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence and freshness on ground trees

bool fresh_name(const Name& n, const GroundTree& g) {
  switch (g.kind()) {
    case GroundTree::Kind::kName:
      return n != g.name();
    case GroundTree::Kind::kUnit:
      return true;
    case GroundTree::Kind::kTuple:
      return std::all_of(g.items().begin(), g.items().end(),
                         [&](const GroundTree& c) { return fresh_name(n, c); });
    case GroundTree::Kind::kApp:
      return fresh_name(n, g.child());
    case GroundTree::Kind::kAbs:
      return n == g.name() || fresh_name(n, g.child());
  }
  return true;
}

bool alpha_equivalent(const GroundTree& g, const GroundTree& g2) {
  if (g.kind() != g2.kind()) return false;
  switch (g.kind()) {
    case GroundTree::Kind::kName:
      return g.name() == g2.name();
    case GroundTree::Kind::kUnit:
      return true;
    case GroundTree::Kind::kTuple: {
      if (g.items().size() != g2.items().size()) return false;
      for (std::size_t i = 0; i < g.items().size(); ++i) {
        if (!alpha_equivalent(g.items()[i], g2.items()[i])) return false;
      }
      return true;
    }
    case GroundTree::Kind::kApp:
      return g.constructor() == g2.constructor() && alpha_equivalent(g.child(), g2.child());
    case GroundTree::Kind::kAbs: {
      const Name& n = g.name();
      const Name& n2 = g2.name();
      if (n.sort != n2.sort) return false;
      if (n == n2) return alpha_equivalent(g.child(), g2.child());
      return fresh_name(n, g2.child()) &&
             alpha_equivalent(g.child(), perm_apply(Permutation::swap(n, n2), g2.child()));
    }
  }
  return false;
}

bool alpha_eq(const Signature& sig, const GroundTree& g, const GroundTree& g2,
              const Type& type) {
  if (!has_type(sig, g, type) || !has_type(sig, g2, type)) {
    throw Error(ErrorKind::kTypeMismatch, "alpha_eq arguments must both have type " +
                                              type.to_string());
  }
  return alpha_equivalent(g, g2);
}

namespace {

void collect_free(const GroundTree& g, std::vector<Name>& bound, std::set<Name>& out) {
  switch (g.kind()) {
    case GroundTree::Kind::kName:
      if (std::find(bound.begin(), bound.end(), g.name()) == bound.end()) out.insert(g.name());
      return;
    case GroundTree::Kind::kUnit:
      return;
    case GroundTree::Kind::kTuple:
      for (const GroundTree& c : g.items()) collect_free(c, bound, out);
      return;
    case GroundTree::Kind::kApp:
      collect_free(g.child(), bound, out);
      return;
    case GroundTree::Kind::kAbs:
      bound.push_back(g.name());
      collect_free(g.child(), bound, out);
      bound.pop_back();
      return;
  }
}

void collect_all(const GroundTree& g, std::set<Name>& out) {
  if (g.kind() == GroundTree::Kind::kName || g.kind() == GroundTree::Kind::kAbs) {
    out.insert(g.name());
  }
  for (const GroundTree& c : g.items()) collect_all(c, out);
}

}  // namespace

std::set<Name> free_names(const GroundTree& g) {
  std::set<Name> out;
  std::vector<Name> bound;
  collect_free(g, bound, out);
  return out;
}

std::set<Name> all_names(const GroundTree& g) {
  std::set<Name> out;
  collect_all(g, out);
  return out;
}

// ---------------------------------------------------------------------------
// AlphaTree

AlphaTree AlphaTree::free(Name n) {
  AlphaTree a;
  a.kind_ = Kind::kFree;
  a.name_ = std::move(n);
  return a;
}

AlphaTree AlphaTree::bound(std::size_t distance) {
  AlphaTree a;
  a.kind_ = Kind::kBound;
  a.distance_ = distance;
  return a;
}

AlphaTree AlphaTree::unit() { return AlphaTree(); }

AlphaTree AlphaTree::tuple(std::vector<AlphaTree> items) {
  if (items.size() < 2) {
    throw Error(ErrorKind::kTypeMismatch, "tuples need at least two components");
  }
  AlphaTree a;
  a.kind_ = Kind::kTuple;
  a.children_ = std::move(items);
  return a;
}

AlphaTree AlphaTree::app(std::string constructor, AlphaTree arg) {
  AlphaTree a;
  a.kind_ = Kind::kApp;
  a.constructor_ = std::move(constructor);
  a.children_.push_back(std::move(arg));
  return a;
}

AlphaTree AlphaTree::abs(SortId binder_sort, AlphaTree body) {
  AlphaTree a;
  a.kind_ = Kind::kAbs;
  a.name_.sort = std::move(binder_sort);
  a.children_.push_back(std::move(body));
  return a;
}

std::string AlphaTree::to_string() const { return representative(*this).to_string(); }

namespace {

bool alpha_has_type(const Signature& sig, const AlphaTree& a, const Type& type,
                    std::vector<SortId>& binders) {
  switch (a.kind()) {
    case AlphaTree::Kind::kFree:
      return type.kind() == Type::Kind::kName && a.name().sort == type.sort() &&
             sig.is_name_sort(type.sort());
    case AlphaTree::Kind::kBound:
      return type.kind() == Type::Kind::kName && a.distance() < binders.size() &&
             binders[binders.size() - 1 - a.distance()] == type.sort();
    case AlphaTree::Kind::kUnit:
      return type.kind() == Type::Kind::kUnit;
    case AlphaTree::Kind::kTuple: {
      if (type.kind() != Type::Kind::kTuple || type.items().size() != a.items().size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.items().size(); ++i) {
        if (!alpha_has_type(sig, a.items()[i], type.items()[i], binders)) return false;
      }
      return true;
    }
    case AlphaTree::Kind::kApp: {
      const ConstructorDecl* c = sig.constructor(a.constructor());
      return c != nullptr && type.kind() == Type::Kind::kData && c->result == type.sort() &&
             alpha_has_type(sig, a.child(), c->arg, binders);
    }
    case AlphaTree::Kind::kAbs: {
      if (type.kind() != Type::Kind::kAbs || a.sort() != type.sort() ||
          !sig.is_name_sort(type.sort())) {
        return false;
      }
      binders.push_back(a.sort());
      bool ok = alpha_has_type(sig, a.child(), type.body(), binders);
      binders.pop_back();
      return ok;
    }
  }
  return false;
}

AlphaTree canonicalize_under(const GroundTree& g, std::vector<Name>& binders) {
  switch (g.kind()) {
    case GroundTree::Kind::kName: {
      for (std::size_t d = 0; d < binders.size(); ++d) {
        if (binders[binders.size() - 1 - d] == g.name()) return AlphaTree::bound(d);
      }
      return AlphaTree::free(g.name());
    }
    case GroundTree::Kind::kUnit:
      return AlphaTree::unit();
    case GroundTree::Kind::kTuple: {
      std::vector<AlphaTree> items;
      items.reserve(g.items().size());
      for (const GroundTree& c : g.items()) items.push_back(canonicalize_under(c, binders));
      return AlphaTree::tuple(std::move(items));
    }
    case GroundTree::Kind::kApp:
      return AlphaTree::app(g.constructor(), canonicalize_under(g.child(), binders));
    case GroundTree::Kind::kAbs: {
      binders.push_back(g.name());
      AlphaTree body = canonicalize_under(g.child(), binders);
      binders.pop_back();
      return AlphaTree::abs(g.name().sort, std::move(body));
    }
  }
  return AlphaTree::unit();
}

void collect_free(const AlphaTree& a, std::set<Name>& out) {
  if (a.kind() == AlphaTree::Kind::kFree) out.insert(a.name());
  for (const AlphaTree& c : a.items()) collect_free(c, out);
}

GroundTree represent_under(const AlphaTree& a, std::vector<Name>& binders,
                           const std::set<Name>& avoid) {
  switch (a.kind()) {
    case AlphaTree::Kind::kFree:
      return GroundTree::name(a.name());
    case AlphaTree::Kind::kBound:
      return GroundTree::name(binders[binders.size() - 1 - a.distance()]);
    case AlphaTree::Kind::kUnit:
      return GroundTree::unit();
    case AlphaTree::Kind::kTuple: {
      std::vector<GroundTree> items;
      items.reserve(a.items().size());
      for (const AlphaTree& c : a.items()) items.push_back(represent_under(c, binders, avoid));
      return GroundTree::tuple(std::move(items));
    }
    case AlphaTree::Kind::kApp:
      return GroundTree::app(a.constructor(), represent_under(a.child(), binders, avoid));
    case AlphaTree::Kind::kAbs: {
      // Smallest index at this sort that is neither free in the whole tree nor
      // used by an enclosing binder, so no occurrence is captured.
      Name fresh{a.sort(), 0};
      while (avoid.count(fresh) != 0 ||
             std::find(binders.begin(), binders.end(), fresh) != binders.end()) {
        ++fresh.index;
      }
      binders.push_back(fresh);
      GroundTree body = represent_under(a.child(), binders, avoid);
      binders.pop_back();
      return GroundTree::abs(fresh, std::move(body));
    }
  }
  return GroundTree::unit();
}

// Replaces free occurrences of n by bound indices pointing at a binder placed
// `depth` levels above the current position.
AlphaTree close_over(const Name& n, const AlphaTree& a, std::size_t depth) {
  switch (a.kind()) {
    case AlphaTree::Kind::kFree:
      return a.name() == n ? AlphaTree::bound(depth) : a;
    case AlphaTree::Kind::kBound:
    case AlphaTree::Kind::kUnit:
      return a;
    case AlphaTree::Kind::kTuple: {
      std::vector<AlphaTree> items;
      items.reserve(a.items().size());
      for (const AlphaTree& c : a.items()) items.push_back(close_over(n, c, depth));
      return AlphaTree::tuple(std::move(items));
    }
    case AlphaTree::Kind::kApp:
      return AlphaTree::app(a.constructor(), close_over(n, a.child(), depth));
    case AlphaTree::Kind::kAbs:
      return AlphaTree::abs(a.sort(), close_over(n, a.child(), depth + 1));
  }
  return a;
}

}  // namespace

bool has_type(const Signature& sig, const AlphaTree& a, const Type& type) {
  std::vector<SortId> binders;
  return alpha_has_type(sig, a, type, binders);
}

AlphaTree perm_apply(const Permutation& pi, const AlphaTree& a) {
  switch (a.kind()) {
    case AlphaTree::Kind::kFree:
      return AlphaTree::free(pi.apply(a.name()));
    case AlphaTree::Kind::kBound:
    case AlphaTree::Kind::kUnit:
      return a;
    case AlphaTree::Kind::kTuple: {
      std::vector<AlphaTree> items;
      items.reserve(a.items().size());
      for (const AlphaTree& c : a.items()) items.push_back(perm_apply(pi, c));
      return AlphaTree::tuple(std::move(items));
    }
    case AlphaTree::Kind::kApp:
      return AlphaTree::app(a.constructor(), perm_apply(pi, a.child()));
    case AlphaTree::Kind::kAbs:
      return AlphaTree::abs(a.sort(), perm_apply(pi, a.child()));
  }
  return a;
}

AlphaTree canonicalize(const GroundTree& g) {
  std::vector<Name> binders;
  return canonicalize_under(g, binders);
}

GroundTree representative(const AlphaTree& a) {
  std::set<Name> avoid = free_names(a);
  std::vector<Name> binders;
  return represent_under(a, binders, avoid);
}

AlphaTree abstract(const Name& n, const AlphaTree& body) {
  return AlphaTree::abs(n.sort, close_over(n, body, 0));
}

std::set<Name> free_names(const AlphaTree& a) {
  std::set<Name> out;
  collect_free(a, out);
  return out;
}

std::size_t tree_size(const GroundTree& g) {
  switch (g.kind()) {
    case GroundTree::Kind::kName:
    case GroundTree::Kind::kUnit:
      return 1;
    case GroundTree::Kind::kApp:
      return 1 + tree_size(g.child());
    case GroundTree::Kind::kAbs:
      return 2 + tree_size(g.child());
    case GroundTree::Kind::kTuple: {
      std::size_t total = 1;
      for (const GroundTree& c : g.items()) total += tree_size(c);
      return total;
    }
  }
  return 1;
}

std::size_t tree_size(const AlphaTree& a) {
  switch (a.kind()) {
    case AlphaTree::Kind::kFree:
    case AlphaTree::Kind::kBound:
    case AlphaTree::Kind::kUnit:
      return 1;
    case AlphaTree::Kind::kApp:
      return 1 + tree_size(a.child());
    case AlphaTree::Kind::kAbs:
      return 2 + tree_size(a.child());
    case AlphaTree::Kind::kTuple: {
      std::size_t total = 1;
      for (const AlphaTree& c : a.items()) total += tree_size(c);
      return total;
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Inhabitants

namespace {

GroundTree build_inhabitant(const Signature& sig, const Type& type,
                            const std::map<SortId, const ConstructorDecl*>& witness,
                            const std::map<SortId, std::size_t>& name_index) {
  auto name_at = [&](const SortId& sort) {
    auto it = name_index.find(sort);
    return Name{sort, it == name_index.end() ? 0 : it->second};
  };
  switch (type.kind()) {
    case Type::Kind::kName:
      return GroundTree::name(name_at(type.sort()));
    case Type::Kind::kUnit:
      return GroundTree::unit();
    case Type::Kind::kAbs:
      return GroundTree::abs(name_at(type.sort()),
                             build_inhabitant(sig, type.body(), witness, name_index));
    case Type::Kind::kTuple: {
      std::vector<GroundTree> items;
      for (const Type& t : type.items()) {
        items.push_back(build_inhabitant(sig, t, witness, name_index));
      }
      return GroundTree::tuple(std::move(items));
    }
    case Type::Kind::kData: {
      auto it = witness.find(type.sort());
      if (it == witness.end()) {
        throw Error(ErrorKind::kUninhabited, "no inhabitant for " + type.to_string());
      }
      return GroundTree::app(it->second->name,
                             build_inhabitant(sig, it->second->arg, witness, name_index));
    }
  }
  return GroundTree::unit();
}

}  // namespace

GroundTree inhabitant(const Signature& sig, const Type& type) {
  return inhabitant(sig, type, {});
}

GroundTree inhabitant(const Signature& sig, const Type& type,
                      const std::map<SortId, std::size_t>& name_index) {
  if (!sig.is_well_formed(type)) {
    throw Error(ErrorKind::kTypeMismatch, type.to_string() + " is not a type of the signature");
  }
  // The fixpoint only picks a constructor once its argument type is already
  // inhabited by earlier rounds, so the recursion below is well-founded.
  return build_inhabitant(sig, type, inhabitation_witnesses(sig), name_index);
}

}  // namespace npnas

namespace npnas {

namespace {

template <class T>
std::strong_ordering compare_items(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const T& x, const T& y) { return x <=> y; });
}

}  // namespace

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.sort_ <=> b.sort_; c != 0) return c;
  return compare_items(a.children_, b.children_);
}

std::strong_ordering operator<=>(const AlphaTree& a, const AlphaTree& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (auto c = a.distance_ <=> b.distance_; c != 0) return c;
  if (auto c = a.constructor_ <=> b.constructor_; c != 0) return c;
  return compare_items(a.children_, b.children_);
}

}  // namespace npnas
