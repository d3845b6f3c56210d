#include "npnas/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "npnas/error.hpp"

namespace npnas {

namespace {

class Enumerator {
 public:
  Enumerator(const Signature& sig, std::size_t pool) : sig_(sig), pool_(pool) {}

  // Canonical trees of exactly `size` under enclosing binders `ctx`
  // (outermost first).
  const std::vector<AlphaTree>& exact(const Type& type, std::size_t size,
                                      const std::vector<SortId>& ctx) {
    auto key = std::make_tuple(type, size, ctx);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<AlphaTree> out = build(type, size, ctx);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::vector<AlphaTree> build(const Type& type, std::size_t size,
                               const std::vector<SortId>& ctx) {
    std::vector<AlphaTree> out;
    if (size == 0) return out;
    switch (type.kind()) {
      case Type::Kind::kName:
        if (size != 1) break;
        for (std::size_t d = 0; d < ctx.size(); ++d) {
          if (ctx[ctx.size() - 1 - d] == type.sort()) out.push_back(AlphaTree::bound(d));
        }
        for (std::size_t i = 0; i < pool_; ++i) out.push_back(AlphaTree::free(Name{type.sort(), i}));
        break;
      case Type::Kind::kUnit:
        if (size == 1) out.push_back(AlphaTree::unit());
        break;
      case Type::Kind::kData:
        for (const ConstructorDecl* c : sig_.constructors_of(type.sort())) {
          for (const AlphaTree& a : exact(c->arg, size - 1, ctx)) {
            out.push_back(AlphaTree::app(c->name, a));
          }
        }
        break;
      case Type::Kind::kAbs: {
        if (size < 3) break;
        std::vector<SortId> inner = ctx;
        inner.push_back(type.sort());
        for (const AlphaTree& a : exact(type.body(), size - 2, inner)) {
          out.push_back(AlphaTree::abs(type.sort(), a));
        }
        break;
      }
      case Type::Kind::kTuple: {
        std::vector<AlphaTree> prefix;
        tuple_items(type.items(), 0, size - 1, ctx, prefix, out);
        break;
      }
    }
    return out;
  }

  void tuple_items(const std::vector<Type>& types, std::size_t i, std::size_t remaining,
                   const std::vector<SortId>& ctx, std::vector<AlphaTree>& prefix,
                   std::vector<AlphaTree>& out) {
    if (i == types.size()) {
      if (remaining == 0) out.push_back(AlphaTree::tuple(prefix));
      return;
    }
    const std::size_t later = types.size() - i - 1;
    if (remaining < later + 1) return;
    for (std::size_t s = 1; s + later <= remaining; ++s) {
      // std::map nodes are stable, so the reference survives later inserts.
      const std::vector<AlphaTree>& here = exact(types[i], s, ctx);
      for (const AlphaTree& a : here) {
        prefix.push_back(a);
        tuple_items(types, i + 1, remaining - s, ctx, prefix, out);
        prefix.pop_back();
      }
    }
  }

  const Signature& sig_;
  std::size_t pool_;
  std::map<std::tuple<Type, std::size_t, std::vector<SortId>>, std::vector<AlphaTree>> memo_;
};

}  // namespace

std::vector<AlphaTree> enumerate_atrees(const Signature& sig, const Type& type,
                                        const EnumBounds& bounds) {
  Enumerator e(sig, bounds.pool);
  std::vector<AlphaTree> out;
  for (std::size_t n = 1; n <= bounds.max_tree_size; ++n) {
    const std::vector<AlphaTree>& here = e.exact(type, n, {});
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

OracleResult brute_sat(const Signature& sig, const Problem& p, const EnumBounds& bounds,
                       double max_assignments) {
  OracleResult result;
  std::map<SortId, std::size_t> per_sort;
  bool all_names = true;
  for (const auto& [x, type] : p.env) {
    if (type.is_name()) {
      ++per_sort[type.sort()];
    } else {
      all_names = false;
    }
  }
  result.exact = all_names && std::all_of(per_sort.begin(), per_sort.end(), [&](const auto& kv) {
                   return kv.second <= bounds.pool;
                 });

  std::vector<Var> order;
  std::vector<std::vector<AlphaTree>> candidates;
  double product = 1;
  for (const auto& [x, type] : p.env) {
    order.push_back(x);
    candidates.push_back(enumerate_atrees(sig, type, bounds));
    product *= static_cast<double>(candidates.back().size());
  }
  if (product > max_assignments) {
    throw Error(ErrorKind::kSearchSpaceTooLarge,
                "oracle would try about " + std::to_string(static_cast<long long>(product)) +
                    " valuations");
  }

  // Each constraint is checked as soon as its last variable is assigned.
  std::vector<std::vector<const AtomicConstraint*>> due(order.size() + 1);
  for (const AtomicConstraint& c : p.constraints) {
    std::size_t last = 0;
    for (const Var& x : vars(c)) {
      auto pos = std::find(order.begin(), order.end(), x);
      if (pos == order.end()) {
        throw Error(ErrorKind::kUnboundVariable, "variable '" + x.str() + "' is not declared");
      }
      last = std::max(last, static_cast<std::size_t>(pos - order.begin()) + 1);
    }
    due[last].push_back(&c);
  }

  Valuation v;
  auto check = [&](std::size_t level) {
    return std::all_of(due[level].begin(), due[level].end(),
                       [&](const AtomicConstraint* c) { return satisfies(v, *c); });
  };
  if (!check(0)) return result;

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    for (const AlphaTree& a : candidates[i]) {
      v.insert_or_assign(order[i], a);
      if (check(i + 1) && self(self, i + 1)) return true;
    }
    v.erase(order[i]);
    return false;
  };
  if (search(search, 0)) {
    result.sat = true;
    result.witness = v;
  }
  return result;
}

}  // namespace npnas
