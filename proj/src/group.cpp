#include "mckaylab/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab {

namespace {

// Dense Cayley tables above this order would cost more memory than they save.
constexpr std::size_t kDenseTableLimit = 2048;

} // namespace

struct Group::Impl {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elems;
  std::unordered_map<Perm, Elem, PermHash> index;
  std::vector<Elem> table;
  std::vector<Elem> inverse;
  std::vector<std::uint32_t> word_gen;
  std::vector<Elem> word_parent;
  std::string name;

  mutable std::once_flag hash_once;
  mutable std::uint64_t hash = 0;

  Elem lookup(const Perm &p) const
  {
    auto it = index.find(p);
    if (it == index.end())
      throw Error("group is not closed under multiplication");
    return it->second;
  }

  Elem mul(Elem a, Elem b) const
  {
    if (!table.empty())
      return table[static_cast<std::size_t>(a) * elems.size() + b];
    return lookup(compose(elems[a], elems[b]));
  }
};

namespace {

void build_index(Group::Impl &impl)
{
  impl.index.reserve(impl.elems.size() * 2);
  for (std::size_t i = 0; i < impl.elems.size(); ++i) {
    if (!impl.index.emplace(impl.elems[i], static_cast<Elem>(i)).second)
      throw InvalidArgument("duplicate element in group element list");
  }
}

void build_table(Group::Impl &impl)
{
  const std::size_t n = impl.elems.size();
  if (n > kDenseTableLimit)
    return;
  impl.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      impl.table[a * n + b] = impl.lookup(compose(impl.elems[a], impl.elems[b]));
}

void build_inverses(Group::Impl &impl)
{
  impl.inverse.resize(impl.elems.size());
  for (std::size_t i = 0; i < impl.elems.size(); ++i)
    impl.inverse[i] = impl.lookup(inverse(impl.elems[i]));
}

// Breadth-first words over the generators, identity first.
void build_words(Group::Impl &impl)
{
  const std::size_t n = impl.elems.size();
  impl.word_gen.assign(n, 0);
  impl.word_parent.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<Elem> queue{0};
  seen[0] = 1;
  std::vector<Elem> gen_index;
  for (const auto &g : impl.gens)
    gen_index.push_back(impl.lookup(g));
  while (!queue.empty()) {
    Elem cur = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gen_index.size(); ++s) {
      Elem next = impl.mul(gen_index[s], cur);
      if (!seen[next]) {
        seen[next] = 1;
        impl.word_gen[next] = static_cast<std::uint32_t>(s);
        impl.word_parent[next] = cur;
        queue.push_back(next);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error("generators do not generate the element list");
}

// Greedy generating set: each element not yet reached becomes a generator.
std::vector<Perm> greedy_generators(const Group::Impl &impl)
{
  const std::size_t n = impl.elems.size();
  std::vector<char> in(n, 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  std::vector<Elem> gens;
  for (Elem cand = 1; cand < n; ++cand) {
    if (in[cand])
      continue;
    gens.push_back(cand);
    std::deque<Elem> queue(members.begin(), members.end());
    while (!queue.empty()) {
      Elem cur = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        Elem next = impl.mul(s, cur);
        if (!in[next]) {
          in[next] = 1;
          members.push_back(next);
          queue.push_back(next);
        }
      }
    }
  }
  std::vector<Perm> out;
  for (Elem g : gens)
    out.push_back(impl.elems[g]);
  return out;
}

} // namespace

Group::Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Group Group::from_generators(std::size_t degree, std::vector<Perm> gens, std::size_t max_order,
                             std::string name)
{
  for (const auto &g : gens) {
    if (g.size() != degree || !is_bijection(g))
      throw InvalidArgument(fmt::format("generator {} is not a permutation of {} points",
                                        g.size() == degree ? format_cycles(g) : "<wrong size>",
                                        degree));
  }
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->gens = std::move(gens);
  impl->name = std::move(name);

  std::unordered_map<Perm, Elem, PermHash> seen;
  impl->elems.push_back(identity_perm(degree));
  seen.emplace(impl->elems[0], 0);
  for (std::size_t head = 0; head < impl->elems.size(); ++head) {
    for (const auto &s : impl->gens) {
      Perm next = compose(s, impl->elems[head]);
      if (seen.contains(next))
        continue;
      if (impl->elems.size() >= max_order)
        throw CapExceeded(fmt::format("group order exceeds cap {}", max_order));
      seen.emplace(next, static_cast<Elem>(impl->elems.size()));
      impl->elems.push_back(std::move(next));
    }
  }
  impl->index = std::move(seen);
  build_table(*impl);
  build_inverses(*impl);
  build_words(*impl);
  if (impl->name.empty())
    impl->name = fmt::format("G{}", impl->elems.size());
  return Group(std::move(impl));
}

Group Group::from_elements(std::size_t degree, std::vector<Perm> elements, std::string name)
{
  if (elements.empty() || elements[0] != identity_perm(degree))
    throw InvalidArgument("element list must start with the identity");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->elems = std::move(elements);
  impl->name = std::move(name);
  for (const auto &e : impl->elems) {
    if (e.size() != degree || !is_bijection(e))
      throw InvalidArgument("element is not a permutation of the stated degree");
  }
  build_index(*impl);
  build_table(*impl);
  build_inverses(*impl);
  impl->gens = greedy_generators(*impl);
  build_words(*impl);
  if (impl->name.empty())
    impl->name = fmt::format("G{}", impl->elems.size());
  return Group(std::move(impl));
}

Group Group::from_cayley_table(std::size_t order, std::vector<Elem> table, std::string name)
{
  if (order == 0 || table.size() != order * order)
    throw InvalidArgument("Cayley table has the wrong size");
  std::vector<Perm> elems(order, Perm(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t x = 0; x < order; ++x) {
      Elem v = table[a * order + x];
      if (v >= order)
        throw InvalidArgument("Cayley table entry out of range");
      elems[a][x] = v;
    }
  if (elems[0] != identity_perm(order))
    throw InvalidArgument("Cayley table row 0 must be the identity");
  for (const auto &e : elems)
    if (!is_bijection(e))
      throw InvalidArgument("Cayley table row is not a permutation");
  auto impl = std::make_shared<Impl>();
  impl->degree = order;
  impl->elems = std::move(elems);
  impl->name = std::move(name);
  build_index(*impl);
  impl->table = std::move(table);
  build_inverses(*impl);
  impl->gens = greedy_generators(*impl);
  build_words(*impl);
  if (impl->name.empty())
    impl->name = fmt::format("G{}", order);
  return Group(std::move(impl));
}

std::size_t Group::degree() const { return impl_->degree; }
std::size_t Group::order() const { return impl_->elems.size(); }
const std::vector<Perm> &Group::generators() const { return impl_->gens; }
const std::vector<Perm> &Group::elements() const { return impl_->elems; }
const Perm &Group::element(Elem e) const { return impl_->elems.at(e); }
const std::string &Group::name() const { return impl_->name; }

Group Group::renamed(std::string name) const
{
  auto impl = std::make_shared<Impl>();
  impl->degree = impl_->degree;
  impl->gens = impl_->gens;
  impl->elems = impl_->elems;
  impl->index = impl_->index;
  impl->table = impl_->table;
  impl->inverse = impl_->inverse;
  impl->word_gen = impl_->word_gen;
  impl->word_parent = impl_->word_parent;
  impl->name = std::move(name);
  return Group(std::move(impl));
}

Elem Group::mul(Elem a, Elem b) const { return impl_->mul(a, b); }
Elem Group::inv(Elem a) const { return impl_->inverse[a]; }

std::optional<Elem> Group::find(const Perm &p) const
{
  auto it = impl_->index.find(p);
  if (it == impl_->index.end())
    return std::nullopt;
  return it->second;
}

Elem Group::index_of(const Perm &p) const
{
  auto e = find(p);
  if (!e)
    throw InvalidArgument(fmt::format("{} is not an element of {}", format_cycles(p), name()));
  return *e;
}

std::size_t Group::element_order(Elem e) const
{
  std::size_t k = 1;
  for (Elem x = e; x != 0; x = mul(x, e))
    ++k;
  return k;
}

std::size_t Group::exponent() const
{
  std::size_t e = 1;
  for (Elem x = 0; x < order(); ++x)
    e = std::lcm(e, element_order(x));
  return e;
}

bool Group::is_abelian() const
{
  // Generators commuting pairwise is enough.
  const auto &gens = impl_->gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
        return false;
  return true;
}

std::size_t Group::word_generator(Elem e) const { return impl_->word_gen.at(e); }
Elem Group::word_parent(Elem e) const { return impl_->word_parent.at(e); }

std::uint64_t Group::table_hash() const
{
  std::call_once(impl_->hash_once, [this] {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      for (int byte = 0; byte < 4; ++byte) {
        h ^= (v >> (8 * byte)) & 0xffu;
        h *= 1099511628211ull;
      }
    };
    const std::size_t n = order();
    mix(n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        mix(mul(a, b));
    impl_->hash = h;
  });
  return impl_->hash;
}

std::string Group::hash_hex() const { return fmt::format("{:016x}", table_hash()); }

bool Group::same_as(const Group &other) const
{
  return impl_ == other.impl_ ||
         (impl_->degree == other.impl_->degree && impl_->elems == other.impl_->elems);
}

// ---------------------------------------------------------------------------

struct Subgroup::Data {
  Data(Group p, std::vector<Elem> e, std::vector<char> m)
      : parent(std::move(p)), elems(std::move(e)), member(std::move(m))
  {
  }

  Group parent;
  std::vector<Elem> elems;
  std::vector<char> member;
  std::once_flag group_once;
  std::optional<Group> group;
};

Subgroup::Subgroup(Group parent, std::vector<Elem> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t n = parent.order();
  if (elements.empty() || elements.front() != 0)
    throw InvalidArgument("subgroup must contain the identity");
  if (elements.back() >= n)
    throw InvalidArgument("subgroup element index out of range");
  std::vector<char> member(n, 0);
  for (Elem e : elements)
    member[e] = 1;
  for (Elem a : elements)
    for (Elem b : elements)
      if (!member[parent.mul(a, b)])
        throw InvalidArgument("element set is not closed under multiplication");
  data_ = std::make_shared<Data>(std::move(parent), std::move(elements), std::move(member));
}

Subgroup::Subgroup(Group parent, std::vector<Elem> elements, Unchecked)
{
  std::sort(elements.begin(), elements.end());
  std::vector<char> member(parent.order(), 0);
  for (Elem e : elements)
    member[e] = 1;
  data_ = std::make_shared<Data>(std::move(parent), std::move(elements), std::move(member));
}

Subgroup Subgroup::whole(const Group &g)
{
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(g, std::move(all), Unchecked{});
}

Subgroup Subgroup::trivial(const Group &g) { return Subgroup(g, {0}, Unchecked{}); }

const Group &Subgroup::parent() const { return data_->parent; }
const std::vector<Elem> &Subgroup::elements() const { return data_->elems; }
std::size_t Subgroup::order() const { return data_->elems.size(); }
bool Subgroup::contains(Elem e) const { return e < data_->member.size() && data_->member[e]; }

const Group &Subgroup::as_group() const
{
  std::call_once(data_->group_once, [this] {
    std::vector<Perm> perms;
    perms.reserve(order());
    for (Elem e : data_->elems)
      perms.push_back(data_->parent.element(e));
    data_->group = Group::from_elements(data_->parent.degree(), std::move(perms),
                                        fmt::format("{}<{}>", data_->parent.name(), order()));
  });
  return *data_->group;
}

std::optional<Elem> Subgroup::to_local(Elem parent_elem) const
{
  auto it = std::lower_bound(data_->elems.begin(), data_->elems.end(), parent_elem);
  if (it == data_->elems.end() || *it != parent_elem)
    return std::nullopt;
  return static_cast<Elem>(it - data_->elems.begin());
}

bool Subgroup::operator==(const Subgroup &other) const
{
  return data_->parent.same_as(other.data_->parent) && data_->elems == other.data_->elems;
}

} // namespace mckaylab
