#include "mckaylab/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "mckaylab/error.hpp"
#include "zmod.hpp"

namespace mckaylab {

using detail::RowBuilder;
using detail::SolutionModule;

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t m)
{
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

std::size_t ipow(std::size_t b, int e)
{
  std::size_t r = 1;
  for (int i = 0; i < e; ++i)
    r *= b;
  return r;
}

// Calls f(tuple) for every tuple in [lo, n)^d in lexicographic order.
template <typename F> void for_each_tuple(std::size_t n, int d, Elem lo, F &&f)
{
  std::vector<Elem> t(static_cast<std::size_t>(d), lo);
  if (n <= lo && d > 0)
    return;
  for (;;) {
    f(std::span<const Elem>(t));
    int i = d - 1;
    while (i >= 0 && ++t[i] == n) {
      t[i] = lo;
      --i;
    }
    if (i < 0)
      return;
  }
}

// Coordinate of a normalized cochain value at a tuple of non-identity elements.
std::uint32_t normalized_coord(std::size_t n, std::span<const Elem> args)
{
  std::size_t c = 0;
  for (Elem a : args)
    c = c * (n - 1) + (a - 1);
  return static_cast<std::uint32_t>(c);
}

// Terms of (df)(args) where f is an unknown normalized (d-1)-cochain whose
// coordinates start at `offset`. Face values with an identity argument vanish.
void coboundary_terms(const Group &g, std::span<const Elem> args, RowBuilder &row,
                      std::int64_t sign, std::uint32_t offset)
{
  const std::size_t d = args.size();
  const std::size_t n = g.order();
  if (d < 2)
    return;
  std::vector<Elem> face(d - 1);
  auto add_face = [&](std::int64_t s) {
    for (Elem a : face)
      if (a == 0)
        return;
    row.add(offset + normalized_coord(n, face), sign * s);
  };
  std::copy(args.begin() + 1, args.end(), face.begin());
  add_face(1);
  for (std::size_t i = 1; i < d; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i)
        continue;
      face[k++] = j == i - 1 ? g.mul(args[j], args[j + 1]) : args[j];
    }
    add_face(i % 2 == 1 ? -1 : 1);
  }
  std::copy(args.begin(), args.end() - 1, face.begin());
  add_face(d % 2 == 1 ? -1 : 1);
}

// Value of the coboundary of a stored table at a tuple of length degree + 1.
std::int64_t coboundary_value(const CocycleTable &f, std::span<const Elem> args)
{
  const Group &g = f.group();
  const std::size_t d = args.size();
  std::vector<Elem> face(d - 1);
  std::int64_t v = 0;
  std::copy(args.begin() + 1, args.end(), face.begin());
  v += f.at(face);
  for (std::size_t i = 1; i < d; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i)
        continue;
      face[k++] = j == i - 1 ? g.mul(args[j], args[j + 1]) : args[j];
    }
    v += (i % 2 == 1 ? -1 : 1) * static_cast<std::int64_t>(f.at(face));
  }
  std::copy(args.begin(), args.end() - 1, face.begin());
  v += (d % 2 == 1 ? -1 : 1) * static_cast<std::int64_t>(f.at(face));
  return v;
}

// Distinct non-identity generator indices.
std::vector<Elem> generator_indices(const Group &g)
{
  std::vector<Elem> out;
  for (const auto &p : g.generators()) {
    Elem e = g.index_of(p);
    if (e != 0 && std::find(out.begin(), out.end(), e) == out.end())
      out.push_back(e);
  }
  return out;
}

// Equations (df)(s, g2, ..., gd) = 0 with s a generator. They imply df = 0:
// from d(df) = 0, (df)(s w, ...) = (df)(w, ...) once the s-rows vanish, and
// induction on word length reaches every first argument.
template <typename F> void for_each_generator_row(const Group &g, int d, F &&f)
{
  const std::size_t n = g.order();
  std::vector<Elem> t(static_cast<std::size_t>(d));
  for (Elem s : generator_indices(g)) {
    t[0] = s;
    for_each_tuple(n, d - 1, 1, [&](std::span<const Elem> rest) {
      std::copy(rest.begin(), rest.end(), t.begin() + 1);
      f(std::span<const Elem>(t));
    });
  }
}

void check_budget(std::size_t equations, std::size_t budget, std::string_view what)
{
  if (equations > budget)
    throw CapExceeded(
        fmt::format("{} needs {} equations, budget is {}", what, equations, budget));
}

// Hom(G, Z/e) as integer lifts in [0, e).
std::vector<std::vector<std::uint32_t>> homomorphisms(const Group &g, std::uint32_t e)
{
  const std::size_t n = g.order();
  SolutionModule sol(n - 1, e);
  RowBuilder row(e);
  for_each_generator_row(g, 2, [&](std::span<const Elem> t) {
    coboundary_terms(g, t, row, 1, 0);
    auto terms = row.take();
    sol.add_equation(terms);
  });
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto &v : sol.generators()) {
    std::vector<std::uint32_t> a(n, 0);
    std::copy(v.begin(), v.end(), a.begin() + 1);
    out.push_back(std::move(a));
  }
  return out;
}

// The extra C*-coboundaries: d of zeta_{em}^{a~}, which is mu_m-valued.
std::vector<CocycleTable> character_coboundaries(const Group &g, std::uint32_t m)
{
  const std::size_t n = g.order();
  const auto e = static_cast<std::uint32_t>(g.exponent());
  std::vector<CocycleTable> out;
  if (e == 1 || m == 1)
    return out;
  for (const auto &a : homomorphisms(g, e)) {
    CocycleTable c(g, 2, m);
    bool zero = true;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        std::int64_t s = std::int64_t{a[x]} + a[y] - a[g.mul(x, y)];
        std::uint32_t v = reduce(s / e, m);
        if (v != 0) {
          Elem args[2] = {x, y};
          c.set(args, v);
          zero = false;
        }
      }
    if (!zero)
      out.push_back(std::move(c));
  }
  return out;
}

// Generators of Z^2(G, Z/m), normalized. A normalized cocycle is fixed by its
// values theta(s, x) on generators s, because
//   theta(s p, h) = theta(s, p h) + theta(p, h) - theta(s, p),
// so those are the unknowns; theta(w, h) is expanded along the generator
// words and the remaining identities (d theta)(s, x, h) = 0 are imposed.
std::vector<CocycleTable> cocycle_basis(const Group &g, std::uint32_t m)
{
  const std::size_t n = g.order();
  const std::vector<Elem> gens = generator_indices(g);
  const std::size_t u = gens.size() * (n - 1);
  auto unknown = [&](std::size_t si, Elem x) { return si * (n - 1) + (x - 1); };

  std::vector<std::size_t> gen_slot(g.generators().size());
  for (std::size_t i = 0; i < gen_slot.size(); ++i)
    gen_slot[i] = static_cast<std::size_t>(
        std::find(gens.begin(), gens.end(), g.index_of(g.generators()[i])) - gens.begin());

  // Elements with every word parent listed before its children.
  std::vector<std::vector<Elem>> children(n);
  for (Elem w = 1; w < n; ++w)
    children[g.word_parent(w)].push_back(w);
  std::vector<Elem> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Elem c : children[order[i]])
      order.push_back(c);

  // expr[w * n + h] holds theta(w, h) as a combination of the unknowns.
  std::vector<std::uint32_t> expr(n * n * u, 0);
  auto row_of = [&](Elem w, Elem h) {
    return expr.data() + (static_cast<std::size_t>(w) * n + h) * u;
  };
  for (Elem w : order) {
    if (w == 0)
      continue;
    const std::size_t si = gen_slot[g.word_generator(w)];
    const Elem p = g.word_parent(w);
    for (Elem h = 1; h < n; ++h) {
      std::uint32_t *dst = row_of(w, h);
      const std::uint32_t *src = row_of(p, h);
      for (std::size_t k = 0; k < u; ++k)
        dst[k] = src[k];
      const Elem ph = g.mul(p, h);
      if (ph != 0)
        dst[unknown(si, ph)] = (dst[unknown(si, ph)] + 1) % m;
      if (p != 0)
        dst[unknown(si, p)] = (dst[unknown(si, p)] + m - 1) % m;
    }
  }

  SolutionModule sol(u, m);
  std::vector<std::int64_t> acc(u);
  std::vector<detail::Term> terms;
  for (std::size_t si = 0; si < gens.size(); ++si) {
    const Elem sgen = gens[si];
    for (Elem x = 1; x < n; ++x) {
      const Elem sx = g.mul(sgen, x);
      for (Elem h = 1; h < n; ++h) {
        std::fill(acc.begin(), acc.end(), 0);
        const std::uint32_t *a = row_of(x, h);
        const std::uint32_t *b = row_of(sx, h);
        for (std::size_t k = 0; k < u; ++k)
          acc[k] = std::int64_t{a[k]} - b[k];
        const Elem xh = g.mul(x, h);
        if (xh != 0)
          acc[unknown(si, xh)] += 1;
        acc[unknown(si, x)] -= 1;
        terms.clear();
        for (std::size_t k = 0; k < u; ++k)
          if (auto c = reduce(acc[k], m))
            terms.emplace_back(static_cast<std::uint32_t>(k), c);
        sol.add_equation(terms);
      }
    }
  }

  std::vector<CocycleTable> out;
  for (const auto &v : sol.generators()) {
    std::vector<std::uint32_t> values(n * n, 0);
    for (Elem w = 1; w < n; ++w)
      for (Elem h = 1; h < n; ++h) {
        const std::uint32_t *e = row_of(w, h);
        std::uint64_t t = 0;
        for (std::size_t k = 0; k < u; ++k)
          t += std::uint64_t{e[k]} * v[k];
        values[static_cast<std::size_t>(w) * n + h] = static_cast<std::uint32_t>(t % m);
      }
    out.emplace_back(g, 2, m, std::move(values));
  }
  return out;
}

// Generators of {(f, c, t) : d f + sum c_i s_i = t * target} with f a
// normalized (degree-1)-cochain. Coordinates: f first, then c, then t.
struct SpanSolve {
  std::size_t f_unknowns = 0;
  std::vector<std::vector<std::uint32_t>> generators;
};

SpanSolve solve_span(const Group &g, int degree, std::uint32_t m,
                     const std::vector<const CocycleTable *> &spans,
                     const std::vector<const CocycleTable *> &targets)
{
  const std::size_t n = g.order();
  SpanSolve out;
  out.f_unknowns = degree >= 2 ? ipow(n - 1, degree - 1) : 0;
  const auto f_n = static_cast<std::uint32_t>(out.f_unknowns);
  const auto s_n = static_cast<std::uint32_t>(spans.size());
  SolutionModule sol(out.f_unknowns + spans.size() + targets.size(), m);
  RowBuilder row(m);
  for_each_tuple(n, degree, 1, [&](std::span<const Elem> t) {
    coboundary_terms(g, t, row, 1, 0);
    for (std::uint32_t i = 0; i < s_n; ++i)
      if (auto v = spans[i]->at(t))
        row.add(f_n + i, v);
    for (std::uint32_t i = 0; i < targets.size(); ++i)
      if (auto v = targets[i]->at(t))
        row.add(f_n + s_n + i, -static_cast<std::int64_t>(v));
    auto terms = row.take();
    sol.add_equation(terms);
  });
  out.generators = sol.generators();
  return out;
}

std::uint32_t order_modulo(const CocycleTable &c, const std::vector<const CocycleTable *> &spans)
{
  const std::uint32_t m = c.modulus();
  if (m == 1)
    return 1;
  auto solved = solve_span(c.group(), c.degree(), m, spans, {&c});
  std::uint32_t g = m;
  for (const auto &v : solved.generators)
    g = std::gcd(g, v.back());
  return g;
}

void require_normalized_cocycle(const CocycleTable &c)
{
  if (!c.is_normalized())
    throw InvalidArgument("cochain is not normalized");
  if (!cocycle_check(c))
    throw InvalidArgument(fmt::format("table is not a {}-cocycle", c.degree()));
}

} // namespace

// ---------------------------------------------------------------------------

CocycleTable::CocycleTable(Group group, int degree, std::uint32_t modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus), n_(group_.order())
{
  if (degree < 0 || degree > 4)
    throw InvalidArgument(fmt::format("unsupported cochain degree {}", degree));
  if (modulus == 0)
    throw InvalidArgument("modulus must be positive");
  values_.assign(ipow(n_, degree), 0);
}

CocycleTable::CocycleTable(Group group, int degree, std::uint32_t modulus,
                           std::vector<std::uint32_t> values)
    : CocycleTable(std::move(group), degree, modulus)
{
  if (values.size() != values_.size())
    throw InvalidArgument(fmt::format("cochain table has {} entries, expected {}", values.size(),
                                      values_.size()));
  for (auto v : values)
    if (v >= modulus)
      throw InvalidArgument(fmt::format("cochain value {} outside Z/{}", v, modulus));
  values_ = std::move(values);
}

std::size_t CocycleTable::index(std::span<const Elem> args) const
{
  std::size_t i = 0;
  for (Elem a : args)
    i = i * n_ + a;
  return i;
}

void CocycleTable::set(std::span<const Elem> args, std::uint32_t value)
{
  if (args.size() != static_cast<std::size_t>(degree_))
    throw InvalidArgument("wrong number of cochain arguments");
  values_[index(args)] = value % modulus_;
}

bool CocycleTable::is_normalized() const
{
  bool ok = true;
  for_each_tuple(n_, degree_, 0, [&](std::span<const Elem> t) {
    if (ok && std::find(t.begin(), t.end(), Elem{0}) != t.end() && values_[index(t)] != 0)
      ok = false;
  });
  return ok;
}

bool CocycleTable::is_zero() const
{
  return std::all_of(values_.begin(), values_.end(), [](std::uint32_t v) { return v == 0; });
}

CocycleTable CocycleTable::operator+(const CocycleTable &other) const
{
  if (!group_.same_as(other.group_) || degree_ != other.degree_ || modulus_ != other.modulus_)
    throw InvalidArgument("adding incompatible cochains");
  CocycleTable r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i)
    r.values_[i] = (values_[i] + other.values_[i]) % modulus_;
  return r;
}

CocycleTable CocycleTable::scaled(std::int64_t k) const
{
  CocycleTable r = *this;
  for (auto &v : r.values_)
    v = reduce(k * v, modulus_);
  return r;
}

CocycleTable CocycleTable::lifted(std::uint32_t factor) const
{
  CocycleTable r(group_, degree_, modulus_ * factor);
  for (std::size_t i = 0; i < values_.size(); ++i)
    r.values_[i] = values_[i] * factor;
  return r;
}

bool CocycleTable::operator==(const CocycleTable &other) const
{
  return degree_ == other.degree_ && modulus_ == other.modulus_ &&
         group_.same_as(other.group_) && values_ == other.values_;
}

bool cocycle_check(const CocycleTable &c)
{
  bool ok = true;
  const std::uint32_t m = c.modulus();
  const Group &g = c.group();
  const auto n = static_cast<Elem>(g.order());
  if (c.degree() == 2) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = g.mul(a, b);
        for (Elem d = 0; d < n; ++d)
          if ((c(b, d) + c(a, g.mul(b, d))) % m != (c(ab, d) + c(a, b)) % m)
            return false;
      }
    return true;
  }
  if (c.degree() == 3) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = g.mul(a, b);
        for (Elem d = 0; d < n; ++d) {
          const Elem bd = g.mul(b, d);
          const std::uint64_t abd = c(a, b, d);
          for (Elem e = 0; e < n; ++e) {
            const std::uint64_t lhs = std::uint64_t{c(b, d, e)} + c(a, bd, e) + abd;
            const std::uint64_t rhs = std::uint64_t{c(ab, d, e)} + c(a, b, g.mul(d, e));
            if (lhs % m != rhs % m)
              return false;
          }
        }
      }
    return true;
  }
  for_each_tuple(c.group().order(), c.degree() + 1, 0, [&](std::span<const Elem> t) {
    if (ok && reduce(coboundary_value(c, t), m) != 0)
      ok = false;
  });
  return ok;
}

CocycleTable coboundary(const CocycleTable &f)
{
  if (f.degree() >= 4)
    throw InvalidArgument("coboundary is only available up to degree 4");
  CocycleTable r(f.group(), f.degree() + 1, f.modulus());
  std::vector<std::uint32_t> values(r.values().size());
  std::size_t i = 0;
  for_each_tuple(f.group().order(), f.degree() + 1, 0, [&](std::span<const Elem> t) {
    values[i++] = reduce(coboundary_value(f, t), f.modulus());
  });
  return CocycleTable(f.group(), f.degree() + 1, f.modulus(), std::move(values));
}

std::size_t H2Structure::order() const
{
  std::size_t r = 1;
  for (auto d : divisors)
    r *= d;
  return r;
}

H2Structure h2_structure(const Group &g, std::uint32_t modulus, std::size_t budget)
{
  if (modulus == 0)
    throw InvalidArgument("modulus must be positive");
  const std::size_t n = g.order();
  H2Structure out;
  out.modulus = modulus;
  if (n <= 2 || modulus == 1)
    return out;
  check_budget(generator_indices(g).size() * ipow(n - 1, 2), budget, "H^2 computation");

  out.coboundary_generators = character_coboundaries(g, modulus);
  std::vector<CocycleTable> cocycles = cocycle_basis(g, modulus);

  if (cocycles.empty())
    return out;

  // Relations among all Z^2 generators modulo the C*-coboundaries.
  std::vector<const CocycleTable *> spans;
  for (const auto &b : out.coboundary_generators)
    spans.push_back(&b);
  std::vector<const CocycleTable *> targets;
  for (const auto &z : cocycles)
    targets.push_back(&z);
  auto solved = solve_span(g, 2, modulus, spans, targets);
  const std::size_t k = cocycles.size();
  const std::size_t skip = solved.f_unknowns + spans.size();
  detail::IntMatrix rel(solved.generators.size(), k);
  for (std::size_t r = 0; r < solved.generators.size(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      rel.at(r, j) = solved.generators[r][skip + j];

  auto snf = detail::smith_normal_form_mod(rel, modulus);
  auto diag = snf.diagonal();
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t d = diag[i];
    if (d == 1)
      continue;
    CocycleTable gen(g, 2, modulus);
    for (std::size_t j = 0; j < k; ++j)
      gen = gen + cocycles[j].scaled(snf.v_inverse.at(i, j));
    out.generators.push_back(std::move(gen));
    out.divisors.push_back(static_cast<std::uint32_t>(d));
  }
  return out;
}

std::uint32_t class_order(const CocycleTable &c, std::size_t budget)
{
  require_normalized_cocycle(c);
  const std::size_t n = c.group().order();
  if (n <= 1)
    return 1;
  switch (c.degree()) {
  case 2: {
    check_budget(ipow(n - 1, 2), budget, "class order");
    auto extra = character_coboundaries(c.group(), c.modulus());
    std::vector<const CocycleTable *> spans;
    for (const auto &b : extra)
      spans.push_back(&b);
    return order_modulo(c, spans);
  }
  case 3:
    check_budget(ipow(n - 1, 3), budget, "class order");
    return order_modulo(c, {});
  default:
    throw InvalidArgument("class_order supports degrees 2 and 3");
  }
}

CocycleTable restrict_cocycle(const CocycleTable &c, const Subgroup &h)
{
  if (!h.parent().same_as(c.group()))
    throw InvalidArgument("subgroup of a different group");
  const Group &local = h.as_group();
  CocycleTable r(local, c.degree(), c.modulus());
  std::vector<Elem> parent(static_cast<std::size_t>(c.degree()));
  for_each_tuple(local.order(), c.degree(), 0, [&](std::span<const Elem> t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      parent[i] = h.to_parent(t[i]);
    if (auto v = c.at(parent))
      r.set(t, v);
  });
  return r;
}

// ---------------------------------------------------------------------------

CocycleFamily::CocycleFamily(GSet gset, std::uint32_t modulus)
    : gset_(std::move(gset)), modulus_(modulus), n_(gset_.group().order())
{
  if (modulus == 0)
    throw InvalidArgument("modulus must be positive");
  values_.assign(gset_.size() * n_ * n_, 0);
}

CocycleFamily::CocycleFamily(GSet gset, std::uint32_t modulus, std::vector<std::uint32_t> values)
    : CocycleFamily(std::move(gset), modulus)
{
  if (values.size() != values_.size())
    throw InvalidArgument("cocycle family has the wrong number of entries");
  for (auto v : values)
    if (v >= modulus)
      throw InvalidArgument(fmt::format("family value {} outside Z/{}", v, modulus));
  values_ = std::move(values);
}

CocycleTable CocycleFamily::component(Point x) const
{
  if (x >= gset_.size())
    throw InvalidArgument(fmt::format("point {} out of range", x));
  Subgroup stab = stabilizer(gset_, x);
  const Group &local = stab.as_group();
  CocycleTable r(local, 2, modulus_);
  for (Elem a = 0; a < local.order(); ++a)
    for (Elem b = 0; b < local.order(); ++b) {
      Elem args[2] = {a, b};
      r.set(args, (*this)(x, stab.to_parent(a), stab.to_parent(b)));
    }
  return r;
}

bool family_check(const CocycleFamily &alpha)
{
  const Group &g = alpha.group();
  const GSet &xs = alpha.gset();
  const std::size_t n = g.order();
  const std::uint32_t m = alpha.modulus();
  for (Point x = 0; x < xs.size(); ++x)
    for (Elem a = 0; a < n; ++a)
      if (alpha(x, 0, a) != 0 || alpha(x, a, 0) != 0)
        return false;
  for (Point x = 0; x < xs.size(); ++x)
    for (Elem a = 1; a < n; ++a) {
      const Point ax = xs.act(g.inv(a), x);
      for (Elem b = 1; b < n; ++b) {
        const Elem ab = g.mul(a, b);
        for (Elem c = 1; c < n; ++c) {
          std::uint64_t lhs = std::uint64_t{alpha(x, a, b)} + alpha(x, ab, c);
          std::uint64_t rhs = std::uint64_t{alpha(x, a, g.mul(b, c))} + alpha(ax, b, c);
          if (lhs % m != rhs % m)
            return false;
        }
      }
    }
  return true;
}

CocycleFamily constant_family(const GSet &x, const CocycleTable &theta)
{
  if (theta.degree() != 2 || !theta.group().same_as(x.group()))
    throw InvalidArgument("constant family needs a 2-cochain on the acting group");
  const std::size_t n = theta.group().order();
  std::vector<std::uint32_t> values;
  values.reserve(x.size() * n * n);
  for (Point p = 0; p < x.size(); ++p)
    values.insert(values.end(), theta.values().begin(), theta.values().end());
  return CocycleFamily(x, theta.modulus(), std::move(values));
}

namespace {

std::uint32_t transgression_value(const CocycleTable &w, Elem x, Elem a, Elem b)
{
  const Group &g = w.group();
  const std::uint32_t m = w.modulus();
  const Elem ab = g.mul(a, b);
  const Elem x_ab = g.mul(g.mul(g.inv(ab), x), ab);
  const Elem x_a = g.mul(g.mul(g.inv(a), x), a);
  std::int64_t v = std::int64_t{w(x, a, b)} + w(a, b, x_ab) - w(a, x_a, b);
  return reduce(v, m);
}

} // namespace

CocycleFamily transgression_family(const CocycleTable &omega)
{
  if (omega.degree() != 3)
    throw InvalidArgument("transgression needs a 3-cocycle");
  require_normalized_cocycle(omega);
  const Group &g = omega.group();
  const std::size_t n = g.order();
  CocycleFamily fam(conjugation_gset(g), omega.modulus());
  for (Elem x = 0; x < n; ++x)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        fam.set(x, a, b, transgression_value(omega, x, a, b));
  return fam;
}

CocycleTable dpr_transgression(const CocycleTable &omega, Elem x)
{
  if (omega.degree() != 3)
    throw InvalidArgument("transgression needs a 3-cocycle");
  require_normalized_cocycle(omega);
  const Group &g = omega.group();
  if (x >= g.order())
    throw InvalidArgument(fmt::format("element {} out of range", x));
  Subgroup c = centralizer(g, x);
  const Group &local = c.as_group();
  CocycleTable r(local, 2, omega.modulus());
  for (Elem a = 0; a < local.order(); ++a)
    for (Elem b = 0; b < local.order(); ++b) {
      Elem args[2] = {a, b};
      r.set(args, transgression_value(omega, x, c.to_parent(a), c.to_parent(b)));
    }
  return r;
}

std::vector<CocycleTable> standard_3cocycles_cyclic(const Group &cyclic, std::uint32_t modulus)
{
  const std::size_t n = cyclic.order();
  if (modulus == 0 || modulus % n != 0)
    throw InvalidArgument(fmt::format("modulus {} is not a multiple of {}", modulus, n));
  std::vector<Elem> power(n, 0);
  std::vector<std::uint32_t> log(n, 0);
  Elem gen = 0;
  for (Elem e = 0; e < n; ++e)
    if (cyclic.element_order(e) == n) {
      gen = e;
      break;
    }
  if (cyclic.element_order(gen) != n)
    throw InvalidArgument(fmt::format("{} is not cyclic", cyclic.name()));
  for (std::size_t k = 1; k < n; ++k)
    power[k] = cyclic.mul(gen, power[k - 1]);
  for (std::size_t k = 0; k < n; ++k)
    log[power[k]] = static_cast<std::uint32_t>(k);

  const std::uint64_t step = modulus / n;
  std::vector<CocycleTable> out;
  for (std::uint64_t q = 0; q < n; ++q) {
    CocycleTable c(cyclic, 3, modulus);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem d = 0; d < n; ++d) {
          std::uint64_t carry = (std::uint64_t{log[b]} + log[d]) / n;
          Elem args[3] = {a, b, d};
          c.set(args, static_cast<std::uint32_t>((q * log[a] * carry * step) % modulus));
        }
    if (!cocycle_check(c) || !c.is_normalized())
      throw VerificationError(fmt::format("standard 3-cochain q={} on C{} is not a cocycle", q, n));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CocycleTable> inflated_3cocycles(const Group &g, std::uint32_t k)
{
  if (k < 2)
    throw InvalidArgument("inflation needs a cyclic quotient of order at least 2");
  const std::size_t n = g.order();
  std::vector<CocycleTable> out;
  for (const auto &a : homomorphisms(g, k)) {
    CocycleTable c(g, 3, k);
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y)
        for (Elem z = 1; z < n; ++z) {
          const std::uint64_t carry = (std::uint64_t{a[y]} + a[z]) / k;
          Elem args[3] = {x, y, z};
          c.set(args, static_cast<std::uint32_t>((a[x] * carry) % k));
        }
    if (!cocycle_check(c))
      throw VerificationError("inflated 3-cochain is not a cocycle");
    out.push_back(std::move(c));
  }
  return out;
}

CocycleFamily restrict_family(const CocycleFamily &alpha, const Subgroup &h)
{
  if (!h.parent().same_as(alpha.group()))
    throw InvalidArgument("subgroup of a different group");
  GSet local = restrict_gset(alpha.gset(), h);
  const std::size_t k = h.order();
  CocycleFamily out(local, alpha.modulus());
  for (Point x = 0; x < local.size(); ++x)
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        out.set(x, a, b, alpha(x, h.to_parent(a), h.to_parent(b)));
  return out;
}

nlohmann::json cocycle_to_json(const CocycleTable &c)
{
  return {{"degree", c.degree()},
          {"modulus", c.modulus()},
          {"group", c.group().hash_hex()},
          {"values", c.values()}};
}

CocycleTable cocycle_from_json(const nlohmann::json &j, const Group &g)
{
  try {
    const auto hash = j.at("group").get<std::string>();
    if (hash != g.hash_hex())
      throw InvalidArgument(
          fmt::format("cocycle is for group {}, not {}", hash, g.hash_hex()));
    return CocycleTable(g, j.at("degree").get<int>(), j.at("modulus").get<std::uint32_t>(),
                        j.at("values").get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(fmt::format("bad cocycle JSON: {}", e.what()));
  }
}

} // namespace mckaylab
