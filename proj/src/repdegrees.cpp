#include "mckaylab/repdegrees.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab {

DegreeMultiset::DegreeMultiset(std::vector<std::uint64_t> degrees) : degrees_(std::move(degrees))
{
  for (auto d : degrees_)
    if (d == 0)
      throw InvalidArgument("degrees must be positive");
  std::sort(degrees_.begin(), degrees_.end());
}

std::uint64_t DegreeMultiset::sum_of_squares() const
{
  std::uint64_t s = 0;
  for (auto d : degrees_)
    s += d * d;
  return s;
}

std::size_t DegreeMultiset::count_equal(std::uint64_t d) const
{
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), d));
}

std::size_t DegreeMultiset::count_coprime(std::uint64_t p) const
{
  return static_cast<std::size_t>(
      std::count_if(degrees_.begin(), degrees_.end(), [p](auto d) { return std::gcd(d, p) == 1; }));
}

void DegreeMultiset::add_scaled(const DegreeMultiset &other, std::uint64_t scale)
{
  for (auto d : other.degrees_)
    degrees_.push_back(d * scale);
  std::sort(degrees_.begin(), degrees_.end());
}

std::string DegreeMultiset::to_string() const { return fmt::format("{}", fmt::join(degrees_, " ")); }

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

struct Field {
  u64 q;
  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return a * b % q; }
  u64 pow(u64 a, u64 e) const
  {
    u64 r = 1;
    a %= q;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, q - 2); }
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field &f, std::vector<Vec> &rows)
{
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0)
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    const u64 s = f.inv(rows[r][c]);
    for (auto &x : rows[r])
      x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      const u64 factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : A x = 0} for a square matrix given by rows.
std::vector<Vec> nullspace(const Field &f, std::vector<Vec> a)
{
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = rref(f, a);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(xI - A), coefficients low to high, via
// reduction to upper Hessenberg form.
Vec char_poly(const Field &f, std::vector<Vec> h)
{
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (auto &row : h)
        std::swap(row[piv], row[c + 1]);
    }
    const u64 inv = f.inv(h[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h[i][c] == 0)
        continue;
      const u64 t = f.mul(h[i][c], inv);
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = f.sub(h[i][j], f.mul(t, h[c + 1][j]));
      for (std::size_t j = 0; j < n; ++j)
        h[j][c + 1] = f.add(h[j][c + 1], f.mul(t, h[j][i]));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[k - 1][d]);
      next[d] = f.sub(next[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      if (prod == 0)
        break;
      const u64 coef = f.mul(h[i - 1][k - 1], prod);
      for (std::size_t d = 0; d < p[i - 1].size(); ++d)
        next[d] = f.sub(next[d], f.mul(coef, p[i - 1][d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

u64 eval_poly(const Field &f, const Vec &poly, u64 x)
{
  u64 r = 0;
  for (std::size_t i = poly.size(); i-- > 0;)
    r = f.add(f.mul(r, x), poly[i]);
  return r;
}

u64 find_prime(u64 exponent, u64 order)
{
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  constexpr u64 limit = u64{1} << 31;
  for (u64 q = exponent + 1; q < limit; q += exponent)
    if (static_cast<double>(q) > bound && is_prime(q))
      return q;
  throw Error(fmt::format("no prime q = 1 mod {} below 2^31", exponent));
}

// Central characters of every irreducible, with their degrees.
struct DixonData {
  u64 q = 0;
  ClassPartition classes;
  std::vector<Vec> central; // central[chi][j] = omega_chi(K_j)
  std::vector<u64> degrees;
};

std::shared_ptr<const DixonData> dixon(const Group &g)
{
  static std::mutex mutex;
  static std::map<u64, std::shared_ptr<const DixonData>> memo;
  const u64 key = g.table_hash();
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
  }

  auto data = std::make_shared<DixonData>();
  const u64 n = g.order();
  data->classes = class_partition(g);
  const auto &classes = data->classes.classes;
  const auto &class_of = data->classes.class_of;
  const std::size_t k = classes.size();
  data->q = find_prime(g.exponent(), n);
  const Field f{data->q};

  // c[i][j][l] = #{x in C_i : x^-1 g_l in C_j}, g_l the representative of C_l.
  std::vector<std::vector<Vec>> c(k, std::vector<Vec>(k, Vec(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const Elem rep = classes[l][0];
    for (Elem x = 0; x < n; ++x)
      ++c[class_of[x]][class_of[g.mul(g.inv(x), rep)]][l];
  }
  for (auto &mi : c)
    for (auto &row : mi)
      for (auto &v : row)
        v %= f.q;

  // Split F_q^k into common eigenspaces of the class matrices (w -> M_i w).
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> all(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      all[i][i] = 1;
    spaces.push_back(std::move(all));
  }
  for (std::size_t i = 1; i < k && spaces.size() < k; ++i) {
    std::vector<std::vector<Vec>> next;
    for (auto &basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto pivots = rref(f, basis);
      // Matrix of M_i on the subspace, in the RREF basis coordinates.
      std::vector<Vec> r(d, Vec(d, 0));
      for (std::size_t col = 0; col < d; ++col) {
        Vec y(k, 0);
        for (std::size_t row = 0; row < k; ++row) {
          u64 s = 0;
          for (std::size_t t = 0; t < k; ++t)
            s += c[i][row][t] * basis[col][t] % f.q;
          y[row] = s % f.q;
        }
        for (std::size_t s = 0; s < d; ++s)
          r[s][col] = y[pivots[s]];
      }
      Vec poly = char_poly(f, r);
      std::vector<u64> roots;
      for (u64 x = 0; x < f.q && roots.size() < d; ++x)
        if (eval_poly(f, poly, x) == 0)
          roots.push_back(x);
      if (roots.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (u64 lambda : roots) {
        auto shifted = r;
        for (std::size_t s = 0; s < d; ++s)
          shifted[s][s] = f.sub(shifted[s][s], lambda);
        std::vector<Vec> piece;
        for (const auto &coords : nullspace(f, shifted)) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < d; ++s)
            for (std::size_t t = 0; t < k; ++t)
              v[t] = f.add(v[t], f.mul(coords[s], basis[s][t]));
          piece.push_back(std::move(v));
        }
        next.push_back(std::move(piece));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw VerificationError(
        fmt::format("class matrices of {} split into {} of {} eigenspaces", g.name(), spaces.size(), k));

  std::vector<std::size_t> inverse_class(k);
  for (std::size_t j = 0; j < k; ++j)
    inverse_class[j] = class_of[g.inv(classes[j][0])];
  const u64 limit = static_cast<u64>(std::sqrt(static_cast<double>(n))) + 1;
  for (auto &basis : spaces) {
    Vec w = basis.at(0);
    if (w[0] == 0)
      throw VerificationError("central character with w_0 = 0");
    const u64 s = f.inv(w[0]);
    for (auto &x : w)
      x = f.mul(x, s);
    u64 norm = 0;
    for (std::size_t j = 0; j < k; ++j)
      norm = f.add(norm, f.mul(f.mul(w[j], w[inverse_class[j]]), f.inv(classes[j].size() % f.q)));
    if (norm == 0)
      throw VerificationError("degenerate central character");
    const u64 d2 = f.mul(n % f.q, f.inv(norm));
    u64 d = 0;
    for (u64 t = 1; t <= limit; ++t)
      if (t * t % f.q == d2) {
        d = t;
        break;
      }
    if (d == 0)
      throw VerificationError("no degree matches a central character");
    data->degrees.push_back(d);
    data->central.push_back(std::move(w));
  }

  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(data)).first->second;
}

void require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(fmt::format("{} is not prime", p));
}

} // namespace

std::uint64_t dixon_prime(const Group &g) { return find_prime(g.exponent(), g.order()); }

DegreeMultiset character_degrees(const Group &g)
{
  const std::size_t n = g.order();
  DegreeMultiset out;
  std::size_t classes = 0;
  if (g.is_abelian()) {
    out = DegreeMultiset(std::vector<std::uint64_t>(n, 1));
    classes = n;
  } else {
    auto data = dixon(g);
    out = DegreeMultiset(data->degrees);
    classes = data->classes.classes.size();
  }
  if (out.sum_of_squares() != n || out.size() != classes ||
      out.count_equal(1) != n / derived_subgroup(g).order())
    throw VerificationError(fmt::format("degrees {} of {} fail the sanity identities",
                                        out.to_string(), g.name()));
  return out;
}

std::size_t mu_group(const Group &g, std::uint64_t p)
{
  require_prime(p);
  return character_degrees(g).count_coprime(p);
}

CentralExtension central_extension(const Group &g, const CocycleTable &theta, std::size_t max_order)
{
  if (theta.degree() != 2 || !theta.group().same_as(g))
    throw InvalidArgument("central extension needs a 2-cocycle on the same group");
  if (!theta.is_normalized() || !cocycle_check(theta))
    throw InvalidArgument("theta is not a normalized 2-cocycle");
  const std::size_t n = g.order();
  const std::uint32_t m = theta.modulus();
  const std::size_t total = n * m;
  if (total > max_order)
    throw CapExceeded(fmt::format("central extension of order {} exceeds cap {}", total, max_order));
  std::vector<Elem> table(total * total);
  for (std::uint32_t a = 0; a < m; ++a)
    for (Elem x = 0; x < n; ++x)
      for (std::uint32_t b = 0; b < m; ++b)
        for (Elem y = 0; y < n; ++y) {
          const std::uint32_t c = (a + b + theta(x, y)) % m;
          table[(a * n + x) * total + (b * n + y)] = static_cast<Elem>(c * n + g.mul(x, y));
        }
  CentralExtension ext{g, m,
                       Group::from_cayley_table(total, std::move(table),
                                                fmt::format("{}.{}", m, g.name())),
                       static_cast<Elem>(m > 1 ? n : 0)};
  return ext;
}

DegreeMultiset twisted_degrees(const Group &g, const CocycleTable &theta, std::uint32_t root_exponent)
{
  const std::uint32_t m = theta.modulus();
  if (std::gcd(root_exponent, m) != 1)
    throw InvalidArgument(fmt::format("{} is not a unit mod {}", root_exponent, m));
  if (theta.is_zero() && theta.group().same_as(g))
    return character_degrees(g);
  const CentralExtension ext = central_extension(g, theta, std::max(kDefaultMaxOrder, g.order() * m));
  const std::size_t n = g.order();
  DegreeMultiset out;
  if (ext.total.is_abelian()) {
    out = DegreeMultiset(std::vector<std::uint64_t>(n, 1));
  } else {
    auto data = dixon(ext.total);
    const Field f{data->q};
    // A fixed primitive m-th root of unity in F_q: g0^((q-1)/m) for the
    // least primitive root g0.
    std::vector<u64> factors;
    for (u64 t = f.q - 1, r = 2; t > 1; ++r) {
      if (r * r > t)
        r = t;
      if (t % r == 0)
        factors.push_back(r);
      while (t % r == 0)
        t /= r;
    }
    u64 prim = 2;
    while (std::any_of(factors.begin(), factors.end(),
                       [&](u64 r) { return f.pow(prim, (f.q - 1) / r) == 1; }))
      ++prim;
    const u64 zeta = f.pow(f.pow(prim, (f.q - 1) / m), root_exponent);
    const std::size_t zc = data->classes.class_of[ext.z];
    std::vector<std::uint64_t> degs;
    for (std::size_t chi = 0; chi < data->degrees.size(); ++chi)
      if (data->central[chi][zc] == zeta)
        degs.push_back(data->degrees[chi]);
    out = DegreeMultiset(std::move(degs));
  }
  if (out.sum_of_squares() != n)
    throw VerificationError(fmt::format("twisted degrees {} of {} do not square-sum to {}",
                                        out.to_string(), g.name(), n));
  return out;
}

std::size_t mu_twisted(const Group &g, const CocycleTable &theta, std::uint64_t p)
{
  require_prime(p);
  return twisted_degrees(g, theta, 1).count_coprime(p);
}

} // namespace mckaylab
