#include "zmod.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "mckaylab/error.hpp"

namespace mckaylab::detail {

ExtGcd ext_gcd(std::int64_t a, std::int64_t b)
{
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0)
    return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t m)
{
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

} // namespace

SolutionModule::SolutionModule(std::size_t unknowns, std::uint32_t modulus)
    : n_(unknowns), m_(modulus)
{
  if (modulus == 0)
    throw InvalidArgument("modulus must be positive");
  if (modulus == 1)
    return;
  gens_.reserve(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) {
    std::vector<std::uint32_t> e(unknowns, 0);
    e[i] = 1;
    gens_.push_back(std::move(e));
  }
}

void SolutionModule::add_equation(std::span<const Term> terms)
{
  if (terms.empty() || gens_.empty())
    return;
  const std::uint64_t m = m_;

  std::vector<std::size_t> active;
  std::vector<std::uint32_t> value;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::uint64_t v = 0;
    for (auto [idx, coef] : terms)
      v += static_cast<std::uint64_t>(coef) * gens_[i][idx];
    v %= m;
    if (v != 0) {
      active.push_back(i);
      value.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (active.empty())
    return;

  // Unimodular column operations concentrate the value on one generator.
  std::size_t pivot = active[0];
  std::int64_t pv = value[0];
  for (std::size_t k = 1; k < active.size(); ++k) {
    std::size_t other = active[k];
    std::int64_t ov = value[k];
    auto [g, s, t] = ext_gcd(pv, ov);
    std::int64_t u = -ov / g;
    std::int64_t w = pv / g;
    auto &a = gens_[pivot];
    auto &b = gens_[other];
    for (std::size_t c = 0; c < n_; ++c) {
      std::int64_t ac = a[c], bc = b[c];
      a[c] = reduce(s * ac + t * bc, m_);
      b[c] = reduce(u * ac + w * bc, m_);
    }
    pv = g % static_cast<std::int64_t>(m_);
  }
  if (pv != 0) {
    auto scale = static_cast<std::int64_t>(m_ / std::gcd(static_cast<std::uint32_t>(pv), m_));
    for (auto &c : gens_[pivot])
      c = reduce(scale * c, m_);
  }

  // Only the touched generators can have become zero.
  auto is_zero = [](const std::vector<std::uint32_t> &v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
  };
  for (auto it = active.rbegin(); it != active.rend(); ++it)
    if (is_zero(gens_[*it]))
      gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(*it));
}

void RowBuilder::add(std::uint32_t unknown, std::int64_t coefficient)
{
  raw_.emplace_back(unknown, coefficient);
}

std::vector<Term> RowBuilder::take()
{
  std::sort(raw_.begin(), raw_.end());
  std::vector<Term> out;
  for (std::size_t i = 0; i < raw_.size();) {
    std::size_t j = i;
    std::int64_t sum = 0;
    while (j < raw_.size() && raw_[j].first == raw_[i].first)
      sum += raw_[j++].second;
    std::uint32_t c = reduce(sum, m_);
    if (c != 0)
      out.emplace_back(raw_[i].first, c);
    i = j;
  }
  raw_.clear();
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

std::vector<std::int64_t> SmithForm::diagonal() const
{
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
    out.push_back(d.at(i, i));
  return out;
}

namespace {

void row_combine(IntMatrix &m, std::size_t r1, std::size_t r2, std::int64_t a, std::int64_t b,
                 std::int64_t c, std::int64_t d)
{
  // (r1, r2) <- (a r1 + b r2, c r1 + d r2)
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::int64_t x = m.at(r1, j), y = m.at(r2, j);
    m.at(r1, j) = a * x + b * y;
    m.at(r2, j) = c * x + d * y;
  }
}

void col_combine(IntMatrix &m, std::size_t c1, std::size_t c2, std::int64_t a, std::int64_t b,
                 std::int64_t c, std::int64_t d)
{
  // (c1, c2) <- (a c1 + b c2, c c1 + d c2)
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::int64_t x = m.at(i, c1), y = m.at(i, c2);
    m.at(i, c1) = a * x + b * y;
    m.at(i, c2) = c * x + d * y;
  }
}

// Inverse of a column operation, applied to the rows of V^-1.
void inv_row_for_col(IntMatrix &vinv, std::size_t c1, std::size_t c2, std::int64_t a,
                     std::int64_t b, std::int64_t c, std::int64_t d)
{
  // Column op matrix E acts as [c1 c2] <- [c1 c2] * [[a, c], [b, d]], det = +-1.
  // E^-1 = det * [[d, -c], [-b, a]] applied on the left of V^-1 rows c1, c2.
  const std::int64_t det = a * d - b * c;
  for (std::size_t j = 0; j < vinv.cols; ++j) {
    std::int64_t x = vinv.at(c1, j), y = vinv.at(c2, j);
    vinv.at(c1, j) = det * (d * x - c * y);
    vinv.at(c2, j) = det * (-b * x + a * y);
  }
}

} // namespace

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m)
{
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// Shared elimination. With modulus > 0 entries of d and v_inverse are kept
// reduced and u, v are left untouched.
SmithForm eliminate(const IntMatrix &a, std::int64_t modulus)
{
  SmithForm f{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols),
              IntMatrix::identity(a.cols)};
  IntMatrix &d = f.d;
  const std::size_t limit = std::min(d.rows, d.cols);
  if (modulus > 0)
    for (auto &x : d.data)
      x = floor_mod(x, modulus);

  auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t p, std::int64_t q, std::int64_t r,
                    std::int64_t s) {
    col_combine(d, c1, c2, p, q, r, s);
    inv_row_for_col(f.v_inverse, c1, c2, p, q, r, s);
    if (modulus > 0) {
      for (std::size_t i = 0; i < d.rows; ++i) {
        d.at(i, c1) = floor_mod(d.at(i, c1), modulus);
        d.at(i, c2) = floor_mod(d.at(i, c2), modulus);
      }
      for (std::size_t j = 0; j < f.v_inverse.cols; ++j) {
        f.v_inverse.at(c1, j) = floor_mod(f.v_inverse.at(c1, j), modulus);
        f.v_inverse.at(c2, j) = floor_mod(f.v_inverse.at(c2, j), modulus);
      }
    } else {
      col_combine(f.v, c1, c2, p, q, r, s);
    }
  };
  auto row_op = [&](std::size_t r1, std::size_t r2, std::int64_t p, std::int64_t q, std::int64_t r,
                    std::int64_t s) {
    row_combine(d, r1, r2, p, q, r, s);
    if (modulus > 0) {
      for (std::size_t j = 0; j < d.cols; ++j) {
        d.at(r1, j) = floor_mod(d.at(r1, j), modulus);
        d.at(r2, j) = floor_mod(d.at(r2, j), modulus);
      }
    } else {
      row_combine(f.u, r1, r2, p, q, r, s);
    }
  };

  for (std::size_t t = 0; t < limit; ++t) {
    // Move a nonzero entry of the remaining block to (t, t).
    bool found = false;
    for (std::size_t i = t; i < d.rows && !found; ++i)
      for (std::size_t j = t; j < d.cols && !found; ++j)
        if (d.at(i, j) != 0) {
          if (i != t)
            row_op(t, i, 0, 1, 1, 0);
          if (j != t)
            col_op(t, j, 0, 1, 1, 0);
          found = true;
        }
    if (!found)
      break;

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0)
          continue;
        if (d.at(i, t) % d.at(t, t) == 0) {
          row_op(t, i, 1, 0, -(d.at(i, t) / d.at(t, t)), 1);
        } else {
          auto [g, s, u] = ext_gcd(d.at(t, t), d.at(i, t));
          std::int64_t p = d.at(t, t) / g, q = d.at(i, t) / g;
          row_op(t, i, s, u, -q, p);
        }
        changed = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0)
          continue;
        if (d.at(t, j) % d.at(t, t) == 0) {
          col_op(t, j, 1, 0, -(d.at(t, j) / d.at(t, t)), 1);
        } else {
          auto [g, s, u] = ext_gcd(d.at(t, t), d.at(t, j));
          std::int64_t p = d.at(t, t) / g, q = d.at(t, j) / g;
          col_op(t, j, s, u, -q, p);
        }
        changed = true;
      }
      if (changed)
        continue;
      // Divisibility: the pivot must divide every remaining entry.
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_op(t, i, 1, 1, 0, 1);
            fixed = true;
          }
      if (!fixed)
        break;
    }
    if (d.at(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j)
        d.at(t, j) = -d.at(t, j);
      for (std::size_t j = 0; j < f.u.cols; ++j)
        f.u.at(t, j) = -f.u.at(t, j);
    }
  }
  return f;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &a) { return eliminate(a, 0); }

SmithForm smith_normal_form_mod(const IntMatrix &a, std::int64_t modulus)
{
  if (modulus <= 0)
    throw InvalidArgument("modulus must be positive");
  SmithForm f = eliminate(a, modulus);
  // A zero pivot means the factor is all of Z/modulus.
  for (std::size_t i = 0; i < std::min(f.d.rows, f.d.cols); ++i)
    f.d.at(i, i) = std::gcd(f.d.at(i, i), modulus);
  if (f.d.rows < f.d.cols) {
    IntMatrix wide(f.d.cols, f.d.cols);
    for (std::size_t i = 0; i < f.d.rows; ++i)
      wide.at(i, i) = f.d.at(i, i);
    for (std::size_t i = f.d.rows; i < f.d.cols; ++i)
      wide.at(i, i) = modulus;
    f.d = std::move(wide);
  }
  return f;
}

} // namespace mckaylab::detail
