#pragma once

// Linear algebra over Z/m and Z used by the cohomology code.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mckaylab::detail {

using Term = std::pair<std::uint32_t, std::uint32_t>; // (unknown, coefficient mod m)

/// Generators of the solution module {x in (Z/m)^n : A x = 0}, refined one
/// equation at a time. Each equation replaces the generating set by one that
/// spans exactly the solutions of everything seen so far.
class SolutionModule {
public:
  SolutionModule(std::size_t unknowns, std::uint32_t modulus);

  void add_equation(std::span<const Term> terms);

  const std::vector<std::vector<std::uint32_t>> &generators() const { return gens_; }
  std::uint32_t modulus() const { return m_; }

private:
  std::size_t n_;
  std::uint32_t m_;
  std::vector<std::vector<std::uint32_t>> gens_;
};

/// Sparse equation rows whose coefficients are accumulated mod m.
class RowBuilder {
public:
  explicit RowBuilder(std::uint32_t modulus) : m_(modulus) {}
  void add(std::uint32_t unknown, std::int64_t coefficient);
  /// Merged, nonzero terms; resets the builder.
  std::vector<Term> take();

private:
  std::uint32_t m_;
  std::vector<std::pair<std::uint32_t, std::int64_t>> raw_;
};

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  static IntMatrix identity(std::size_t n);
};

/// D = U * A * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;
  std::vector<std::int64_t> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix &a);

/// Diagonalizes the relation lattice spanned by the rows of `a` together with
/// modulus * Z^cols, working mod `modulus` throughout. Returns d with
/// (Z/modulus)^cols / rows(a) = sum Z/d_i (each d_i divides modulus) and
/// v_inverse mod modulus, whose row i maps to the i-th cyclic factor. u and v
/// are not tracked.
SmithForm smith_normal_form_mod(const IntMatrix &a, std::int64_t modulus);

/// g = s*a + t*b with g = gcd(a, b) >= 0.
struct ExtGcd {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;
};
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

} // namespace mckaylab::detail
