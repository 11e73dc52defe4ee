// Numerical Wedderburn decomposition, used as an independent check of the
// Morita-route dimensions.

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "mckaylab/error.hpp"
#include "mckaylab/malgebras.hpp"

namespace mckaylab {

namespace {

using cd = std::complex<double>;
using SparseVec = std::vector<std::pair<std::size_t, cd>>;

// Union-find where each variable is a fixed multiple of its root.
class RatioUnionFind {
public:
  explicit RatioUnionFind(std::size_t n) : parent_(n), ratio_(n, 1.0), zero_(n, 0)
  {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns (root, r) with c_v = r * c_root.
  std::pair<std::size_t, cd> find(std::size_t v)
  {
    if (parent_[v] == v)
      return {v, 1.0};
    auto [root, r] = find(parent_[v]);
    parent_[v] = root;
    ratio_[v] *= r;
    return {root, ratio_[v]};
  }

  void force_zero(std::size_t v) { zero_[find(v).first] = 1; }

  // Imposes a c_a + b c_b = 0.
  void relate(std::size_t va, cd a, std::size_t vb, cd b, double tol)
  {
    auto [ra, xa] = find(va);
    auto [rb, xb] = find(vb);
    // a xa c_ra + b xb c_rb = 0
    const cd ca = a * xa;
    const cd cb = b * xb;
    if (ra == rb) {
      if (std::abs(ca + cb) > tol)
        zero_[ra] = 1;
      return;
    }
    // c_ra = -(cb / ca) c_rb
    parent_[ra] = rb;
    ratio_[ra] = -cb / ca;
    if (zero_[ra])
      zero_[rb] = 1;
  }

  bool is_zero(std::size_t v) { return zero_[find(v).first] != 0; }

private:
  std::vector<std::size_t> parent_;
  std::vector<cd> ratio_;
  std::vector<char> zero_;
};

class Numeric {
public:
  explicit Numeric(const AlgebraTable &a) : a_(a), roots_(a.modulus())
  {
    for (std::uint32_t e = 0; e < a.modulus(); ++e)
      roots_[e] = std::polar(1.0, 2.0 * std::numbers::pi * e / a.modulus());
  }

  cd root(std::uint32_t e) const { return roots_[e]; }

  Eigen::VectorXcd multiply(const Eigen::VectorXcd &u, const Eigen::VectorXcd &v) const
  {
    const std::size_t dim = a_.dim();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      if (u[i] == cd(0))
        continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (v[j] == cd(0))
          continue;
        const Product &p = a_.product(i, j);
        if (!p.is_zero())
          out[p.target] += u[i] * v[j] * roots_[p.exponent];
      }
    }
    return out;
  }

private:
  const AlgebraTable &a_;
  std::vector<cd> roots_;
};

// Basis of the center as columns.
Eigen::MatrixXcd center_basis(const AlgebraTable &a, const Numeric &num, double tol)
{
  const std::size_t dim = a.dim();
  // Row (j, k): sum_i c_i [coef of b_k in b_i b_j - b_j b_i] = 0.
  std::vector<SparseVec> dense_rows;
  RatioUnionFind uf(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<SparseVec> by_target(dim);
    std::vector<std::size_t> touched;
    auto add = [&](std::size_t k, std::size_t i, cd c) {
      if (by_target[k].empty())
        touched.push_back(k);
      for (auto &[var, coef] : by_target[k])
        if (var == i) {
          coef += c;
          return;
        }
      by_target[k].emplace_back(i, c);
    };
    for (std::size_t i = 0; i < dim; ++i) {
      const Product &l = a.product(i, j);
      if (!l.is_zero())
        add(l.target, i, num.root(l.exponent));
      const Product &r = a.product(j, i);
      if (!r.is_zero())
        add(r.target, i, -num.root(r.exponent));
    }
    for (auto k : touched) {
      SparseVec row;
      for (auto &t : by_target[k])
        if (std::abs(t.second) > tol)
          row.push_back(t);
      if (row.size() == 1)
        uf.force_zero(row[0].first);
      else if (row.size() == 2)
        uf.relate(row[0].first, row[0].second, row[1].first, row[1].second, tol);
      else if (row.size() > 2)
        dense_rows.push_back(std::move(row));
    }
  }

  // Surviving components become reduced variables.
  std::vector<std::ptrdiff_t> comp_index(dim, -1);
  std::vector<std::size_t> comp_root;
  for (std::size_t v = 0; v < dim; ++v) {
    auto [root, r] = uf.find(v);
    if (uf.is_zero(root) || comp_index[root] >= 0)
      continue;
    comp_index[root] = static_cast<std::ptrdiff_t>(comp_root.size());
    comp_root.push_back(root);
  }
  const auto ncomp = static_cast<Eigen::Index>(comp_root.size());
  Eigen::MatrixXcd comps = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), ncomp);
  for (std::size_t v = 0; v < dim; ++v) {
    auto [root, r] = uf.find(v);
    if (uf.is_zero(root))
      continue;
    comps(static_cast<Eigen::Index>(v), comp_index[root]) = r;
  }
  if (dense_rows.empty() || ncomp == 0)
    return comps;

  // Remaining equations on the component coefficients.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dense_rows.size()), ncomp);
  for (std::size_t r = 0; r < dense_rows.size(); ++r)
    for (auto &[var, coef] : dense_rows[r]) {
      auto [root, x] = uf.find(var);
      if (!uf.is_zero(root))
        m(static_cast<Eigen::Index>(r), comp_index[root]) += coef * x;
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto &sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * std::max(1.0, sv[0]))
      ++rank;
  Eigen::MatrixXcd kernel = svd.matrixV().rightCols(ncomp - rank);
  return comps * kernel;
}

} // namespace

SimpleDims wedderburn_oracle(const AlgebraTable &a, const OracleOptions &options)
{
  const std::size_t dim = a.dim();
  if (dim > options.budget)
    throw CapExceeded(fmt::format("oracle budget {} is below dimension {}", options.budget, dim));
  if (dim == 0)
    return {DegreeMultiset{}, Provenance::oracle};
  const double tol = options.tolerance;
  Numeric num(a);
  const Eigen::MatrixXcd basis = center_basis(a, num, 1e-9);
  const Eigen::Index c = basis.cols();
  if (c == 0)
    throw VerificationError("algebra has a trivial center");

  // Tr(L_{b_k}) for every basis element.
  Eigen::VectorXcd trace = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i) {
      const Product &p = a.product(k, i);
      if (!p.is_zero() && p.target == i)
        trace[static_cast<Eigen::Index>(k)] += num.root(p.exponent);
    }

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
  std::vector<Eigen::VectorXcd> products(static_cast<std::size_t>(c));
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (int draw = 0; draw < options.max_draws; ++draw) {
    Eigen::VectorXcd coeffs(c);
    for (Eigen::Index i = 0; i < c; ++i)
      coeffs[i] = cd(unit(rng), unit(rng));
    const Eigen::VectorXcd z = basis * coeffs;

    // Matrix of w -> z w on the center, in center coordinates.
    Eigen::MatrixXcd lz(c, c);
    for (Eigen::Index b = 0; b < c; ++b)
      lz.col(b) = qr.solve(num.multiply(z, basis.col(b)));

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(lz);
    if (eig.info() != Eigen::Success)
      continue;
    const auto &values = eig.eigenvalues();
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < c; ++i)
      for (Eigen::Index j = i + 1; j < c; ++j)
        gap = std::min(gap, std::abs(values[i] - values[j]));
    if (c > 1 && gap < 1e-4)
      continue;

    std::vector<std::uint64_t> dims;
    std::uint64_t total = 0;
    bool ok = true;
    for (Eigen::Index i = 0; i < c && ok; ++i) {
      Eigen::VectorXcd e = basis * eig.eigenvectors().col(i);
      const Eigen::VectorXcd sq = num.multiply(e, e);
      const cd scale = e.dot(sq) / e.dot(e); // e^2 = scale e
      if (std::abs(scale) < tol) {
        ok = false;
        break;
      }
      e /= scale;
      if ((num.multiply(e, e) - e).norm() > 1e-6 * std::max(1.0, e.norm())) {
        ok = false;
        break;
      }
      const cd d2 = e.transpose() * trace;
      const double rounded = std::round(d2.real());
      if (std::abs(d2 - cd(rounded, 0)) > tol || rounded < 1)
        throw VerificationError(fmt::format("block dimension {}+{}i is not an integer", d2.real(),
                                            d2.imag()));
      const auto d = static_cast<std::uint64_t>(std::llround(std::sqrt(rounded)));
      if (d * d != static_cast<std::uint64_t>(rounded))
        throw VerificationError(fmt::format("block dimension {} is not a square", rounded));
      dims.push_back(d);
      total += d * d;
    }
    if (!ok)
      continue;
    if (total != dim)
      throw VerificationError(fmt::format("block dimensions square-sum to {}, not {}", total, dim));
    return {DegreeMultiset(std::move(dims)), Provenance::oracle};
  }
  throw VerificationError(
      fmt::format("central element failed to split the center in {} draws", options.max_draws));
}

} // namespace mckaylab
