// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "mckaylab/cohomology.hpp"
#include "mckaylab/error.hpp"
#include "mckaylab/malgebras.hpp"
#include "mckaylab/mpair.hpp"
#include "mckaylab/presets.hpp"
#include "mckaylab/repdegrees.hpp"

using namespace mckaylab;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t instances = 0;
  std::string first_failure;

  void check(bool ok, const std::string &what)
  {
    ++instances;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
    pass = pass && ok;
  }
};

std::vector<std::string> corpus() { return corpus_groups(64); }

struct NamedGSet {
  std::string name;
  GSet x;
};

std::vector<NamedGSet> gsets_of(const Group &g)
{
  std::vector<NamedGSet> out;
  out.push_back({"natural", natural_gset(g)});
  out.push_back({"conj", conjugation_gset(g)});
  out.push_back({"regular", regular_gset(g)});
  out.push_back({"trivial1", trivial_gset(g, 1)});
  out.push_back({"trivial2", trivial_gset(g, 2)});
  const auto subs = subgroup_class_representatives(g);
  for (std::size_t i = 0; i < subs.size(); ++i)
    out.push_back({fmt::format("coset{}", i), coset_gset(g, subs[i])});
  return out;
}

std::vector<CocycleTable> omegas(const Group &g)
{
  std::vector<CocycleTable> out;
  if (g.order() > 1 && g.is_abelian() && g.exponent() == g.order()) {
    for (auto &w : standard_3cocycles_cyclic(g, static_cast<std::uint32_t>(g.order())))
      out.push_back(std::move(w));
  } else {
    for (std::uint32_t k : {2u, 3u, 4u})
      for (auto &w : inflated_3cocycles(g, k))
        out.push_back(std::move(w));
  }
  return out;
}

const SweepResult &sweep()
{
  static const SweepResult result = [] {
    SweepOptions o;
    o.max_order = 64;
    o.include_extra = true;
    return run_sweep(o);
  }();
  return result;
}

Outcome sweep_statements(std::initializer_list<Statement> which)
{
  Outcome out;
  const auto &r = sweep();
  for (const auto &e : r.errors)
    out.check(false, e);
  for (const auto &rep : r.reports)
    for (auto s : which)
      if (rep.statement == s)
        out.check(rep.pass, rep.to_string());
  return out;
}

Outcome criterion1() { return sweep_statements({Statement::MC1}); }

Outcome criterion2()
{
  Outcome out;
  auto compare = [&](const std::string &what, const AlgebraTable &a, const SimpleDims &morita) {
    const auto numeric = wedderburn_oracle(a);
    const bool ok = numeric.dims == morita.dims && numeric.dims.sum_of_squares() == a.dim() &&
                    morita.dims.sum_of_squares() == a.dim();
    out.check(ok, fmt::format("{}: oracle {} morita {}", what, numeric.dims.to_string(),
                              morita.dims.to_string()));
  };
  for (const auto &name : corpus()) {
    const Group g = preset_group(name);
    std::vector<CocycleTable> thetas;
    for (std::uint32_t m : {2u, 3u, 4u})
      for (auto &t : h2_structure(g, m).generators)
        thetas.push_back(std::move(t));
    for (const auto &[xname, x] : gsets_of(g)) {
      if (x.size() * g.order() > 400)
        continue;
      compare(fmt::format("{} {}", name, xname), dxg(g, x), simple_dims_morita(x));
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        const auto fam = constant_family(x, thetas[i]);
        compare(fmt::format("{} {} theta{}", name, xname, i), dxg_twisted(fam),
                simple_dims_morita(x, &fam));
      }
    }
    if (g.order() * g.order() <= 400)
      for (const auto &w : omegas(g)) {
        const auto fam = transgression_family(w);
        compare(fmt::format("{} omega", name), twisted_quantum_double(w),
                simple_dims_morita(fam.gset(), &fam));
      }
  }
  return out;
}

Outcome criterion3()
{
  Outcome out;
  const Group s3 = preset_group("S3");
  const DegreeMultiset expected({1, 1, 2, 2, 2, 2, 3, 3});
  const auto morita = simple_dims_morita(conjugation_gset(s3));
  const auto numeric = wedderburn_oracle(quantum_double(s3));
  out.check(morita.dims == expected, "morita " + morita.dims.to_string());
  out.check(numeric.dims == expected, "oracle " + numeric.dims.to_string());
  out.check(expected.sum_of_squares() == 36, "sum of squares");
  out.check(mu_algebra(morita, 2) == 4 && mu_algebra(numeric, 2) == 4, "mu(D(S3), 2)");
  const Group c2 = preset_group("C2");
  const auto dc2 = wedderburn_oracle(quantum_double(c2));
  out.check(mu_algebra(dc2, 2) == 4, "mu(D(C2), 2)");
  out.check(mu_algebra(simple_dims_morita(conjugation_gset(c2)), 2) == 4, "mu(D(C2), 2) morita");
  return out;
}

Outcome criterion4()
{
  Outcome out;
  for (const auto &name : corpus()) {
    const Group g = preset_group(name);
    const auto subs = subgroup_class_representatives(g);
    for (auto p : prime_divisors(g.order())) {
      const auto n = sylow_normalizer(g, p);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const GSet x = coset_gset(g, subs[i]);
        if (x.size() % p != 0)
          continue;
        const auto what = fmt::format("{} p={} coset{}", name, p, i);
        out.check(mu_algebra(simple_dims_morita(x), p) == 0, what + " mu");
        std::size_t coprime = 0;
        for (const auto &orbit : action_orbits(restrict_gset(x, n)).orbits)
          coprime += orbit.size() % p != 0 ? 1 : 0;
        out.check(coprime == 0, what + " N-orbits");
      }
    }
  }
  return out;
}

Outcome criterion5()
{
  Outcome out;
  for (const auto &name : corpus()) {
    const Group g = preset_group(name);
    for (const auto &[xname, x] : gsets_of(g))
      for (auto p : prime_divisors(g.order()))
        out.check(check_lemma24(x, p, xname).pass, fmt::format("{} {} p={}", name, xname, p));
  }
  return out;
}

Outcome criterion6()
{
  Outcome out;
  for (const auto &name : corpus()) {
    const Group g = preset_group(name);
    for (std::uint32_t m : {2u, 3u, 4u})
      for (const auto &theta : h2_structure(g, m).generators) {
        const auto k = class_order(theta);
        for (auto p : prime_divisors(g.order())) {
          if (k % p != 0)
            continue;
          const auto what = fmt::format("{} m={} p={}", name, m, p);
          const auto degrees = twisted_degrees(g, theta);
          bool divisible = true;
          for (auto d : degrees.degrees())
            divisible = divisible && d % k == 0;
          out.check(divisible, fmt::format("{} divisibility: k={} degrees {}", what, k,
                                           degrees.to_string()));
          const auto r = check_twisted_mc(theta, p);
          out.check(r.left == 0 && r.right == 0, what + " mu");
        }
      }
  }
  return out;
}

Outcome criterion7()
{
  Outcome out;
  for (std::size_t n = 2; n <= 12; ++n) {
    const Group g = preset_group(fmt::format("C{}", n));
    for (const auto &w : standard_3cocycles_cyclic(g, static_cast<std::uint32_t>(n))) {
      const auto what = fmt::format("C{}", n);
      out.check(family_check(transgression_family(w)), what + " family");
      for (Elem x = 0; x < g.order(); ++x)
        out.check(cocycle_check(dpr_transgression(w, x)), what + " alpha_x");
      const auto a = twisted_quantum_double(w);
      out.check(check_associativity(a, a.dim()) && check_identity(a), what + " associativity");
    }
  }
  return out;
}

Outcome criterion8()
{
  return sweep_statements({Statement::TwistedMC, Statement::Thm33, Statement::Thm34});
}

Outcome criterion9()
{
  Outcome out;
  for (const auto &name : corpus()) {
    const Group g = preset_group(name);
    const auto d = character_degrees(g);
    out.check(d.sum_of_squares() == g.order(), name + " sum of squares");
    out.check(d.size() == conjugacy_classes(g).size(), name + " class count");
    out.check(d.count_equal(1) == g.order() / derived_subgroup(g).order(), name + " linear");
  }
  return out;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"MC1 over the corpus", criterion1},
      {"oracle equals Morita for |X||G| <= 400", criterion2},
      {"D(S3) spectrum and mu(D(S3),2) = mu(D(C2),2) = 4", criterion3},
      {"transitive X with p | |X| gives mu 0 and no coprime N-orbits", criterion4},
      {"coprime orbit counts agree for G and N", criterion5},
      {"twisted degrees divisible by class order, mu 0 on both sides", criterion6},
      {"transgression identity and twisted double associativity", criterion7},
      {"twisted M-pair checks", criterion8},
      {"degree invariants", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.pass = false;
      o.first_failure = fmt::format("exception: {}", e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.instances == 0 && o.pass) {
      o.pass = false;
      o.first_failure = "no instances checked";
    }
    all = all && o.pass;
    std::string line = fmt::format("{} criterion {}: {} ({} checks, {:.1f}s)", o.pass ? "PASS" : "FAIL",
                                   i + 1, criteria[i].first, o.instances, secs);
    if (!o.pass)
      line += " first failure: " + o.first_failure;
    std::puts(line.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
