#include "mckaylab/mpair.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "mckaylab/error.hpp"
#include "mckaylab/presets.hpp"

namespace mckaylab {

std::string_view statement_name(Statement s)
{
  switch (s) {
  case Statement::MC1:
    return "MC1";
  case Statement::MCD:
    return "MCD";
  case Statement::MCX:
    return "MCX";
  case Statement::MCT:
    return "MCT";
  case Statement::TwistedMC:
    return "TwistedMC";
  case Statement::Lemma24:
    return "Lemma24";
  case Statement::Thm33:
    return "Thm33";
  case Statement::Thm34:
    return "Thm34";
  }
  return "?";
}

nlohmann::json MuReport::to_json() const
{
  nlohmann::json j = {{"statement", statement_name(statement)},
                      {"group", group},
                      {"group_hash", group_hash},
                      {"p", p},
                      {"left", left},
                      {"right", right},
                      {"verdict", pass ? "pass" : "fail"},
                      {"vacuous", vacuous}};
  if (!aux.empty())
    j["aux"] = aux;
  return j;
}

std::string MuReport::to_string() const
{
  std::string s = fmt::format("{} {} p={}", statement_name(statement), group, p);
  if (!aux.empty())
    s += fmt::format(" [{}]", aux);
  s += fmt::format(": {} {}={}", pass ? "pass" : "FAIL", left, right);
  if (vacuous)
    s += " (vacuous)";
  return s;
}

namespace {

MuReport make_report(Statement s, const Group &g, std::uint64_t p, std::string aux)
{
  if (!is_prime(p))
    throw InvalidArgument(fmt::format("{} is not prime", p));
  MuReport r;
  r.statement = s;
  r.group = g.name().empty() ? g.hash_hex() : g.name();
  r.group_hash = g.hash_hex();
  r.p = p;
  r.aux = std::move(aux);
  r.vacuous = g.order() % p != 0;
  return r;
}

std::size_t class_sum_mu(const Group &g, std::uint64_t p)
{
  std::size_t total = 0;
  for (const auto &cls : conjugacy_classes(g))
    if (cls.size() % p != 0)
      total += mu_group(centralizer(g, cls.front()).as_group(), p);
  return total;
}

std::size_t coprime_orbits(const GSet &x, std::uint64_t p)
{
  std::size_t count = 0;
  for (const auto &o : action_orbits(x).orbits)
    if (o.size() % p != 0)
      ++count;
  return count;
}

void confirm_with_oracle(const AlgebraTable &a, const DegreeMultiset &morita,
                         const OracleOptions &options, std::string_view what)
{
  if (a.dim() > options.budget)
    return;
  const auto numeric = wedderburn_oracle(a, options);
  if (!(numeric.dims == morita))
    throw VerificationError(fmt::format("{}: oracle dimensions [{}] differ from Morita [{}]", what,
                                        numeric.dims.to_string(), morita.to_string()));
}

} // namespace

Subgroup sylow_normalizer(const Group &g, std::uint64_t p)
{
  return normalizer(g, sylow_subgroup(g, p));
}

MuReport check_mc1(const Group &g, std::uint64_t p)
{
  MuReport r = make_report(Statement::MC1, g, p, {});
  const Subgroup n = sylow_normalizer(g, p);
  r.left = mu_group(g, p);
  r.right = mu_group(n.as_group(), p);
  r.pass = r.left == r.right;
  return r;
}

MuReport check_mcd(const Group &g, std::uint64_t p, std::optional<OracleOptions> oracle)
{
  MuReport r = make_report(Statement::MCD, g, p, {});
  const Subgroup n = sylow_normalizer(g, p);
  const Group &ng = n.as_group();
  const bool whole = n.order() == g.order();
  const auto left = simple_dims_morita(conjugation_gset(g));
  const auto right = whole ? left : simple_dims_morita(conjugation_gset(ng));
  r.left = mu_algebra(left, p);
  r.right = mu_algebra(right, p);
  const std::size_t left_sum = class_sum_mu(g, p);
  const std::size_t right_sum = class_sum_mu(ng, p);
  if (left_sum != r.left || right_sum != r.right)
    throw VerificationError(fmt::format(
        "{}: class-sum formula gives {}/{}, Morita route {}/{}", r.group, left_sum, right_sum,
        r.left, r.right));
  if (oracle && g.order() * g.order() <= oracle->budget) {
    confirm_with_oracle(quantum_double(g), left.dims, *oracle, "D(G)");
    if (!whole)
      confirm_with_oracle(quantum_double(ng), right.dims, *oracle, "D(N)");
  }
  r.pass = r.left == r.right;
  return r;
}

MuReport check_mcx(const GSet &x, std::uint64_t p, std::string aux)
{
  const Group &g = x.group();
  MuReport r = make_report(Statement::MCX, g, p, std::move(aux));
  const Subgroup n = sylow_normalizer(g, p);
  r.left = mu_algebra(simple_dims_morita(x), p);
  r.right = mu_algebra(simple_dims_morita(restrict_gset(x, n)), p);
  r.pass = r.left == r.right;
  return r;
}

std::vector<MuReport> check_mct(const Group &g, std::uint64_t p, std::size_t max_classes)
{
  std::vector<MuReport> out;
  const auto reps = subgroup_class_representatives(g, max_classes);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    MuReport r = check_mcx(coset_gset(g, reps[i]),
                           p, fmt::format("G/H, H #{} of order {}", i, reps[i].order()));
    r.statement = Statement::MCT;
    out.push_back(std::move(r));
  }
  return out;
}

MuReport check_lemma24(const GSet &x, std::uint64_t p, std::string aux)
{
  const Group &g = x.group();
  MuReport r = make_report(Statement::Lemma24, g, p, std::move(aux));
  const Subgroup n = sylow_normalizer(g, p);
  r.left = coprime_orbits(x, p);
  r.right = coprime_orbits(restrict_gset(x, n), p);
  r.pass = r.left == r.right;
  return r;
}

MuReport check_twisted_mc(const CocycleTable &theta, std::uint64_t p, std::size_t budget)
{
  const Group &g = theta.group();
  const std::uint32_t order = class_order(theta, budget);
  MuReport r = make_report(Statement::TwistedMC, g, p,
                           fmt::format("theta mod {}, class order {}", theta.modulus(), order));
  const Subgroup n = sylow_normalizer(g, p);
  r.left = mu_twisted(g, theta, p);
  r.right = mu_twisted(n.as_group(), restrict_cocycle(theta, n), p);
  r.pass = r.left == r.right;
  if (order % p == 0)
    r.pass = r.pass && r.left == 0;
  return r;
}

MuReport check_thm33(const CocycleFamily &alpha, std::uint64_t p, std::string aux)
{
  const Group &g = alpha.group();
  MuReport r = make_report(Statement::Thm33, g, p, std::move(aux));
  const Subgroup n = sylow_normalizer(g, p);
  const CocycleFamily restricted = restrict_family(alpha, n);
  r.left = mu_algebra(simple_dims_morita(alpha.gset(), &alpha), p);
  r.right = mu_algebra(simple_dims_morita(restricted.gset(), &restricted), p);
  r.pass = r.left == r.right;
  return r;
}

MuReport check_thm34(const CocycleTable &omega, std::uint64_t p, std::optional<OracleOptions> oracle)
{
  const Group &g = omega.group();
  MuReport r = make_report(Statement::Thm34, g, p, fmt::format("omega mod {}", omega.modulus()));
  const Subgroup n = sylow_normalizer(g, p);
  const bool whole = n.order() == g.order();
  const CocycleFamily left_family = transgression_family(omega);
  const CocycleFamily right_family =
      whole ? left_family : transgression_family(restrict_cocycle(omega, n));
  const auto left = simple_dims_morita(left_family.gset(), &left_family);
  const auto right = whole ? left : simple_dims_morita(right_family.gset(), &right_family);
  if (oracle && g.order() * g.order() <= oracle->budget) {
    confirm_with_oracle(dxg_twisted(left_family), left.dims, *oracle, "D^w(G)");
    if (!whole)
      confirm_with_oracle(dxg_twisted(right_family), right.dims, *oracle, "D^w(N)");
  }
  r.left = mu_algebra(left, p);
  r.right = mu_algebra(right, p);
  r.pass = r.left == r.right;
  return r;
}

std::size_t mu_category(const QDimCategory &cat, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(fmt::format("{} is not prime", p));
  return cat.dims.count_coprime(p);
}

QDimCategory group_algebra_category(const Group &g)
{
  return {fmt::format("Rep({})", g.name()), character_degrees(g)};
}

QDimCategory twisted_double_category(const CocycleTable &omega)
{
  const CocycleFamily alpha = transgression_family(omega);
  return {fmt::format("Rep(D^w({}))", omega.group().name()),
          simple_dims_morita(alpha.gset(), &alpha).dims};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::vector<std::string> corpus_groups(std::size_t max_order, bool abelian_only)
{
  static const std::vector<std::string> names = {
      "C1",   "C2",    "C3",       "C4",       "V4",        "C5",     "C6",     "S3",
      "C7",   "C8",    "C2xC4",    "C2xC2xC2", "D8",        "Q8",     "C9",     "C3xC3",
      "C10",  "D10",   "C11",      "C12",      "C2xC6",     "D12",    "A4",     "D14",
      "C16",  "C4xC4", "C2xC2xC4", "C2xD8",    "C2xQ8",     "D16",    "D18",    "S3xC3",
      "D20",  "C2xA4", "SL23",     "S4",       "D24",       "S3xS3",  "C3xQ8",  "C2xS4",
      "C2xSL23", "D32", "C2xC2xC2xC2", "C4xD8", "D64"};
  std::vector<std::string> out;
  for (const auto &name : names) {
    const Group g = preset_group(name);
    if (g.order() <= max_order && (!abelian_only || g.is_abelian()))
      out.push_back(name);
  }
  return out;
}

std::vector<std::string> mc1_extra_groups() { return {"A5", "S5"}; }

bool SweepResult::all_pass() const
{
  return errors.empty() &&
         std::all_of(reports.begin(), reports.end(), [](const MuReport &r) { return r.pass; });
}

namespace {

struct Task {
  std::string label;
  std::function<std::vector<MuReport>()> run;
};

std::vector<MuReport> group_statements(const Group &g, const std::optional<OracleOptions> &oracle)
{
  std::vector<MuReport> out;
  const GSet natural = natural_gset(g);
  const GSet regular = regular_gset(g);
  for (auto p : prime_divisors(g.order())) {
    out.push_back(check_mc1(g, p));
    out.push_back(check_mcd(g, p, oracle));
    out.push_back(check_mcx(natural, p, "natural"));
    out.push_back(check_lemma24(natural, p, "natural"));
    out.push_back(check_lemma24(regular, p, "regular"));
    const auto reps = subgroup_class_representatives(g);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const GSet cosets = coset_gset(g, reps[i]);
      const auto aux = fmt::format("G/H, H #{} of order {}", i, reps[i].order());
      MuReport r = check_mcx(cosets, p, aux);
      r.statement = Statement::MCT;
      out.push_back(std::move(r));
      out.push_back(check_lemma24(cosets, p, aux));
    }
  }
  return out;
}

std::vector<MuReport> twisted_statements(const Group &g)
{
  std::vector<MuReport> out;
  const GSet natural = natural_gset(g);
  for (std::uint32_t m : {2u, 3u, 4u}) {
    const auto h2 = h2_structure(g, m);
    for (std::size_t i = 0; i < h2.generators.size(); ++i) {
      const auto &theta = h2.generators[i];
      for (auto p : prime_divisors(g.order())) {
        out.push_back(check_twisted_mc(theta, p));
        const auto alpha = constant_family(natural, theta);
        out.push_back(check_thm33(alpha, p, fmt::format("natural, theta #{} mod {}", i, m)));
      }
    }
  }
  return out;
}

std::vector<CocycleTable> corpus_3cocycles(const Group &g)
{
  std::vector<CocycleTable> out;
  auto add = [&](CocycleTable c) {
    if (c.is_zero())
      return;
    for (const auto &o : out)
      if (o == c)
        return;
    out.push_back(std::move(c));
  };
  const std::size_t n = g.order();
  bool cyclic = false;
  for (Elem e = 0; e < n && !cyclic; ++e)
    cyclic = g.element_order(e) == n;
  if (cyclic && n <= 12) {
    for (auto &c : standard_3cocycles_cyclic(g, static_cast<std::uint32_t>(n)))
      add(std::move(c));
  } else {
    for (std::uint32_t k : {2u, 3u, 4u})
      for (auto &c : inflated_3cocycles(g, k))
        add(std::move(c));
  }
  return out;
}

std::vector<MuReport> double_statements(const Group &g, const std::optional<OracleOptions> &oracle)
{
  std::vector<MuReport> out;
  const auto omegas = corpus_3cocycles(g);
  for (std::size_t i = 0; i < omegas.size(); ++i)
    for (auto p : prime_divisors(g.order())) {
      MuReport r = check_thm34(omegas[i], p, oracle);
      r.aux += fmt::format(" #{}", i);
      out.push_back(std::move(r));
    }
  return out;
}

} // namespace

SweepResult run_sweep(const SweepOptions &options)
{
  std::vector<Task> tasks;
  for (const auto &name : corpus_groups(options.max_order, options.abelian_only)) {
    const Group g = preset_group(name);
    const auto oracle = options.oracle;
    tasks.push_back({name + " untwisted", [g, oracle] { return group_statements(g, oracle); }});
    tasks.push_back({name + " twisted", [g] { return twisted_statements(g); }});
    tasks.push_back({name + " double", [g, oracle] { return double_statements(g, oracle); }});
  }
  if (options.include_extra && !options.abelian_only)
    for (const auto &name : mc1_extra_groups()) {
      const Group g = preset_group(name);
      if (options.max_order < 64)
        continue;
      tasks.push_back({name + " MC1", [g] {
                         std::vector<MuReport> out;
                         for (auto p : prime_divisors(g.order()))
                           out.push_back(check_mc1(g, p));
                         return out;
                       }});
    }

  std::vector<std::vector<MuReport>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception &e) {
        errors[i] = fmt::format("{}: {}", tasks[i].label, e.what());
      }
      if (options.progress) {
        std::lock_guard guard(lock);
        options.progress(results[i]);
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  SweepResult out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    out.reports.insert(out.reports.end(), results[i].begin(), results[i].end());
    if (!errors[i].empty())
      out.errors.push_back(errors[i]);
  }
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const MuReport &a, const MuReport &b) { return a.statement < b.statement; });
  return out;
}

namespace {

struct Row {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t left = 0;
  std::size_t right = 0;
};

std::map<std::tuple<Statement, std::string, std::uint64_t>, Row> tabulate(const SweepResult &r)
{
  std::map<std::tuple<Statement, std::string, std::uint64_t>, Row> rows;
  for (const auto &rep : r.reports) {
    auto &row = rows[{rep.statement, rep.group, rep.p}];
    ++row.total;
    row.passed += rep.pass ? 1 : 0;
    row.left += rep.left;
    row.right += rep.right;
  }
  return rows;
}

} // namespace

std::string sweep_summary_text(const SweepResult &r)
{
  std::string out = fmt::format("{:<10} {:<12} {:>3} {:>9} {:>8} {:>8}\n", "statement", "group",
                                "p", "passed", "sum(L)", "sum(R)");
  for (const auto &[key, row] : tabulate(r)) {
    const auto &[s, group, p] = key;
    out += fmt::format("{:<10} {:<12} {:>3} {:>4}/{:<4} {:>8} {:>8}\n", statement_name(s), group,
                       p, row.passed, row.total, row.left, row.right);
  }
  std::size_t passed = 0;
  for (const auto &rep : r.reports)
    passed += rep.pass ? 1 : 0;
  out += fmt::format("total: {}/{} pass, {} errors\n", passed, r.reports.size(), r.errors.size());
  for (const auto &e : r.errors)
    out += fmt::format("error: {}\n", e);
  return out;
}

nlohmann::json sweep_summary_json(const SweepResult &r)
{
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &[key, row] : tabulate(r)) {
    const auto &[s, group, p] = key;
    rows.push_back({{"statement", statement_name(s)},
                    {"group", group},
                    {"p", p},
                    {"passed", row.passed},
                    {"total", row.total},
                    {"left_sum", row.left},
                    {"right_sum", row.right}});
  }
  std::size_t passed = 0;
  for (const auto &rep : r.reports)
    passed += rep.pass ? 1 : 0;
  return {{"rows", rows},
          {"passed", passed},
          {"total", r.reports.size()},
          {"errors", r.errors},
          {"all_pass", r.all_pass()}};
}

} // namespace mckaylab
