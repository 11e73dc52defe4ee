#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/cache.hpp"
#include "mckaylab/error.hpp"
#include "mckaylab/mpair.hpp"
#include "mckaylab/presets.hpp"

namespace mckaylab::cli {

namespace {

struct Globals {
  std::size_t max_order = 0;
  std::size_t oracle_budget = OracleOptions{}.budget;
  std::uint64_t seed = OracleOptions{}.seed;
  std::string cache_dir;
  bool json = false;
  std::size_t jobs = 1;
};

std::string read_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool starts_with_number(std::string_view s, std::string_view prefix)
{
  return s.size() > prefix.size() && s.substr(0, prefix.size()) == prefix &&
         std::all_of(s.begin() + static_cast<std::ptrdiff_t>(prefix.size()), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t number_after(std::string_view s, std::size_t skip)
{
  return std::stoul(std::string(s.substr(skip)));
}

/// natural | regular | conj | trivial<k> | coset<i> | path to a G-set text file.
GSet parse_gset(const Group &g, const std::string &spec)
{
  if (spec == "natural")
    return natural_gset(g);
  if (spec == "regular")
    return regular_gset(g);
  if (spec == "conj")
    return conjugation_gset(g);
  if (starts_with_number(spec, "trivial"))
    return trivial_gset(g, number_after(spec, 7));
  if (starts_with_number(spec, "coset")) {
    const auto reps = subgroup_class_representatives(g);
    const std::size_t i = number_after(spec, 5);
    if (i >= reps.size())
      throw InvalidArgument(fmt::format("{} has {} subgroup classes", g.name(), reps.size()));
    return coset_gset(g, reps[i]);
  }
  return parse_gset_text(g, read_file(spec));
}

/// h2:<i> picks a generator of the H^2 image mod `modulus`; otherwise a JSON file.
CocycleTable parse_theta(const Group &g, const std::string &spec, std::uint32_t modulus)
{
  if (starts_with_number(spec, "h2:")) {
    const auto h2 = h2_structure(g, modulus);
    const std::size_t i = number_after(spec, 3);
    if (i >= h2.generators.size())
      throw InvalidArgument(fmt::format("H^2 image mod {} of {} has {} generators", modulus,
                                        g.name(), h2.generators.size()));
    return h2.generators[i];
  }
  try {
    return cocycle_from_json(nlohmann::json::parse(read_file(spec)), g);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(fmt::format("bad cocycle file '{}': {}", spec, e.what()));
  }
}

/// q<k> on a cyclic group, infl<k>:<i>, or a JSON file.
CocycleTable parse_omega(const Group &g, const std::string &spec)
{
  if (starts_with_number(spec, "q")) {
    const std::size_t k = number_after(spec, 1);
    const auto n = static_cast<std::uint32_t>(g.order());
    if (k >= n)
      throw InvalidArgument(fmt::format("q{} needs q < {}", k, n));
    return standard_3cocycles_cyclic(g, n)[k];
  }
  const auto colon = spec.find(':');
  if (spec.rfind("infl", 0) == 0 && colon != std::string::npos) {
    const auto k = static_cast<std::uint32_t>(std::stoul(spec.substr(4, colon - 4)));
    const std::size_t i = std::stoul(spec.substr(colon + 1));
    const auto all = inflated_3cocycles(g, k);
    if (i >= all.size())
      throw InvalidArgument(fmt::format("only {} inflated cocycles mod {}", all.size(), k));
    return all[i];
  }
  auto omega = parse_theta(g, spec, 1);
  if (omega.degree() != 3)
    throw InvalidArgument("omega must be a 3-cocycle");
  return omega;
}

nlohmann::json degrees_json(const DegreeMultiset &d)
{
  return {{"degrees", d.degrees()}, {"sum_of_squares", d.sum_of_squares()}};
}

DegreeMultiset degrees_from_json(const nlohmann::json &j)
{
  return DegreeMultiset(j.at("degrees").get<std::vector<std::uint64_t>>());
}

nlohmann::json h2_json(const H2Structure &h2)
{
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &c : h2.generators)
    gens.push_back(cocycle_to_json(c));
  return {{"modulus", h2.modulus}, {"divisors", h2.divisors}, {"order", h2.order()},
          {"generators", gens}};
}

// Cached operations, by name, so verify-cache can recompute any entry.
using Op = std::function<nlohmann::json(const Group &, const std::string &)>;

const std::map<std::string, Op> &cached_ops()
{
  static const std::map<std::string, Op> ops = {
      {"degrees", [](const Group &g, const std::string &) { return degrees_json(character_degrees(g)); }},
      {"double", [](const Group &g, const std::string &) {
         return degrees_json(simple_dims_morita(conjugation_gset(g)).dims);
       }},
      {"h2", [](const Group &g, const std::string &params) {
         return h2_json(h2_structure(g, static_cast<std::uint32_t>(std::stoul(params))));
       }},
  };
  return ops;
}

class Runner {
public:
  Runner(const Globals &globals, std::ostream &out, std::ostream &err)
      : g_(globals), out_(out), err_(err), cache_(cache_dir(globals))
  {
  }

  Group group(const std::string &spec) const
  {
    return load_group(spec, g_.max_order ? g_.max_order : kDefaultMaxOrder);
  }

  OracleOptions oracle() const
  {
    OracleOptions o;
    o.budget = g_.oracle_budget;
    o.seed = g_.seed;
    return o;
  }

  nlohmann::json cached(const std::string &spec, const Group &g, const std::string &op,
                        const std::string &params) const
  {
    return cache_.fetch(spec, g.hash_hex(), op, params,
                        [&] { return cached_ops().at(op)(g, params); });
  }

  int degrees(const std::string &spec) const
  {
    const Group g = group(spec);
    const auto d = degrees_from_json(cached(spec, g, "degrees", ""));
    if (g_.json)
      out_ << nlohmann::json{{"group", g.name()}, {"degrees", d.degrees()},
                             {"sum_of_squares", d.sum_of_squares()}}
                  .dump()
           << '\n';
    else
      out_ << fmt::format("{} (sum sq {})\n", d.to_string(), d.sum_of_squares());
    return kExitPass;
  }

  struct AlgebraArgs {
    std::string algebra = "group";
    std::string gset = "natural";
    std::string theta;
    std::string omega;
    std::uint32_t modulus = 2;
    bool use_oracle = false;
  };

  int mu(const std::string &spec, std::uint64_t p, const AlgebraArgs &a) const
  {
    if (!is_prime(p))
      throw InvalidArgument(fmt::format("{} is not prime", p));
    const Group g = group(spec);
    DegreeMultiset dims;
    std::string what;
    if (a.use_oracle) {
      dims = wedderburn_oracle(algebra(g, a), oracle()).dims;
    } else if (a.algebra == "group") {
      dims = a.theta.empty() ? degrees_from_json(cached(spec, g, "degrees", ""))
                             : twisted_degrees(g, parse_theta(g, a.theta, a.modulus));
    } else if (a.algebra == "double") {
      dims = degrees_from_json(cached(spec, g, "double", ""));
    } else if (a.algebra == "dxg") {
      const GSet x = parse_gset(g, a.gset);
      if (a.theta.empty()) {
        dims = simple_dims_morita(x).dims;
      } else {
        const auto alpha = constant_family(x, parse_theta(g, a.theta, a.modulus));
        dims = simple_dims_morita(x, &alpha).dims;
      }
    } else if (a.algebra == "tdouble") {
      const auto alpha = transgression_family(parse_omega(g, a.omega.empty() ? "q0" : a.omega));
      dims = simple_dims_morita(alpha.gset(), &alpha).dims;
    } else {
      throw InvalidArgument(fmt::format("unknown algebra '{}'", a.algebra));
    }
    const std::size_t mu = dims.count_coprime(p);
    if (g_.json)
      out_ << nlohmann::json{{"group", g.name()}, {"algebra", a.algebra}, {"p", p},
                             {"mu", mu}, {"dims", dims.degrees()},
                             {"method", a.use_oracle ? "oracle" : "morita"}}
                  .dump()
           << '\n';
    else
      out_ << fmt::format("mu = {}  dims: {} (sum sq {})\n", mu, dims.to_string(),
                          dims.sum_of_squares());
    return kExitPass;
  }

  AlgebraTable algebra(const Group &g, const AlgebraArgs &a) const
  {
    if (a.algebra == "group") {
      if (a.theta.empty())
        return dxg(g, trivial_gset(g, 1));
      return twisted_group_algebra(parse_theta(g, a.theta, a.modulus));
    }
    if (a.algebra == "double")
      return quantum_double(g);
    if (a.algebra == "dxg") {
      const GSet x = parse_gset(g, a.gset);
      if (a.theta.empty())
        return dxg(g, x);
      return dxg_twisted(constant_family(x, parse_theta(g, a.theta, a.modulus)));
    }
    if (a.algebra == "tdouble")
      return twisted_quantum_double(parse_omega(g, a.omega.empty() ? "q0" : a.omega));
    throw InvalidArgument(fmt::format("unknown algebra '{}'", a.algebra));
  }

  int dump(const std::string &object, const std::string &spec, const AlgebraArgs &base) const
  {
    AlgebraArgs a = base;
    a.algebra = object == "dxg" || object == "double" || object == "tdouble" ? object : "";
    if (a.algebra.empty())
      throw InvalidArgument(fmt::format("unknown dump object '{}'", object));
    if (object == "tdouble" && a.omega.empty())
      throw InvalidArgument("dump tdouble needs --omega");
    out_ << algebra_to_json(algebra(group(spec), a)).dump() << '\n';
    return kExitPass;
  }

  int check(const std::string &stmt, const std::string &spec, std::uint64_t p,
            const AlgebraArgs &a) const
  {
    const Group g = group(spec);
    std::vector<MuReport> reports;
    if (stmt == "mc1") {
      reports.push_back(check_mc1(g, p));
    } else if (stmt == "mcd") {
      reports.push_back(check_mcd(g, p, oracle()));
    } else if (stmt == "mcx") {
      reports.push_back(check_mcx(parse_gset(g, a.gset), p, a.gset));
    } else if (stmt == "mct") {
      reports = check_mct(g, p);
    } else if (stmt == "lemma24") {
      reports.push_back(check_lemma24(parse_gset(g, a.gset), p, a.gset));
    } else if (stmt == "tmc") {
      reports.push_back(check_twisted_mc(parse_theta(g, a.theta.empty() ? "h2:0" : a.theta, a.modulus), p));
    } else if (stmt == "thm33") {
      const auto theta = parse_theta(g, a.theta.empty() ? "h2:0" : a.theta, a.modulus);
      reports.push_back(check_thm33(constant_family(parse_gset(g, a.gset), theta), p, a.gset));
    } else if (stmt == "thm34") {
      reports.push_back(check_thm34(parse_omega(g, a.omega.empty() ? "q0" : a.omega), p, oracle()));
    } else {
      throw InvalidArgument(fmt::format("unknown statement '{}'", stmt));
    }
    bool pass = true;
    for (const auto &r : reports) {
      out_ << (g_.json ? r.to_json().dump() : r.to_string()) << '\n';
      pass = pass && r.pass;
    }
    return pass ? kExitPass : kExitFail;
  }

  int sweep(bool abelian_only, bool no_oracle, const std::string &out_path,
            const std::string &summary_path) const
  {
    SweepOptions o;
    o.max_order = g_.max_order ? g_.max_order : 64;
    o.abelian_only = abelian_only;
    o.jobs = g_.jobs;
    o.oracle = no_oracle ? std::nullopt : std::optional<OracleOptions>(oracle());
    const SweepResult r = run_sweep(o);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f)
        throw Error(fmt::format("cannot write '{}'", out_path));
      for (const auto &rep : r.reports)
        f << rep.to_json().dump() << '\n';
    }
    const auto summary = sweep_summary_json(r);
    const std::string spath =
        !summary_path.empty() ? summary_path : (out_path.empty() ? "" : out_path + ".summary.json");
    if (!spath.empty()) {
      std::ofstream f(spath);
      if (!f)
        throw Error(fmt::format("cannot write '{}'", spath));
      f << summary.dump(1) << '\n';
    }
    if (g_.json)
      out_ << summary.dump() << '\n';
    else
      out_ << sweep_summary_text(r);
    return r.all_pass() ? kExitPass : kExitFail;
  }

  int cohomology(const std::string &spec, std::uint32_t modulus) const
  {
    const Group g = group(spec);
    const auto j = cached(spec, g, "h2", std::to_string(modulus));
    if (g_.json) {
      auto o = j;
      o["group"] = g.name();
      out_ << o.dump() << '\n';
      return kExitPass;
    }
    const auto divisors = j.at("divisors").get<std::vector<std::uint32_t>>();
    std::string shape = "trivial";
    if (!divisors.empty()) {
      shape.clear();
      for (std::size_t i = 0; i < divisors.size(); ++i)
        shape += fmt::format("{}Z/{}", i ? " x " : "", divisors[i]);
    }
    out_ << fmt::format("H^2({}, C*) image of H^2(-, Z/{}): {} (order {})\n", g.name(), modulus,
                        shape, j.at("order").get<std::size_t>());
    for (std::size_t i = 0; i < divisors.size(); ++i)
      out_ << fmt::format("  h2:{}  class order {}\n", i, divisors[i]);
    return kExitPass;
  }

  int verify_cache() const
  {
    if (!cache_.enabled())
      throw InvalidArgument("verify-cache needs --cache-dir or MCKAYLAB_CACHE");
    std::size_t checked = 0, mismatches = 0;
    for (const auto &e : cache_.entries()) {
      ++checked;
      std::string problem;
      try {
        const auto &rec = e.record;
        if (rec.is_null())
          throw ParseError("unreadable entry");
        const Group g = group(rec.at("group_spec").get<std::string>());
        const auto op = rec.at("op").get<std::string>();
        const auto params = rec.at("params").get<std::string>();
        if (g.hash_hex() != rec.at("group_hash"))
          problem = "group spec no longer yields the recorded group";
        else if (Cache::key(g.hash_hex(), op, params) != rec.at("key"))
          problem = "key does not match its contents";
        else if (!cached_ops().count(op))
          problem = fmt::format("unknown operation '{}'", op);
        else if (cached_ops().at(op)(g, params).dump() != rec.at("value").dump())
          problem = "value differs from recomputation";
      } catch (const std::exception &ex) {
        problem = ex.what();
      }
      if (!problem.empty()) {
        ++mismatches;
        err_ << fmt::format("mismatch {}: {}\n", e.file.filename().string(), problem);
      }
    }
    if (g_.json)
      out_ << nlohmann::json{{"checked", checked}, {"mismatches", mismatches}}.dump() << '\n';
    else
      out_ << fmt::format("verified {} entries, {} mismatches\n", checked, mismatches);
    return mismatches == 0 ? kExitPass : kExitFail;
  }

private:
  static std::filesystem::path cache_dir(const Globals &g)
  {
    if (const char *env = std::getenv("MCKAYLAB_CACHE"); env && *env)
      return env;
    return g.cache_dir;
  }

  const Globals &g_;
  std::ostream &out_;
  std::ostream &err_;
  Cache cache_;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Simple-module counts and M-pair checks for small finite groups", "mckaylab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--max-order", globals.max_order,
                 "Group order cap (sweep: largest corpus order, default 64)");
  app.add_option("--oracle-budget", globals.oracle_budget,
                 "Largest algebra dimension handed to the numerical oracle");
  app.add_option("--seed", globals.seed, "Oracle random seed");
  app.add_option("--cache-dir", globals.cache_dir, "Result cache directory (MCKAYLAB_CACHE wins)");
  app.add_flag("--json", globals.json, "Emit JSON instead of text");
  app.add_option("--jobs", globals.jobs, "Worker threads for sweep")->check(CLI::PositiveNumber);

  std::string group_spec, statement, object;
  std::uint64_t p = 0;
  Runner::AlgebraArgs alg;
  auto add_aux = [&](CLI::App *cmd) {
    cmd->add_option("--gset", alg.gset,
                    "natural, regular, conj, trivial<k>, coset<i>, or a G-set file");
    cmd->add_option("--theta", alg.theta, "h2:<i> or a cocycle JSON file");
    cmd->add_option("--modulus", alg.modulus, "Coefficients Z/m for --theta h2:<i>");
    cmd->add_option("--omega", alg.omega, "q<k> (cyclic), infl<k>:<i>, or a cocycle JSON file");
  };

  auto *degrees = app.add_subcommand("degrees", "Irreducible character degrees");
  degrees->add_option("group", group_spec, "Preset name or group file")->required();

  auto *mu = app.add_subcommand("mu", "Count simple modules of dimension prime to p");
  mu->add_option("group", group_spec)->required();
  mu->add_option("p", p)->required();
  mu->add_option("--algebra", alg.algebra, "group, double, dxg, or tdouble")
      ->check(CLI::IsMember({"group", "double", "dxg", "tdouble"}));
  mu->add_flag("--oracle", alg.use_oracle, "Use the numerical Wedderburn oracle");
  add_aux(mu);

  auto *check = app.add_subcommand("check", "Check one M-pair statement");
  check->add_option("statement", statement)
      ->required()
      ->check(CLI::IsMember({"mc1", "mcd", "mcx", "mct", "lemma24", "tmc", "thm33", "thm34"}));
  check->add_option("group", group_spec)->required();
  check->add_option("p", p)->required();
  add_aux(check);

  bool abelian_only = false, no_oracle = false;
  std::string out_path, summary_path;
  auto *sweep = app.add_subcommand("sweep", "Run every statement over the built-in corpus");
  sweep->add_flag("--abelian-only", abelian_only);
  sweep->add_flag("--no-oracle", no_oracle, "Skip numerical confirmation");
  sweep->add_option("--out", out_path, "JSON-lines report file");
  sweep->add_option("--summary", summary_path, "Summary JSON file (default <out>.summary.json)");

  auto *dump = app.add_subcommand("dump", "Print an algebra's structure constants as JSON");
  dump->add_option("object", object)->required()->check(CLI::IsMember({"dxg", "double", "tdouble"}));
  dump->add_option("group", group_spec)->required();
  add_aux(dump);

  std::uint32_t h2_modulus = 2;
  auto *coh = app.add_subcommand("cohomology", "Image of H^2(G, Z/m) in H^2(G, C*)");
  coh->add_option("group", group_spec)->required();
  coh->add_option("--modulus", h2_modulus)->check(CLI::PositiveNumber);

  auto *verify = app.add_subcommand("verify-cache", "Recompute every cache entry and compare");

  try {
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    Runner r(globals, out, err);
    if (*degrees)
      return r.degrees(group_spec);
    if (*mu)
      return r.mu(group_spec, p, alg);
    if (*check)
      return r.check(statement, group_spec, p, alg);
    if (*sweep)
      return r.sweep(abelian_only, no_oracle, out_path, summary_path);
    if (*dump)
      return r.dump(object, group_spec, alg);
    if (*coh)
      return r.cohomology(group_spec, h2_modulus);
    if (*verify)
      return r.verify_cache();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

} // namespace mckaylab::cli
