#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mckaylab/cohomology.hpp"
#include "mckaylab/group.hpp"
#include "mckaylab/gset.hpp"
#include "mckaylab/malgebras.hpp"
#include "mckaylab/repdegrees.hpp"

namespace mckaylab {

enum class Statement { MC1, MCD, MCX, MCT, TwistedMC, Lemma24, Thm33, Thm34 };

std::string_view statement_name(Statement s);

/// One mu comparison between a group G and the normalizer N of a Sylow
/// p-subgroup. `vacuous` marks p not dividing |G| (N = G).
struct MuReport {
  Statement statement = Statement::MC1;
  std::string group;
  std::string group_hash;
  std::uint64_t p = 0;
  std::string aux;
  std::size_t left = 0;
  std::size_t right = 0;
  bool pass = false;
  bool vacuous = false;

  nlohmann::json to_json() const;
  std::string to_string() const;
};

/// Normalizer of the Sylow p-subgroup chosen by sylow_subgroup.
Subgroup sylow_normalizer(const Group &g, std::uint64_t p);

MuReport check_mc1(const Group &g, std::uint64_t p);

/// mu(D(G)) against mu(D(N)) on the Morita route. Both sides are also
/// recomputed as the sum of mu(C[C(y)]) over classes of size prime to p, and
/// when |G|^2 fits in the oracle budget the D(G) side is recomputed numerically;
/// any disagreement throws VerificationError.
MuReport check_mcd(const Group &g, std::uint64_t p,
                   std::optional<OracleOptions> oracle = std::nullopt);

MuReport check_mcx(const GSet &x, std::uint64_t p, std::string aux = {});

/// check_mcx over the coset actions G/H, H running through representatives of
/// the subgroup classes.
std::vector<MuReport> check_mct(const Group &g, std::uint64_t p,
                                std::size_t max_classes = 500);

/// Orbits of size prime to p, for G on X against N on X.
MuReport check_lemma24(const GSet &x, std::uint64_t p, std::string aux = {});

/// mu(C^theta[G]) against mu(C^theta[N]). When p divides the class order of
/// theta, a pass also requires both sides to be 0.
MuReport check_twisted_mc(const CocycleTable &theta, std::uint64_t p,
                          std::size_t budget = kDefaultCochainBudget);

/// mu(D_X^alpha(G)) against mu(D_X^alpha(N)) on the twisted Morita route.
MuReport check_thm33(const CocycleFamily &alpha, std::uint64_t p, std::string aux = {});

/// mu(D^omega(G)) against mu(D^omega(N)). When |G|^2 fits in the oracle
/// budget, both Morita multisets are confirmed numerically.
MuReport check_thm34(const CocycleTable &omega, std::uint64_t p,
                     std::optional<OracleOptions> oracle = std::nullopt);

/// A category with integral quantum dimensions.
struct QDimCategory {
  std::string name;
  DegreeMultiset dims;
};

std::size_t mu_category(const QDimCategory &cat, std::uint64_t p);
QDimCategory group_algebra_category(const Group &g);
QDimCategory twisted_double_category(const CocycleTable &omega);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Preset names of the built-in corpus with order <= max_order.
std::vector<std::string> corpus_groups(std::size_t max_order = 64, bool abelian_only = false);

/// Groups beyond the main corpus used only for MC1 and the degree checks.
std::vector<std::string> mc1_extra_groups();

struct SweepOptions {
  std::size_t max_order = 64;
  bool abelian_only = false;
  bool include_extra = true;
  std::size_t jobs = 1;
  std::optional<OracleOptions> oracle = OracleOptions{};
  /// Called once per finished task, in completion order, from worker threads
  /// under a lock.
  std::function<void(const std::vector<MuReport> &)> progress;
};

/// Every statement over the corpus, in a fixed order independent of `jobs`.
/// Tasks that hit a cap are reported as errors, not silently dropped.
struct SweepResult {
  std::vector<MuReport> reports;
  std::vector<std::string> errors;
  bool all_pass() const;
};

SweepResult run_sweep(const SweepOptions &options);

/// Rows (statement x group x prime) with pass counts, as text and JSON.
std::string sweep_summary_text(const SweepResult &r);
nlohmann::json sweep_summary_json(const SweepResult &r);

} // namespace mckaylab
