#include "qextremal/cli.hpp"

#include "qextremal/errors.hpp"
#include "qextremal/family_io.hpp"
#include "qextremal/report.hpp"
#include "qextremal/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace qx {

namespace {

struct CommonFlags {
  double time_limit_s = 600.0;
  unsigned threads = 1;
  bool deterministic = false;
  std::string format = "text";
  std::string out_path;

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.time_limit = std::chrono::milliseconds(
        static_cast<long long>(time_limit_s * 1000.0));
    cfg.worker_count = threads;
    cfg.deterministic_witness = deterministic;
    return cfg;
  }
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
  cmd->add_option("--time-limit-s", flags.time_limit_s,
                  "Search time limit in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", flags.threads, "Search worker threads")
      ->check(CLI::Range(1u, 1024u));
  cmd->add_flag("--deterministic", flags.deterministic,
                "Report the lexicographically smallest maximum witness");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", flags.out_path, "Write the report to FILE");
}

FamilyKind parse_kind(const std::string &name, std::optional<int> k,
                      bool relaxed) {
  if (name == "fisher") {
    if (!k)
      throw CLI::ValidationError("--k", "fisher needs --k");
    return relaxed ? FamilyKind::fisher_relaxed(*k) : FamilyKind::fisher(*k);
  }
  if (name == "oddtown")
    return FamilyKind::oddtown();
  if (name == "reverse-oddtown")
    return FamilyKind::reverse_oddtown();
  if (name == "skew")
    return FamilyKind::skew_pairs();
  throw CLI::ValidationError("--kind", "unknown kind '" + name + "'");
}

const std::vector<std::string> kKindNames = {"fisher", "oddtown",
                                             "reverse-oddtown", "skew"};

/// Writes the report to --out or to out. Text unless --format json, or
/// --out given without --format.
void emit(const Json &report, const CommonFlags &flags, bool format_given,
          std::ostream &out) {
  const bool json = flags.format == "json" ||
                    (!format_given && !flags.out_path.empty());
  const std::string body = json ? report.dump(2) + "\n" : to_text(report);
  if (flags.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot open " + flags.out_path + " for writing");
  file << body;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) {
  CLI::App app{"Extremal subspace families over finite fields", "qextremal"};
  app.require_subcommand(1);

  CommonFlags flags;
  long long q = 0;
  std::size_t n = 0;
  std::optional<int> k;
  std::string what;
  std::string kind_name;
  std::string family_path;
  std::string family_b_path;
  bool relaxed = false;
  std::vector<std::size_t> ns;

  auto *count = app.add_subcommand("count", "Exact q-analogue counts");
  count->add_option("--q", q, "q (any integer >= 1 for qint, >= 2 otherwise)")
      ->required();
  count->add_option("--n", n)->required();
  count->add_option("--k", k);
  count->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"qint", "qbinom", "qfactorial", "subspaces"}));

  auto *enumerate = app.add_subcommand("enumerate", "List points or subspaces");
  enumerate->add_option("--q", q)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k);
  enumerate->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"points", "subspaces"}));

  auto *construct = app.add_subcommand("construct", "Write an extremal family");
  construct->add_option("--kind", kind_name)
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "f3"}));
  construct->add_option("--q", q)->required();
  construct->add_option("--n", n)->required();

  auto *verify = app.add_subcommand("verify", "Verify a family file");
  verify->add_option("--family", family_path)->required();
  verify->add_option("--family-b", family_b_path,
                     "B sequence for --kind skew (defaults to A)");
  verify->add_option("--kind", kind_name)->required()->check(
      CLI::IsMember(kKindNames));
  verify->add_option("--k", k);
  verify->add_flag("--relaxed", relaxed, "Allow fisher --k 0");

  auto *search = app.add_subcommand("search", "Maximum family by clique search");
  search->add_option("--kind", kind_name)
      ->required()
      ->check(CLI::IsMember({"fisher", "oddtown", "reverse-oddtown"}));
  search->add_option("--q", q)->required();
  search->add_option("--n", n)->required();
  search->add_option("--k", k);
  search->add_flag("--relaxed", relaxed, "Allow fisher --k 0");

  auto *conjecture =
      app.add_subcommand("conjecture", "Reverse oddtown bound [n-1]_q for n even");
  conjecture->add_option("--q", q)->required();
  conjecture->add_option("--n", n)->required();

  auto *explore = app.add_subcommand("explore", "Oddtown searches for q even");
  explore->add_option("--q", q)->required();
  explore->add_option("--n", ns)->required();
  explore->add_option("--kind", kind_name)
      ->check(CLI::IsMember({"oddtown", "reverse-oddtown", "both"}));

  for (auto *cmd : {count, enumerate, construct, verify, search, conjecture,
                    explore})
    add_common(cmd, flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto *active = app.get_subcommands().front();
  const bool format_given = active->count("--format") > 0;

  try {
    if (active == count) {
      QCount value;
      const auto uq = static_cast<unsigned long long>(q);
      const auto un = static_cast<unsigned>(n);
      if (q < 1)
        throw CLI::ValidationError("--q", "must be >= 1");
      if (what == "qint") {
        value = q_int(un, uq);
      } else if (what == "qfactorial") {
        value = q_factorial(un, uq);
      } else if (what == "subspaces") {
        value = subspace_count(un, uq);
      } else {
        if (!k)
          throw CLI::ValidationError("--k", "qbinom needs --k");
        if (*k < 0)
          throw CLI::ValidationError("--k", "must be >= 0");
        value = q_binomial(un, static_cast<unsigned>(*k), uq);
      }
      if (flags.format == "json" || !flags.out_path.empty()) {
        Json j{{"command", "count"}, {"q", q},       {"n", n},
               {"k", k ? Json(*k) : Json(nullptr)}, {"what", what},
               {"value", to_decimal(value)}};
        emit(j, flags, format_given, out);
      } else {
        out << to_decimal(value) << '\n';
      }
      return kExitOk;
    }

    if (active == enumerate) {
      const auto field = make_field(q);
      std::ostringstream body;
      if (what == "points") {
        const auto order = enumerate_points(field, n);
        for (const auto &p : order.points()) {
          for (std::size_t i = 0; i < p.coords.size(); ++i)
            body << (i ? " " : "") << static_cast<int>(p.coords[i]);
          body << '\n';
        }
      } else {
        std::vector<Subspace> members;
        if (k) {
          if (*k < 0 || static_cast<std::size_t>(*k) > n)
            throw CLI::ValidationError("--k", "must be in 0..n");
          members = collect_subspaces(field, n, static_cast<std::size_t>(*k));
        } else {
          members = all_subspaces(field, n);
        }
        write_family(Family(field, n, std::move(members)), body);
      }
      if (flags.out_path.empty()) {
        out << body.str();
      } else {
        std::ofstream file(flags.out_path, std::ios::binary);
        file << body.str();
      }
      return kExitOk;
    }

    if (active == construct) {
      const auto field = make_field(q);
      const Construction which = kind_name == "f1"   ? Construction::F1
                                 : kind_name == "f2" ? Construction::F2
                                                     : Construction::F3;
      const auto family = construct_extremal(which, field, n);
      if (flags.out_path.empty())
        write_family(family, out);
      else
        write_family_file(family, flags.out_path);
      return kExitOk;
    }

    if (active == verify) {
      const auto kind = parse_kind(kind_name, k, relaxed);
      const auto family = read_family_file(family_path);
      const auto order =
          std::make_shared<const PointOrder>(family.field(), family.ambient());
      VerificationReport report;
      if (kind.tag() == FamilyKind::Tag::SkewPairs && !family_b_path.empty()) {
        const auto bs = read_family_file(family_b_path);
        if (bs.field()->q() != family.field()->q() ||
            bs.ambient() != family.ambient() || bs.size() != family.size())
          throw CLI::ValidationError("--family-b",
                                     "must match --family in q, n and size");
        std::vector<std::pair<Subspace, Subspace>> pairs;
        for (std::size_t i = 0; i < family.size(); ++i)
          pairs.emplace_back(family[i], bs[i]);
        report = verify_skew_family(
            SkewFamily(family.field(), family.ambient(), std::move(pairs)), order);
      } else {
        report = verify_family(family, kind, order);
      }
      emit(verify_report_json(family, report, order->digest()), flags,
           format_given, out);
      return report.satisfied() ? kExitOk : kExitViolation;
    }

    if (active == search) {
      const auto kind = parse_kind(kind_name, k, relaxed);
      const auto result = search_extremal(kind, make_field(q), n, flags.config());
      emit(extremal_report_json("search", result), flags, format_given, out);
      return kExitOk;
    }

    if (active == conjecture) {
      const GridPoint point{n, q};
      const auto batch = run_experiment(Experiment::Conjecture,
                                        std::span(&point, 1), flags.config());
      const auto &entry = batch.entries.front();
      if (entry.error)
        throw CLI::ValidationError("--n/--q", *entry.error);
      emit(extremal_report_json("conjecture", *entry.report), flags,
           format_given, out);
      return kExitOk;
    }

    if (active == explore) {
      if (q % 2 != 0)
        throw CLI::ValidationError("--q", "explore needs q a power of two");
      std::vector<FamilyKind> kinds;
      if (kind_name == "oddtown")
        kinds = {FamilyKind::oddtown()};
      else if (kind_name == "reverse-oddtown")
        kinds = {FamilyKind::reverse_oddtown()};
      std::vector<GridPoint> grid;
      for (auto nv : ns)
        grid.push_back({nv, q});
      const auto batch =
          run_experiment(Experiment::ExploreEvenQ, grid, flags.config(), kinds);
      emit(batch_report_json("explore", batch), flags, format_given, out);
      return kExitOk;
    }
  } catch (const CLI::ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalInconsistency &e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace qx
