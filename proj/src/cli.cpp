#include "hypertour/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>

#include "hypertour/errors.hpp"
#include "hypertour/json_io.hpp"
#include "hypertour/oracle.hpp"
#include "hypertour/realize.hpp"
#include "hypertour/sample.hpp"
#include "hypertour/verify.hpp"

namespace hypertour {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Comma and/or whitespace separated integers, non-negative and
/// non-decreasing as given.
std::vector<Score> parse_sequence(const std::string& text) {
  std::vector<Score> values;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    Score v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc{} || ptr != text.data() + end) {
      throw UsageError("not an integer: \"" + text.substr(pos, end - pos) + "\"");
    }
    if (v < 0) throw UsageError("negative entry " + std::to_string(v));
    values.push_back(v);
    pos = end;
  }
  if (!std::is_sorted(values.begin(), values.end())) {
    throw UsageError("sequence is not non-decreasing");
  }
  return values;
}

std::string join(const std::vector<Score>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

void print_verdict(const Verdict& v, bool json, std::ostream& out) {
  if (json) {
    out << to_json(v).dump() << '\n';
  } else if (v.valid()) {
    out << "VALID\n";
  } else {
    const Violation& w = *v.violation;
    out << "INVALID j=" << w.j << " sum=" << w.prefix_sum << " bound=" << w.bound << " ("
        << (w.kind == ViolationKind::StrictDeficit ? "strict-deficit" : "total-mismatch") << ")\n";
  }
}

void print_hypertournament(const Hypertournament& h, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(h).dump() << '\n';
    return;
  }
  for (const Arc& arc : h.arcs()) {
    for (std::size_t i = 0; i < arc.size(); ++i) out << (i ? " " : "") << arc.vertices[i];
    out << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Losing score sequences of k-hypertournaments", "hypertour"};
  app.require_subcommand(1);

  int k = 0;
  bool json = false;
  std::string losing, score, landau;
  auto* verify = app.add_subcommand("verify", "Check a losing score, score, or Landau sequence");
  verify->add_option("--k", k, "Arc size (>= 2); --landau implies 2");
  auto* losing_opt = verify->add_option("--losing", losing, "Losing scores, e.g. 1,1,1,1");
  auto* score_opt = verify->add_option("--score", score, "Scores");
  auto* landau_opt = verify->add_option("--landau", landau, "Tournament scores (Landau)");
  losing_opt->excludes(score_opt)->excludes(landau_opt);
  score_opt->excludes(landau_opt);
  verify->add_flag("--json", json, "Emit the verdict as JSON");

  std::string realize_seq;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  auto* realize_cmd = app.add_subcommand("realize", "Build a hypertournament with given losing scores");
  realize_cmd->add_option("--k", k, "Arc size (>= 2)")->required();
  realize_cmd->add_option("--losing", realize_seq, "Losing scores")->required();
  realize_cmd->add_option("--format", format, "text (one arc per line, loser last) or json")
      ->check(CLI::IsMember({"text", "json"}));
  realize_cmd->add_option("--seed", seed, "Shuffle the non-losing positions of each arc");

  int n = 0;
  bool compare = false;
  std::uint64_t budget = kDefaultBudget;
  auto* oracle = app.add_subcommand("oracle", "Enumerate valid sequences; compare with brute force");
  oracle->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--k", k, "Arc size (>= 2)")->required();
  oracle->add_flag("--compare", compare, "Compare against exhaustive loser assignments");
  oracle->add_option("--budget", budget, "Maximum number of assignments to enumerate");

  std::uint64_t sample_seed = 0;
  auto* sample = app.add_subcommand("sample", "Random hypertournament, one uniform loser per subset");
  sample->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--k", k, "Arc size (>= 2)")->required();
  sample->add_option("--seed", sample_seed, "Generator seed");
  sample->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!landau_opt->count() && !losing_opt->count() && !score_opt->count()) {
        throw UsageError("one of --losing, --score, --landau is required");
      }
      if (landau_opt->count()) {
        if (verify->count("--k") && k != 2) throw UsageError("--landau requires k = 2");
        const Verdict v = verify_landau(ScoreSequence(2, parse_sequence(landau)));
        print_verdict(v, json, out);
        return v ? kExitOk : kExitInvalid;
      }
      if (!verify->count("--k")) throw UsageError("--k is required");
      const Verdict v = losing_opt->count()
                            ? verify_losing(LosingScoreSequence(k, parse_sequence(losing)))
                            : verify_score(ScoreSequence(k, parse_sequence(score)));
      print_verdict(v, json, out);
      return v ? kExitOk : kExitInvalid;
    }

    if (realize_cmd->parsed()) {
      const LosingScoreSequence r(k, parse_sequence(realize_seq));
      const Verdict v = verify_losing(r);
      if (!v) {
        print_verdict(v, false, out);
        return kExitInvalid;
      }
      Hypertournament h = realize(r);
      if (seed) h = shuffle_non_losers(h, *seed);
      print_hypertournament(h, format, out);
      return kExitOk;
    }

    if (oracle->parsed()) {
      if (k < 2) throw UsageError("--k must be at least 2");
      const SequenceSet valid = enumerate_valid(n, k);
      if (!compare) {
        for (const auto& r : valid) out << join(r.values(), ',') << '\n';
        return kExitOk;
      }
      const SequenceSet achievable = achievable_losing_multisets(n, k, budget);
      const bool match = valid == achievable;
      out << valid.size() << (valid.size() == achievable.size() ? " = " : " != ")
          << achievable.size() << (match ? " MATCH" : " MISMATCH") << '\n';
      return match ? kExitOk : kExitInvalid;
    }

    if (sample->parsed()) {
      if (k < 2) throw UsageError("--k must be at least 2");
      print_hypertournament(from_loser_assignment(sample_loser_assignment(n, k, sample_seed)), format,
                            out);
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InfeasibleSequence& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hypertour
