// Command-line front end: generation, bound verification, growth
// classification, classical comparisons, and two-sided extension, with
// csv / json-lines / table output. Exit codes: 0 success, 1 verification
// failure, 2 input error.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "vrseq/asymptotics.hpp"
#include "vrseq/bounds.hpp"
#include "vrseq/classical.hpp"
#include "vrseq/errors.hpp"
#include "vrseq/extended.hpp"
#include "vrseq/rspec.hpp"
#include "vrseq/rspec_json.hpp"
#include "vrseq/sequence.hpp"

namespace {

using vrseq::BigInt;
using vrseq::Ratio;
using vrseq::RSpec;
using vrseq::VrSequence;

enum class Format { Csv, Json, Table };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  throw vrseq::ParseError("unknown format: '" + name + "'");
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw vrseq::ParseError("empty entry in list");
    out.push_back(std::stoll(item));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw vrseq::ParseError("window must be LO:HI");
  }
  return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

// Inline spec flags shared by all subcommands.
struct SpecArgs {
  std::string spec_path;
  std::string kind;
  std::int64_t value = 1;
  std::string values;
  std::string tail = "error_past_end";
  std::string prefix;
  std::string cycle;
  std::string set;
  std::int64_t slope = 1;
  std::string offsets;
  bool unrestricted = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "Spec JSON file");
    cmd->add_option("--kind", kind,
                    "Inline spec kind: constant|identity|table|periodic|"
                    "indicator|custom_step");
    cmd->add_option("--value", value, "constant: the order value");
    cmd->add_option("--values", values, "table: comma-separated r values");
    cmd->add_option("--tail", tail,
                    "table tail: repeat_last|clamp_to_one|error_past_end");
    cmd->add_option("--prefix", prefix,
                    "periodic/custom_step: comma-separated prefix");
    cmd->add_option("--cycle", cycle, "periodic: comma-separated cycle");
    cmd->add_option("--set", set,
                    "indicator: powers_of_two|towers|comma-separated members");
    cmd->add_option("--slope", slope, "custom_step: tail slope (default 1)");
    cmd->add_option("--offsets", offsets,
                    "custom_step: comma-separated offset cycle");
    cmd->add_flag("--unrestricted", unrestricted,
                  "drop the origin and sublinearity rules (extension use)");
  }

  bool given() const { return !spec_path.empty() || !kind.empty(); }

  RSpec build() const {
    if (!spec_path.empty()) {
      return vrseq::rspec_from_file(spec_path);
    }
    if (kind.empty()) {
      throw vrseq::ParseError("no spec given: use --spec FILE or --kind KIND");
    }
    const bool sublinear = !unrestricted;
    if (kind == "constant") return RSpec::constant(value, sublinear);
    if (kind == "identity") return RSpec::identity();
    if (kind == "table") {
      vrseq::TableTail t = vrseq::TableTail::ErrorPastEnd;
      if (tail == "repeat_last") {
        t = vrseq::TableTail::RepeatLast;
      } else if (tail == "clamp_to_one") {
        t = vrseq::TableTail::ClampToOne;
      } else if (tail != "error_past_end") {
        throw vrseq::ParseError("unknown tail rule: '" + tail + "'");
      }
      return RSpec::table(parse_int_list(values), t, sublinear);
    }
    if (kind == "periodic") {
      std::vector<std::int64_t> p;
      if (!prefix.empty()) p = parse_int_list(prefix);
      return RSpec::periodic(p, parse_int_list(cycle), sublinear);
    }
    if (kind == "indicator") {
      if (set == "powers_of_two") {
        return RSpec::indicator(vrseq::IndicatorFamily::PowersOfTwo);
      }
      if (set == "towers") {
        return RSpec::indicator(vrseq::IndicatorFamily::Towers);
      }
      return RSpec::indicator(vrseq::IndicatorFamily::Explicit,
                              parse_int_list(set));
    }
    if (kind == "custom_step") {
      std::vector<std::int64_t> p;
      if (!prefix.empty()) p = parse_int_list(prefix);
      return RSpec::custom_step(p, slope, parse_int_list(offsets), sublinear);
    }
    throw vrseq::ParseError("unknown spec kind: '" + kind + "'");
  }
};

void print_aligned(std::ostream& out,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i == 0 ? "" : "  ") << std::setw(static_cast<int>(widths[i]))
          << row[i];
    }
    out << '\n';
  }
}

int cmd_generate(const SpecArgs& spec_args, std::int64_t horizon,
                 Format format, std::uint64_t max_bits) {
  const RSpec spec = spec_args.build();
  const VrSequence seq = vrseq::generate(spec, horizon, {max_bits});
  switch (format) {
    case Format::Csv:
      std::cout << "n,r,b\n";
      for (std::int64_t n = 0; n <= horizon; ++n) {
        std::cout << n << ',' << seq.r_at(n) << ','
                  << vrseq::to_decimal(seq.term(n)) << '\n';
      }
      break;
    case Format::Json:
      for (std::int64_t n = 0; n <= horizon; ++n) {
        std::cout << "{\"n\":" << n << ",\"r\":" << seq.r_at(n) << ",\"b\":\""
                  << vrseq::to_decimal(seq.term(n)) << "\"}\n";
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"n", "r(n)", "b(n)"});
      for (std::int64_t n = 0; n <= horizon; ++n) {
        rows.push_back({std::to_string(n), std::to_string(seq.r_at(n)),
                        vrseq::to_decimal(seq.term(n))});
      }
      print_aligned(std::cout, rows);
      break;
    }
  }
  return 0;
}

int run_random_sweep(std::int64_t count, std::int64_t cap, std::int64_t horizon,
                     std::uint64_t seed) {
  std::cout << "# random-sweep seed=" << seed << " cap=" << cap
            << " count=" << count << " horizon=" << horizon << '\n';
  std::cout << "spec_index,violations\n";
  std::mt19937_64 rng(seed);
  std::int64_t total_violations = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> values{1};
    for (std::int64_t n = 1; n <= horizon; ++n) {
      std::uniform_int_distribution<std::int64_t> dist(
          1, std::min<std::int64_t>(n, cap));
      values.push_back(dist(rng));
    }
    const RSpec spec = RSpec::table(std::move(values));
    const VrSequence seq = vrseq::generate(spec, horizon, {0});
    std::int64_t violations = 0;
    for (const auto& rec : vrseq::verify_main_theorem(seq, 1, horizon)) {
      if (rec.violating) ++violations;
    }
    total_violations += violations;
    std::cout << i << ',' << violations << '\n';
  }
  std::cout << "# total_violations=" << total_violations << '\n';
  return total_violations == 0 ? 0 : 1;
}

int cmd_bounds(const SpecArgs& spec_args, std::int64_t horizon, Format format,
               bool has_window, std::pair<std::int64_t, std::int64_t> window,
               std::uint64_t max_bits) {
  const RSpec spec = spec_args.build();
  const VrSequence seq = vrseq::generate(spec, horizon, {max_bits});
  const std::int64_t lo = has_window ? window.first : 1;
  const std::int64_t hi = has_window ? window.second : horizon;
  const auto records = vrseq::verify_main_theorem(seq, lo, hi);
  std::int64_t violations = 0;
  switch (format) {
    case Format::Csv:
      std::cout << vrseq::bounds_csv_header() << '\n';
      for (const auto& rec : records) {
        std::cout << vrseq::to_csv(rec) << '\n';
      }
      break;
    case Format::Json:
      for (const auto& rec : records) {
        std::cout << vrseq::to_json_line(rec) << '\n';
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"n", "r", "dr", "lower", "actual", "upper", "case"});
      for (const auto& rec : records) {
        rows.push_back({std::to_string(rec.n), std::to_string(rec.r_n),
                        std::to_string(rec.delta_r),
                        vrseq::format_ratio(rec.lower),
                        vrseq::format_ratio(rec.actual),
                        vrseq::format_ratio(rec.upper),
                        std::string(vrseq::to_string(rec.growth))});
      }
      print_aligned(std::cout, rows);
      break;
    }
  }
  for (const auto& rec : records) {
    if (rec.violating) ++violations;
  }
  if (violations != 0) {
    std::cerr << "bound violations: " << violations << '\n';
    return 1;
  }
  return 0;
}

int cmd_classify(const SpecArgs& spec_args, std::int64_t horizon,
                 Format format, std::uint64_t max_bits, long double tol) {
  const RSpec spec = spec_args.build();
  const VrSequence seq = vrseq::generate(spec, horizon, {max_bits});
  const auto report = vrseq::classify_growth(seq, tol);
  if (format == Format::Json) {
    std::cout << vrseq::to_json(report) << '\n';
  } else {
    std::cout << "spec:      " << spec.name() << '\n';
    std::cout << "class:     " << vrseq::to_string(report.cls);
    if (report.cls == vrseq::GrowthClass::ConvergesToAlpha) {
      std::cout << " (order " << report.alpha_order << ")";
    }
    std::cout << '\n';
    std::cout << "estimate:  " << std::setprecision(12)
              << static_cast<double>(report.estimate.value) << '\n';
    std::cout << "spread:    " << static_cast<double>(report.estimate.spread)
              << '\n';
    std::cout << "converged: " << (report.estimate.converged ? "yes" : "no")
              << '\n';
    if (report.alpha_ref) {
      std::cout << "alpha_ref: " << static_cast<double>(*report.alpha_ref)
                << '\n';
    }
    if (report.slow) {
      std::cout << "b(H)/H:        " << static_cast<double>(report.slow->per_n)
                << '\n';
      std::cout << "b(H)/log2(H):  "
                << static_cast<double>(report.slow->per_log2) << '\n';
      std::cout << "fitted exp:    "
                << static_cast<double>(report.slow->fitted_exponent) << '\n';
    }
  }
  return 0;
}

vrseq::ClassicalSequence build_classical(const std::string& name,
                                         std::int64_t horizon) {
  if (name == "q") return vrseq::hofstadter_q(horizon);
  if (name == "conway") return vrseq::conway_sequence(horizon);
  if (name.rfind("rbonacci:", 0) == 0) {
    return vrseq::r_bonacci(std::stoll(name.substr(9)), horizon);
  }
  if (name.rfind("tak:", 0) == 0) {
    const auto params = parse_int_list(name.substr(4));
    if (params.size() != 2) {
      throw vrseq::ParseError("tak needs two parameters: tak:A,K");
    }
    return vrseq::tak_sequence(params[0], params[1], horizon);
  }
  throw vrseq::ParseError(
      "unknown classical sequence: '" + name +
      "' (expected q, conway, rbonacci:R, or tak:A,K)");
}

int cmd_compare(const SpecArgs& spec_args, const std::string& classical_name,
                std::int64_t horizon, Format format, std::uint64_t max_bits) {
  const auto classical = build_classical(classical_name, horizon);
  std::optional<VrSequence> seq;
  if (spec_args.given()) {
    seq.emplace(spec_args.build(), horizon, vrseq::GenerateOptions{max_bits});
  }
  const bool show_per_n = classical.kind == vrseq::ClassicalKind::Conway ||
                          classical.kind == vrseq::ClassicalKind::Tak;

  std::vector<std::vector<std::string>> rows;
  {
    std::vector<std::string> header{"n"};
    if (seq) header.push_back("b(n)");
    header.push_back("c(n)");
    if (show_per_n) header.push_back("c(n)/n");
    header.push_back("flag");
    rows.push_back(std::move(header));
  }
  for (std::int64_t n = classical.first_index; n <= classical.horizon(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    if (seq) {
      row.push_back(n <= seq->horizon() ? vrseq::to_decimal(seq->term(n)) : "");
    }
    row.push_back(vrseq::to_decimal(classical.at(n)));
    if (show_per_n) {
      std::ostringstream per;
      per << std::fixed << std::setprecision(6)
          << static_cast<double>(
                 vrseq::to_long_double(Ratio(classical.at(n), n)));
      row.push_back(per.str());
    }
    const bool decreased =
        n > classical.first_index && classical.at(n) < classical.at(n - 1);
    row.push_back(decreased ? "<" : "");
    rows.push_back(std::move(row));
  }

  switch (format) {
    case Format::Csv: {
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          std::cout << (i == 0 ? "" : ",") << row[i];
        }
        std::cout << '\n';
      }
      break;
    }
    case Format::Json: {
      for (std::size_t r = 1; r < rows.size(); ++r) {
        std::cout << "{";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
          std::cout << (i == 0 ? "" : ",") << "\"" << rows[0][i] << "\":\""
                    << rows[r][i] << "\"";
        }
        std::cout << "}\n";
      }
      break;
    }
    case Format::Table:
      print_aligned(std::cout, rows);
      break;
  }
  return 0;
}

int cmd_extend(const SpecArgs& spec_args, const std::string& init_text,
               std::int64_t horizon, std::int64_t back, Format format) {
  const RSpec spec = spec_args.build();
  std::vector<Ratio> init;
  {
    std::stringstream ss(init_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      init.push_back(vrseq::parse_ratio(item));
    }
  }
  const auto ext = vrseq::extend(spec, init, horizon, back);
  switch (format) {
    case Format::Csv:
      std::cout << "n,r,beta\n";
      for (std::int64_t n = ext.n_min(); n <= ext.n_max(); ++n) {
        std::cout << n << ',' << ext.r_ext(n) << ','
                  << vrseq::format_ratio(ext.at(n)) << '\n';
      }
      break;
    case Format::Json:
      for (std::int64_t n = ext.n_min(); n <= ext.n_max(); ++n) {
        std::cout << "{\"n\":" << n << ",\"r\":" << ext.r_ext(n)
                  << ",\"beta\":\"" << vrseq::format_ratio(ext.at(n))
                  << "\"}\n";
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"n", "r(n)", "beta(n)"});
      for (std::int64_t n = ext.n_min(); n <= ext.n_max(); ++n) {
        rows.push_back({std::to_string(n), std::to_string(ext.r_ext(n)),
                        vrseq::format_ratio(ext.at(n))});
      }
      print_aligned(std::cout, rows);
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-order meta-Fibonacci sequence toolkit"};
  app.require_subcommand(1);

  std::int64_t horizon = 50;
  std::string format_name = "table";
  std::uint64_t max_bits = 10'000'000;
  double tol = 1e-6;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--horizon", horizon, "Highest index to materialize");
    cmd->add_option("--format", format_name, "Output format: csv|json|table");
    cmd->add_option("--max-bits", max_bits,
                    "Total stored-term bit budget (0 = unlimited)");
  };

  auto* gen = app.add_subcommand("generate", "Stream (n, r(n), b(n))");
  SpecArgs gen_spec;
  gen_spec.attach(gen);
  add_common(gen);

  auto* bounds = app.add_subcommand(
      "bounds", "Per-index growth-bound records; exit 1 on any violation");
  SpecArgs bounds_spec;
  bounds_spec.attach(bounds);
  add_common(bounds);
  std::string window_text;
  bounds->add_option("--window", window_text, "Index window LO:HI");
  std::int64_t random_specs = 0;
  std::int64_t cap = 12;
  bounds->add_option("--random-specs", random_specs,
                     "Run a seeded randomized-spec sweep of this size");
  bounds->add_option("--cap", cap, "Order cap for the randomized sweep");
  bounds->add_option("--seed", seed, "Seed for the randomized sweep");

  auto* classify = app.add_subcommand("classify", "Long-run growth report");
  SpecArgs classify_spec;
  classify_spec.attach(classify);
  add_common(classify);
  classify->add_option("--tol", tol, "Convergence tolerance");

  auto* compare = app.add_subcommand(
      "compare", "Side-by-side with a classical meta-Fibonacci sequence");
  SpecArgs compare_spec;
  compare_spec.attach(compare);
  add_common(compare);
  std::string classical_name;
  compare->add_option("--classical", classical_name,
                      "q | conway | rbonacci:R | tak:A,K")
      ->required();

  auto* extend = app.add_subcommand("extend", "Two-sided extension stream");
  SpecArgs extend_spec;
  extend_spec.attach(extend);
  add_common(extend);
  std::string init_text;
  std::int64_t back = 0;
  extend->add_option("--init", init_text,
                     "Comma-separated rational initial values, "
                     "beta(-1),...,beta(-M_r)")
      ->required();
  extend->add_option("--back", back, "Extra backward terms beyond -M_r");

  CLI11_PARSE(app, argc, argv);

  try {
    const Format format = parse_format(format_name);
    if (gen->parsed()) {
      return cmd_generate(gen_spec, horizon, format, max_bits);
    }
    if (bounds->parsed()) {
      if (random_specs > 0) {
        return run_random_sweep(random_specs, cap, horizon, seed);
      }
      const bool has_window = !window_text.empty();
      const auto window = has_window ? parse_window(window_text)
                                     : std::pair<std::int64_t, std::int64_t>{};
      return cmd_bounds(bounds_spec, horizon, format, has_window, window,
                        max_bits);
    }
    if (classify->parsed()) {
      return cmd_classify(classify_spec, horizon, format, max_bits,
                          static_cast<long double>(tol));
    }
    if (compare->parsed()) {
      return cmd_compare(compare_spec, classical_name, horizon, format,
                         max_bits);
    }
    if (extend->parsed()) {
      return cmd_extend(extend_spec, init_text, horizon, back, format);
    }
  } catch (const vrseq::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const vrseq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
