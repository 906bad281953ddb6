// nilsep: classify groups, build and verify inseparability witnesses,
// separate elements in finite p-quotients, scan congruence towers.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 spec rejected,
// 3 parse error, 4 witness not applicable, 5 separation not applicable.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nilsep/report.hpp"

namespace {

using namespace nilsep;

struct Common {
  std::string preset;
  std::string spec;
  std::string p = "2";
  unsigned depth = 6;
  bool json = false;
  std::size_t max_order = kCrossCheckCap;
  std::string z2_rep;
  bool no_timing = false;
};

void add_group_flags(CLI::App* cmd, Common& c) {
  auto* preset = cmd->add_option("--preset", c.preset, "preset group name");
  cmd->add_option("--spec", c.spec, "group spec JSON file")->excludes(preset);
}

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "print the JSON report");
  cmd->add_flag("--no-timing", c.no_timing, "report timing_ms as 0");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SpecRejected: return 2;
    case ErrorKind::Parse:
    case ErrorKind::InvalidTable: return 3;
    case ErrorKind::AbelianGroup:
    case ErrorKind::NoZ2Rep: return 4;
    case ErrorKind::NotApplicable:
    case ErrorKind::NonAbelianPart: return 5;
    default: return 1;
  }
}

int emit(RunReport r, const Common& c, std::chrono::steady_clock::time_point start) {
  if (!c.no_timing)
    r.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (c.json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
    for (const auto& ch : r.checks)
      std::cout << (ch.pass ? "  PASS " : "  FAIL ") << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail)
                << "\n";
  }
  if (const ReportCheck* f = r.first_failure()) {
    std::cerr << "check failed: " << f->name << (f->detail.empty() ? "" : ": " + f->detail) << "\n";
    return 1;
  }
  return 0;
}

Int parse_prime(const std::string& s) {
  Int p;
  if (p.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "-p: not an integer: " + s);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy separability of nilpotent groups by finite p-groups"};
  app.require_subcommand(1);
  Common c;

  auto* classify = app.add_subcommand("classify", "decide conjugacy F_p-separability");
  add_group_flags(classify, c);
  classify->add_option("-p", c.p, "prime")->required();
  add_output_flags(classify, c);

  auto* witness = app.add_subcommand("witness", "build and verify a non-separated pair");
  add_group_flags(witness, c);
  witness->add_option("-p", c.p, "prime")->required();
  witness->add_option("-K", c.depth, "levels p^1 .. p^K to verify")->capture_default_str();
  witness->add_option("--max-order", c.max_order, "closure cap for materialised quotients")->capture_default_str();
  witness->add_option("--z2-rep", c.z2_rep, "JSON matrix overriding the declared Z2 representative");
  add_output_flags(witness, c);

  std::string elem_a, elem_b;
  auto* separate = app.add_subcommand("separate", "separate two non-conjugate elements in a finite p-quotient");
  add_group_flags(separate, c);
  separate->add_option("-p", c.p, "prime")->required();
  separate->add_option("-a", elem_a, "first element, e.g. \"0|r\"")->required();
  separate->add_option("-b", elem_b, "second element")->required();
  separate->add_option("--max-order", c.max_order, "closure cap")->capture_default_str();
  add_output_flags(separate, c);

  std::string elem_x, elem_y;
  auto* scan = app.add_subcommand("scan", "conjugacy of two elements modulo p^1 .. p^K");
  add_group_flags(scan, c);
  scan->add_option("-p", c.p, "prime")->required();
  scan->add_option("-K", c.depth, "depth")->capture_default_str();
  auto* ox = scan->add_option("-x", elem_x, "first element (default: witness pair)");
  scan->add_option("-y", elem_y, "second element")->needs(ox);
  scan->add_option("--max-order", c.max_order, "closure cap per level")->capture_default_str();
  scan->add_option("--z2-rep", c.z2_rep, "JSON matrix overriding the declared Z2 representative");
  add_output_flags(scan, c);

  SelftestOptions st;
  bool no_corpus = false;
  auto* selftest = app.add_subcommand("selftest", "run the finite corpus and lattice suites");
  selftest->add_flag("--no-corpus", no_corpus, "lattice suites only");
  selftest->add_option("--table", st.extra_tables, "extra Cayley-table JSON file")->check(CLI::ExistingFile);
  selftest->add_option("--seed", st.seed, "seed for randomized suites")->capture_default_str();
  add_output_flags(selftest, c);

  std::string report_file;
  auto* verify = app.add_subcommand("verify-report", "recompute the checks of a JSON report");
  verify->add_option("file", report_file, "report file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    auto source = [&] { return group_source(c.preset, c.spec); };
    RunOptions opts;
    opts.max_order = c.max_order;
    auto load_z2 = [&](const GroupSource& src) {
      if (!c.z2_rep.empty()) opts.z2_rep = load_matrix_file(c.z2_rep, src.group.matrix_part.n);
    };

    if (*classify) return emit(run_classify(source(), parse_prime(c.p)), c, start);
    if (*witness) {
      const GroupSource src = source();
      load_z2(src);
      return emit(run_witness(src, parse_prime(c.p), c.depth, opts), c, start);
    }
    if (*separate) return emit(run_separate(source(), parse_prime(c.p), elem_a, elem_b, opts), c, start);
    if (*scan) {
      const GroupSource src = source();
      load_z2(src);
      if (!elem_x.empty() && elem_y.empty()) throw Error(ErrorKind::Parse, "-x needs -y");
      return emit(run_scan(src, parse_prime(c.p), elem_x, elem_y, c.depth, opts), c, start);
    }
    if (*selftest) {
      st.corpus = !no_corpus;
      return emit(run_selftest(st), c, start);
    }
    if (*verify) {
      std::ifstream in(report_file);
      Json report;
      try {
        report = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, report_file + ": " + e.what());
      }
      const auto fresh = reverify(report);
      std::vector<ReportCheck> stored;
      for (const auto& ch : report.at("checks"))
        stored.push_back({ch.at("name").get<std::string>(), ch.at("pass").get<bool>(), {}});
      const bool same = fresh == stored;
      for (const auto& ch : fresh) std::cout << (ch.pass ? "  PASS " : "  FAIL ") << ch.name << "\n";
      std::cout << (same ? "all flags reproduced" : "flags differ from the report") << "\n";
      return same ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "error [parse]: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
