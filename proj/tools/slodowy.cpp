// slodowy: batch verification, construction dumps, rendering and the worked
// examples. Exit codes: 0 ok, 1 check failure, 2 usage error, 3 I/O error.

#include "slodowy/errors.hpp"
#include "slodowy/fixtures.hpp"
#include "slodowy/invariants.hpp"
#include "slodowy/json_io.hpp"
#include "slodowy/reduction.hpp"
#include "slodowy/sl3_example.hpp"
#include "slodowy/sl4_example.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace slodowy;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, io = 3 };

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format;
  std::string out;
  std::string fixture_dir;
  std::string input;
  std::string stage = "oneshot";
  int degree = -1;
  int jobs = 1;
};

/// Standard output, or the --out file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw IOError("cannot open output file " + path);
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    os().flush();
    if (!os()) throw IOError("write failed");
  }

 private:
  std::ofstream file_;
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw InputError("format '" + f + "' is not available for this command");
}

std::string text_report(const std::string& subject, const std::vector<Check>& checks) {
  std::ostringstream os;
  os << subject << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  return os.str();
}

std::vector<Check> as_checks(const StageReport& r) {
  std::vector<Check> out;
  for (const auto& c : r.checks) out.push_back({c.name, c.ok, c.detail});
  return out;
}

void check_cover(const Partition& mu, const Partition& lam, int max_n, const char* what) {
  if (mu.size() != lam.size()) throw InputError("partitions have different sizes");
  if (mu.size() > max_n) throw InputError(std::string(what) + " needs n <= " + std::to_string(max_n));
  cover_rows(mu, lam);  // throws RelationError for a non-cover
}

int cmd_verify_all(int n, const RunConfig& cfg) {
  if (n < 2 || n > 8) throw InputError("verify-all needs 2 <= n <= 8");
  if (cfg.jobs < 1) throw InputError("--jobs must be positive");
  require_format(cfg.format, {"json"});
  std::vector<std::pair<Partition, Partition>> work;
  for (const auto& mu : all_partitions(n))
    for (const auto& lam : covers_above(mu)) work.emplace_back(mu, lam);
  std::sort(work.begin(), work.end());

  Sink sink(cfg.out);
  std::vector<std::optional<StageReport>> done(work.size());
  std::vector<std::string> errors(work.size());
  std::size_t emitted = 0;
  int failures = 0;
  // Lines leave in sorted order as soon as every earlier item is finished.
  auto flush_ready = [&] {
    while (emitted < work.size() && (done[emitted] || !errors[emitted].empty())) {
      const auto& [mu, lam] = work[emitted];
      if (done[emitted]) {
        sink.os() << to_json(*done[emitted]).dump() << "\n";
        if (!done[emitted]->all()) {
          ++failures;
          std::cerr << "FAIL " << mu.str() << " " << lam.str() << " " << done[emitted]->first_failure() << "\n";
        }
      } else {
        ++failures;
        sink.os() << json{{"mu", to_json(mu)}, {"lam", to_json(lam)}, {"pass", false}, {"error", errors[emitted]}}.dump()
                  << "\n";
        std::cerr << "FAIL " << mu.str() << " " << lam.str() << " error: " << errors[emitted] << "\n";
      }
      sink.os().flush();
      ++emitted;
    }
  };
  const int count = static_cast<int>(work.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
  for (int k = 0; k < count; ++k) {
    std::optional<StageReport> rep;
    std::string err;
    try {
      rep = verify_stage(work[k].first, work[k].second);
    } catch (const std::exception& e) {
      err = e.what();
      if (err.empty()) err = "unknown error";
    }
#pragma omp critical(slodowy_emit)
    {
      done[k] = std::move(rep);
      errors[k] = std::move(err);
      flush_ready();
    }
  }
  sink.finish();
  std::cerr << count - failures << "/" << count << " covers pass\n";
  return failures ? check_failed : ok;
}

int cmd_construct(const Partition& mu, const Partition& lam, const RunConfig& cfg) {
  require_format(cfg.format, {"json", "text"});
  check_cover(mu, lam, 20, "construct");
  auto sd = build_stage(mu, lam);
  Sink sink(cfg.out);
  if (cfg.format == "json") {
    sink.os() << to_json(sd).dump(2) << "\n";
  } else {
    auto& os = sink.os();
    os << "cover " << mu.str() << " < " << lam.str() << "  (i, j) = (" << sd.rows.receiver << ", " << sd.rows.donor
       << ")\n";
    os << "e1 =\n" << sd.e1.str() << "\ne2 =\n" << sd.e2.str() << "\nh2' =\n" << sd.h2prime.str() << "\n";
    os << "K = " << to_string(sd.K) << "\n";
    for (std::size_t m = 0; m < sd.E.size(); ++m) os << "E" << m + 1 << " =\n" << sd.E[m].str() << "\n";
    os << "dim m1 = " << sd.m1.dim() << ", dim k = " << sd.k.dim() << ", dim m2 = " << sd.m2.dim() << "\n";
  }
  sink.finish();
  return ok;
}

int cmd_verify(const Partition& mu, const Partition& lam, const RunConfig& cfg) {
  require_format(cfg.format, {"json", "text"});
  check_cover(mu, lam, 20, "verify");
  auto rep = verify_stage(mu, lam);
  Sink sink(cfg.out);
  if (cfg.format == "json")
    sink.os() << to_json(rep).dump() << "\n";
  else
    sink.os() << text_report(mu.str() + " < " + lam.str(), as_checks(rep));
  sink.finish();
  return rep.all() ? ok : check_failed;
}

int cmd_examples(const std::string& name, const RunConfig& cfg) {
  require_format(cfg.format, {"json", "text"});
  if (name != "sl3" && name != "sl4") throw InputError("unknown example '" + name + "' (expected sl3 or sl4)");
  const auto dir = fixture_dir(cfg.fixture_dir);
  const auto file = std::filesystem::path(dir) / (name + ".json");
  if (!std::ifstream(file)) throw IOError("cannot read fixture " + file.string());
  Report rep = name == "sl3" ? verify_sl3(cfg.fixture_dir, cfg.degree) : verify_sl4(cfg.fixture_dir);
  Sink sink(cfg.out);
  if (cfg.format == "json") {
    sink.os() << to_json(rep).dump(2) << "\n";
  } else {
    sink.os() << text_report(rep.subject, rep.checks);
    for (const auto& [k, v] : rep.notes) sink.os() << "  note " << k << ": " << v << "\n";
  }
  sink.finish();
  for (const auto& c : rep.checks)
    if (!c.ok) std::cerr << "FAIL " << name << " " << c.name << "\n";
  return rep.all() ? ok : check_failed;
}

int cmd_render_pyramids(const Partition& shape, const RunConfig& cfg) {
  const auto fmt = parse_render_format(cfg.format == "json" ? "ascii" : cfg.format);
  Sink sink(cfg.out);
  const auto pyramids = enumerate_pyramids(shape);
  for (std::size_t k = 0; k < pyramids.size(); ++k) {
    if (fmt == RenderFormat::ascii) sink.os() << "pyramid " << k + 1 << " of " << pyramids.size() << "\n";
    sink.os() << render(pyramids[k], standard_filling(pyramids[k]), fmt);
    if (fmt == RenderFormat::ascii && k + 1 < pyramids.size()) sink.os() << "\n";
  }
  sink.finish();
  return ok;
}

int cmd_render_hasse(int n, const RunConfig& cfg) {
  if (n < 1 || n > 20) throw InputError("hasse needs 1 <= n <= 20");
  const auto fmt = parse_render_format(cfg.format == "json" ? "ascii" : cfg.format);
  Sink sink(cfg.out);
  sink.os() << render_hasse(n, fmt);
  sink.finish();
  return ok;
}

json read_json_input(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw IOError("cannot read input file " + path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
}

const ReductionCtx& pick_stage(const StageQuantum& sq, const std::string& stage) {
  if (stage == "oneshot") return *sq.oneshot;
  if (stage == "first") return *sq.first;
  throw InputError("--stage must be 'first' or 'oneshot'");
}

int cmd_reduce(const Partition& mu, const Partition& lam, const RunConfig& cfg) {
  require_format(cfg.format, {"json", "text"});
  check_cover(mu, lam, 4, "reduce");
  auto sq = make_stage_quantum(build_stage(mu, lam));
  const auto& ctx = pick_stage(sq, cfg.stage);
  auto u = pbw_from_json(read_json_input(cfg.input), sq.alg->basis().size());
  auto r = ideal_reduce(u, ctx);
  const int bad = first_non_invariant(r, ctx);
  Sink sink(cfg.out);
  if (cfg.format == "json") {
    json j{{"letters", sq.alg->basis().names()}, {"reduced", to_json(r)}, {"invariant", bad < 0}};
    if (bad >= 0) j["failing_letter"] = sq.alg->basis().name(bad);
    sink.os() << j.dump() << "\n";
  } else {
    sink.os() << sq.alg->str(r) << "\n"
              << (bad < 0 ? "invariant" : "not invariant under " + sq.alg->basis().name(bad)) << "\n";
  }
  sink.finish();
  return ok;
}

int cmd_invariants(const Partition& mu, const Partition& lam, const RunConfig& cfg) {
  require_format(cfg.format, {"json", "text"});
  check_cover(mu, lam, 4, "invariants");
  if (cfg.degree < 0) throw InputError("invariants needs --degree >= 0");
  auto sq = make_stage_quantum(build_stage(mu, lam));
  const auto& ctx = pick_stage(sq, cfg.stage);
  Sink sink(cfg.out);
  if (cfg.format == "json") sink.os() << json{{"letters", sq.alg->basis().names()}}.dump() << "\n";
  for (int d = 0; d <= cfg.degree; ++d) {
    auto basis = cfg.jobs > 1 ? invariant_basis(ctx, d) : invariant_basis_serial(ctx, d);
    if (cfg.format == "json") {
      json elems = json::array();
      for (const auto& u : basis) elems.push_back(to_json(u));
      sink.os() << json{{"degree", d}, {"dim", basis.size()}, {"basis", elems}}.dump() << "\n";
    } else {
      sink.os() << "degree " << d << ": dim " << basis.size() << "\n";
      for (const auto& u : basis) sink.os() << "  " << sq.alg->str(u) << "\n";
    }
    sink.os().flush();
  }
  sink.finish();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reduction by stages for finite W-algebras in type A"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.format = "json";
  int n = 0;
  std::string mu_s, lam_s, name, shape_s;

  auto add_out = [&](CLI::App* c) { c->add_option("--out", cfg.out, "Output file (default stdout)"); };

  auto* va = app.add_subcommand("verify-all", "Verify every cover of every partition of n (JSON lines)");
  va->add_option("n", n, "2 <= n <= 8")->required();
  va->add_option("--jobs", cfg.jobs, "Worker threads (default 1)");
  va->add_option("--format", cfg.format, "json");
  add_out(va);

  auto* co = app.add_subcommand("construct", "Dump the stage data for a cover mu < lam");
  co->add_option("mu", mu_s)->required();
  co->add_option("lam", lam_s)->required();
  co->add_option("--format", cfg.format, "json or text");
  add_out(co);

  auto* ve = app.add_subcommand("verify", "Verify one cover mu < lam");
  ve->add_option("mu", mu_s)->required();
  ve->add_option("lam", lam_s)->required();
  ve->add_option("--format", cfg.format, "json or text");
  add_out(ve);

  auto* ex = app.add_subcommand("examples", "Run the sl3 or sl4 worked example");
  ex->add_option("name", name, "sl3 or sl4")->required();
  ex->add_option("--degree", cfg.degree, "Largest degree for the sl3 dimension comparison");
  ex->add_option("--fixture-dir", cfg.fixture_dir, "Fixture directory (else $SLODOWY_FIXTURES)");
  ex->add_option("--format", cfg.format, "json or text");
  add_out(ex);

  auto* re = app.add_subcommand("render", "Render pyramids or a Hasse diagram");
  re->require_subcommand(1);
  auto* rp = re->add_subcommand("pyramids", "All pyramids of a shape");
  rp->add_option("shape", shape_s)->required();
  auto* rh = re->add_subcommand("hasse", "Dominance order on partitions of n");
  rh->add_option("n", n)->required();
  for (auto* c : {rp, rh}) {
    c->add_option("--format", cfg.format, "ascii, tex or dot");
    add_out(c);
  }

  auto* rd = app.add_subcommand("reduce", "Reduce a PBW element (JSON) modulo the shifted left ideal, n <= 4");
  rd->add_option("mu", mu_s)->required();
  rd->add_option("lam", lam_s)->required();
  rd->add_option("--input", cfg.input, "PBW element JSON file (default stdin)");
  rd->add_option("--stage", cfg.stage, "first (m1) or oneshot (m2)");
  rd->add_option("--format", cfg.format, "json or text");
  add_out(rd);

  auto* iv = app.add_subcommand("invariants", "Invariant basis per degree up to --degree, n <= 4");
  iv->add_option("mu", mu_s)->required();
  iv->add_option("lam", lam_s)->required();
  iv->add_option("--degree", cfg.degree, "Largest degree")->required();
  iv->add_option("--stage", cfg.stage, "first (m1) or oneshot (m2)");
  iv->add_option("--jobs", cfg.jobs, "Use the OpenMP kernel when > 1");
  iv->add_option("--format", cfg.format, "json or text");
  add_out(iv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }
  if (re->parsed() && cfg.format == "json") cfg.format = "ascii";

  try {
    if (va->parsed()) return cmd_verify_all(n, cfg);
    if (co->parsed()) return cmd_construct(parse_partition(mu_s), parse_partition(lam_s), cfg);
    if (ve->parsed()) return cmd_verify(parse_partition(mu_s), parse_partition(lam_s), cfg);
    if (ex->parsed()) return cmd_examples(name, cfg);
    if (rp->parsed()) return cmd_render_pyramids(parse_partition(shape_s), cfg);
    if (rh->parsed()) return cmd_render_hasse(n, cfg);
    if (rd->parsed()) return cmd_reduce(parse_partition(mu_s), parse_partition(lam_s), cfg);
    if (iv->parsed()) return cmd_invariants(parse_partition(mu_s), parse_partition(lam_s), cfg);
  } catch (const IOError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const RelationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return check_failed;
  }
  return usage;
}
