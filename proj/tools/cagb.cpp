// cagb: batch front end for the polynomial library. Subcommands: gb (basis
// of an ideal read from a job file), hilbert (series of the lead-term
// ideal), bench (built-in benchmark table), check (S-test a basis).
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cagb/f4.hpp"
#include "cagb/f5.hpp"
#include "cagb/gen.hpp"
#include "cagb/groebner.hpp"
#include "cagb/hilbert.hpp"
#include "cagb/parse.hpp"

using json = nlohmann::json;
using namespace cagb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAlgorithm = 1;
constexpr int kExitParse = 2;
constexpr int kExitTimeout = 3;

std::string readInput(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string ringHeader(const Ring& r) {
  std::ostringstream os;
  os << "ring " << r->field().name() << " [";
  for (std::size_t i = 0; i < r->arity(); ++i)
    os << (i ? "," : "") << r->displayName(i);
  os << "] " << r->order().name();
  return os.str();
}

void startWatchdog(double seconds) {
  if (seconds <= 0)
    return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cerr << "timeout after " << seconds << " s\n";
    std::_Exit(kExitTimeout);
  }).detach();
}

struct GbFlags {
  std::string algo = "buchberger";
  std::string backend = "dense";
  std::string strategy = "normal";
  std::string order;
  std::string field;
  std::string file = "-";
  double timeout = 0;
  bool jsonOut = false;
  bool emitCofactors = false;
  std::uint64_t seed = 0;
  bool seeded = false;
};

std::vector<Polynomial> dispatch(const JobSpec& spec, const Ideal& I) {
  if (spec.algorithm == "buchberger")
    return buchberger(I);
  if (spec.algorithm == "dbyd")
    return calcGBViaHomog([](const Ideal& J) { return degreeByDegreeGB(J); },
                          I);
  if (spec.algorithm == "hilb")
    return calcGBViaHomog(
        [](const Ideal& J) {
          return hilbertDrivenGB(J, MonomialOrder::grevlex(),
                                 J.ring()->order());
        },
        I);
  if (spec.algorithm == "f4")
    return f4(backendByName(spec.backend), strategyByName(spec.strategy), I);
  if (spec.algorithm == "f5") {
    std::vector<Polynomial> out;
    for (auto& b : f5(I.generators()))
      out.push_back(std::move(b.poly));
    return out;
  }
  throw Error("unknown algorithm '" + spec.algorithm + "'");
}

int runGb(const GbFlags& flags) {
  std::optional<MonomialOrder> orderOverride;
  if (!flags.order.empty())
    orderOverride = parseOrder(flags.order);
  std::optional<Field> fieldOverride;
  if (!flags.field.empty())
    fieldOverride = parseField(flags.field);

  JobSpec spec;
  if (flags.seeded) {
    GenConfig cfg;
    cfg.seed = flags.seed;
    if (fieldOverride)
      cfg.field = *fieldOverride;
    if (orderOverride)
      cfg.order = *orderOverride;
    Ideal I = genIdeal(cfg);
    spec.ring = I.ring();
    spec.generators = I.generators();
  } else {
    spec = parseJob(readInput(flags.file), orderOverride, fieldOverride);
  }
  spec.algorithm = flags.algo;
  spec.backend = flags.backend;
  spec.strategy = flags.strategy;
  spec.emitCofactors = flags.emitCofactors;
  spec.json = flags.jsonOut;

  startWatchdog(flags.timeout);
  Ideal I(spec.ring, spec.generators);
  auto t0 = std::chrono::steady_clock::now();

  if (spec.emitCofactors) {
    if (spec.algorithm != "f5")
      throw Error("--emit-cofactors requires --algo f5");
    std::vector<LabeledPolynomial> basis = f5(I.generators());
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (spec.json) {
      json out;
      out["ring"] = ringHeader(spec.ring);
      out["algorithm"] = spec.algorithm;
      out["elapsed_ms"] = ms;
      out["basis"] = json::array();
      for (const auto& b : basis) {
        json elem;
        elem["poly"] = b.poly.str();
        elem["vector"] = json::array();
        for (const auto& v : b.vector)
          elem["vector"].push_back(v.str());
        out["basis"].push_back(std::move(elem));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& b : basis) {
        std::cout << b.poly << "\n";
        for (std::size_t i = 0; i < b.vector.size(); ++i)
          std::cout << "  # v[" << i << "] = " << b.vector[i] << "\n";
      }
    }
    return kExitOk;
  }

  std::vector<Polynomial> basis = reduceGB(dispatch(spec, I), false);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (spec.json) {
    json out;
    out["ring"] = ringHeader(spec.ring);
    out["algorithm"] = spec.algorithm;
    out["elapsed_ms"] = ms;
    out["basis"] = json::array();
    for (const auto& g : basis)
      out["basis"].push_back(g.str());
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& g : basis)
      std::cout << g << "\n";
  }
  return kExitOk;
}

int runHilbert(const std::string& file, std::size_t k, bool jsonOut) {
  JobSpec spec = parseJob(readInput(file));
  std::vector<Monomial> gens;
  bool allMonomials = true;
  for (const auto& g : spec.generators)
    if (g.termCount() != 1) {
      allMonomials = false;
      break;
    }
  if (allMonomials) {
    for (const auto& g : spec.generators)
      gens.push_back(g.leadMonomial());
  } else {
    // series of the lead-term ideal of <generators>
    Ideal I(spec.ring, spec.generators);
    for (const auto& g : buchberger(I))
      gens.push_back(g.leadMonomial());
  }
  UniPoly num = hilbertNumerator(gens, spec.ring->arity());
  HPS series(spec.ring->arity(), num);
  std::vector<BigInt> taylor = series.taylor(k);
  if (jsonOut) {
    json out;
    out["ring"] = ringHeader(spec.ring);
    out["numerator"] = num.str();
    out["taylor"] = json::array();
    for (const auto& c : taylor)
      out["taylor"].push_back(c.get_str());
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "numerator: " << num.str() << "\n";
    std::cout << "taylor:";
    for (const auto& c : taylor)
      std::cout << " " << c.get_str();
    std::cout << "\n";
  }
  return kExitOk;
}

int runCheck(const std::string& file, double timeout) {
  JobSpec spec = parseJob(readInput(file));
  startWatchdog(timeout);
  if (spec.generators.empty())
    throw Error("no polynomials to check");
  bool ok = isGroebnerBasis(spec.generators);
  std::cout << (ok ? "groebner basis: yes" : "groebner basis: no") << "\n";
  return ok ? kExitOk : kExitAlgorithm;
}

// --- bench ---------------------------------------------------------------

struct BenchIdeal {
  std::string name;
  std::string vars;
  std::string body;
  std::vector<std::string> orders;
};

const std::vector<BenchIdeal>& benchIdeals() {
  static const std::vector<BenchIdeal> ideals = {
      {"I1", "[x,y,z,t,u]",
       "35*y^4 - 30*x*y^2 - 210*y^2*z + 3*x^2 + 30*x*z - 105*z^2 + 140*y*t "
       "- 21*u\n"
       "5*x*y^3 - 140*y^3*z - 3*x^2*y + 45*x*y*z - 420*y*z^2 + 210*y^2*t - "
       "25*x*t + 70*z*t + 126*y*u\n",
       {"lex", "grevlex"}},
      {"I2", "[w,x,y,z]",
       "w + x + y + z\n"
       "w*x + x*y + y*z + z*w\n"
       "w*x*y + x*y*z + y*z*w + z*w*x\n"
       "w*x*y*z - 1\n",
       {"lex", "grevlex"}},
      {"I3", "[x,y,z,t]",
       "x^31 - x^6 - x - y\n"
       "x^8 - z\n"
       "x^10 - t\n",
       {"grevlex"}}};
  return ideals;
}

const std::vector<std::string>& benchAlgorithms() {
  static const std::vector<std::string> algos = {"buchberger", "dbyd", "hilb",
                                                 "f5", "f4"};
  return algos;
}

std::string benchLabel(const std::string& algo) {
  if (algo == "buchberger")
    return "B";
  if (algo == "dbyd")
    return "DbyD";
  if (algo == "hilb")
    return "Hilb";
  if (algo == "f5")
    return "F5";
  return "F4";
}

// One cell in a forked child: compute, S-test, report "ok <ms>".
std::string benchCell(const std::string& fieldName, const BenchIdeal& ideal,
                      const std::string& order, const std::string& algo,
                      double budgetSeconds) {
  int fds[2];
  if (pipe(fds) != 0)
    throw Error("pipe failed");
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw Error("fork failed");
  }
  if (pid == 0) {
    close(fds[0]);
    std::string result;
    try {
      std::string job =
          "ring " + fieldName + " " + ideal.vars + " " + order + "\n" +
          ideal.body;
      JobSpec spec = parseJob(job);
      spec.algorithm = algo;
      Ideal I(spec.ring, spec.generators);
      auto t0 = std::chrono::steady_clock::now();
      std::vector<Polynomial> basis = dispatch(spec, I);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      if (!isGroebnerBasis(basis))
        result = "wrong";
      else {
        std::ostringstream os;
        os << "ok " << ms;
        result = os.str();
      }
    } catch (const std::exception& e) {
      result = std::string("error ") + e.what();
    }
    ssize_t n = write(fds[1], result.data(), result.size());
    (void)n;
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budgetSeconds));
  int status = 0;
  bool killed = false;
  for (;;) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid)
      break;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      killed = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  std::string out;
  char buf[4096];
  ssize_t n;
  while ((n = read(fds[0], buf, sizeof buf)) > 0)
    out.append(buf, static_cast<std::size_t>(n));
  close(fds[0]);
  if (killed)
    return "timeout";
  return out.empty() ? "error empty result" : out;
}

int runBench(const std::string& selection, const std::string& fieldSpec,
             double budgetSeconds, bool jsonOut) {
  std::string fieldName = fieldSpec.empty() ? "fp:32003" : fieldSpec;
  parseField(fieldName); // validate early
  std::vector<std::pair<const BenchIdeal*, std::string>> columns;
  for (const auto& ideal : benchIdeals()) {
    if (selection != "all" && selection != ideal.name)
      continue;
    for (const auto& order : ideal.orders)
      columns.push_back({&ideal, order});
  }
  if (columns.empty())
    throw Error("unknown ideal selection '" + selection + "'");

  json jout;
  jout["field"] = fieldName;
  jout["rows"] = json::array();
  std::vector<std::vector<std::string>> table(
      benchAlgorithms().size(),
      std::vector<std::string>(columns.size()));
  for (std::size_t a = 0; a < benchAlgorithms().size(); ++a)
    for (std::size_t c = 0; c < columns.size(); ++c)
      table[a][c] = benchCell(fieldName, *columns[c].first,
                              columns[c].second, benchAlgorithms()[a],
                              budgetSeconds);

  if (jsonOut) {
    jout["columns"] = json::array();
    for (const auto& [ideal, order] : columns)
      jout["columns"].push_back(ideal->name + "(" + order + ")");
    for (std::size_t a = 0; a < benchAlgorithms().size(); ++a) {
      json row;
      row["algorithm"] = benchLabel(benchAlgorithms()[a]);
      row["cells"] = json::array();
      for (const auto& cell : table[a]) {
        if (cell.rfind("ok ", 0) == 0)
          row["cells"].push_back(std::stod(cell.substr(3)));
        else
          row["cells"].push_back(cell);
      }
      jout["rows"].push_back(std::move(row));
    }
    std::cout << jout.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "# wall-clock ms over " << fieldName
            << "; hardware-dependent, not comparable across machines\n";
  std::cout << "algorithm";
  for (const auto& [ideal, order] : columns)
    std::cout << "\t" << ideal->name << "(" << order << ")";
  std::cout << "\n";
  for (std::size_t a = 0; a < benchAlgorithms().size(); ++a) {
    std::cout << benchLabel(benchAlgorithms()[a]);
    for (const auto& cell : table[a]) {
      if (cell.rfind("ok ", 0) == 0) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(3);
        os << std::stod(cell.substr(3));
        std::cout << "\t" << os.str();
      } else {
        std::cout << "\t" << cell;
      }
    }
    std::cout << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multivariate polynomial algebra and basis computation"};
  app.require_subcommand(1);

  GbFlags gb;
  CLI::App* gbCmd = app.add_subcommand("gb", "compute a reduced basis");
  gbCmd->add_option("file", gb.file, "job file ('-' for stdin)");
  gbCmd->add_option("--algo", gb.algo, "buchberger|dbyd|hilb|f4|f5")
      ->check(CLI::IsMember({"buchberger", "dbyd", "hilb", "f4", "f5"}));
  gbCmd->add_option("--backend", gb.backend, "f4 matrix backend")
      ->check(CLI::IsMember({"dense", "sparse"}));
  gbCmd->add_option("--strategy", gb.strategy, "f4 selection strategy")
      ->check(CLI::IsMember({"normal", "degree"}));
  gbCmd->add_option("--order", gb.order, "override the header order");
  gbCmd->add_option("--field", gb.field, "override the header field");
  gbCmd->add_option("--timeout", gb.timeout, "seconds before exit code 3");
  gbCmd->add_flag("--json", gb.jsonOut, "emit JSON");
  gbCmd->add_flag("--emit-cofactors", gb.emitCofactors,
                  "print module vectors (f5 only)");
  CLI::Option* seedOpt = gbCmd->add_option(
      "--seed", gb.seed, "run on the generated ideal with this seed");

  std::string hilbFile = "-";
  std::size_t hilbK = 10;
  bool hilbJson = false;
  CLI::App* hilbCmd =
      app.add_subcommand("hilbert", "series of the lead-term ideal");
  hilbCmd->add_option("file", hilbFile, "job file ('-' for stdin)");
  hilbCmd->add_option("-k,--terms", hilbK, "number of Taylor coefficients");
  hilbCmd->add_flag("--json", hilbJson, "emit JSON");

  std::string benchSelection = "all";
  std::string benchField;
  double benchBudget = 120.0;
  bool benchJson = false;
  CLI::App* benchCmd =
      app.add_subcommand("bench", "built-in benchmark table");
  benchCmd->add_option("--ideal", benchSelection, "I1|I2|I3|all");
  benchCmd->add_option("--field", benchField, "default fp:32003");
  benchCmd->add_option("--timeout", benchBudget, "per-cell budget, seconds");
  benchCmd->add_flag("--json", benchJson, "emit JSON");

  std::string checkFile = "-";
  double checkTimeout = 0;
  CLI::App* checkCmd =
      app.add_subcommand("check", "S-test the polynomials of a job");
  checkCmd->add_option("file", checkFile, "job file ('-' for stdin)");
  checkCmd->add_option("--timeout", checkTimeout,
                       "seconds before exit code 3");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gbCmd->parsed()) {
      gb.seeded = seedOpt->count() > 0;
      return runGb(gb);
    }
    if (hilbCmd->parsed())
      return runHilbert(hilbFile, hilbK, hilbJson);
    if (benchCmd->parsed())
      return runBench(benchSelection, benchField, benchBudget, benchJson);
    if (checkCmd->parsed())
      return runCheck(checkFile, checkTimeout);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DuplicateVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAlgorithm;
  }
  return kExitOk;
}
