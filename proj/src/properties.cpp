#include "cagb/properties.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "cagb/f4.hpp"
#include "cagb/f5.hpp"
#include "cagb/groebner.hpp"
#include "cagb/hilbert.hpp"
#include "cagb/parse.hpp"

namespace cagb {

std::string PropertyReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (passed ? "pass" : "FAIL") << " (" << casesRun
     << " cases)";
  if (!passed) {
    os << " seed=" << witness.seed << " arity=" << witness.arity
       << " maxDegree=" << witness.maxDegree
       << " maxTerms=" << witness.maxTerms
       << " maxGenerators=" << witness.maxGenerators;
    if (timedOut)
      os << " [timeout]";
    if (!message.empty())
      os << " :: " << message;
  }
  return os.str();
}

void PropertyRegistry::add(std::string name, Property prop) {
  props_.emplace(std::move(name), std::move(prop));
}

bool PropertyRegistry::has(const std::string& name) const {
  return props_.count(name) != 0;
}

std::vector<std::string> PropertyRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(props_.size());
  for (const auto& [name, _] : props_)
    out.push_back(name);
  return out;
}

// Run one case in a forked child: exit 0 = pass, 10 = violation (message on
// the pipe), 11 = other error. A child past its deadline is killed and the
// case reported as a timeout failure.
PropertyRegistry::CaseOutcome PropertyRegistry::runCase(
    const Property& prop, const GenConfig& cfg,
    std::chrono::seconds timeout) const {
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
    int code = 0;
    std::string msg;
    try {
      prop(cfg);
    } catch (const PropertyViolation& e) {
      code = 10;
      msg = e.what();
    } catch (const std::exception& e) {
      code = 11;
      msg = e.what();
    }
    if (!msg.empty()) {
      ssize_t n = write(fds[1], msg.data(), msg.size());
      (void)n;
    }
    close(fds[1]);
    _exit(code);
  }
  close(fds[1]);
  auto deadline = std::chrono::steady_clock::now() + timeout;
  int status = 0;
  bool finished = false, killed = false;
  for (;;) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      finished = true;
      break;
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      killed = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  std::string message;
  char buf[4096];
  ssize_t n;
  while ((n = read(fds[0], buf, sizeof buf)) > 0)
    message.append(buf, static_cast<std::size_t>(n));
  close(fds[0]);
  if (killed)
    return {false, true, "case exceeded its time budget"};
  if (finished && WIFEXITED(status) && WEXITSTATUS(status) == 0)
    return {true, false, ""};
  if (message.empty())
    message = "case failed";
  return {false, false, message};
}

GenConfig PropertyRegistry::shrink(const Property& prop, GenConfig failing,
                                   std::chrono::seconds timeout,
                                   std::string* message) const {
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<GenConfig> candidates;
    if (failing.maxDegree > 1) {
      GenConfig c = failing;
      --c.maxDegree;
      candidates.push_back(c);
    }
    if (failing.maxTerms > 1) {
      GenConfig c = failing;
      --c.maxTerms;
      candidates.push_back(c);
    }
    if (failing.maxGenerators > 1) {
      GenConfig c = failing;
      --c.maxGenerators;
      candidates.push_back(c);
    }
    for (const auto& cand : candidates) {
      for (std::uint64_t s = failing.seed; s < failing.seed + 12; ++s) {
        CaseOutcome out = runCase(prop, cand.withSeed(s), timeout);
        if (!out.passed && !out.timedOut) {
          failing = cand.withSeed(s);
          *message = out.message;
          improved = true;
          break;
        }
      }
      if (improved)
        break;
    }
  }
  return failing;
}

PropertyReport PropertyRegistry::run(const std::string& name,
                                     const GenConfig& cfg, std::size_t count,
                                     std::chrono::seconds timeout) const {
  auto it = props_.find(name);
  if (it == props_.end())
    throw Error("unknown property '" + name + "'");
  PropertyReport report;
  report.name = name;
  report.witness = cfg;
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig caseCfg = cfg.withSeed(cfg.seed + i);
    CaseOutcome out = runCase(it->second, caseCfg, timeout);
    ++report.casesRun;
    if (out.passed)
      continue;
    report.passed = false;
    report.timedOut = out.timedOut;
    report.message = out.message;
    report.witness = caseCfg;
    if (!out.timedOut)
      report.witness = shrink(it->second, caseCfg, timeout, &report.message);
    return report;
  }
  report.passed = true;
  return report;
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition)
    throw PropertyViolation(message);
}

std::vector<Polynomial> gbPolys(const std::vector<LabeledPolynomial>& basis) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis)
    out.push_back(b.poly);
  return out;
}

void propDivision(const GenConfig& cfg) {
  Generator g(cfg);
  const Field k = cfg.field;
  for (int i = 0; i < 20; ++i) {
    FieldElem q = g.fieldElement();
    if (!q.isZero()) {
      require(q.recip() * q == k.one(), "recip(q) * q != 1");
      require(q * q.recip() == k.one(), "q * recip(q) != 1");
    }
    require(q * k.one() == q, "q * 1 != q");
    require(k.one() * q == q, "1 * q != q");
  }
}

void checkSTest(const std::vector<Polynomial>& basis) {
  require(!basis.empty(), "empty basis");
  require(isGroebnerBasis(basis), "basis fails the S-test");
}

void propSTestBuchberger(const GenConfig& cfg) {
  Generator g(cfg);
  checkSTest(buchberger(g.ideal()));
}

void propSTestF4(const GenConfig& cfg) {
  Generator g(cfg);
  Ideal I = g.ideal();
  checkSTest(f4(denseBackend(), normalStrategy(), I));
  checkSTest(f4(sparseBackend(), normalStrategy(), I));
}

void propSTestF5(const GenConfig& cfg) {
  Generator g(cfg);
  checkSTest(gbPolys(f5(g.ideal().generators())));
}

void propSTestHilbertDriven(const GenConfig& cfg) {
  Generator g(cfg);
  Ideal I = g.ideal();
  std::vector<Polynomial> basis = calcGBViaHomog(
      [](const Ideal& J) {
        return hilbertDrivenGB(J, MonomialOrder::grevlex(),
                               J.ring()->order());
      },
      I);
  checkSTest(basis);
  for (const auto& gen : I.generators())
    require(normalForm(gen, basis).remainder.isZero(),
            "generator does not reduce to zero");
}

void propSTestDegreeByDegree(const GenConfig& cfg) {
  Generator g(cfg);
  Ideal I = g.ideal();
  std::vector<Polynomial> basis = calcGBViaHomog(
      [](const Ideal& J) { return degreeByDegreeGB(J); }, I);
  checkSTest(basis);
}

void propMemberCofactors(const GenConfig& cfg) {
  Generator g(cfg);
  Ideal I = g.ideal();
  TrackedBasis gb = buchbergerTracked(I);
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    Polynomial dot = Polynomial::zero(I.ring());
    for (std::size_t i = 0; i < I.size(); ++i)
      dot = dot + gb.cofactors[k][i] * I[i];
    require(dot == gb.basis[k], "tracked cofactors fail to re-expand");
  }
  for (const auto& gen : I.generators()) {
    MembershipResult m = idealMembership(gen, I);
    require(m.member, "generator not recognised as a member");
  }
}

void propCrossAlgorithm(const GenConfig& cfg) {
  Generator g(cfg);
  Ideal I = g.ideal();
  std::vector<Polynomial> reference = reduceGB(buchberger(I), false);
  require(reduceGB(f4(denseBackend(), normalStrategy(), I), false) ==
              reference,
          "f4 (dense) disagrees with buchberger");
  require(reduceGB(f4(sparseBackend(), normalStrategy(), I), false) ==
              reference,
          "f4 (sparse) disagrees with buchberger");
  require(reduceGB(gbPolys(f5(I.generators())), false) == reference,
          "f5 disagrees with buchberger");
  std::vector<Polynomial> hilb = calcGBViaHomog(
      [](const Ideal& J) {
        return hilbertDrivenGB(J, MonomialOrder::grevlex(),
                               J.ring()->order());
      },
      I);
  require(reduceGB(hilb, false) == reference,
          "hilbert-driven disagrees with buchberger");
}

void propHomogRoundtrip(const GenConfig& cfg) {
  Generator g(cfg);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = g.polynomial();
    Polynomial h = homogenise(f);
    require(isHomogeneous(h), "homogenise output not homogeneous");
    require(unhomogenise(h) == f, "homogenise roundtrip failed");
  }
}

void propCastHomomorphism(const GenConfig& cfg) {
  Generator g(cfg);
  const Ring& src = g.ring();
  std::size_t extra = 2;
  std::vector<std::string> names = src->names();
  for (std::size_t i = 0; i < extra; ++i)
    names.push_back("c" + std::to_string(i));
  Ring wide = makeRing(src->arity() + extra, MonomialOrder::lex(),
                       src->field(), names);
  std::vector<std::string> shuffled(names.rbegin(), names.rend());
  Ring permuted = makeRing(names.size(), src->order(), src->field(),
                           shuffled);
  for (int i = 0; i < 6; ++i) {
    Polynomial f = g.polynomial();
    Polynomial h = g.polynomial();
    std::size_t k = g.draw(extra + 1);
    require(injVarsOffset(k, f, wide) * injVarsOffset(k, h, wide) ==
                injVarsOffset(k, f * h, wide),
            "injVarsOffset does not respect products");
    require(injVarsOffset(k, f, wide) + injVarsOffset(k, h, wide) ==
                injVarsOffset(k, f + h, wide),
            "injVarsOffset does not respect sums");
    Polynomial fw = injVars(f, wide), hw = injVars(h, wide);
    require(remapVariables(fw, permuted) * remapVariables(hw, permuted) ==
                remapVariables(fw * hw, permuted),
            "remapVariables does not respect products");
    require(remapVariables(fw, permuted) + remapVariables(hw, permuted) ==
                remapVariables(fw + hw, permuted),
            "remapVariables does not respect sums");
  }
}

} // namespace

PropertyRegistry standardProperties() {
  PropertyRegistry r;
  r.add("prop_division", propDivision);
  r.add("prop_passesSTest_buchberger", propSTestBuchberger);
  r.add("prop_passesSTest_f4", propSTestF4);
  r.add("prop_passesSTest_f5", propSTestF5);
  r.add("prop_passesSTest_hilbertDriven_homog", propSTestHilbertDriven);
  r.add("prop_passesSTest_degreeByDegree_homog", propSTestDegreeByDegree);
  r.add("prop_member_cofactors", propMemberCofactors);
  r.add("prop_cross_algorithm", propCrossAlgorithm);
  r.add("prop_homog_roundtrip", propHomogRoundtrip);
  r.add("prop_cast_homomorphism", propCastHomomorphism);
  return r;
}

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/cagb-oracle-XXXXXX";
    int fd = mkstemp(name);
    if (fd < 0)
      throw Error("mkstemp failed");
    path = name;
    ssize_t n = write(fd, contents.data(), contents.size());
    (void)n;
    close(fd);
  }
  ~TempFile() { unlink(path.c_str()); }
};

} // namespace

OracleReport oracleCompare(const Ideal& I, const std::string& command) {
  if (command.empty())
    throw OracleUnavailable("no oracle command configured");
  const Ring& ring = I.ring();
  std::ostringstream request;
  request << "ring " << ring->field().name() << " [";
  for (std::size_t i = 0; i < ring->arity(); ++i)
    request << (i ? "," : "") << ring->displayName(i);
  request << "] " << ring->order().name() << "\n";
  for (const auto& g : I.generators())
    request << g << "\n";

  TempFile input(request.str());
  std::string full = command + " < " + input.path;
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe)
    throw OracleUnavailable("could not launch oracle: " + command);
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
    output.append(buf, n);
  int status = pclose(pipe);
  if (status != 0)
    throw OracleUnavailable("oracle exited with status " +
                            std::to_string(status));

  std::vector<Polynomial> theirs;
  std::istringstream lines(output);
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(lines, line)) {
    ++lineNo;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    try {
      theirs.push_back(parsePolynomial(line, ring, lineNo));
    } catch (const Error& e) {
      throw ProtocolError("unparseable oracle output: " +
                          std::string(e.what()));
    }
  }
  if (theirs.empty())
    throw ProtocolError("oracle returned no polynomials");

  std::vector<Polynomial> ours = reduceGB(buchberger(I), false);
  for (const auto& g : ours)
    if (!normalForm(g, theirs).remainder.isZero())
      return {false, "our element " + g.str() +
                         " does not reduce to zero against the oracle"};
  for (const auto& g : theirs)
    if (!normalForm(g, ours).remainder.isZero())
      return {false, "oracle element " + g.str() +
                         " does not reduce to zero against ours"};
  return {true, ""};
}

} // namespace cagb
