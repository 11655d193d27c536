#ifndef CAGB_PROPERTIES_HPP
#define CAGB_PROPERTIES_HPP

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cagb/gen.hpp"

namespace cagb {

// Thrown by a property body to report a violated law.
class PropertyViolation : public Error {
public:
  using Error::Error;
};

// One property case: draws its data from the config (seed included) and
// throws PropertyViolation on failure.
using Property = std::function<void(const GenConfig&)>;

struct PropertyReport {
  std::string name;
  bool passed = false;
  std::size_t casesRun = 0;
  // Failure details; the config is the shrunk witness and still fails.
  std::string message;
  GenConfig witness;
  bool timedOut = false;

  std::string summary() const;
};

class PropertyRegistry {
public:
  void add(std::string name, Property prop);
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;

  // Runs `count` cases with seeds cfg.seed, cfg.seed+1, ... Each case runs
  // in a forked child so a hang becomes a reported failure with its seed.
  PropertyReport run(const std::string& name, const GenConfig& cfg,
                     std::size_t count,
                     std::chrono::seconds perCaseTimeout =
                         std::chrono::seconds(10)) const;

private:
  struct CaseOutcome {
    bool passed;
    bool timedOut;
    std::string message;
  };
  CaseOutcome runCase(const Property& prop, const GenConfig& cfg,
                      std::chrono::seconds timeout) const;
  GenConfig shrink(const Property& prop, GenConfig failing,
                   std::chrono::seconds timeout, std::string* message) const;

  std::map<std::string, Property> props_;
};

// The spec suite: division axioms, S-test per algorithm, membership
// cofactors, cross-algorithm agreement, homogenisation roundtrip, and cast
// homomorphism laws.
PropertyRegistry standardProperties();

// External oracle comparison over the line protocol: we print the ring
// header and the generators, the oracle answers with its basis in the same
// grammar. Both bases must reduce to zero against each other.
struct OracleReport {
  bool agreement = false;
  std::string detail;
};
OracleReport oracleCompare(const Ideal& I, const std::string& command);

} // namespace cagb

#endif
