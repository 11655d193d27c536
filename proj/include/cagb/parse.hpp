#ifndef CAGB_PARSE_HPP
#define CAGB_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cagb/polynomial.hpp"

namespace cagb {

// Grammar (whitespace-insensitive):
//   poly  := ('+'|'-')? term (('+'|'-') term)*
//   term  := coeff? ('*'? var ('^' nat)?)*
//   var   := name declared by the ring
//   coeff := nat ('/' nat)?          -- the quotient form only over Q
Polynomial parsePolynomial(const std::string& text, const Ring& ring,
                           std::size_t lineNo = 1);

// "lex", "grevlex", "graded(<order>)", "homog(<order>)"; case-insensitive.
MonomialOrder parseOrder(const std::string& text);

// "q" or "fp:<p>"; case-insensitive.
Field parseField(const std::string& text);

// One header line: ring <field> [<name>,...] <order>
Ring parseRingHeader(const std::string& line, std::size_t lineNo = 1);

// A batch job: a ring header followed by one generator per line. Blank
// lines and lines starting with '#' are skipped.
struct JobSpec {
  Ring ring;
  std::vector<Polynomial> generators;
  // Populated from CLI flags, not from the job text.
  std::string algorithm = "buchberger";
  std::string backend = "dense";
  std::string strategy = "normal";
  bool emitCofactors = false;
  bool json = false;
};

JobSpec parseJob(const std::string& text);
// Same, but the header's order and/or field are replaced before the
// generators are parsed.
JobSpec parseJob(const std::string& text,
                 const std::optional<MonomialOrder>& orderOverride,
                 const std::optional<Field>& fieldOverride);

} // namespace cagb

#endif
