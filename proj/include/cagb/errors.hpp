#ifndef CAGB_ERRORS_HPP
#define CAGB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cagb {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define CAGB_ERROR_KIND(Name)                                                  \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

// Fields and coefficients.
CAGB_ERROR_KIND(MixedFieldError);
CAGB_ERROR_KIND(DivisionByZero);
CAGB_ERROR_KIND(NotPrime);
CAGB_ERROR_KIND(OverflowError);

// Monomials and rings.
CAGB_ERROR_KIND(ArityMismatch);
CAGB_ERROR_KIND(NotDivisible);
CAGB_ERROR_KIND(RingMismatch);
CAGB_ERROR_KIND(ZeroPolynomial);
CAGB_ERROR_KIND(IncompatibleRings);
CAGB_ERROR_KIND(ArityOverflow);
CAGB_ERROR_KIND(NameNotFound);
CAGB_ERROR_KIND(NoNames);
CAGB_ERROR_KIND(NotHomogenisedRing);
CAGB_ERROR_KIND(NotHomogeneous);
CAGB_ERROR_KIND(DuplicateVariable);

// Basis computations.
CAGB_ERROR_KIND(NotABasis);
CAGB_ERROR_KIND(RaggedRows);
CAGB_ERROR_KIND(InconsistentLabel);
CAGB_ERROR_KIND(DegreeBoundExceeded);

// External interfaces.
CAGB_ERROR_KIND(UnknownVariable);
CAGB_ERROR_KIND(OracleUnavailable);
CAGB_ERROR_KIND(ProtocolError);

#undef CAGB_ERROR_KIND

// Parse failure with source position (1-based line and column).
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace cagb

#endif
