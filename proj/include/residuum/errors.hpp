#ifndef RESIDUUM_ERRORS_HPP
#define RESIDUUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace residuum {

// Base class for all library errors. The `kind` tag is stable and is what
// the C API and the CLI map to exit codes.
class Error : public std::runtime_error {
public:
  enum class Kind {
    query_beyond_truncation,
    zero_division,
    duplicate_location,
    disconnected_graph,
    non_rational_component,
    truncation_too_small,
    not_gorenstein,
    parse_error,
    missing_differential,
    unknown_edge,
    invalid_input,
    internal,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

struct QueryBeyondTruncation : Error {
  explicit QueryBeyondTruncation(const std::string& msg)
      : Error(Kind::query_beyond_truncation, msg) {}
};

struct ZeroDivision : Error {
  explicit ZeroDivision(const std::string& msg) : Error(Kind::zero_division, msg) {}
};

struct DuplicateLocation : Error {
  explicit DuplicateLocation(const std::string& msg)
      : Error(Kind::duplicate_location, msg) {}
};

struct DisconnectedGraph : Error {
  explicit DisconnectedGraph(const std::string& msg)
      : Error(Kind::disconnected_graph, msg) {}
};

struct NonRationalComponent : Error {
  explicit NonRationalComponent(const std::string& msg)
      : Error(Kind::non_rational_component, msg) {}
};

struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& msg)
      : Error(Kind::truncation_too_small, msg) {}
};

struct NotGorensteinDetected : Error {
  explicit NotGorensteinDetected(const std::string& msg)
      : Error(Kind::not_gorenstein, msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(Kind::parse_error, msg) {}
};

struct MissingDifferential : Error {
  explicit MissingDifferential(const std::string& msg)
      : Error(Kind::missing_differential, msg) {}
};

struct UnknownEdge : Error {
  explicit UnknownEdge(const std::string& msg) : Error(Kind::unknown_edge, msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(Kind::invalid_input, msg) {}
};

} // namespace residuum

#endif
