#ifndef DOMLAB_ERROR_HPP
#define DOMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace domlab {

enum class Errc {
  LoopEdge,
  EndpointOutOfRange,
  EdgeNotInGraph,
  ElementNotInGraph,
  Disconnected,
  EmptyGraph,
  TooLarge,
  TooSmall,
  NoEdges,
  InvalidParams,
  UnsupportedFamily,
  IsolatedVertex,
  BudgetExhausted,
  EmptyResidual,
  NotHamiltonianPath,
  NotATree,
  ConstructionFailed,
  SyntaxError,
  BadByte,
  TruncatedBits,
  CapExceeded,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Parse failure with a source position (1-based line/column).
class ParseError : public Error {
public:
  ParseError(Errc code, int line, int column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace domlab

#endif
