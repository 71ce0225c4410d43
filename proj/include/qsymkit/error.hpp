#ifndef QSYMKIT_ERROR_HPP
#define QSYMKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qsk {

enum class ErrorKind {
  parse,
  invalid_argument,
  cycle,
  not_tertispecial,
  not_preserving,
  closure_too_large,
  bound_exceeded,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

// Transitive closure of a relation produced x < x for the named element.
struct CycleError : Error {
  CycleError(const std::string& relation, const std::string& element)
      : Error(ErrorKind::cycle,
              relation + " is not a strict partial order: closure gives " +
                  element + " < " + element),
        element(element) {}
  std::string element;
};

struct NotTertispecial : Error {
  explicit NotTertispecial(const std::string& what)
      : Error(ErrorKind::not_tertispecial, what) {}
};

struct NotPreserving : Error {
  explicit NotPreserving(const std::string& what)
      : Error(ErrorKind::not_preserving, what) {}
};

struct ClosureTooLarge : Error {
  explicit ClosureTooLarge(const std::string& what)
      : Error(ErrorKind::closure_too_large, what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what)
      : Error(ErrorKind::bound_exceeded, what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::internal, what) {}
};

}  // namespace qsk

#endif  // QSYMKIT_ERROR_HPP
