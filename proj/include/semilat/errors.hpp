#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semilat {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input relation closes into a cycle; `cycle` lists the labels along one
// offending loop, starting and ending at the same element.
class CycleError : public Error {
 public:
  CycleError(std::string message, std::vector<std::string> cycle)
      : Error(std::move(message)), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class UnknownLabel : public Error {
 public:
  UnknownLabel(std::string message, std::string label)
      : Error(std::move(message)), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// A model exceeded a size limit (element cap, enumeration cap).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A poset is not a join-semilattice; carries one offending pair.
class NotAJoinSemilattice : public Error {
 public:
  NotAJoinSemilattice(std::string message, std::string a, std::string b)
      : Error(std::move(message)), pair_(std::move(a), std::move(b)) {}
  const std::pair<std::string, std::string>& witness_pair() const { return pair_; }

 private:
  std::pair<std::string, std::string> pair_;
};

// A subset is not closed under the ambient join; carries one escaping pair.
class NotJoinClosed : public Error {
 public:
  NotJoinClosed(std::string message, std::string a, std::string b)
      : Error(std::move(message)), pair_(std::move(a), std::move(b)) {}
  const std::pair<std::string, std::string>& witness_pair() const { return pair_; }

 private:
  std::pair<std::string, std::string> pair_;
};

class NotALattice : public Error {
 public:
  using Error::Error;
};

class NotDownwardDirected : public Error {
 public:
  using Error::Error;
};

class ArityOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotArrowTotal : public Error {
 public:
  using Error::Error;
};

// Model text that does not conform to the document format.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(std::move(message)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An implication or coincidence that must hold on every model failed. This is
// a fatal internal inconsistency, serialized with enough detail to replay.
class ChainViolation : public Error {
 public:
  ChainViolation(std::string message, std::string model_code, std::string detail)
      : Error(std::move(message)), model_code_(std::move(model_code)), detail_(std::move(detail)) {}
  const std::string& model_code() const { return model_code_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string model_code_;
  std::string detail_;
};

}  // namespace semilat
