#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopEdge : public Error {
 public:
  explicit LoopEdge(std::int64_t vertex)
      : Error("loop edge at vertex " + std::to_string(vertex)), vertex_(vertex) {}
  std::int64_t vertex() const noexcept { return vertex_; }

 private:
  std::int64_t vertex_;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(std::int64_t vertex, std::int64_t n)
      : Error("vertex " + std::to_string(vertex) + " out of range for n = " + std::to_string(n)),
        vertex_(vertex),
        n_(n) {}
  std::int64_t vertex() const noexcept { return vertex_; }
  std::int64_t vertex_count() const noexcept { return n_; }

 private:
  std::int64_t vertex_;
  std::int64_t n_;
};

class EdgeOutOfRange : public Error {
 public:
  EdgeOutOfRange(std::int64_t edge, std::size_t m)
      : Error("edge id " + std::to_string(edge) + " out of range for " + std::to_string(m) +
              " edges") {}
};

class InvalidCircle : public Error {
 public:
  using Error::Error;
};

class PartitionMismatch : public Error {
 public:
  PartitionMismatch(std::size_t partition_size, std::size_t n)
      : Error("partition covers " + std::to_string(partition_size) + " vertices, graph has " +
              std::to_string(n)) {}
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("circle enumeration exceeded cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class TooLargeForOracle : public Error {
 public:
  TooLargeForOracle(std::size_t n, std::size_t cap)
      : Error("graph has " + std::to_string(n) + " vertices; partition oracle cap is " +
              std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

class InfeasibleBudget : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wnc
