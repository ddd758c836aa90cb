#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "csf/ids.hpp"

namespace csf {

// A cognitive resource tried an operation its view forbids. rule() names the
// breached memory access rule (rule 1: no sensory access).
class AccessViolation : public std::runtime_error {
public:
  AccessViolation(int rule, const std::string& what)
      : std::runtime_error(what), rule_(rule) {}
  int rule() const noexcept { return rule_; }

private:
  int rule_;
};

class UnknownFrame : public std::runtime_error {
public:
  explicit UnknownFrame(FrameId id)
      : std::runtime_error("unknown frame: " + id), id_(std::move(id)) {}
  const FrameId& id() const noexcept { return id_; }

private:
  FrameId id_;
};

class UnknownTarget : public std::runtime_error {
public:
  explicit UnknownTarget(EntityId id)
      : std::runtime_error("no social percept about target: " + id), id_(std::move(id)) {}
  const EntityId& id() const noexcept { return id_; }

private:
  EntityId id_;
};

class UnknownScenario : public std::runtime_error {
public:
  explicit UnknownScenario(std::string name)
      : std::runtime_error("unknown built-in scenario: " + name), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

// Malformed scenario document. where() is a path into the document
// ("/frames/coach/construal/0"); line/column are set for syntax errors.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::string where, int line = -1, int column = -1)
      : std::runtime_error(where.empty() ? what : what + " (at " + where + ")"),
        where_(std::move(where)), line_(line), column_(column) {}
  const std::string& where() const noexcept { return where_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  std::string where_;
  int line_;
  int column_;
};

// A scenario cross-reference names an undeclared id.
class ReferenceError : public std::runtime_error {
public:
  ReferenceError(std::string id, std::string where)
      : std::runtime_error("dangling reference: " + id + " (at " + where + ")"),
        id_(std::move(id)), where_(std::move(where)) {}
  const std::string& id() const noexcept { return id_; }
  const std::string& where() const noexcept { return where_; }

private:
  std::string id_;
  std::string where_;
};

// A scenario number is outside its admissible range.
class DomainError : public std::runtime_error {
public:
  DomainError(const std::string& what, std::string where)
      : std::runtime_error(what + " (at " + where + ")"), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

// A scenario failed semantic validation with at least one error diagnostic.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace csf
