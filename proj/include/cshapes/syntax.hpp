#ifndef CSHAPES_SYNTAX_HPP
#define CSHAPES_SYNTAX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cshapes/model.hpp"

namespace cshapes {

class SourceError : public std::runtime_error {
 public:
  SourceError(int line, int column, std::string message, std::string snippet);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& snippet() const { return snippet_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::string snippet_;
};

// A template variable that the WHERE block never binds.
class UnboundVariableError : public SourceError {
 public:
  using SourceError::SourceError;
};

// Valid SPARQL outside the supported fragment (OPTIONAL, FILTER, paths, ...).
class UnsupportedFeatureError : public SourceError {
 public:
  using SourceError::SourceError;
};

Query parseQuery(const std::string& text);

// One axiom per line. Left-hand sides are restricted to shape targets.
std::vector<Axiom> parseShapes(const std::string& text);

// Ground triples, same term syntax as queries: ":a a :A ." and ":a :p :b .".
Graph parseGraph(const std::string& text);

std::string render(const Name& n);
std::string render(const Role& r);
std::string render(const Concept& c);
std::string render(const Axiom& a);
std::string render(const Shape& s);
std::string render(const Atom& a);
std::string render(const Query& q);
std::string render(const Graph& g);

}  // namespace cshapes

#endif  // CSHAPES_SYNTAX_HPP
