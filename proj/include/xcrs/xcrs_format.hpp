#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "xcrs/crossed_complex.hpp"
#include "xcrs/crossed_morphism.hpp"
#include "xcrs/cubical.hpp"

namespace xcrs {

// Syntax or semantic error at a 1-based line and column.
class ParseError : public StructuralError {
 public:
  ParseError(int line, int column, std::string const& what)
      : StructuralError("line " + std::to_string(line) + ", column " + std::to_string(column)
                        + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// A document holds named complexes, morphisms between them and cubical
// operator tables. A document whose first block starts with `regime`
// holds one complex named "main".
struct XcrsDocument {
  struct NamedComplex {
    std::string    name;
    CrossedComplex complex;
  };
  struct NamedMorphism {
    std::string     name;
    std::string     source;
    std::string     target;
    CrossedMorphism map;
  };
  struct NamedCubical {
    std::string   name;
    CubicalObject cubes;
  };

  int                        version = 1;
  std::vector<NamedComplex>  complexes;
  std::vector<NamedMorphism> morphisms;
  std::vector<NamedCubical>  cubicals;

  // Throws DomainError when absent.
  CrossedComplex const& complex(std::string const& name) const;
  NamedMorphism const& morphism(std::string const& name) const;
};

XcrsDocument parse_xcrs(std::string const& text);
std::string serialize(XcrsDocument const& doc);

// Single-complex conveniences.
std::string serialize(CrossedComplex const& c, std::string const& name = "main");

// Throws std::runtime_error on IO failure.
XcrsDocument read_xcrs_file(std::filesystem::path const& path);
void write_text_file(std::filesystem::path const& path, std::string const& text);

}  // namespace xcrs
