#ifndef STARR_IO_HPP
#define STARR_IO_HPP

// Arrangement files (JSON) and a small polynomial text parser.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starr/arrangement.hpp"

namespace starr {

/// Malformed input. `where` is a JSON path or a character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct ArrangementFile {
  const FieldDescriptor* field = FieldDescriptor::rational();
  std::vector<std::string> variables;
  std::vector<ScalarVector> hyperplanes;
  std::optional<Polynomial> eta;

  Arrangement arrangement() const;
  friend bool operator==(const ArrangementFile& a, const ArrangementFile& b);
};

ArrangementFile arrangement_file_from(const Arrangement& a, std::optional<Polynomial> eta = std::nullopt);

/// Field: {"type":"rational"} or {"type":"extension","minpoly":[-2,0,1],"symbol":"r"}.
/// Hyperplanes: arrays of coefficients; a coefficient is an integer, a "p/q"
/// string, or (extension fields) an array of coordinates in powers of the symbol.
/// eta: {"degree": d, "coefficients": [{"monomial": [e1,...], "coeff": c}, ...]}.
ArrangementFile parse_arrangement_json(const std::string& text);
ArrangementFile read_arrangement_file(const std::string& path);
std::string render_arrangement_json(const ArrangementFile& file);

/// Scalar JSON value: integer, "p/q", or coordinate array for non-rational elements.
std::string render_scalar_json(const Scalar& s);

/// Parses sums of products of numbers, variables, the field symbol, powers
/// (^ with a nonnegative integer) and parenthesized expressions, e.g.
/// "x^2 + 2*y^2 - 1/3*z^2" or "(x + r*y)^2".
Polynomial parse_polynomial(const std::string& text, const FieldDescriptor* field,
                            const std::vector<std::string>& variables);

}  // namespace starr

#endif
