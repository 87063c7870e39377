#pragma once

#include <stdexcept>
#include <string>

#include "boxplan/box_model.hpp"

namespace boxplan {

// Parse failure with the 1-based line number of the offending directive
// (0 when the document as a whole is invalid, e.g. a missing directive).
class MapParseError : public std::runtime_error {
 public:
  MapParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented map document: one directive per line, '#' comments.
// Directives: workspace, box, mass, inertia, goal, epsilon, obstacle,
// constants, bounds. workspace/box/goal are required; everything else
// defaults. Throws MapParseError.
WorldMap parse_map(const std::string& text);

// Reads and parses a map file. Throws MapParseError on bad content or
// std::runtime_error when the file cannot be read.
WorldMap load_map(const std::string& path);

// Renders a WorldMap as a parseable map document. Doubles are printed with
// enough digits that parse_map(write_map(w)) reproduces every field.
std::string write_map(const WorldMap& world);

}  // namespace boxplan
