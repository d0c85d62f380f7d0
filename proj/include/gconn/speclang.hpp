#pragma once

#include "gconn/galois.hpp"

#include <stdexcept>
#include <string>

namespace gconn {

// Parse failure with 1-based document position.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

// Cyclotomic literal: sum of terms `q`, `q*zM^k`, `zM^k`, `zM` with q a
// rational literal, e.g. "1/2*z8^3 - 2". Throws ParseError (line 1, col =
// offset) on malformed input.
Cyclotomic parse_cyclotomic(const std::string& text);

// A parsed connection document: sections [connection] and optional
// [options] with key = value lines, '#' comments.
struct SpecDocument {
  ConnectionSpec spec;
  std::string format = "human"; // human | machine
  GaloisOptions options;
};

SpecDocument parse_spec_document(const std::string& text);

} // namespace gconn
