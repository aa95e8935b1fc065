#pragma once

#include <iosfwd>
#include <string>

#include "mstsp/grid.hpp"

namespace mstsp {

// Tour text: line 1 "mstsp-tour 1", line 2 "<m> <n>", then m*n lines
// "<row> <col>" in visiting order. LF endings, ASCII decimal. Lines
// starting with '#' after the header are comments and are ignored by the
// reader.

class TourFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string write_tour(const Tour& tour, const std::string& comment = "");
void write_tour_file(const Tour& tour, const std::string& path,
                     const std::string& comment = "");

Tour read_tour(std::istream& in);
Tour read_tour_file(const std::string& path);

}  // namespace mstsp
