#include "mstsp/tour_io.hpp"

#include <fstream>
#include <sstream>

namespace mstsp {

namespace {

constexpr const char* kMagic = "mstsp-tour 1";

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw TourFormatError("tour file line " + std::to_string(line_no) + ": " + what);
}

// Next content line, skipping '#' comments. Returns false at end of input.
bool next_line(std::istream& in, std::string* line, std::size_t* line_no) {
  while (std::getline(in, *line)) {
    ++*line_no;
    if (!line->empty() && line->back() == '\r') line->pop_back();
    if (!line->empty() && line->front() == '#') continue;
    return true;
  }
  return false;
}

bool parse_two_ints(const std::string& line, int* a, int* b) {
  std::istringstream fields(line);
  std::string rest;
  return static_cast<bool>(fields >> *a >> *b) && !(fields >> rest);
}

}  // namespace

std::string write_tour(const Tour& tour, const std::string& comment) {
  std::string out = kMagic;
  out += '\n';
  out += std::to_string(tour.dims.m()) + " " + std::to_string(tour.dims.n()) + "\n";
  if (!comment.empty()) {
    out += "# " + comment + "\n";
  }
  for (const GridPoint& p : tour.order) {
    out += std::to_string(p.row) + " " + std::to_string(p.col) + "\n";
  }
  return out;
}

void write_tour_file(const Tour& tour, const std::string& path,
                     const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TourFormatError("cannot open " + path + " for writing");
  out << write_tour(tour, comment);
  if (!out) throw TourFormatError("failed writing " + path);
}

Tour read_tour(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) fail(1, "empty input");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kMagic) fail(line_no, "expected header \"" + std::string(kMagic) + "\"");

  if (!next_line(in, &line, &line_no)) fail(line_no + 1, "missing dimensions");
  int m = 0;
  int n = 0;
  if (!parse_two_ints(line, &m, &n) || m < 1 || n < 1) {
    fail(line_no, "bad dimensions \"" + line + "\"");
  }
  Tour tour{GridDims(m, n), {}};
  tour.order.reserve(static_cast<std::size_t>(tour.dims.node_count()));
  for (std::int64_t i = 0; i < tour.dims.node_count(); ++i) {
    if (!next_line(in, &line, &line_no)) {
      fail(line_no + 1, "expected " + std::to_string(tour.dims.node_count()) +
                            " nodes, got " + std::to_string(i));
    }
    GridPoint p;
    if (!parse_two_ints(line, &p.row, &p.col)) {
      fail(line_no, "bad node \"" + line + "\"");
    }
    tour.order.push_back(p);
  }
  if (next_line(in, &line, &line_no)) fail(line_no, "trailing content \"" + line + "\"");
  return tour;
}

Tour read_tour_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TourFormatError("cannot open " + path);
  return read_tour(in);
}

}  // namespace mstsp
