#include "grksp/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace grksp {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped, split on whitespace.
  bool next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (const auto hash = line_.find('#'); hash != std::string::npos) line_.erase(hash);
      fields.clear();
      std::size_t pos = 0;
      while (pos < line_.size()) {
        const std::size_t start = line_.find_first_not_of(" \t\r", pos);
        if (start == std::string::npos) break;
        const std::size_t end = std::min(line_.find_first_of(" \t\r", start), line_.size());
        fields.emplace_back(line_.data() + start, end - start);
        pos = end;
      }
      if (!fields.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("edge list line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

template <typename T>
T parse_field(const LineReader& reader, std::string_view text, const char* name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    reader.fail(std::string("cannot parse ") + name + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string format_shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_graph(const Graph& g, std::ostream& out) {
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << ' ' << (g.directed() ? 1 : 0) << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << format_shortest(e.weight) << '\n';
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> fields;
  if (!reader.next(fields)) throw std::runtime_error("edge list: missing header");
  if (fields.size() != 3) reader.fail("header must be 'n m directed'");
  const auto n = parse_field<std::size_t>(reader, fields[0], "vertex count");
  const auto m = parse_field<std::size_t>(reader, fields[1], "edge count");
  const auto directed = parse_field<int>(reader, fields[2], "directed flag");
  if (directed != 0 && directed != 1) reader.fail("directed flag must be 0 or 1");

  std::vector<Edge> edges;
  edges.reserve(m);
  while (reader.next(fields)) {
    if (fields.size() != 3) reader.fail("edge line must be 'u v w'");
    if (edges.size() == m) reader.fail("more edge lines than the header declares");
    edges.push_back({parse_field<VertexId>(reader, fields[0], "vertex id"),
                     parse_field<VertexId>(reader, fields[1], "vertex id"),
                     parse_field<double>(reader, fields[2], "weight")});
  }
  if (edges.size() != m)
    throw std::runtime_error("edge list: header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  return Graph::build(n, directed == 1, edges);
}

void save_graph(const Graph& g, const std::filesystem::path& destination) {
  std::ofstream out(destination);
  if (!out) throw std::runtime_error("cannot open " + destination.string() + " for writing");
  write_graph(g, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + destination.string());
}

Graph load_graph(const std::filesystem::path& source) {
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open " + source.string());
  return read_graph(in);
}

}  // namespace grksp
