#include "rigclique/graph_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "rigclique/errors.hpp"

namespace rigclique {

namespace {

std::string line_context(std::size_t line_no) { return " (line " + std::to_string(line_no) + ")"; }

// Reads the two-integer header shared by both formats.
std::pair<std::size_t, std::size_t> read_header(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw InputError(std::string(what) + ": missing header");
  std::istringstream ss(line);
  long long a = -1, b = -1;
  std::string extra;
  if (!(ss >> a >> b) || (ss >> extra) || a < 0 || b < 0)
    throw InputError(std::string(what) + ": malformed header '" + line + "'");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x = 0;
  while (ss >> x) out.push_back(x);
  if (!ss.eof()) throw InputError("non-integer token" + line_context(line_no));
  return out;
}

template <typename F>
void with_output(const std::filesystem::path& path, F&& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

template <typename F>
auto with_input(const std::filesystem::path& path, F&& f) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  try {
    return f(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& e : edge_list(g)) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  const auto [n, e] = read_header(in, "edge list");
  if (n > std::numeric_limits<Vertex>::max()) throw InputError("edge list: n too large");
  GraphBuilder b(n);
  std::string line;
  std::size_t line_no = 1;
  std::size_t seen = 0;
  while (seen < e) {
    if (!std::getline(in, line))
      throw InputError("edge list: expected " + std::to_string(e) + " edges, found " +
                       std::to_string(seen));
    ++line_no;
    const auto vals = parse_ints(line, line_no);
    if (vals.size() != 2) throw InputError("edge list: expected 'u v'" + line_context(line_no));
    const long long u = vals[0], v = vals[1];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw InputError("edge list: vertex out of range" + line_context(line_no));
    if (u == v) throw InputError("edge list: self-loop" + line_context(line_no));
    if (!b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw InputError("edge list: duplicate edge" + line_context(line_no));
    ++seen;
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw InputError("edge list: trailing data" + line_context(line_no));
  }
  return std::move(b).build();
}

void write_labels(std::ostream& out, const LabelRepresentation& rep) {
  out << rep.vertex_count() << ' ' << rep.label_count() << '\n';
  for (const auto& members : rep.label_sets()) {
    bool first = true;
    for (Vertex v : members) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

LabelRepresentation read_labels(std::istream& in) {
  const auto [n, m] = read_header(in, "labels");
  std::vector<VertexSet> sets;
  sets.reserve(m);
  std::string line;
  for (std::size_t l = 0; l < m; ++l) {
    if (!std::getline(in, line))
      throw InputError("labels: expected " + std::to_string(m) + " label lines, found " +
                       std::to_string(l));
    const auto vals = parse_ints(line, l + 2);
    std::vector<Vertex> members;
    members.reserve(vals.size());
    for (long long x : vals) {
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw InputError("labels: member out of range" + line_context(l + 2));
      members.push_back(static_cast<Vertex>(x));
    }
    sets.emplace_back(std::move(members));
  }
  return LabelRepresentation(n, std::move(sets));
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  with_output(path, [&](std::ostream& out) { write_edge_list(out, g); });
}

Graph load_edge_list(const std::filesystem::path& path) {
  return with_input(path, [](std::istream& in) { return read_edge_list(in); });
}

void save_labels(const std::filesystem::path& path, const LabelRepresentation& rep) {
  with_output(path, [&](std::ostream& out) { write_labels(out, rep); });
}

LabelRepresentation load_labels(const std::filesystem::path& path) {
  return with_input(path, [](std::istream& in) { return read_labels(in); });
}

}  // namespace rigclique
