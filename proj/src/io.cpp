#include "setseq/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "setseq/error.hpp"

namespace setseq {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> fields;
};

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-blank lines, with comments kept verbatim in `comments` when they come
// before the first data line.
std::vector<Line> split_lines(std::string_view text,
                              std::vector<std::string>* comments) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (!raw.empty() && raw[0] == '#') {
      if (comments && out.empty())
        comments->emplace_back(raw.substr(1).starts_with(" ") ? raw.substr(2)
                                                              : raw.substr(1));
      continue;
    }
    auto fields = split_fields(raw);
    if (!fields.empty()) out.push_back({number, std::move(fields)});
    if (end == text.size()) break;
  }
  return out;
}

long long to_int(std::string_view s, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

GF2Vector to_vector(std::string_view s, int dim, int line) {
  if (static_cast<int>(s.size()) != dim)
    throw ParseError(line, "label '" + std::string(s) + "' is not " +
                               std::to_string(dim) + " bits");
  try {
    return GF2Vector::parse(s);
  } catch (const PreconditionError& e) {
    throw ParseError(line, e.what());
  }
}

void expect_fields(const Line& l, size_t n) {
  if (l.fields.size() != n)
    throw ParseError(l.number, "expected " + std::to_string(n) +
                                   " fields, got " +
                                   std::to_string(l.fields.size()));
}

}  // namespace

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text) {
  auto lines = split_lines(text, nullptr);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  expect_fields(lines[0], 2);
  long long n = to_int(lines[0].fields[0], lines[0].number);
  long long m = to_int(lines[0].fields[1], lines[0].number);
  if (n < 0 || m < 0) throw ParseError(lines[0].number, "negative count");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_fields(l, 2);
    long long u = to_int(l.fields[0], l.number);
    long long v = to_int(l.fields[1], l.number);
    if (!(0 <= u && u < v && v < n))
      throw ParseError(l.number, "edge must satisfy 0 <= u < v < n");
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    auto it = std::lower_bound(seen.begin(), seen.end(), e);
    if (it != seen.end() && *it == e)
      throw ParseError(l.number, "duplicate edge");
    seen.insert(it, e);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Certificate sorted_edges(const Certificate& c) {
  const Graph& g = c.graph;
  std::vector<int> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.edge(a) < g.edge(b); });
  std::vector<Edge> edges;
  Certificate out;
  out.header = c.header;
  out.labeling.dim = c.labeling.dim;
  out.labeling.vertex_labels = c.labeling.vertex_labels;
  for (int i : order) {
    edges.push_back(g.edge(i));
    out.labeling.edge_labels.push_back(c.labeling.edge_labels.at(i));
  }
  out.graph = Graph(g.num_vertices(), std::move(edges));
  return out;
}

std::string format_certificate(const Certificate& c) {
  Certificate s = sorted_edges(c);
  std::ostringstream os;
  for (const auto& h : s.header) os << "# " << h << '\n';
  os << "dim " << s.labeling.dim << '\n';
  for (int v = 0; v < s.graph.num_vertices(); ++v)
    os << "v " << v << ' ' << s.labeling.vertex_labels.at(v).str() << '\n';
  for (int i = 0; i < s.graph.num_edges(); ++i)
    os << "e " << s.graph.edge(i).u << ' ' << s.graph.edge(i).v << ' '
       << s.labeling.edge_labels.at(i).str() << '\n';
  return os.str();
}

Certificate parse_certificate(std::string_view text) {
  Certificate c;
  auto lines = split_lines(text, &c.header);
  if (lines.empty()) throw ParseError(1, "empty certificate");
  const Line& head = lines[0];
  if (head.fields.size() != 2 || head.fields[0] != "dim")
    throw ParseError(head.number, "expected 'dim <d>'");
  long long d = to_int(head.fields[1], head.number);
  if (d < 1 || d > kMaxDim) throw ParseError(head.number, "bad dimension");
  int dim = static_cast<int>(d);
  c.labeling.dim = dim;
  size_t i = 1;
  for (; i < lines.size() && lines[i].fields[0] == "v"; ++i) {
    const Line& l = lines[i];
    expect_fields(l, 3);
    long long idx = to_int(l.fields[1], l.number);
    if (idx != static_cast<long long>(c.labeling.vertex_labels.size()))
      throw ParseError(l.number, "vertex lines must be numbered 0, 1, 2, ...");
    c.labeling.vertex_labels.push_back(to_vector(l.fields[2], dim, l.number));
  }
  int n = static_cast<int>(c.labeling.vertex_labels.size());
  std::vector<Edge> edges;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields[0] != "e")
      throw ParseError(l.number, "unexpected record '" +
                                     std::string(l.fields[0]) + "'");
    expect_fields(l, 4);
    long long u = to_int(l.fields[1], l.number);
    long long v = to_int(l.fields[2], l.number);
    if (!(0 <= u && u < v && v < n))
      throw ParseError(l.number, "edge must satisfy 0 <= u < v < n");
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!edges.empty() && !(edges.back() < e))
      throw ParseError(l.number, "edge lines must be sorted and distinct");
    edges.push_back(e);
    c.labeling.edge_labels.push_back(to_vector(l.fields[3], dim, l.number));
  }
  c.graph = Graph(n, std::move(edges));
  return c;
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, std::string_view contents) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace setseq
