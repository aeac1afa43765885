#include <doctest.h>

#include <filesystem>

#include "setseq/error.hpp"
#include "setseq/golden.hpp"
#include "setseq/io.hpp"

using namespace setseq;
namespace fs = std::filesystem;

TEST_CASE("golden files match the embedded certificates") {
  for (const auto& [name, cert] : golden::all()) {
    CAPTURE(name);
    std::string text = read_file(fs::path(SETSEQ_DATA_DIR) / "golden" / (name + ".lab"));
    Certificate c = parse_certificate(text);
    Certificate want = sorted_edges(cert);
    CHECK(c.graph == want.graph);
    CHECK(c.labeling.vertex_labels == want.labeling.vertex_labels);
    CHECK(c.labeling.edge_labels == want.labeling.edge_labels);
    CHECK(verify(c).ok());
    CHECK(format_certificate(c) == text);
  }
}

TEST_CASE("certificate text round trips byte for byte") {
  Certificate c = golden::tree8r();
  std::string text = format_certificate(c);
  CHECK(text.rfind("# odd tree on 8 vertices", 0) == 0);
  Certificate back = parse_certificate(text);
  CHECK(back.header == c.header);
  CHECK(format_certificate(back) == text);
  CHECK(text.find("e 0 1 0010\n") != std::string::npos);
}

TEST_CASE("graph text round trips") {
  Graph g(5, {{0, 4}, {1, 2}, {2, 3}});
  std::string text = format_graph(g);
  CHECK(text == "5 3\n0 4\n1 2\n2 3\n");
  CHECK(parse_graph(text) == g);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](auto fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of([] { parse_certificate("dim 2\nv 0 01\nv 1 1x\ne 0 1 11\n"); }) == 3);
  CHECK(line_of([] { parse_certificate("dim 2\nv 0 01\nv 2 10\n"); }) == 3);
  CHECK(line_of([] { parse_certificate("# c\nv 0 01\n"); }) == 2);
  CHECK(line_of([] {
          parse_certificate("dim 3\nv 0 001\nv 1 010\nv 2 011\ne 1 2 001\ne 0 1 011\n");
        }) == 6);
  CHECK(line_of([] { parse_certificate("dim 2\nv 0 011\n"); }) == 2);
  CHECK(line_of([] { parse_graph("3 2\n0 1\n"); }) == 2);
  CHECK(line_of([] { parse_graph("3 2\n0 1\n2 1\n"); }) == 3);
  CHECK(line_of([] { parse_graph("3 2\n0 1\n0 1\n"); }) == 3);
  CHECK(line_of([] { parse_graph("3\n"); }) == 1);
}

TEST_CASE("content hash is FNV-1a 64") {
  CHECK(content_hash("") == "fnv1a64:cbf29ce484222325");
  CHECK(content_hash("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("files are written and read back") {
  fs::path dir = fs::temp_directory_path() / "setseq_io_test";
  fs::remove_all(dir);
  write_file(dir / "sub" / "x.txt", "hello\n");
  CHECK(read_file(dir / "sub" / "x.txt") == "hello\n");
  CHECK_THROWS_AS(read_file(dir / "missing"), Error);
  fs::remove_all(dir);
}
