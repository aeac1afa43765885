#include "setseq/construct.hpp"

#include <stdexcept>

#include "setseq/error.hpp"
#include "setseq/golden.hpp"
#include "setseq/io.hpp"

namespace setseq {

namespace {

std::string path_name(int vertices) {
  return "path-" + std::to_string(vertices) + ".lab";
}

void check_path_certificate(const Certificate& c, int vertices) {
  if (c.graph.num_vertices() != vertices || !c.graph.is_tree() ||
      c.graph.num_edges() != vertices - 1)
    throw CacheError("certificate is not a path on " +
                     std::to_string(vertices) + " vertices");
  for (int v = 0; v < vertices; ++v)
    if (c.graph.degree(v) > 2)
      throw CacheError("certificate is not a path");
  auto r = verify(c);
  if (!r.ok()) throw CacheError("path certificate fails: " + r.detail);
}

struct Spine {
  std::vector<GF2Vector> w;  // w[1..N]
  std::vector<GF2Vector> f;  // f[1..N-1], f[i] joins w[i] and w[i+1]
};

Spine read_spine(const Certificate& path) {
  const Graph& g = path.graph;
  int n = g.num_vertices();
  int start = 0;
  while (start < n && g.degree(start) > 1) ++start;
  Spine s;
  s.w.resize(n + 1);
  s.f.resize(n);
  int prev = -1, cur = start;
  for (int i = 1; i <= n; ++i) {
    s.w[i] = path.labeling.vertex_labels[cur];
    int next = -1;
    for (int x : g.neighbors(cur))
      if (x != prev) next = x;
    if (i < n) {
      s.f[i] = path.labeling.edge_labels[*g.find_edge(cur, next)];
      prev = cur;
      cur = next;
    }
  }
  return s;
}

Certificate assemble(const CaterpillarSpec& spec, const Certificate& path) {
  int n = spec.n, k = spec.k;
  int spine_len = 1 << (k - 1);
  check_path_certificate(path, spine_len);
  if (path.labeling.dim != k)
    throw PreconditionError("path certificate has the wrong dimension");
  Spine sp = read_spine(path);
  int s = n - k + 1;
  int suffixes = (1 << s) - 1;
  GF2Vector zero_s = GF2Vector::zero(s);
  GF2Vector zero_k = GF2Vector::zero(k);

  std::vector<GF2Vector> labels;
  std::vector<GF2Vector> expected_edges;
  std::vector<Edge> edges;
  for (int l = 1; l <= spine_len; ++l) labels.push_back(extend(sp.w[l], zero_s));
  for (int l = 1; l < spine_len; ++l) {
    edges.push_back({l - 1, l});
    expected_edges.push_back(extend(sp.f[l], zero_s));
  }
  auto family = [&](int l, const GF2Vector& vertex, const GF2Vector& edge) {
    for (int z = 1; z <= suffixes; ++z) {
      GF2Vector suf(s, z);
      edges.push_back({l - 1, static_cast<int>(labels.size())});
      labels.push_back(extend(vertex, suf));
      expected_edges.push_back(extend(edge, suf));
    }
  };
  if (std::holds_alternative<EndVertex>(spec.attach)) {
    for (int l = 2; l <= spine_len; ++l) {
      family(l, sp.w[l - 1], sp.f[l - 1]);
      if (l == spine_len) family(l, sp.w[l], zero_k);
    }
  } else {
    int h = std::get<Interior>(spec.attach).h;
    for (int l = 2; l < spine_len; ++l) {
      if (l < h) {
        family(l, sp.w[l - 1], sp.f[l - 1]);
      } else if (l > h) {
        family(l, sp.w[l + 1], sp.f[l]);
      } else {
        family(l, sp.w[l - 1], sp.f[l - 1]);
        family(l, sp.w[l + 1], sp.f[l]);
        family(l, sp.w[l], zero_k);
      }
    }
  }

  Certificate out;
  out.graph = Graph(static_cast<int>(labels.size()), std::move(edges));
  out.labeling = derive_edge_labels(out.graph, labels);
  if (out.labeling.edge_labels != expected_edges)
    throw std::logic_error("caterpillar edge labels differ from the formula");
  auto r = verify(out);
  if (!r.ok()) throw std::logic_error("caterpillar labeling fails: " + r.detail);
  if (!out.graph.all_degrees_odd())
    throw std::logic_error("caterpillar has an even-degree vertex");
  std::string where =
      std::holds_alternative<EndVertex>(spec.attach)
          ? std::string("end")
          : "interior " + std::to_string(std::get<Interior>(spec.attach).h);
  out.header = {"caterpillar n=" + std::to_string(n) +
                    " k=" + std::to_string(k) + " attach " + where,
                "path certificate " + content_hash(format_certificate(path))};
  return out;
}

bool is_golden_shape(const CaterpillarSpec& spec) {
  return spec.n == spec.k && std::holds_alternative<EndVertex>(spec.attach) &&
         (spec.n == 2 || spec.n == 3);
}

Certificate golden_c_k3(int n) {
  Certificate c = n == 2 ? golden::star4() : golden::caterpillar8();
  c.header = {"caterpillar n=" + std::to_string(n) + " k=" +
              std::to_string(n) + " attach end (golden)"};
  return c;
}

}  // namespace

Certificate path_labeling(int m, const PathSource& source) {
  if (m < 1) throw PreconditionError("path exponent must be positive");
  if (m == 2 || m == 3)
    throw NoLabelingError("the path on " + std::to_string(1 << m) +
                          " vertices has no labeling");
  if (m > 20) throw ResourceLimitError("path too long");
  int vertices = 1 << m;
  if (m == 1) {
    Graph g = path_graph(2);
    return {g,
            derive_edge_labels(g, {GF2Vector::parse("01"),
                                   GF2Vector::parse("10")}),
            {"path on 2 vertices"}};
  }
  std::filesystem::path file;
  if (source.cache_dir) {
    file = *source.cache_dir / path_name(vertices);
    if (std::filesystem::exists(file)) {
      Certificate c;
      try {
        c = parse_certificate(read_file(file));
      } catch (const ParseError& e) {
        throw CacheError(file.string() + ": " + e.what());
      } catch (const PreconditionError& e) {
        throw CacheError(file.string() + ": " + e.what());
      }
      check_path_certificate(c, vertices);
      return c;
    }
  }
  Graph g = path_graph(vertices);
  SearchReport r = find_labeling(g, source.search);
  if (r.outcome == SearchOutcome::kExhaustedNone)
    throw NoLabelingError("no labeling of the path on " +
                          std::to_string(vertices) + " vertices");
  if (r.outcome == SearchOutcome::kAborted)
    throw ResourceLimitError("path search aborted: " + r.reason);
  Certificate c{g, *r.labeling,
                {"path on " + std::to_string(vertices) + " vertices"}};
  if (source.cache_dir) write_file(file, format_certificate(c));
  return c;
}

void check_spec(const CaterpillarSpec& spec) {
  bool general = spec.n > 4 && spec.k > 4 && spec.n >= spec.k;
  if (!general && !is_golden_shape(spec))
    throw PreconditionError("caterpillar needs n > 4, k > 4, n >= k, or the "
                            "end-attached shape with n = k in {2, 3}");
  if (spec.n > 24) throw ResourceLimitError("caterpillar too large");
  if (auto* in = std::get_if<Interior>(&spec.attach)) {
    int spine = 1 << (spec.k - 1);
    if (in->h < 2 || in->h > spine - 1)
      throw PreconditionError("interior position must lie in 2.." +
                              std::to_string(spine - 1));
  }
}

Certificate build_caterpillar(const CaterpillarSpec& spec,
                              const PathSource& source) {
  check_spec(spec);
  if (is_golden_shape(spec)) return golden_c_k3(spec.n);
  return assemble(spec, path_labeling(spec.k - 1, source));
}

Certificate build_caterpillar(const CaterpillarSpec& spec,
                              const Certificate& path) {
  check_spec(spec);
  if (is_golden_shape(spec)) return golden_c_k3(spec.n);
  return assemble(spec, path);
}

Certificate build_c_k3(int n, const PathSource& source) {
  if (n <= 1 || n == 4)
    throw PreconditionError("degree-3 caterpillar needs n in {2, 3} or n > 4");
  return build_caterpillar({n, n, EndVertex{}}, source);
}

Certificate build_c_k3(int n, const Certificate& path) {
  if (n <= 1 || n == 4)
    throw PreconditionError("degree-3 caterpillar needs n in {2, 3} or n > 4");
  return build_caterpillar({n, n, EndVertex{}}, path);
}

}  // namespace setseq
