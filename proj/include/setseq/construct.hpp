#pragma once

#include <filesystem>
#include <optional>
#include <variant>

#include "setseq/labeling.hpp"
#include "setseq/search.hpp"

namespace setseq {

struct PathSource {
  // Directory holding path-<vertices>.lab files; nothing is cached if unset.
  std::optional<std::filesystem::path> cache_dir;
  SearchOptions search;
};

// Certificate for the path on 2^m vertices with (m+1)-bit labels, vertices
// numbered along the path. Loads from the cache (re-verified), otherwise
// searches and stores. m = 2, 3 throw NoLabelingError.
Certificate path_labeling(int m, const PathSource& source = {});

struct EndVertex {};
struct Interior {
  int h = 0;  // 1-based spine position, 2 <= h <= 2^(k-1) - 1
};

struct CaterpillarSpec {
  int n = 0;  // 2^n vertices
  int k = 0;  // spine has 2^(k-1) vertices
  std::variant<EndVertex, Interior> attach;
};

// Throws PreconditionError unless (n > 4, k > 4, n >= k) or (n == k, end
// attachment, n in {2, 3}).
void check_spec(const CaterpillarSpec& spec);

// Spine vertices come first in path order, then pendants spine-major and
// suffix-minor. Labels are verified before returning.
Certificate build_caterpillar(const CaterpillarSpec& spec,
                              const PathSource& source = {});
// Uses the given certificate for the path on 2^(k-1) vertices.
Certificate build_caterpillar(const CaterpillarSpec& spec,
                              const Certificate& path);

// Caterpillar on 2^n vertices with all degrees 1 or 3.
Certificate build_c_k3(int n, const PathSource& source = {});
Certificate build_c_k3(int n, const Certificate& path);

}  // namespace setseq
