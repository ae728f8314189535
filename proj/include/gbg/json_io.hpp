#ifndef GBG_JSON_IO_HPP
#define GBG_JSON_IO_HPP

#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

// Graph ingestion format: {"vertices": [names], "edges": [[u, v, name?]],
// "rotation": {vertex: [edge names clockwise]}, "root": name?,
// "tree": {"deleted_edges": [names]}?}. Rotation and root are optional;
// missing rotations fall back to insertion order (flagged non-planar data).
struct GraphBundle {
    Graph g;
    std::vector<std::string> deleted_hints;
};

GraphBundle graph_from_json(const std::string& text);
GraphBundle graph_from_file(const std::string& path);
std::string graph_to_json(const Graph& g, const std::vector<std::string>& deleted_hints = {});

struct QuotientSpec {
    std::vector<std::string> kill;
    std::vector<std::pair<std::string, std::string>> identify;
};
QuotientSpec quotient_spec_from_json(const std::string& text);

// Bundled fixtures, keyed by name: s3, s4, s5, c5, theta3, vartheta3,
// theta4 (appendix labeling), k4, w4, prism.
const std::vector<std::string>& fixture_names();
std::string fixture_json(const std::string& name);
GraphBundle fixture(const std::string& name);

} // namespace gbg

#endif
