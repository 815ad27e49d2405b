#pragma once

#include "texsys/coloured.hpp"
#include "texsys/graph.hpp"
#include "texsys/textile.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace texsys::cli {

enum class DocumentKind { directed_graph, coloured_graph, textile };

struct ColouredDocument {
    ColouredGraph graph;
    bool deduce = false; // "squares": "deduce" in the input
    SquareSet squares;   // empty when deduce is set
};

/// A parsed, schema- and identifier-checked interchange file.
struct Document {
    DocumentKind kind = DocumentKind::directed_graph;
    std::optional<DirectedGraph> graph;
    std::optional<ColouredDocument> coloured;
    std::optional<TextileSystem> textile;
};

Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

/// Squares of a coloured document, deducing them when requested.
SquareSet resolve_squares(const ColouredDocument& doc);

/// Dispatches one command. Returns the process exit code:
/// 0 success, 1 validation failure, 2 resource or budget limit, 3 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace texsys::cli
