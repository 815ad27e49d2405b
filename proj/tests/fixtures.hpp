#pragma once

// Corpus-backed fixtures: the worked examples live in corpus/*.json and are
// loaded through the interchange parser.

#include "texsys/cli.hpp"
#include "texsys/coloured.hpp"
#include "texsys/textile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace texsys::testing {

inline std::string corpus_text(const std::string& name)
{
    std::string path = std::string(TEXSYS_CORPUS_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing corpus file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

inline cli::Document corpus_document(const std::string& name)
{
    return cli::parse_document(corpus_text(name));
}

inline std::pair<ColouredGraph, SquareSet> corpus_coloured(const std::string& name)
{
    cli::Document doc = corpus_document(name);
    return {doc.coloured->graph, cli::resolve_squares(*doc.coloured)};
}

inline TextileSystem corpus_textile(const std::string& name)
{
    return *corpus_document(name).textile;
}

} // namespace texsys::testing
