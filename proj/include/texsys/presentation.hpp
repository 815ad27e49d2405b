#pragma once

#include "texsys/abelian.hpp"
#include "texsys/coloured.hpp"
#include "texsys/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace texsys {

struct GenLetter {
    std::size_t generator; // index into the generator list
    int exponent;          // +1 or -1

    friend auto operator<=>(const GenLetter&, const GenLetter&) = default;
};

using Word = std::vector<GenLetter>;

Word free_reduce_word(Word w);
Word cyclic_reduce_word(Word w);
Word invert_word(const Word& w);

/// Finite presentation; relators are stored freely and cyclically reduced,
/// with empty relators dropped.
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

GroupPresentation make_presentation(std::vector<std::string> generators,
                                    std::vector<Word> relators);

std::string word_to_string(const GroupPresentation& p, const Word& w);

/// Free group on the edges outside a spanning tree; rank |E^1| - |E^0| + 1.
GroupPresentation pi1_graph(const DirectedGraph& g, const SpanningTree& tree);

/// Fundamental group of a coloured graph with squares: one generator per
/// edge, one relator per tree edge and one relator f.g.fp^-1.gp^-1 per
/// square. The tree is the breadth-first tree rooted at `base`.
GroupPresentation pi1(const ColouredGraph& cg, const SquareSet& squares,
                      const std::string& base);
GroupPresentation pi1(const ColouredGraph& cg, const SquareSet& squares,
                      const SpanningTree& tree);

struct TietzeOptions {
    std::size_t max_moves = 10000;
    std::size_t max_relator_length = 10000;
};

struct TietzeResult {
    GroupPresentation presentation;
    bool completed = true; // false when the move budget ran out first
    std::size_t moves = 0;
};

/// Iterates reduction, duplicate- and empty-relator deletion, and the
/// substitution move: a generator occurring exactly once in some relator is
/// rewritten in terms of the rest and removed.
TietzeResult tietze_simplify(const GroupPresentation& p, TietzeOptions options = {});

/// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianize(const GroupPresentation& p);

enum class GroupKind { trivial, free_group, finite_cyclic, unrecognized };

struct RecognizedGroup {
    GroupKind kind = GroupKind::unrecognized;
    std::size_t free_rank = 0;       // for free_group
    Int cyclic_order = 0;            // for finite_cyclic
    GroupPresentation simplified;    // post-simplification presentation
    AbelianInvariants abelianization;
    bool simplification_complete = true;
};

std::string to_string(const RecognizedGroup& g);

RecognizedGroup recognize(const GroupPresentation& p, TietzeOptions options = {});

} // namespace texsys
