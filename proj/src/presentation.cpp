#include "texsys/presentation.hpp"

#include "texsys/matrix.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

namespace texsys {

Word free_reduce_word(Word w)
{
    Word out;
    out.reserve(w.size());
    for (const GenLetter& l : w) {
        if (!out.empty() && out.back().generator == l.generator &&
            out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce_word(Word w)
{
    w = free_reduce_word(std::move(w));
    while (w.size() >= 2 && w.front().generator == w.back().generator &&
           w.front().exponent == -w.back().exponent) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

Word invert_word(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(GenLetter{it->generator, -it->exponent});
    return out;
}

GroupPresentation make_presentation(std::vector<std::string> generators,
                                    std::vector<Word> relators)
{
    for (const Word& w : relators)
        for (const GenLetter& l : w)
            if (l.generator >= generators.size())
                throw error(errc::unknown_basis_element, "relator letter outside generator list");

    std::vector<Word> cleaned;
    for (Word& w : relators) {
        Word r = cyclic_reduce_word(std::move(w));
        if (!r.empty()) cleaned.push_back(std::move(r));
    }
    return GroupPresentation{std::move(generators), std::move(cleaned)};
}

std::string word_to_string(const GroupPresentation& p, const Word& w)
{
    if (w.empty()) return "1";
    std::string out;
    for (const GenLetter& l : w) {
        if (!out.empty()) out += ' ';
        out += p.generators[l.generator];
        if (l.exponent == -1) out += "^-1";
    }
    return out;
}

GroupPresentation pi1_graph(const DirectedGraph& g, const SpanningTree& tree)
{
    std::vector<std::string> generators;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!tree.contains_edge(e)) generators.push_back(g.edges()[e].name);
    return make_presentation(std::move(generators), {});
}

GroupPresentation pi1(const ColouredGraph& cg, const SquareSet& squares,
                      const std::string& base)
{
    return pi1(cg, squares, spanning_tree(cg.graph(), base));
}

GroupPresentation pi1(const ColouredGraph& cg, const SquareSet& squares,
                      const SpanningTree& tree)
{
    const DirectedGraph& g = cg.graph();
    std::vector<std::string> generators;
    std::map<std::string, std::size_t> index;
    for (const Edge& e : g.edges()) {
        index[e.name] = generators.size();
        generators.push_back(e.name);
    }

    std::vector<Word> relators;
    for (std::size_t e : tree.tree_edges())
        relators.push_back(Word{GenLetter{index.at(g.edges()[e].name), +1}});
    for (const Square& s : squares.squares()) {
        relators.push_back(Word{GenLetter{index.at(s.f), +1}, GenLetter{index.at(s.g), +1},
                                GenLetter{index.at(s.fp), -1}, GenLetter{index.at(s.gp), -1}});
    }
    return make_presentation(std::move(generators), std::move(relators));
}

namespace {

// occurrences of each generator in a word, ignoring exponents
std::map<std::size_t, std::size_t> occurrences(const Word& w)
{
    std::map<std::size_t, std::size_t> n;
    for (const GenLetter& l : w) ++n[l.generator];
    return n;
}

Word rotate_to_front(const Word& w, std::size_t pos)
{
    Word out(w.begin() + pos, w.end());
    out.insert(out.end(), w.begin(), w.begin() + pos);
    return out;
}

// substitute `replacement` for generator x in w (x^-1 gets the inverse)
Word substitute(const Word& w, std::size_t x, const Word& replacement)
{
    Word inv = invert_word(replacement);
    Word out;
    for (const GenLetter& l : w) {
        if (l.generator != x) {
            out.push_back(l);
        } else {
            const Word& sub = l.exponent > 0 ? replacement : inv;
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    return free_reduce_word(std::move(out));
}

struct Work {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

void normalise(Work& w)
{
    for (Word& r : w.relators) r = cyclic_reduce_word(std::move(r));
    w.relators.erase(std::remove_if(w.relators.begin(), w.relators.end(),
                                    [](const Word& r) { return r.empty(); }),
                     w.relators.end());
    // drop duplicate relators, keeping first occurrences
    std::set<Word> seen;
    std::vector<Word> unique;
    for (Word& r : w.relators)
        if (seen.insert(r).second) unique.push_back(std::move(r));
    w.relators = std::move(unique);
}

// remove generator x entirely, shifting indices above it
void drop_generator(Work& w, std::size_t x)
{
    w.generators.erase(w.generators.begin() + x);
    for (Word& r : w.relators)
        for (GenLetter& l : r)
            if (l.generator > x) --l.generator;
}

} // namespace

namespace {

std::size_t total_length(const Work& w)
{
    std::size_t n = 0;
    for (const Word& r : w.relators) n += r.size();
    return n;
}

// smaller is simpler: fewest generators, then fewest relators, then shortest
std::array<std::size_t, 3> rank_of(const Work& w)
{
    return {w.generators.size(), w.relators.size(), total_length(w)};
}

std::string state_key(const Work& w)
{
    std::string key = std::to_string(w.generators.size());
    for (const Word& r : w.relators) {
        key += '|';
        for (const GenLetter& l : r) {
            key += std::to_string(l.generator);
            key += l.exponent > 0 ? '+' : '-';
        }
    }
    return key;
}

// one elimination: generator at `pos` of relator `rel` occurs exactly once
// there; rewrite it away everywhere. nullopt when a relator would outgrow
// the length cap.
std::optional<Work> eliminate(const Work& w, std::size_t rel, std::size_t pos,
                              std::size_t max_relator_length)
{
    Word rotated = rotate_to_front(w.relators[rel], pos);
    std::size_t x = rotated.front().generator;
    // x u = 1 gives x = u^-1; x^-1 u = 1 gives x = u
    Word rest(rotated.begin() + 1, rotated.end());
    Word replacement = rotated.front().exponent > 0 ? invert_word(rest) : std::move(rest);

    Work next;
    next.generators = w.generators;
    for (std::size_t r = 0; r < w.relators.size(); ++r) {
        if (r == rel) continue;
        Word substituted = substitute(w.relators[r], x, replacement);
        if (substituted.size() > max_relator_length)
            return std::nullopt;
        next.relators.push_back(std::move(substituted));
    }
    drop_generator(next, x);
    normalise(next);
    return next;
}

// The single-elimination move can dead-end: on the cycle family a greedy
// order reaches a state where every generator occurs at least twice in every
// relator while a different order empties the presentation. The state space
// is small (each move removes a generator), so search it exhaustively under
// the node budget and keep the simplest state seen.
bool has_elimination_candidate(const Work& w)
{
    for (const Word& r : w.relators) {
        auto counts = occurrences(r);
        for (const auto& [gen, count] : counts)
            if (count == 1) return true;
    }
    return false;
}

struct TietzeSearch {
    TietzeOptions options;
    std::size_t nodes = 0;
    bool exhausted = true; // search visited every reachable state
    std::set<std::string> visited;
    Work best;

    bool done() const
    {
        return best.generators.empty() && best.relators.empty(); // nothing beats trivial
    }

    void explore(const Work& w)
    {
        if (rank_of(w) < rank_of(best)) best = w;
        if (done()) return;
        if (++nodes > options.max_moves) {
            exhausted = false;
            return;
        }

        std::vector<Work> children;
        for (std::size_t r = 0; r < w.relators.size(); ++r) {
            auto counts = occurrences(w.relators[r]);
            for (std::size_t pos = 0; pos < w.relators[r].size(); ++pos) {
                if (counts[w.relators[r][pos].generator] != 1) continue;
                auto child = eliminate(w, r, pos, options.max_relator_length);
                if (!child)
                    exhausted = false; // a move existed but broke the length cap
                else if (visited.insert(state_key(*child)).second)
                    children.push_back(std::move(*child));
            }
        }
        // cheapest child first makes the first dive a plain greedy descent
        std::stable_sort(children.begin(), children.end(),
                         [](const Work& a, const Work& b) { return rank_of(a) < rank_of(b); });
        for (const Work& child : children) {
            if (done() || nodes > options.max_moves) return;
            explore(child);
        }
    }
};

} // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, TietzeOptions options)
{
    Work start{p.generators, p.relators};
    normalise(start);

    TietzeSearch search;
    search.options = options;
    search.best = start;
    search.visited.insert(state_key(start));
    search.explore(start);

    // exhausting the reachable states always ends at a fixpoint, so this is
    // false only when the node budget or the length cap got in the way
    bool fixpoint = !has_elimination_candidate(search.best);

    TietzeResult result;
    result.presentation =
        make_presentation(std::move(search.best.generators), std::move(search.best.relators));
    result.completed = fixpoint;
    result.moves = search.nodes;
    return result;
}

AbelianInvariants abelianize(const GroupPresentation& p)
{
    IntMatrix m(p.generators.size(), p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const GenLetter& l : p.relators[r])
            m.at(l.generator, r) += l.exponent;
    return cokernel_invariants(m);
}

std::string to_string(const RecognizedGroup& g)
{
    switch (g.kind) {
        case GroupKind::trivial: return "trivial";
        case GroupKind::free_group: return "free(" + std::to_string(g.free_rank) + ")";
        case GroupKind::finite_cyclic: return "Z/" + g.cyclic_order.str();
        case GroupKind::unrecognized: return "unrecognized";
    }
    return "unrecognized";
}

RecognizedGroup recognize(const GroupPresentation& p, TietzeOptions options)
{
    TietzeResult simplified = tietze_simplify(p, options);
    RecognizedGroup g;
    g.simplified = simplified.presentation;
    g.simplification_complete = simplified.completed;
    g.abelianization = abelianize(simplified.presentation);

    const GroupPresentation& s = simplified.presentation;
    if (s.generators.empty()) {
        g.kind = GroupKind::trivial;
    } else if (s.relators.empty()) {
        g.kind = GroupKind::free_group;
        g.free_rank = s.generators.size();
    } else if (s.generators.size() == 1) {
        Int d = 0;
        for (const Word& r : s.relators) {
            Int sum = 0;
            for (const GenLetter& l : r) sum += l.exponent;
            d = gcd(d, sum);
        }
        if (d == 0) {
            // cannot happen after normalisation (a nonempty one-generator
            // relator has a nonzero exponent sum once freely reduced), but
            // keep the classification total
            g.kind = GroupKind::free_group;
            g.free_rank = 1;
        } else if (d == 1) {
            g.kind = GroupKind::trivial;
        } else {
            g.kind = GroupKind::finite_cyclic;
            g.cyclic_order = d;
        }
    } else {
        g.kind = GroupKind::unrecognized;
    }
    return g;
}

} // namespace texsys
