#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gg/open_graph.hpp"

namespace gg {

// Terms of the wiring language. Widths are checked at parse/build time, so a
// held term always has consistent dom/cod.
enum class TermKind {
    Mult,   // 2 -> 1  merge two wires
    Unit,   // 0 -> 1  fresh wire
    Comult, // 1 -> 2  split a wire
    Counit, // 1 -> 0  discard a wire
    Cup,    // 2 -> 0  join two wire ends into an edge
    Vertex, // 0 -> 1  a game vertex feeding one wire
    Id,     // n -> n
    Swap,   // m+n -> n+m
    Seq,    // left-to-right composition
    Par     // side-by-side tensor
};

struct DiagramTerm;
using TermPtr = std::shared_ptr<const DiagramTerm>;

struct DiagramTerm {
    TermKind kind;
    std::size_t nat0 = 0, nat1 = 0; // Id(n) / Swap(m,n)
    TermPtr lhs, rhs;               // Seq / Par children
    std::size_t dom = 0, cod = 0;
    std::size_t pos = 0;            // byte offset in the source, for messages
};

TermPtr make_atom(TermKind kind, std::size_t nat0 = 0, std::size_t nat1 = 0);
TermPtr make_seq(TermPtr lhs, TermPtr rhs); // throws TypeError on width mismatch
TermPtr make_par(TermPtr lhs, TermPtr rhs);

// Grammar (";" binds looser than "#", both associate to the left):
//   term := atom | term ";" term | term "#" term | "(" term ")"
//   atom := mult | unit | comult | counit | cup | vertex | id(n) | swap(m,n)
TermPtr parse_term(std::string_view src);

std::string term_to_string(const DiagramTerm& t);

// Number of vertex occurrences, in left-to-right term order.
std::size_t leaf_count(const DiagramTerm& t);

OpenGraph eval(const DiagramTerm& t, std::size_t perm_bound = kDefaultPermBound);

struct TrackedEval {
    OpenGraph graph;
    // vertex_of_leaf[i] = normal-form vertex holding the i-th vertex leaf
    std::vector<std::size_t> vertex_of_leaf;
};

TrackedEval eval_tracked(const DiagramTerm& t, std::size_t perm_bound = kDefaultPermBound);

// Wiring equations the normal form must satisfy (merge/split/discard laws and
// the edge-forming cup laws). Both sides are closed DSL terms.
struct AxiomFixture {
    std::string_view name;
    std::string_view lhs;
    std::string_view rhs;
};

std::span<const AxiomFixture> axiom_fixtures();

} // namespace gg
