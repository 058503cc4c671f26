#include "gg/diagram.hpp"

#include <array>
#include <cctype>

namespace gg {

namespace {

void atom_widths(TermKind kind, std::size_t nat0, std::size_t nat1,
                 std::size_t& dom, std::size_t& cod) {
    switch (kind) {
        case TermKind::Mult: dom = 2; cod = 1; return;
        case TermKind::Unit: dom = 0; cod = 1; return;
        case TermKind::Comult: dom = 1; cod = 2; return;
        case TermKind::Counit: dom = 1; cod = 0; return;
        case TermKind::Cup: dom = 2; cod = 0; return;
        case TermKind::Vertex: dom = 0; cod = 1; return;
        case TermKind::Id: dom = nat0; cod = nat0; return;
        case TermKind::Swap: dom = nat0 + nat1; cod = nat0 + nat1; return;
        default: throw Error("internal: not an atom");
    }
}

} // namespace

TermPtr make_atom(TermKind kind, std::size_t nat0, std::size_t nat1) {
    auto t = std::make_shared<DiagramTerm>();
    t->kind = kind;
    t->nat0 = nat0;
    t->nat1 = nat1;
    atom_widths(kind, nat0, nat1, t->dom, t->cod);
    return t;
}

TermPtr make_seq(TermPtr lhs, TermPtr rhs) {
    if (lhs->cod != rhs->dom)
        throw TypeError("cannot chain: left side ends in " + std::to_string(lhs->cod) +
                        " wires, right side expects " + std::to_string(rhs->dom));
    auto t = std::make_shared<DiagramTerm>();
    t->kind = TermKind::Seq;
    t->dom = lhs->dom;
    t->cod = rhs->cod;
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    return t;
}

TermPtr make_par(TermPtr lhs, TermPtr rhs) {
    auto t = std::make_shared<DiagramTerm>();
    t->kind = TermKind::Par;
    t->dom = lhs->dom + rhs->dom;
    t->cod = lhs->cod + rhs->cod;
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    return t;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    TermPtr run() {
        TermPtr t = seq();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        return t;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TermPtr seq() {
        TermPtr t = par();
        while (eat(';')) t = make_seq(std::move(t), par());
        return t;
    }

    TermPtr par() {
        TermPtr t = atom();
        while (eat('#')) t = make_par(std::move(t), atom());
        return t;
    }

    std::size_t number() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected a number", pos_);
        std::size_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(src_[pos_] - '0');
            if (v > 10000) throw ParseError("width out of range", pos_);
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    TermPtr atom() {
        skip_ws();
        std::size_t at = pos_;
        if (eat('(')) {
            TermPtr t = seq();
            expect(')');
            return t;
        }
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string_view word = src_.substr(start, pos_ - start);
        if (word.empty()) throw ParseError("expected a term", at);

        TermPtr t;
        if (word == "mult") t = make_atom(TermKind::Mult);
        else if (word == "unit") t = make_atom(TermKind::Unit);
        else if (word == "comult") t = make_atom(TermKind::Comult);
        else if (word == "counit") t = make_atom(TermKind::Counit);
        else if (word == "cup") t = make_atom(TermKind::Cup);
        else if (word == "vertex") t = make_atom(TermKind::Vertex);
        else if (word == "id") {
            expect('(');
            std::size_t n = number();
            expect(')');
            t = make_atom(TermKind::Id, n);
        } else if (word == "swap") {
            expect('(');
            std::size_t m = number();
            expect(',');
            std::size_t n = number();
            expect(')');
            t = make_atom(TermKind::Swap, m, n);
        } else {
            throw ParseError("unknown atom '" + std::string(word) + "'", at);
        }
        // shared atoms get distinct position info via copy
        auto u = std::make_shared<DiagramTerm>(*t);
        u->pos = at;
        return u;
    }
};

raw::RawGraph atom_graph(const DiagramTerm& t) {
    switch (t.kind) {
        case TermKind::Mult:
            return raw::RawGraph{2, 1, 0, NatMatrix(2, 2), NatMatrix{{1}, {1}},
                                 NatMatrix(2, 0), NatMatrix(0, 1), NatMatrix(0, 0)};
        case TermKind::Unit:
            return raw::RawGraph{0, 1, 0, NatMatrix(0, 0), NatMatrix(0, 1),
                                 NatMatrix(0, 0), NatMatrix(0, 1), NatMatrix(0, 0)};
        case TermKind::Comult:
            return raw::RawGraph{1, 2, 0, NatMatrix(1, 1), NatMatrix{{1, 1}},
                                 NatMatrix(1, 0), NatMatrix(0, 2), NatMatrix(0, 0)};
        case TermKind::Counit:
            return raw::RawGraph{1, 0, 0, NatMatrix(1, 1), NatMatrix(1, 0),
                                 NatMatrix(1, 0), NatMatrix(0, 0), NatMatrix(0, 0)};
        case TermKind::Cup: {
            NatMatrix a(2, 2);
            a.set(0, 1, 1);
            return raw::RawGraph{2, 0, 0, std::move(a), NatMatrix(2, 0),
                                 NatMatrix(2, 0), NatMatrix(0, 0), NatMatrix(0, 0)};
        }
        case TermKind::Vertex:
            return raw::RawGraph{0, 1, 1, NatMatrix(0, 0), NatMatrix(0, 1),
                                 NatMatrix(0, 1), NatMatrix{{1}}, NatMatrix(1, 1)};
        case TermKind::Id:
            return raw::identity(t.nat0);
        case TermKind::Swap:
            return raw::symmetry(t.nat0, t.nat1);
        default:
            throw Error("internal: not an atom");
    }
}

struct TrackedRec {
    OpenGraph graph;
    std::vector<std::size_t> vertex_of_leaf;
};

TrackedRec eval_rec(const DiagramTerm& t, std::size_t perm_bound) {
    if (t.kind == TermKind::Seq || t.kind == TermKind::Par) {
        TrackedRec l = eval_rec(*t.lhs, perm_bound);
        TrackedRec r = eval_rec(*t.rhs, perm_bound);
        raw::RawGraph combined =
            t.kind == TermKind::Seq ? raw::compose(to_raw(l.graph), to_raw(r.graph))
                                    : raw::tensor(to_raw(l.graph), to_raw(r.graph));
        CanonTracked canon = canonicalize_tracked(combined, perm_bound);
        // combined raw order: left operand's vertices, then right's
        std::vector<std::size_t> map;
        map.reserve(l.vertex_of_leaf.size() + r.vertex_of_leaf.size());
        for (std::size_t v : l.vertex_of_leaf) map.push_back(canon.new_of_old[v]);
        std::size_t shift = l.graph.vertices();
        for (std::size_t v : r.vertex_of_leaf) map.push_back(canon.new_of_old[shift + v]);
        return TrackedRec{std::move(canon.graph), std::move(map)};
    }
    CanonTracked canon = canonicalize_tracked(atom_graph(t), perm_bound);
    std::vector<std::size_t> map;
    if (t.kind == TermKind::Vertex) map.push_back(canon.new_of_old[0]);
    return TrackedRec{std::move(canon.graph), std::move(map)};
}

} // namespace

TermPtr parse_term(std::string_view src) { return Parser(src).run(); }

std::string term_to_string(const DiagramTerm& t) {
    switch (t.kind) {
        case TermKind::Mult: return "mult";
        case TermKind::Unit: return "unit";
        case TermKind::Comult: return "comult";
        case TermKind::Counit: return "counit";
        case TermKind::Cup: return "cup";
        case TermKind::Vertex: return "vertex";
        case TermKind::Id: return "id(" + std::to_string(t.nat0) + ")";
        case TermKind::Swap:
            return "swap(" + std::to_string(t.nat0) + "," + std::to_string(t.nat1) + ")";
        case TermKind::Seq:
            return "(" + term_to_string(*t.lhs) + " ; " + term_to_string(*t.rhs) + ")";
        case TermKind::Par:
            return "(" + term_to_string(*t.lhs) + " # " + term_to_string(*t.rhs) + ")";
    }
    throw Error("internal: unknown term kind");
}

std::size_t leaf_count(const DiagramTerm& t) {
    if (t.kind == TermKind::Seq || t.kind == TermKind::Par)
        return leaf_count(*t.lhs) + leaf_count(*t.rhs);
    return t.kind == TermKind::Vertex ? 1 : 0;
}

OpenGraph eval(const DiagramTerm& t, std::size_t perm_bound) {
    return eval_tracked(t, perm_bound).graph;
}

TrackedEval eval_tracked(const DiagramTerm& t, std::size_t perm_bound) {
    TrackedRec r = eval_rec(t, perm_bound);
    return TrackedEval{std::move(r.graph), std::move(r.vertex_of_leaf)};
}

std::span<const AxiomFixture> axiom_fixtures() {
    static const std::array<AxiomFixture, 17> table{{
        {"merge-associative", "(mult # id(1)) ; mult", "(id(1) # mult) ; mult"},
        {"merge-commutative", "swap(1,1) ; mult", "mult"},
        {"merge-unit-left", "(unit # id(1)) ; mult", "id(1)"},
        {"merge-unit-right", "(id(1) # unit) ; mult", "id(1)"},
        {"split-associative", "comult ; (comult # id(1))", "comult ; (id(1) # comult)"},
        {"split-commutative", "comult ; swap(1,1)", "comult"},
        {"split-unit-left", "comult ; (counit # id(1))", "id(1)"},
        {"split-unit-right", "comult ; (id(1) # counit)", "id(1)"},
        {"merge-then-split", "mult ; comult",
         "(comult # comult) ; (id(1) # swap(1,1) # id(1)) ; (mult # mult)"},
        {"merge-then-discard", "mult ; counit", "counit # counit"},
        {"fresh-then-split", "unit ; comult", "unit # unit"},
        {"fresh-then-discard", "unit ; counit", "id(0)"},
        {"edge-symmetric", "swap(1,1) ; cup", "cup"},
        {"edge-after-merge-left", "(mult # id(1)) ; cup",
         "(id(2) # comult) ; (id(1) # swap(1,1) # id(1)) ; (cup # cup)"},
        {"edge-after-merge-right", "(id(1) # mult) ; cup",
         "(comult # id(2)) ; (id(1) # swap(1,1) # id(1)) ; (cup # cup)"},
        {"edge-after-fresh-left", "(unit # id(1)) ; cup", "counit"},
        {"edge-after-fresh-right", "(id(1) # unit) ; cup", "counit"},
    }};
    return table;
}

} // namespace gg
