#pragma once

#include "emso/error.hpp"
#include "emso/graph.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace emso {

/// Syntax or binding error; `position` is a 0-based byte offset.
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("at offset " + std::to_string(position) + ": " + what), position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class NodeKind : std::uint8_t {
    True,
    False,
    Exists,    // vertex quantifier
    Forall,    // vertex quantifier
    ExistsSet, // monadic second-order quantifier
    Not,
    And,
    Or,
    Implies,
    Iff,
    Adjacent,
    Equal,
    Member,
    Builtin,
};

/// Argument of a builtin: a union of set variables or one vertex variable.
struct BuiltinArg
{
    bool is_vertex = false;
    std::vector<std::size_t> slots;
};

struct Node
{
    NodeKind kind = NodeKind::True;
    /// Quantified slot, or the two vertex slots of an atom (Member: vertex
    /// slot then set slot).
    std::size_t slot = 0;
    std::size_t slot2 = 0;
    std::string name; // variable name for quantifiers, builtin name
    std::vector<std::unique_ptr<Node>> children;
    std::size_t builtin = 0; // index into the builtin registry
    std::vector<BuiltinArg> args;
    std::map<std::string, long> params;
};

struct ParseOptions
{
    /// Set variables left free; values are supplied at evaluation.
    std::vector<std::string> free_sets;
    std::vector<std::string> free_vertices;
};

/// Parsed formula with every variable resolved to a slot.
class Formula
{
public:
    [[nodiscard]] const Node& root() const noexcept { return *root_; }
    [[nodiscard]] std::size_t vertex_slots() const noexcept { return vertex_names_.size(); }
    [[nodiscard]] std::size_t set_slots() const noexcept { return set_names_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
    [[nodiscard]] const std::vector<std::string>& set_names() const noexcept { return set_names_; }
    [[nodiscard]] std::size_t free_set_count() const noexcept { return free_sets_; }
    [[nodiscard]] std::size_t free_vertex_count() const noexcept { return free_vertices_; }
    /// No set quantifiers at all.
    [[nodiscard]] bool is_first_order() const noexcept { return first_order_; }
    /// Every set quantifier sits in the leading existential block.
    [[nodiscard]] bool is_emso() const noexcept { return emso_; }

    /// Canonical fully parenthesised rendering; parses back to an equal tree.
    [[nodiscard]] std::string to_string() const;

private:
    friend class FormulaParser;

    std::unique_ptr<Node> root_;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> set_names_;
    std::size_t free_sets_ = 0;
    std::size_t free_vertices_ = 0;
    bool first_order_ = true;
    bool emso_ = true;
};

[[nodiscard]] Formula parse_formula(std::string_view text, const ParseOptions& options = {});

struct EvalOptions
{
    /// Node visits (including one per builtin call) before BudgetExceeded.
    std::uint64_t max_steps = 1'000'000'000;
    /// Values of the free set and vertex variables, in declaration order.
    std::vector<VertexSet> free_sets;
    std::vector<Vertex> free_vertices;
};

struct EvalStats
{
    std::uint64_t steps = 0;
};

/// Exhaustive model checking: vertex quantifiers range over V(g), set
/// quantifiers over all subsets (requires g.order() <= 62).
[[nodiscard]] bool evaluate(const Graph& g, const Formula& phi, const EvalOptions& options = {},
                            EvalStats* stats = nullptr);

} // namespace emso
