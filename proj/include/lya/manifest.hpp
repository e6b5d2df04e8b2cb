#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lya/deform.hpp"

namespace lya {

// Parsed form of the JSON manifest. Indices are 0-based here and 1-based in
// the file; scalars travel as exact literals ("3/7"). parse applies defaults
// (labels, implied zero tables), so serialize(parse(t)) is a fixed point:
// parsing it again and serializing reproduces the same bytes.

struct AlgebraBlock {
    std::size_t dim = 0;
    std::vector<std::string> labels;  // defaults e1..ed filled at parse
    // either sparse independent entries (i < j, skew filled in) ...
    std::vector<LyAlgebra::BinaryEntry> binary;
    std::vector<LyAlgebra::TernaryEntry> ternary;
    // ... or full tables with nothing enforced, so skew violations reach check
    bool raw = false;
    std::vector<Scalar> binary_raw, ternary_raw;  // sizes d^3, d^4
};

struct LeibnizBlock {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<LeibnizAlgebra::Entry> entries;  // e_i . e_j += c e_k, any i, j
};

struct RepBlock {
    bool adjoint = true;  // the string form "adjoint"
    std::size_t dim = 0;  // explicit operator families otherwise
    std::vector<Matrix> rho, d_ops, theta_ops;
};

struct ActionBlock {
    std::optional<std::size_t> cyclic;            // group given as Z/m ...
    std::vector<std::vector<std::size_t>> table;  // ... or by its table
    std::vector<std::string> labels;              // defaults g1..gm
    std::vector<Matrix> matrices;                 // one d x d matrix per element
};

struct JetTerm {
    std::vector<LyAlgebra::BinaryEntry> even;   // f_n(e_i,e_j) += c e_k, i < j
    std::vector<LyAlgebra::TernaryEntry> odd;   // g_n(e_i,e_j,e_k) += c e_l, i < j
};

struct JetBlock {
    std::vector<JetTerm> terms;  // terms[n-1] = order-n coefficients
};

struct OptionsBlock {
    std::optional<std::size_t> level;               // cohomology level
    std::optional<std::size_t> order;               // jet truncation override
    std::optional<std::vector<std::string>> subgroup;  // element labels
};

struct Manifest {
    Field field = Field::rationals();
    std::optional<AlgebraBlock> algebra;
    std::optional<LeibnizBlock> leibniz;  // alternative bracket source
    std::optional<RepBlock> representation;
    std::optional<ActionBlock> action;
    std::optional<JetBlock> jet, jet2;
    OptionsBlock options;
};

// Strict reader: unknown keys, wrong shapes, bad index ranges and bad scalar
// literals raise ParseError naming the offending path.
Manifest parse_manifest(const std::string& text);

// Canonical form: defaults present, sparse entries merged, sorted and pruned
// of zeros, scalars re-rendered, fixed key order, two-space indentation.
std::string serialize_manifest(const Manifest& m);

// Builders used by the commands; none of them runs a checker, except that the
// Leibniz route must verify its identity to define the brackets at all.
LyAlgebra manifest_algebra(const Manifest& m);  // UnsupportedConfig if no source block
Representation manifest_representation(const Manifest& m, const LyAlgebra& a);
GroupAction manifest_action(const Manifest& m, const LyAlgebra& a);
// order override pads with zero terms or truncates
DeformationJet manifest_jet(const JetBlock& b, const Representation& adj,
                            std::optional<std::size_t> order);
// labels resolved against the action block; empty request means every element
std::vector<std::size_t> manifest_subgroup(const Manifest& m);

}  // namespace lya
