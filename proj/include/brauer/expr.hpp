#pragma once

#include "brauer/unoriented.hpp"

#include <memory>
#include <variant>

namespace brauer {

/// Abstract syntax of the diagram expression language:
///   expr := term { ";" term }          vertical composition, bottom to top
///   term := atom { "@" atom }          horizontal tensor
///   atom := "x" | "cap" | "cup" | "capL" | "capR" | "cupL" | "cupR"
///         | "id(" word ")" | "tok(" algElem ")" | "tokd(" algElem ")"
///         | scalar "*" atom | "(" expr ")"
struct ExprNode {
    enum Kind { Seq, Tensor, Gen, Id, Tok, Scale } kind;
    size_t pos = 0;                       // source position, for diagnostics
    std::string name;                     // generator name / id word / token text
    Scalar scalar;                        // Scale
    std::vector<std::unique_ptr<ExprNode>> children;
};

std::unique_ptr<ExprNode> parseExpr(const std::string& text);

/// Elaborates the tree in the oriented category; throws std::invalid_argument
/// with a position-tagged message on type errors.
OrMorphism elaborateOriented(const ExprNode& ast, const OrCategory& C);

/// Elaborates in the unoriented category.
UnMorphism elaborateUnoriented(const ExprNode& ast, const UnCategory& U);

} // namespace brauer
