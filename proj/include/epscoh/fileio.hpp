#pragma once

#include <string>

#include "epscoh/gmodule.hpp"

namespace epscoh {

// JSON text. Algebra: {"grading": {"free_rank", "torsion", "form"},
// "basis": [{"label", "degree"}], "brackets": [{"i", "j", "terms": [{"k", "coeff"}]}]}.
// Module: {"algebra": <algebra>, "basis": [...], "action": [{"a", "entries": [{"row", "col", "coeff"}]}]}.
// Coefficients are "p/q" strings. Parse problems throw ParseError naming the
// field; invariant failures throw ValidationError naming the witness.
std::string algebra_to_text(const EpsLieAlgebra& L);
AlgebraPtr algebra_from_text(const std::string& text);
std::string module_to_text(const GradedModule& V);
// If L is given, the module's "algebra" field (if any) must describe the same algebra.
ModulePtr module_from_text(const std::string& text, const AlgebraPtr& L = nullptr);

AlgebraPtr parse_algebra_file(const std::string& path);
ModulePtr parse_module_file(const std::string& path, const AlgebraPtr& L = nullptr);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace epscoh
