#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "bvl/boolalg.hpp"
#include "bvl/semantics.hpp"
#include "bvl/syntax.hpp"

namespace bvl::io {

/// Whole file as text; Error(Io) if it cannot be read.
std::string read_file(const std::filesystem::path& path);

/// `builtin:zfc`, `builtin:corpus`, or a language file (`func NAME ARITY` /
/// `rel NAME ARITY` lines) relative to `base`.
Language load_language(std::string_view ref, const std::filesystem::path& base = {});

/// `builtin:powerset:N`, `builtin:sierpinski`, or an algebra file relative to
/// `base`: either the single line `powerset N` or a topology whose regular
/// open algebra is meant.
std::shared_ptr<const boolalg::FinCBA> load_algebra(std::string_view ref,
                                                     const std::filesystem::path& base = {});

/// Reads a structure file and resolves its language and algebra references
/// against the file's directory.
semantics::BStructure load_structure(const std::filesystem::path& path);

}  // namespace bvl::io
