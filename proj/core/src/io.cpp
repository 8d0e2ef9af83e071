#include "bvl/io.hpp"

#include <fstream>
#include <sstream>

#include "bvl/error.hpp"
#include "bvl/proof_corpus.hpp"
#include "bvl/zfc.hpp"
#include "text_util.hpp"

namespace bvl::io {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

fs::path resolve(std::string_view ref, const fs::path& base) {
  fs::path p{std::string(ref)};
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

Language load_language(std::string_view ref, const fs::path& base) {
  if (ref == "builtin:zfc") return zfc::lzfc();
  if (ref == "builtin:corpus") return kernel::corpus_language();
  auto path = resolve(ref, base);
  return Language::from_text(read_file(path), path.stem().string());
}

std::shared_ptr<const boolalg::FinCBA> load_algebra(std::string_view ref, const fs::path& base) {
  using boolalg::FinCBA;
  constexpr std::string_view kPowerset = "builtin:powerset:";
  if (ref.starts_with(kPowerset)) {
    auto n = text_util::to_index(ref.substr(kPowerset.size()), 1);
    return std::make_shared<const FinCBA>(FinCBA::powerset(n));
  }
  if (ref == "builtin:sierpinski") {
    return std::make_shared<const FinCBA>(boolalg::regular_open_algebra(boolalg::FinTopSpace::sierpinski()));
  }
  auto text = read_file(resolve(ref, base));
  for (const auto& line : text_util::lines(text)) {
    auto words = text_util::words(text_util::strip_comment(line));
    if (words.empty()) continue;
    if (words[0] == "powerset") {
      if (words.size() != 2) fail(ErrorCode::Parse, "algebra file: expected 'powerset N'");
      return std::make_shared<const FinCBA>(FinCBA::powerset(text_util::to_index(words[1], 1)));
    }
    break;
  }
  return std::make_shared<const FinCBA>(
      boolalg::regular_open_algebra(boolalg::FinTopSpace::from_text(text)));
}

semantics::BStructure load_structure(const fs::path& path) {
  auto text = read_file(path);
  auto header = semantics::parse_structure_header(text);
  auto base = path.parent_path();
  return semantics::parse_structure(text, load_language(header.language_ref, base),
                                    load_algebra(header.algebra_ref, base));
}

}  // namespace bvl::io
